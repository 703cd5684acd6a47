//! Period points over a lattice: membership test, the integral
//! (1,1)-lattice, and the positive-cone machinery in signature (1, k).
//!
//! Run with: cargo run --example periods

use latpol::lattice::Lattice;
use latpol::periods::{
    isotropic_positive_pairing_check, same_positive_component, PeriodPoint,
};

fn main() {
    // x + iy spans a period plane in U^3: equal positive squares,
    // orthogonal components.
    let u3 = Lattice::hyperbolic_plane()
        .direct_sum(&Lattice::hyperbolic_plane())
        .direct_sum(&Lattice::hyperbolic_plane());
    let x = u3.vector_i64(&[1, 1, 0, 0, 0, 0]).unwrap();
    let y = u3.vector_i64(&[0, 0, 1, 1, 0, 0]).unwrap();
    let p = PeriodPoint::from_vectors(&x, &y).unwrap();
    println!("period point: {}", p.is_period_point().unwrap());

    // The (1,1)-lattice: all integral classes pairing to zero with the
    // period. Rank drops by exactly 2.
    let one_one = p.one_one_lattice().unwrap();
    println!("(1,1)-lattice rank: {}", one_one.len());
    for v in &one_one {
        println!("  {v:?}");
    }

    let e3 = u3.vector_i64(&[0, 0, 0, 0, 1, 0]).unwrap();
    let e1 = u3.vector_i64(&[1, 0, 0, 0, 0, 0]).unwrap();
    println!("e3 of type (1,1): {}", p.pairs_to_zero(&e3).unwrap());
    println!("e1 of type (1,1): {}", p.pairs_to_zero(&e1).unwrap());

    // Signature (1, k): the positive cone has two components, and a
    // positive class never pairs to zero with a nonzero isotropic one.
    let l = Lattice::hyperbolic_plane().direct_sum(&Lattice::rank_one(-8));
    let sig = l.signature();
    println!();
    println!("U + <-8>: signature ({}, {}, {})", sig.plus, sig.zero, sig.minus);

    let pos = l.vector_i64(&[1, 1, 0]).unwrap().to_rational();
    let neg = l.vector_i64(&[-1, -1, 0]).unwrap().to_rational();
    println!(
        "same component (x, x): {}",
        same_positive_component(&l, &pos, &pos).unwrap()
    );
    println!(
        "same component (x, -x): {}",
        same_positive_component(&l, &pos, &neg).unwrap()
    );

    // lambda = 2e + 2f + l is isotropic: sign of its pairing with a
    // positive class locates lambda relative to the component of x.
    let lambda = l.vector_i64(&[2, 2, 1]).unwrap();
    println!("(lambda, lambda) = {}", lambda.norm());
    let sign = isotropic_positive_pairing_check(&l, &pos, &lambda).unwrap();
    println!("sign of (x, lambda): {sign:+}");
    let sign = isotropic_positive_pairing_check(&l, &pos, &-&lambda).unwrap();
    println!("sign of (x, -lambda): {sign:+}");
}
