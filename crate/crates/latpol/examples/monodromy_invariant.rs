//! The discrete invariant (n, d, b*) of a primitive isotropic class:
//! divisibility, the saturated rank-2 witness, canonicalization, and the
//! brute-force isometry cross-check.
//!
//! Run with: cargo run --example monodromy_invariant

use latpol::lattice::{hyperbolic_e, hyperbolic_f, Lattice, DEGREE_INDEX};
use latpol::monodromy::{
    admissible_divisors, canonical_invariant, enumerate_invariant_set, h_lambda,
    isometry_orbit_oracle,
};
use num_bigint::BigInt;

fn main() {
    // lambda = 2 e3 + 2 f3 + l in the rank-23 lattice for n = 5:
    // isotropic, primitive, divisibility 2.
    let n = 5u64;
    let l = Lattice::k3n(n).unwrap();
    let mut coords = vec![BigInt::from(0); 23];
    coords[hyperbolic_e(3)] = BigInt::from(2);
    coords[hyperbolic_f(3)] = BigInt::from(2);
    coords[DEGREE_INDEX] = BigInt::from(1);
    let lambda = l.vector(coords).unwrap();

    println!("(lambda, lambda) = {}", lambda.norm());
    println!("primitive: {}", lambda.is_primitive());
    println!("Div(lambda) = {}", lambda.divisibility().unwrap());

    let inv = h_lambda(n, &lambda).unwrap();
    println!("invariant: (n, d, b*) = ({}, {}, {})", inv.class.n, inv.class.d, inv.class.b_star);
    println!("residue before folding: b = {}", inv.b);
    // The saturation H(lambda) in the rank-24 lattice carries the
    // degenerate form ((2n-2)/d^2) [[1,0],[0,0]].
    println!("witness Gram =\n{}", inv.gram_h);
    for w in &inv.witness_basis {
        println!("  basis vector {w:?}");
    }

    // b and -b give isometric pairs, nothing else does; the orbit search
    // tries all isometries of the degenerate form up to a shear bound.
    println!();
    for (b1, b2) in [(1i64, 3), (1, 2)] {
        let same = canonical_invariant(26, 5, b1).unwrap() == canonical_invariant(26, 5, b2).unwrap();
        let oracle = isometry_orbit_oracle(26, 5, b1, b2, 10).unwrap();
        println!("d=5: residues {b1} and {b2}: canonical {same}, orbit search {oracle}");
        assert_eq!(same, oracle);
    }

    // All classes for a few n: d must satisfy d^2 | n-1, b* runs over
    // folded residues coprime to d.
    println!();
    for n in [5u64, 17, 26, 37] {
        print!("n = {n:>2}: d in {:?};", admissible_divisors(n).unwrap());
        for d in admissible_divisors(n).unwrap() {
            for class in enumerate_invariant_set(n, d).unwrap() {
                print!(" ({}, {}, {})", class.n, class.d, class.b_star);
            }
        }
        println!();
    }
}
