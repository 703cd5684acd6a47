//! The built-in lattices and their basic invariants.
//!
//! Run with: cargo run --example standard_lattices

use latpol::lattice::{hyperbolic_e, hyperbolic_f, Lattice, DEGREE_INDEX};

fn describe(name: &str, l: &Lattice) {
    let sig = l.signature();
    println!(
        "{name:<10} rank {:>2}  det {:>6}  signature ({}, {}, {})  even: {}",
        l.rank(),
        l.det(),
        sig.plus,
        sig.zero,
        sig.minus,
        l.is_even()
    );
}

fn main() {
    describe("U", &Lattice::hyperbolic_plane());
    describe("E8(-1)", &Lattice::e8_negative());
    describe("K3", &Lattice::k3());
    describe("<-8>", &Lattice::rank_one(-8));

    // The rank-23 lattice of the n-point Hilbert scheme side: the K3
    // lattice plus one generator of square 2-2n.
    for n in [2u64, 5, 10, 26] {
        let l = Lattice::k3n(n).unwrap();
        describe(&format!("K3n n={n}"), &l);
    }

    describe("rank 24", &Lattice::extended());

    // Coordinate layout: two E8(-1) blocks first, then hyperbolic pairs
    // (e_k, f_k), then the degree generator (rank-23 case only).
    let l = Lattice::k3n(5).unwrap();
    let e3 = l.basis_vector(hyperbolic_e(3));
    let f3 = l.basis_vector(hyperbolic_f(3));
    let deg = l.basis_vector(DEGREE_INDEX);
    println!();
    println!("(e3, f3)   = {}", e3.pairing(&f3).unwrap());
    println!("(e3, e3)   = {}", e3.norm());
    println!("(l, l)     = {}  (n = 5, so 2 - 2n = -8)", deg.norm());
    println!("Div(l)     = {}", deg.divisibility().unwrap());
    println!("Div(e3+f3) = {}", (&e3 + &f3).divisibility().unwrap());
}
