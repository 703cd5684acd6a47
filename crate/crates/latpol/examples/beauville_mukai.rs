//! From an invariant (n, d, b) to a verified Mukai vector: the curve
//! class beta, v = (0, d*beta, s), the fiber class alpha = (0, 0, 1),
//! and every property the construction promises.
//!
//! Run with: cargo run --example beauville_mukai

use latpol::lattice::Lattice;
use latpol::monodromy::{alpha_invariant, beauville_mukai_vector, canonical_invariant, div_in_sublattice};
use latpol::mukai::MukaiVector;
use num_bigint::BigInt;

fn main() {
    let (n, d, b) = (10u64, 3u64, 2i64);
    let w = beauville_mukai_vector(n, d, b).unwrap();

    println!("n = {n}, d = {d}, b = {b}  ->  s = {} (inverse of b mod d)", w.s);
    println!("beta (square {}): {:?}", w.beta.norm(), w.beta);
    println!("v     = {:?}", w.v);
    println!("alpha = {:?}", w.alpha);
    println!("(v, v) = {}   moduli dimension = {}", w.vv, w.moduli_dimension);
    println!("(alpha, v) = {}", w.alpha.pairing(&w.v));

    // Div(alpha) is 1 in the full rank-24 lattice but d inside v-perp —
    // that distinction is the whole point of the fiber class.
    let ext = Lattice::extended();
    let alpha_ext = w.alpha.to_extended();
    println!("Div(alpha) ambient     = {}", alpha_ext.divisibility().unwrap());
    let perp = ext.orthogonal_complement(&[w.v.to_extended()]).unwrap();
    let div = div_in_sublattice(&ext, &perp, &alpha_ext).unwrap();
    println!("Div(alpha) inside v-perp = {div} (= d)");
    assert_eq!(div, BigInt::from(d));

    // Round trip: the invariant recovered from the fiber class is the
    // one we started with.
    assert_eq!(
        alpha_invariant(&w).unwrap(),
        canonical_invariant(n, d, b).unwrap()
    );
    println!("fiber-class invariant matches canonical_invariant({n}, {d}, {b})");

    // Mukai vectors of sheaves: v(F) = (rk, c1, c1^2/2 - c2 + rk).
    let k3 = Lattice::k3();
    let c1 = k3.zero_vector();
    let sheaf = MukaiVector::of_sheaf(BigInt::from(2), c1, BigInt::from(4)).unwrap();
    println!();
    println!("v(rank 2, c1 = 0, c2 = 4) = {sheaf:?}, (v,v) = {}", sheaf.norm());
    println!("moduli dimension = {}", sheaf.moduli_dimension().unwrap());
}
