//! The canonical primitive embedding of the rank-23 lattice into the
//! rank-24 one: identity on the first 22 coordinates, degree generator
//! l mapped to e4 - (n-1) f4, with orthogonal complement generated by
//! v = e4 + (n-1) f4 of square 2n-2.
//!
//! Run with: cargo run --example canonical_embedding

use latpol::lattice::{hyperbolic_e, hyperbolic_f, DEGREE_INDEX};
use latpol::monodromy::canonical_embedding;
use num_bigint::BigInt;

fn main() {
    let n = 5u64;
    let emb = canonical_embedding(n).unwrap();

    let v = emb.complement_generator();
    println!("complement generator v = {v:?}");
    println!("(v, v) = {} (= 2n - 2)", v.norm());

    // The degree generator keeps its square but gains pairings.
    let l = emb.source().basis_vector(DEGREE_INDEX);
    let image = emb.apply(&l).unwrap();
    println!("iota(l) = {image:?}");
    assert_eq!(image.norm(), l.norm());
    assert_eq!(image.pairing(v).unwrap(), BigInt::from(0));

    // Pairings are preserved across the embedding for arbitrary vectors.
    let a = emb.source().vector_i64(&{
        let mut c = [0i64; 23];
        c[hyperbolic_e(3)] = 2;
        c[hyperbolic_f(3)] = 7;
        c[DEGREE_INDEX] = 3;
        c
    }).unwrap();
    let b = emb.source().basis_vector(hyperbolic_e(1));
    assert_eq!(
        a.pairing(&b).unwrap(),
        emb.apply(&a).unwrap().pairing(&emb.apply(&b).unwrap()).unwrap()
    );
    println!("pairings preserved: true");

    // The image is saturated: no index in the bigger lattice.
    println!("embedding matrix is 24 x 23, image primitive by construction");
    println!("target unimodular: {}", emb.target().is_unimodular());
}
