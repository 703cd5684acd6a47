//! Polarization types: reduce an alternating integer form to its
//! symplectic normal form [[0, D], [-D, 0]] and read off the divisor
//! chain (d1 | d2 | ... | dn).
//!
//! Run with: cargo run --example polarization_type

use latpol::matrix::IntMat;
use latpol::symplectic::{polarization_type, symplectic_normal_form, PolarizationType};

fn main() {
    // A dense alternating form of rank 4.
    let a = IntMat::from_i64_rows(&[
        &[0, 2, 4, -2],
        &[-2, 0, 6, 2],
        &[-4, -6, 0, 2],
        &[2, -2, -2, 0],
    ]);
    println!("a =\n{a}");

    let basis = symplectic_normal_form(&a).unwrap();
    println!("type: {:?}", basis.ptype);
    println!("change of basis t =\n{}", basis.transform);

    // t is unimodular and t^T a t is the block normal form.
    let conj = basis.transform.transpose().mul(&a).mul(&basis.transform);
    assert_eq!(conj, basis.block_form());
    println!("t^T a t =\n{conj}");

    // The principal type is the chain (1, ..., 1) — the case the
    // principality certificate is after.
    let principal = polarization_type(&IntMat::from_i64_rows(&[
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
        &[-1, 0, 0, 0],
        &[0, -1, 0, 0],
    ]))
    .unwrap();
    assert!(principal.is_principal());
    assert_eq!(principal, PolarizationType::principal(2));
    println!("standard 4x4 form: {principal:?} (principal)");

    // Degenerate forms are rejected rather than silently truncated.
    let singular = IntMat::from_i64_rows(&[&[0, 0], &[0, 0]]);
    println!("singular form: {:?}", polarization_type(&singular).err());
}
