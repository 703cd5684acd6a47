//! Smith and Hermite normal forms with certified witnesses, integer
//! kernels, and sublattice saturation.
//!
//! Run with: cargo run --example normal_forms

use latpol::matrix::IntMat;
use latpol::normal_form::{
    hermite_normal_form, integer_kernel, is_saturated, saturate_rows, smith_normal_form,
};

fn main() {
    let m = IntMat::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
    println!("m =\n{m}");

    let snf = smith_normal_form(&m);
    println!("smith form s =\n{}", snf.s);
    // u and v are unimodular and u*m*v = s exactly.
    assert!(snf.u.is_unimodular() && snf.v.is_unimodular());
    assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s);
    println!("u =\n{}", snf.u);
    println!("v =\n{}", snf.v);

    let hnf = hermite_normal_form(&m);
    assert_eq!(hnf.u.mul(&m), hnf.h);
    println!("hermite form h =\n{}", hnf.h);

    // Integer kernel: all integral solutions of m x = 0.
    let singular = IntMat::from_i64_rows(&[&[2, 4, 6], &[1, 2, 3]]);
    let kernel = integer_kernel(&singular);
    println!("kernel of [[2,4,6],[1,2,3]]:");
    for row in &kernel {
        let as_str: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("  ({})", as_str.join(", "));
    }

    // Saturation: the sublattice spanned by (2,0,2) and (0,4,4) is not
    // saturated: (1,0,1) and (0,1,1) are rational combinations with
    // integer coordinates. saturate_rows recovers the maximal sublattice
    // of the same rank.
    let basis = IntMat::from_i64_rows(&[&[2, 0, 2], &[0, 4, 4]]);
    println!("input saturated: {}", is_saturated(&basis).unwrap());
    let sat = saturate_rows(&basis).unwrap();
    println!("saturation =\n{sat}");
    assert!(is_saturated(&sat).unwrap());
}
