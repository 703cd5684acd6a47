//! Integer-matrix normal forms: Smith, Hermite, integer kernels and
//! saturation of row spans. Everything is computed by exact unimodular
//! row/column operations with the transformations tracked, so every result
//! ships with a machine-checkable witness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMat;

/// Smith data for `m`: unimodular `u`, `v` with `u * m * v = s`,
/// `s` diagonal with nonnegative entries `d1 | d2 | ...` (zeros last).
pub struct SmithNormalForm {
    pub s: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

/// Hermite data for `m`: unimodular `u` with `u * m = h`, `h` in row-style
/// Hermite form (row echelon, positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, zero rows last).
pub struct HermiteNormalForm {
    pub h: IntMat,
    pub u: IntMat,
}

/// Finds the entry of smallest nonzero absolute value in the submatrix
/// `i >= k0, j >= k0`; ties broken row-major (first encountered wins).
fn min_abs_pivot(m: &IntMat, k0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k0..m.rows() {
        for j in k0..m.cols() {
            let e = m.get(i, j);
            if e.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.get(bi, bj).abs() <= e.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form by pivoting on the entry of smallest absolute value.
/// Every row operation on `s` is mirrored on `u`, every column operation on
/// `v`, so `u * m * v = s` holds throughout.
pub fn smith_normal_form(m: &IntMat) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_abs_pivot(&s, k) else {
                break; // remaining submatrix is zero
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // Clear column k below the pivot and row k to its right with
            // truncating division; leftover remainders are strictly smaller
            // than the pivot, so re-pivoting terminates.
            let mut dirty = false;
            for i in k + 1..rows {
                if s.get(i, k).is_zero() {
                    continue;
                }
                let q = -(s.get(i, k) / s.get(k, k));
                s.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !s.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if s.get(k, j).is_zero() {
                    continue;
                }
                let q = -(s.get(k, j) / s.get(k, k));
                s.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !s.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // Pivot must divide every entry of the remaining submatrix;
            // pull a violating row up and restart so the divisor chain holds.
            let violator = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s.get(i, j).mod_floor(s.get(k, k)).is_zero());
            match violator {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
    }

    for k in 0..rows.min(cols) {
        if s.get(k, k).is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithNormalForm { s, u, v }
}

/// Returns the diagonal of the Smith form (length `min(rows, cols)`).
pub fn elementary_divisors(m: &IntMat) -> Vec<BigInt> {
    let snf = smith_normal_form(m);
    (0..m.rows().min(m.cols()))
        .map(|k| snf.s.get(k, k).clone())
        .collect()
}

/// Row-style Hermite normal form: gcd-eliminate below each pivot, make the
/// pivot positive, then reduce the entries above it into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMat) -> HermiteNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMat::identity(rows);
    let mut r = 0usize;

    for j in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !h.get(i, j).is_zero())
                .min_by_key(|&i| h.get(i, j).abs());
            let Some(pi) = pivot else {
                break;
            };
            h.swap_rows(r, pi);
            u.swap_rows(r, pi);
            let mut done = true;
            for i in r + 1..rows {
                if h.get(i, j).is_zero() {
                    continue;
                }
                let q = -(h.get(i, j) / h.get(r, j));
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h.get(i, j).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, j).is_zero() {
            continue; // no pivot in this column
        }
        if h.get(r, j).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h.get(i, j).div_floor(h.get(r, j));
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    HermiteNormalForm { h, u }
}

/// Number of nonzero rows of the Hermite form = rank over the rationals.
pub fn rank(m: &IntMat) -> usize {
    let h = hermite_normal_form(m).h;
    (0..h.rows())
        .filter(|&i| (0..h.cols()).any(|j| !h.get(i, j).is_zero()))
        .count()
}

/// Basis of `{ x : m * x = 0, x integral }`, returned as rows in Hermite
/// normal form. The kernel of an integer matrix is automatically saturated,
/// so this basis generates all integral solutions.
///
/// Computed from `u * m^T = h`: the rows of `u` facing zero rows of `h` are
/// exactly the integral left-kernel of `m^T`, i.e. the kernel of `m`.
pub fn integer_kernel(m: &IntMat) -> Vec<Vec<BigInt>> {
    if m.rows() == 0 {
        // Kernel of an empty system is everything.
        return IntMat::identity(m.cols()).to_rows();
    }
    let t = m.transpose();
    let HermiteNormalForm { h, u } = hermite_normal_form(&t);
    let basis: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| (0..h.cols()).all(|j| h.get(i, j).is_zero()))
        .map(|i| u.row(i))
        .collect();
    if basis.is_empty() {
        return vec![];
    }
    let b = IntMat::from_rows(basis).expect("kernel rows share length");
    hermite_normal_form(&b).h.to_rows()
}

/// Saturation of the row span of `basis` inside the ambient standard
/// lattice: the largest sublattice with the same rational span. Requires
/// the rows to be linearly independent. The result is the Hermite-canonical
/// basis of `(Q-span of rows) ∩ Z^n`, obtained as the kernel of the kernel.
pub fn saturate_rows(basis: &IntMat) -> Result<IntMat> {
    if rank(basis) != basis.rows() {
        return Err(Error::DependentInput);
    }
    let perp = integer_kernel(basis);
    let sat = if perp.is_empty() {
        IntMat::identity(basis.cols()).to_rows()
    } else {
        integer_kernel(&IntMat::from_rows(perp).expect("kernel rows share length"))
    };
    let out = IntMat::from_rows(sat).expect("saturation rows share length");
    debug_assert_eq!(out.rows(), basis.rows());
    Ok(out)
}

/// True when the rows of `basis` already generate a saturated sublattice.
pub fn is_saturated(basis: &IntMat) -> Result<bool> {
    let sat = saturate_rows(basis)?;
    Ok(hermite_normal_form(basis).h.to_rows()[..basis.rows()] == sat.to_rows()[..])
}
