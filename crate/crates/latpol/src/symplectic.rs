//! Symplectic normal form of a nondegenerate integer alternating form and
//! the polarization type it carries: the unique positive chain
//! `d1 | d2 | ... | dn` with a basis in which the form becomes
//! `[[0, D], [-D, 0]]`, `D = diag(d1, ..., dn)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMat;
use crate::normal_form::elementary_divisors;

/// A polarization type: positive integers `d1 | d2 | ... | dn`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolarizationType {
    chain: Vec<BigInt>,
}

impl PolarizationType {
    /// Validates positivity and the divisor chain.
    pub fn new(chain: Vec<BigInt>) -> Result<PolarizationType> {
        if chain.is_empty() {
            return Err(Error::InvalidParameter("empty polarization type".into()));
        }
        for d in &chain {
            if !d.is_positive() {
                return Err(Error::InvalidParameter(
                    "polarization type entries must be positive".into(),
                ));
            }
        }
        for w in chain.windows(2) {
            if !w[1].mod_floor(&w[0]).is_zero() {
                return Err(Error::InvalidParameter(
                    "polarization type must form a divisor chain".into(),
                ));
            }
        }
        Ok(PolarizationType { chain })
    }

    /// The principal type `(1, 1, ..., 1)` of length `n`.
    pub fn principal(n: usize) -> PolarizationType {
        PolarizationType {
            chain: vec![BigInt::one(); n],
        }
    }

    pub fn chain(&self) -> &[BigInt] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.chain.iter().all(|d| d.is_one())
    }
}

impl std::fmt::Debug for PolarizationType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cs: Vec<String> = self.chain.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", cs.join(","))
    }
}

/// Result of the symplectic reduction: the polarization type together with
/// the unimodular change of basis that exhibits it, satisfying
/// `transform^T * A * transform = [[0, D], [-D, 0]]`.
pub struct SymplecticBasis {
    pub ptype: PolarizationType,
    pub transform: IntMat,
}

impl SymplecticBasis {
    /// The block form `[[0, D], [-D, 0]]` this basis produces.
    pub fn block_form(&self) -> IntMat {
        block_form_of(self.ptype.chain())
    }
}

fn block_form_of(chain: &[BigInt]) -> IntMat {
    let n = chain.len();
    let mut m = IntMat::zero(2 * n, 2 * n);
    for (i, d) in chain.iter().enumerate() {
        m.set(i, n + i, d.clone());
        m.set(n + i, i, -d);
    }
    m
}

/// Finds the unused off-diagonal entry of minimal absolute value,
/// row-major tie-break. Returns `(i, j)` with `a[i][j] != 0`.
fn min_abs_free(a: &IntMat, used: &[bool]) -> Option<(usize, usize)> {
    let n = a.rows();
    let mut best: Option<(usize, usize)> = None;
    for i in 0..n {
        if used[i] {
            continue;
        }
        for j in 0..n {
            if used[j] || i == j || a.get(i, j).is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= a.get(i, j).abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Brings a nondegenerate alternating form to the normal form
/// `[[0, D], [-D, 0]]` by congruence, splitting off one hyperbolic pair at
/// a time. Errors: `NotSquare`/`NotAlternating` for malformed input,
/// `OddDimension` and `SingularForm` when no symplectic basis can exist.
pub fn symplectic_normal_form(a: &IntMat) -> Result<SymplecticBasis> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    if !a.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let dim = a.rows();
    if dim == 0 || dim % 2 != 0 {
        return Err(Error::OddDimension(dim));
    }
    if a.det().expect("square").is_zero() {
        return Err(Error::SingularForm);
    }

    let n = dim / 2;
    let mut w = a.clone();
    let mut t = IntMat::identity(dim); // invariant: w = t^T * a * t
    let mut used = vec![false; dim];
    let mut pairs: Vec<(usize, usize, BigInt)> = Vec::with_capacity(n);

    // Every basis change below is a congruence: a column operation on w
    // paired with the same row operation, mirrored as a column operation
    // on t.
    let add_basis = |w: &mut IntMat, t: &mut IntMat, dst: usize, src: usize, c: &BigInt| {
        w.add_col_multiple(dst, src, c);
        w.add_row_multiple(dst, src, c);
        t.add_col_multiple(dst, src, c);
    };

    for _ in 0..n {
        let (pi, pj, pivot) = loop {
            let Some((i, j)) = min_abs_free(&w, &used) else {
                // A nondegenerate form restricted to the complement of the
                // split-off hyperbolic pairs stays nondegenerate.
                return Err(Error::SelfCheck(
                    "alternating reduction ran out of pivots".into(),
                ));
            };

            // Make w[i][j] divide every other entry in rows i and j of the
            // unused block; truncating division leaves remainders smaller
            // than the pivot, so this loop terminates.
            let mut dirty = false;
            for k in 0..dim {
                if used[k] || k == i || k == j {
                    continue;
                }
                if !w.get(i, k).is_zero() {
                    let q = -(w.get(i, k) / w.get(i, j));
                    add_basis(&mut w, &mut t, k, j, &q);
                    if !w.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
                if !w.get(j, k).is_zero() {
                    // w[j][i] = -w[i][j]; clear row j against column i.
                    let q = -(w.get(j, k) / w.get(j, i));
                    add_basis(&mut w, &mut t, k, i, &q);
                    if !w.get(j, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }

            // Divisor chain: the pivot must divide the rest of the unused
            // block. If not, fold the offending row into row i and retry;
            // the new entries force a strictly smaller pivot.
            let violator = (0..dim)
                .filter(|&p| !used[p] && p != i && p != j)
                .flat_map(|p| {
                    (0..dim)
                        .filter(move |&q| q != p)
                        .filter(|&q| !used[q] && q != i && q != j)
                        .map(move |q| (p, q))
                })
                .find(|&(p, q)| !w.get(p, q).mod_floor(w.get(i, j)).is_zero());
            match violator {
                Some((p, _)) => {
                    add_basis(&mut w, &mut t, i, p, &BigInt::one());
                }
                None => {
                    let piv = w.get(i, j).clone();
                    break if piv.is_positive() {
                        (i, j, piv)
                    } else {
                        (j, i, -piv)
                    };
                }
            }
        };
        used[pi] = true;
        used[pj] = true;
        pairs.push((pi, pj, pivot));
    }

    // Reorder to (u_1 ... u_n, w_1 ... w_n): basis vectors are columns of
    // t, so compose with the permutation sending slot k to pair order.
    let mut perm = IntMat::zero(dim, dim);
    for (k, (i, j, _)) in pairs.iter().enumerate() {
        perm.set(*i, k, BigInt::one());
        perm.set(*j, n + k, BigInt::one());
    }
    let transform = t.mul(&perm);
    let chain: Vec<BigInt> = pairs.iter().map(|(_, _, d)| d.clone()).collect();

    // Self-checks: the witness must reproduce the block form exactly, and
    // the multipliers must form a divisor chain.
    let ptype = PolarizationType::new(chain)
        .map_err(|_| Error::SelfCheck("reduction multipliers violate the divisor chain".into()))?;
    let expected = block_form_of(ptype.chain());
    if transform.transpose().mul(a).mul(&transform) != expected {
        return Err(Error::SelfCheck(
            "symplectic basis does not reproduce the block form".into(),
        ));
    }
    if !transform.is_unimodular() {
        return Err(Error::SelfCheck("symplectic transform not unimodular".into()));
    }
    Ok(SymplecticBasis { ptype, transform })
}

/// Polarization type of a nondegenerate alternating form, cross-checked
/// against the Smith normal form: the elementary divisors of such a form
/// pair up as `(d1, d1, d2, d2, ...)`. A mismatch between the two routes
/// is an internal error, never silently resolved.
pub fn polarization_type(a: &IntMat) -> Result<PolarizationType> {
    let basis = symplectic_normal_form(a)?;
    let divisors = elementary_divisors(a);
    let mut paired = Vec::with_capacity(divisors.len());
    for d in basis.ptype.chain() {
        paired.push(d.clone());
        paired.push(d.clone());
    }
    if divisors != paired {
        return Err(Error::SelfCheck(format!(
            "symplectic multipliers {:?} disagree with elementary divisors {:?}",
            basis.ptype, divisors
        )));
    }
    Ok(basis.ptype)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_i64_rows(rows)
    }

    #[test]
    fn standard_block_is_fixed_by_reduction() {
        let a = m(&[&[0, 2], &[-2, 0]]);
        let sb = symplectic_normal_form(&a).unwrap();
        assert_eq!(sb.ptype.chain(), &[BigInt::from(2)]);
        assert_eq!(sb.transform.transpose().mul(&a).mul(&sb.transform), a);
    }

    #[test]
    fn type_one_two() {
        // Two hyperbolic pairs with multipliers 1 and 2, interleaved.
        let a = m(&[
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, 2],
            &[0, 0, -2, 0],
        ]);
        let t = polarization_type(&a).unwrap();
        assert_eq!(t.chain(), &[BigInt::one(), BigInt::from(2)]);
        assert!(!t.is_principal());
    }

    #[test]
    fn conjugation_does_not_change_type() {
        let a = m(&[
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, 3],
            &[0, 0, -3, 0],
        ]);
        // Conjugate by a unimodular shear mixing everything.
        let mut g = IntMat::identity(4);
        g.add_row_multiple(0, 2, &BigInt::from(5));
        g.add_row_multiple(3, 1, &BigInt::from(-2));
        g.add_row_multiple(1, 0, &BigInt::from(7));
        let b = g.transpose().mul(&a).mul(&g);
        let t = polarization_type(&b).unwrap();
        assert_eq!(t.chain(), &[BigInt::one(), BigInt::from(3)]);
    }

    #[test]
    fn malformed_inputs_are_classified() {
        assert!(matches!(
            symplectic_normal_form(&m(&[&[0, 1], &[1, 0]])),
            Err(Error::NotAlternating)
        ));
        assert!(matches!(
            symplectic_normal_form(&m(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])),
            Err(Error::OddDimension(3))
        ));
        let singular = m(&[
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 2],
            &[0, 0, -2, 0],
        ]);
        assert!(matches!(
            symplectic_normal_form(&singular),
            Err(Error::SingularForm)
        ));
        assert!(matches!(
            symplectic_normal_form(&m(&[&[0, 1], &[-1, 0], &[0, 0]])),
            Err(Error::NotSquare)
        ));
    }

    #[test]
    fn principal_type_detection() {
        let t = PolarizationType::principal(4);
        assert!(t.is_principal());
        assert_eq!(t.len(), 4);
        assert!(PolarizationType::new(vec![BigInt::from(2), BigInt::from(3)]).is_err());
        assert!(PolarizationType::new(vec![BigInt::zero()]).is_err());
    }

    #[test]
    fn dense_alternating_form_reduces() {
        // A dense alternating matrix with no visible block structure.
        let a = m(&[
            &[0, 2, 4, 2],
            &[-2, 0, 6, 2],
            &[-4, -6, 0, 2],
            &[-2, -2, -2, 0],
        ]);
        let sb = symplectic_normal_form(&a).unwrap();
        assert_eq!(
            sb.transform.transpose().mul(&a).mul(&sb.transform),
            sb.block_form()
        );
        let t = polarization_type(&a).unwrap();
        assert_eq!(t.chain(), sb.ptype.chain());
        // Pfaffian check: product of the multipliers squared equals det.
        let prod: BigInt = t.chain().iter().product();
        assert_eq!(&prod * &prod, a.det().unwrap());
    }
}
