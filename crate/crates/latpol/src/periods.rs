//! Period points with rational coordinates: membership in the period
//! domain, the integral (1,1)-lattice of a period, and exact
//! positive-cone bookkeeping in hyperbolic-signature lattices.
//!
//! A period is stored as the real and imaginary part `x + iy` of a ray in
//! the complexified lattice. The period-domain conditions
//! `(p, p) = 0, (p, pbar) > 0` translate to `(x,x) = (y,y)`, `(x,y) = 0`
//! and `(x,x) + (y,y) > 0`, which are decided exactly over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};
use crate::matrix::IntMat;
use crate::normal_form::integer_kernel;

/// A candidate period point `x + iy` in a fixed lattice, exact rational
/// coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct PeriodPoint {
    lattice: Lattice,
    x: Vec<BigRational>,
    y: Vec<BigRational>,
}

impl PeriodPoint {
    pub fn new(lattice: Lattice, x: Vec<BigRational>, y: Vec<BigRational>) -> Result<PeriodPoint> {
        if x.len() != lattice.rank() {
            return Err(Error::DimensionMismatch {
                expected: lattice.rank(),
                found: x.len(),
            });
        }
        if y.len() != lattice.rank() {
            return Err(Error::DimensionMismatch {
                expected: lattice.rank(),
                found: y.len(),
            });
        }
        if x.iter().all(|c| c.is_zero()) && y.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidParameter("zero period point".into()));
        }
        Ok(PeriodPoint { lattice, x, y })
    }

    /// Convenience constructor from two lattice vectors.
    pub fn from_vectors(x: &LatticeVector, y: &LatticeVector) -> Result<PeriodPoint> {
        if x.lattice() != y.lattice() {
            return Err(Error::LatticeMismatch);
        }
        PeriodPoint::new(x.lattice().clone(), x.to_rational(), y.to_rational())
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn x(&self) -> &[BigRational] {
        &self.x
    }

    pub fn y(&self) -> &[BigRational] {
        &self.y
    }

    /// The two defining conditions of the period domain:
    /// `(x,x) = (y,y)` and `(x,y) = 0` (so `(p,p) = 0` for `p = x+iy`),
    /// plus positivity `(x,x) + (y,y) > 0` (i.e. `(p, pbar) > 0`).
    pub fn is_period_point(&self) -> Result<bool> {
        let xx = self.lattice.pairing_rational(&self.x, &self.x)?;
        let yy = self.lattice.pairing_rational(&self.y, &self.y)?;
        let xy = self.lattice.pairing_rational(&self.x, &self.y)?;
        Ok(xx == yy && xy.is_zero() && (xx + yy).is_positive())
    }

    /// Whether the integral class `v` pairs to zero with the period,
    /// i.e. `v` is of type (1,1) for it. Errors when `self` fails the
    /// period conditions or lives in a different lattice.
    pub fn pairs_to_zero(&self, v: &LatticeVector) -> Result<bool> {
        if !self.is_period_point()? {
            return Err(Error::ConstraintViolated(
                "not a period point; (1,1) membership is undefined".into(),
            ));
        }
        if v.lattice() != &self.lattice {
            return Err(Error::LatticeMismatch);
        }
        let vr = v.to_rational();
        let xv = self.lattice.pairing_rational(&self.x, &vr)?;
        let yv = self.lattice.pairing_rational(&self.y, &vr)?;
        Ok(xv.is_zero() && yv.is_zero())
    }

    /// Basis of the integral (1,1)-lattice of the period: all lattice
    /// vectors pairing to zero with both `x` and `y`. Rank is
    /// `rank(L) - 2` whenever the period conditions hold (the two
    /// functionals are independent because `(x,x)+(y,y) > 0`).
    pub fn one_one_lattice(&self) -> Result<Vec<LatticeVector>> {
        if !self.is_period_point()? {
            return Err(Error::ConstraintViolated(
                "not a period point; the (1,1)-lattice is undefined".into(),
            ));
        }
        // Clear denominators row-wise: scaling a functional does not
        // change its integral kernel.
        let rows: Vec<Vec<BigInt>> = [&self.x, &self.y]
            .iter()
            .map(|w| {
                let gw = gram_times_rational(&self.lattice, w);
                clear_denominators(&gw)
            })
            .collect();
        let m = IntMat::from_rows(rows).expect("two rows of rank length");
        integer_kernel(&m)
            .into_iter()
            .map(|c| self.lattice.vector(c))
            .collect()
    }
}

fn gram_times_rational(l: &Lattice, w: &[BigRational]) -> Vec<BigRational> {
    let n = l.rank();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from(l.gram().get(i, j).clone()) * &w[j])
                .sum()
        })
        .collect()
}

fn clear_denominators(w: &[BigRational]) -> Vec<BigInt> {
    let lcm = w
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    w.iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

/// Decides whether two positive-square rational vectors lie in the same
/// connected component of the positive cone of a lattice of signature
/// `(1, k)`: there the cone `{(w, w) > 0}` has exactly two components,
/// interchanged by `w -> -w`, and two positive vectors share a component
/// exactly when they pair positively.
///
/// Errors: wrong signature (the two-component picture needs exactly one
/// positive direction and no radical), or a non-positive square input.
pub fn same_positive_component(
    l: &Lattice,
    x: &[BigRational],
    y: &[BigRational],
) -> Result<bool> {
    let sig = l.signature();
    if sig.plus != 1 || sig.zero != 0 {
        return Err(Error::ConstraintViolated(format!(
            "positive cone test needs signature (1, k), got ({}, {}, {})",
            sig.plus, sig.zero, sig.minus
        )));
    }
    let xx = l.pairing_rational(x, x)?;
    let yy = l.pairing_rational(y, y)?;
    if !xx.is_positive() || !yy.is_positive() {
        return Err(Error::ConstraintViolated(
            "positive cone test needs vectors of positive square".into(),
        ));
    }
    Ok(l.pairing_rational(x, y)?.is_positive())
}

/// Sign of the pairing of a positive-square vector `x` against a nonzero
/// isotropic class `lambda`, in a signature `(1, k)` lattice. The pairing
/// can never vanish there: an isotropic vector orthogonal to a positive
/// vector would force a 2-dimensional positive or degenerate subspace.
/// A zero pairing therefore signals a violated precondition or an
/// implementation bug, and is reported as an internal error.
pub fn isotropic_positive_pairing_check(
    l: &Lattice,
    x: &[BigRational],
    lambda: &LatticeVector,
) -> Result<i8> {
    let sig = l.signature();
    if sig.plus != 1 || sig.zero != 0 {
        return Err(Error::ConstraintViolated(format!(
            "need signature (1, k), got ({}, {}, {})",
            sig.plus, sig.zero, sig.minus
        )));
    }
    if lambda.lattice() != l {
        return Err(Error::LatticeMismatch);
    }
    if lambda.is_zero() || !lambda.is_isotropic() {
        return Err(Error::ConstraintViolated(
            "lambda must be nonzero isotropic".into(),
        ));
    }
    let xx = l.pairing_rational(x, x)?;
    if !xx.is_positive() {
        return Err(Error::ConstraintViolated(
            "x must have positive square".into(),
        ));
    }
    let p = l.pairing_rational(x, &lambda.to_rational())?;
    if p.is_zero() {
        return Err(Error::SelfCheck(
            "isotropic class pairs to zero with a positive vector in signature (1,k)".into(),
        ));
    }
    Ok(if p.is_positive() { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::hyperbolic_e;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn rat_frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn period_conditions_in_u3() {
        let l = Lattice::hyperbolic_plane()
            .direct_sum(&Lattice::hyperbolic_plane())
            .direct_sum(&Lattice::hyperbolic_plane());
        // x = e1 + f1, y = e2 + f2: (x,x) = (y,y) = 2, (x,y) = 0.
        let x = l.vector_i64(&[1, 1, 0, 0, 0, 0]).unwrap();
        let y = l.vector_i64(&[0, 0, 1, 1, 0, 0]).unwrap();
        let p = PeriodPoint::from_vectors(&x, &y).unwrap();
        assert!(p.is_period_point().unwrap());

        let ker = p.one_one_lattice().unwrap();
        assert_eq!(ker.len(), 4);
        let coords: Vec<Vec<i64>> = vec![
            vec![1, -1, 0, 0, 0, 0],
            vec![0, 0, 1, -1, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
        ];
        let expect: Vec<LatticeVector> =
            coords.iter().map(|c| l.vector_i64(c).unwrap()).collect();
        assert_eq!(ker, expect);

        // e3 is of type (1,1) for p, e1 is not.
        assert!(p.pairs_to_zero(&l.vector_i64(&[0, 0, 0, 0, 1, 0]).unwrap()).unwrap());
        assert!(!p.pairs_to_zero(&l.vector_i64(&[1, 0, 0, 0, 0, 0]).unwrap()).unwrap());
    }

    #[test]
    fn failed_period_conditions() {
        let l = Lattice::hyperbolic_plane().direct_sum(&Lattice::hyperbolic_plane());
        // (x,y) != 0.
        let x = l.vector_i64(&[1, 1, 0, 0]).unwrap();
        let y = l.vector_i64(&[1, 1, 0, 0]).unwrap();
        let p = PeriodPoint::from_vectors(&x, &y).unwrap();
        assert!(!p.is_period_point().unwrap());
        assert!(p.one_one_lattice().is_err());

        // Negative square: x = e - f has (x,x) = -2.
        let x = l.vector_i64(&[1, -1, 0, 0]).unwrap();
        let y = l.vector_i64(&[0, 0, 1, -1]).unwrap();
        let p = PeriodPoint::from_vectors(&x, &y).unwrap();
        assert!(!p.is_period_point().unwrap());
    }

    #[test]
    fn rational_periods_clear_denominators() {
        let l = Lattice::hyperbolic_plane().direct_sum(&Lattice::hyperbolic_plane());
        // x = (e1 + f1)/2, y = (e2 + f2)/3: still a period point.
        let x = vec![rat_frac(1, 2), rat_frac(1, 2), rat(0), rat(0)];
        let mut y = vec![rat(0), rat(0), rat_frac(1, 3), rat_frac(1, 3)];
        // Rescale y so (y,y) = (x,x): (x,x) = 1/2, (y,y) = 2/9; need
        // (y,y) = 1/2, scale y by 3/2: (3/2)^2 * 2/9 = 1/2.
        for c in &mut y {
            *c *= rat_frac(3, 2);
        }
        let p = PeriodPoint::new(l, x, y).unwrap();
        assert!(p.is_period_point().unwrap());
        let ker = p.one_one_lattice().unwrap();
        assert_eq!(ker.len(), 2);
    }

    #[test]
    fn positive_component_reference_values() {
        // U has signature (1,1); e + f and e + 2f are both positive and on
        // the same side, the negatives are on the other.
        let u = Lattice::hyperbolic_plane();
        let a = vec![rat(1), rat(1)];
        let b = vec![rat(1), rat(2)];
        let na = vec![rat(-1), rat(-1)];
        assert!(same_positive_component(&u, &a, &b).unwrap());
        assert!(!same_positive_component(&u, &a, &na).unwrap());

        // Non-positive input is rejected.
        let iso = vec![rat(1), rat(0)];
        assert!(same_positive_component(&u, &a, &iso).is_err());

        // Wrong signature is rejected.
        let uu = u.direct_sum(&u);
        let c = vec![rat(1), rat(1), rat(0), rat(0)];
        assert!(same_positive_component(&uu, &c, &c).is_err());
    }

    #[test]
    fn isotropic_pairing_sign() {
        let u = Lattice::hyperbolic_plane();
        let x = vec![rat(1), rat(1)];
        let e = u.basis_vector(0);
        assert_eq!(isotropic_positive_pairing_check(&u, &x, &e).unwrap(), 1);
        let me = -&e;
        assert_eq!(isotropic_positive_pairing_check(&u, &x, &me).unwrap(), -1);

        // lambda = 0 and non-isotropic lambda are rejected.
        assert!(isotropic_positive_pairing_check(&u, &x, &u.zero_vector()).is_err());
        let ef = &u.basis_vector(0) + &u.basis_vector(1);
        assert!(isotropic_positive_pairing_check(&u, &x, &ef).is_err());
    }

    #[test]
    fn signature_one_k_in_the_k3n_one_one_part() {
        // The restriction of the rank-23 form to a hyperbolic-plane-plus-
        // degree-generator block has signature (1, k): the ambient test
        // rig for the positive cone. Here: U + <-8> directly.
        let l = Lattice::hyperbolic_plane().direct_sum(&Lattice::rank_one(-8));
        let sig = l.signature();
        assert_eq!((sig.plus, sig.zero, sig.minus), (1, 0, 2));
        let lam = l.vector_i64(&[2, 2, 1]).unwrap(); // isotropic
        let x = vec![rat(1), rat(1), rat(0)]; // (x,x) = 2 > 0
        let s = isotropic_positive_pairing_check(&l, &x, &lam).unwrap();
        assert_eq!(s, 1); // (x, lam) = 2 + 2 = 4 > 0
    }

    #[test]
    fn k3_period_full_rank_case() {
        let k3 = Lattice::k3();
        let x = k3.basis_vector(hyperbolic_e(1));
        let f1 = k3.basis_vector(crate::lattice::hyperbolic_f(1));
        let xv = &x + &f1; // square 2
        let y2 = &k3.basis_vector(hyperbolic_e(2)) + &k3.basis_vector(crate::lattice::hyperbolic_f(2));
        let p = PeriodPoint::from_vectors(&xv, &y2).unwrap();
        assert!(p.is_period_point().unwrap());
        assert_eq!(p.one_one_lattice().unwrap().len(), 20);
    }
}
