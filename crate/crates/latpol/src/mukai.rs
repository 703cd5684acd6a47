//! Mukai vectors `(r, c, s)` with `c` in the rank-22 lattice, the Mukai
//! pairing, and the identification with the rank-24 extended lattice.
//!
//! The identification sends `(r, c, s)` to `c + r*e4 - s*f4`, where
//! `e4, f4` span the fourth hyperbolic plane. Under it the Mukai pairing
//! `(v, w) = (v.c, w.c) - v.r * w.s - v.s * w.r` becomes the bilinear form
//! of the rank-24 lattice; note the sign flip on the last coordinate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::{hyperbolic_e, hyperbolic_f, Lattice, LatticeVector};

/// A Mukai vector: rank component, a class in the rank-22 lattice, and a
/// degree component.
#[derive(Clone, PartialEq, Eq)]
pub struct MukaiVector {
    r: BigInt,
    c: LatticeVector,
    s: BigInt,
}

impl MukaiVector {
    /// `c` must live in the standard rank-22 lattice.
    pub fn new(r: impl Into<BigInt>, c: LatticeVector, s: impl Into<BigInt>) -> Result<MukaiVector> {
        if *c.lattice() != Lattice::k3() {
            return Err(Error::LatticeMismatch);
        }
        Ok(MukaiVector {
            r: r.into(),
            c,
            s: s.into(),
        })
    }

    /// Zero middle component, convenient for `(r, 0, s)` vectors.
    pub fn with_zero_class(r: impl Into<BigInt>, s: impl Into<BigInt>) -> MukaiVector {
        MukaiVector {
            r: r.into(),
            c: Lattice::k3().zero_vector(),
            s: s.into(),
        }
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn c(&self) -> &LatticeVector {
        &self.c
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// Mukai pairing `(v, w) = (v.c, w.c) - v.r * w.s - v.s * w.r`.
    pub fn pairing(&self, other: &MukaiVector) -> BigInt {
        let cc = self.c.pairing(&other.c).expect("both classes rank 22");
        cc - &self.r * &other.s - &self.s * &other.r
    }

    pub fn norm(&self) -> BigInt {
        self.pairing(self)
    }

    /// Primitive means the full coordinate vector `(r, c, s)` has gcd 1.
    pub fn is_primitive(&self) -> bool {
        let mut g = self.r.gcd(&self.s);
        for x in self.c.coords() {
            g = g.gcd(x);
        }
        g == BigInt::from(1)
    }

    /// Expected dimension `(v, v) + 2` of the moduli space attached to a
    /// primitive vector. Errors when the self-pairing is odd or below -2.
    pub fn moduli_dimension(&self) -> Result<BigInt> {
        let n = self.norm();
        if n.is_odd() {
            return Err(Error::ConstraintViolated(format!(
                "moduli dimension needs an even self-pairing, got {n}"
            )));
        }
        if n < BigInt::from(-2) {
            return Err(Error::ConstraintViolated(format!(
                "moduli dimension needs self-pairing >= -2, got {n}"
            )));
        }
        Ok(n + BigInt::from(2))
    }

    /// Image in the rank-24 lattice: `c + r*e4 - s*f4`.
    pub fn to_extended(&self) -> LatticeVector {
        let ext = Lattice::extended();
        let mut coords = self.c.coords().to_vec();
        coords.push(self.r.clone());
        coords.push(-&self.s);
        ext.vector(coords).expect("rank 24")
    }

    /// Inverse of `to_extended`.
    pub fn from_extended(v: &LatticeVector) -> Result<MukaiVector> {
        if *v.lattice() != Lattice::extended() {
            return Err(Error::LatticeMismatch);
        }
        let coords = v.coords();
        let c = Lattice::k3().vector(coords[..22].to_vec())?;
        Ok(MukaiVector {
            r: coords[hyperbolic_e(4)].clone(),
            c,
            s: -&coords[hyperbolic_f(4)],
        })
    }

    /// Mukai vector of a sheaf with the given rank, first Chern class and
    /// second Chern number: `(rk, c1, (c1, c1)/2 - c2 + rk)`.
    pub fn of_sheaf(rk: impl Into<BigInt>, c1: LatticeVector, c2: impl Into<BigInt>) -> Result<MukaiVector> {
        let rk = rk.into();
        if rk.is_negative() {
            return Err(Error::ConstraintViolated(format!(
                "sheaf rank must be nonnegative, got {rk}"
            )));
        }
        if *c1.lattice() != Lattice::k3() {
            return Err(Error::LatticeMismatch);
        }
        let half_sq = c1.norm() / BigInt::from(2); // even lattice: exact
        let s = half_sq - c2.into() + &rk;
        Ok(MukaiVector { r: rk, c: c1, s })
    }
}

impl std::fmt::Debug for MukaiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {:?}, {})", self.r, self.c, self.s)
    }
}

/// Euler characteristic `1 - g + d` of a degree-`d` line bundle on a curve
/// of genus `g`; the degree component of the Mukai vector of its pushforward.
pub fn chi_of_support_sheaf(g: impl Into<BigInt>, d: impl Into<BigInt>) -> BigInt {
    BigInt::from(1) - g.into() + d.into()
}
