//! Integral lattices presented by Gram matrices, and the vector-level
//! operations the rest of the crate is built on: pairings, primitivity,
//! divisibility, signatures, orthogonal complements and saturations.
//!
//! Coordinate conventions for the named lattices are fixed once and for
//! all by the summand order
//!
//! ```text
//! E8(-1), E8(-1), U, U, U, [ <2-2n> | U ]
//! ```
//!
//! with the last summand present only for the rank-23 lattice (a single
//! generator of square `2-2n`) and the rank-24 lattice (a fourth
//! hyperbolic plane). Basis vectors of each hyperbolic plane `U` come in
//! pairs `e, f` with `(e,e) = (f,f) = 0`, `(e,f) = 1`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMat;
use crate::normal_form::{hermite_normal_form, integer_kernel, saturate_rows};

/// A free finitely generated abelian group with an integral symmetric
/// bilinear form, presented by its Gram matrix in a fixed basis. Possibly
/// degenerate; "lattice" here never implies nondegenerate.
///
/// Cloning is cheap (the Gram matrix is shared); equality is equality of
/// Gram matrices, so two lattices built the same way are interchangeable.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: Arc<IntMat>,
}

/// An element of a lattice, stored as integer coordinates in the lattice's
/// fixed basis together with the lattice itself.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeVector {
    lattice: Lattice,
    coords: Vec<BigInt>,
}

/// Sylvester signature of a symmetric form: the number of positive, zero
/// and negative eigenvalues, computed exactly (no floating point).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub plus: usize,
    pub zero: usize,
    pub minus: usize,
}

/// The standard lattices of the toolkit; see the module docs for the
/// summand order and basis conventions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardLattice {
    /// Hyperbolic plane `U`, Gram [[0,1],[1,0]].
    Hyperbolic,
    /// Negative definite `E8(-1)`: the negated E8 Cartan matrix, Bourbaki
    /// node order (chain 1-3-4-5-6-7-8 with node 2 attached to node 4).
    E8Negative,
    /// Rank one with a single generator of the given square.
    RankOne(BigInt),
    /// `E8(-1)^2 + U^3`, rank 22, signature (3,19).
    K3,
    /// `E8(-1)^2 + U^3 + <2-2n>`, rank 23; requires `n >= 2`.
    K3n(u64),
    /// `E8(-1)^2 + U^4`, rank 24, even unimodular, signature (4,20).
    Extended,
}

/// Index of the first basis vector `e_k` of the k-th hyperbolic plane
/// (`k = 1, 2, 3`, and `k = 4` in the rank-24 lattice), in the fixed
/// summand order above.
pub fn hyperbolic_e(k: usize) -> usize {
    assert!((1..=4).contains(&k), "hyperbolic summand index out of range");
    14 + 2 * k
}

/// Index of the second basis vector `f_k` of the k-th hyperbolic plane.
pub fn hyperbolic_f(k: usize) -> usize {
    hyperbolic_e(k) + 1
}

/// Index of the square `2-2n` generator in the rank-23 lattice.
pub const DEGREE_INDEX: usize = 22;

fn e8_cartan_negated() -> IntMat {
    // Bourbaki numbering: the chain is 1-3-4-5-6-7-8 and node 2 hangs off
    // node 4. Diagonal 2, adjacent pairs -1, then the whole matrix negated.
    let adj: [(usize, usize); 7] = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    let mut m = IntMat::zero(8, 8);
    for i in 0..8 {
        m.set(i, i, BigInt::from(-2));
    }
    for &(a, b) in &adj {
        m.set(a - 1, b - 1, BigInt::one());
        m.set(b - 1, a - 1, BigInt::one());
    }
    m
}

fn hyperbolic_gram() -> IntMat {
    IntMat::from_i64_rows(&[&[0, 1], &[1, 0]])
}

pub fn standard_lattice(which: StandardLattice) -> Result<Lattice> {
    match which {
        StandardLattice::Hyperbolic => Lattice::new(hyperbolic_gram()),
        StandardLattice::E8Negative => Lattice::new(e8_cartan_negated()),
        StandardLattice::RankOne(k) => {
            Lattice::new(IntMat::from_rows(vec![vec![k]]).expect("1x1"))
        }
        StandardLattice::K3 => {
            let e8 = e8_cartan_negated();
            let u = hyperbolic_gram();
            let g = e8.block_diag(&e8).block_diag(&u).block_diag(&u).block_diag(&u);
            Lattice::new(g)
        }
        StandardLattice::K3n(n) => {
            if n < 2 {
                return Err(Error::InvalidParameter(format!(
                    "rank-23 lattice needs n >= 2, got {n}"
                )));
            }
            let base = standard_lattice(StandardLattice::K3)?;
            let deg = BigInt::from(2) - BigInt::from(2) * BigInt::from(n);
            Ok(base.direct_sum(&standard_lattice(StandardLattice::RankOne(deg))?))
        }
        StandardLattice::Extended => {
            let base = standard_lattice(StandardLattice::K3)?;
            Ok(base.direct_sum(&standard_lattice(StandardLattice::Hyperbolic)?))
        }
    }
}

impl Lattice {
    /// Wraps a Gram matrix; it must be square and symmetric.
    pub fn new(gram: IntMat) -> Result<Lattice> {
        if !gram.is_square() {
            return Err(Error::NotSquare);
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Lattice {
            gram: Arc::new(gram),
        })
    }

    pub fn hyperbolic_plane() -> Lattice {
        standard_lattice(StandardLattice::Hyperbolic).expect("fixed gram")
    }

    pub fn e8_negative() -> Lattice {
        standard_lattice(StandardLattice::E8Negative).expect("fixed gram")
    }

    pub fn rank_one(square: impl Into<BigInt>) -> Lattice {
        standard_lattice(StandardLattice::RankOne(square.into())).expect("fixed gram")
    }

    /// `E8(-1)^2 + U^3`, rank 22.
    pub fn k3() -> Lattice {
        standard_lattice(StandardLattice::K3).expect("fixed gram")
    }

    /// `E8(-1)^2 + U^3 + <2-2n>`, rank 23.
    pub fn k3n(n: u64) -> Result<Lattice> {
        standard_lattice(StandardLattice::K3n(n))
    }

    /// `E8(-1)^2 + U^4`, rank 24, even unimodular.
    pub fn extended() -> Lattice {
        standard_lattice(StandardLattice::Extended).expect("fixed gram")
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    /// Orthogonal direct sum; Gram matrices in block-diagonal order.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        Lattice {
            gram: Arc::new(self.gram.block_diag(&other.gram)),
        }
    }

    /// Builds a vector from coordinates in the lattice basis.
    pub fn vector(&self, coords: Vec<BigInt>) -> Result<LatticeVector> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        Ok(LatticeVector {
            lattice: self.clone(),
            coords,
        })
    }

    pub fn vector_i64(&self, coords: &[i64]) -> Result<LatticeVector> {
        self.vector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero_vector(&self) -> LatticeVector {
        LatticeVector {
            lattice: self.clone(),
            coords: vec![BigInt::zero(); self.rank()],
        }
    }

    pub fn basis_vector(&self, i: usize) -> LatticeVector {
        assert!(i < self.rank(), "basis index out of range");
        let mut coords = vec![BigInt::zero(); self.rank()];
        coords[i] = BigInt::one();
        LatticeVector {
            lattice: self.clone(),
            coords,
        }
    }

    pub fn det(&self) -> BigInt {
        self.gram.det().expect("gram is square")
    }

    /// Square lattice with determinant ±1.
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// All self-pairings even, i.e. even diagonal of the Gram matrix.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.get(i, i).is_even())
    }

    /// Sylvester signature via exact symmetric Gaussian elimination over
    /// the rationals: congruence transformations preserve the sign counts,
    /// so we diagonalize and count. Zero pivots with a nonzero row are
    /// repaired by a symmetric row+column combination, which turns an
    /// off-diagonal entry `c` into a diagonal `2c`.
    pub fn signature(&self) -> Signature {
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from(self.gram.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let (mut plus, mut minus, mut zero) = (0usize, 0usize, 0usize);
        let mut k = 0usize;
        while k < n {
            if m[k][k].is_zero() {
                if let Some(i) = (k + 1..n).find(|&i| !m[i][i].is_zero()) {
                    symmetric_swap(&mut m, k, i);
                } else if let Some((i, j)) = find_offdiag(&m, k) {
                    // Both diagonals zero, m[i][j] = c != 0: adding row j to
                    // row i (and column j to column i) makes m[i][i] = 2c.
                    symmetric_add(&mut m, i, j);
                    symmetric_swap(&mut m, k, i);
                } else {
                    zero += n - k;
                    break;
                }
            }
            if m[k][k].is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = &m[i][k] / &m[k][k];
                for j in 0..n {
                    let v = &m[i][j] - &f * &m[k][j];
                    m[i][j] = v;
                }
                for j in 0..n {
                    let v = &m[j][i] - &f * &m[j][k];
                    m[j][i] = v;
                }
            }
            k += 1;
        }
        Signature { plus, zero, minus }
    }

    /// Basis of `{ y : (y, v) = 0 for all v in vs }`, the orthogonal
    /// complement of the given vectors. Always saturated (it is an integer
    /// kernel), returned in Hermite-canonical order.
    pub fn orthogonal_complement(&self, vs: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
        if vs.is_empty() {
            return Err(Error::InvalidParameter(
                "orthogonal complement of an empty family".into(),
            ));
        }
        let mut rows = Vec::with_capacity(vs.len());
        for v in vs {
            if v.lattice != *self {
                return Err(Error::LatticeMismatch);
            }
            rows.push(self.gram.mul_vec(&v.coords));
        }
        let m = IntMat::from_rows(rows).expect("rows share length");
        integer_kernel(&m)
            .into_iter()
            .map(|c| self.vector(c))
            .collect()
    }

    /// Saturation of the span of the given vectors: the largest sublattice
    /// of the same rank containing them with torsion-free quotient. Input
    /// vectors must be linearly independent.
    pub fn saturation(&self, vs: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
        if vs.is_empty() {
            return Err(Error::InvalidParameter("saturation of an empty family".into()));
        }
        let mut rows = Vec::with_capacity(vs.len());
        for v in vs {
            if v.lattice != *self {
                return Err(Error::LatticeMismatch);
            }
            rows.push(v.coords.clone());
        }
        let m = IntMat::from_rows(rows).expect("rows share length");
        saturate_rows(&m)?
            .to_rows()
            .into_iter()
            .map(|c| self.vector(c))
            .collect()
    }

    /// Gram matrix of the form restricted to the given vectors.
    pub fn restricted_gram(&self, vs: &[LatticeVector]) -> Result<IntMat> {
        let mut g = IntMat::zero(vs.len(), vs.len());
        for (i, x) in vs.iter().enumerate() {
            for (j, y) in vs.iter().enumerate() {
                g.set(i, j, x.pairing(y)?);
            }
        }
        Ok(g)
    }

    /// Pairing of two rational vectors in lattice coordinates.
    pub fn pairing_rational(&self, x: &[BigRational], y: &[BigRational]) -> Result<BigRational> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: x.len(),
            });
        }
        if y.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: y.len(),
            });
        }
        let n = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                let g = self.gram.get(i, j);
                if g.is_zero() || y[j].is_zero() {
                    continue;
                }
                acc += &x[i] * BigRational::from(g.clone()) * &y[j];
            }
        }
        Ok(acc)
    }
}

fn symmetric_swap(m: &mut [Vec<BigRational>], a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn symmetric_add(m: &mut [Vec<BigRational>], a: usize, b: usize) {
    let n = m.len();
    for j in 0..n {
        let v = &m[a][j] + &m[b][j];
        m[a][j] = v;
    }
    for i in 0..n {
        let v = &m[i][a] + &m[i][b];
        m[i][a] = v;
    }
}

fn find_offdiag(m: &[Vec<BigRational>], k: usize) -> Option<(usize, usize)> {
    let n = m.len();
    for i in k..n {
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

impl LatticeVector {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Bilinear pairing `(x, y)` via the Gram matrix. Both vectors must
    /// live in the same lattice.
    pub fn pairing(&self, other: &LatticeVector) -> Result<BigInt> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        let gy = self.lattice.gram.mul_vec(&other.coords);
        Ok(self
            .coords
            .iter()
            .zip(gy.iter())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Self-pairing `(x, x)`.
    pub fn norm(&self) -> BigInt {
        self.pairing(self).expect("same lattice")
    }

    pub fn is_isotropic(&self) -> bool {
        self.norm().is_zero()
    }

    /// Nonzero with coordinate gcd 1, i.e. not a proper multiple.
    pub fn is_primitive(&self) -> bool {
        let g = self
            .coords
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        g.is_one()
    }

    /// Divisibility `Div(x)`: the positive generator of the pairing ideal
    /// `(x, L)`, i.e. the gcd of the entries of `Gram * x`. Undefined (an
    /// error) when `x` pairs to zero with everything, in particular for
    /// the zero vector.
    pub fn divisibility(&self) -> Result<BigInt> {
        let gx = self.lattice.gram.mul_vec(&self.coords);
        let g = gx.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return Err(Error::RadicalVector);
        }
        Ok(g)
    }

    /// The primitive vector spanning the same ray (coordinates divided by
    /// their gcd). Errors on the zero vector.
    pub fn primitive_part(&self) -> Result<LatticeVector> {
        let g = self
            .coords
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return Err(Error::InvalidParameter(
                "zero vector has no primitive part".into(),
            ));
        }
        Ok(LatticeVector {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|c| c / &g).collect(),
        })
    }

    pub fn scaled(&self, c: impl Into<BigInt>) -> LatticeVector {
        let c = c.into();
        LatticeVector {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|x| x * &c).collect(),
        }
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.coords
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect()
    }
}

impl std::ops::Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert!(self.lattice == rhs.lattice, "vectors from different lattices");
        LatticeVector {
            lattice: self.lattice.clone(),
            coords: self
                .coords
                .iter()
                .zip(rhs.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert!(self.lattice == rhs.lattice, "vectors from different lattices");
        LatticeVector {
            lattice: self.lattice.clone(),
            coords: self
                .coords
                .iter()
                .zip(rhs.coords.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice(rank {})", self.rank())
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cs.join(", "))
    }
}

/// True when the rows of `basis` (vectors of `ambient`) span a saturated
/// sublattice, i.e. a primitive sublattice of `ambient`.
pub fn is_primitive_sublattice(ambient: &Lattice, basis: &[LatticeVector]) -> Result<bool> {
    let sat = ambient.saturation(basis)?;
    let rows = IntMat::from_rows(basis.iter().map(|v| v.coords.clone()).collect())
        .expect("rows share length");
    let h = hermite_normal_form(&rows).h;
    let sat_rows =
        IntMat::from_rows(sat.iter().map(|v| v.coords.clone()).collect()).expect("rows");
    Ok(h == hermite_normal_form(&sat_rows).h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_plane_basics() {
        let u = Lattice::hyperbolic_plane();
        let e = u.basis_vector(0);
        let f = u.basis_vector(1);
        assert_eq!(e.pairing(&f).unwrap(), BigInt::one());
        assert!(e.is_isotropic() && f.is_isotropic());
        assert!(u.is_unimodular() && u.is_even());
        assert_eq!(
            u.signature(),
            Signature {
                plus: 1,
                zero: 0,
                minus: 1
            }
        );
    }

    #[test]
    fn e8_negative_is_even_unimodular_negative_definite() {
        let e8 = Lattice::e8_negative();
        assert_eq!(e8.rank(), 8);
        assert!(e8.is_even());
        assert_eq!(e8.det(), BigInt::one()); // det(E8 Cartan) = 1, rank even
        assert!(e8.is_unimodular());
        assert_eq!(
            e8.signature(),
            Signature {
                plus: 0,
                zero: 0,
                minus: 8
            }
        );
        // Every simple root has square -2.
        for i in 0..8 {
            assert_eq!(e8.basis_vector(i).norm(), BigInt::from(-2));
        }
    }

    #[test]
    fn named_lattices_have_documented_shape() {
        let k3 = Lattice::k3();
        assert_eq!(k3.rank(), 22);
        assert!(k3.is_even() && k3.is_unimodular());
        assert_eq!(
            k3.signature(),
            Signature {
                plus: 3,
                zero: 0,
                minus: 19
            }
        );

        let l5 = Lattice::k3n(5).unwrap();
        assert_eq!(l5.rank(), 23);
        assert!(l5.is_even());
        assert_eq!(*l5.gram().get(DEGREE_INDEX, DEGREE_INDEX), BigInt::from(-8));
        assert_eq!(
            l5.signature(),
            Signature {
                plus: 3,
                zero: 0,
                minus: 20
            }
        );
        assert_eq!(l5.det(), BigInt::from(8)); // |det| = 2n-2, sign (+) from (3,20)

        let ext = Lattice::extended();
        assert_eq!(ext.rank(), 24);
        assert!(ext.is_even() && ext.is_unimodular());
        assert_eq!(
            ext.signature(),
            Signature {
                plus: 4,
                zero: 0,
                minus: 20
            }
        );

        assert!(Lattice::k3n(1).is_err());
    }

    #[test]
    fn hyperbolic_index_helpers() {
        let l5 = Lattice::k3n(5).unwrap();
        let e3 = l5.basis_vector(hyperbolic_e(3));
        let f3 = l5.basis_vector(hyperbolic_f(3));
        assert_eq!(e3.pairing(&f3).unwrap(), BigInt::one());
        assert_eq!(e3.norm(), BigInt::zero());
        assert_eq!(hyperbolic_e(1), 16);
        assert_eq!(hyperbolic_f(3), 21);
    }

    #[test]
    fn pairing_reference_values() {
        // In U + <-8>: (2e + 2f + l, 2e + 2f + l) = 2*2*2 - 8 = 0.
        let l = Lattice::hyperbolic_plane().direct_sum(&Lattice::rank_one(-8));
        let v = l.vector_i64(&[2, 2, 1]).unwrap();
        assert!(v.is_isotropic());
        assert!(v.is_primitive());

        // Mismatched lattices are rejected.
        let u = Lattice::hyperbolic_plane();
        let x = u.vector_i64(&[1, 0]).unwrap();
        let w = Lattice::rank_one(2).vector_i64(&[1]).unwrap();
        assert!(matches!(x.pairing(&w), Err(Error::LatticeMismatch)));
    }

    #[test]
    fn divisibility_reference_values() {
        let u = Lattice::hyperbolic_plane();
        assert_eq!(
            u.vector_i64(&[1, 0]).unwrap().divisibility().unwrap(),
            BigInt::one()
        );
        assert_eq!(
            u.vector_i64(&[2, 4]).unwrap().divisibility().unwrap(),
            BigInt::from(2)
        );
        let r = Lattice::rank_one(-8);
        assert_eq!(
            r.vector_i64(&[1]).unwrap().divisibility().unwrap(),
            BigInt::from(8)
        );
        // Zero vector has no divisibility.
        assert!(matches!(
            u.zero_vector().divisibility(),
            Err(Error::RadicalVector)
        ));
        // Nonzero vector in the radical of a degenerate form.
        let d = Lattice::new(IntMat::from_i64_rows(&[&[2, 0], &[0, 0]])).unwrap();
        assert!(matches!(
            d.vector_i64(&[0, 1]).unwrap().divisibility(),
            Err(Error::RadicalVector)
        ));
    }

    #[test]
    fn primitivity() {
        let u = Lattice::hyperbolic_plane();
        assert!(u.vector_i64(&[2, 3]).unwrap().is_primitive());
        assert!(!u.vector_i64(&[2, 4]).unwrap().is_primitive());
        assert!(!u.zero_vector().is_primitive());
        assert_eq!(
            u.vector_i64(&[2, 4]).unwrap().primitive_part().unwrap(),
            u.vector_i64(&[1, 2]).unwrap()
        );
    }

    #[test]
    fn signature_of_degenerate_form() {
        // 2*[[1,0],[0,0]] has signature (1,1,0) in (plus, zero, minus) order.
        let d = Lattice::new(IntMat::from_i64_rows(&[&[2, 0], &[0, 0]])).unwrap();
        assert_eq!(
            d.signature(),
            Signature {
                plus: 1,
                zero: 1,
                minus: 0
            }
        );
        // Zero diagonal but nondegenerate: U needs the off-diagonal repair.
        let u = Lattice::hyperbolic_plane();
        assert_eq!(u.signature().zero, 0);
    }

    #[test]
    fn signature_is_congruence_invariant() {
        // Conjugating the Gram matrix by a unimodular basis change must not
        // move the signature.
        let l5 = Lattice::k3n(5).unwrap();
        let mut t = IntMat::identity(23);
        // A few shear generators.
        t.add_row_multiple(0, 5, &BigInt::from(3));
        t.add_row_multiple(12, 22, &BigInt::from(-2));
        t.add_row_multiple(22, 7, &BigInt::from(1));
        let g2 = t.mul(l5.gram()).mul(&t.transpose());
        let l2 = Lattice::new(g2).unwrap();
        assert_eq!(l2.signature(), l5.signature());
    }

    #[test]
    fn orthogonal_complement_reference_cases() {
        let u = Lattice::hyperbolic_plane();
        let e = u.basis_vector(0);
        let comp = u.orthogonal_complement(&[e.clone()]).unwrap();
        assert_eq!(comp, vec![u.basis_vector(0)]); // e is isotropic: e in e-perp

        let v = u.vector_i64(&[1, 4]).unwrap();
        let comp = u.orthogonal_complement(&[v]).unwrap();
        assert_eq!(comp, vec![u.vector_i64(&[1, -4]).unwrap()]);

        let uu = u.direct_sum(&u);
        let e1 = uu.basis_vector(0);
        let comp = uu.orthogonal_complement(&[e1]).unwrap();
        let coords: Vec<Vec<i64>> = vec![
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ];
        let expect: Vec<LatticeVector> =
            coords.iter().map(|c| uu.vector_i64(c).unwrap()).collect();
        assert_eq!(comp, expect);

        assert!(u.orthogonal_complement(&[]).is_err());
    }

    #[test]
    fn complement_vectors_do_pair_to_zero() {
        let l5 = Lattice::k3n(5).unwrap();
        let v = l5
            .vector_i64(&[1, -2, 3, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 5, 0, 0, 1, 1, 3])
            .unwrap();
        let comp = l5.orthogonal_complement(&[v.clone()]).unwrap();
        assert_eq!(comp.len(), 22);
        for w in &comp {
            assert_eq!(v.pairing(w).unwrap(), BigInt::zero());
        }
    }

    #[test]
    fn saturation_in_lattice_coordinates() {
        let u = Lattice::hyperbolic_plane();
        let two_e = u.vector_i64(&[2, 0]).unwrap();
        let sat = u.saturation(&[two_e]).unwrap();
        assert_eq!(sat, vec![u.vector_i64(&[1, 0]).unwrap()]);
        assert!(is_primitive_sublattice(&u, &sat).unwrap());
        assert!(!is_primitive_sublattice(&u, &[u.vector_i64(&[2, 0]).unwrap()]).unwrap());
    }

    #[test]
    fn rational_pairing_agrees_with_integer_pairing() {
        let l = Lattice::k3();
        let x = l.basis_vector(hyperbolic_e(1));
        let y = l.basis_vector(hyperbolic_f(1));
        let p = l
            .pairing_rational(&x.to_rational(), &y.to_rational())
            .unwrap();
        assert_eq!(p, BigRational::from(BigInt::one()));
    }
}
