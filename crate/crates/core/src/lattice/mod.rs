//! Numerical intersection theory on surfaces.
//!
//! An [`IntersectionLattice`] is a free abelian group with a named basis, a
//! symmetric integer Gram matrix and a canonical class. [`DivisorClass`]es
//! are coefficient vectors in that basis. Everything is numerical: two
//! classes are equal iff their coefficients agree.

mod curves;
mod matrix;
mod morphism;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Solution};

pub use curves::{
    adjunction_inverse, branch_class, phi_morphism, product_with_diagonal_lattice,
    symmetric_square_lattice, BranchCurveData,
};
pub use matrix::IntMatrix;
pub use morphism::LatticeMorphism;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("class of rank {found} used in a lattice of rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("gram matrix is not square and symmetric")]
    NotSymmetric,
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("C^2 + C.K = {0} is odd, so the arithmetic genus is not an integer")]
    NonIntegralGenus(i64),
    #[error("the solution {0} is not an integral class")]
    NotInLattice(String),
    #[error("lattice has signature ({pos}, {neg}) with {zero} null directions; (1, rank-1) is required")]
    Signature { pos: usize, neg: usize, zero: usize },
    #[error("ample class has A^2 = {0} <= 0")]
    AmpleNotPositive(i64),
    #[error("nonzero class {0} is isotropic and orthogonal to an ample class")]
    HodgeInconsistency(String),
    #[error("involution completion is underdetermined ({rank} equations of rank for {unknowns} unknowns)")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("involution completion is inconsistent")]
    Inconsistent,
    #[error("completed map is not an involution")]
    NotAnInvolution,
    #[error("completed map does not preserve the intersection form")]
    NotAnIsometry,
    #[error("basis index {0} out of range")]
    BasisIndex(usize),
    #[error("projection formula fails: pushforward^T G_target != G_source pullback")]
    ProjectionFormula,
    #[error("pushforward after pullback is not {0} times the identity")]
    DegreeIdentity(u32),
    #[error("genus {0} is not supported here")]
    UnsupportedGenus(u64),
    #[error("class {0} is not divisible by {1}")]
    NotDivisible(String, i64),
    #[error("need g >= 2 and p an odd prime, got g = {g}, p = {p}")]
    InvalidParameters { g: u64, p: u64 },
}

/// A numerical divisor class: integer coefficients in a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass(Vec<i64>);

impl DivisorClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self / k` if every coefficient is divisible by `k`.
    pub fn divide(&self, k: i64) -> Result<DivisorClass, LatticeError> {
        if self.0.iter().all(|c| c % k == 0) {
            Ok(Self(self.0.iter().map(|c| c / k).collect()))
        } else {
            Err(LatticeError::NotDivisible(self.to_string(), k))
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        DivisorClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &(-rhs)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(rhs.0.iter().map(|a| self * a).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    basis_labels: Vec<String>,
    gram: IntMatrix,
    canonical: DivisorClass,
}

impl IntersectionLattice {
    pub fn new(
        basis_labels: Vec<String>,
        gram: Vec<Vec<i64>>,
        canonical: DivisorClass,
    ) -> Result<Self, LatticeError> {
        let n = basis_labels.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSymmetric);
        }
        if (0..n).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(LatticeError::NotSymmetric);
        }
        if canonical.rank() != n {
            return Err(LatticeError::RankMismatch { expected: n, found: canonical.rank() });
        }
        Ok(Self { basis_labels, gram: IntMatrix::from_rows(gram), canonical })
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn basis(&self, i: usize) -> DivisorClass {
        DivisorClass::basis(self.rank(), i)
    }

    /// Build a class from `(label, coefficient)` pairs.
    pub fn class(&self, terms: &[(&str, i64)]) -> DivisorClass {
        let mut v = vec![0; self.rank()];
        for (label, c) in terms {
            let i = self
                .basis_labels
                .iter()
                .position(|l| l == label)
                .unwrap_or_else(|| panic!("unknown basis label {label}"));
            v[i] += c;
        }
        DivisorClass(v)
    }

    fn check_rank(&self, c: &DivisorClass) -> Result<(), LatticeError> {
        if c.rank() == self.rank() {
            Ok(())
        } else {
            Err(LatticeError::RankMismatch { expected: self.rank(), found: c.rank() })
        }
    }

    /// `aᵀ · G · b`.
    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64, LatticeError> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        let gb = self.gram.apply(b);
        Ok(a.coeffs().iter().zip(gb.coeffs()).map(|(x, y)| x * y).sum())
    }

    /// `G · c`: the pairings of `c` with each basis vector.
    pub fn pairings(&self, c: &DivisorClass) -> Result<Vec<i64>, LatticeError> {
        self.check_rank(c)?;
        Ok(self.gram.apply(c).coeffs().to_vec())
    }

    /// `p_a(C) = 1 + (C² + C·K)/2`.
    pub fn adjunction_genus(&self, c: &DivisorClass) -> Result<i64, LatticeError> {
        let total = self.intersect(c, c)? + self.intersect(c, &self.canonical)?;
        if total % 2 != 0 {
            return Err(LatticeError::NonIntegralGenus(total));
        }
        Ok(1 + total / 2)
    }

    pub fn determinant(&self) -> num_rational::BigRational {
        linalg::determinant(&linalg::to_q_matrix(self.gram.rows()))
    }

    /// Inertia `(positive, negative, zero)` of the Gram matrix.
    pub fn signature(&self) -> (usize, usize, usize) {
        linalg::inertia(&linalg::to_q_matrix(self.gram.rows()))
    }

    fn require_hodge_signature(&self) -> Result<(), LatticeError> {
        match self.signature() {
            (1, neg, 0) if neg + 1 == self.rank() => Ok(()),
            (pos, neg, zero) => Err(LatticeError::Signature { pos, neg, zero }),
        }
    }

    /// Solve `G · c = pairings` over ℚ and return `c` if it is integral.
    pub fn class_from_intersections(&self, pairings: &[i64]) -> Result<DivisorClass, LatticeError> {
        if pairings.len() != self.rank() {
            return Err(LatticeError::RankMismatch { expected: self.rank(), found: pairings.len() });
        }
        let a = linalg::to_q_matrix(self.gram.rows());
        let b: Vec<_> = pairings.iter().map(|&x| linalg::q(x)).collect();
        match linalg::solve(&a, &b) {
            Solution::Unique(x) => {
                if x.iter().all(|v| v.is_integer()) {
                    let coeffs = x
                        .iter()
                        .map(|v| i64::try_from(v.to_integer()).expect("small class coefficient"))
                        .collect();
                    Ok(DivisorClass(coeffs))
                } else {
                    let shown: Vec<String> = x.iter().map(crate::render_rational).collect();
                    Err(LatticeError::NotInLattice(format!("({})", shown.join(", "))))
                }
            }
            _ => Err(LatticeError::Degenerate),
        }
    }

    /// Hodge-index certificate: on a lattice of signature `(1, rank−1)`,
    /// a class `v` with `v² = 0` and `v·A = 0` for `A² > 0` must vanish.
    ///
    /// Returns whether `v² = 0` and `v·A = 0`; errors if that holds for a
    /// nonzero `v`.
    pub fn hodge_index_forced_zero(
        &self,
        v: &DivisorClass,
        ample: &DivisorClass,
    ) -> Result<bool, LatticeError> {
        self.check_rank(v)?;
        self.check_rank(ample)?;
        self.require_hodge_signature()?;
        let a2 = self.intersect(ample, ample)?;
        if a2 <= 0 {
            return Err(LatticeError::AmpleNotPositive(a2));
        }
        let forced = self.intersect(v, v)? == 0 && self.intersect(v, ample)? == 0;
        if forced && !v.is_zero() {
            return Err(LatticeError::HodgeInconsistency(v.to_string()));
        }
        Ok(forced)
    }

    /// Extend a partial action (images of some basis vectors) to the unique
    /// linear map fixing `invariant`, then check that it is an involutive
    /// isometry.
    pub fn complete_involution(
        &self,
        partial: &BTreeMap<usize, DivisorClass>,
        invariant: &DivisorClass,
    ) -> Result<IntMatrix, LatticeError> {
        let n = self.rank();
        self.check_rank(invariant)?;
        for (&j, img) in partial {
            if j >= n {
                return Err(LatticeError::BasisIndex(j));
            }
            self.check_rank(img)?;
        }
        let unknown: Vec<usize> = (0..n).filter(|j| !partial.contains_key(j)).collect();
        let k = invariant.coeffs();

        // Unknown entry M[r][unknown[u]] is variable r * |unknown| + u.
        // Row r of M·k = k reads Σ_u k[unknown[u]] M[r][unknown[u]] = k[r] − known part.
        let vars = n * unknown.len();
        let mut a = vec![vec![linalg::q(0); vars]; n];
        let mut b = Vec::with_capacity(n);
        for r in 0..n {
            let known: i64 = partial.iter().map(|(&j, img)| img.coeffs()[r] * k[j]).sum();
            b.push(linalg::q(k[r] - known));
            for (u, &j) in unknown.iter().enumerate() {
                a[r][r * unknown.len() + u] = linalg::q(k[j]);
            }
        }
        let values = if vars == 0 {
            if b.iter().any(|x| *x != linalg::q(0)) {
                return Err(LatticeError::Inconsistent);
            }
            Vec::new()
        } else {
            match linalg::solve(&a, &b) {
                Solution::Unique(x) => x,
                Solution::Underdetermined { rank, unknowns } => {
                    return Err(LatticeError::Underdetermined { rank, unknowns })
                }
                Solution::Inconsistent => return Err(LatticeError::Inconsistent),
            }
        };
        if values.iter().any(|v| !v.is_integer()) {
            return Err(LatticeError::NotInLattice("involution matrix".into()));
        }

        let mut rows = vec![vec![0i64; n]; n];
        for (&j, img) in partial {
            for r in 0..n {
                rows[r][j] = img.coeffs()[r];
            }
        }
        for r in 0..n {
            for (u, &j) in unknown.iter().enumerate() {
                rows[r][j] =
                    i64::try_from(values[r * unknown.len() + u].to_integer()).expect("small entry");
            }
        }
        let m = IntMatrix::from_rows(rows);
        if m.mul(&m) != IntMatrix::identity(n) {
            return Err(LatticeError::NotAnInvolution);
        }
        if !self.is_isometry(&m) {
            return Err(LatticeError::NotAnIsometry);
        }
        Ok(m)
    }

    /// `Mᵀ G M = G`.
    pub fn is_isometry(&self, m: &IntMatrix) -> bool {
        m.transpose().mul(&self.gram).mul(m) == self.gram
    }

    /// JSON-ready dump with a set of named classes.
    pub fn dump(&self, classes: &[(&str, &DivisorClass)]) -> LatticeDump {
        LatticeDump {
            basis: self.basis_labels.clone(),
            gram: self.gram.rows().to_vec(),
            canonical: self.canonical.coeffs().to_vec(),
            classes: classes.iter().map(|(n, c)| (n.to_string(), c.coeffs().to_vec())).collect(),
        }
    }
}

/// Serialized lattice: `{basis, gram, canonical, classes: {name: coeffs}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDump {
    pub basis: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub classes: BTreeMap<String, Vec<i64>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyperbolic_plane() -> IntersectionLattice {
        IntersectionLattice::new(
            vec!["F1".into(), "F2".into()],
            vec![vec![0, 1], vec![1, 0]],
            DivisorClass::new(vec![-2, -2]),
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_gram() {
        let asym = IntersectionLattice::new(
            vec!["a".into(), "b".into()],
            vec![vec![0, 1], vec![2, 0]],
            DivisorClass::zero(2),
        );
        assert_eq!(asym, Err(LatticeError::NotSymmetric));
        let short = IntersectionLattice::new(vec!["a".into()], vec![vec![1]], DivisorClass::zero(2));
        assert!(matches!(short, Err(LatticeError::RankMismatch { .. })));
    }

    #[test]
    fn zero_class_pairs_to_zero() {
        let l = hyperbolic_plane();
        let z = DivisorClass::zero(2);
        assert_eq!(l.intersect(&z, &DivisorClass::new(vec![5, -3])), Ok(0));
        assert!(matches!(l.intersect(&z, &DivisorClass::zero(3)), Err(LatticeError::RankMismatch { .. })));
    }

    #[test]
    fn adjunction_parity_error() {
        let l = IntersectionLattice::new(vec!["E".into()], vec![vec![-1]], DivisorClass::zero(1)).unwrap();
        assert_eq!(l.adjunction_genus(&DivisorClass::new(vec![1])), Err(LatticeError::NonIntegralGenus(-1)));
    }

    #[test]
    fn non_integral_solution_is_rejected() {
        let l = IntersectionLattice::new(
            vec!["a".into(), "b".into()],
            vec![vec![2, 0], vec![0, 2]],
            DivisorClass::zero(2),
        )
        .unwrap();
        assert!(matches!(l.class_from_intersections(&[1, 0]), Err(LatticeError::NotInLattice(_))));
        let deg = IntersectionLattice::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![1, 1]],
            DivisorClass::zero(2),
        )
        .unwrap();
        assert_eq!(deg.class_from_intersections(&[1, 1]), Err(LatticeError::Degenerate));
    }

    #[test]
    fn hodge_preconditions() {
        let l = hyperbolic_plane();
        let v = DivisorClass::new(vec![1, 0]);
        // F1 is isotropic but pairs to 1 with F1 + F2
        assert_eq!(l.hodge_index_forced_zero(&v, &DivisorClass::new(vec![1, 1])), Ok(false));
        assert_eq!(
            l.hodge_index_forced_zero(&v, &DivisorClass::new(vec![1, -1])),
            Err(LatticeError::AmpleNotPositive(-2))
        );
        // F1 against the "ample" 2F1 is isotropic and orthogonal, but 2F1 has
        // square zero so the call is refused before reaching a verdict.
        assert_eq!(
            l.hodge_index_forced_zero(&v, &DivisorClass::new(vec![2, 0])),
            Err(LatticeError::AmpleNotPositive(0))
        );
        let definite =
            IntersectionLattice::new(vec!["a".into(), "b".into()], vec![vec![1, 0], vec![0, 1]], DivisorClass::zero(2))
                .unwrap();
        assert!(matches!(
            definite.hodge_index_forced_zero(&v, &v),
            Err(LatticeError::Signature { pos: 2, .. })
        ));
    }

    #[test]
    fn involution_swapping_rulings() {
        let l = hyperbolic_plane();
        let partial = BTreeMap::from([(0, DivisorClass::new(vec![0, 1]))]);
        let m = l.complete_involution(&partial, l.canonical()).unwrap();
        assert_eq!(m, IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn involution_completion_failures() {
        let l = hyperbolic_plane();
        assert!(matches!(
            l.complete_involution(&BTreeMap::new(), l.canonical()),
            Err(LatticeError::Underdetermined { .. })
        ));
        // F1 ↦ 2F1 with F1 + F2 fixed forces F2 ↦ F2 − F1: not an involution.
        let partial = BTreeMap::from([(0, DivisorClass::new(vec![2, 0]))]);
        assert_eq!(
            l.complete_involution(&partial, &DivisorClass::new(vec![1, 1])),
            Err(LatticeError::NotAnInvolution)
        );
        // Identity on F1 but F1 is the invariant, so F2 is unconstrained.
        let partial = BTreeMap::from([(0, DivisorClass::new(vec![1, 0]))]);
        assert!(matches!(
            l.complete_involution(&partial, &DivisorClass::new(vec![1, 0])),
            Err(LatticeError::Underdetermined { .. })
        ));
        let full = BTreeMap::from([(0, DivisorClass::new(vec![1, 0])), (1, DivisorClass::new(vec![1, 1]))]);
        assert_eq!(l.complete_involution(&full, &DivisorClass::new(vec![0, 1])), Err(LatticeError::Inconsistent));
    }

    #[test]
    fn divisibility() {
        assert_eq!(DivisorClass::new(vec![16, 16, -6]).divide(2), Ok(DivisorClass::new(vec![8, 8, -3])));
        assert!(DivisorClass::new(vec![3, 3, -1]).divide(2).is_err());
    }
}
