//! The lattices of `D×D` and `D^(2)` for a curve `D` of genus `g`, and the
//! classes built on them.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{DivisorClass, IntMatrix, IntersectionLattice, LatticeError, LatticeMorphism};
use crate::monodromy::is_odd_prime;

/// Basis `(D₁, D₂, Δ)` of `D×D`: `D₁ = {P}×D`, `D₂ = D×{P}`, `Δ` the diagonal.
///
/// `D₁² = D₂² = 0`, `D₁·D₂ = D₁·Δ = D₂·Δ = 1`, `Δ² = 2 − 2g`, and
/// `K = (2g − 2)(D₁ + D₂)`.
pub fn product_with_diagonal_lattice(g: u64) -> Result<IntersectionLattice, LatticeError> {
    if g < 2 {
        return Err(LatticeError::UnsupportedGenus(g));
    }
    Ok(product_lattice_any_genus(g))
}

// The Gram matrix and canonical class make sense for every genus; only the
// public constructor insists on g ≥ 2.
fn product_lattice_any_genus(g: u64) -> IntersectionLattice {
    let g = g as i64;
    IntersectionLattice::new(
        vec!["D1".into(), "D2".into(), "Delta".into()],
        vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 2 - 2 * g]],
        DivisorClass::new(vec![2 * g - 2, 2 * g - 2, 0]),
    )
    .expect("symmetric by construction")
}

/// Basis `(D_P, δ)` of `D^(2)`, where `D_P = {P + Q}` and `2δ` is the
/// diagonal: `D_P² = 1`, `D_P·δ = 1`, `δ² = 1 − g`, `K = (2g − 2)D_P − δ`.
pub fn symmetric_square_lattice(g: u64) -> Result<IntersectionLattice, LatticeError> {
    if g < 2 {
        return Err(LatticeError::UnsupportedGenus(g));
    }
    let g = g as i64;
    IntersectionLattice::new(
        vec!["D_P".into(), "delta".into()],
        vec![vec![1, 1], vec![1, 1 - g]],
        DivisorClass::new(vec![2 * g - 2, -1]),
    )
}

/// The quotient `φ : D×D → D^(2)`: `φ_*D₁ = φ_*D₂ = D_P`, `φ_*Δ = 2δ`,
/// `φ^*D_P = D₁ + D₂`, `φ^*δ = Δ`.
pub fn phi_morphism(g: u64) -> Result<LatticeMorphism, LatticeError> {
    let source = product_with_diagonal_lattice(g)?;
    let target = symmetric_square_lattice(g)?;
    let push = IntMatrix::from_rows(vec![vec![1, 1, 0], vec![0, 0, 2]]);
    let pull = IntMatrix::from_rows(vec![vec![1, 0], vec![1, 0], vec![0, 1]]);
    LatticeMorphism::new(source, target, push, pull, 2)
}

/// Classes in the branch-curve computation for a smooth plane quartic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchCurveData {
    /// `X_P`, determined by its pairings `(2, 2, 10)` with `(D₁, D₂, Δ)`.
    pub x_p: DivisorClass,
    /// `H = 3(D₁ + D₂) − Δ`.
    pub h: DivisorClass,
    /// `τ_* D_P = ½ φ_* X_P`.
    pub tau_d_p: DivisorClass,
    /// The canonical involution on `D^(2)`.
    pub tau: IntMatrix,
    pub tau_delta: DivisorClass,
    /// `τ_*` of the diagonal `2δ`.
    pub tau_diagonal: DivisorClass,
    /// `B = φ^*(τ_* Δ)`.
    pub b: DivisorClass,
    /// `L = B / 2`.
    pub l: DivisorClass,
}

/// Class of the branch curve `B ⊂ D×D` of the double cover `S → D×D`, for
/// `D` a smooth plane quartic (so `g = 3`).
///
/// Chain: `X_P` from its pairings; Hodge index identifies it with `H`;
/// `τ_*D_P = ½φ_*X_P`; `τ` is completed from that and `τ_*K = K`;
/// `B = φ^*(τ_*(2δ))`; `L = B/2`.
pub fn branch_class(g: u64) -> Result<BranchCurveData, LatticeError> {
    if g != 3 {
        return Err(LatticeError::UnsupportedGenus(g));
    }
    let phi = phi_morphism(g)?;
    let dxd = phi.source();
    let sym2 = phi.target();

    let x_p = dxd.class_from_intersections(&[2, 2, 10])?;
    let h = dxd.class(&[("D1", 3), ("D2", 3), ("Delta", -1)]);
    let ample = dxd.class(&[("D1", 1), ("D2", 1)]);
    if !dxd.hodge_index_forced_zero(&(&h - &x_p), &ample)? {
        return Err(LatticeError::HodgeInconsistency((&h - &x_p).to_string()));
    }

    let tau_d_p = phi.push(&x_p).divide(2)?;
    let partial = BTreeMap::from([(0usize, tau_d_p.clone())]);
    let tau = sym2.complete_involution(&partial, sym2.canonical())?;
    let tau_delta = tau.column(1);
    let diagonal = sym2.class(&[("delta", 2)]);
    let tau_diagonal = tau.apply(&diagonal);
    let b = phi.pull(&tau_diagonal);
    let l = b.divide(2)?;
    Ok(BranchCurveData { x_p, h, tau_d_p, tau, tau_delta, tau_diagonal, b, l })
}

/// `γ(C)²` for `γ : C → D×D`, from adjunction alone.
///
/// With `γ·D₁ = γ·D₂ = 2` (each projection has degree 2) and
/// `K = (2g_D − 2)(D₁ + D₂)`, adjunction gives
/// `γ² = 2g_C − 2 − γ·K`. No pairing with `Δ` is needed since `K` has no
/// `Δ` component.
pub fn adjunction_inverse(g: u64, p: u64) -> Result<i64, LatticeError> {
    if g < 2 || !is_odd_prime(p) {
        return Err(LatticeError::InvalidParameters { g, p });
    }
    let g_c = (p * (g - 1) + 1) as i64;
    let g_d = (p - 1) * (g - 1) / 2;
    let dxd = product_lattice_any_genus(g_d);

    let known_pairings = [Some(2), Some(2), None];
    let gamma_dot_k: i64 = dxd
        .canonical()
        .coeffs()
        .iter()
        .zip(known_pairings)
        .map(|(&k, pairing)| match (k, pairing) {
            (0, _) => 0,
            (k, Some(x)) => k * x,
            (_, None) => unreachable!("canonical class has no diagonal component"),
        })
        .sum();
    Ok(2 * g_c - 2 - gamma_dot_k)
}
