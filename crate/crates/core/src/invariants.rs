//! Invariants of surfaces: double covers, Noether's formula and fibrations
//! with nodal fibres.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("L.(L + K) = {0} is odd; the double-cover data is inconsistent")]
    OddDoubleCoverData(i64),
    #[error("K^2 + c2 = {0} is not divisible by 12; not the invariants of a smooth surface")]
    NoetherDivisibility(i64),
    #[error("a double cover of a curve needs an even number of branch points, got {0}")]
    OddBranchCount(u64),
    #[error("an unbranched double cover of the projective line is disconnected")]
    Disconnected,
    #[error("surface profile violates {0}")]
    Profile(&'static str),
}

/// `q`, `χ(O)`, `K²`, `c₂`, `p_g` of a smooth projective surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceProfile {
    pub q: i64,
    pub chi_o: i64,
    pub k2: i64,
    pub c2: i64,
    pub p_g: i64,
}

impl SurfaceProfile {
    pub fn new(q: i64, chi_o: i64, k2: i64, c2: i64, p_g: i64) -> Result<Self, InvariantError> {
        if 12 * chi_o != k2 + c2 {
            return Err(InvariantError::Profile("Noether's formula 12 chi = K^2 + c2"));
        }
        if chi_o != 1 - q + p_g {
            return Err(InvariantError::Profile("chi = 1 - q + p_g"));
        }
        Ok(Self { q, chi_o, k2, c2, p_g })
    }
}

/// `K_S² = 2K² + 4L·K + 2L²` for a double cover branched along `B = 2L`.
pub fn double_cover_k2(k2_base: i64, l_dot_k: i64, l2: i64) -> i64 {
    2 * k2_base + 4 * l_dot_k + 2 * l2
}

/// `χ(O_S) = 2χ(O_Y) + (L² + L·K)/2` for a double cover branched along `2L`.
pub fn double_cover_chi(chi_base: i64, l_dot_k: i64, l2: i64) -> Result<i64, InvariantError> {
    let s = l2 + l_dot_k;
    if s % 2 != 0 {
        return Err(InvariantError::OddDoubleCoverData(s));
    }
    Ok(2 * chi_base + s / 2)
}

/// `χ(O) = (K² + c₂)/12`.
pub fn noether_chi(k2: i64, c2: i64) -> Result<i64, InvariantError> {
    let s = k2 + c2;
    if s % 12 != 0 {
        return Err(InvariantError::NoetherDivisibility(s));
    }
    Ok(s / 12)
}

/// Topological Euler number of a fibration: `e(B)·e(F) + Σ defects`, one
/// per node on an irreducible nodal fibre.
pub fn fibration_euler(g_base: u64, g_fiber: u64, fiber_defects: &[u64]) -> i64 {
    let e = |g: u64| 2 - 2 * g as i64;
    e(g_base) * e(g_fiber) + fiber_defects.iter().sum::<u64>() as i64
}

/// Genus of a double cover of a genus-`g_base` curve with `branch_points`
/// branch points: `2g − 2 = 2(2g_base − 2) + branch_points`.
pub fn double_cover_curve_genus(g_base: u64, branch_points: u64) -> Result<u64, InvariantError> {
    if branch_points % 2 != 0 {
        return Err(InvariantError::OddBranchCount(branch_points));
    }
    if g_base == 0 && branch_points == 0 {
        return Err(InvariantError::Disconnected);
    }
    Ok(2 * g_base + branch_points / 2 - 1)
}

/// Assemble `q = q_rel + g_base`, `χ` from Noether, `p_g = χ − 1 + q`.
pub fn assemble_profile(q_rel: i64, g_base: i64, k2: i64, c2: i64) -> Result<SurfaceProfile, InvariantError> {
    let q = q_rel + g_base;
    let chi_o = noether_chi(k2, c2)?;
    SurfaceProfile::new(q, chi_o, k2, c2, chi_o - 1 + q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_cover_k2_values() {
        assert_eq!(double_cover_k2(32, 40, -4), 216);
        assert_eq!(double_cover_k2(0, 0, 0), 0);
    }

    #[test]
    fn double_cover_chi_values() {
        assert_eq!(double_cover_chi(4, 40, -4), Ok(26));
        assert_eq!(double_cover_chi(1, 0, 0), Ok(2));
        assert_eq!(double_cover_chi(1, 1, 0), Err(InvariantError::OddDoubleCoverData(1)));
    }

    #[test]
    fn noether() {
        assert_eq!(noether_chi(216, 96), Ok(26));
        assert_eq!(noether_chi(0, 12), Ok(1));
        assert_eq!(noether_chi(216, 95), Err(InvariantError::NoetherDivisibility(311)));
    }

    #[test]
    fn fibration_euler_values() {
        assert_eq!(fibration_euler(3, 10, &[1; 24]), 96);
        assert_eq!(fibration_euler(3, 10, &[1; 23]), 95);
        assert_eq!(fibration_euler(0, 1, &[]), 0);
        assert_eq!(fibration_euler(2, 3, &[]), fibration_euler(3, 2, &[]));
    }

    #[test]
    fn double_cover_curves() {
        assert_eq!(double_cover_curve_genus(3, 56), Ok(33));
        for g in 1..10 {
            assert_eq!(double_cover_curve_genus(g, 0), Ok(2 * g - 1));
            assert_eq!(double_cover_curve_genus(0, 2 * g + 2), Ok(g));
        }
        assert_eq!(double_cover_curve_genus(0, 0), Err(InvariantError::Disconnected));
        assert_eq!(double_cover_curve_genus(3, 55), Err(InvariantError::OddBranchCount(55)));
    }

    #[test]
    fn profiles() {
        let p = assemble_profile(6, 3, 216, 96).unwrap();
        assert_eq!(p, SurfaceProfile { q: 9, chi_o: 26, k2: 216, c2: 96, p_g: 34 });
        let p = assemble_profile(0, 0, 0, 12).unwrap();
        assert_eq!((p.q, p.chi_o, p.p_g), (0, 1, 0));
        assert!(matches!(SurfaceProfile::new(0, 2, 0, 12, 1), Err(InvariantError::Profile(_))));
        assert!(assemble_profile(0, 0, 1, 12).is_err());
    }
}
