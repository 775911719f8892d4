//! Closed-form arithmetic attached to a cyclic étale cover `C → E` of odd
//! prime degree `p` over a hyperelliptic curve `E` of genus `g`.
//!
//! `C` has genus `p(g−1)+1`, the quotient `D` of `C` by a lift of the
//! hyperelliptic involution has genus `(p−1)(g−1)/2`, and `γ : C → D×D`
//! embeds `C` with `γ(C)² = 8 − 2(g−1)(p−2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::monodromy::is_odd_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumerologyError {
    #[error("need g >= 2 and p an odd prime, got g = {g}, p = {p}")]
    InvalidParameters { g: u64, p: u64 },
    #[error("curve with arithmetic genus {p_a} cannot have {nodes} nodes")]
    TooManyNodes { p_a: u64, nodes: u64 },
    #[error("fibration profile violates q = q_rel + g_base or has g_fiber < 2")]
    InvalidProfile,
    #[error("genus {0} is below 2")]
    GenusTooSmall(u64),
}

/// The pair `(g, p)`: genus of the hyperelliptic curve and degree of the
/// cyclic étale cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoverParams {
    g: u64,
    p: u64,
}

impl CoverParams {
    pub fn new(g: u64, p: u64) -> Result<Self, NumerologyError> {
        if g < 2 || !is_odd_prime(p) {
            return Err(NumerologyError::InvalidParameters { g, p });
        }
        Ok(Self { g, p })
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// Genus of the general fibre, relative irregularity, base genus and total
/// irregularity of a fibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationProfile {
    pub g_fiber: u64,
    pub q_rel: u64,
    pub g_base: u64,
    pub q_total: u64,
}

impl FibrationProfile {
    pub fn new(g_fiber: u64, q_rel: u64, g_base: u64, q_total: u64) -> Result<Self, NumerologyError> {
        if g_fiber < 2 || q_total != q_rel + g_base {
            return Err(NumerologyError::InvalidProfile);
        }
        Ok(Self { g_fiber, q_rel, g_base, q_total })
    }
}

/// `(g_C, g_D) = (p(g−1)+1, (p−1)(g−1)/2)`.
pub fn cover_genera(params: CoverParams) -> (u64, u64) {
    let CoverParams { g, p } = params;
    (p * (g - 1) + 1, (p - 1) * (g - 1) / 2)
}

/// `γ(C)² = 8 − 2(g−1)(p−2)`.
pub fn gamma_self_intersection(params: CoverParams) -> i64 {
    let CoverParams { g, p } = params;
    8 - 2 * (g as i64 - 1) * (p as i64 - 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "dim")]
pub enum FiberClass {
    Finite,
    /// `None` when the dimension is not pinned down.
    PositiveDimensional(Option<u64>),
}

/// Fibres of the map `(E, H') ↦ [D]` are finite iff `p ≥ 7`, or `p = 5`
/// and `g ≥ 3`, or `p = 3` and `g ≥ 5`.
///
/// Known positive dimensions: `(2,5) → 1`, `(3,3) → 2`, `(4,3) → 1`. For
/// `(2,3)` the image is dense in `M_1`, so the fibre dimension is the
/// count `dim H − dim M`.
pub fn psi_fiber_class(params: CoverParams) -> FiberClass {
    let CoverParams { g, p } = params;
    let finite = p >= 7 || (p == 5 && g >= 3) || (p == 3 && g >= 5);
    if finite {
        return FiberClass::Finite;
    }
    let dim = match (g, p) {
        (2, 5) => Some(1),
        (3, 3) => Some(2),
        (4, 3) => Some(1),
        (2, 3) => {
            let (dim_h, dim_m) = moduli_dims(params);
            Some(dim_h - dim_m)
        }
        _ => None,
    };
    FiberClass::PositiveDimensional(dim)
}

/// `(dim H_{g,p}, dim M_{g_D})` with `dim H = 2g − 1` and
/// `dim M_h = 3h − 3` for `h ≥ 2`, `1` for `h = 1`, `0` for `h = 0`.
pub fn moduli_dims(params: CoverParams) -> (u64, u64) {
    let (_, g_d) = cover_genera(params);
    let dim_m = match g_d {
        0 => 0,
        1 => 1,
        h => 3 * h - 3,
    };
    (2 * params.g - 1, dim_m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XiaoReport {
    /// `(g_C + 1)/2`.
    #[serde(serialize_with = "serialize_rational")]
    pub bound: BigRational,
    /// `q_π > (g_C + 1)/2`.
    pub is_xiao: bool,
    /// `q_π = ⌈(g_C + 1)/2⌉`.
    pub meets_ceiling: bool,
    /// `g_C − c_π` at the generic Clifford index `⌊(g_C − 1)/2⌋`.
    pub bgn_bound_at_generic_clifford: u64,
}

fn serialize_rational<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::render_rational(q))
}

pub fn xiao_report(g_fiber: u64, q_rel: u64) -> Result<XiaoReport, NumerologyError> {
    if g_fiber < 2 {
        return Err(NumerologyError::GenusTooSmall(g_fiber));
    }
    let bound = BigRational::new(BigInt::from(g_fiber + 1), BigInt::from(2));
    let ceiling = (g_fiber + 2) / 2;
    Ok(XiaoReport {
        is_xiao: BigRational::from_integer(BigInt::from(q_rel)) > bound,
        bound,
        meets_ceiling: q_rel == ceiling,
        bgn_bound_at_generic_clifford: bgn_bound(g_fiber, generic_clifford_index(g_fiber)),
    })
}

/// Clifford index of a general curve of genus `g`.
pub fn generic_clifford_index(g: u64) -> u64 {
    (g - 1) / 2
}

/// `q_π ≤ g_C − c_π`.
pub fn bgn_bound(g_fiber: u64, clifford_index: u64) -> u64 {
    g_fiber - clifford_index
}

/// `q < g_a < 2q − 1`.
pub fn brill_noether_range(q: u64, g_a: u64) -> bool {
    q < g_a && (g_a as i128) < 2 * q as i128 - 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChevalleyWeil {
    /// `h⁰(K_E ⊗ Lⁱ)` for `i = 0..p`.
    pub dims: Vec<u64>,
    /// Dimension of the Prym variety, `(p−1)(g−1)`.
    pub prym_dim: u64,
    /// Dimension of the invariant part of `Sym²` of the Prym cotangent
    /// space: one `(g−1)²` block per pair of characters `{i, p−i}`.
    pub sym2_invariant_dim: u64,
}

/// Character decomposition of `H⁰(C, K_C)` under the deck group.
///
/// The trivial character gives `h⁰(K_E) = g`; each nontrivial `Lⁱ` is a
/// nontrivial degree-0 torsion bundle, so Riemann–Roch gives
/// `h⁰(K_E ⊗ Lⁱ) = g − 1`.
pub fn chevalley_weil(params: CoverParams) -> ChevalleyWeil {
    let CoverParams { g, p } = params;
    let mut dims = vec![g - 1; p as usize];
    dims[0] = g;
    let prym_dim: u64 = dims[1..].iter().sum();
    // Characters i and p−i pair up; an invariant in V_i ⊗ V_j needs i + j ≡ 0.
    let sym2_invariant_dim = (1..p)
        .filter(|&i| i < p - i)
        .map(|i| dims[i as usize] * dims[(p - i) as usize])
        .sum();
    ChevalleyWeil { dims, prym_dim, sym2_invariant_dim }
}

/// Geometric genus after resolving `nodes` simple nodes.
pub fn geometric_genus(p_a: u64, nodes: u64) -> Result<u64, NumerologyError> {
    p_a.checked_sub(nodes).ok_or(NumerologyError::TooManyNodes { p_a, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(g: u64, p: u64) -> CoverParams {
        CoverParams::new(g, p).unwrap()
    }

    fn half(n: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(2))
    }

    #[test]
    fn cover_params_validation() {
        assert!(CoverParams::new(1, 3).is_err());
        assert!(CoverParams::new(2, 2).is_err());
        assert!(CoverParams::new(2, 9).is_err());
        assert!(CoverParams::new(2, 13).is_ok());
    }

    #[test]
    fn genera() {
        assert_eq!(cover_genera(params(2, 5)), (6, 2));
        assert_eq!(cover_genera(params(4, 3)), (10, 3));
        assert_eq!(cover_genera(params(2, 3)), (4, 1));
    }

    #[test]
    fn gamma_squared() {
        assert_eq!(gamma_self_intersection(params(2, 5)), 2);
        assert_eq!(gamma_self_intersection(params(5, 3)), 0);
        assert_eq!(gamma_self_intersection(params(2, 7)), -2);
    }

    #[test]
    fn fiber_classes() {
        assert_eq!(psi_fiber_class(params(2, 5)), FiberClass::PositiveDimensional(Some(1)));
        assert_eq!(psi_fiber_class(params(5, 3)), FiberClass::Finite);
        assert_eq!(psi_fiber_class(params(3, 3)), FiberClass::PositiveDimensional(Some(2)));
        assert_eq!(psi_fiber_class(params(4, 3)), FiberClass::PositiveDimensional(Some(1)));
        assert_eq!(psi_fiber_class(params(2, 3)), FiberClass::PositiveDimensional(Some(2)));
        assert_eq!(psi_fiber_class(params(3, 5)), FiberClass::Finite);
        assert_eq!(psi_fiber_class(params(2, 7)), FiberClass::Finite);
    }

    #[test]
    fn p3_dimension_counts_agree_with_stated_dimensions() {
        // For p = 3 the image is open in the trigonal locus; for g_D = 2, 3
        // every curve is trigonal, so the count gives the fibre dimension.
        for g in [3, 4] {
            let (h, m) = moduli_dims(params(g, 3));
            assert_eq!(psi_fiber_class(params(g, 3)), FiberClass::PositiveDimensional(Some(h - m)));
        }
    }

    #[test]
    fn moduli() {
        assert_eq!(moduli_dims(params(2, 5)), (3, 3));
        assert_eq!(moduli_dims(params(4, 3)), (7, 6));
        assert_eq!(moduli_dims(params(2, 3)), (3, 1));
    }

    #[test]
    fn xiao_reports() {
        let r = xiao_report(6, 4).unwrap();
        assert_eq!(r.bound, half(7));
        assert!(r.is_xiao && r.meets_ceiling);
        assert_eq!(r.bgn_bound_at_generic_clifford, 4);

        let r = xiao_report(10, 6).unwrap();
        assert_eq!(r.bound, half(11));
        assert!(r.is_xiao && r.meets_ceiling);
        assert_eq!(r.bgn_bound_at_generic_clifford, 6);

        let r = xiao_report(7, 4).unwrap();
        assert_eq!(r.bound, half(8));
        assert!(!r.is_xiao && r.meets_ceiling);
        assert_eq!(r.bgn_bound_at_generic_clifford, 4);

        assert!(xiao_report(1, 0).is_err());
    }

    #[test]
    fn bgn_bound_equals_ceiling_at_generic_clifford() {
        for g in 2..40 {
            assert_eq!(bgn_bound(g, generic_clifford_index(g)), (g + 2) / 2, "g = {g}");
        }
    }

    #[test]
    fn brill_noether() {
        assert!(brill_noether_range(4, 6));
        assert!(brill_noether_range(6, 10));
        assert!(!brill_noether_range(4, 4));
        assert!(!brill_noether_range(4, 7));
        assert!(!brill_noether_range(0, 0));
    }

    #[test]
    fn chevalley_weil_cases() {
        let cw = chevalley_weil(params(2, 5));
        assert_eq!(cw.dims, vec![2, 1, 1, 1, 1]);
        assert_eq!(cw.prym_dim, 4);
        assert_eq!(cw.sym2_invariant_dim, 2);

        let cw = chevalley_weil(params(2, 3));
        assert_eq!((cw.dims, cw.prym_dim, cw.sym2_invariant_dim), (vec![2, 1, 1], 2, 1));

        for g in 2..=6 {
            for p in [3, 5, 7, 11] {
                let prm = params(g, p);
                let cw = chevalley_weil(prm);
                assert_eq!(cw.dims.iter().sum::<u64>(), cover_genera(prm).0);
                assert_eq!(cw.sym2_invariant_dim, (p - 1) / 2 * (g - 1) * (g - 1));
            }
        }
    }

    #[test]
    fn nodal_genus() {
        assert_eq!(geometric_genus(7, 1), Ok(6));
        assert_eq!(geometric_genus(10, 0), Ok(10));
        assert_eq!(geometric_genus(10, 1), Ok(9));
        assert_eq!(geometric_genus(1, 2), Err(NumerologyError::TooManyNodes { p_a: 1, nodes: 2 }));
    }

    #[test]
    fn fibration_profiles() {
        assert!(FibrationProfile::new(10, 6, 3, 9).is_ok());
        assert_eq!(FibrationProfile::new(10, 6, 3, 8), Err(NumerologyError::InvalidProfile));
        assert_eq!(FibrationProfile::new(1, 0, 0, 0), Err(NumerologyError::InvalidProfile));
    }
}
