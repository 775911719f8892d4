//! Exact certificates for plane curves: Hessian, smoothness, simple flexes
//! and the Plücker counts.
//!
//! Every decision reduces to univariate resultants over ℚ. A seeded random
//! unimodular change of coordinates puts the curve in general position
//! relative to the projection from `(0 : 0 : 1)`; a `true` answer is a
//! certificate, while a negative answer is confirmed on several
//! independent projections.

mod parse;
mod ternary;
mod univariate;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use parse::parse_form;
pub use ternary::{Monomial, TernaryForm};
pub use univariate::{sylvester_determinant, UnivariatePoly};

use ternary::Terms;

/// Number of full-degree projections that must agree before a flex
/// polynomial is declared non-squarefree.
pub const FLEX_CONFIRMATIONS: usize = 3;
/// Upper bound on coordinate changes tried by [`flexes_all_simple`].
pub const FLEX_MAX_ATTEMPTS: usize = 40;
/// Coordinate changes tried by [`is_smooth`] before giving up.
pub const SMOOTH_ATTEMPTS: usize = 8;
const SMOOTH_SEED: u64 = 0x5eed_0f_c0_12e5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuarticError {
    #[error("the zero polynomial is not a curve")]
    ZeroForm,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("Hessian needs degree at least 3, got {0}")]
    DegreeTooSmall(u32),
    #[error("the Hessian vanishes identically")]
    DegenerateHessian,
    #[error("resultant of a zero polynomial")]
    ZeroPolynomial,
    #[error("expected a quartic, got degree {0}")]
    NotQuartic(u32),
    #[error("the curve is not smooth")]
    NotSmooth,
    #[error("no coordinate change in general position after {0} attempts")]
    NoGenericProjection(usize),
}

/// Determinant of the matrix of second partials.
pub fn hessian(f: &TernaryForm) -> Result<TernaryForm, QuarticError> {
    let d = f.degree();
    if d < 3 {
        return Err(QuarticError::DegreeTooSmall(d));
    }
    let first: Vec<Terms> = (0..3).map(|i| f.partial(i)).collect();
    let second: [[Terms; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| ternary::partial(&first[i], j)));
    let det = ternary::det3(&second);
    if det.is_empty() {
        return Err(QuarticError::DegenerateHessian);
    }
    Ok(TernaryForm::from_terms_unchecked(3 * (d - 2), det))
}

/// Sylvester resultant of two nonzero polynomials, `f` rows first.
pub fn resultant(f: &UnivariatePoly, g: &UnivariatePoly) -> Result<BigRational, QuarticError> {
    if f.is_zero() || g.is_zero() {
        return Err(QuarticError::ZeroPolynomial);
    }
    Ok(univariate::resultant(f, g))
}

/// `Res_z(f(x, 1, z), g(x, 1, z))` as a polynomial in `x`, with `z` read at
/// the formal degrees of `f` and `g`. Built by evaluation and
/// interpolation.
fn eliminate_z(f: &Terms, df: u32, g: &Terms, dg: u32) -> UnivariatePoly {
    let points = (df * dg) as i64 + 1;
    let samples: Vec<(BigRational, BigRational)> = (0..points)
        .map(|x| {
            let x = BigRational::from_integer(BigInt::from(x));
            let fz = ternary::z_coefficients(f, df, &x);
            let gz = ternary::z_coefficients(g, dg, &x);
            let r = sylvester_determinant(&fz, df as usize, &gz, dg as usize);
            (x, r)
        })
        .collect();
    UnivariatePoly::interpolate(&samples)
}

/// `P · L · U` with `L` and `U` random unitriangular and `P` a random
/// permutation, so the determinant is `±1`. The projection centre
/// `M · (0, 0, 1)ᵀ` is kept off the coordinate lines.
fn random_unimodular(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    loop {
        let mut draw = || rng.gen_range(-9..=9i64);
        let l = [[1, 0, 0], [draw(), 1, 0], [draw(), draw(), 1]];
        let u = [[1, draw(), draw()], [0, 1, draw()], [0, 0, 1]];
        let mut m = [[0i64; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).map(|k| l[i][k] * u[k][j]).sum();
            }
        }
        let shift = rng.gen_range(0..3);
        m.rotate_left(shift);
        if rng.gen_bool(0.5) {
            m.swap(0, 1);
        }
        if m.iter().all(|row| row[2] != 0) {
            return m;
        }
    }
}

fn nonzero_at_pole(t: &Terms, degree: u32) -> bool {
    t.get(&[0, 0, degree]).is_some_and(|c| !c.is_zero())
}

/// No common zero of the three partial derivatives.
///
/// Each attempt projects the curve from `(0 : 0 : 1)` after a random
/// coordinate change and certifies that `{F_x = F_y = 0}` and
/// `{F_x = F_z = 0}` have no common point. Returns `false` when no attempt
/// yields a certificate, which happens exactly when the curve is singular
/// except with negligible probability.
pub fn is_smooth(f: &TernaryForm) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(SMOOTH_SEED);
    let d = f.degree();
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    (0..SMOOTH_ATTEMPTS).any(|_| {
        let g = f.substitute(&random_unimodular(&mut rng));
        let [a, b, c] = [0, 1, 2].map(|v| g.partial(v));
        if ![&a, &b, &c].iter().all(|p| nonzero_at_pole(p, d - 1)) {
            return false;
        }
        let formal = ((d - 1) * (d - 1)) as usize;
        let r1 = eliminate_z(&a, d - 1, &b, d - 1);
        let r2 = eliminate_z(&a, d - 1, &c, d - 1);
        if r1.is_zero() || r2.is_zero() {
            return false;
        }
        // A common zero on y = 0 shows up as a degree drop in both.
        if r1.degree() != Some(formal) && r2.degree() != Some(formal) {
            return false;
        }
        r1.gcd(&r2).degree() == Some(0)
    })
}

/// Outcome of [`flexes_all_simple`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlexCertificate {
    pub all_simple: bool,
    /// Degree of the eliminated flex polynomial; `3d(d−2)` for a quartic.
    pub flex_degree: usize,
    /// Distinct roots of the flex polynomial; for a negative answer, the
    /// largest count seen across the confirming projections.
    pub distinct_flex_points: usize,
    /// Coordinate changes drawn, including degenerate ones.
    pub attempts: usize,
}

/// Decides whether every flex of a smooth quartic is an ordinary flex.
///
/// The flex polynomial `Res_z(F, Hess F)` counts intersection multiplicities
/// of the curve with its Hessian in a general projection; it is squarefree
/// exactly when all 24 intersections are transverse. Projections where a
/// leading coefficient vanishes or the degree drops below 24 are discarded.
pub fn flexes_all_simple(f: &TernaryForm, seed: u64) -> Result<FlexCertificate, QuarticError> {
    if f.degree() != 4 {
        return Err(QuarticError::NotQuartic(f.degree()));
    }
    if !is_smooth(f) {
        return Err(QuarticError::NotSmooth);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut non_squarefree = 0;
    let mut most_distinct = 0;
    for attempt in 1..=FLEX_MAX_ATTEMPTS {
        let g = f.substitute(&random_unimodular(&mut rng));
        let h = hessian(&g)?;
        if !nonzero_at_pole(g.terms(), 4) || !nonzero_at_pole(h.terms(), 6) {
            continue;
        }
        let r = eliminate_z(g.terms(), 4, h.terms(), 6);
        let Some(flex_degree) = r.degree().filter(|&d| d == 24) else {
            continue;
        };
        let distinct = r.distinct_root_count();
        let all_simple = distinct == flex_degree;
        if !all_simple {
            non_squarefree += 1;
            most_distinct = most_distinct.max(distinct);
            if non_squarefree < FLEX_CONFIRMATIONS {
                continue;
            }
        }
        let distinct_flex_points = if all_simple { distinct } else { most_distinct };
        return Ok(FlexCertificate { all_simple, flex_degree, distinct_flex_points, attempts: attempt });
    }
    Err(QuarticError::NoGenericProjection(FLEX_MAX_ATTEMPTS))
}

/// `(3d(d−2), d(d−2)(d−3)(d+3)/2)`: flexes and bitangents of a smooth plane
/// curve of degree `d`.
pub fn plucker_counts(d: u64) -> (u64, u64) {
    (3 * d * d.saturating_sub(2), d * d.saturating_sub(2) * d.saturating_sub(3) * (d + 3) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn fermat_hessian() {
        let h = hessian(&TernaryForm::fermat_quartic()).unwrap();
        assert_eq!(h.degree(), 6);
        assert_eq!(h.terms().len(), 1);
        assert_eq!(h.coefficient([2, 2, 2]), q(1728));
    }

    #[test]
    fn degenerate_hessians() {
        let x4 = TernaryForm::from_i64(&[([4, 0, 0], 1)]).unwrap();
        assert_eq!(hessian(&x4), Err(QuarticError::DegenerateHessian));
        let conic = TernaryForm::from_i64(&[([2, 0, 0], 1)]).unwrap();
        assert_eq!(hessian(&conic), Err(QuarticError::DegreeTooSmall(2)));
    }

    #[test]
    fn klein_hessian_has_degree_six() {
        assert_eq!(hessian(&TernaryForm::klein_quartic()).unwrap().degree(), 6);
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth(&TernaryForm::fermat_quartic()));
        assert!(is_smooth(&TernaryForm::klein_quartic()));
        assert!(!is_smooth(&TernaryForm::from_i64(&[([4, 0, 0], 1)]).unwrap()));
        // nodal cubic y²z = x³ + x²z
        let nodal = parse_form("y^2z - x^3 - x^2z").unwrap();
        assert!(!is_smooth(&nodal));
        let smooth_cubic = parse_form("y^2z - x^3 + x z^2").unwrap();
        assert!(is_smooth(&smooth_cubic));
        // two lines meeting at a point
        assert!(!is_smooth(&parse_form("x y").unwrap()));
        assert!(is_smooth(&parse_form("x^2 + y^2 + z^2").unwrap()));
    }

    #[test]
    fn random_changes_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_unimodular(&mut rng);
            let rows: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
            let det = crate::linalg::determinant(&crate::linalg::to_q_matrix(&rows));
            assert!(det == q(1) || det == q(-1));
        }
    }

    #[test]
    fn resultant_rejects_zero() {
        let one = UnivariatePoly::from_i64(&[1]);
        assert_eq!(resultant(&UnivariatePoly::zero(), &one), Err(QuarticError::ZeroPolynomial));
    }

    #[test]
    fn flex_preconditions() {
        let cubic = parse_form("y^2z - x^3 + x z^2").unwrap();
        assert_eq!(flexes_all_simple(&cubic, 0), Err(QuarticError::NotQuartic(3)));
        let singular = parse_form("x^4 + y^4 + x^2 z^2").unwrap();
        assert_eq!(flexes_all_simple(&singular, 0), Err(QuarticError::NotSmooth));
    }

    #[test]
    fn klein_flexes_are_simple() {
        let c = flexes_all_simple(&TernaryForm::klein_quartic(), 1).unwrap();
        assert!(c.all_simple);
        assert_eq!((c.flex_degree, c.distinct_flex_points), (24, 24));
    }

    #[test]
    fn fermat_has_hyperflexes() {
        let c = flexes_all_simple(&TernaryForm::fermat_quartic(), 1).unwrap();
        assert!(!c.all_simple);
        assert_eq!((c.flex_degree, c.distinct_flex_points), (24, 12));
    }

    #[test]
    fn plucker() {
        assert_eq!(plucker_counts(4), (24, 28));
        assert_eq!(plucker_counts(3), (9, 0));
        assert_eq!(plucker_counts(5), (45, 120));
    }
}
