//! Exact recomputation of the numerical and combinatorial claims behind a
//! family of Xiao fibrations built from cyclic étale covers of
//! hyperelliptic curves.
//!
//! The crate is organised by subsystem:
//!
//! - [`monodromy`]: branched covers of the projective line given by
//!   permutation tuples; Riemann–Hurwitz genera, Galois closures and
//!   intermediate quotients.
//! - [`numerology`]: closed-form genus, self-intersection, moduli-dimension
//!   and bound computations for the parameters `(g, p)`.
//! - [`lattice`]: integer intersection forms on `D×D` and `D^(2)`, class
//!   determination, Hodge-index certificates, involutions and the quotient
//!   map between the two.
//! - [`invariants`]: double-cover invariants, Noether's formula and the
//!   Euler characteristic of fibrations with nodal fibres.
//! - [`quartic`]: exact plane-quartic certificates (Hessian, smoothness,
//!   simple flexes, Plücker counts).
//! - [`ledger`]: the claim ledger that ties everything together and renders
//!   JSON / markdown reports.
//!
//! Everything is exact: integers, `BigInt` and `BigRational`. No floating
//! point is used anywhere.

pub mod invariants;
pub mod lattice;
pub mod ledger;
pub mod linalg;
pub mod monodromy;
pub mod numerology;
pub mod quartic;

pub use num_rational::BigRational;

/// Render a rational as `n` or `n/d` in lowest terms.
pub fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
