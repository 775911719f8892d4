use std::error::Error;

use super::{ClaimReport, Status, VerifyOptions};
use crate::invariants;
use crate::lattice::{self, DivisorClass, IntersectionLattice};
use crate::monodromy::{build_dihedral_cover, Classification, GroupDescriptor};
use crate::numerology::{self, CoverParams, FiberClass};
use crate::quartic::{self, TernaryForm};

pub const CASES: [&str; 4] = ["g2p5", "g3p3", "g4p3", "general"];

type Outcome = Result<String, Box<dyn Error + Send + Sync>>;
type Compute = Box<dyn Fn(&VerifyOptions) -> Outcome + Send + Sync>;

enum Check {
    Compute(Compute),
    Assumed,
}

pub(super) struct Claim {
    id: String,
    anchor: &'static str,
    expected: String,
    check: Check,
}

impl Claim {
    fn new(
        id: impl Into<String>,
        anchor: &'static str,
        expected: impl Into<String>,
        f: impl Fn(&VerifyOptions) -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Self { id: id.into(), anchor, expected: expected.into(), check: Check::Compute(Box::new(f)) }
    }

    fn assumed(id: impl Into<String>, anchor: &'static str, expected: impl Into<String>) -> Self {
        Self { id: id.into(), anchor, expected: expected.into(), check: Check::Assumed }
    }

    pub(super) fn case(&self) -> &str {
        self.id.split('.').next().unwrap_or_default()
    }

    pub(super) fn run(&self, options: &VerifyOptions) -> ClaimReport {
        let (computed, status) = match &self.check {
            Check::Assumed => ("assumed".to_string(), Status::Assumed),
            Check::Compute(f) => match f(options) {
                Ok(v) if v == self.expected => (v, Status::Pass),
                Ok(v) => (v, Status::Fail),
                Err(e) => (format!("error: {e}"), Status::Fail),
            },
        };
        ClaimReport {
            claim_id: self.id.clone(),
            paper_anchor: self.anchor.to_string(),
            expected: self.expected.clone(),
            computed,
            status,
        }
    }
}

fn pair<A: std::fmt::Display, B: std::fmt::Display>((a, b): (A, B)) -> String {
    format!("({a}, {b})")
}

fn fiber_class(c: FiberClass) -> String {
    match c {
        FiberClass::Finite => "finite".into(),
        FiberClass::PositiveDimensional(Some(d)) => format!("positive-dimensional, dim {d}"),
        FiberClass::PositiveDimensional(None) => "positive-dimensional".into(),
    }
}

fn xiao(g_fiber: u64, q_rel: u64) -> Outcome {
    let r = numerology::xiao_report(g_fiber, q_rel)?;
    Ok(format!(
        "bound {}, is_xiao {}, meets_ceiling {}",
        crate::render_rational(&r.bound),
        r.is_xiao,
        r.meets_ceiling
    ))
}

/// The genus-3 product lattice, with `Δ²` shifted by one under the
/// corruption hook.
fn product_lattice_g3(options: &VerifyOptions) -> Result<IntersectionLattice, lattice::LatticeError> {
    let clean = lattice::product_with_diagonal_lattice(3)?;
    if !options.corrupt_gram {
        return Ok(clean);
    }
    let mut gram = clean.gram().rows().to_vec();
    gram[2][2] -= 1;
    IntersectionLattice::new(clean.basis_labels().to_vec(), gram, clean.canonical().clone())
}

fn x_p(options: &VerifyOptions) -> Result<(IntersectionLattice, DivisorClass), lattice::LatticeError> {
    let dxd = product_lattice_g3(options)?;
    let x = dxd.class_from_intersections(&[2, 2, 10])?;
    Ok((dxd, x))
}

/// Claims shared by the three cover families.
fn cover_claims(tag: &'static str, g: u64, p: u64, q_rel: u64, fiber: &str) -> Vec<Claim> {
    let g_c = p * (g - 1) + 1;
    let g_d = (p - 1) * (g - 1) / 2;
    let gamma2 = 8 - 2 * (g as i64 - 1) * (p as i64 - 2);
    vec![
        Claim::new(
            format!("{tag}.cover_genera"),
            "g_C = p(g-1)+1 and g_D = (p-1)(g-1)/2 for the cyclic and dihedral covers",
            pair((g_c, g_d)),
            move |_| Ok(pair(numerology::cover_genera(CoverParams::new(g, p)?))),
        ),
        Claim::new(
            format!("{tag}.monodromy.g_d"),
            "Riemann-Hurwitz for the degree-p cover D of the line with 2g+2 reflections",
            g_d.to_string(),
            move |_| Ok(build_dihedral_cover(g, p)?.rh_genus()?.to_string()),
        ),
        Claim::new(
            format!("{tag}.monodromy.g_c"),
            "the Galois closure of D over the line is the curve C",
            g_c.to_string(),
            move |o| Ok(build_dihedral_cover(g, p)?.galois_closure_genus(o.max_group_order)?.to_string()),
        ),
        Claim::new(
            format!("{tag}.monodromy.group"),
            "the monodromy group of D is dihedral of order 2p",
            format!("dihedral of order {}", 2 * p),
            move |o| {
                let group = build_dihedral_cover(g, p)?.generated_group(o.max_group_order)?;
                let name = match group.classification() {
                    Classification::Dihedral => "dihedral",
                    Classification::Cyclic => "cyclic",
                    Classification::Symmetric => "symmetric",
                    Classification::Other => "other",
                };
                Ok(format!("{name} of order {}", group.order()))
            },
        ),
        Claim::new(
            format!("{tag}.monodromy.rotation_quotient"),
            "C modulo the rotations is the hyperelliptic curve E of genus g",
            g.to_string(),
            move |o| {
                let cover = build_dihedral_cover(g, p)?;
                let group: GroupDescriptor = cover.generated_group(o.max_group_order)?;
                let rotations = group.rotation_subgroup().ok_or("no rotation subgroup")?;
                Ok(cover.quotient_genus(&rotations, o.max_group_order)?.to_string())
            },
        ),
        Claim::new(
            format!("{tag}.gamma_squared"),
            "self-intersection of C embedded in D x D: 8 - 2(g-1)(p-2)",
            gamma2.to_string(),
            move |_| {
                let closed = numerology::gamma_self_intersection(CoverParams::new(g, p)?);
                let adjunction = lattice::adjunction_inverse(g, p)?;
                if closed == adjunction {
                    Ok(closed.to_string())
                } else {
                    Ok(format!("closed form {closed}, adjunction {adjunction}"))
                }
            },
        ),
        Claim::new(
            format!("{tag}.psi_fibers"),
            "fibres of the map from (E, H') to the isomorphism class of D",
            fiber,
            move |_| Ok(fiber_class(numerology::psi_fiber_class(CoverParams::new(g, p)?))),
        ),
        Claim::assumed(
            format!("{tag}.q_rel"),
            "relative irregularity 2g_D, valid when some fibre E_t has indecomposable Jacobian",
            q_rel.to_string(),
        ),
        Claim::new(
            format!("{tag}.xiao"),
            "q_rel exceeds (g_C+1)/2 and equals its ceiling",
            format!(
                "bound {}, is_xiao true, meets_ceiling true",
                crate::render_rational(&num_rational::BigRational::new((g_c as i64 + 1).into(), 2.into()))
            ),
            move |_| xiao(g_c, q_rel),
        ),
    ]
}

pub(super) fn all() -> Vec<Claim> {
    let mut claims = Vec::new();
    claims.extend(general());
    claims.extend(cover_claims("g2p5", 2, 5, 4, "positive-dimensional, dim 1"));
    claims.extend(g2p5());
    claims.extend(cover_claims("g4p3", 4, 3, 6, "positive-dimensional, dim 1"));
    claims.extend(g4p3());
    // For (3, 3) the generic C has genus 7; the Xiao fibre is its normalization.
    claims.extend(cover_claims("g3p3", 3, 3, 4, "positive-dimensional, dim 2").into_iter().filter(|c| !c.id.ends_with(".xiao")));
    claims.extend(g3p3());
    claims
}

fn general() -> Vec<Claim> {
    vec![
        Claim::new(
            "general.adjunction_grid",
            "adjunction on D x D reproduces 8 - 2(g-1)(p-2)",
            "15/15",
            |_| {
                let mut agree = 0;
                for g in 2..=6u64 {
                    for p in [3u64, 5, 7] {
                        let expected = 8 - 2 * (g as i64 - 1) * (p as i64 - 2);
                        if lattice::adjunction_inverse(g, p)? == expected {
                            agree += 1;
                        }
                    }
                }
                Ok(format!("{agree}/15"))
            },
        ),
        Claim::new(
            "general.psi_gamma_sign",
            "finite fibres exactly when C has negative self-intersection, away from the boundary",
            "boundary cases [(5, 3)]",
            |_| {
                let mut boundary = Vec::new();
                for g in 2..=8u64 {
                    for p in [3u64, 5, 7, 11] {
                        let params = CoverParams::new(g, p)?;
                        let finite = numerology::psi_fiber_class(params) == FiberClass::Finite;
                        let negative = numerology::gamma_self_intersection(params) < 0;
                        if finite != negative {
                            boundary.push(pair((g, p)));
                        }
                    }
                }
                Ok(format!("boundary cases [{}]", boundary.join(", ")))
            },
        ),
        Claim::new(
            "general.plucker_quartic",
            "a smooth plane quartic has 24 flexes and 28 bitangents",
            "(24, 28)",
            |_| Ok(pair(quartic::plucker_counts(4))),
        ),
    ]
}

fn g2p5() -> Vec<Claim> {
    vec![
        Claim::new(
            "g2p5.brill_noether",
            "C in D x D lies in the Brill-Noether range q < g_a < 2q - 1",
            "true",
            |_| Ok(numerology::brill_noether_range(4, 6).to_string()),
        ),
        Claim::new(
            "g2p5.chevalley_weil",
            "character decomposition of the canonical space of C under the deck group",
            "dims [2, 1, 1, 1, 1], prym 4, sym2 invariant 2",
            |_| {
                let cw = numerology::chevalley_weil(CoverParams::new(2, 5)?);
                let dims: Vec<String> = cw.dims.iter().map(u64::to_string).collect();
                Ok(format!("dims [{}], prym {}, sym2 invariant {}", dims.join(", "), cw.prym_dim, cw.sym2_invariant_dim))
            },
        ),
    ]
}

fn g4p3() -> Vec<Claim> {
    vec![
        Claim::new(
            "g4p3.brill_noether",
            "C in D x D lies in the Brill-Noether range q < g_a < 2q - 1",
            "true",
            |_| Ok(numerology::brill_noether_range(6, 10).to_string()),
        ),
        Claim::new(
            "g4p3.x_p.class",
            "X_P is determined by its intersections (2, 2, 10) with D1, D2 and the diagonal",
            "(3, 3, -1)",
            |o| Ok(x_p(o)?.1.to_string()),
        ),
        Claim::new("g4p3.x_p.self_intersection", "X_P^2 on D x D", "2", |o| {
            let (dxd, x) = x_p(o)?;
            Ok(dxd.intersect(&x, &x)?.to_string())
        }),
        Claim::new("g4p3.x_p.arithmetic_genus", "arithmetic genus of X_P by adjunction", "10", |o| {
            let (dxd, x) = x_p(o)?;
            Ok(dxd.adjunction_genus(&x)?.to_string())
        }),
        Claim::new(
            "g4p3.x_p.hodge_identification",
            "H - X_P has square zero and is orthogonal to D1 + D2, hence vanishes",
            "true",
            |o| {
                let (dxd, x) = x_p(o)?;
                let h = dxd.class(&[("D1", 3), ("D2", 3), ("Delta", -1)]);
                let ample = dxd.class(&[("D1", 1), ("D2", 1)]);
                Ok(dxd.hodge_index_forced_zero(&(&h - &x), &ample)?.to_string())
            },
        ),
        Claim::new(
            "g4p3.tau.delta",
            "the involution of D^(2) sends delta to 8 D_P - 3 delta",
            "(8, -3)",
            |_| Ok(lattice::branch_class(3)?.tau_delta.to_string()),
        ),
        Claim::new(
            "g4p3.tau.involutive_isometry",
            "the completed involution squares to the identity and preserves the form",
            "true",
            |_| {
                let data = lattice::branch_class(3)?;
                let sym2 = lattice::symmetric_square_lattice(3)?;
                let square_is_identity = data.tau.mul(&data.tau) == lattice::IntMatrix::identity(2);
                Ok((square_is_identity && sym2.is_isometry(&data.tau)).to_string())
            },
        ),
        Claim::new(
            "g4p3.branch.class",
            "the branch curve B is the pullback of the image of the diagonal",
            "(16, 16, -6)",
            |_| Ok(lattice::branch_class(3)?.b.to_string()),
        ),
        Claim::new("g4p3.branch.arithmetic_genus", "arithmetic genus of B", "33", |_| {
            let dxd = lattice::product_with_diagonal_lattice(3)?;
            Ok(dxd.adjunction_genus(&lattice::branch_class(3)?.b)?.to_string())
        }),
        Claim::new(
            "g4p3.branch.genus_coincidence",
            "B double covers D branched at 2 x 28 bitangent points, so its genus equals p_a(B)",
            "33",
            |_| {
                let (_, bitangents) = quartic::plucker_counts(4);
                let dxd = lattice::product_with_diagonal_lattice(3)?;
                let p_a = dxd.adjunction_genus(&lattice::branch_class(3)?.b)?;
                let geometric = invariants::double_cover_curve_genus(3, 2 * bitangents)?;
                if geometric as i64 == p_a {
                    Ok(geometric.to_string())
                } else {
                    Ok(format!("geometric {geometric}, arithmetic {p_a}"))
                }
            },
        ),
        Claim::new("g4p3.surface.k2", "K_S^2 of the double cover of D x D branched along B", "216", |o| {
            let dxd = product_lattice_g3(o)?;
            let l = lattice::branch_class(3)?.l;
            let k = dxd.canonical().clone();
            let k2 = invariants::double_cover_k2(dxd.intersect(&k, &k)?, dxd.intersect(&l, &k)?, dxd.intersect(&l, &l)?);
            Ok(k2.to_string())
        }),
        Claim::new(
            "g4p3.surface.c2",
            "Euler number of the fibration over D with one node on each of the 24 flex fibres",
            "96",
            |_| {
                let (flexes, _) = quartic::plucker_counts(4);
                Ok(invariants::fibration_euler(3, 10, &vec![1; flexes as usize]).to_string())
            },
        ),
        Claim::new(
            "g4p3.surface.chi",
            "chi(O_S) from the double-cover formula agrees with Noether's formula",
            "26",
            |o| {
                let dxd = product_lattice_g3(o)?;
                let l = lattice::branch_class(3)?.l;
                let k = dxd.canonical().clone();
                let chi_base = (1 - 3i64) * (1 - 3i64);
                let by_cover = invariants::double_cover_chi(chi_base, dxd.intersect(&l, &k)?, dxd.intersect(&l, &l)?)?;
                let k2 = invariants::double_cover_k2(dxd.intersect(&k, &k)?, dxd.intersect(&l, &k)?, dxd.intersect(&l, &l)?);
                let by_noether = invariants::noether_chi(k2, invariants::fibration_euler(3, 10, &[1; 24]))?;
                if by_cover == by_noether {
                    Ok(by_cover.to_string())
                } else {
                    Ok(format!("double cover {by_cover}, Noether {by_noether}"))
                }
            },
        ),
        Claim::new(
            "g4p3.surface.profile",
            "invariants of the surface S with q_rel 6 over a base of genus 3",
            "q 9, chi 26, K^2 216, c2 96, p_g 34",
            |o| {
                let dxd = product_lattice_g3(o)?;
                let l = lattice::branch_class(3)?.l;
                let k = dxd.canonical().clone();
                let k2 = invariants::double_cover_k2(dxd.intersect(&k, &k)?, dxd.intersect(&l, &k)?, dxd.intersect(&l, &l)?);
                let c2 = invariants::fibration_euler(3, 10, &[1; 24]);
                let s = invariants::assemble_profile(6, 3, k2, c2)?;
                Ok(format!("q {}, chi {}, K^2 {}, c2 {}, p_g {}", s.q, s.chi_o, s.k2, s.c2, s.p_g))
            },
        ),
        Claim::new(
            "g4p3.quartic.flexes_simple",
            "all flexes of the plane quartic D are simple (checked on the Klein quartic)",
            "(true, 24)",
            |o| {
                let cert = quartic::flexes_all_simple(&TernaryForm::klein_quartic(), o.seed)?;
                Ok(pair((cert.all_simple, cert.flex_degree)))
            },
        ),
        Claim::assumed(
            "g4p3.quartic.flex_tangent_avoidance",
            "the base point P lies on no flex tangent of D",
            "P off all 24 flex tangents",
        ),
    ]
}

fn g3p3() -> Vec<Claim> {
    vec![
        Claim::new(
            "g3p3.nodal.class",
            "X_P on the genus-2 product is determined by its intersections (2, 2, 8)",
            "(3, 3, -1)",
            |_| Ok(lattice::product_with_diagonal_lattice(2)?.class_from_intersections(&[2, 2, 8])?.to_string()),
        ),
        Claim::new("g3p3.nodal.arithmetic_genus", "arithmetic genus of the nodal fibre", "7", |_| {
            let dxd = lattice::product_with_diagonal_lattice(2)?;
            let c = dxd.class_from_intersections(&[2, 2, 8])?;
            Ok(dxd.adjunction_genus(&c)?.to_string())
        }),
        Claim::new("g3p3.nodal.geometric_genus", "one simple node lowers the genus from 7 to 6", "6", |_| {
            Ok(numerology::geometric_genus(7, 1)?.to_string())
        }),
        Claim::new(
            "g3p3.xiao",
            "the normalized fibre of genus 6 with q_rel 4 is a Xiao fibre",
            "bound 7/2, is_xiao true, meets_ceiling true",
            |_| xiao(numerology::geometric_genus(7, 1)?, 4),
        ),
        Claim::new(
            "g3p3.xiao_generic_member",
            "the generic member, of genus 7 with q_rel 4, is not a Xiao fibre",
            "is_xiao false",
            |_| Ok(format!("is_xiao {}", numerology::xiao_report(7, 4)?.is_xiao)),
        ),
    ]
}
