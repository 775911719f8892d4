use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use xiao_ledger::invariants;
use xiao_ledger::lattice::{self, DivisorClass, IntMatrix};
use xiao_ledger::linalg::q;
use xiao_ledger::monodromy::{build_dihedral_cover, BranchedCover, Classification, GroupDescriptor, Permutation};
use xiao_ledger::quartic::{self, parse_form, TernaryForm, UnivariatePoly};

const MAX: usize = 5000;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

/// Tuples `(σ₁, …, σₖ)` with `σₖ = (σ₁⋯σₖ₋₁)⁻¹`, so the product is trivial.
fn closed_tuple(n: usize, k: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(permutation(n), k - 1).prop_map(move |mut v| {
        let product = v.iter().fold(Permutation::identity(n), |acc, s| acc.then(s));
        v.push(product.inverse());
        v
    })
}

/// `2g − 2 = N(2b − 2) + Σ N(1 − 1/ord σᵢ)` for a regular cover of degree N.
fn regular_cover_genus(order: usize, base_genus: u64, orders: &[usize]) -> BigRational {
    let n = BigRational::from_integer(BigInt::from(order));
    let mut twice = &n * q(2 * base_genus as i64 - 2);
    for &o in orders {
        twice += &n * (q(1) - BigRational::new(1.into(), BigInt::from(o)));
    }
    (twice + q(2)) / q(2)
}

proptest! {
    #[test]
    fn generated_group_is_conjugation_invariant(
        gens in prop::collection::vec(permutation(5), 1..4),
        g in permutation(5),
    ) {
        let group = GroupDescriptor::generated_by(5, &gens, MAX).unwrap();
        let conj: Vec<_> = gens.iter().map(|s| s.conjugate_by(&g)).collect();
        let image = GroupDescriptor::generated_by(5, &conj, MAX).unwrap();
        prop_assert_eq!(group.order(), image.order());
        prop_assert_eq!(group.classification(), image.classification());
        for h in group.elements() {
            prop_assert!(image.contains(&h.conjugate_by(&g)));
        }
    }

    #[test]
    fn galois_closure_matches_regular_cover_formula(
        (n, tuple) in (2usize..=4, 3usize..=5)
            .prop_flat_map(|(n, k)| closed_tuple(n, k).prop_map(move |t| (n, t)))
    ) {
        let branches: Vec<_> = tuple.into_iter().filter(|s| !s.is_identity()).collect();
        // Intransitive or empty tuples do not define a connected cover.
        let Ok(cover) = BranchedCover::new(n, 0, branches.clone()) else {
            return Ok(());
        };
        let group = cover.generated_group(MAX).unwrap();
        let orders: Vec<usize> = branches.iter().map(Permutation::order).collect();
        let expected = regular_cover_genus(group.order(), 0, &orders);
        let closure = cover.galois_closure_genus(MAX).unwrap();
        prop_assert_eq!(q(closure as i64), expected);
    }

    #[test]
    fn dihedral_grid(g in 2u64..=8, p in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
        let cover = build_dihedral_cover(g, p).unwrap();
        prop_assert_eq!(cover.rh_genus().unwrap(), (p - 1) * (g - 1) / 2);
        prop_assert_eq!(cover.galois_closure_genus(MAX).unwrap(), p * (g - 1) + 1);
        let group = cover.generated_group(MAX).unwrap();
        prop_assert_eq!(group.classification(), Classification::Dihedral);
        prop_assert_eq!(group.order(), 2 * p as usize);
        let rotations = group.rotation_subgroup().unwrap();
        prop_assert_eq!(cover.quotient_genus(&rotations, MAX).unwrap(), g);
    }

    #[test]
    fn class_round_trip(g in 2u64..=6, coeffs in prop::collection::vec(-100i64..=100, 3)) {
        let dxd = lattice::product_with_diagonal_lattice(g).unwrap();
        let c = DivisorClass::new(coeffs.clone());
        prop_assert_eq!(dxd.class_from_intersections(&dxd.pairings(&c).unwrap()).unwrap(), c);
        let sym2 = lattice::symmetric_square_lattice(g).unwrap();
        let c = DivisorClass::new(coeffs[..2].to_vec());
        prop_assert_eq!(sym2.class_from_intersections(&sym2.pairings(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn projection_formula_on_random_classes(
        g in 2u64..=6,
        x in prop::collection::vec(-20i64..=20, 3),
        y in prop::collection::vec(-20i64..=20, 2),
    ) {
        let phi = lattice::phi_morphism(g).unwrap();
        let (x, y) = (DivisorClass::new(x), DivisorClass::new(y));
        prop_assert_eq!(
            phi.target().intersect(&phi.push(&x), &y).unwrap(),
            phi.source().intersect(&x, &phi.pull(&y)).unwrap()
        );
        // pulling back multiplies intersections by the degree
        prop_assert_eq!(
            phi.source().intersect(&phi.pull(&y), &phi.pull(&y)).unwrap(),
            2 * phi.target().intersect(&y, &y).unwrap()
        );
    }

    #[test]
    fn parse_display_round_trip(coeffs in prop::collection::vec((-30i64..=30, 1i64..=6), 15)) {
        let mut terms = Vec::new();
        let mut idx = 0;
        for i in 0..=4u32 {
            for j in 0..=4 - i {
                let (n, d) = coeffs[idx];
                idx += 1;
                terms.push(([i, j, 4 - i - j], BigRational::new(n.into(), d.into())));
            }
        }
        let Ok(f) = TernaryForm::new(terms) else { return Ok(()); };
        prop_assert_eq!(parse_form(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn resultant_is_product_of_root_differences(
        a in prop::collection::vec(-6i64..=6, 4),
        b in prop::collection::vec(-6i64..=6, 6),
        lead in 1i64..=3,
    ) {
        let f = UnivariatePoly::from_roots(&a.iter().map(|&r| q(r)).collect::<Vec<_>>()).scale(&q(lead));
        let g = UnivariatePoly::from_roots(&b.iter().map(|&r| q(r)).collect::<Vec<_>>());
        let mut expected = q(lead).pow(6);
        for &x in &a {
            for &y in &b {
                expected *= q(x - y);
            }
        }
        prop_assert_eq!(quartic::resultant(&f, &g).unwrap(), expected);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        f in prop::collection::vec(-5i64..=5, 2..5),
        g in prop::collection::vec(-5i64..=5, 2..5),
        planted in prop::collection::vec(-5i64..=5, 2..4),
        plant in any::<bool>(),
    ) {
        let (mut f, mut g) = (UnivariatePoly::from_i64(&f), UnivariatePoly::from_i64(&g));
        let h = UnivariatePoly::from_i64(&planted);
        prop_assume!(!f.is_zero() && !g.is_zero());
        if plant && h.degree().unwrap_or(0) >= 1 {
            f = f.mul(&h);
            g = g.mul(&h);
        }
        let r = quartic::resultant(&f, &g).unwrap();
        let common = f.gcd(&g).degree().unwrap_or(0) >= 1;
        prop_assert_eq!(r == q(0), common);
    }
}

#[test]
fn lattices_have_hodge_signature() {
    for g in 2..=6 {
        let dxd = lattice::product_with_diagonal_lattice(g).unwrap();
        assert_eq!(dxd.signature(), (1, 2, 0));
        let sym2 = lattice::symmetric_square_lattice(g).unwrap();
        assert_eq!(sym2.signature(), (1, 1, 0));
    }
}

#[test]
fn projection_formula_on_basis_pairs() {
    for g in 2..=6 {
        let phi = lattice::phi_morphism(g).unwrap();
        let (s, t) = (phi.source(), phi.target());
        for i in 0..s.rank() {
            for j in 0..t.rank() {
                let (x, y) = (s.basis(i), t.basis(j));
                assert_eq!(t.intersect(&phi.push(&x), &y), s.intersect(&x, &phi.pull(&y)));
            }
        }
        assert_eq!(phi.pushforward_matrix().mul(phi.pullback_matrix()), IntMatrix::scalar(2, 2));
    }
}

#[test]
fn involution_squares_to_identity() {
    let data = lattice::branch_class(3).unwrap();
    let sym2 = lattice::symmetric_square_lattice(3).unwrap();
    assert_eq!(data.tau.mul(&data.tau), IntMatrix::identity(2));
    assert!(sym2.is_isometry(&data.tau));
    assert_eq!(data.tau.apply(sym2.canonical()), *sym2.canonical());
}

#[test]
fn hyperelliptic_branch_curve_by_monodromy() {
    // B → D is a double cover branched at 56 points of a genus-3 curve.
    let t = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
    let cover = BranchedCover::new(2, 3, vec![t; 56]).unwrap();
    assert_eq!(cover.rh_genus().unwrap(), 33);
    assert_eq!(invariants::double_cover_curve_genus(3, 56).unwrap(), 33);
    let dxd = lattice::product_with_diagonal_lattice(3).unwrap();
    assert_eq!(dxd.adjunction_genus(&lattice::branch_class(3).unwrap().b).unwrap(), 33);
}

fn symmetric_group(n: usize) -> Vec<Permutation> {
    // Every map {0..n} → {0..n}, keeping the bijections.
    (0..n.pow(n as u32))
        .filter_map(|mut code| {
            let images = (0..n)
                .map(|_| {
                    let digit = (code % n) as u32;
                    code /= n;
                    digit
                })
                .collect();
            Permutation::new(images).ok()
        })
        .collect()
}

#[test]
fn exhaustive_pairs_match_regular_cover_formula() {
    for n in 2..=4 {
        let all = symmetric_group(n);
        assert_eq!(all.len(), (1..=n).product::<usize>());
        let mut checked = 0;
        for s in &all {
            for t in &all {
                let third = s.then(t).inverse();
                let branches: Vec<_> =
                    [s.clone(), t.clone(), third].into_iter().filter(|p| !p.is_identity()).collect();
                let Ok(cover) = BranchedCover::new(n, 0, branches.clone()) else { continue };
                let group = cover.generated_group(MAX).unwrap();
                let orders: Vec<_> = branches.iter().map(Permutation::order).collect();
                assert_eq!(
                    q(cover.galois_closure_genus(MAX).unwrap() as i64),
                    regular_cover_genus(group.order(), 0, &orders)
                );
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn flex_answer_is_seed_independent() {
    for seed in 0..5 {
        let klein = quartic::flexes_all_simple(&TernaryForm::klein_quartic(), seed).unwrap();
        assert!(klein.all_simple);
        assert_eq!(klein.distinct_flex_points, 24);
        let fermat = quartic::flexes_all_simple(&TernaryForm::fermat_quartic(), seed).unwrap();
        assert!(!fermat.all_simple);
        assert_eq!(fermat.distinct_flex_points, 12);
    }
}
