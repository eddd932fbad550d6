mod common;

use common::*;
use lqb::double::*;
use lqb::exterior::{Multivector, SpaceId};
use lqb::lie::{coad_action, jacobi_defect, schouten, BracketTable};
use lqb::quasi::{from_r_matrix, validate};
use lqb::scalar::{frac, int, Scalar};
use lqb::{Error, Matrix, QuasiLieBialgebra};
use proptest::prelude::*;

fn fixtures() -> Vec<(String, QuasiLieBialgebra)> {
    let mut v: Vec<_> = CATALOG.iter().map(|n| (n.to_string(), catalog(n))).collect();
    v.push(("book".into(), from_r_matrix(&book(), &blades(g(3), &[(3, 1), (6, 1)])).unwrap()));
    v
}

fn double_is_consistent(q: &QuasiLieBialgebra) -> bool {
    let d = assemble(q);
    jacobi_defect(d.bracket()).is_zero() && verify_invariance(&d)
}

#[test]
fn double_of_valid_structure_is_lie_and_invariant() {
    for (name, q) in fixtures() {
        let d = build_double(&q).unwrap();
        assert_eq!(d.dim(), 2 * q.dim());
        assert!(jacobi_defect(d.bracket()).is_zero(), "{name}");
        assert!(verify_invariance(&d), "{name}");
        assert!(invariance_defect(&d).is_none());
        assert_eq!(d.pairing(), hyperbolic_pairing(q.dim()));
    }
}

#[test]
fn abelian_structure_has_abelian_double() {
    let d = build_double(&catalog("abelian2")).unwrap();
    assert!(d.bracket().is_zero());
}

#[test]
fn double_restricts_to_mu_on_g() {
    for (name, q) in fixtures() {
        let n = q.dim();
        let d = assemble(&q);
        for i in 0..n {
            for j in 0..n {
                let b = d.bracket().bracket(i, j).clone().with_space(SpaceId::Primal(2 * n));
                let expect = lqb::exterior::embed_primal(q.mu().bracket(i, j));
                assert_eq!(b.with_space(SpaceId::Double(n)), expect, "{name}");
            }
        }
    }
}

#[test]
fn mixed_bracket_is_sum_of_coadjoint_actions() {
    // [x, ξ]_D = −ad^{γ*}_ξ x + ad^{μ*}_x ξ
    for (name, q) in fixtures() {
        let n = q.dim();
        let d = assemble(&q);
        for i in 0..n {
            for a in 0..n {
                let x = Multivector::basis(q.primal(), i);
                let xi = Multivector::basis(q.dual(), a);
                let on_g = -&coad_action(q.gamma(), &xi).apply_vector(&x);
                let on_dual = coad_action(q.mu(), &x).apply_vector(&xi);
                let expect = &lqb::exterior::embed_primal(&on_g) + &lqb::exterior::embed_dual(&on_dual);
                assert_eq!(d.bracket().bracket(i, n + a).clone().with_space(SpaceId::Double(n)), expect, "{name}");
            }
        }
    }
}

#[test]
fn dual_bracket_of_exact_sl2_carries_phi() {
    // [e*, f*]_D = γ(e*, f*) + i_{e*∧f*}(e∧f∧h), with γ(e*, f*) = 0.
    let q = sl2_exact();
    let d = assemble(&q);
    let b = d.bracket().bracket(3 + E, 3 + F).clone().with_space(SpaceId::Double(3));
    assert_eq!(b, Multivector::basis(SpaceId::Double(3), H));
    assert_eq!(q.phi_pair(&Multivector::basis(q.dual(), E), &Multivector::basis(q.dual(), F)), Multivector::basis(g(3), H));
}

#[test]
fn build_double_rejects_invalid_structure() {
    let q = catalog("aff1r-exact").with_phi(Multivector::zero(g(3))).unwrap();
    match build_double(&q) {
        Err(Error::InvalidStructure { failed }) => assert!(failed.contains("cojacobi_controlled_by_phi"), "{failed}"),
        other => panic!("expected InvalidStructure, got {other:?}"),
    }
    assert!(!double_is_consistent(&q));
}

#[test]
fn perturbed_double_fails_invariance_with_witness() {
    let d = build_double(&sl2_exact()).unwrap();
    let mut t = d.bracket().clone();
    t.add_constant(0, 3, 1, int(1));
    let p = DoubleAlgebra::from_bracket(t, d.names().clone()).unwrap();
    assert!(!verify_invariance(&p));
    let w = invariance_defect(&p).unwrap();
    assert_ne!(w.value, int(0));
    let [u, v, x] = w.triple;
    let (bu, bv, bx) = (p.basis(u), p.basis(v), p.basis(x));
    let lhs = p.pair(&p.bracket().bracket_vectors(&bu, &bv), &bx) + p.pair(&bv, &p.bracket().bracket_vectors(&bu, &bx));
    assert_eq!(lhs, w.value);
}

#[test]
fn corruptions_fail_validate_and_double_together() {
    let sl2q = sl2_exact();
    let mut mu = sl2q.mu().clone();
    mu.add_constant(E, F, E, int(1));
    let mut gamma = sl2q.gamma().clone();
    gamma.add_constant(E, F, H, int(1));
    let aff = catalog("aff1r-exact");
    let cases = [
        ("mu", sl2q.with_mu(mu).unwrap()),
        ("gamma", sl2q.with_gamma(gamma).unwrap()),
        ("phi", aff.with_phi(Multivector::zero(g(3))).unwrap()),
    ];
    for (what, q) in cases {
        assert!(!validate(&q).passed(), "{what}");
        assert!(!double_is_consistent(&q), "{what}");
    }
}

fn perturbation() -> impl Strategy<Value = (usize, usize, usize, usize, i64)> {
    (0usize..3, 0usize..3, 0usize..3, 0usize..3, -2i64..=2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validate_agrees_with_double_under_random_corruption(
        which in 0usize..3,
        fixture in prop::sample::select(vec!["sl2-exact-r", "aff1r-exact", "heisenberg3", "sl2-quasitriangular"]),
        (i, j, k, l, c) in perturbation(),
    ) {
        let q = catalog(fixture);
        let q = match which {
            0 => {
                let mut mu = q.mu().clone();
                if i != j { mu.add_constant(i.min(j), i.max(j), k, int(c)); }
                q.with_mu(mu).unwrap()
            }
            1 => {
                let mut gamma = q.gamma().clone();
                if i != j { gamma.add_constant(i.min(j), i.max(j), k, int(c)); }
                q.with_gamma(gamma).unwrap()
            }
            _ => {
                let _ = l;
                let p = &q.phi().clone() + &mv(g(3), &[(&[0, 1, 2], int(c))]);
                q.with_phi(p).unwrap()
            }
        };
        prop_assert_eq!(validate(&q).passed(), double_is_consistent(&q));
    }
}

#[test]
fn g_is_a_manin_subalgebra_of_every_double() {
    for (name, q) in fixtures() {
        let d = assemble(&q);
        let w = ManinPairWitness::evaluate(&d, primal_subspace(q.dim()));
        assert!(w.closed && w.isotropic && w.maximal, "{name}");
        assert!(verify_manin_pair(&d, &w).passed());
    }
}

#[test]
fn dual_subspace_is_closed_only_without_phi() {
    let d = assemble(&sl2_exact());
    let w = ManinPairWitness::evaluate(&d, dual_subspace(3));
    assert!(w.isotropic && w.maximal);
    assert!(!w.closed);
    assert!(!verify_manin_pair(&d, &w).item("closed").unwrap().passed);
    let d = assemble(&catalog("sl2-bialgebra"));
    let w = ManinPairWitness::evaluate(&d, dual_subspace(3));
    assert!(w.closed && w.isotropic && w.maximal);
}

#[test]
fn small_subspaces_are_not_maximal() {
    let d = assemble(&sl2_exact());
    let one = Matrix::from_rows(vec![primal_subspace(3).row(0).to_vec()]);
    let w = ManinPairWitness::evaluate(&d, one);
    assert!(w.isotropic && !w.maximal);
}

#[test]
fn canonical_r_is_half_sum_of_dual_pairs() {
    let q1 = QuasiLieBialgebra::trivial(BracketTable::zero(g(1))).unwrap();
    let d1 = assemble(&q1);
    assert_eq!(canonical_r(&d1), Multivector::from_indices(SpaceId::Double(1), &[0, 1], frac(1, 2)));
    let d2 = assemble(&catalog("abelian2"));
    let r = canonical_r(&d2);
    let mut expect = Multivector::from_indices(SpaceId::Double(2), &[0, 2], frac(1, 2));
    expect += &Multivector::from_indices(SpaceId::Double(2), &[1, 3], frac(1, 2));
    assert_eq!(r, expect);
    let d3 = assemble(&sl2_exact());
    let r = canonical_r(&d3);
    assert_eq!(r.len(), 3);
    assert!(r.terms().all(|(_, c)| *c == frac(1, 2)));
}

#[test]
fn exact_structure_on_the_double_validates() {
    for (name, q) in fixtures() {
        let d = build_double(&q).unwrap();
        let dq = double_qlb(&d).unwrap();
        assert_eq!(dq.dim(), 2 * q.dim());
        let r = validate(&dq);
        assert!(r.passed(), "{name}: {}", r.failure_summary());
    }
}

#[test]
fn double_phi_matches_direct_schouten_computation() {
    let d = build_double(&sl2_exact()).unwrap();
    let dq = double_qlb(&d).unwrap();
    let m = SpaceId::Primal(6);
    let table = d.bracket().with_space(m);
    let r = canonical_r(&d).with_space(m);
    let direct = schouten(&table, &r, &r).unwrap().scaled(&frac(-1, 2));
    assert_eq!(dq.phi(), &direct);
    let abelian = double_qlb(&build_double(&catalog("abelian2")).unwrap()).unwrap();
    assert!(abelian.gamma().is_zero() && abelian.phi().is_zero());
}

#[test]
fn canonical_complement_recovers_the_structure() {
    for (name, q) in fixtures() {
        let d = build_double(&q).unwrap();
        let back = from_manin_pair(&d, &dual_subspace(q.dim())).unwrap();
        assert_eq!(back.mu(), q.mu(), "{name}");
        assert_eq!(back.gamma(), q.gamma(), "{name}");
        assert_eq!(back.phi(), q.phi(), "{name}");
    }
}

fn graph_of_skew_map(n: usize, t: &[(usize, usize, i64)]) -> Matrix {
    // rows ξ^a + Σ_i t_{ai} e_i with t skew
    let mut rows = dual_subspace(n);
    for &(a, i, c) in t {
        rows.set(a, i, int(c));
        rows.set(i, a, int(-c));
    }
    rows
}

#[test]
fn twisted_complement_yields_a_valid_structure() {
    for q in [catalog("sl2-bialgebra"), sl2_exact(), catalog("aff1r-exact")] {
        let d = build_double(&q).unwrap();
        let c = graph_of_skew_map(3, &[(0, 1, 1), (1, 2, 2)]);
        let w = ManinPairWitness::evaluate(&d, c.clone());
        assert!(w.isotropic && w.maximal);
        let twisted = from_manin_pair(&d, &c).unwrap();
        assert_eq!(twisted.mu(), q.mu());
        assert!(twisted.gamma() != q.gamma() || twisted.phi() != q.phi());
        let r = validate(&twisted);
        assert!(r.passed(), "{}", r.failure_summary());
        assert!(double_is_consistent(&twisted));
    }
}

#[test]
fn non_isotropic_complement_is_rejected_with_witness() {
    let d = build_double(&sl2_exact()).unwrap();
    let mut c = dual_subspace(3);
    c.set(0, 0, int(1)); // e1 + ξ1
    match from_manin_pair(&d, &c) {
        Err(Error::NotIsotropic { pair, value }) => {
            assert_eq!(pair, [0, 0]);
            assert_eq!(value, "2");
        }
        other => panic!("expected NotIsotropic, got {other:?}"),
    }
}

#[test]
fn subspace_meeting_g_is_not_a_complement() {
    let d = build_double(&sl2_exact()).unwrap();
    let mut c = dual_subspace(3);
    let zero: Scalar = int(0);
    c.set(2, 5, zero);
    c.set(2, 2, int(1)); // replace ξ3 by e3: still isotropic
    assert!(matches!(from_manin_pair(&d, &c), Err(Error::NotComplementary)));
    assert!(from_manin_pair(&d, &primal_subspace(2)).is_err());
}
