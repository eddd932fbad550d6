mod common;

use common::oracle::{self, q as rat};
use common::*;
use lqb::exterior::{primal_contraction_operator, Multivector, SpaceId, Tensor};
use lqb::lie::{ad_extension, boundary_operator, coad_extension, d_operator, BracketTable, Schouten};
use lqb::quasi::*;
use lqb::scalar::{frac, int};
use lqb::{Error, QuasiLieBialgebra};

fn exact(mu: BracketTable, r: Multivector) -> QuasiLieBialgebra {
    from_r_matrix(&mu, &r).unwrap()
}

/// Valid structures beyond the catalog: non-unimodular, nilpotent and 4-dimensional.
fn extra_fixtures() -> Vec<(&'static str, QuasiLieBialgebra)> {
    vec![
        ("book y^z", exact(book(), blades(g(3), &[(6, 1)]))),
        ("book x^y + y^z", exact(book(), blades(g(3), &[(3, 1), (6, 1)]))),
        ("aff1r x^y", exact(aff1r(), blades(g(3), &[(3, 1)]))),
        ("heisenberg x^z + y^z", exact(heisenberg(), blades(g(3), &[(5, 1), (6, 1)]))),
        ("gl2", exact(gl2(), gl2_r())),
    ]
}

fn all_fixtures() -> Vec<(String, QuasiLieBialgebra)> {
    let mut v: Vec<(String, QuasiLieBialgebra)> = CATALOG.iter().map(|n| (n.to_string(), catalog(n))).collect();
    v.extend(extra_fixtures().into_iter().map(|(n, q)| (n.to_string(), q)));
    v
}

#[test]
fn validate_passes_on_all_fixtures() {
    for (name, q) in all_fixtures() {
        let r = validate(&q);
        assert!(r.passed(), "{name}: {}", r.failure_summary());
    }
}

#[test]
fn trivial_structure_is_valid() {
    let q = QuasiLieBialgebra::trivial(BracketTable::zero(g(2))).unwrap();
    assert!(validate(&q).passed());
    assert!(q.is_bialgebra());
    let q = QuasiLieBialgebra::trivial(sl2()).unwrap();
    assert!(validate(&q).passed());
}

#[test]
fn constructor_rejects_inconsistent_spaces_and_grades() {
    let gamma = BracketTable::zero(SpaceId::Dual(3));
    let phi2 = e_wedge_f();
    assert!(matches!(QuasiLieBialgebra::new(sl2(), gamma.clone(), phi2), Err(Error::GradeMismatch { expected: 3 })));
    assert!(QuasiLieBialgebra::new(sl2(), BracketTable::zero(g(3)), Multivector::zero(g(3))).is_err());
    assert!(QuasiLieBialgebra::new(sl2(), gamma, Multivector::zero(g(2))).is_err());
    assert!(QuasiLieBialgebra::trivial(sl2()).unwrap().with_names(names(&["a", "b"])).is_err());
}

#[test]
fn zeroing_phi_on_sl2_is_still_valid() {
    // Every trivector of sl2 is ad-invariant and Λ⁴ = 0, so the phi axioms
    // cannot distinguish phi from 0.
    let q = sl2_exact();
    let zeroed = q.with_phi(Multivector::zero(g(3))).unwrap();
    assert!(validate(&zeroed).passed());
    assert_eq!(zeroed.gamma(), catalog("sl2-bialgebra").gamma());
    for c in [-3, 1, 7] {
        let p = mv(g(3), &[(&[H, E, F], int(c))]);
        assert!(validate(&q.with_phi(p).unwrap()).passed());
    }
}

#[test]
fn zeroing_phi_on_non_unimodular_fixture_breaks_the_cojacobi_axiom() {
    let q = catalog("aff1r-exact");
    assert!(!q.phi().is_zero());
    let r = validate(&q.with_phi(Multivector::zero(g(3))).unwrap());
    assert!(!r.passed());
    let item = r.item("cojacobi_controlled_by_phi").unwrap();
    assert!(!item.passed);
    assert!(item.failure.is_some());
    assert!(r.item("mu_jacobi").unwrap().passed);
    assert!(r.item("gamma_cocycle").unwrap().passed);
    assert!(!r.item("mixed_jacobi").unwrap().passed || !r.item("dual_jacobi_primal_component").unwrap().passed);
}

#[test]
fn corrupting_mu_or_gamma_is_reported() {
    let q = sl2_exact();
    let mut mu = q.mu().clone();
    mu.add_constant(E, F, E, int(1));
    let r = validate(&q.with_mu(mu).unwrap());
    assert!(!r.item("mu_jacobi").unwrap().passed);
    let skipped = r.item("cojacobi_matches_component_relations").unwrap();
    assert!(skipped.note.is_some());

    let mut gamma = q.gamma().clone();
    gamma.add_constant(E, F, H, int(1));
    let r = validate(&q.with_gamma(gamma).unwrap());
    assert!(r.item("mu_jacobi").unwrap().passed);
    assert!(!r.item("gamma_cocycle").unwrap().passed);
}

#[test]
fn validation_report_records_both_sides_of_first_failure() {
    let q = catalog("aff1r-exact").with_phi(Multivector::zero(g(3))).unwrap();
    let r = validate(&q);
    let f = r.failed_items().next().unwrap().failure.clone().unwrap();
    assert_ne!(f.lhs, f.rhs);
    assert!(f.at.contains('='), "{}", f.at);
    assert!(r.failure_summary().contains(&r.failed_items().next().unwrap().name));
}

#[test]
fn zero_r_gives_the_trivial_structure() {
    let q = exact(sl2(), Multivector::zero(g(3)));
    assert!(q.gamma().is_zero());
    assert!(q.phi().is_zero());
}

#[test]
fn from_r_matrix_checks_preconditions() {
    let non_lie = table(3, &[(0, 1, 2, 1), (0, 2, 1, 1), (1, 2, 1, 1)]);
    assert!(matches!(from_r_matrix(&non_lie, &e_wedge_f()), Err(Error::NotLie { .. })));
    assert!(from_r_matrix(&sl2(), &Multivector::basis(g(3), 0)).is_err());
}

#[test]
fn exact_structures_satisfy_boundary_of_phi_in_image_of_gamma() {
    // ∂_μ φ = −γ(∂_μ r)
    let cases = [
        (sl2(), e_wedge_f()),
        (book(), blades(g(3), &[(3, 1), (6, 1)])),
        (aff1r(), blades(g(3), &[(3, 1), (5, 1)])),
        (heisenberg(), blades(g(3), &[(3, 1), (5, 2)])),
        (gl2(), gl2_r()),
    ];
    for (mu, r) in cases {
        let q = exact(mu.clone(), r.clone());
        let del = boundary_operator(&mu);
        let lhs = del.apply(q.phi());
        let rhs = -&q.cocycle(&del.apply(&r));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn cocycle_is_d_gamma_on_vectors() {
    for (name, q) in all_fixtures() {
        let d = d_operator(q.gamma());
        for i in 0..q.dim() {
            let x = Multivector::basis(q.primal(), i);
            assert_eq!(d.apply(&x), q.cocycle(&x), "{name} e{i}");
        }
    }
}

#[test]
fn quasitriangular_rejects_non_invariant_symmetric_part() {
    let mut r = Tensor::zero(3, 2);
    r.add(vec![E, F], int(1));
    match from_quasitriangular(&sl2(), &r) {
        Err(Error::NotInvariant { antisymmetric_invariant, .. }) => assert!(!antisymmetric_invariant),
        other => panic!("expected NotInvariant, got {other:?}"),
    }
}

#[test]
fn quasitriangular_flags_invariant_antisymmetric_part() {
    // r = e⊗e: a = 0 is invariant, s = e⊗e is not.
    let mut r = Tensor::zero(3, 2);
    r.add(vec![E, E], int(1));
    match from_quasitriangular(&sl2(), &r) {
        Err(Error::NotInvariant { antisymmetric_invariant, .. }) => assert!(antisymmetric_invariant),
        other => panic!("expected NotInvariant, got {other:?}"),
    }
}

#[test]
fn quasitriangular_with_zero_symmetric_part_is_the_exact_structure() {
    let mut r = Tensor::zero(3, 2);
    r.add(vec![E, F], int(1));
    r.add(vec![F, E], int(-1));
    let q = from_quasitriangular(&sl2(), &r).unwrap();
    assert_eq!(q, exact(sl2(), e_wedge_f()));
}

/// `[s12,s13] + [s12,s23] + [s13,s23]` from raw constants.
#[allow(clippy::needless_range_loop)]
fn cyb_oracle(k: &oracle::Constants, s: &[Vec<oracle::Q>]) -> Vec<Vec<Vec<oracle::Q>>> {
    let n = k.n;
    let z = rat(0);
    let mut t = vec![vec![vec![z.clone(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let c = &s[i][j] * &s[a][b];
                    if c == z {
                        continue;
                    }
                    for m in 0..n {
                        t[m][j][b] += &c * &k.c[i][a][m];
                        t[i][m][b] += &c * &k.c[j][a][m];
                        t[i][a][m] += &c * &k.c[j][b][m];
                    }
                }
            }
        }
    }
    t
}

#[test]
fn quasitriangular_phi_differs_from_exact_by_symmetric_term() {
    let q = catalog("sl2-quasitriangular");
    let base = exact(sl2(), e_wedge_f());
    assert_eq!(q.gamma(), base.gamma());
    let diff = q.phi() - base.phi();
    let k = oracle::Constants::sl2();
    let mut s = vec![vec![rat(0); 3]; 3];
    s[H][H] = rat(1);
    s[E][F] = rat(2);
    s[F][E] = rat(2);
    let t = cyb_oracle(&k, &s);
    // CYB of an invariant symmetric tensor is totally antisymmetric.
    assert_eq!(t[H][E][F], -t[E][H][F].clone());
    assert_eq!(t[H][E][F], t[E][F][H]);
    // −½[s,s] with [s,s] = 2 CYB(s)
    let expect = mv(g(3), &[(&[H, E, F], -t[H][E][F].clone())]);
    assert_eq!(diff, expect);
    assert_eq!(q.phi(), &mv(g(3), &[(&[H, E, F], int(3))]));
    assert!(validate(&q).passed());
}

#[test]
fn bv_prerequisite_on_abelian_is_zero() {
    let b = bv_prerequisite(&catalog("abelian2"));
    assert_eq!(b.x0, Some(Multivector::zero(g(2))));
    assert_eq!(b.kernel_dim, 2);
}

#[test]
fn bv_prerequisite_on_exact_sl2_admits_minus_h() {
    let q = sl2_exact();
    let b = bv_prerequisite(&q);
    assert!(b.target.is_zero());
    let x0 = b.x0.clone().expect("solvable");
    assert!(b.is_solution(&q, &x0));
    assert_eq!(b.kernel_dim, 1);
    let minus_h = mv(g(3), &[(&[H], int(-1))]);
    assert!(b.is_solution(&q, &minus_h));
    // −∂_μ r = h here: the boundary carries the sign (−1)^{1+2}.
    let del_r = boundary_operator(&sl2()).apply(&e_wedge_f());
    assert_eq!(del_r, minus_h);
    assert!(b.is_solution(&q, &-&del_r));
}

#[test]
fn bv_prerequisite_finds_minus_boundary_of_r_for_exact_structures() {
    let cases = [(book(), blades(g(3), &[(3, 1), (6, 1)])), (aff1r(), blades(g(3), &[(3, 1), (5, 1)])), (gl2(), gl2_r())];
    for (mu, r) in cases {
        let q = exact(mu.clone(), r.clone());
        let b = bv_prerequisite(&q);
        let x0 = b.x0.clone().expect("exact structures are solvable");
        assert_eq!(q.cocycle(&x0), boundary_operator(&mu).apply(q.phi()));
        assert!(b.is_solution(&q, &-&boundary_operator(&mu).apply(&r)));
    }
}

#[test]
fn bv_prerequisite_reports_unsolvable_systems() {
    // γ = 0 on aff1r while ∂_μ(x∧y∧z) ≠ 0.
    let q = QuasiLieBialgebra::trivial(aff1r()).unwrap().with_phi(blades(g(3), &[(7, 1)])).unwrap();
    let b = bv_prerequisite(&q);
    assert!(!b.target.is_zero());
    assert!(b.x0.is_none());
    assert!(b.operators.is_none());
}

#[test]
fn bv_operators_satisfy_quasi_bv_relations() {
    for (name, q) in all_fixtures() {
        let b = bv_prerequisite(&q);
        let ops = b.operators.expect("solvable");
        assert_eq!(ops.delta, d_operator(q.mu()), "{name}");
        let lap2 = &ops.laplace * &ops.laplace;
        assert_eq!(lap2, ops.delta.anticommutator(&ops.phi), "{name}: Δ² = [δ, Φ]");
        assert!(ops.laplace.anticommutator(&ops.phi).is_zero(), "{name}: [Δ, Φ] = 0");
        assert!((&ops.delta * &ops.delta).is_zero());
    }
}

#[test]
fn relations_suite_passes_on_all_fixtures() {
    for (name, q) in all_fixtures() {
        let r = relations_suite(&q);
        assert!(r.passed(), "{name}: {}", r.failure_summary());
        assert!(r.items.len() >= 24);
    }
}

#[test]
fn relations_suite_detects_a_dropped_phi() {
    let q = catalog("aff1r-exact").with_phi(Multivector::zero(g(3))).unwrap();
    let r = relations_suite(&q);
    assert!(!r.passed());
    assert!(r.item("flat_boundaries").is_some());
}

#[test]
fn printed_sign_of_gamma_contraction_relation_fails() {
    // The anticommutator of ∂_γ and i_x equals +i_{γ(x)}, not −i_{γ(x)}.
    let q = sl2_exact();
    let del_gamma = boundary_operator(q.gamma());
    let mut printed_fails = false;
    for i in 0..3 {
        let x = Multivector::basis(g(3), i);
        let lhs = del_gamma.anticommutator(&primal_contraction_operator(&x));
        let ig = primal_contraction_operator(&q.cocycle(&x));
        assert_eq!(lhs, ig, "e{i}");
        printed_fails |= lhs != -&ig;
    }
    assert!(printed_fails);
    assert!(relations_suite(&q).item("boundary_gamma_contraction_anticommutator").unwrap().passed);
}

#[test]
fn differentials_of_gamma_square_to_zero_when_phi_vanishes() {
    let q = catalog("sl2-bialgebra");
    let (dg, bg) = (d_operator(q.gamma()), boundary_operator(q.gamma()));
    assert!((&dg * &dg).is_zero());
    assert!((&bg * &bg).is_zero());
    let q = catalog("aff1r-exact");
    let dg = d_operator(q.gamma());
    assert!(!(&dg * &dg).is_zero());
}

#[test]
fn laplacian_checks_pass_on_all_fixtures() {
    for (name, q) in all_fixtures() {
        let r = laplacian_checks(&q);
        assert!(r.passed(), "{name}: {}", r.failure_summary());
        assert_eq!(r.item("laplacian_bialgebra_closed_form").is_some(), q.is_bialgebra(), "{name}");
    }
}

#[test]
fn laplacian_of_bialgebra_is_half_difference_of_character_actions() {
    // [x,y] = y with r = x∧y: Λ³ = 0, so a bialgebra, with both characters nonzero.
    let q = exact(table(2, &[(0, 1, 1, 1)]), blades(g(2), &[(3, 1)]));
    assert!(q.is_bialgebra());
    let ch = characters(&q);
    assert!(!ch.xi_mu.is_zero());
    assert!(!ch.x_gamma.is_zero());
    let lhs = laplacian(&q);
    let a = ad_extension(q.mu(), &ch.x_gamma);
    let b = coad_extension(q.gamma(), &ch.xi_mu);
    assert_eq!(lhs, (&a - &b).scaled(&frac(1, 2)));
    for q in [catalog("sl2-bialgebra"), catalog("abelian2")] {
        let ch = characters(&q);
        let expect = (&ad_extension(q.mu(), &ch.x_gamma) - &coad_extension(q.gamma(), &ch.xi_mu)).scaled(&frac(1, 2));
        assert_eq!(laplacian(&q), expect);
    }
    assert!(laplacian(&catalog("abelian2")).is_zero());
}

#[test]
fn laplacian_is_a_derivation_commuting_with_boundary() {
    for (name, q) in all_fixtures() {
        let n = q.dim();
        let l = laplacian(&q);
        let del = boundary_operator(q.mu());
        assert_eq!(&l * &del, &del * &l, "{name}");
        let s = Schouten::new(q.mu());
        for xb in lqb::Blade::all(n) {
            let x = Multivector::from_blade(g(n), xb, int(1));
            let lx = l.apply(&x);
            assert!(lx.is_homogeneous_of(xb.grade()) || lx.is_zero());
            for yb in lqb::Blade::all(n) {
                let y = Multivector::from_blade(g(n), yb, int(1));
                assert_eq!(l.apply(&x.wedge(&y)), &lx.wedge(&y) + &x.wedge(&l.apply(&y)), "{name}");
                let xy = s.bracket(&x, &y);
                assert_eq!(l.apply(&xy), &s.bracket(&lx, &y) + &s.bracket(&x, &l.apply(&y)), "{name}");
            }
        }
    }
}

#[test]
fn characters_satisfy_the_character_relations() {
    // ad*_x ξ^μ = 0, i.e. d_μ ξ^μ = 0, and d_γ(x^γ) = −i_{ξ^μ}φ_D − 2∂_μφ_D.
    for (name, q) in all_fixtures() {
        let ch = characters(&q);
        assert!(d_operator(q.mu()).apply(&ch.xi_mu).is_zero(), "{name}");
        let phi_d = q.double_phi();
        let lhs = d_operator(q.gamma()).apply(&ch.x_gamma);
        let mut rhs = -&lqb::exterior::contract_by_dual(&ch.xi_mu, &phi_d).unwrap();
        rhs -= &boundary_operator(q.mu()).apply(&phi_d).scaled(&int(2));
        assert_eq!(lhs, rhs, "{name}");
    }
}
