use super::context::Ctx;
use super::relations::{dual_jacobi_dual_component, dual_jacobi_primal_component, mixed_jacobi};
use super::QuasiLieBialgebra;
use crate::exterior::{alt, Multivector, Tensor};
use crate::lie::apply_derivation;
use crate::report::{Check, CheckItem, ValidationReport};
use crate::scalar;

/// Checks the four axioms of a Lie quasi-bialgebra and cross-checks the
/// tensor forms of the last two against their component relations.
pub fn validate(q: &QuasiLieBialgebra) -> ValidationReport {
    let c = Ctx::new(q);
    let mut report = ValidationReport::new("axioms");
    let jacobi = mu_jacobi(&c);
    let cocycle = gamma_cocycle(&c);
    let cojacobi = cojacobi_controlled_by_phi(&c);
    let closed = phi_cojacobi_closed(&c);
    let r_mixed = mixed_jacobi(&c);
    let r_dual = dual_jacobi_dual_component(&c);
    let r_primal = dual_jacobi_primal_component(&c);
    let premises = jacobi.passed && cocycle.passed;
    let cross_cojacobi = equivalence(
        &c,
        "cojacobi_matches_component_relations",
        "the co-Jacobi axiom holds iff mixed_jacobi and dual_jacobi_dual_component hold",
        premises,
        &cojacobi,
        &[&r_mixed, &r_dual],
    );
    let cross_closed = equivalence(
        &c,
        "phi_closure_matches_component_relation",
        "the phi closure axiom holds iff dual_jacobi_primal_component holds",
        premises,
        &closed,
        &[&r_primal],
    );
    for item in [jacobi, cocycle, cojacobi, closed, r_mixed, r_dual, r_primal, cross_cojacobi, cross_closed] {
        report.push(item);
    }
    report
}

fn mu_jacobi(c: &Ctx) -> CheckItem {
    let mut k = Check::new("mu_jacobi", "mu(mu(x,y),z) + mu(mu(y,z),x) + mu(mu(z,x),y) = 0", c.names());
    let zero = Multivector::zero(c.g);
    for i in 0..c.n {
        for j in i + 1..c.n {
            for l in j + 1..c.n {
                let (x, y, z) = (c.e(i), c.e(j), c.e(l));
                let s = c.mu(&c.mu(&x, &y), &z) + c.mu(&c.mu(&y, &z), &x) + c.mu(&c.mu(&z, &x), &y);
                k.compare(|| c.names().tuple(c.g, &[i, j, l]), &s, &zero);
            }
        }
    }
    k.finish()
}

fn gamma_cocycle(c: &Ctx) -> CheckItem {
    let mut k = Check::new("gamma_cocycle", "gamma(mu(x,y)) = ad_x gamma(y) - ad_y gamma(x)", c.names());
    let images: Vec<Multivector> = (0..c.n).map(|i| c.q.cocycle(&c.e(i))).collect();
    for i in 0..c.n {
        for j in i + 1..c.n {
            let lhs = c.q.cocycle(&c.mu(&c.e(i), &c.e(j)));
            let rhs = apply_derivation(&c.ad_mu[i], &images[j]) - apply_derivation(&c.ad_mu[j], &images[i]);
            k.compare(|| format!("x={}, y={}", c.ne(i), c.ne(j)), &lhs, &rhs);
        }
    }
    k.finish()
}

/// `γ` applied to the first tensor slot.
fn gamma_first_slot(t: &Tensor, images: &[Tensor]) -> Tensor {
    t.apply_to_slot(0, 2, |a| images[a].clone())
}

fn cocycle_tensors(c: &Ctx) -> Vec<Tensor> {
    (0..c.n).map(|a| Tensor::from_multivector(&c.q.cocycle(&c.e(a)), 2)).collect()
}

fn cojacobi_controlled_by_phi(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "cojacobi_controlled_by_phi",
        "1/2 Alt((gamma x 1) gamma(x)) = ad_x phi in the tensor algebra",
        c.names(),
    );
    let images = cocycle_tensors(c);
    let half = scalar::frac(1, 2);
    for i in 0..c.n {
        let lifted = gamma_first_slot(&images[i], &images);
        let lhs = alt(&lifted).expect("rank 3").scaled(&half);
        let rhs = Tensor::from_multivector(&apply_derivation(&c.ad_mu[i], c.q.phi()), 3);
        k.compare(|| format!("x={}", c.ne(i)), &lhs, &rhs);
    }
    k.finish()
}

fn phi_cojacobi_closed(c: &Ctx) -> CheckItem {
    let mut k = Check::new("phi_cojacobi_closed", "Alt((gamma x 1 x 1) phi) = 0", c.names());
    let images = cocycle_tensors(c);
    let lhs = alt(&gamma_first_slot(&Tensor::from_multivector(c.q.phi(), 3), &images)).expect("rank 4");
    k.compare(|| "phi".into(), &lhs, &Tensor::zero(c.n, 4));
    k.finish()
}

fn equivalence(
    c: &Ctx,
    name: &str,
    statement: &str,
    premises: bool,
    axiom: &CheckItem,
    relations: &[&CheckItem],
) -> CheckItem {
    let mut k = Check::new(name, statement, c.names());
    if !premises {
        k.note("not evaluated: mu_jacobi or gamma_cocycle fails");
        return k.finish();
    }
    let rel = relations.iter().all(|r| r.passed);
    let verdicts = || {
        let names: Vec<&str> = relations.iter().map(|r| r.name.as_str()).collect();
        (format!("{}: {}", axiom.name, verdict(axiom.passed)), format!("{}: {}", names.join(" and "), verdict(rel)))
    };
    k.require(|| "verdicts".into(), axiom.passed == rel, verdicts);
    k.finish()
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}
