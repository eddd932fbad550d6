use super::context::Ctx;
use super::QuasiLieBialgebra;
use crate::exterior::{Multivector, SpaceId};
use crate::lie::{ad_extension, derivation_extension, Schouten};
use crate::matrix::{EndoMatrix, Matrix};
use crate::report::{Check, CheckItem, ValidationReport};
use crate::scalar;

/// `L = ∂_μ d_γ + d_γ ∂_μ` on `ΛG`.
pub fn laplacian(q: &QuasiLieBialgebra) -> EndoMatrix {
    let c = Ctx::new(q);
    c.del_mu.anticommutator(&c.d_gamma)
}

/// Grade preservation, derivation properties and commutation with `∂_μ`;
/// for `φ = 0` also the closed form in terms of the characters.
pub fn laplacian_checks(q: &QuasiLieBialgebra) -> ValidationReport {
    let c = Ctx::new(q);
    let l = c.del_mu.anticommutator(&c.d_gamma);
    let mut report = ValidationReport::new("laplacian");
    report.push(preserves_grade(&c, &l));
    report.push(derivation_of_wedge(&c, "laplacian_derivation_of_wedge", &l, c.g));
    report.push(derivation_of_schouten(&c, &l));
    report.push(commutes_with_boundary(&c, &l));
    report.push(derivation_of_wedge(&c, "dual_laplacian_derivation_of_wedge", &l.transpose(), c.gs));
    if q.is_bialgebra() {
        report.push(closed_form(&c, &l));
    }
    report
}

fn preserves_grade(c: &Ctx, l: &EndoMatrix) -> CheckItem {
    let mut k = Check::new("laplacian_preserves_grade", "L maps L^kG into L^kG", c.names());
    for b in c.blades() {
        let img = l.apply(&c.blade(c.g, b));
        let off = &img - &img.grade_part(b.grade());
        k.compare(|| format!("X={}", c.nb(b)), &off, &Multivector::zero(c.g));
    }
    k.finish()
}

fn derivation_of_wedge(c: &Ctx, name: &str, l: &EndoMatrix, space: SpaceId) -> CheckItem {
    let mut k = Check::new(name, "L(X^Y) = L(X)^Y + X^L(Y)", c.names());
    let blades = c.blades();
    let images: Vec<Multivector> = blades.iter().map(|&b| l.apply(&c.blade(space, b))).collect();
    for (i, &xb) in blades.iter().enumerate() {
        let x = c.blade(space, xb);
        for (j, &yb) in blades.iter().enumerate() {
            let y = c.blade(space, yb);
            let lhs = l.apply(&x.wedge(&y));
            let rhs = images[i].wedge(&y) + x.wedge(&images[j]);
            k.compare(|| format!("X={}, Y={}", c.names().blade(space, xb), c.names().blade(space, yb)), &lhs, &rhs);
        }
    }
    k.finish()
}

fn derivation_of_schouten(c: &Ctx, l: &EndoMatrix) -> CheckItem {
    let mut k = Check::new("laplacian_derivation_of_schouten", "L[X,Y]^mu = [L X, Y]^mu + [X, L Y]^mu", c.names());
    let sch = Schouten::new(c.q.mu());
    let blades = c.blades();
    let images: Vec<Multivector> = blades.iter().map(|&b| l.apply(&c.blade(c.g, b))).collect();
    for (i, &xb) in blades.iter().enumerate() {
        let x = c.blade(c.g, xb);
        for (j, &yb) in blades.iter().enumerate() {
            let y = c.blade(c.g, yb);
            let lhs = l.apply(&sch.bracket(&x, &y));
            let rhs = sch.bracket(&images[i], &y) + sch.bracket(&x, &images[j]);
            k.compare(|| format!("X={}, Y={}", c.nb(xb), c.nb(yb)), &lhs, &rhs);
        }
    }
    k.finish()
}

fn commutes_with_boundary(c: &Ctx, l: &EndoMatrix) -> CheckItem {
    let mut k = Check::new("laplacian_commutes_with_boundary", "L del_mu = del_mu L", c.names());
    k.compare(|| "LG".into(), &(l * &c.del_mu), &(&c.del_mu * l));
    k.finish()
}

fn closed_form(c: &Ctx, l: &EndoMatrix) -> CheckItem {
    let mut k = Check::new(
        "laplacian_bialgebra_closed_form",
        "phi = 0 implies L = 1/2 (ad_{x^gamma} - ad^g*_{xi^mu})",
        c.names(),
    );
    let a = ad_extension(c.q.mu(), &c.chars.x_gamma);
    let b = derivation_extension(c.g, &c.coad_gamma_of(&c.chars.xi_mu));
    let rhs: Matrix = (&a - &b).scaled(&scalar::frac(1, 2));
    k.compare(|| "LG".into(), l, &rhs);
    k.finish()
}
