use super::context::{hat, Ctx};
use super::QuasiLieBialgebra;
use crate::exterior::{pair, primal_contraction_operator, dual_contraction_operator, Multivector};
use crate::lie::{apply_derivation, coad_extension, derivation_extension, Schouten};
use crate::matrix::Matrix;
use crate::report::{Check, CheckItem, ValidationReport};
use crate::scalar::{self, sign};

/// Evaluates the derived identities of a quasi-bialgebra on every basis
/// tuple and every pair of blades. Meaningful when [`validate`](super::validate)
/// passes.
pub fn relations_suite(q: &QuasiLieBialgebra) -> ValidationReport {
    let c = Ctx::new(q);
    let mut report = ValidationReport::new("relations");
    let items = [
        coadjoint_representation(&c),
        gamma_coadjoint_derivation_of_mu(&c),
        mixed_jacobi(&c),
        mu_coadjoint_derivation_of_gamma(&c),
        dual_jacobi_dual_component(&c),
        dual_jacobi_primal_component(&c),
        gamma_coadjoint_on_schouten(&c),
        gamma_bracket_coadjoint_on_multivectors(&c),
        coadjoint_is_anticommutator(&c),
        d_mu_commutes_with_coadjoint(&c),
        contraction_by_d_mu_of_coadjoint(&c),
        d_gamma_of_gamma_coadjoint(&c),
        phi_contracted_by_gamma_bracket(&c),
        cocycle_contraction_expansion(&c),
        phi_contraction_expansion(&c),
        boundary_gamma_square(&c),
        boundary_gamma_anticommutes_with_phi(&c),
        boundary_gamma_contraction_anticommutator(&c),
        mu_character_invariant(&c),
        gamma_character_pairing(&c),
        gamma_character_differential(&c),
        character_mixed_pairing(&c),
        d_gamma_derivation_of_schouten(&c),
        d_mu_derivation_of_gamma_schouten(&c),
    ];
    for item in items {
        report.push(item);
    }
    if q.is_bialgebra() {
        report.push(flat_boundaries(&c));
    }
    report
}

fn coadjoint_representation(c: &Ctx) -> CheckItem {
    let mut k = Check::new("coadjoint_representation", "ad*_{mu(x,y)} = [ad*_x, ad*_y] on G*", c.names());
    for i in 0..c.n {
        for j in i + 1..c.n {
            let lhs = c.coad_mu_of(&c.mu(&c.e(i), &c.e(j)));
            let rhs = c.coad_mu[i].commutator(&c.coad_mu[j]);
            k.compare(|| format!("x={}, y={}", c.ne(i), c.ne(j)), &lhs, &rhs);
        }
    }
    k.finish()
}

fn gamma_coadjoint_derivation_of_mu(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "gamma_coadjoint_derivation_of_mu",
        "ad^g*_xi mu(x,y) = mu(ad^g*_xi x, y) + mu(x, ad^g*_xi y) + ad^g*_{ad*_y xi} x - ad^g*_{ad*_x xi} y",
        c.names(),
    );
    for a in 0..c.n {
        let g = &c.coad_gamma[a];
        for i in 0..c.n {
            for j in i + 1..c.n {
                let (x, y, xi) = (c.e(i), c.e(j), c.xi(a));
                let lhs = g.apply_vector(&c.mu(&x, &y));
                let rhs = c.mu(&g.apply_vector(&x), &y) + c.mu(&x, &g.apply_vector(&y))
                    + c.coad_gamma_of(&c.coad_mu[j].apply_vector(&xi)).apply_vector(&x)
                    - c.coad_gamma_of(&c.coad_mu[i].apply_vector(&xi)).apply_vector(&y);
                k.compare(|| format!("x={}, y={}, xi={}", c.ne(i), c.ne(j), c.nx(a)), &lhs, &rhs);
            }
        }
    }
    k.finish()
}

pub(crate) fn mixed_jacobi(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "mixed_jacobi",
        "ad^g*_{gamma(xi,eta)} x = [ad^g*_xi, ad^g*_eta] x + ad_x phi(xi,eta) - phi(ad*_x xi, eta) - phi(xi, ad*_x eta)",
        c.names(),
    );
    for a in 0..c.n {
        for b in a + 1..c.n {
            let (xi, eta) = (c.xi(a), c.xi(b));
            let lhs_op = c.coad_gamma_of(&c.gamma(&xi, &eta));
            let comm = c.coad_gamma[a].commutator(&c.coad_gamma[b]);
            let p = c.phi_pair(&xi, &eta);
            for i in 0..c.n {
                let x = c.e(i);
                let lhs = lhs_op.apply_vector(&x);
                let rhs = comm.apply_vector(&x) + c.mu(&x, &p)
                    - c.phi_pair(&c.coad_mu[i].apply_vector(&xi), &eta)
                    - c.phi_pair(&xi, &c.coad_mu[i].apply_vector(&eta));
                k.compare(|| format!("x={}, xi={}, eta={}", c.ne(i), c.nx(a), c.nx(b)), &lhs, &rhs);
            }
        }
    }
    k.finish()
}

fn mu_coadjoint_derivation_of_gamma(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "mu_coadjoint_derivation_of_gamma",
        "ad*_x gamma(xi,eta) = gamma(ad*_x xi, eta) + gamma(xi, ad*_x eta) + ad*_{ad^g*_eta x} xi - ad*_{ad^g*_xi x} eta",
        c.names(),
    );
    for i in 0..c.n {
        let m = &c.coad_mu[i];
        for a in 0..c.n {
            for b in a + 1..c.n {
                let (x, xi, eta) = (c.e(i), c.xi(a), c.xi(b));
                let lhs = m.apply_vector(&c.gamma(&xi, &eta));
                let rhs = c.gamma(&m.apply_vector(&xi), &eta) + c.gamma(&xi, &m.apply_vector(&eta))
                    + c.coad_mu_of(&c.coad_gamma[b].apply_vector(&x)).apply_vector(&xi)
                    - c.coad_mu_of(&c.coad_gamma[a].apply_vector(&x)).apply_vector(&eta);
                k.compare(|| format!("x={}, xi={}, eta={}", c.ne(i), c.nx(a), c.nx(b)), &lhs, &rhs);
            }
        }
    }
    k.finish()
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |d| [a, b, d])))
}

pub(crate) fn dual_jacobi_dual_component(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "dual_jacobi_dual_component",
        "cyclic sum of gamma(gamma(xi,eta),zeta) = - cyclic sum of ad*_{phi(xi,eta)} zeta",
        c.names(),
    );
    for t in triples(c.n) {
        let mut lhs = Multivector::zero(c.gs);
        let mut rhs = Multivector::zero(c.gs);
        for s in 0..3 {
            let (xi, eta, zeta) = (c.xi(t[s]), c.xi(t[(s + 1) % 3]), c.xi(t[(s + 2) % 3]));
            lhs += &c.gamma(&c.gamma(&xi, &eta), &zeta);
            rhs -= &c.coad_mu_of(&c.phi_pair(&xi, &eta)).apply_vector(&zeta);
        }
        k.compare(|| c.names().tuple(c.gs, &t), &lhs, &rhs);
    }
    k.finish()
}

pub(crate) fn dual_jacobi_primal_component(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "dual_jacobi_primal_component",
        "cyclic sum of phi(gamma(xi,eta),zeta) = cyclic sum of ad^g*_zeta phi(xi,eta)",
        c.names(),
    );
    for t in triples(c.n) {
        let mut lhs = Multivector::zero(c.g);
        let mut rhs = Multivector::zero(c.g);
        for s in 0..3 {
            let (a, b, d) = (t[s], t[(s + 1) % 3], t[(s + 2) % 3]);
            let (xi, eta, zeta) = (c.xi(a), c.xi(b), c.xi(d));
            lhs += &c.phi_pair(&c.gamma(&xi, &eta), &zeta);
            rhs += &c.coad_gamma[d].apply_vector(&c.phi_pair(&xi, &eta));
        }
        k.compare(|| c.names().tuple(c.gs, &t), &lhs, &rhs);
    }
    k.finish()
}

fn gamma_coadjoint_on_schouten(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "gamma_coadjoint_on_schouten",
        "ad^g*_xi [X,Y] = [ad^g*_xi X, Y] + [X, ad^g*_xi Y] + sum_j (-1)^(j+1) ad^g*_{ad*_{y_j} xi} X ^ Y^_j \
         + (-1)^|X| sum_i (-1)^(i+1) X^_i ^ ad^g*_{ad*_{x_i} xi} Y",
        c.names(),
    );
    let sch = c.schouten_mu();
    let blades = c.blades();
    for a in 0..c.n {
        let xi = c.xi(a);
        let g = &c.coad_gamma[a];
        // ad^g*_{ad*_{e_i} xi} for each i
        let mixed: Vec<Matrix> = (0..c.n).map(|i| c.coad_gamma_of(&c.coad_mu[i].apply_vector(&xi))).collect();
        for &xb in &blades {
            let x = c.blade(c.g, xb);
            let gx = apply_derivation(g, &x);
            for &yb in &blades {
                let y = c.blade(c.g, yb);
                let lhs = apply_derivation(g, &sch.bracket(&x, &y));
                let mut rhs = sch.bracket(&gx, &y) + sch.bracket(&x, &apply_derivation(g, &y));
                for (j, yj) in yb.indices().enumerate() {
                    let t = apply_derivation(&mixed[yj], &x).wedge(&hat(c.g, yb, j));
                    rhs.add_scaled(&sign(j), &t);
                }
                let m = xb.grade();
                for (i, xi_idx) in xb.indices().enumerate() {
                    let t = hat(c.g, xb, i).wedge(&apply_derivation(&mixed[xi_idx], &y));
                    rhs.add_scaled(&sign(m + i), &t);
                }
                k.compare(|| format!("xi={}, X={}, Y={}", c.nx(a), c.nb(xb), c.nb(yb)), &lhs, &rhs);
            }
        }
    }
    k.finish()
}

fn gamma_bracket_coadjoint_on_multivectors(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "gamma_bracket_coadjoint_on_multivectors",
        "ad^g*_{gamma(xi,eta)} X = [ad^g*_xi, ad^g*_eta] X - ad_{phi(xi,eta)} X \
         + sum_i (-1)^i (phi(ad*_{x_i} xi, eta) + phi(xi, ad*_{x_i} eta)) ^ X^_i",
        c.names(),
    );
    let blades = c.blades();
    for a in 0..c.n {
        for b in 0..c.n {
            let (xi, eta) = (c.xi(a), c.xi(b));
            let lhs_op = c.coad_gamma_of(&c.gamma(&xi, &eta));
            let comm = c.coad_gamma[a].commutator(&c.coad_gamma[b]);
            let adp = c.ad_mu_of(&c.phi_pair(&xi, &eta));
            let terms: Vec<Multivector> = (0..c.n)
                .map(|i| {
                    c.phi_pair(&c.coad_mu[i].apply_vector(&xi), &eta)
                        + c.phi_pair(&xi, &c.coad_mu[i].apply_vector(&eta))
                })
                .collect();
            for &xb in &blades {
                let x = c.blade(c.g, xb);
                let lhs = apply_derivation(&lhs_op, &x);
                let mut rhs = apply_derivation(&comm, &x) - apply_derivation(&adp, &x);
                for (i, xi_idx) in xb.indices().enumerate() {
                    rhs.add_scaled(&sign(i + 1), &terms[xi_idx].wedge(&hat(c.g, xb, i)));
                }
                k.compare(|| format!("xi={}, eta={}, X={}", c.nx(a), c.nx(b), c.nb(xb)), &lhs, &rhs);
            }
        }
    }
    k.finish()
}

fn coadjoint_is_anticommutator(c: &Ctx) -> CheckItem {
    let mut k = Check::new("coadjoint_is_anticommutator", "ad*_x = d_mu i_x + i_x d_mu on LG*", c.names());
    for i in 0..c.n {
        let lhs = coad_extension(c.q.mu(), &c.e(i));
        let rhs = c.d_mu.anticommutator(&primal_contraction_operator(&c.e(i)));
        k.compare(|| format!("x={}", c.ne(i)), &lhs, &rhs);
    }
    k.finish()
}

fn d_mu_commutes_with_coadjoint(c: &Ctx) -> CheckItem {
    let mut k = Check::new("d_mu_commutes_with_coadjoint", "[d_mu, ad*_x] = 0 on LG*", c.names());
    for i in 0..c.n {
        let lhs = c.d_mu.commutator(&coad_extension(c.q.mu(), &c.e(i)));
        let zero = Matrix::zeros(lhs.rows(), lhs.cols());
        k.compare(|| format!("x={}", c.ne(i)), &lhs, &zero);
    }
    k.finish()
}

fn contraction_by_d_mu_of_coadjoint(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "contraction_by_d_mu_of_coadjoint",
        "i_{d_mu(ad*_x xi)} = [ad_x, i_{d_mu xi}] on LG",
        c.names(),
    );
    for i in 0..c.n {
        let adx = derivation_extension(c.g, &c.ad_mu[i]);
        for a in 0..c.n {
            let xi = c.xi(a);
            let lhs = dual_contraction_operator(&c.d_mu.apply(&c.coad_mu[i].apply_vector(&xi)));
            let rhs = adx.commutator(&dual_contraction_operator(&c.d_mu.apply(&xi)));
            k.compare(|| format!("x={}, xi={}", c.ne(i), c.nx(a)), &lhs, &rhs);
        }
    }
    k.finish()
}

fn d_gamma_of_gamma_coadjoint(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "d_gamma_of_gamma_coadjoint",
        "d_gamma(ad^g*_xi x) = ad^g*_xi d_gamma(x) + ad_x(i_xi phi) - i_{ad*_x xi} phi",
        c.names(),
    );
    for i in 0..c.n {
        let x = c.e(i);
        let dgx = c.d_gamma.apply(&x);
        for a in 0..c.n {
            let xi = c.xi(a);
            let lhs = c.d_gamma.apply(&c.coad_gamma[a].apply_vector(&x));
            let rhs = apply_derivation(&c.coad_gamma[a], &dgx)
                + apply_derivation(&c.ad_mu[i], &c.contract(&xi, &c.phi_d))
                - c.contract(&c.coad_mu[i].apply_vector(&xi), &c.phi_d);
            k.compare(|| format!("x={}, xi={}", c.ne(i), c.nx(a)), &lhs, &rhs);
        }
    }
    k.finish()
}

fn phi_contracted_by_gamma_bracket(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "phi_contracted_by_gamma_bracket",
        "i_{gamma(xi,eta)} phi = ad^g*_xi i_eta phi - ad^g*_eta i_xi phi + d_gamma(phi(xi,eta))",
        c.names(),
    );
    for a in 0..c.n {
        for b in a + 1..c.n {
            let (xi, eta) = (c.xi(a), c.xi(b));
            let lhs = c.contract(&c.gamma(&xi, &eta), &c.phi_d);
            let rhs = apply_derivation(&c.coad_gamma[a], &c.contract(&eta, &c.phi_d))
                - apply_derivation(&c.coad_gamma[b], &c.contract(&xi, &c.phi_d))
                + c.d_gamma.apply(&c.phi_pair(&xi, &eta));
            k.compare(|| format!("xi={}, eta={}", c.nx(a), c.nx(b)), &lhs, &rhs);
        }
    }
    k.finish()
}

/// `i_A(B ∧ Y) - (i_A B) ∧ Y - B ∧ i_A Y` for `A = d_μ ξ`.
fn contraction_defect(c: &Ctx, a: &Multivector, b: &Multivector, y: &Multivector) -> Multivector {
    c.contract(a, &b.wedge(y)) - c.contract(a, b).wedge(y) - b.wedge(&c.contract(a, y))
}

fn cocycle_contraction_expansion(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "cocycle_contraction_expansion",
        "sum_i (-1)^(i+1) ad^g*_{ad*_{y_i} xi} x ^ Y^_i = i_{d_mu xi}(d_gamma x ^ Y) - (i_{d_mu xi} d_gamma x) Y - d_gamma x ^ i_{d_mu xi} Y",
        c.names(),
    );
    let blades = c.blades();
    for a in 0..c.n {
        let xi = c.xi(a);
        let dxi = c.d_mu.apply(&xi);
        let mixed: Vec<Matrix> = (0..c.n).map(|i| c.coad_gamma_of(&c.coad_mu[i].apply_vector(&xi))).collect();
        for i in 0..c.n {
            let x = c.e(i);
            let dgx = c.d_gamma.apply(&x);
            for &yb in &blades {
                let y = c.blade(c.g, yb);
                let mut lhs = Multivector::zero(c.g);
                for (p, yi) in yb.indices().enumerate() {
                    lhs.add_scaled(&sign(p), &mixed[yi].apply_vector(&x).wedge(&hat(c.g, yb, p)));
                }
                let rhs = contraction_defect(c, &dxi, &dgx, &y);
                k.compare(|| format!("x={}, xi={}, Y={}", c.ne(i), c.nx(a), c.nb(yb)), &lhs, &rhs);
            }
        }
    }
    k.finish()
}

fn phi_contraction_expansion(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "phi_contraction_expansion",
        "sum_i (-1)^i phi(ad*_{y_i} xi, eta) ^ Y^_i = i_{d_mu xi}(i_eta phi ^ Y) - (i_{d_mu xi} i_eta phi) Y - i_eta phi ^ i_{d_mu xi} Y",
        c.names(),
    );
    let blades = c.blades();
    for a in 0..c.n {
        let xi = c.xi(a);
        let dxi = c.d_mu.apply(&xi);
        for b in 0..c.n {
            let eta = c.xi(b);
            let ieta = c.contract(&eta, &c.phi_d);
            let terms: Vec<Multivector> =
                (0..c.n).map(|i| c.phi_pair(&c.coad_mu[i].apply_vector(&xi), &eta)).collect();
            for &yb in &blades {
                let y = c.blade(c.g, yb);
                let mut lhs = Multivector::zero(c.g);
                for (p, yi) in yb.indices().enumerate() {
                    lhs.add_scaled(&sign(p + 1), &terms[yi].wedge(&hat(c.g, yb, p)));
                }
                let rhs = contraction_defect(c, &dxi, &ieta, &y);
                k.compare(|| format!("xi={}, eta={}, Y={}", c.nx(a), c.nx(b), c.nb(yb)), &lhs, &rhs);
            }
        }
    }
    k.finish()
}

fn boundary_gamma_square(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "boundary_gamma_square",
        "del_gamma^2 + d_mu i_phi + i_phi d_mu - i_{del_mu phi} = 0 on LG*",
        c.names(),
    );
    let iphi = primal_contraction_operator(&c.phi_d);
    let lhs = &(&(&c.del_gamma * &c.del_gamma) + &c.d_mu.anticommutator(&iphi))
        - &primal_contraction_operator(&c.del_mu.apply(&c.phi_d));
    k.compare(|| "LG*".into(), &lhs, &Matrix::zeros(lhs.rows(), lhs.cols()));
    k.finish()
}

fn boundary_gamma_anticommutes_with_phi(c: &Ctx) -> CheckItem {
    let mut k = Check::new("boundary_gamma_anticommutes_with_phi", "del_gamma i_phi + i_phi del_gamma = 0 on LG*", c.names());
    let lhs = c.del_gamma.anticommutator(&primal_contraction_operator(&c.phi_d));
    k.compare(|| "LG*".into(), &lhs, &Matrix::zeros(lhs.rows(), lhs.cols()));
    k.finish()
}

fn boundary_gamma_contraction_anticommutator(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "boundary_gamma_contraction_anticommutator",
        "del_gamma i_x + i_x del_gamma = i_{gamma(x)} on LG*",
        c.names(),
    );
    for i in 0..c.n {
        let lhs = c.del_gamma.anticommutator(&primal_contraction_operator(&c.e(i)));
        let rhs = primal_contraction_operator(&c.q.cocycle(&c.e(i)));
        k.compare(|| format!("x={}", c.ne(i)), &lhs, &rhs);
    }
    k.finish()
}

fn mu_character_invariant(c: &Ctx) -> CheckItem {
    let mut k = Check::new("mu_character_invariant", "d_mu(xi^mu) = 0 and ad*_x xi^mu = 0", c.names());
    let xm = &c.chars.xi_mu;
    k.compare(|| "d_mu".into(), &c.d_mu.apply(xm), &Multivector::zero(c.gs));
    for i in 0..c.n {
        k.compare(|| format!("x={}", c.ne(i)), &c.coad_mu[i].apply_vector(xm), &Multivector::zero(c.gs));
    }
    k.finish()
}

fn gamma_character_pairing(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "gamma_character_pairing",
        "<x^gamma, gamma(xi,eta)> = <xi^mu, phi(xi,eta)> + 2 i_{d_mu xi} i_eta phi - 2 i_{d_mu eta} i_xi phi",
        c.names(),
    );
    let two = scalar::int(2);
    for a in 0..c.n {
        for b in a + 1..c.n {
            let (xi, eta) = (c.xi(a), c.xi(b));
            let lhs = pair(&c.gamma(&xi, &eta), &c.chars.x_gamma).expect("dual and primal");
            let s1 = c.contract(&c.d_mu.apply(&xi), &c.contract(&eta, &c.phi_d)).scalar_part();
            let s2 = c.contract(&c.d_mu.apply(&eta), &c.contract(&xi, &c.phi_d)).scalar_part();
            let rhs = pair(&c.chars.xi_mu, &c.phi_pair(&xi, &eta)).expect("dual and primal") + &two * s1 - &two * s2;
            k.compare(|| format!("xi={}, eta={}", c.nx(a), c.nx(b)), &lhs, &rhs);
        }
    }
    k.finish()
}

fn gamma_character_differential(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "gamma_character_differential",
        "d_gamma(x^gamma) = -i_{xi^mu} phi - 2 del_mu phi",
        c.names(),
    );
    let lhs = c.d_gamma.apply(&c.chars.x_gamma);
    let rhs = -c.contract(&c.chars.xi_mu, &c.phi_d) - c.del_mu.apply(&c.phi_d).scaled(&scalar::int(2));
    k.compare(|| "x^gamma".into(), &lhs, &rhs);
    k.finish()
}

fn character_mixed_pairing(c: &Ctx) -> CheckItem {
    let mut k = Check::new(
        "character_mixed_pairing",
        "<ad*_x xi, x^gamma> = -<xi^mu, ad^g*_xi x> + 2 i_{d_mu xi} d_gamma x",
        c.names(),
    );
    let two = scalar::int(2);
    for i in 0..c.n {
        let x = c.e(i);
        let dgx = c.d_gamma.apply(&x);
        for a in 0..c.n {
            let xi = c.xi(a);
            let lhs = pair(&c.coad_mu[i].apply_vector(&xi), &c.chars.x_gamma).expect("dual and primal");
            let rhs = -pair(&c.chars.xi_mu, &c.coad_gamma[a].apply_vector(&x)).expect("dual and primal")
                + &two * c.contract(&c.d_mu.apply(&xi), &dgx).scalar_part();
            k.compare(|| format!("x={}, xi={}", c.ne(i), c.nx(a)), &lhs, &rhs);
        }
    }
    k.finish()
}

/// `d[X, Y] = [dX, Y] + (-1)^(|X|-1) [X, dY]` over all blade pairs.
fn derivation_of_schouten(
    name: &str,
    statement: &str,
    c: &Ctx,
    sch: &Schouten,
    d: &Matrix,
    space: crate::exterior::SpaceId,
) -> CheckItem {
    let mut k = Check::new(name, statement, c.names());
    let blades = c.blades();
    let images: Vec<Multivector> = blades.iter().map(|&b| d.apply(&c.blade(space, b))).collect();
    for (xi, &xb) in blades.iter().enumerate() {
        let x = c.blade(space, xb);
        for (yi, &yb) in blades.iter().enumerate() {
            let y = c.blade(space, yb);
            let lhs = d.apply(&sch.bracket(&x, &y));
            let mut rhs = sch.bracket(&images[xi], &y);
            rhs.add_scaled(&sign(xb.grade() + 1), &sch.bracket(&x, &images[yi]));
            k.compare(|| format!("X={}, Y={}", c.names().blade(space, xb), c.names().blade(space, yb)), &lhs, &rhs);
        }
    }
    k.finish()
}

fn d_gamma_derivation_of_schouten(c: &Ctx) -> CheckItem {
    derivation_of_schouten(
        "d_gamma_derivation_of_schouten",
        "d_gamma [X,Y]^mu = [d_gamma X, Y]^mu + (-1)^(|X|-1) [X, d_gamma Y]^mu",
        c,
        &c.schouten_mu(),
        &c.d_gamma,
        c.g,
    )
}

fn d_mu_derivation_of_gamma_schouten(c: &Ctx) -> CheckItem {
    derivation_of_schouten(
        "d_mu_derivation_of_gamma_schouten",
        "d_mu [A,B]^gamma = [d_mu A, B]^gamma + (-1)^(|A|-1) [A, d_mu B]^gamma",
        c,
        &Schouten::new(c.q.gamma()),
        &c.d_mu,
        c.gs,
    )
}

fn flat_boundaries(c: &Ctx) -> CheckItem {
    let mut k = Check::new("flat_boundaries", "phi = 0 implies del_gamma^2 = 0 and d_gamma^2 = 0", c.names());
    let zero = Matrix::zeros(c.d_gamma.rows(), c.d_gamma.cols());
    k.compare(|| "del_gamma^2".into(), &(&c.del_gamma * &c.del_gamma), &zero);
    k.compare(|| "d_gamma^2".into(), &(&c.d_gamma * &c.d_gamma), &zero);
    k.finish()
}
