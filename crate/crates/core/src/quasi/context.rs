use super::{characters, Characters, QuasiLieBialgebra};
use crate::exterior::{contract_by_dual, Blade, Multivector, SpaceId};
use crate::lie::{ad_action, boundary_operator, coad_action, Schouten};
use crate::matrix::{EndoMatrix, Matrix};
use crate::names::BasisNames;
use crate::scalar;

/// Operators of a quasi-bialgebra computed once per suite.
pub(crate) struct Ctx<'a> {
    pub q: &'a QuasiLieBialgebra,
    pub n: usize,
    pub g: SpaceId,
    pub gs: SpaceId,
    pub phi_d: Multivector,
    pub chars: Characters,
    /// `d_μ` on `ΛG*` and `∂_μ` on `ΛG`.
    pub d_mu: EndoMatrix,
    pub del_mu: EndoMatrix,
    /// `d_γ` on `ΛG` and `∂_γ` on `ΛG*`.
    pub d_gamma: EndoMatrix,
    pub del_gamma: EndoMatrix,
    /// `ad^μ_{e_i}` on `G`.
    pub ad_mu: Vec<Matrix>,
    /// `ad^{μ*}_{e_i}` on `G*`.
    pub coad_mu: Vec<Matrix>,
    /// `ad^{γ*}_{ξ^a}` on `G`.
    pub coad_gamma: Vec<Matrix>,
}

impl<'a> Ctx<'a> {
    pub fn new(q: &'a QuasiLieBialgebra) -> Self {
        let n = q.dim();
        let (g, gs) = (q.primal(), q.dual());
        let del_mu = boundary_operator(q.mu());
        let del_gamma = boundary_operator(q.gamma());
        Ctx {
            q,
            n,
            g,
            gs,
            phi_d: q.double_phi(),
            chars: characters(q),
            d_mu: del_mu.transpose(),
            d_gamma: del_gamma.transpose(),
            del_mu,
            del_gamma,
            ad_mu: (0..n).map(|i| ad_action(q.mu(), &Multivector::basis(g, i))).collect(),
            coad_mu: (0..n).map(|i| coad_action(q.mu(), &Multivector::basis(g, i))).collect(),
            coad_gamma: (0..n).map(|a| coad_action(q.gamma(), &Multivector::basis(gs, a))).collect(),
        }
    }

    pub fn names(&self) -> &BasisNames {
        self.q.names()
    }

    pub fn e(&self, i: usize) -> Multivector {
        Multivector::basis(self.g, i)
    }

    pub fn xi(&self, a: usize) -> Multivector {
        Multivector::basis(self.gs, a)
    }

    pub fn blades(&self) -> Vec<Blade> {
        Blade::all(self.n).collect()
    }

    pub fn blade(&self, space: SpaceId, b: Blade) -> Multivector {
        Multivector::from_blade(space, b, scalar::one())
    }

    /// Name of `e_i`, `ξ^a` or a blade of `ΛG`.
    pub fn ne(&self, i: usize) -> String {
        self.names().primal()[i].clone()
    }

    pub fn nx(&self, a: usize) -> String {
        format!("{}*", self.names().primal()[a])
    }

    pub fn nb(&self, b: Blade) -> String {
        self.names().blade(self.g, b)
    }

    pub fn ad_mu_of(&self, x: &Multivector) -> Matrix {
        combine(&self.ad_mu, x)
    }

    pub fn coad_mu_of(&self, x: &Multivector) -> Matrix {
        combine(&self.coad_mu, x)
    }

    pub fn coad_gamma_of(&self, xi: &Multivector) -> Matrix {
        combine(&self.coad_gamma, xi)
    }

    pub fn mu(&self, x: &Multivector, y: &Multivector) -> Multivector {
        self.q.mu().bracket_vectors(x, y)
    }

    pub fn gamma(&self, xi: &Multivector, eta: &Multivector) -> Multivector {
        self.q.gamma().bracket_vectors(xi, eta)
    }

    pub fn phi_pair(&self, xi: &Multivector, eta: &Multivector) -> Multivector {
        self.contract(&xi.wedge(eta), &self.phi_d)
    }

    /// `i_A X` for `A ∈ ΛG*`, `X ∈ ΛG`.
    pub fn contract(&self, a: &Multivector, x: &Multivector) -> Multivector {
        contract_by_dual(a, x).expect("dual against primal")
    }

    pub fn schouten_mu(&self) -> Schouten<'a> {
        Schouten::new(self.q.mu())
    }
}

/// `Σ_i v_i M_i`.
pub(crate) fn combine(ms: &[Matrix], v: &Multivector) -> Matrix {
    let n = ms.first().map_or(0, Matrix::rows);
    let mut out = Matrix::zeros(n, n);
    for (b, c) in v.terms() {
        out.add_scaled(c, &ms[crate::lie::vector_index(b)]);
    }
    out
}

/// `X` with its `k`-th factor (0-based, ascending order) removed.
pub(crate) fn hat(space: SpaceId, b: Blade, k: usize) -> Multivector {
    let i = b.indices().nth(k).expect("factor in range");
    Multivector::from_blade(space, b.without(Blade::basis(i)), scalar::one())
}
