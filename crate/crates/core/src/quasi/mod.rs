//! Lie quasi-bialgebras `(G, μ, γ, φ)`.

mod axioms;
mod bv;
mod constructors;
mod context;
mod laplacian;
mod relations;

pub use axioms::validate;
pub use bv::{bv_prerequisite, BvOperators, BvPrerequisite};
pub use constructors::{from_quasitriangular, from_r_matrix, gamma_table_from_cocycle};
pub use laplacian::{laplacian, laplacian_checks};
pub use relations::relations_suite;

use crate::error::{Error, Result};
use crate::exterior::{contract_by_dual, Blade, Multivector, SpaceId};
use crate::lie::BracketTable;
use crate::names::BasisNames;
use crate::scalar::Scalar;

/// A quadruplet `(G, μ, γ, φ)`: `μ` a bracket on `G`, `γ` stored as a
/// bracket on `G*`, `φ ∈ Λ³G`.
///
/// The cocycle view `γ: G → Λ²G` is tied to the table by
/// `⟨γ(x), ξ∧η⟩ = -⟨x, γ(ξ,η)⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiLieBialgebra {
    names: BasisNames,
    mu: BracketTable,
    gamma: BracketTable,
    phi: Multivector,
}

impl QuasiLieBialgebra {
    /// Checks spaces and the grade of `φ` only; see [`validate`] for the axioms.
    pub fn new(mu: BracketTable, gamma: BracketTable, phi: Multivector) -> Result<Self> {
        let n = mu.dim();
        let SpaceId::Primal(_) = mu.space() else {
            return Err(Error::Invalid(format!("mu must be a bracket on G, got {}", mu.space())));
        };
        if gamma.space() != SpaceId::Dual(n) {
            return Err(Error::SpaceMismatch { left: gamma.space(), right: SpaceId::Dual(n) });
        }
        if phi.space() != mu.space() {
            return Err(Error::SpaceMismatch { left: phi.space(), right: mu.space() });
        }
        if !phi.is_homogeneous_of(3) {
            return Err(Error::GradeMismatch { expected: 3 });
        }
        Ok(QuasiLieBialgebra { names: BasisNames::default_for(n), mu, gamma, phi })
    }

    /// `γ = 0`, `φ = 0`.
    pub fn trivial(mu: BracketTable) -> Result<Self> {
        let n = mu.dim();
        Self::new(mu, BracketTable::zero(SpaceId::Dual(n)), Multivector::zero(SpaceId::Primal(n)))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::Invalid(format!("expected {} basis names, got {}", self.dim(), names.len())));
        }
        self.names = BasisNames::new(names);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn primal(&self) -> SpaceId {
        SpaceId::Primal(self.dim())
    }

    pub fn dual(&self) -> SpaceId {
        SpaceId::Dual(self.dim())
    }

    pub fn names(&self) -> &BasisNames {
        &self.names
    }

    pub fn mu(&self) -> &BracketTable {
        &self.mu
    }

    pub fn gamma(&self) -> &BracketTable {
        &self.gamma
    }

    pub fn phi(&self) -> &Multivector {
        &self.phi
    }

    /// The trivector entering the double bracket,
    /// `[ξ, η]_D = γ(ξ, η) + i_{ξ∧η}(double_phi)`. It equals `-φ`.
    pub fn double_phi(&self) -> Multivector {
        -&self.phi
    }

    /// `i_{ξ∧η}(double_phi)`, a vector of `G`.
    pub fn phi_pair(&self, xi: &Multivector, eta: &Multivector) -> Multivector {
        contract_by_dual(&xi.wedge(eta), &self.double_phi()).expect("dual vectors")
    }

    /// The cocycle `γ(x) ∈ Λ²G` of a vector `x ∈ G`.
    pub fn cocycle(&self, x: &Multivector) -> Multivector {
        assert!(x.space() == self.primal(), "cocycle expects a vector of G");
        let n = self.dim();
        let mut out = Multivector::zero(self.primal());
        for a in 0..n {
            for b in a + 1..n {
                let v = self.gamma.bracket(a, b);
                let c: Scalar = x.terms().map(|(bl, c)| c * v.coeff(bl)).sum();
                out.add_term(Blade::basis(a).union(Blade::basis(b)), -c);
            }
        }
        out
    }

    pub fn is_bialgebra(&self) -> bool {
        self.phi.is_zero()
    }

    /// The same structure with `μ` replaced; spaces and grade are rechecked.
    pub fn with_mu(&self, mu: BracketTable) -> Result<Self> {
        Ok(Self { names: self.names.clone(), ..Self::new(mu, self.gamma.clone(), self.phi.clone())? })
    }

    pub fn with_gamma(&self, gamma: BracketTable) -> Result<Self> {
        Ok(Self { names: self.names.clone(), ..Self::new(self.mu.clone(), gamma, self.phi.clone())? })
    }

    pub fn with_phi(&self, phi: Multivector) -> Result<Self> {
        Ok(Self { names: self.names.clone(), ..Self::new(self.mu.clone(), self.gamma.clone(), phi)? })
    }
}

/// The adjoint characters: `⟨ξ^μ, x⟩ = tr ad^μ_x`, `⟨x^γ, ξ⟩ = tr ad^γ_ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characters {
    pub xi_mu: Multivector,
    pub x_gamma: Multivector,
}

pub fn characters(q: &QuasiLieBialgebra) -> Characters {
    Characters { xi_mu: trace_form(q.mu()), x_gamma: trace_form(q.gamma()) }
}

/// `i ↦ tr ad_{v_i}` as an element of the dual of the table's space.
fn trace_form(b: &BracketTable) -> Multivector {
    let n = b.dim();
    let mut out = Multivector::zero(b.space().dual());
    for i in 0..n {
        let t: Scalar = (0..n).map(|k| b.constant(i, k, k)).sum();
        out.add_term(Blade::basis(i), t);
    }
    out
}
