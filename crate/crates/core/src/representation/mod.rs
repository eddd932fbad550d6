//! The representation `ℜ` of the double on `ΛG` and the module map
//! `Q: ΛD → End(ΛG)`.

mod qmap;

pub use qmap::{check_q_isomorphism, exp_r, q_map, q_map_via_exp_contraction, verify_q_isomorphism, QIsomorphism, QMap};

use crate::double::{assemble, DoubleAlgebra};
use crate::error::{Error, Result};
use crate::exterior::{contract_by_dual, dual_contraction_operator, eps, split_vector, Multivector, SpaceId};
use crate::lie::{ad_extension, coad_action, derivation_extension};
use crate::matrix::EndoMatrix;
use crate::quasi::{characters, validate, QuasiLieBialgebra};
use crate::report::{Check, ValidationReport};
use crate::scalar;

/// An element `x + ξ` of the double.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleElement {
    pub x: Multivector,
    pub xi: Multivector,
}

impl DoubleElement {
    pub fn new(x: Multivector, xi: Multivector) -> Result<Self> {
        let n = x.space().base();
        if x.space() != SpaceId::Primal(n) || xi.space() != SpaceId::Dual(n) {
            return Err(Error::SpaceMismatch { left: x.space(), right: xi.space() });
        }
        if !(x.is_zero() || x.is_homogeneous_of(1)) || !(xi.is_zero() || xi.is_homogeneous_of(1)) {
            return Err(Error::GradeMismatch { expected: 1 });
        }
        Ok(DoubleElement { x, xi })
    }

    pub fn primal(x: Multivector) -> Result<Self> {
        let n = x.space().base();
        Self::new(x, Multivector::zero(SpaceId::Dual(n)))
    }

    pub fn dual(xi: Multivector) -> Result<Self> {
        let n = xi.space().base();
        Self::new(Multivector::zero(SpaceId::Primal(n)), xi)
    }

    /// Basis vector `k` of `D`: `e_{k}` for `k < n`, `ξ^{k-n}` otherwise.
    pub fn basis(n: usize, k: usize) -> Self {
        Self::from_double_vector(&Multivector::basis(SpaceId::Double(n), k))
    }

    /// # Panics
    ///
    /// If `u` is not a vector of `D`.
    pub fn from_double_vector(u: &Multivector) -> Self {
        let (x, xi) = split_vector(u);
        DoubleElement { x, xi }
    }

    pub fn to_double_vector(&self) -> Multivector {
        let n = self.x.space().base();
        let mut u = Multivector::zero(SpaceId::Double(n));
        for (b, c) in self.x.terms() {
            u.add_term(b, c.clone());
        }
        for (b, c) in self.xi.terms() {
            u.add_term(crate::exterior::Blade::from_bits(b.bits() << n), c.clone());
        }
        u
    }
}

/// `ℜ` as matrices on `ΛG` for each basis vector of `D`:
/// `ℜ_x = γ(x) ∧ · + ad_x - ½⟨ξ^μ, x⟩`,
/// `ℜ_ξ = -i_{d_μ ξ} + ad^{γ*}_ξ - (i_ξ φ_D) ∧ · + ½⟨x^γ, ξ⟩`,
/// with `φ_D = q.double_phi()`.
#[derive(Clone, Debug)]
pub struct Representation {
    n: usize,
    double: DoubleAlgebra,
    basis: Vec<EndoMatrix>,
}

impl Representation {
    /// Validates `q` first.
    pub fn new(q: &QuasiLieBialgebra) -> Result<Self> {
        let report = validate(q);
        if !report.passed() {
            return Err(Error::InvalidStructure { failed: report.failure_summary() });
        }
        Ok(Self::unchecked(q))
    }

    /// Builds the matrices without validating `q`.
    pub fn unchecked(q: &QuasiLieBialgebra) -> Self {
        let n = q.dim();
        let g = q.primal();
        let chars = characters(q);
        let dim = g.blade_count();
        let id = EndoMatrix::identity(dim);
        let half = scalar::frac(1, 2);
        let d_mu = crate::lie::d_operator(q.mu());
        let dphi = q.double_phi();
        let mut basis = Vec::with_capacity(2 * n);
        for i in 0..n {
            let x = Multivector::basis(g, i);
            let t = &half * chars.xi_mu.component(i);
            let m = &(&eps(&q.cocycle(&x)) + &ad_extension(q.mu(), &x)) - &id.scaled(&t);
            basis.push(m);
        }
        for a in 0..n {
            let xi = Multivector::basis(q.dual(), a);
            let t = &half * chars.x_gamma.component(a);
            let i_xi_phi = contract_by_dual(&xi, &dphi).expect("dual against primal");
            let m = &(&(&derivation_extension(g, &coad_action(q.gamma(), &xi))
                - &dual_contraction_operator(&d_mu.apply(&xi)))
                - &eps(&i_xi_phi))
                + &id.scaled(&t);
            basis.push(m);
        }
        Representation { n, double: assemble(q), basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn double(&self) -> &DoubleAlgebra {
        &self.double
    }

    /// `ℜ_{u_k}` for basis vector `k` of `D`.
    pub fn basis_matrix(&self, k: usize) -> &EndoMatrix {
        &self.basis[k]
    }

    /// `ℜ_u` for a vector `u` of `D`.
    pub fn matrix_of_vector(&self, u: &Multivector) -> EndoMatrix {
        let dim = 1usize << self.n;
        let mut m = EndoMatrix::zeros(dim, dim);
        for (b, c) in u.terms() {
            m.add_scaled(c, &self.basis[b.bits().trailing_zeros() as usize]);
        }
        m
    }

    pub fn matrix(&self, u: &DoubleElement) -> EndoMatrix {
        self.matrix_of_vector(&u.to_double_vector())
    }

    pub fn action(&self, u: &DoubleElement, y: &Multivector) -> Multivector {
        self.matrix(u).apply(y)
    }

    /// `Γ_u(T) = ℜ_u T - T ℜ_u`.
    pub fn gamma_action(&self, u: &DoubleElement, t: &EndoMatrix) -> EndoMatrix {
        self.matrix(u).commutator(t)
    }

    /// `[ℜ_u, ℜ_v] = ℜ_{[u,v]_D}` on all basis pairs, grouped by kind.
    pub fn verify(&self) -> ValidationReport {
        let names = self.double.names();
        let n = self.n;
        let mut report = ValidationReport::new("representation");
        let kinds = [
            ("representation_primal_pairs", "[R_x, R_y] = R_{[x,y]_D}"),
            ("representation_mixed_pairs", "[R_x, R_xi] = R_{[x,xi]_D}"),
            ("representation_dual_pairs", "[R_xi, R_eta] = R_{[xi,eta]_D}"),
        ];
        for (kind, (name, statement)) in kinds.iter().enumerate() {
            let mut k = Check::new(name, statement, names);
            for u in 0..2 * n {
                for v in u + 1..2 * n {
                    let pair_kind = usize::from(u >= n) + usize::from(v >= n);
                    if pair_kind != kind {
                        continue;
                    }
                    let lhs = self.basis[u].commutator(&self.basis[v]);
                    let rhs = self.matrix_of_vector(self.double.bracket().bracket(u, v));
                    let space = self.double.space();
                    k.compare(|| format!("u={}, v={}", names.tuple(space, &[u]), names.tuple(space, &[v])), &lhs, &rhs);
                }
            }
            report.push(k.finish());
        }
        report
    }
}

/// `ℜ_u(Y)`.
pub fn rep_action(q: &QuasiLieBialgebra, u: &DoubleElement, y: &Multivector) -> Result<Multivector> {
    if y.space() != q.primal() {
        return Err(Error::SpaceMismatch { left: y.space(), right: q.primal() });
    }
    Ok(Representation::new(q)?.action(u, y))
}

pub fn rep_matrix(q: &QuasiLieBialgebra, u: &DoubleElement) -> Result<EndoMatrix> {
    Ok(Representation::new(q)?.matrix(u))
}

pub fn gamma_action(q: &QuasiLieBialgebra, u: &DoubleElement, t: &EndoMatrix) -> Result<EndoMatrix> {
    Ok(Representation::new(q)?.gamma_action(u, t))
}

/// Representation law over all basis pairs of `D`.
pub fn verify_representation(q: &QuasiLieBialgebra) -> ValidationReport {
    Representation::unchecked(q).verify()
}
