use super::context::Ctx;
use super::QuasiLieBialgebra;
use crate::exterior::{primal_contraction_operator, Blade, Multivector};
use crate::matrix::{EndoMatrix, Matrix};

/// Result of solving `γ(x0) = ∂_μ φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BvPrerequisite {
    /// `∂_μ φ`.
    pub target: Multivector,
    /// One solution (free coordinates set to zero), if any.
    pub x0: Option<Multivector>,
    /// Dimension of `ker γ`, the direction space of the solution set.
    pub kernel_dim: usize,
    pub operators: Option<BvOperators>,
}

/// `Δ = ∂_γ + i_{x0}`, `δ = d_μ`, `Φ = i_φ`, all acting on `ΛG*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BvOperators {
    pub laplace: EndoMatrix,
    pub delta: EndoMatrix,
    pub phi: EndoMatrix,
}

impl BvPrerequisite {
    pub fn is_solution(&self, q: &QuasiLieBialgebra, x: &Multivector) -> bool {
        q.cocycle(x) == self.target
    }
}

/// Solves `γ(x0) = ∂_μ φ` over the rationals. Meaningful when
/// [`validate`](super::validate) passes.
pub fn bv_prerequisite(q: &QuasiLieBialgebra) -> BvPrerequisite {
    let c = Ctx::new(q);
    let target = c.del_mu.apply(q.phi());
    let pairs: Vec<Blade> = Blade::of_grade(c.n, 2).collect();
    let images: Vec<Multivector> = (0..c.n).map(|k| q.cocycle(&c.e(k))).collect();
    let a = Matrix::from_rows(pairs.iter().map(|&b| images.iter().map(|img| img.coeff(b)).collect()).collect());
    let kernel_dim = c.n - if pairs.is_empty() { 0 } else { a.rank() };
    let b: Vec<_> = pairs.iter().map(|&p| target.coeff(p)).collect();
    let x0 = if pairs.is_empty() {
        Some(Multivector::zero(c.g))
    } else {
        a.solve(&b).map(|v| Multivector::vector(c.g, &v))
    };
    let operators = x0.as_ref().map(|x0| BvOperators {
        laplace: &c.del_gamma + &primal_contraction_operator(x0),
        delta: c.d_mu.clone(),
        phi: primal_contraction_operator(q.phi()),
    });
    BvPrerequisite { target, x0, kernel_dim, operators }
}
