use super::QuasiLieBialgebra;
use crate::error::{Error, Result};
use crate::exterior::{Blade, Multivector, SpaceId, Tensor};
use crate::lie::{ad_extension, require_lie, vector_index, BracketTable, Schouten};
use crate::scalar::{self, Scalar};

/// The bracket on `G*` dual to a cocycle `x ↦ γ(x) ∈ Λ²G`:
/// the `ξ^k` coefficient of `γ(ξ^a, ξ^b)` is minus the `e_a∧e_b`
/// coefficient of `γ(e_k)`.
pub fn gamma_table_from_cocycle<F>(n: usize, mut cocycle: F) -> BracketTable
where
    F: FnMut(usize) -> Multivector,
{
    let images: Vec<Multivector> = (0..n).map(&mut cocycle).collect();
    BracketTable::from_fn(SpaceId::Dual(n), |a, b| {
        let ab = Blade::basis(a).union(Blade::basis(b));
        let mut v = Multivector::zero(SpaceId::Dual(n));
        for (k, img) in images.iter().enumerate() {
            v.add_term(Blade::basis(k), -img.coeff(ab));
        }
        v
    })
}

/// The exact structure `γ(x) = [x, r]`, `φ = -½[r, r]`.
pub fn from_r_matrix(mu: &BracketTable, r: &Multivector) -> Result<QuasiLieBialgebra> {
    require_lie(mu)?;
    if r.space() != mu.space() {
        return Err(Error::SpaceMismatch { left: r.space(), right: mu.space() });
    }
    if !r.is_homogeneous_of(2) {
        return Err(Error::GradeMismatch { expected: 2 });
    }
    Ok(exact_structure(mu, r, &Multivector::zero(mu.space())))
}

/// `γ` from `a`, `φ = -½([a, a] + extra)`.
fn exact_structure(mu: &BracketTable, a: &Multivector, extra: &Multivector) -> QuasiLieBialgebra {
    let n = mu.dim();
    let sch = Schouten::new(mu);
    let gamma = gamma_table_from_cocycle(n, |k| sch.bracket(&Multivector::basis(mu.space(), k), a));
    let phi = (&sch.bracket(a, a) + extra).scaled(&scalar::frac(-1, 2));
    QuasiLieBialgebra::new(mu.clone(), gamma, phi).expect("consistent spaces")
}

/// The structure of a tensor `r = a + s` with ad-invariant symmetric part:
/// `γ(x) = [x, a]`, `φ = -½([a, a] + [s, s])`, where `[s, s]` is twice the
/// classical Yang–Baxter expression of `s`.
///
/// Fails with [`Error::NotInvariant`] when `s` is not ad-invariant; the
/// error records whether the antisymmetric part is.
pub fn from_quasitriangular(mu: &BracketTable, r: &Tensor) -> Result<QuasiLieBialgebra> {
    require_lie(mu)?;
    let n = mu.dim();
    if r.rank() != 2 || r.dim() != n {
        return Err(Error::Invalid(format!("expected a rank-2 tensor on a {n}-dimensional space")));
    }
    let half = scalar::frac(1, 2);
    let mut a = Multivector::zero(mu.space());
    let mut s = Tensor::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            let (rij, rji) = (r.get(&[i, j]), r.get(&[j, i]));
            if i < j {
                a.add_term(Blade::basis(i).union(Blade::basis(j)), &half * (&rij - &rji));
            }
            s.add(vec![i, j], &half * (&rij + &rji));
        }
    }
    if let Some(index) = (0..n).find(|&x| !is_invariant(mu, &s, x)) {
        let antisymmetric_invariant =
            (0..n).all(|x| ad_extension(mu, &Multivector::basis(mu.space(), x)).apply(&a).is_zero());
        return Err(Error::NotInvariant { index, antisymmetric_invariant });
    }
    let cyb = classical_yang_baxter(mu, &s);
    let mut ss = Multivector::zero(mu.space());
    for (k, v) in cyb.entries() {
        if k[0] < k[1] && k[1] < k[2] {
            let (_, b) = Blade::from_indices(k).expect("distinct");
            ss.add_term(b, v * scalar::int(2));
        }
    }
    Ok(exact_structure(mu, &a, &ss))
}

/// `(ad_x ⊗ 1 + 1 ⊗ ad_x) s = 0`.
fn is_invariant(mu: &BracketTable, s: &Tensor, x: usize) -> bool {
    let mut out = Tensor::zero(s.dim(), 2);
    for (k, v) in s.entries() {
        for (m, c) in mu.bracket(x, k[0]).terms() {
            out.add(vec![vector_index(m), k[1]], v * c);
        }
        for (m, c) in mu.bracket(x, k[1]).terms() {
            out.add(vec![k[0], vector_index(m)], v * c);
        }
    }
    out.is_zero()
}

/// `[t12, t13] + [t12, t23] + [t13, t23]` for `t = Σ t_ij e_i ⊗ e_j`.
fn classical_yang_baxter(mu: &BracketTable, t: &Tensor) -> Tensor {
    let mut out = Tensor::zero(t.dim(), 3);
    let terms: Vec<(Vec<usize>, Scalar)> = t.entries().map(|(k, v)| (k.to_vec(), v.clone())).collect();
    for (p, c1) in &terms {
        let (i, j) = (p[0], p[1]);
        for (q, c2) in &terms {
            let (k, l) = (q[0], q[1]);
            let c = c1 * c2;
            for (m, v) in mu.bracket(i, k).terms() {
                out.add(vec![vector_index(m), j, l], &c * v);
            }
            for (m, v) in mu.bracket(j, k).terms() {
                out.add(vec![i, vector_index(m), l], &c * v);
            }
            for (m, v) in mu.bracket(j, l).terms() {
                out.add(vec![i, k, vector_index(m)], &c * v);
            }
        }
    }
    out
}
