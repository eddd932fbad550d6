use super::Representation;
use crate::double::{canonical_r, DoubleAlgebra};
use crate::error::{Error, Result};
use crate::exterior::{
    contract_double, dual_contraction_operator, embed_dual, eps, reverse_hat, split_double, Blade, Multivector, SpaceId,
};
use crate::lie::{ad_action, apply_derivation};
use crate::matrix::{EndoMatrix, Matrix};
use crate::quasi::QuasiLieBialgebra;
use crate::report::{Check, ValidationReport};
use crate::scalar::{self, Scalar};

/// `exp_∧ r = 1 + r + r∧r/2! + …` for the canonical `r`.
pub fn exp_r(d: &DoubleAlgebra) -> Multivector {
    exp_wedge(&canonical_r(d), d.n())
}

fn exp_wedge(r: &Multivector, n: usize) -> Multivector {
    let mut out = Multivector::one(r.space());
    let mut power = Multivector::one(r.space());
    let mut fact = scalar::one();
    for k in 1..=n {
        power = power.wedge(r);
        fact *= scalar::int(k as i64);
        out.add_scaled(&(scalar::one() / &fact), &power);
    }
    out
}

/// `D(X ∧ A)(Y) = X ∧ i_Â Y`, extended linearly over `ΛD`.
fn split_apply(v: &Multivector) -> EndoMatrix {
    let n = v.space().base();
    let dim = 1usize << n;
    let mut m = EndoMatrix::zeros(dim, dim);
    for (x, a) in split_double(v).expect("element of the double").pairs {
        let term = &eps(&x) * &dual_contraction_operator(&reverse_hat(&a));
        m.add_scaled(&scalar::one(), &term);
    }
    m
}

fn double_space(q: &QuasiLieBialgebra, u: &Multivector) -> Result<usize> {
    let n = q.dim();
    if u.space() != SpaceId::Double(n) {
        return Err(Error::SpaceMismatch { left: u.space(), right: SpaceId::Double(n) });
    }
    Ok(n)
}

fn canonical_exp(n: usize) -> Multivector {
    let space = SpaceId::Double(n);
    let mut r = Multivector::zero(space);
    for i in 0..n {
        r += &Multivector::from_indices(space, &[i, n + i], scalar::frac(1, 2));
    }
    exp_wedge(&r, n)
}

/// `Q(U)(Y) = Σ_j X_j ∧ i_{Â_j} Y` where `i_{exp_∧ r} U = Σ_j X_j ∧ A_j`.
pub fn q_map(q: &QuasiLieBialgebra, u: &Multivector) -> Result<EndoMatrix> {
    let n = double_space(q, u)?;
    Ok(q_of(&canonical_exp(n), u))
}

fn q_of(exp: &Multivector, u: &Multivector) -> EndoMatrix {
    split_apply(&contract_double(exp, u).expect("same space"))
}

/// The same map computed as `D ∘ exp(i_r)` with
/// `i_r = ½ Σ_i i_{ξ^i} ∘ i_{e_i}` built from single-vector contractions.
pub fn q_map_via_exp_contraction(q: &QuasiLieBialgebra, u: &Multivector) -> Result<EndoMatrix> {
    let n = double_space(q, u)?;
    let half = scalar::frac(1, 2);
    let i_r = |w: &Multivector| {
        let mut out = Multivector::zero(w.space());
        for i in 0..n {
            out.add_scaled(&half, &contract_vector(n + i, &contract_vector(i, w)));
        }
        out
    };
    let mut total = u.clone();
    let mut term = u.clone();
    for k in 1..=n {
        term = i_r(&term).scaled(&(scalar::one() / scalar::int(k as i64)));
        total += &term;
    }
    Ok(split_apply(&total))
}

/// Hyperbolic contraction by the basis vector `k` of `D`: removes the
/// partner factor with sign `(-1)^(factors before it)`.
fn contract_vector(k: usize, w: &Multivector) -> Multivector {
    let n = w.space().base();
    let partner = if k < n { k + n } else { k - n };
    let mut out = Multivector::zero(w.space());
    for (b, c) in w.terms() {
        if b.contains(partner) {
            let below = (b.bits() & ((1u32 << partner) - 1)).count_ones() as usize;
            out.add_term(b.without(Blade::basis(partner)), &scalar::sign(below) * c);
        }
    }
    out
}

/// Images of every blade of `ΛD` under `Q`, in blade-index order.
#[derive(Clone, Debug)]
pub struct QMap {
    n: usize,
    images: Vec<EndoMatrix>,
}

impl QMap {
    pub fn new(n: usize) -> Self {
        let exp = canonical_exp(n);
        let space = SpaceId::Double(n);
        let images = Blade::all(2 * n).map(|b| q_of(&exp, &Multivector::from_blade(space, b, scalar::one()))).collect();
        QMap { n, images }
    }

    pub fn image(&self, b: Blade) -> &EndoMatrix {
        &self.images[b.index()]
    }

    /// `Q(U)` by linearity.
    pub fn apply(&self, u: &Multivector) -> EndoMatrix {
        let dim = 1usize << self.n;
        let mut m = EndoMatrix::zeros(dim, dim);
        for (b, c) in u.terms() {
            m.add_scaled(c, self.image(b));
        }
        m
    }

    /// Rank of the `4^n × 4^n` matrix whose columns are the flattened `Q(U)`.
    pub fn rank(&self) -> usize {
        let dim = 1usize << self.n;
        let rows = (0..dim * dim)
            .map(|p| self.images.iter().map(|m| m.get(p / dim, p % dim).clone()).collect())
            .collect();
        Matrix::from_rows(rows).rank()
    }
}

/// Outcome of [`verify_q_isomorphism`] together with the computed rank.
#[derive(Clone, Debug)]
pub struct QIsomorphism {
    pub report: ValidationReport,
    pub rank: usize,
}

/// Intertwining `Γ_u ∘ Q = Q ∘ ad_u` on every basis `u` of `D` and blade of
/// `ΛD`, bijectivity by exact rank, the values on `1`, `ΛG`, `ΛG*`, and
/// agreement of the two constructions of `Q`.
pub fn verify_q_isomorphism(q: &QuasiLieBialgebra) -> ValidationReport {
    check_q_isomorphism(q).report
}

pub fn check_q_isomorphism(q: &QuasiLieBialgebra) -> QIsomorphism {
    let n = q.dim();
    let rep = Representation::unchecked(q);
    let qm = QMap::new(n);
    let names = q.names();
    let dspace = SpaceId::Double(n);
    let blades: Vec<Blade> = Blade::all(2 * n).collect();
    let mut report = ValidationReport::new("q isomorphism");

    let mut k = Check::new("q_unit", "Q(1) = id", names);
    k.compare(|| "U=1".into(), qm.image(Blade::SCALAR), &EndoMatrix::identity(1 << n));
    report.push(k.finish());

    let mut k = Check::new("q_on_primal", "Q(X) = X ^ . for X in LG", names);
    for b in Blade::all(n) {
        let x = Multivector::from_blade(q.primal(), b, scalar::one());
        k.compare(|| format!("X={}", names.blade(q.primal(), b)), qm.image(b), &eps(&x));
    }
    report.push(k.finish());

    let mut k = Check::new("q_on_dual", "Q(A) = i_{A^} for A in LG*", names);
    for b in Blade::all(n) {
        let a = Multivector::from_blade(q.dual(), b, scalar::one());
        let lhs = qm.apply(&embed_dual(&a));
        k.compare(|| format!("A={}", names.blade(q.dual(), b)), &lhs, &dual_contraction_operator(&reverse_hat(&a)));
    }
    report.push(k.finish());

    let mut k = Check::new("q_formulations_agree", "D(i_{exp r} U) = D(exp(i_r) U)", names);
    for &b in &blades {
        let u = Multivector::from_blade(dspace, b, scalar::one());
        let alt = q_map_via_exp_contraction(q, &u).expect("double space");
        k.compare(|| format!("U={}", names.blade(dspace, b)), qm.image(b), &alt);
    }
    report.push(k.finish());

    let mut k = Check::new("q_intertwining", "R_u Q(U) - Q(U) R_u = Q(ad_u U)", names);
    for v in 0..2 * n {
        let ad = ad_action(rep.double().bracket(), &Multivector::basis(dspace, v));
        let r = rep.basis_matrix(v);
        for &b in &blades {
            let u = Multivector::from_blade(dspace, b, scalar::one());
            let lhs = r.commutator(qm.image(b));
            let rhs = qm.apply(&apply_derivation(&ad, &u));
            k.compare(
                || format!("u={}, U={}", names.tuple(dspace, &[v]), names.blade(dspace, b)),
                &lhs,
                &rhs,
            );
        }
    }
    report.push(k.finish());

    let rank = qm.rank();
    let full = 1usize << (2 * n);
    let mut k = Check::new("q_bijective", "rank Q = 4^n", names);
    k.compare(|| "rank".into(), &Scalar::from_integer(rank.into()), &Scalar::from_integer(full.into()));
    k.note(format!("rank {rank} of {full}"));
    report.push(k.finish());
    QIsomorphism { report, rank }
}
