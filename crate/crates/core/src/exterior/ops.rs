use num_traits::Zero;

use super::{Blade, Multivector, SpaceId};
use crate::error::{Error, Result};
use crate::matrix::EndoMatrix;
use crate::scalar::Scalar;

fn same_space(a: &Multivector, b: &Multivector) -> Result<()> {
    if a.space() != b.space() {
        return Err(Error::SpaceMismatch { left: a.space(), right: b.space() });
    }
    Ok(())
}

fn dual_pair(a: &Multivector, x: &Multivector) -> Result<()> {
    match (a.space(), x.space()) {
        (SpaceId::Dual(n), SpaceId::Primal(m)) if n == m => Ok(()),
        (l, r) => Err(Error::SpaceMismatch { left: l, right: r }),
    }
}

/// Exterior product `a ∧ b`.
pub fn wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    same_space(a, b)?;
    Ok(a.wedge(b))
}

/// The pairing `⟨A, X⟩` of `ΛG*` with `ΛG`: on blades
/// `⟨ξ^{i1}∧…∧ξ^{ik}, e_{j1}∧…∧e_{jk}⟩ = det(δ)`, which for canonical
/// blades is 1 on equal index sets and 0 otherwise.
pub fn pair(a: &Multivector, x: &Multivector) -> Result<Scalar> {
    dual_pair(a, x)?;
    Ok(diagonal_pairing(a, x))
}

pub(crate) fn diagonal_pairing(a: &Multivector, x: &Multivector) -> Scalar {
    let mut acc = Scalar::zero();
    for (b, c) in a.terms() {
        let d = x.coeff(b);
        if !d.is_zero() {
            acc += c * d;
        }
    }
    acc
}

/// Matrix of `Y ↦ X ∧ Y` on the exterior algebra of `X`'s space.
pub fn eps(x: &Multivector) -> EndoMatrix {
    let space = x.space();
    EndoMatrix::from_blade_map(space, |b| x.wedge(&Multivector::from_blade(space, b, Scalar::from_integer(1.into()))))
}

/// Contraction of `x` by `a` where both are indexed by the same basis:
/// the adjoint of left wedge, `⟨B, i_a x⟩ = ⟨a ∧ B, x⟩`. On blades,
/// `i_A X = sign(A, X∖A) · (X∖A)` when `A ⊆ X`, else 0.
pub(crate) fn contract_same_basis(a: &Multivector, x: &Multivector, out: SpaceId) -> Multivector {
    let mut r = Multivector::zero(out);
    for (ab, ac) in a.terms() {
        for (xb, xc) in x.terms() {
            if !ab.is_subset_of(xb) {
                continue;
            }
            let rest = xb.without(ab);
            let s = ab.wedge_sign(rest).unwrap_or(1);
            let c = ac * xc;
            r.add_term(rest, if s < 0 { -c } else { c });
        }
    }
    r
}

/// `i_X A` on `ΛG*`, defined by `⟨i_X A, Y⟩ = ⟨A, X ∧ Y⟩`.
pub fn contract_by_primal(x: &Multivector, a: &Multivector) -> Result<Multivector> {
    dual_pair(a, x)?;
    Ok(contract_same_basis(x, a, a.space()))
}

/// `i_A X` on `ΛG`, defined by `⟨B, i_A X⟩ = ⟨A ∧ B, X⟩`.
pub fn contract_by_dual(a: &Multivector, x: &Multivector) -> Result<Multivector> {
    dual_pair(a, x)?;
    Ok(contract_same_basis(a, x, x.space()))
}

/// Matrix of `A ↦ i_X A` on `ΛG*`.
pub fn primal_contraction_operator(x: &Multivector) -> EndoMatrix {
    let dual = x.space().dual();
    EndoMatrix::from_blade_map(dual, |b| contract_same_basis(x, &unit(dual, b), dual))
}

/// Matrix of `Y ↦ i_A Y` on `ΛG`.
pub fn dual_contraction_operator(a: &Multivector) -> EndoMatrix {
    let primal = a.space().dual();
    EndoMatrix::from_blade_map(primal, |b| contract_same_basis(a, &unit(primal, b), primal))
}

fn unit(space: SpaceId, b: Blade) -> Multivector {
    Multivector::from_blade(space, b, Scalar::from_integer(1.into()))
}

/// Factor reversal `Â`: a grade-k blade picks up `(-1)^{k(k-1)/2}`.
pub fn reverse_hat(a: &Multivector) -> Multivector {
    let terms = a.terms().map(|(b, c)| (b, if b.reversal_sign() < 0 { -c.clone() } else { c.clone() }));
    Multivector::from_terms(a.space(), terms).expect("blades already valid")
}

/// `U ∈ ΛD` written as `Σ X_j ⊗ A_j` with `X_j ∈ ΛG`, `A_j ∈ ΛG*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSplit {
    pub n: usize,
    pub pairs: Vec<(Multivector, Multivector)>,
}

impl TensorSplit {
    /// Recombines the pairs in normal order `X_j ∧ A_j` inside `ΛD`.
    pub fn recombine(&self) -> Multivector {
        let mut u = Multivector::zero(SpaceId::Double(self.n));
        for (x, a) in &self.pairs {
            u += &embed_primal(x).wedge(&embed_dual(a));
        }
        u
    }
}

/// Splits each blade of `U` into its G-part and G*-part, G indices first.
/// The sign of reordering into that normal form goes on the G*-factor.
pub fn split_double(u: &Multivector) -> Result<TensorSplit> {
    let SpaceId::Double(n) = u.space() else {
        return Err(Error::SpaceMismatch { left: u.space(), right: SpaceId::Double(u.space().base()) });
    };
    let low = (1u32 << n) - 1;
    let mut pairs = Vec::with_capacity(u.len());
    for (b, c) in u.terms() {
        let g = Blade::from_bits(b.bits() & low);
        let xi = Blade::from_bits(b.bits() & !low);
        let s = g.wedge_sign(xi).expect("disjoint parts");
        let coeff = if s < 0 { -c.clone() } else { c.clone() };
        pairs.push((
            Multivector::from_blade(SpaceId::Primal(n), g, Scalar::from_integer(1.into())),
            Multivector::from_blade(SpaceId::Dual(n), Blade::from_bits(xi.bits() >> n), coeff),
        ));
    }
    Ok(TensorSplit { n, pairs })
}

/// Image of `ΛG` in `ΛD`.
pub fn embed_primal(x: &Multivector) -> Multivector {
    let SpaceId::Primal(n) = x.space() else { panic!("embed_primal expects an element of ΛG") };
    Multivector::from_terms(SpaceId::Double(n), x.terms().map(|(b, c)| (b, c.clone()))).expect("valid")
}

/// Image of `ΛG*` in `ΛD` (indices shifted by n).
pub fn embed_dual(a: &Multivector) -> Multivector {
    let SpaceId::Dual(n) = a.space() else { panic!("embed_dual expects an element of ΛG*") };
    let terms = a.terms().map(|(b, c)| (Blade::from_bits(b.bits() << n), c.clone()));
    Multivector::from_terms(SpaceId::Double(n), terms).expect("valid")
}

/// The G-component and G*-component of a grade-1 element of `D`.
pub fn split_vector(u: &Multivector) -> (Multivector, Multivector) {
    let SpaceId::Double(n) = u.space() else { panic!("split_vector expects an element of D") };
    let mut x = Multivector::zero(SpaceId::Primal(n));
    let mut xi = Multivector::zero(SpaceId::Dual(n));
    for (b, c) in u.terms() {
        assert_eq!(b.grade(), 1, "split_vector expects a grade-1 element");
        let i = b.bits().trailing_zeros() as usize;
        if i < n {
            x.add_term(Blade::basis(i), c.clone());
        } else {
            xi.add_term(Blade::basis(i - n), c.clone());
        }
    }
    (x, xi)
}

/// Swaps `e_i ↔ ξ^i` factorwise; an algebra automorphism of `ΛD`.
pub fn swap_double(u: &Multivector) -> Multivector {
    let SpaceId::Double(n) = u.space() else { panic!("swap_double expects an element of ΛD") };
    let mut out = Multivector::zero(u.space());
    for (b, c) in u.terms() {
        let image: Vec<usize> = b.indices().map(|i| if i < n { i + n } else { i - n }).collect();
        let (s, nb) = Blade::from_indices(&image).expect("distinct indices");
        out.add_term(nb, if s < 0 { -c.clone() } else { c.clone() });
    }
    out
}

/// The canonical pairing of `ΛD` with itself: the hyperbolic form
/// `⟨x + ξ, y + η⟩ = ξ(y) + η(x)` extended by determinants.
pub fn pair_double(u: &Multivector, w: &Multivector) -> Result<Scalar> {
    same_space(u, w)?;
    if !matches!(u.space(), SpaceId::Double(_)) {
        return Err(Error::SpaceMismatch { left: u.space(), right: SpaceId::Double(u.space().base()) });
    }
    Ok(diagonal_pairing(&swap_double(u), w))
}

/// Contraction of `ΛD` by `ΛD` through the hyperbolic pairing:
/// `⟨i_R U, W⟩ = ⟨U, R ∧ W⟩`.
pub fn contract_double(r: &Multivector, u: &Multivector) -> Result<Multivector> {
    same_space(r, u)?;
    if !matches!(u.space(), SpaceId::Double(_)) {
        return Err(Error::SpaceMismatch { left: u.space(), right: SpaceId::Double(u.space().base()) });
    }
    Ok(swap_double(&contract_same_basis(r, &swap_double(u), u.space())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn g(n: usize, idx: &[usize]) -> Multivector {
        Multivector::from_indices(SpaceId::Primal(n), idx, int(1))
    }
    fn d(n: usize, idx: &[usize]) -> Multivector {
        Multivector::from_indices(SpaceId::Dual(n), idx, int(1))
    }

    #[test]
    fn wedge_examples() {
        let e12 = g(2, &[0]).wedge(&g(2, &[1]));
        assert_eq!(e12, g(2, &[0, 1]));
        assert_eq!(g(2, &[1]).wedge(&g(2, &[0])), -&g(2, &[0, 1]));
        assert!(g(2, &[0]).wedge(&g(2, &[0])).is_zero());
        assert!(wedge(&g(2, &[0]), &d(2, &[0])).is_err());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pair(&d(2, &[0, 1]), &g(2, &[0, 1])).unwrap(), int(1));
        assert_eq!(pair(&d(2, &[0, 1]), &g(2, &[1, 0])).unwrap(), int(-1));
        assert_eq!(pair(&d(2, &[0]), &g(2, &[0, 1])).unwrap(), int(0));
        assert!(pair(&g(2, &[0]), &d(2, &[0])).is_err());
    }

    #[test]
    fn eps_examples() {
        let one = Multivector::one(SpaceId::Primal(2));
        assert_eq!(eps(&one), EndoMatrix::identity(4));
        let e1 = eps(&g(2, &[0]));
        assert_eq!(e1.apply(&g(2, &[1])), g(2, &[0, 1]));
        assert!(e1.apply(&g(2, &[0])).is_zero());
    }

    #[test]
    fn contraction_examples() {
        let r = contract_by_primal(&g(2, &[0]), &d(2, &[0, 1])).unwrap();
        assert_eq!(r, d(2, &[1]));
        assert_eq!(pair(&r, &g(2, &[1])).unwrap(), int(1));
        assert!(contract_by_primal(&g(2, &[0]), &d(2, &[1])).unwrap().is_zero());
        let a = d(2, &[0, 1]);
        assert_eq!(contract_by_primal(&Multivector::one(SpaceId::Primal(2)), &a).unwrap(), a);

        let x = contract_by_dual(&d(3, &[0, 1]), &g(3, &[0, 1, 2])).unwrap();
        assert_eq!(x, g(3, &[2]));
        assert!(contract_by_dual(&d(3, &[0]), &g(3, &[1])).unwrap().is_zero());
    }

    #[test]
    fn hat_examples() {
        assert_eq!(reverse_hat(&d(3, &[0])), d(3, &[0]));
        assert_eq!(reverse_hat(&d(3, &[0, 1])), -&d(3, &[0, 1]));
        assert_eq!(reverse_hat(&d(3, &[0, 1, 2])), -&d(3, &[0, 1, 2]));
    }

    #[test]
    fn split_examples() {
        let sp = SpaceId::Double(2);
        let u = Multivector::from_indices(sp, &[0, 3], int(1));
        let s = split_double(&u).unwrap();
        assert_eq!(s.pairs, vec![(g(2, &[0]), d(2, &[1]))]);
        let u = Multivector::from_indices(sp, &[3, 0], int(1));
        let s = split_double(&u).unwrap();
        assert_eq!(s.pairs, vec![(g(2, &[0]), -&d(2, &[1]))]);
        let u = Multivector::from_indices(sp, &[0, 1], int(1));
        let s = split_double(&u).unwrap();
        assert_eq!(s.pairs, vec![(g(2, &[0, 1]), Multivector::one(SpaceId::Dual(2)))]);
    }

    #[test]
    fn double_pairing_is_hyperbolic() {
        let sp = SpaceId::Double(2);
        let e = |i| Multivector::basis(sp, i);
        assert_eq!(pair_double(&e(0), &e(2)).unwrap(), int(1));
        assert_eq!(pair_double(&e(0), &e(0)).unwrap(), int(0));
        assert_eq!(pair_double(&e(1), &e(2)).unwrap(), int(0));
        let u = e(0).wedge(&e(2));
        assert_eq!(pair_double(&u, &u).unwrap(), int(-1));
    }
}
