use std::collections::BTreeMap;

use super::actions::{ad_action, apply_derivation, coad_action};
use super::bracket::BracketTable;
use crate::error::{Error, Result};
use crate::exterior::{Blade, Multivector, SpaceId};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// The module a cochain takes values in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// The ground field with zero action.
    Trivial,
    /// `Λ^p V` with the derivation extension of `ad`.
    Adjoint { grade: usize },
    /// `Λ^p V*` with the derivation extension of `ad*`.
    Coadjoint { grade: usize },
}

/// Degree and coefficient module of a space of cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    pub degree: usize,
    pub coefficients: Coefficients,
}

/// An alternating k-linear map on `V`, stored by its values on ascending
/// index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    base: SpaceId,
    space: CochainSpace,
    values: BTreeMap<Blade, Multivector>,
}

impl Cochain {
    pub fn zero(base: SpaceId, space: CochainSpace) -> Result<Self> {
        if space.degree > base.dim() {
            return Err(Error::DegreeOverflow { degree: space.degree, dim: base.dim() });
        }
        Ok(Cochain { base, space, values: BTreeMap::new() })
    }

    /// The 0-cochain with value `m`.
    pub fn constant(base: SpaceId, coefficients: Coefficients, m: Multivector) -> Result<Self> {
        let mut c = Cochain::zero(base, CochainSpace { degree: 0, coefficients })?;
        c.set(&[], m)?;
        Ok(c)
    }

    /// The trivial-coefficient cochain `α(x_I) = ⟨α, e_I⟩` of a form.
    pub fn from_form(base: SpaceId, form: &Multivector, degree: usize) -> Result<Self> {
        if form.space() != base.dual() {
            return Err(Error::SpaceMismatch { left: form.space(), right: base.dual() });
        }
        let mut c = Cochain::zero(base, CochainSpace { degree, coefficients: Coefficients::Trivial })?;
        for (b, v) in form.grade_part(degree).terms() {
            c.values.insert(b, Multivector::scalar(base, v.clone()));
        }
        Ok(c)
    }

    /// The form with coefficients the values of a trivial cochain.
    pub fn to_form(&self) -> Multivector {
        assert_eq!(self.space.coefficients, Coefficients::Trivial);
        let mut m = Multivector::zero(self.base.dual());
        for (b, v) in &self.values {
            m.add_term(*b, v.scalar_part());
        }
        m
    }

    pub fn base(&self) -> SpaceId {
        self.base
    }

    pub fn cochain_space(&self) -> CochainSpace {
        self.space
    }

    pub fn degree(&self) -> usize {
        self.space.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Multivector::is_zero)
    }

    fn value_space(&self) -> SpaceId {
        match self.space.coefficients {
            Coefficients::Trivial | Coefficients::Adjoint { .. } => self.base,
            Coefficients::Coadjoint { .. } => self.base.dual(),
        }
    }

    fn check_value(&self, m: &Multivector) -> Result<()> {
        if m.space() != self.value_space() {
            return Err(Error::SpaceMismatch { left: m.space(), right: self.value_space() });
        }
        let grade = match self.space.coefficients {
            Coefficients::Trivial => 0,
            Coefficients::Adjoint { grade } | Coefficients::Coadjoint { grade } => grade,
        };
        if !m.is_homogeneous_of(grade) {
            return Err(Error::GradeMismatch { expected: grade });
        }
        Ok(())
    }

    /// Sets the value on a strictly ascending index tuple.
    pub fn set(&mut self, indices: &[usize], m: Multivector) -> Result<()> {
        if indices.len() != self.space.degree {
            return Err(Error::Invalid(format!("expected {} arguments", self.space.degree)));
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Invalid("cochain arguments must be strictly ascending".into()));
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= self.base.dim()) {
            return Err(Error::IndexOutOfRange { index: i, dim: self.base.dim() });
        }
        self.check_value(&m)?;
        let (_, b) = Blade::from_indices(indices).expect("ascending");
        if m.is_zero() {
            self.values.remove(&b);
        } else {
            self.values.insert(b, m);
        }
        Ok(())
    }

    /// Value on basis vectors in any order (alternating).
    pub fn eval(&self, indices: &[usize]) -> Multivector {
        let zero = Multivector::zero(self.value_space());
        match Blade::from_indices(indices) {
            None => zero,
            Some((s, b)) => match self.values.get(&b) {
                None => zero,
                Some(v) if s < 0 => -v,
                Some(v) => v.clone(),
            },
        }
    }
}

/// The Chevalley–Eilenberg coboundary
/// `(δα)(x0..xk) = Σ_i (-1)^i x_i·α(..x̂_i..) + Σ_{i<j} (-1)^{i+j} α(b(x_i,x_j), ..x̂_i..x̂_j..)`.
pub fn ce_differential(b: &BracketTable, alpha: &Cochain) -> Result<Cochain> {
    if alpha.base != b.space() {
        return Err(Error::SpaceMismatch { left: alpha.base, right: b.space() });
    }
    let dim = b.dim();
    let k = alpha.degree();
    if k + 1 > dim {
        return Err(Error::DegreeOverflow { degree: k + 1, dim });
    }
    let actions: Vec<Option<Matrix>> = (0..dim)
        .map(|i| {
            let x = Multivector::basis(b.space(), i);
            match alpha.space.coefficients {
                Coefficients::Trivial => None,
                Coefficients::Adjoint { .. } => Some(ad_action(b, &x)),
                Coefficients::Coadjoint { .. } => Some(coad_action(b, &x)),
            }
        })
        .collect();
    let mut out = Cochain::zero(b.space(), CochainSpace { degree: k + 1, coefficients: alpha.space.coefficients })?;
    for tuple in Blade::of_grade(dim, k + 1) {
        let idx: Vec<usize> = tuple.indices().collect();
        let mut value = Multivector::zero(alpha.value_space());
        for i in 0..idx.len() {
            if let Some(m) = &actions[idx[i]] {
                let rest: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &v)| v).collect();
                let term = apply_derivation(m, &alpha.eval(&rest));
                if i % 2 == 0 {
                    value += &term;
                } else {
                    value -= &term;
                }
            }
        }
        for i in 0..idx.len() {
            for j in i + 1..idx.len() {
                let rest: Vec<usize> =
                    idx.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &v)| v).collect();
                let sign = if (i + j) % 2 == 0 { Scalar::from_integer(1.into()) } else { Scalar::from_integer((-1).into()) };
                for (mb, mc) in b.bracket(idx[i], idx[j]).terms() {
                    let mut args = vec![mb.bits().trailing_zeros() as usize];
                    args.extend_from_slice(&rest);
                    value.add_scaled(&(&sign * mc), &alpha.eval(&args));
                }
            }
        }
        if !value.is_zero() {
            out.values.insert(tuple, value);
        }
    }
    Ok(out)
}
