use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Blade, SpaceId};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Sparse element of the exterior algebra over a [`SpaceId`].
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    space: SpaceId,
    terms: BTreeMap<Blade, Scalar>,
}

impl Multivector {
    pub fn zero(space: SpaceId) -> Self {
        Multivector { space, terms: BTreeMap::new() }
    }

    pub fn one(space: SpaceId) -> Self {
        Multivector::scalar(space, Scalar::one())
    }

    pub fn scalar(space: SpaceId, c: Scalar) -> Self {
        Multivector::from_blade(space, Blade::SCALAR, c)
    }

    /// The basis vector with index `i`.
    ///
    /// # Panics
    ///
    /// If `i` is not below the space dimension.
    pub fn basis(space: SpaceId, i: usize) -> Self {
        assert!(i < space.dim(), "basis index {i} out of range for {space}");
        Multivector::from_blade(space, Blade::basis(i), Scalar::one())
    }

    /// `c` times the blade.
    ///
    /// # Panics
    ///
    /// If the blade uses an index outside the space.
    pub fn from_blade(space: SpaceId, blade: Blade, c: Scalar) -> Self {
        let mut m = Multivector::zero(space);
        m.add_term(blade, c);
        m
    }

    /// Builds a multivector from (blade, coefficient) terms, merging
    /// repeated blades.
    pub fn from_terms<I>(space: SpaceId, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Scalar)>,
    {
        let mut m = Multivector::zero(space);
        for (b, c) in terms {
            if b.bits() >> space.dim() != 0 {
                let index = 31 - b.bits().leading_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, dim: space.dim() });
            }
            m.add_term(b, c);
        }
        Ok(m)
    }

    /// Wedge of basis vectors in the given order.
    pub fn from_indices(space: SpaceId, indices: &[usize], c: Scalar) -> Self {
        for &i in indices {
            assert!(i < space.dim(), "basis index {i} out of range for {space}");
        }
        match Blade::from_indices(indices) {
            Some((s, b)) => Multivector::from_blade(space, b, c * scalar::int(s as i64)),
            None => Multivector::zero(space),
        }
    }

    /// Grade-1 element with the given coordinates.
    pub fn vector(space: SpaceId, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), space.dim());
        let mut m = Multivector::zero(space);
        for (i, c) in coords.iter().enumerate() {
            m.add_term(Blade::basis(i), c.clone());
        }
        m
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    /// Same coefficients, reinterpreted over another space of equal
    /// dimension.
    pub fn with_space(mut self, space: SpaceId) -> Self {
        assert_eq!(space.dim(), self.space.dim());
        self.space = space;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the basis vector `i`.
    pub fn component(&self, i: usize) -> Scalar {
        self.coeff(Blade::basis(i))
    }

    /// Grade-0 coefficient.
    pub fn scalar_part(&self) -> Scalar {
        self.coeff(Blade::SCALAR)
    }

    pub fn add_term(&mut self, blade: Blade, c: Scalar) {
        assert!(
            blade.bits() >> self.space.dim() == 0,
            "blade {blade} out of range for {}",
            self.space
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Multivector) {
        self.check_space(other);
        if c.is_zero() {
            return;
        }
        for (b, v) in other.terms() {
            self.add_term(b, c * v);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Multivector {
        let mut out = Multivector::zero(self.space);
        if !c.is_zero() {
            for (b, v) in self.terms() {
                out.terms.insert(b, c * v);
            }
        }
        out
    }

    /// The homogeneous component of grade `k`.
    pub fn grade_part(&self, k: usize) -> Multivector {
        Multivector {
            space: self.space,
            terms: self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    /// `Some(k)` when every term has grade `k` (zero is homogeneous of any
    /// grade and reports `None`).
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.terms.keys().all(|b| b.grade() == k)
    }

    pub fn max_grade(&self) -> Option<usize> {
        self.terms.keys().map(|b| b.grade()).max()
    }

    /// Exterior product.
    ///
    /// # Panics
    ///
    /// On space mismatch; [`crate::exterior::wedge`] is the checked form.
    pub fn wedge(&self, other: &Multivector) -> Multivector {
        self.check_space(other);
        let mut out = Multivector::zero(self.space);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some(s) = a.wedge_sign(b) {
                    let c = ca * cb;
                    out.add_term(a.union(b), if s < 0 { -c } else { c });
                }
            }
        }
        out
    }

    pub(crate) fn check_space(&self, other: &Multivector) {
        assert!(
            self.space == other.space,
            "space mismatch: {} vs {}",
            self.space,
            other.space
        );
    }

    /// Renders with the given basis names, e.g. `2*e^h - 1*f`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms().enumerate() {
            let coeff = scalar::format(c);
            if i > 0 {
                out.push_str(" + ");
            }
            if b == Blade::SCALAR {
                out.push_str(&coeff);
            } else {
                let factors: Vec<&str> = b
                    .indices()
                    .map(|k| names.get(k).map(String::as_str).unwrap_or("?"))
                    .collect();
                out.push_str(&format!("{}*{}", coeff, factors.join("^")));
            }
        }
        out
    }

    /// Default basis names: `e1..` on G, `x1..` on G*, and `e1.., x1..`
    /// on the double.
    pub fn default_names(space: SpaceId) -> Vec<String> {
        let n = space.base();
        match space {
            SpaceId::Primal(_) => (1..=n).map(|i| format!("e{i}")).collect(),
            SpaceId::Dual(_) => (1..=n).map(|i| format!("x{i}")).collect(),
            SpaceId::Double(_) => (1..=n).map(|i| format!("e{i}")).chain((1..=n).map(|i| format!("x{i}"))).collect(),
        }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&Multivector::default_names(self.space)))
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += &rhs;
        self
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= &rhs;
        self
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        self.check_space(rhs);
        for (b, c) in rhs.terms() {
            self.add_term(b, c.clone());
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        self.check_space(rhs);
        for (b, c) in rhs.terms() {
            self.add_term(b, -c.clone());
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scaled(&-Scalar::one())
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl Mul<&Scalar> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Scalar) -> Multivector {
        self.scaled(rhs)
    }
}
