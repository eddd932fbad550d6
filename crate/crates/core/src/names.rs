//! Display names for basis vectors.

use crate::exterior::{Multivector, SpaceId};
use crate::matrix::Matrix;
use crate::scalar;

/// Names of the basis of G; the dual basis is written with a `*` suffix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisNames {
    primal: Vec<String>,
}

impl BasisNames {
    pub fn new(primal: Vec<String>) -> Self {
        BasisNames { primal }
    }

    pub fn default_for(n: usize) -> Self {
        BasisNames { primal: (1..=n).map(|i| format!("e{i}")).collect() }
    }

    pub fn primal(&self) -> &[String] {
        &self.primal
    }

    pub fn dual(&self) -> Vec<String> {
        self.primal.iter().map(|s| format!("{s}*")).collect()
    }

    /// Names for the double: G names followed by G* names.
    pub fn double(&self) -> Vec<String> {
        let mut v = self.primal.clone();
        v.extend(self.dual());
        v
    }

    pub fn for_space(&self, space: SpaceId) -> Vec<String> {
        match space {
            SpaceId::Primal(n) if n == self.primal.len() => self.primal.clone(),
            SpaceId::Dual(n) if n == self.primal.len() => self.dual(),
            SpaceId::Double(n) if n == self.primal.len() => self.double(),
            other => Multivector::default_names(other),
        }
    }

    pub fn show(&self, m: &Multivector) -> String {
        m.display_with(&self.for_space(m.space()))
    }

    /// Name of the index tuple, e.g. `(h, e*)`.
    pub fn tuple(&self, space: SpaceId, idx: &[usize]) -> String {
        let names = self.for_space(space);
        let parts: Vec<&str> = idx.iter().map(|&i| names.get(i).map(String::as_str).unwrap_or("?")).collect();
        format!("({})", parts.join(", "))
    }

    /// Blade written with names, `1` for the empty blade.
    pub fn blade(&self, space: SpaceId, b: crate::exterior::Blade) -> String {
        if b.grade() == 0 {
            return "1".into();
        }
        let names = self.for_space(space);
        b.indices().map(|i| names[i].clone()).collect::<Vec<_>>().join("^")
    }
}

/// Short description of the first entry where two matrices differ.
pub fn matrix_difference(lhs: &Matrix, rhs: &Matrix) -> Option<(String, String, String)> {
    let (i, j) = lhs.first_difference(rhs)?;
    Some((format!("entry ({i}, {j})"), scalar::format(lhs.get(i, j)), scalar::format(rhs.get(i, j))))
}
