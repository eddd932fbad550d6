//! Pass/fail records for identity suites.

use serde::Serialize;

use crate::exterior::Multivector;
use crate::matrix::Matrix;
use crate::names::{matrix_difference, BasisNames};
use crate::scalar::{self, Scalar};

/// Both sides of the first failing case of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub statement: String,
    pub passed: bool,
    /// Number of cases evaluated.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Overall pass iff every item passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub title: String,
    pub passed: bool,
    pub items: Vec<CheckItem>,
}

impl ValidationReport {
    pub fn new(title: impl Into<String>) -> Self {
        ValidationReport { title: title.into(), passed: true, items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.passed &= item.passed;
        self.items.push(item);
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn failed_items(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    /// Names of failing items, comma separated.
    pub fn failure_summary(&self) -> String {
        self.failed_items().map(|i| i.name.as_str()).collect::<Vec<_>>().join(", ")
    }
}

/// Values that can be compared and shown in a [`Failure`].
pub trait Comparable: PartialEq {
    /// Location and rendering of a difference, or `None` if equal.
    fn describe_difference(&self, other: &Self, names: &BasisNames) -> Option<(Option<String>, String, String)>;
}

impl Comparable for Multivector {
    fn describe_difference(&self, other: &Self, names: &BasisNames) -> Option<(Option<String>, String, String)> {
        (self != other).then(|| (None, names.show(self), names.show(other)))
    }
}

impl Comparable for Scalar {
    fn describe_difference(&self, other: &Self, _: &BasisNames) -> Option<(Option<String>, String, String)> {
        (self != other).then(|| (None, scalar::format(self), scalar::format(other)))
    }
}

impl Comparable for Matrix {
    fn describe_difference(&self, other: &Self, _: &BasisNames) -> Option<(Option<String>, String, String)> {
        matrix_difference(self, other).map(|(at, l, r)| (Some(at), l, r))
    }
}

/// Accumulates cases of one identity.
pub struct Check<'a> {
    item: CheckItem,
    names: &'a BasisNames,
}

impl<'a> Check<'a> {
    pub fn new(name: &str, statement: &str, names: &'a BasisNames) -> Self {
        Check {
            item: CheckItem {
                name: name.into(),
                statement: statement.into(),
                passed: true,
                cases: 0,
                failure: None,
                note: None,
            },
            names,
        }
    }

    pub fn names(&self) -> &BasisNames {
        self.names
    }

    /// Records one case; `at` is only evaluated on the first failure.
    pub fn compare<T: Comparable>(&mut self, at: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.item.cases += 1;
        if self.item.failure.is_some() {
            if lhs != rhs {
                self.item.passed = false;
            }
            return;
        }
        if let Some((inner, l, r)) = lhs.describe_difference(rhs, self.names) {
            let at = match inner {
                Some(inner) => format!("{}, {inner}", at()),
                None => at(),
            };
            self.item.passed = false;
            self.item.failure = Some(Failure { at, lhs: l, rhs: r });
        }
    }

    /// Records a boolean case with custom failure text.
    pub fn require(&mut self, at: impl FnOnce() -> String, ok: bool, sides: impl FnOnce() -> (String, String)) {
        self.item.cases += 1;
        if !ok {
            self.item.passed = false;
            if self.item.failure.is_none() {
                let (lhs, rhs) = sides();
                self.item.failure = Some(Failure { at: at(), lhs, rhs });
            }
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.item.note = Some(note.into());
    }

    pub fn finish(self) -> CheckItem {
        self.item
    }
}

impl Comparable for crate::exterior::Tensor {
    fn describe_difference(&self, other: &Self, names: &BasisNames) -> Option<(Option<String>, String, String)> {
        let diff = self.sub(other);
        let (k, _) = diff.entries().next()?;
        let at = names.tuple(crate::exterior::SpaceId::Primal(self.dim()), k);
        Some((Some(format!("entry {at}")), scalar::format(&self.get(k)), scalar::format(&other.get(k))))
    }
}
