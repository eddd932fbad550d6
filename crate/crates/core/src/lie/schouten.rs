use std::cell::RefCell;
use std::collections::HashMap;

use super::actions::{ad_action, apply_derivation};
use super::bracket::BracketTable;
use crate::error::{Error, Result};
use crate::exterior::{Blade, Multivector};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// The Schouten bracket `[X, Y]` extending `b` to `ΛV`.
pub fn schouten(b: &BracketTable, x: &Multivector, y: &Multivector) -> Result<Multivector> {
    for m in [x, y] {
        if m.space() != b.space() {
            return Err(Error::SpaceMismatch { left: m.space(), right: b.space() });
        }
    }
    Ok(Schouten::new(b).bracket(x, y))
}

/// Schouten bracket evaluator with per-blade memoization, for sweeps that
/// bracket many pairs against one table.
pub struct Schouten<'a> {
    table: &'a BracketTable,
    ads: Vec<Matrix>,
    memo: RefCell<HashMap<(Blade, Blade), Multivector>>,
}

impl<'a> Schouten<'a> {
    pub fn new(table: &'a BracketTable) -> Self {
        let ads = (0..table.dim()).map(|i| ad_action(table, &Multivector::basis(table.space(), i))).collect();
        Schouten { table, ads, memo: RefCell::new(HashMap::new()) }
    }

    /// # Panics
    ///
    /// If an argument is not over the table's space.
    pub fn bracket(&self, x: &Multivector, y: &Multivector) -> Multivector {
        let space = self.table.space();
        assert!(x.space() == space && y.space() == space, "schouten: space mismatch");
        let mut out = Multivector::zero(space);
        for (xb, xc) in x.terms() {
            for (yb, yc) in y.terms() {
                let v = self.blades(xb, yb);
                out.add_scaled(&(xc * yc), &v);
            }
        }
        out
    }

    /// `[X, y1 ∧ Y'] = [X, y1] ∧ Y' + (-1)^{|X|-1} y1 ∧ [X, Y']` with
    /// `[X, y] = -ad_y X` and `y1` the lowest index of the second blade.
    fn blades(&self, xb: Blade, yb: Blade) -> Multivector {
        let space = self.table.space();
        if xb == Blade::SCALAR || yb == Blade::SCALAR {
            return Multivector::zero(space);
        }
        if let Some(v) = self.memo.borrow().get(&(xb, yb)) {
            return v.clone();
        }
        let one = Scalar::from_integer(1.into());
        let y1 = yb.bits().trailing_zeros() as usize;
        let rest = yb.without(Blade::basis(y1));
        let x = Multivector::from_blade(space, xb, one.clone());
        let mut out = -apply_derivation(&self.ads[y1], &x).wedge(&Multivector::from_blade(space, rest, one));
        if rest != Blade::SCALAR {
            let term = Multivector::basis(space, y1).wedge(&self.blades(xb, rest));
            if (xb.grade() - 1).is_multiple_of(2) {
                out += &term;
            } else {
                out -= &term;
            }
        }
        self.memo.borrow_mut().insert((xb, yb), out.clone());
        out
    }
}
