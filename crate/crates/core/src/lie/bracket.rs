use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exterior::{Blade, Multivector, SpaceId};
use crate::scalar::Scalar;

/// Structure constants `c^k_{ij}` of a bilinear antisymmetric bracket on a
/// space; only `i < j` is set explicitly, `[e_j, e_i] = -[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    space: SpaceId,
    table: Vec<Multivector>,
}

impl BracketTable {
    /// The zero bracket.
    pub fn zero(space: SpaceId) -> Self {
        let d = space.dim();
        BracketTable { space, table: vec![Multivector::zero(space); d * d] }
    }

    /// Builds a table from `(i, j, k, c)` meaning `c^k_{ij} = c` with
    /// `i < j`. Repeated `(i, j, k)` entries are rejected.
    pub fn from_constants<I>(space: SpaceId, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let d = space.dim();
        let mut t = BracketTable::zero(space);
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= d {
                    return Err(Error::IndexOutOfRange { index: idx, dim: d });
                }
            }
            if i >= j {
                return Err(Error::Invalid(format!(
                    "bracket entry ({}, {}, {}) must have i < j",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::Invalid(format!("duplicate bracket entry ({}, {}, {})", i + 1, j + 1, k + 1)));
            }
            t.add_constant(i, j, k, c);
        }
        Ok(t)
    }

    /// Builds a table from the value of each `[e_i, e_j]`, `i < j`.
    pub fn from_fn<F>(space: SpaceId, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Multivector,
    {
        let d = space.dim();
        let mut t = BracketTable::zero(space);
        for i in 0..d {
            for j in i + 1..d {
                let v = f(i, j);
                assert!(v.space() == space && v.is_homogeneous_of(1), "bracket values must be vectors");
                t.set(i, j, v);
            }
        }
        t
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Same constants over another space of equal dimension.
    pub fn with_space(&self, space: SpaceId) -> BracketTable {
        assert_eq!(space.dim(), self.space.dim());
        BracketTable { space, table: self.table.iter().map(|m| m.clone().with_space(space)).collect() }
    }

    fn set(&mut self, i: usize, j: usize, v: Multivector) {
        let d = self.dim();
        self.table[j * d + i] = -&v;
        self.table[i * d + j] = v;
    }

    /// Adds `c` to `c^k_{ij}` (and the antisymmetric partner).
    pub fn add_constant(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        assert!(i != j, "diagonal bracket constants are zero");
        let d = self.dim();
        self.table[i * d + j].add_term(Blade::basis(k), c.clone());
        self.table[j * d + i].add_term(Blade::basis(k), -c);
    }

    /// `c^k_{ij}` for any `i, j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.table[i * self.dim() + j].component(k)
    }

    /// `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &Multivector {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear extension to grade-1 elements.
    pub fn bracket_vectors(&self, u: &Multivector, v: &Multivector) -> Multivector {
        let mut out = Multivector::zero(self.space);
        for (a, ca) in u.terms() {
            let i = vector_index(a);
            for (b, cb) in v.terms() {
                let j = vector_index(b);
                out.add_scaled(&(ca * cb), self.bracket(i, j));
            }
        }
        out
    }

    /// Nonzero `(i, j, k, c)` with `i < j`, in lexicographic order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for (b, c) in self.bracket(i, j).terms() {
                    out.push((i, j, vector_index(b), c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Multivector::is_zero)
    }

    /// Pointwise `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &BracketTable) -> BracketTable {
        assert_eq!(self.space, other.space);
        let mut t = self.clone();
        if !c.is_zero() {
            for (a, b) in t.table.iter_mut().zip(&other.table) {
                a.add_scaled(c, b);
            }
        }
        t
    }
}

/// Index of a grade-1 blade.
pub(crate) fn vector_index(b: Blade) -> usize {
    debug_assert_eq!(b.grade(), 1);
    b.bits().trailing_zeros() as usize
}

/// Nonzero Jacobi defects `J(i,j,k) = Σ_cyc [[e_i, e_j], e_k]`, `i<j<k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiDefect {
    pub defects: Vec<([usize; 3], Multivector)>,
}

impl JacobiDefect {
    pub fn is_zero(&self) -> bool {
        self.defects.is_empty()
    }

    pub fn first(&self) -> Option<&([usize; 3], Multivector)> {
        self.defects.first()
    }
}

/// Evaluates the cyclic Jacobi sum on every ordered basis triple.
pub fn jacobi_defect(b: &BracketTable) -> JacobiDefect {
    let d = b.dim();
    let mut defects = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let e = |t: usize| Multivector::basis(b.space, t);
                let mut s = b.bracket_vectors(b.bracket(i, j), &e(k));
                s += &b.bracket_vectors(b.bracket(j, k), &e(i));
                s += &b.bracket_vectors(b.bracket(k, i), &e(j));
                if !s.is_zero() {
                    defects.push(([i, j, k], s));
                }
            }
        }
    }
    JacobiDefect { defects }
}

/// Errors with the first failing triple if `b` is not a Lie bracket.
pub fn require_lie(b: &BracketTable) -> Result<()> {
    match jacobi_defect(b).first() {
        None => Ok(()),
        Some((t, _)) => Err(Error::NotLie { triple: *t }),
    }
}
