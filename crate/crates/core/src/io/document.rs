use std::fmt::Write;

use serde::Deserialize;
use serde_json::Value;

use super::InputError;
use crate::error::Result as LqbResult;
use crate::exterior::{Multivector, SpaceId, Tensor};
use crate::lie::BracketTable;
use crate::quasi::{from_quasitriangular, from_r_matrix, QuasiLieBialgebra};
use crate::scalar::{self, Scalar};

/// Largest dimension accepted by the parser (blades are 32-bit masks).
pub const MAX_DOCUMENT_DIM: usize = 16;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    dim: Value,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    mu: Vec<Value>,
    #[serde(default)]
    gamma: Option<Vec<Value>>,
    #[serde(default)]
    phi: Option<Vec<Value>>,
    #[serde(default)]
    r: Option<Vec<Value>>,
    #[serde(default)]
    r_tensor: Option<Vec<Value>>,
}

/// An entry `(indices…, value)` with 0-based indices.
pub type Entry<const K: usize> = ([usize; K], Scalar);

/// How `γ` and `φ` are given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    /// Explicit tables; absent fields are zero.
    Explicit { gamma: Vec<Entry<3>>, phi: Vec<Entry<3>> },
    /// `γ(x) = [x, r]`, `φ = -½[r, r]`.
    Exact { r: Vec<Entry<2>> },
    /// From a full rank-2 tensor with invariant symmetric part.
    Quasitriangular { r_tensor: Vec<Entry<2>> },
}

/// A parsed structure-constant document. Indices are 0-based here and
/// 1-based in the text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mu: Vec<Entry<3>>,
    pub structure: Structure,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })?;
        let dim = match raw.dim.as_u64() {
            Some(d) if (1..=MAX_DOCUMENT_DIM as u64).contains(&d) => d as usize,
            _ => {
                return Err(InputError::Invalid(format!(
                    "dim must be an integer between 1 and {MAX_DOCUMENT_DIM}, got {}",
                    raw.dim
                )))
            }
        };
        let basis = match raw.basis {
            Some(b) => {
                if b.len() != dim {
                    return Err(InputError::Invalid(format!("basis has {} names, expected {dim}", b.len())));
                }
                for (i, name) in b.iter().enumerate() {
                    if name.is_empty() || b[..i].contains(name) {
                        return Err(InputError::Invalid(format!("basis name {:?} is empty or repeated", name)));
                    }
                }
                b
            }
            None => (1..=dim).map(|i| format!("e{i}")).collect(),
        };
        let mu = entries::<3>("mu", &raw.mu, dim, Order::FirstPair)?;
        let explicit = raw.gamma.is_some() || raw.phi.is_some();
        let count = usize::from(explicit) + usize::from(raw.r.is_some()) + usize::from(raw.r_tensor.is_some());
        if count > 1 {
            return Err(InputError::Invalid("give at most one of gamma/phi, r, r_tensor".into()));
        }
        let structure = if let Some(r) = raw.r {
            Structure::Exact { r: entries::<2>("r", &r, dim, Order::Strict)? }
        } else if let Some(t) = raw.r_tensor {
            Structure::Quasitriangular { r_tensor: entries::<2>("r_tensor", &t, dim, Order::Any)? }
        } else {
            Structure::Explicit {
                gamma: entries::<3>("gamma", raw.gamma.as_deref().unwrap_or(&[]), dim, Order::FirstPair)?,
                phi: entries::<3>("phi", raw.phi.as_deref().unwrap_or(&[]), dim, Order::Strict)?,
            }
        };
        Ok(InputDocument { dim, basis, mu, structure })
    }

    /// Builds the quasi-bialgebra; constructor preconditions surface as errors.
    pub fn build(&self) -> LqbResult<QuasiLieBialgebra> {
        let n = self.dim;
        let (g, gs) = (SpaceId::Primal(n), SpaceId::Dual(n));
        let mu = BracketTable::from_constants(g, self.mu.iter().map(|([i, j, k], c)| (*i, *j, *k, c.clone())))?;
        let q = match &self.structure {
            Structure::Explicit { gamma, phi } => {
                let gamma = BracketTable::from_constants(gs, gamma.iter().map(|([i, j, k], c)| (*i, *j, *k, c.clone())))?;
                let mut p = Multivector::zero(g);
                for (idx, c) in phi {
                    p += &Multivector::from_indices(g, idx, c.clone());
                }
                QuasiLieBialgebra::new(mu, gamma, p)?
            }
            Structure::Exact { r } => {
                let mut m = Multivector::zero(g);
                for (idx, c) in r {
                    m += &Multivector::from_indices(g, idx, c.clone());
                }
                from_r_matrix(&mu, &m)?
            }
            Structure::Quasitriangular { r_tensor } => {
                let mut t = Tensor::zero(n, 2);
                for (idx, c) in r_tensor {
                    t.add(idx.to_vec(), c.clone());
                }
                from_quasitriangular(&mu, &t)?
            }
        };
        q.with_names(self.basis.clone())
    }

    /// Explicit document of a structure, with zero entries dropped.
    pub fn from_structure(q: &QuasiLieBialgebra) -> Self {
        let n = q.dim();
        let phi = q
            .phi()
            .terms()
            .map(|(b, c)| {
                let idx: Vec<usize> = b.indices().collect();
                ([idx[0], idx[1], idx[2]], c.clone())
            })
            .collect();
        InputDocument {
            dim: n,
            basis: q.names().primal().to_vec(),
            mu: table_entries(q.mu()),
            structure: Structure::Explicit { gamma: table_entries(q.gamma()), phi },
        }
    }

    /// Canonical text: fixed key order, entries sorted and merged, zero
    /// entries dropped, values as strings, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"dim\": {},", self.dim);
        let names: Vec<String> = self.basis.iter().map(|b| json_string(b)).collect();
        let _ = write!(out, "  \"basis\": [{}]", names.join(", "));
        write_entries(&mut out, "mu", &self.mu);
        match &self.structure {
            Structure::Explicit { gamma, phi } => {
                if !canonical(gamma).is_empty() {
                    write_entries(&mut out, "gamma", gamma);
                }
                if !canonical(phi).is_empty() {
                    write_entries(&mut out, "phi", phi);
                }
            }
            Structure::Exact { r } => write_entries(&mut out, "r", r),
            Structure::Quasitriangular { r_tensor } => write_entries(&mut out, "r_tensor", r_tensor),
        }
        out.push_str("\n}\n");
        out
    }

    /// The document re-read from its canonical text.
    pub fn canonicalized(&self) -> Self {
        Self::parse(&self.to_canonical_string()).expect("canonical text parses")
    }
}

fn table_entries(t: &BracketTable) -> Vec<Entry<3>> {
    t.constants().into_iter().map(|(i, j, k, c)| ([i, j, k], c)).collect()
}

fn canonical<const K: usize>(entries: &[Entry<K>]) -> Vec<Entry<K>> {
    let mut map = std::collections::BTreeMap::<[usize; K], Scalar>::new();
    for (k, v) in entries {
        *map.entry(*k).or_insert_with(scalar::zero) += v;
    }
    map.into_iter().filter(|(_, v)| *v != scalar::zero()).collect()
}

fn write_entries<const K: usize>(out: &mut String, key: &str, entries: &[Entry<K>]) {
    let list = canonical(entries);
    let _ = write!(out, ",\n  \"{key}\": [");
    for (n, (idx, v)) in list.iter().enumerate() {
        let nums: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
        let sep = if n + 1 < list.len() { "," } else { "" };
        let _ = write!(out, "\n    [{}, {}]{sep}", nums.join(", "), json_string(&scalar::format(v)));
    }
    if list.is_empty() {
        out.push(']');
    } else {
        out.push_str("\n  ]");
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Order {
    /// First two indices strictly increasing (antisymmetric tables).
    FirstPair,
    /// All indices strictly increasing (multivector coefficients).
    Strict,
    Any,
}

fn entries<const K: usize>(field: &str, raw: &[Value], dim: usize, order: Order) -> Result<Vec<Entry<K>>, InputError> {
    let mut out: Vec<Entry<K>> = Vec::with_capacity(raw.len());
    for (pos, item) in raw.iter().enumerate() {
        let entry = pos + 1;
        let bad = |what: String| InputError::Entry { field: field.into(), entry, message: what };
        let arr = item.as_array().filter(|a| a.len() == K + 1).ok_or_else(|| {
            bad(format!("expected an array of {K} indices and a value, got {item}"))
        })?;
        let mut idx = [0usize; K];
        for (slot, v) in arr[..K].iter().enumerate() {
            let i = v.as_u64().ok_or_else(|| bad(format!("index {v} is not a positive integer")))? as usize;
            if i == 0 || i > dim {
                return Err(InputError::IndexOutOfRange { field: field.into(), entry, index: i, dim });
            }
            idx[slot] = i - 1;
        }
        let value = match &arr[K] {
            Value::String(s) => scalar::parse(s),
            Value::Number(n) if n.is_i64() => n.as_i64().map(scalar::int),
            _ => None,
        }
        .ok_or_else(|| InputError::MalformedRational { field: field.into(), entry, value: arr[K].to_string() })?;
        let ordered = match order {
            Order::FirstPair => idx[0] < idx[1],
            Order::Strict => idx.windows(2).all(|w| w[0] < w[1]),
            Order::Any => true,
        };
        if !ordered {
            let want = if order == Order::FirstPair { "i < j" } else { "strictly increasing indices" };
            return Err(bad(format!("indices must satisfy {want}; give each entry once in that form")));
        }
        if out.iter().any(|(k, _)| *k == idx) {
            return Err(InputError::Duplicate { field: field.into(), entry });
        }
        out.push((idx, value));
    }
    Ok(out)
}
