use std::fmt;

use serde::Serialize;

/// Which vector space a multivector lives over.
///
/// `Double(n)` has dimension `2n`: indices `0..n` are the `e_i` of G and
/// indices `n..2n` are the dual basis `ξ^i` of G*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpaceId {
    Primal(usize),
    Dual(usize),
    Double(usize),
}

/// Largest underlying dimension supported by the bitmask blade layout.
pub const MAX_DIM: usize = 32;

impl SpaceId {
    /// Dimension of the underlying vector space.
    pub fn dim(self) -> usize {
        match self {
            SpaceId::Primal(n) | SpaceId::Dual(n) => n,
            SpaceId::Double(n) => 2 * n,
        }
    }

    /// The `n` of G this space is built from.
    pub fn base(self) -> usize {
        match self {
            SpaceId::Primal(n) | SpaceId::Dual(n) | SpaceId::Double(n) => n,
        }
    }

    /// The dual space. The double is self-dual through its pairing.
    pub fn dual(self) -> SpaceId {
        match self {
            SpaceId::Primal(n) => SpaceId::Dual(n),
            SpaceId::Dual(n) => SpaceId::Primal(n),
            SpaceId::Double(n) => SpaceId::Double(n),
        }
    }

    /// Number of blades, `2^dim`.
    pub fn blade_count(self) -> usize {
        1usize << self.dim()
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceId::Primal(n) => write!(f, "G({n})"),
            SpaceId::Dual(n) => write!(f, "G*({n})"),
            SpaceId::Double(n) => write!(f, "D({n})"),
        }
    }
}
