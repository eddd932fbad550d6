use super::bracket::BracketTable;
use crate::exterior::{Blade, Multivector, SpaceId};
use crate::matrix::{EndoMatrix, Matrix};
use crate::scalar::Scalar;

/// Matrix of `y ↦ b(x, y)` on the underlying space (`dim × dim`).
pub fn ad_action(b: &BracketTable, x: &Multivector) -> Matrix {
    assert!(x.space() == b.space() && x.is_homogeneous_of(1), "ad_action expects a vector of the bracket's space");
    Matrix::from_vector_map(b.dim(), |j| b.bracket_vectors(x, &Multivector::basis(b.space(), j)))
}

/// Matrix of the coadjoint action `ad*_x = -ᵗad_x` on the dual space.
pub fn coad_action(b: &BracketTable, x: &Multivector) -> Matrix {
    -&ad_action(b, x).transpose()
}

/// Extends a linear map on `V` (a `dim × dim` matrix) to a degree-0
/// derivation of `(ΛV, ∧)` and applies it to `y`.
pub fn apply_derivation(m: &Matrix, y: &Multivector) -> Multivector {
    let space = y.space();
    assert_eq!(m.rows(), space.dim(), "derivation size mismatch");
    let mut out = Multivector::zero(space);
    for (b, c) in y.terms() {
        let idx: Vec<usize> = b.indices().collect();
        for (p, &i) in idx.iter().enumerate() {
            let left = Blade::from_bits(idx[..p].iter().fold(0, |acc, &q| acc | 1 << q));
            let right = Blade::from_bits(idx[p + 1..].iter().fold(0, |acc, &q| acc | 1 << q));
            for k in 0..m.rows() {
                let v = m.get(k, i);
                if num_traits::Zero::is_zero(v) {
                    continue;
                }
                let kb = Blade::basis(k);
                let (Some(s1), Some(s2)) = (left.wedge_sign(kb), left.union(kb).wedge_sign(right)) else { continue };
                let coeff = c * v;
                out.add_term(left.union(kb).union(right), if s1 * s2 < 0 { -coeff } else { coeff });
            }
        }
    }
    out
}

/// The derivation extension of a linear map on `V` as a matrix on `ΛV`.
pub fn derivation_extension(space: SpaceId, m: &Matrix) -> EndoMatrix {
    EndoMatrix::from_blade_map(space, |b| apply_derivation(m, &Multivector::from_blade(space, b, Scalar::from_integer(1.into()))))
}

/// `ad_x` extended as a derivation to `ΛV`.
pub fn ad_extension(b: &BracketTable, x: &Multivector) -> EndoMatrix {
    derivation_extension(b.space(), &ad_action(b, x))
}

/// `ad*_x` extended as a derivation to `Λ(V*)`.
pub fn coad_extension(b: &BracketTable, x: &Multivector) -> EndoMatrix {
    derivation_extension(b.space().dual(), &coad_action(b, x))
}
