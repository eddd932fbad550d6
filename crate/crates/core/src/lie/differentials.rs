use super::bracket::BracketTable;
use crate::exterior::{Blade, Multivector};
use crate::matrix::{EndoMatrix, Matrix};
use crate::scalar::Scalar;

/// `∂(x1∧…∧x_{k+1}) = Σ_{i<j} (-1)^{i+j} b(x_i, x_j) ∧ x1∧…x̂_i…x̂_j…∧x_{k+1}`
/// on `ΛV`, with `V` the bracket's space.
pub fn boundary_operator(b: &BracketTable) -> EndoMatrix {
    let space = b.space();
    EndoMatrix::from_blade_map(space, |blade| boundary_of_blade(b, blade))
}

fn boundary_of_blade(b: &BracketTable, blade: Blade) -> Multivector {
    let space = b.space();
    let idx: Vec<usize> = blade.indices().collect();
    let mut out = Multivector::zero(space);
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            let rest = blade.without(Blade::basis(idx[i])).without(Blade::basis(idx[j]));
            let rest = Multivector::from_blade(space, rest, Scalar::from_integer(1.into()));
            let term = b.bracket(idx[i], idx[j]).wedge(&rest);
            if (i + j) % 2 == 0 {
                out += &term;
            } else {
                out -= &term;
            }
        }
    }
    out
}

/// The trivial-coefficient coboundary on `Λ(V*)`: the transpose of
/// [`boundary_operator`] under the pairing.
pub fn d_operator(b: &BracketTable) -> EndoMatrix {
    boundary_operator(b).transpose()
}

/// Block of an operator on `ΛV` mapping grade `from` to grade `to`.
pub fn grade_block(m: &EndoMatrix, dim: usize, from: usize, to: usize) -> Matrix {
    let cols: Vec<Blade> = Blade::of_grade(dim, from).collect();
    let rows: Vec<Blade> = Blade::of_grade(dim, to).collect();
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (r, rb) in rows.iter().enumerate() {
        for (c, cb) in cols.iter().enumerate() {
            out.set(r, c, m.get(rb.index(), cb.index()).clone());
        }
    }
    out
}

/// Dimensions of `H^k(V, K)` for `k = 0..=dim` computed as
/// `dim ker d_k - rank d_{k-1}` with exact ranks. Meaningful only for Lie
/// brackets (otherwise `d² ≠ 0`).
pub fn cohomology_dimensions(b: &BracketTable) -> Vec<usize> {
    let dim = b.dim();
    let d = d_operator(b);
    let ranks: Vec<usize> = (0..=dim)
        .map(|k| if k == dim { 0 } else { grade_block(&d, dim, k, k + 1).rank() })
        .collect();
    (0..=dim)
        .map(|k| {
            let space_dim = binomial(dim, k);
            let kernel = space_dim - ranks[k];
            let image = if k == 0 { 0 } else { ranks[k - 1] };
            kernel - image
        })
        .collect()
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
