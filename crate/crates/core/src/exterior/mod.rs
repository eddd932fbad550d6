//! Exterior algebras over G, G* and the double D = G ⊕ G*.

mod blade;
mod multivector;
mod ops;
mod space;
mod tensor;

pub use blade::Blade;
pub use multivector::Multivector;
pub use ops::{
    contract_by_dual, contract_by_primal, contract_double, dual_contraction_operator, embed_dual, embed_primal, eps,
    pair, pair_double, primal_contraction_operator, reverse_hat, split_double, split_vector, swap_double, wedge,
    TensorSplit,
};
pub use space::{SpaceId, MAX_DIM};
pub use tensor::{alt, permutations, Tensor, ALT_MAX_RANK, ALT_MIN_RANK};
