//! Brackets, adjoint actions, the Schouten bracket and Chevalley–Eilenberg
//! differentials.

mod actions;
mod bracket;
mod cochain;
mod differentials;
mod schouten;

pub use actions::{ad_action, ad_extension, apply_derivation, coad_action, coad_extension, derivation_extension};
pub use bracket::{jacobi_defect, require_lie, BracketTable, JacobiDefect};
pub use cochain::{ce_differential, Cochain, CochainSpace, Coefficients};
pub use differentials::{boundary_operator, cohomology_dimensions, d_operator, grade_block};
pub use schouten::{schouten, Schouten};

pub(crate) use bracket::vector_index;
