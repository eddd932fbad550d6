//! Exact-arithmetic construction and verification of Lie quasi-bialgebras
//! `(G, μ, γ, φ)`: exterior algebras, Schouten brackets, Chevalley–Eilenberg
//! operators, the double `D = G ⋈ G*`, its representation on `ΛG` and the
//! module isomorphism `Q: ΛD → End(ΛG)`.

pub mod double;
pub mod error;
pub mod exterior;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod names;
pub mod quasi;
pub mod report;
pub mod representation;
pub mod scalar;

pub use error::{Error, Result};
pub use exterior::{Blade, Multivector, SpaceId};
pub use matrix::{EndoMatrix, Matrix};
pub use quasi::QuasiLieBialgebra;
pub use report::ValidationReport;
pub use scalar::Scalar;
