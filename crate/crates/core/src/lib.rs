//! Exact computations with 2-representations of the 2-category of projective
//! functors over a basic self-injective algebra over a prime field.
//!
//! All indices are zero-based: the idempotent written `e_1` in the usual
//! notation is index `0` here.

pub mod algebra;
pub mod bimodule;
pub mod cells;
pub mod classify;
pub mod constructions;
pub mod coords;
pub mod corpus;
pub mod error;
pub mod field;
pub mod filtration;
pub mod inflation;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod module;
pub mod oracle;
pub mod subspace;
pub mod tworep;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use subspace::Subspace;
