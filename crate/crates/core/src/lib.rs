//! Exact computations in the highwater algebra, an infinite-dimensional
//! commutative nonassociative algebra generated by two idempotents whose
//! axes satisfy a fusion law of Monster type `(2, 1/2)`.
//!
//! All arithmetic is exact, over the rationals or a prime field of odd
//! characteristic. Characteristic 3 is allowed and switches several
//! modules to their degenerate (Jordan) behaviour.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fusion;
pub mod jordan;
pub mod linalg;
pub mod poly;
pub mod sampling;
pub mod scalar;
pub mod spectral;
pub mod structure;
pub mod symmetry;

pub use algebra::{basis_product, BasisIndex, Element};
pub use cli::parse::parse_element;
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use spectral::Axis;
