//! Exact discrete Hodge theory on triangulated closed oriented manifolds.
//!
//! The primal complex carries one family of cycles, the dual block complex
//! the other, so every intersection number in sight is an exact integer.
//! On top of that sit integer homology with certificates, weighted
//! Laplacians with exact Green operators, topological Abel-Jacobi images,
//! the linking height pairing with its ambiguity group, integral
//! structures and lifts into the Poincare circle bundle, and a floating
//! point genus-1 analytic verifier built on Weierstrass functions.

pub mod bundle;
pub mod chain;
pub mod complex;
pub mod dual;
pub mod elliptic;
pub mod error;
pub mod height;
pub mod hodge;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod ratio;
pub mod sampling;
pub mod subdivision;

pub use chain::{Chain, Side};
pub use complex::SimplicialComplex;
pub use error::{Error, ErrorKind, Result};
pub use hodge::{HodgeContext, MetricWeights};
