//! Semi-inner product modules over the matrix algebra `M_k(C)`, the Grüss
//! functional on n-tuples of module vectors, and certified evaluation of the
//! Grüss-type bounds built on it.
//!
//! The algebra is realized twice over the same matrices: as a C*-algebra
//! (operator norm) and as an H*-algebra (Hilbert–Schmidt inner product, trace
//! and trace norm). Modules are `X = A^d` with `<x, y> = sum_j x_j^* y_j`.
//!
//! Every bound is evaluated into a [`BoundCertificate`] that carries the
//! left-hand side, each link of the right-hand chain, the slack used and the
//! tightness (lhs over final rhs).

pub mod algebra;
pub mod error;
pub mod functional;
pub mod module_space;
pub mod tolerance;
pub mod transforms;

pub use algebra::{AlgebraElement, EigenDecomposition, SpectralRadius};
pub use error::{Error, Result};
pub use functional::{
    BoundCertificate, Ball, Flavor, GrussValue, IdentityResidual, NamedValue,
};
pub use module_space::{ModuleVector, ProbabilityVector, ScalarWeights, VectorTuple};
pub use tolerance::Slack;
pub use transforms::{RadiusMode, TransformCertificate};

pub use num_complex::Complex64;
