//! Exceptional Laguerre and Jacobi polynomials.
//!
//! Construction by recurrence-based evaluators and dense coefficients, identity
//! residuals, certified zero classification, orthogonality weights and the
//! large-degree experiments (Heine-Mehler limits, zero tracks, Gram matrices).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod classical;
pub mod error;
pub mod family;
pub mod poly;
pub mod quadrature;
pub mod residual;
pub mod scalar;
pub mod special;
pub mod weight;
pub mod xjacobi;
pub mod xlaguerre;
pub mod zeros;

pub use error::{Error, Result};
pub use family::Family;
pub use poly::Polynomial;
pub use weight::WeightSpec;
pub use zeros::ZeroSet;
