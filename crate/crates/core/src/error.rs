use thiserror::Error;

use crate::xjacobi::Inadmissible;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("degenerate denominator: {0} vanishes")]
    DegenerateDenominator(String),

    #[error("inadmissible parameters: {0}")]
    Inadmissible(Inadmissible),

    #[error("sample point {0} lies closer than 0.5 to the orthogonality interval")]
    SampleTooClose(String),

    #[error("degree {degree} exceeds the coefficient root-finding cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("root certification failed on {region}: Sturm count {expected}, located {found}")]
    RootCertification { region: String, expected: usize, found: usize },

    #[error("root {root} lies within the {buffer:e} buffer of the endpoint {endpoint}")]
    BoundaryAmbiguity { root: f64, endpoint: f64, buffer: f64 },

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("quadrature order {got} too small, need at least {need}")]
    QuadratureOrder { got: usize, need: usize },
}

impl Error {
    /// Numerical failures, as opposed to rejected inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::RootCertification { .. }
                | Error::BoundaryAmbiguity { .. }
                | Error::NoConvergence(_)
                | Error::QuadratureOrder { .. }
                | Error::DegreeCap { .. }
        )
    }
}
