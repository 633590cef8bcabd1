//! Uniform access to every supported polynomial family.

use std::fmt;

use crate::classical::{jacobi_coeffs, jacobi_eval, laguerre_coeffs, laguerre_eval};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quadrature::BaseWeight;
use crate::scalar::Ring;
use crate::weight::WeightSpec;
use crate::xjacobi::{xjac, xjac_denominator, xjac_eval, xjac_weight, JacParams};
use crate::xlaguerre::{weight_denominator, xlag, xlag_eval, xlag_weight, LagParams, LagVariant};

/// Family parameters without the degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    ClassicalLaguerre { alpha: f64 },
    ClassicalJacobi { alpha: f64, beta: f64 },
    TypeI { alpha: f64, m: u32 },
    TypeII { alpha: f64, m: u32 },
    Jacobi { alpha: f64, beta: f64, m: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::ClassicalLaguerre { alpha } => write!(f, "L^({alpha})"),
            Family::ClassicalJacobi { alpha, beta } => write!(f, "P^({alpha},{beta})"),
            Family::TypeI { alpha, m } => write!(f, "X^I(alpha={alpha}, m={m})"),
            Family::TypeII { alpha, m } => write!(f, "X^II(alpha={alpha}, m={m})"),
            Family::Jacobi { alpha, beta, m } => write!(f, "X(alpha={alpha}, beta={beta}, m={m})"),
        }
    }
}

impl Family {
    pub fn alpha(&self) -> f64 {
        match *self {
            Family::ClassicalLaguerre { alpha }
            | Family::ClassicalJacobi { alpha, .. }
            | Family::TypeI { alpha, .. }
            | Family::TypeII { alpha, .. }
            | Family::Jacobi { alpha, .. } => alpha,
        }
    }

    pub fn beta(&self) -> Option<f64> {
        match *self {
            Family::ClassicalJacobi { beta, .. } | Family::Jacobi { beta, .. } => Some(beta),
            _ => None,
        }
    }

    /// Number of missing degrees.
    pub fn codim(&self) -> u32 {
        match *self {
            Family::TypeI { m, .. } | Family::TypeII { m, .. } | Family::Jacobi { m, .. } => m,
            _ => 0,
        }
    }

    pub fn is_laguerre(&self) -> bool {
        matches!(self, Family::ClassicalLaguerre { .. } | Family::TypeI { .. } | Family::TypeII { .. })
    }

    /// Orthogonality interval.
    pub fn interval(&self) -> (f64, f64) {
        if self.is_laguerre() {
            (0.0, f64::INFINITY)
        } else {
            (-1.0, 1.0)
        }
    }

    pub fn lag_params(&self, n: u32) -> Option<Result<LagParams>> {
        match *self {
            Family::TypeI { alpha, m } => Some(LagParams::type_i(alpha, m, n)),
            Family::TypeII { alpha, m } => Some(LagParams::type_ii(alpha, m, n)),
            _ => None,
        }
    }

    pub fn jac_params(&self, n: u32) -> Option<Result<JacParams>> {
        match *self {
            Family::Jacobi { alpha, beta, m } => Some(JacParams::new(alpha, beta, m, n)),
            _ => None,
        }
    }

    /// Rejects parameters no member of the family can be built from.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::ClassicalLaguerre { alpha } if !(alpha > -1.0) => {
                Err(Error::InvalidParameter(format!("classical Laguerre requires alpha > -1, got {alpha}")))
            }
            Family::ClassicalJacobi { alpha, beta } if !(alpha > -1.0 && beta > -1.0) => {
                Err(Error::InvalidParameter(format!(
                    "classical Jacobi requires alpha, beta > -1, got ({alpha}, {beta})"
                )))
            }
            Family::TypeI { m, .. } | Family::TypeII { m, .. } | Family::Jacobi { m, .. } => {
                self.check_degree(m)
            }
            _ => Ok(()),
        }
    }

    fn check_degree(&self, n: u32) -> Result<()> {
        if let Some(p) = self.lag_params(n) {
            p?;
        }
        if let Some(p) = self.jac_params(n) {
            p?;
        }
        Ok(())
    }

    /// Pointwise value of the degree-`n` member.
    pub fn eval<T: Ring>(&self, n: u32, z: T) -> Result<T> {
        match *self {
            Family::ClassicalLaguerre { alpha } => Ok(laguerre_eval(alpha, n as i32, z)),
            Family::ClassicalJacobi { alpha, beta } => Ok(jacobi_eval(alpha, beta, n as i32, z)),
            Family::TypeI { .. } | Family::TypeII { .. } => {
                let p = self.lag_params(n).expect("Laguerre family")?;
                Ok(xlag_eval(&p, z))
            }
            Family::Jacobi { alpha, beta, m } => {
                if n < m {
                    return Err(Error::InvalidParameter(format!("degree n = {n} is below m = {m}")));
                }
                xjac_eval(alpha, beta, m as i32, (n - m) as i32, z)
            }
        }
    }

    /// Coefficients of the degree-`n` member.
    pub fn poly(&self, n: u32) -> Result<Polynomial> {
        match *self {
            Family::ClassicalLaguerre { alpha } => Ok(laguerre_coeffs(alpha, n as i32)),
            Family::ClassicalJacobi { alpha, beta } => Ok(jacobi_coeffs(alpha, beta, n as i32).poly),
            Family::TypeI { .. } | Family::TypeII { .. } => {
                Ok(xlag(&self.lag_params(n).expect("Laguerre family")?))
            }
            Family::Jacobi { .. } => xjac(&self.jac_params(n).expect("Jacobi family")?),
        }
    }

    /// Polynomial whose roots attract the exceptional zeros as the degree grows.
    pub fn limit_poly(&self) -> Polynomial {
        match *self {
            Family::TypeI { alpha, m } => weight_denominator(LagVariant::TypeI, alpha, m),
            Family::TypeII { alpha, m } => weight_denominator(LagVariant::TypeII, alpha, m),
            Family::Jacobi { alpha, beta, m } => xjac_denominator(alpha, beta, m),
            _ => Polynomial::constant(1.0),
        }
    }

    /// Orthogonality weight.
    pub fn weight(&self) -> Result<WeightSpec> {
        self.validate()?;
        match *self {
            Family::ClassicalLaguerre { alpha } => Ok(WeightSpec {
                base: BaseWeight::Laguerre { alpha },
                denominator: Polynomial::constant(1.0),
                interval: self.interval(),
            }),
            Family::ClassicalJacobi { alpha, beta } => Ok(WeightSpec {
                base: BaseWeight::Jacobi { alpha, beta },
                denominator: Polynomial::constant(1.0),
                interval: self.interval(),
            }),
            Family::TypeI { m, .. } | Family::TypeII { m, .. } => {
                xlag_weight(&self.lag_params(m).expect("Laguerre family")?)
            }
            Family::Jacobi { m, .. } => xjac_weight(&self.jac_params(m).expect("Jacobi family")?),
        }
    }
}
