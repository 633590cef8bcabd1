//! Rational modifications of classical weights.

use crate::poly::Polynomial;
use crate::quadrature::BaseWeight;

/// `W(z) = base(z) / denominator(z)^2` on `interval`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSpec {
    pub base: BaseWeight,
    /// Stored unsquared.
    pub denominator: Polynomial,
    pub interval: (f64, f64),
}

impl WeightSpec {
    pub fn base_value(&self, z: f64) -> f64 {
        match self.base {
            BaseWeight::Laguerre { alpha } => z.powf(alpha) * (-z).exp(),
            BaseWeight::Jacobi { alpha, beta } => (1.0 - z).powf(alpha) * (1.0 + z).powf(beta),
            BaseWeight::Legendre => 1.0,
        }
    }

    /// `1 / denominator(z)^2`
    pub fn rational_factor(&self, z: f64) -> f64 {
        let d = self.denominator.eval(z);
        1.0 / (d * d)
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.base_value(z) * self.rational_factor(z)
    }
}
