//! Scale-free residuals of sampled identities.

use crate::poly::chebyshev_points;

/// One sampled identity: the signed defect and the magnitude it is measured against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub defect: f64,
    pub scale: f64,
}

impl Sample {
    /// Defect of `terms` summing to zero, measured against their absolute sum.
    pub fn of_terms(terms: &[f64]) -> Self {
        Sample { defect: terms.iter().sum(), scale: terms.iter().map(|t| t.abs()).sum() }
    }

    pub fn of_sides(lhs: f64, rhs: f64) -> Self {
        Sample { defect: lhs - rhs, scale: lhs.abs().max(rhs.abs()) }
    }
}

/// Residuals of a lowering/raising pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeResiduals {
    /// Absent when there is no lower degree to step down to.
    pub lower: Option<f64>,
    pub raise: f64,
}

/// `max |defect| / max scale` over the points.
pub fn max_relative<I, F>(points: I, f: F) -> f64
where
    I: IntoIterator<Item = f64>,
    F: Fn(f64) -> Sample,
{
    let (defect, scale) =
        points.into_iter().map(f).fold((0.0f64, 0.0f64), |(d, s), x| (d.max(x.defect.abs()), s.max(x.scale)));
    if scale == 0.0 {
        defect
    } else {
        defect / scale
    }
}

/// Pointwise `max |defect_i| / scale_i`, for identities whose magnitude varies
/// by many orders across the samples.
pub fn max_pointwise<I, F>(points: I, f: F) -> f64
where
    I: IntoIterator<Item = f64>,
    F: Fn(f64) -> Sample,
{
    points
        .into_iter()
        .map(f)
        .map(|s| if s.scale == 0.0 { s.defect.abs() } else { s.defect.abs() / s.scale })
        .fold(0.0, f64::max)
}

/// `degree + 1` Chebyshev points on `[0, 4n]`.
pub fn laguerre_grid(degree: usize) -> Vec<f64> {
    let hi = 4.0 * degree.max(1) as f64;
    chebyshev_points(degree + 1, 0.0, hi)
}

/// `degree + 1` Chebyshev points on `[-1, 1]`.
pub fn jacobi_grid(degree: usize) -> Vec<f64> {
    chebyshev_points(degree + 1, -1.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_identity_has_zero_residual() {
        let r = max_relative(laguerre_grid(5), |z| Sample::of_sides(z * z - 1.0, (z - 1.0) * (z + 1.0)));
        assert!(r < 1e-15);
    }

    #[test]
    fn detects_defect() {
        let r = max_relative(jacobi_grid(3), |z| Sample::of_terms(&[z, -z, 0.5]));
        assert!(r > 0.1);
    }
}
