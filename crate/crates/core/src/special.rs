//! Gamma, Pochhammer, generalized binomials and Bessel functions of the first kind.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature::legendre_panel;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    LANCZOS[1..].iter().enumerate().fold(LANCZOS[0], |acc, (i, &c)| acc + c / (x + i as f64 + 1.0))
}

/// Gamma function for real arguments, with reflection below 1/2.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * lanczos_sum(x)
}

/// `ln |Γ(x)|`
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / (PI * x).sin()).abs().ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + lanczos_sum(x).ln()
}

/// Rising factorial `x (x+1) ... (x+n-1)`.
pub fn pochhammer(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (x + k as f64))
}

/// `binom(x, k) = x (x-1) ... (x-k+1) / k!` for real `x`; zero when `k < 0`.
pub fn binomial(x: f64, k: i32) -> f64 {
    if k < 0 {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (x - i as f64) / (i + 1) as f64)
}

pub fn factorial(n: u32) -> f64 {
    pochhammer(1.0, n)
}

fn check_order(alpha: f64) -> Result<()> {
    if alpha <= -1.0 || !alpha.is_finite() {
        return Err(Error::Domain(format!("Bessel order {alpha} must exceed -1")));
    }
    Ok(())
}

fn series_regime(alpha: f64, z: f64) -> bool {
    z <= 8.0 || 0.25 * z * z <= alpha + 1.0
}

/// `sum_k (-w^2/4)^k / (k! Γ(k+α+1))`
fn reduced_series(alpha: f64, w: f64) -> f64 {
    let q = -0.25 * w * w;
    let mut term = 1.0 / gamma(alpha + 1.0);
    let mut sum = term;
    let mut k = 1.0;
    loop {
        term *= q / (k * (k + alpha));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && k > 0.5 * w {
            break;
        }
        if k > 500.0 {
            break;
        }
        k += 1.0;
    }
    sum
}

fn integral_form(alpha: f64, z: f64) -> f64 {
    // oscillatory part over [0, π]
    let panels = ((z + alpha.abs()) / 2.0).ceil() as usize + 4;
    let h = PI / panels as f64;
    let osc: f64 = (0..panels)
        .map(|p| legendre_panel(p as f64 * h, (p + 1) as f64 * h, |t| (z * t.sin() - alpha * t).cos()))
        .sum();
    let s = (alpha * PI).sin();
    let tail = if s.abs() < 1e-300 {
        0.0
    } else {
        let upper = (60.0 / z).asinh();
        let panels = 24;
        let h = upper / panels as f64;
        (0..panels)
            .map(|p| legendre_panel(p as f64 * h, (p + 1) as f64 * h, |t| (-z * t.sinh() - alpha * t).exp()))
            .sum()
    };
    (osc - s * tail) / PI
}

/// Bessel function `J_α(z)` for `α > -1`, `z ≥ 0`.
pub fn bessel_j(alpha: f64, z: f64) -> Result<f64> {
    check_order(alpha)?;
    if z < 0.0 || z.is_nan() {
        return Err(Error::Domain(format!("Bessel argument {z} must be nonnegative")));
    }
    if z == 0.0 {
        return Ok(if alpha == 0.0 {
            1.0
        } else if alpha > 0.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    if series_regime(alpha, z) {
        Ok((0.5 * z).powf(alpha) * reduced_series(alpha, z))
    } else {
        Ok(integral_form(alpha, z))
    }
}

/// `(w/2)^{-α} J_α(w)`, continuous at `w = 0` with value `1/Γ(α+1)`.
pub fn bessel_j_reduced(alpha: f64, w: f64) -> Result<f64> {
    check_order(alpha)?;
    if series_regime(alpha, w) {
        Ok(reduced_series(alpha, w))
    } else {
        Ok(integral_form(alpha, w) / (0.5 * w).powf(alpha))
    }
}

/// Ascending positive zeros of `J_α`.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselZeroTable {
    pub order: f64,
    pub zeros: Vec<f64>,
}

impl BesselZeroTable {
    /// The `i`-th zero, 1-based.
    pub fn get(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|k| self.zeros.get(k).copied())
    }
}

fn refine_zero(alpha: f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let f = |z: f64| bessel_j(alpha, z);
    let mut flo = f(lo)?;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = f(x)?;
        if fx.abs() < 1e-16 {
            return Ok(x);
        }
        if (fx < 0.0) == (flo < 0.0) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(0.5 * (lo + hi));
        }
        let slope = alpha / x * fx - f_next(alpha, x)?;
        let newton = x - fx / slope;
        x = if slope != 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
    }
    Err(Error::NoConvergence(format!("Bessel zero of order {alpha} in [{lo}, {hi}]")))
}

fn f_next(alpha: f64, x: f64) -> Result<f64> {
    bessel_j(alpha + 1.0, x)
}

/// First `count` positive zeros of `J_α`, by sign-change scanning and
/// safeguarded Newton refinement.
pub fn bessel_zeros(alpha: f64, count: usize) -> Result<BesselZeroTable> {
    check_order(alpha)?;
    let step = 0.25;
    let mut zeros = Vec::with_capacity(count);
    let mut a = step;
    let mut fa = bessel_j(alpha, a)?;
    while zeros.len() < count {
        let b = a + step;
        let fb = bessel_j(alpha, b)?;
        if fb == 0.0 {
            zeros.push(b);
        } else if (fa < 0.0) != (fb < 0.0) && fa != 0.0 {
            zeros.push(refine_zero(alpha, a, b)?);
        }
        a = b;
        fa = fb;
        if a > 1e6 {
            return Err(Error::NoConvergence("Bessel zero scan ran away".into()));
        }
    }
    Ok(BesselZeroTable { order: alpha, zeros })
}
