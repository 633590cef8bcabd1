//! Gauss rules for the classical Laguerre and Jacobi weights.
//!
//! Nodes are isolated by bisection on the sign-change count of the monic
//! orthogonal sequence (a Sturm sequence for the Jacobi matrix), and weights
//! come from the Christoffel sum of the orthonormal polynomials, carried with
//! a running exponent so that large Laguerre nodes do not overflow.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::special::ln_gamma;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaseWeight {
    /// `z^α e^{-z}` on `(0, ∞)`
    Laguerre {
        alpha: f64,
    },
    /// `(1-z)^α (1+z)^β` on `(-1, 1)`
    Jacobi {
        alpha: f64,
        beta: f64,
    },
    Legendre,
}

impl BaseWeight {
    pub fn interval(&self) -> (f64, f64) {
        match self {
            BaseWeight::Laguerre { .. } => (0.0, f64::INFINITY),
            _ => (-1.0, 1.0),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            BaseWeight::Laguerre { alpha } => alpha > -1.0,
            BaseWeight::Jacobi { alpha, beta } => alpha > -1.0 && beta > -1.0,
            BaseWeight::Legendre => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{self:?}: weight parameters must exceed -1")))
        }
    }

    fn jacobi_ab(&self) -> (f64, f64) {
        match *self {
            BaseWeight::Jacobi { alpha, beta } => (alpha, beta),
            _ => (0.0, 0.0),
        }
    }

    /// `ln ∫ w`
    pub fn ln_mass(&self) -> f64 {
        match *self {
            BaseWeight::Laguerre { alpha } => ln_gamma(alpha + 1.0),
            _ => {
                let (a, b) = self.jacobi_ab();
                (a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
                    - ln_gamma(a + b + 2.0)
            }
        }
    }

    /// Diagonal entry `a_k` of the monic recurrence.
    pub fn diag(&self, k: usize) -> f64 {
        let k = k as f64;
        match *self {
            BaseWeight::Laguerre { alpha } => 2.0 * k + 1.0 + alpha,
            _ => {
                let (a, b) = self.jacobi_ab();
                let s = 2.0 * k + a + b;
                if k == 0.0 {
                    (b - a) / (a + b + 2.0)
                } else {
                    (b * b - a * a) / (s * (s + 2.0))
                }
            }
        }
    }

    /// Off-diagonal entry `b_k` (squared), `k ≥ 1`.
    pub fn offdiag_sq(&self, k: usize) -> f64 {
        let k = k as f64;
        match *self {
            BaseWeight::Laguerre { alpha } => k * (k + alpha),
            _ => {
                let (a, b) = self.jacobi_ab();
                let s = 2.0 * k + a + b;
                if k == 1.0 {
                    4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b))
                } else {
                    4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
    pub base: BaseWeight,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `∑ w_i f(x_i)`
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).filter(|(_, &w)| w > 0.0).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Number of zeros of the degree-`n` monic polynomial that exceed `x`.
fn count_above(base: &BaseWeight, n: usize, x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for k in 0..n {
        let mut next = x - base.diag(k);
        if k > 0 {
            next -= base.offdiag_sq(k) / q;
        }
        if next == 0.0 {
            next = -f64::EPSILON * (x.abs() + 1.0);
        }
        if next < 0.0 {
            count += 1;
        }
        q = next;
    }
    count
}

fn upper_bound(base: &BaseWeight, n: usize) -> f64 {
    match base {
        BaseWeight::Laguerre { .. } => (0..n)
            .map(|k| {
                let left = if k > 0 { base.offdiag_sq(k).sqrt() } else { 0.0 };
                let right = if k + 1 < n { base.offdiag_sq(k + 1).sqrt() } else { 0.0 };
                base.diag(k) + left + right
            })
            .fold(0.0, f64::max),
        _ => 1.0,
    }
}

/// Christoffel weight at `x`, evaluated with a running exponent.
fn christoffel_weight(base: &BaseWeight, n: usize, x: f64, ln_mass: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut ln_scale = -0.5 * ln_mass;
    let mut sum = 1.0;
    for k in 0..n - 1 {
        let lead = base.offdiag_sq(k + 1).sqrt();
        let back = if k > 0 { base.offdiag_sq(k).sqrt() } else { 0.0 };
        let next = ((x - base.diag(k)) * cur - back * prev) / lead;
        prev = cur;
        cur = next;
        sum += cur * cur;
        if cur.abs() > 1e100 {
            prev *= 1e-100;
            cur *= 1e-100;
            sum *= 1e-200;
            ln_scale += 100.0 * std::f64::consts::LN_10;
        }
    }
    (-2.0 * ln_scale - sum.ln()).exp()
}

/// Gauss rule of order `order` for the given base weight.
pub fn gauss_rule(base: BaseWeight, order: usize) -> Result<QuadratureRule> {
    base.validate()?;
    if order == 0 {
        return Err(Error::InvalidParameter("quadrature order must be positive".into()));
    }
    let (lo, _) = base.interval();
    let hi = upper_bound(&base, order);
    let ln_mass = base.ln_mass();
    let mut nodes = Vec::with_capacity(order);
    for i in 0..order {
        // i-th smallest zero: exactly order - i - 1 zeros above it
        let mut a = lo;
        let mut b = hi;
        loop {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if count_above(&base, order, mid) > order - i - 1 {
                a = mid;
            } else {
                b = mid;
            }
        }
        nodes.push(0.5 * (a + b));
    }
    if nodes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NoConvergence(format!(
            "Gauss nodes of order {order} for {base:?} did not separate"
        )));
    }
    let weights = nodes.iter().map(|&x| christoffel_weight(&base, order, x, ln_mass)).collect();
    Ok(QuadratureRule { nodes, weights, interval: base.interval(), base })
}

fn legendre32() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| gauss_rule(BaseWeight::Legendre, 32).expect("Gauss-Legendre rule"))
}

/// 32-point Gauss-Legendre approximation of `∫_a^b f`.
pub fn legendre_panel<F: Fn(f64) -> f64>(a: f64, b: f64, f: F) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    half * legendre32().integrate(|t| f(mid + half * t))
}
