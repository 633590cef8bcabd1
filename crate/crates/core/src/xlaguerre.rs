//! Exceptional Laguerre polynomials of types I and II.
//!
//! Every family member is available both as a pointwise evaluator (generic
//! over [`Ring`], built from classical recurrences) and as a coefficient
//! [`Polynomial`]. The identity checks run on jets of the pointwise form.

use std::fmt;

use crate::classical::{laguerre_coeffs, laguerre_eval};
use crate::error::{Error, Result};
use crate::poly::{chebyshev_points, Polynomial};
use crate::quadrature::BaseWeight;
use crate::residual::{laguerre_grid, max_pointwise, max_relative, Sample, ShapeResiduals};
use crate::scalar::{Jet, Ring};
use crate::special::{binomial, factorial, pochhammer};
use crate::weight::WeightSpec;
use crate::zeros::sturm::SturmSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LagVariant {
    TypeI,
    TypeII,
}

impl fmt::Display for LagVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LagVariant::TypeI => write!(f, "type I"),
            LagVariant::TypeII => write!(f, "type II"),
        }
    }
}

/// One exceptional Laguerre polynomial: variant, `α`, codimension `m`, degree `n ≥ m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagParams {
    variant: LagVariant,
    alpha: f64,
    m: u32,
    n: u32,
}

impl LagParams {
    pub fn new(variant: LagVariant, alpha: f64, m: u32, n: u32) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("alpha = {alpha}")));
        }
        match variant {
            LagVariant::TypeI if alpha < 0.0 => {
                return Err(Error::InvalidParameter(format!("type I requires alpha >= 0, got {alpha}")))
            }
            LagVariant::TypeII if alpha <= m as f64 - 1.0 => {
                return Err(Error::InvalidParameter(format!(
                    "type II requires alpha > m - 1 = {}, got {alpha}",
                    m as i64 - 1
                )))
            }
            _ => {}
        }
        if n < m {
            return Err(Error::InvalidParameter(format!("degree n = {n} is below m = {m}")));
        }
        Ok(LagParams { variant, alpha, m, n })
    }

    pub fn type_i(alpha: f64, m: u32, n: u32) -> Result<Self> {
        Self::new(LagVariant::TypeI, alpha, m, n)
    }

    pub fn type_ii(alpha: f64, m: u32, n: u32) -> Result<Self> {
        Self::new(LagVariant::TypeII, alpha, m, n)
    }

    pub fn variant(&self) -> LagVariant {
        self.variant
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn j(&self) -> u32 {
        self.n - self.m
    }

    /// Same family at another degree.
    pub fn with_n(&self, n: u32) -> Result<Self> {
        Self::new(self.variant, self.alpha, self.m, n)
    }
}

/// `ξ_{α,m}(z) = L_m^α(-z)`
pub fn xi_eval<T: Ring>(alpha: f64, m: i32, z: T) -> T {
    laguerre_eval(alpha, m, -z)
}

/// `η_{α,m}(z) = L_m^{-α}(z)`
pub fn eta_eval<T: Ring>(alpha: f64, m: i32, z: T) -> T {
    laguerre_eval(-alpha, m, z)
}

pub fn xi(alpha: f64, m: i32) -> Polynomial {
    laguerre_coeffs(alpha, m).reflect()
}

pub fn eta(alpha: f64, m: i32) -> Polynomial {
    laguerre_coeffs(-alpha, m)
}

/// `ξ_{α,m} L_j^α - ξ_{α,m-1} L_{j-1}^α`
pub fn xlag1_eval<T: Ring>(alpha: f64, m: i32, j: i32, z: T) -> T {
    xi_eval(alpha, m, z) * laguerre_eval(alpha, j, z)
        - xi_eval(alpha, m - 1, z) * laguerre_eval(alpha, j - 1, z)
}

/// `-z L_{m-1}^{-α} L_j^{α+1} - (α+1+j) L_m^{-α-1} L_j^α`
pub fn xlag2_eval<T: Ring>(alpha: f64, m: i32, j: i32, z: T) -> T {
    -(z * laguerre_eval(-alpha, m - 1, z) * laguerre_eval(alpha + 1.0, j, z))
        - laguerre_eval(-alpha - 1.0, m, z) * laguerre_eval(alpha, j, z) * (alpha + 1.0 + j as f64)
}

/// Dual form `z L_m^{-α-1} L_{j-1}^{α+2} + (m-α-1) L_m^{-α-2} L_j^{α+1}`.
pub fn xlag2_dual_eval<T: Ring>(alpha: f64, m: i32, j: i32, z: T) -> T {
    z * laguerre_eval(-alpha - 1.0, m, z) * laguerre_eval(alpha + 2.0, j - 1, z)
        + laguerre_eval(-alpha - 2.0, m, z) * laguerre_eval(alpha + 1.0, j, z) * (m as f64 - alpha - 1.0)
}

/// Pointwise value of the polynomial described by `p`.
pub fn xlag_eval<T: Ring>(p: &LagParams, z: T) -> T {
    let (m, j) = (p.m as i32, p.j() as i32);
    match p.variant {
        LagVariant::TypeI => xlag1_eval(p.alpha, m, j, z),
        LagVariant::TypeII => xlag2_eval(p.alpha, m, j, z),
    }
}

fn require(p: &LagParams, v: LagVariant) -> Result<()> {
    if p.variant == v {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("expected {v} parameters, got {}", p.variant)))
    }
}

/// Coefficients of the type I polynomial.
pub fn xlag1(p: &LagParams) -> Result<Polynomial> {
    require(p, LagVariant::TypeI)?;
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    Ok(&(&xi(a, m) * &laguerre_coeffs(a, j)) - &(&xi(a, m - 1) * &laguerre_coeffs(a, j - 1)))
}

/// Coefficients of the type II polynomial.
pub fn xlag2(p: &LagParams) -> Result<Polynomial> {
    require(p, LagVariant::TypeII)?;
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    let first = &(&Polynomial::x() * &laguerre_coeffs(-a, m - 1)) * &laguerre_coeffs(a + 1.0, j);
    let second = (&laguerre_coeffs(-a - 1.0, m) * &laguerre_coeffs(a, j)).scale(a + 1.0 + j as f64);
    Ok(-&(&first + &second))
}

pub fn xlag(p: &LagParams) -> Polynomial {
    match p.variant {
        LagVariant::TypeI => xlag1(p),
        LagVariant::TypeII => xlag2(p),
    }
    .expect("variant matches")
}

/// Weight denominator: `ξ_{α-1,m}` (type I) or `η_{α+1,m}` (type II).
pub fn weight_denominator(variant: LagVariant, alpha: f64, m: u32) -> Polynomial {
    match variant {
        LagVariant::TypeI => xi(alpha - 1.0, m as i32),
        LagVariant::TypeII => eta(alpha + 1.0, m as i32),
    }
}

fn denominator_eval<T: Ring>(variant: LagVariant, alpha: f64, m: i32, z: T) -> T {
    match variant {
        LagVariant::TypeI => xi_eval(alpha - 1.0, m, z),
        LagVariant::TypeII => eta_eval(alpha + 1.0, m, z),
    }
}

/// Orthogonality weight, with the denominator certified root-free on `[0, ∞)`.
pub fn xlag_weight(p: &LagParams) -> Result<WeightSpec> {
    let denominator = weight_denominator(p.variant, p.alpha, p.m);
    if SturmSequence::new(&denominator).has_root_in_closed(0.0, f64::INFINITY) {
        return Err(Error::InvalidParameter(format!(
            "{} weight denominator for alpha = {}, m = {} vanishes on [0, inf)",
            p.variant, p.alpha, p.m
        )));
    }
    Ok(WeightSpec {
        base: BaseWeight::Laguerre { alpha: p.alpha },
        denominator,
        interval: (0.0, f64::INFINITY),
    })
}

fn jet(z: f64) -> Jet<f64> {
    Jet::var(z)
}

/// Eigenvalue equation of the type I operator, multiplied through by `ξ_{α-1,m}`.
pub fn xlag1_eigen_residual(p: &LagParams) -> f64 {
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    let grid = laguerre_grid(p.n as usize + p.m as usize);
    max_relative(grid, |z| {
        let x = xlag1_eval(a, m, j, jet(z));
        let w = xi_eval(a - 1.0, m, jet(z));
        Sample::of_terms(&[
            w.v * z * x.d2,
            w.v * (a + 1.0 - z) * x.d1,
            w.v * (m + j) as f64 * x.v,
            -2.0 * w.d1 * z * x.d1,
            -2.0 * w.d1 * a * x.v,
        ])
    })
}

/// Eigenvalue equation of the type II operator, multiplied through by `η_{α+1,m}`.
pub fn xlag2_eigen_residual(p: &LagParams) -> f64 {
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    let grid = laguerre_grid(p.n as usize + p.m as usize);
    max_relative(grid, |z| {
        let x = xlag2_eval(a, m, j, jet(z));
        let e = eta_eval(a + 1.0, m, jet(z));
        Sample::of_terms(&[
            e.v * z * x.d2,
            e.v * (a + 1.0 - z) * x.d1,
            e.v * (j - m) as f64 * x.v,
            2.0 * z * e.d1 * x.v,
            -2.0 * z * e.d1 * x.d1,
        ])
    })
}

pub fn xlag_eigen_residual(p: &LagParams) -> f64 {
    match p.variant {
        LagVariant::TypeI => xlag1_eigen_residual(p),
        LagVariant::TypeII => xlag2_eigen_residual(p),
    }
}

/// `X' - X = (1+α+j-m) L_m^{-α-1} L_j^{α+1}` for type II.
pub fn xlag2_lowering_residual(p: &LagParams) -> f64 {
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    let c = 1.0 + a + (j - m) as f64;
    max_relative(laguerre_grid(p.n as usize), |z| {
        let x = xlag2_eval(a, m, j, jet(z));
        let rhs = c * laguerre_eval(-a - 1.0, m, z) * laguerre_eval(a + 1.0, j, z);
        Sample::of_terms(&[x.d1, -x.v, -rhs])
    })
}

/// Type II shape-invariant ladder:
/// `X' η_{α+2} - X η'_{α+2} = -η_{α+1} X^{α+1}_{m,n-1}` and the raising
/// relation with its `e^{-z} z^{α+1}` factor expanded by the product rule.
pub fn xlag2_shape_residuals(p: &LagParams) -> ShapeResiduals {
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    let lower = (j >= 1).then(|| {
        let grid = laguerre_grid(p.n as usize + p.m as usize);
        max_relative(grid, |z| {
            let x = xlag2_eval(a, m, j, jet(z));
            let e2 = eta_eval(a + 2.0, m, jet(z));
            let e1 = eta_eval(a + 1.0, m, z);
            let up = xlag2_eval(a + 1.0, m, j - 1, z);
            Sample::of_terms(&[x.d1 * e2.v, -x.v * e2.d1, e1 * up])
        })
    });
    let hi = 4.0 * p.n.max(1) as f64;
    let raise = max_pointwise(chebyshev_points(20, 0.0, hi), |z| {
        let y = xlag2_eval(a + 1.0, m, j, jet(z));
        let e1 = eta_eval(a + 1.0, m, jet(z));
        let e2 = eta_eval(a + 2.0, m, z);
        let next = xlag2_eval(a, m, j + 1, z);
        let f = y.v / e1.v;
        let df = (y.d1 * e1.v - y.v * e1.d1) / (e1.v * e1.v);
        let base = (-z).exp() * z.powf(a);
        let lhs_a = base * (a + 1.0 - z) * f;
        let lhs_b = base * z * df;
        let rhs = (j + 1) as f64 * base * e2 * next / (e1.v * e1.v);
        Sample::of_terms(&[lhs_a, lhs_b, -rhs])
    });
    ShapeResiduals { lower, raise }
}

/// Agreement of the two defining representations of the type II polynomial.
pub fn xlag2_dual_residual(p: &LagParams) -> f64 {
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    max_relative(laguerre_grid(p.n as usize), |z| {
        Sample::of_sides(xlag2_eval(a, m, j, z), xlag2_dual_eval(a, m, j, z))
    })
}

/// `ξ_{α,m} L_j^{α-1} + ξ_{α-1,m} L_{j-1}^α` against the type I constructor.
pub fn xlag1_proof_chain_residual(p: &LagParams) -> f64 {
    let (a, m, j) = (p.alpha, p.m as i32, p.j() as i32);
    max_relative(laguerre_grid(p.n as usize), |z| {
        let alt = xi_eval(a, m, z) * laguerre_eval(a - 1.0, j, z)
            + xi_eval(a - 1.0, m, z) * laguerre_eval(a, j - 1, z);
        Sample::of_sides(alt, xlag1_eval(a, m, j, z))
    })
}

/// Remainder of `z X' + α X` on division by `ξ_{α-1,m}`, relative to the
/// dividend on the sampling grid.
pub fn xlag1_flag_residual(p: &LagParams) -> Result<f64> {
    require(p, LagVariant::TypeI)?;
    let x = xlag1(p)?;
    let dividend = &(&Polynomial::x() * &x.derivative()) + &x.scale(p.alpha);
    let (_, r) = dividend.div_rem(&xi(p.alpha - 1.0, p.m as i32))?;
    let grid = laguerre_grid(p.n as usize);
    let scale = grid.iter().map(|&z| dividend.eval(z).abs()).fold(0.0, f64::max);
    let rem = grid.iter().map(|&z| r.eval(z).abs()).fold(0.0, f64::max);
    Ok(if scale == 0.0 { rem } else { rem / scale })
}

/// `X^I_{m,m+j}(0) = (α+j+m)/α · (α)_m/m! · (α)_j/j!`
pub fn xlag1_value_at_zero(alpha: f64, m: u32, j: u32) -> f64 {
    (alpha + (j + m) as f64) / alpha * pochhammer(alpha, m) / factorial(m) * pochhammer(alpha, j)
        / factorial(j)
}

/// `X^II_{m,m+j}(0) = (m+1) binom(α+j+1, j) binom(m-α-1, m+1)`
pub fn xlag2_value_at_zero(alpha: f64, m: u32, j: u32) -> f64 {
    (m + 1) as f64
        * binomial(alpha + j as f64 + 1.0, j as i32)
        * binomial(m as f64 - alpha - 1.0, m as i32 + 1)
}

/// Leading coefficient of the type II polynomial.
pub fn xlag2_leading(alpha: f64, m: u32, j: u32) -> f64 {
    let sign = if (m + j).is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * (m as f64 - 1.0 - j as f64 - alpha) / (factorial(m) * factorial(j))
}

/// Logarithmic derivative of the evaluated type II weight against the
/// Pearson form `α/z - 1 - 2 η'/η`, by central differences.
pub fn xlag2_pearson_residual(p: &LagParams) -> Result<f64> {
    require(p, LagVariant::TypeII)?;
    let w = xlag_weight(p)?;
    let hi = 2.0 * (p.n.max(2)) as f64;
    Ok(max_pointwise(chebyshev_points(10, 0.25, hi), |z| {
        let h = 1e-5 * z.max(1.0);
        let fd = ((w.eval(z + h)).ln() - (w.eval(z - h)).ln()) / (2.0 * h);
        let e = eta_eval(p.alpha + 1.0, p.m as i32, jet(z));
        let terms = [p.alpha / z, -1.0, -2.0 * e.d1 / e.v];
        let exact: f64 = terms.iter().sum();
        Sample { defect: fd - exact, scale: terms.iter().map(|t| t.abs()).sum() }
    }))
}

/// Evaluates the weight denominator pointwise.
pub fn weight_denominator_eval<T: Ring>(variant: LagVariant, alpha: f64, m: u32, z: T) -> T {
    denominator_eval(variant, alpha, m as i32, z)
}
