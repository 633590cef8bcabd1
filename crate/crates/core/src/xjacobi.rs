//! Exceptional Jacobi polynomials.

use std::fmt;

use crate::classical::{jacobi_coeffs, jacobi_eval};
use crate::error::{Error, Result};
use crate::poly::{chebyshev_points, Polynomial};
use crate::quadrature::BaseWeight;
use crate::residual::{jacobi_grid, max_pointwise, max_relative, Sample, ShapeResiduals};
use crate::scalar::{Jet, Ring};
use crate::special::{factorial, pochhammer};
use crate::weight::WeightSpec;
use crate::zeros::all_roots;
use crate::zeros::sturm::SturmSequence;

const DEGENERATE_TOL: f64 = 1e-12;

/// Why a parameter triple fails to define a positive weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Inadmissible {
    BetaZero,
    OutsideClasses,
    /// `α+1-m-β` equals this integer in `0..m`.
    DegenerateInteger(u32),
}

impl fmt::Display for Inadmissible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inadmissible::BetaZero => write!(f, "beta = 0 is excluded"),
            Inadmissible::OutsideClasses => {
                write!(f, "(beta, alpha+1-m) lies outside both admissible classes")
            }
            Inadmissible::DegenerateInteger(k) => write!(f, "alpha+1-m-beta = {k} is a degenerate integer"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Admissibility {
    /// `β, α+1-m ∈ (-1, 0)`
    A,
    /// `β, α+1-m ∈ (0, ∞)`
    B,
    Inadmissible(Inadmissible),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        !matches!(self, Admissibility::Inadmissible(_))
    }
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissibility::A => write!(f, "A"),
            Admissibility::B => write!(f, "B"),
            Admissibility::Inadmissible(r) => write!(f, "inadmissible ({r})"),
        }
    }
}

/// Classifies `(α, β, m)`.
pub fn admissible(alpha: f64, beta: f64, m: u32) -> Admissibility {
    if m == 0 {
        return if alpha > -1.0 && beta > -1.0 {
            Admissibility::B
        } else {
            Admissibility::Inadmissible(Inadmissible::OutsideClasses)
        };
    }
    if beta == 0.0 {
        return Admissibility::Inadmissible(Inadmissible::BetaZero);
    }
    let shifted = alpha + 1.0 - m as f64;
    let in_unit = |x: f64| x > -1.0 && x < 0.0;
    let class = if in_unit(beta) && in_unit(shifted) {
        Admissibility::A
    } else if beta > 0.0 && shifted > 0.0 {
        Admissibility::B
    } else {
        return Admissibility::Inadmissible(Inadmissible::OutsideClasses);
    };
    let gap = shifted - beta;
    let k = gap.round();
    if (gap - k).abs() < DEGENERATE_TOL && k >= 0.0 && k < m as f64 {
        return Admissibility::Inadmissible(Inadmissible::DegenerateInteger(k as u32));
    }
    class
}

/// One exceptional Jacobi polynomial `(α, β, m, n)` with its admissibility class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacParams {
    alpha: f64,
    beta: f64,
    m: u32,
    n: u32,
    class: Admissibility,
}

impl JacParams {
    pub fn new(alpha: f64, beta: f64, m: u32, n: u32) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!("alpha = {alpha}, beta = {beta}")));
        }
        if n < m {
            return Err(Error::InvalidParameter(format!("degree n = {n} is below m = {m}")));
        }
        Ok(JacParams { alpha, beta, m, n, class: admissible(alpha, beta, m) })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
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

    pub fn class(&self) -> Admissibility {
        self.class
    }

    pub fn with_n(&self, n: u32) -> Result<Self> {
        Self::new(self.alpha, self.beta, self.m, n)
    }
}

fn sign(m: i32) -> f64 {
    if m % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Route {
    Direct,
    Symmetric,
}

fn route(alpha: f64, beta: f64, j: i32) -> Result<Route> {
    if (alpha + 1.0 + j as f64).abs() < DEGENERATE_TOL {
        return Err(Error::DegenerateDenominator("alpha+1+j".into()));
    }
    if (alpha + beta + 2.0 * j as f64).abs() < DEGENERATE_TOL {
        Ok(Route::Symmetric)
    } else {
        Ok(Route::Direct)
    }
}

fn direct_eval<T: Ring>(a: f64, b: f64, m: i32, j: i32, z: T) -> T {
    let jf = j as f64;
    let s = a + b + 2.0 * jf;
    let d = 1.0 + a + jf;
    let pj = jacobi_eval(a, b, j, z);
    let inner = pj * (jf / s) - jacobi_eval(a, b, j - 1, z) * ((a + jf) / s);
    let first = jacobi_eval(-a, b, m - 1, z) * inner * ((a - b - m as f64 + 1.0) / d);
    let second = (jacobi_eval(-2.0 - a, b, m, z) * ((1.0 + a - m as f64) / d)
        + jacobi_eval(-a - 1.0, b - 1.0, m, z) * (jf / d))
        * pj;
    (first + second) * sign(m)
}

/// Form free of the `α+β+2j` denominator.
fn symmetric_eval<T: Ring>(a: f64, b: f64, m: i32, j: i32, z: T) -> T {
    let d = 1.0 + a + j as f64;
    // (P_m^{(a',b')})' = (m+a'+b'+1)/2 P_{m-1}^{(a'+1,b'+1)}
    let dp = jacobi_eval(-a, b, m - 1, z) * (0.5 * (m as f64 - a + b - 1.0));
    (jacobi_eval(a, b, j, z) * jacobi_eval(-a - 1.0, b - 1.0, m, z)
        - (z - T::one()) * jacobi_eval(a + 1.0, b - 1.0, j, z) * dp * (1.0 / d))
        * sign(m)
}

/// Shifted-parameter form used as an independent cross-check.
fn shifted_eval<T: Ring>(a: f64, b: f64, m: i32, j: i32, z: T) -> T {
    let d = 1.0 + a + j as f64;
    let first = (z - T::one())
        * jacobi_eval(-a - 1.0, b - 1.0, m, z)
        * jacobi_eval(a + 2.0, b, j - 1, z)
        * (0.5 * (1.0 + a + b + j as f64));
    let second = jacobi_eval(-a - 2.0, b, m, z) * jacobi_eval(a + 1.0, b - 1.0, j, z) * (a + 1.0 - m as f64);
    (first + second) * (sign(m) / d)
}

/// Pointwise value of `X^{(α,β)}_{m,m+j}`.
pub fn xjac_eval<T: Ring>(alpha: f64, beta: f64, m: i32, j: i32, z: T) -> Result<T> {
    Ok(match route(alpha, beta, j)? {
        Route::Direct => direct_eval(alpha, beta, m, j, z),
        Route::Symmetric => symmetric_eval(alpha, beta, m, j, z),
    })
}

pub fn xjac_params_eval<T: Ring>(p: &JacParams, z: T) -> Result<T> {
    xjac_eval(p.alpha, p.beta, p.m as i32, p.j() as i32, z)
}

fn pj(a: f64, b: f64, n: i32) -> Polynomial {
    jacobi_coeffs(a, b, n).poly
}

/// Coefficients of `X^{(α,β)}_{m,n}`.
pub fn xjac(p: &JacParams) -> Result<Polynomial> {
    let (a, b, m, j) = (p.alpha, p.beta, p.m as i32, p.j() as i32);
    let jf = j as f64;
    let d = 1.0 + a + jf;
    let x = match route(a, b, j)? {
        Route::Direct => {
            let s = a + b + 2.0 * jf;
            let pjp = pj(a, b, j);
            let inner = &pjp.scale(jf / s) - &pj(a, b, j - 1).scale((a + jf) / s);
            let first = (&pj(-a, b, m - 1) * &inner).scale((a - b - m as f64 + 1.0) / d);
            let factor =
                &pj(-2.0 - a, b, m).scale((1.0 + a - m as f64) / d) + &pj(-a - 1.0, b - 1.0, m).scale(jf / d);
            &first + &(&factor * &pjp)
        }
        Route::Symmetric => {
            let pm = pj(-a - 1.0, b - 1.0, m);
            let zm1 = Polynomial::new(vec![-1.0, 1.0]);
            let second = &(&zm1 * &pj(a + 1.0, b - 1.0, j)) * &pm.derivative();
            &(&pj(a, b, j) * &pm) - &second.scale(1.0 / d)
        }
    };
    Ok(x.scale(sign(m)))
}

/// `P_m^{(-α-1, β-1)}`
pub fn xjac_denominator(alpha: f64, beta: f64, m: u32) -> Polynomial {
    pj(-alpha - 1.0, beta - 1.0, m as i32)
}

/// Orthogonality weight; the parameters must be admissible and the
/// denominator root-free on `[-1, 1]`.
pub fn xjac_weight(p: &JacParams) -> Result<WeightSpec> {
    if let Admissibility::Inadmissible(reason) = p.class {
        return Err(Error::Inadmissible(reason));
    }
    let denominator = xjac_denominator(p.alpha, p.beta, p.m);
    if SturmSequence::new(&denominator).has_root_in_closed(-1.0, 1.0) {
        return Err(Error::InvalidParameter(format!(
            "weight denominator for alpha = {}, beta = {}, m = {} vanishes on [-1, 1]",
            p.alpha, p.beta, p.m
        )));
    }
    Ok(WeightSpec {
        base: BaseWeight::Jacobi { alpha: p.alpha, beta: p.beta },
        denominator,
        interval: (-1.0, 1.0),
    })
}

fn jet(z: f64) -> Jet<f64> {
    Jet::var(z)
}

/// Eigenvalue equation of the exceptional Jacobi operator multiplied through
/// by `P_m^{(-α-1,β-1)}`.
pub fn xjac_eigen_residual(p: &JacParams) -> Result<f64> {
    let (a, b, m, j) = (p.alpha, p.beta, p.m as i32, p.j() as i32);
    route(a, b, j)?;
    let shift = (a - b - m as f64 + 1.0) * m as f64 + j as f64 * (1.0 + a + b + j as f64);
    Ok(max_relative(jacobi_grid(p.n as usize + p.m as usize), |z| {
        let x = xjac_eval(a, b, m, j, jet(z)).expect("route checked");
        let q = jacobi_eval(-a - 1.0, b - 1.0, m, jet(z));
        Sample::of_terms(&[
            q.v * (1.0 - z * z) * x.d2,
            q.v * (b - a - (a + b + 2.0) * z) * x.d1,
            q.v * shift * x.v,
            -2.0 * q.d1 * b * (1.0 - z) * x.v,
            -2.0 * q.d1 * (1.0 - z * z) * x.d1,
        ])
    }))
}

/// `(-1)^m (α+1+j)(βX + (z+1)X') = (α+1-m+j)(β+m+j) P_m^{(-α-1,β-1)} P_j^{(α+1,β-1)}`
pub fn xjac_b_identity_residual(p: &JacParams) -> Result<f64> {
    let (a, b, m, j) = (p.alpha, p.beta, p.m as i32, p.j() as i32);
    route(a, b, j)?;
    let jf = j as f64;
    let left = sign(m) * (a + 1.0 + jf);
    let right = (a + 1.0 - m as f64 + jf) * (b + m as f64 + jf);
    Ok(max_relative(jacobi_grid(p.n as usize), |z| {
        let x = xjac_eval(a, b, m, j, jet(z)).expect("route checked");
        let rhs = right * jacobi_eval(-a - 1.0, b - 1.0, m, z) * jacobi_eval(a + 1.0, b - 1.0, j, z);
        Sample::of_terms(&[left * b * x.v, left * (z + 1.0) * x.d1, -rhs])
    }))
}

/// Lowering `X'Q - XQ' = ½(j+α+β+1) P X^{(α+1,β+1)}_{m,n-1}` with
/// `Q = P_m^{(-α-2,β)}`, `P = P_m^{(-α-1,β-1)}`, and the raising relation with
/// its `(1-z)^{α+1}(1+z)^{β+1}` factor expanded by the product rule.
pub fn xjac_shape_residuals(p: &JacParams) -> Result<ShapeResiduals> {
    let (a, b, m, j) = (p.alpha, p.beta, p.m as i32, p.j() as i32);
    route(a, b, j)?;
    let jf = j as f64;
    let lower = if j >= 1 {
        route(a + 1.0, b + 1.0, j - 1)?;
        let c = 0.5 * (jf + a + b + 1.0);
        Some(max_relative(jacobi_grid(p.n as usize + p.m as usize), |z| {
            let x = xjac_eval(a, b, m, j, jet(z)).expect("route checked");
            let q = jacobi_eval(-a - 2.0, b, m, jet(z));
            let up = xjac_eval(a + 1.0, b + 1.0, m, j - 1, z).expect("route checked");
            let pm = jacobi_eval(-a - 1.0, b - 1.0, m, z);
            Sample::of_terms(&[x.d1 * q.v, -x.v * q.d1, -c * pm * up])
        }))
    } else {
        None
    };
    route(a + 1.0, b + 1.0, j)?;
    route(a, b, j + 1)?;
    let raise = max_pointwise(chebyshev_points(20, -1.0, 1.0), |z| {
        let y = xjac_eval(a + 1.0, b + 1.0, m, j, jet(z)).expect("route checked");
        let pm = jacobi_eval(-a - 1.0, b - 1.0, m, jet(z));
        let q = jacobi_eval(-a - 2.0, b, m, z);
        let next = xjac_eval(a, b, m, j + 1, z).expect("route checked");
        let f = y.v / pm.v;
        let df = (y.d1 * pm.v - y.v * pm.d1) / (pm.v * pm.v);
        let base = (1.0 - z).powf(a) * (1.0 + z).powf(b);
        let g = (1.0 - z).powf(a + 1.0) * (1.0 + z).powf(b + 1.0);
        let dg = g * ((b + 1.0) / (1.0 + z) - (a + 1.0) / (1.0 - z));
        let rhs = -2.0 * (jf + 1.0) * q * next / (pm.v * pm.v);
        Sample::of_terms(&[dg * f / base, g * df / base, -rhs])
    });
    Ok(ShapeResiduals { lower, raise })
}

/// Largest disagreement between the constructor and the two alternative
/// representations.
pub fn xjac_representation_residual(p: &JacParams) -> Result<f64> {
    let (a, b, m, j) = (p.alpha, p.beta, p.m as i32, p.j() as i32);
    route(a, b, j)?;
    Ok(max_relative(jacobi_grid(p.n as usize), |z| {
        let x = xjac_eval(a, b, m, j, z).expect("route checked");
        let s1 = shifted_eval(a, b, m, j, z);
        let s2 = symmetric_eval(a, b, m, j, z);
        let (d1, d2) = (x - s1, x - s2);
        Sample {
            defect: if d1.abs() > d2.abs() { d1 } else { d2 },
            scale: x.abs().max(s1.abs()).max(s2.abs()),
        }
    }))
}

/// Divisibility of `(1+z)X' + βX` by `P_m^{(-α-1,β-1)}`.
///
/// The remainder is the interpolant of the dividend at the divisor's roots, so
/// the dividend is evaluated there with the recurrence evaluator, each value
/// relative to the magnitude of its two terms. Long division in the monomial
/// basis would amplify rounding by the root moduli raised to the degree.
pub fn xjac_flag_residual(p: &JacParams) -> Result<f64> {
    let (a, b, m, j) = (p.alpha, p.beta, p.m as i32, p.j() as i32);
    let roots = all_roots(&xjac_denominator(p.alpha, p.beta, p.m))?;
    roots.into_iter().try_fold(0.0f64, |acc, z| {
        let x = xjac_eval(a, b, m, j, Jet::var(z))?;
        let lhs = (z + 1.0) * x.d1;
        let rhs = x.v * b;
        let scale = lhs.norm() + rhs.norm();
        let defect = (lhs + rhs).norm();
        Ok(acc.max(if scale == 0.0 { defect } else { defect / scale }))
    })
}

/// `X(1) = (α+1-m)_{m+j} / (m! j!)`
pub fn xjac_value_at_plus_one(alpha: f64, m: u32, j: u32) -> f64 {
    pochhammer(alpha + 1.0 - m as f64, m + j) / (factorial(m) * factorial(j))
}

/// `X(-1) = (-1)^j (β+j+m)(1+α-m+j)/(1+α+j) · (β+1)_{m-1} (β)_j / (m! j!)`
pub fn xjac_value_at_minus_one(alpha: f64, beta: f64, m: u32, j: u32) -> f64 {
    let sj = sign(j as i32);
    if m == 0 {
        return sj * pochhammer(beta + 1.0, j) / factorial(j);
    }
    let (mf, jf) = (m as f64, j as f64);
    sj * (beta + jf + mf) * (1.0 + alpha - mf + jf) / (1.0 + alpha + jf)
        * pochhammer(beta + 1.0, m - 1)
        * pochhammer(beta, j)
        / (factorial(m) * factorial(j))
}
