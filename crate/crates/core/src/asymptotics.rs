//! Large-degree experiments: Heine-Mehler limits, scaled and exceptional zero
//! tracks, outer ratio asymptotics and Gram matrices.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::classical::{jacobi_eval, laguerre_eval};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::quadrature::gauss_rule;
use crate::special::{bessel_j_reduced, bessel_zeros, binomial};
use crate::xlaguerre::{eta_eval, xi_eval};
use crate::zeros::{all_roots, family_zero_set, scan_sign_changes};

/// Errors against an index, with what they converge to.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTrack {
    pub label: String,
    pub points: Vec<(u32, f64)>,
    pub limit_description: String,
}

impl ConvergenceTrack {
    pub fn new(label: impl Into<String>, limit: impl Into<String>, points: Vec<(u32, f64)>) -> Result<Self> {
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidParameter("track indices must increase strictly".into()));
        }
        if let Some(&(i, e)) = points.iter().find(|(_, e)| !(e.is_finite() && *e >= 0.0)) {
            return Err(Error::NoConvergence(format!("error {e} at index {i}")));
        }
        Ok(ConvergenceTrack { label: label.into(), points, limit_description: limit.into() })
    }

    pub fn errors(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.1).collect()
    }

    pub fn first(&self) -> Option<f64> {
        self.points.first().map(|p| p.1)
    }

    pub fn last(&self) -> Option<f64> {
        self.points.last().map(|p| p.1)
    }

    pub fn error_at(&self, index: u32) -> Option<f64> {
        self.points.iter().find(|p| p.0 == index).map(|p| p.1)
    }

    /// Strict decrease from entry `skip` on.
    pub fn is_decreasing_from(&self, skip: usize) -> bool {
        self.points.get(skip..).is_some_and(|t| t.windows(2).all(|w| w[1].1 < w[0].1))
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.is_decreasing_from(0)
    }

    /// Last error over first error.
    pub fn reduction(&self) -> f64 {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) if a > 0.0 => b / a,
            _ => f64::NAN,
        }
    }

    /// Least-squares slope of `ln error` against `ln index`.
    pub fn log_log_slope(&self) -> f64 {
        let pts: Vec<(f64, f64)> = self
            .points
            .iter()
            .filter(|(i, e)| *i > 0 && *e > 0.0)
            .map(|&(i, e)| ((i as f64).ln(), e.ln()))
            .collect();
        let n = pts.len() as f64;
        if pts.len() < 2 {
            return f64::NAN;
        }
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        sxy / sxx
    }
}

/// Gram matrix summary for degrees `m..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub size: usize,
    pub degrees: Vec<u32>,
    pub entries: Vec<Vec<f64>>,
    pub diag: Vec<f64>,
    pub max_offdiag_ratio: f64,
    pub quad_order: usize,
}

impl GramReport {
    /// Largest change between two reports, each entry measured against
    /// `sqrt(G_ii G_jj)`.
    pub fn max_change(&self, other: &GramReport) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.size.min(other.size) {
            for j in 0..self.size.min(other.size) {
                let s = (self.diag[i] * self.diag[j]).sqrt();
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).abs() / s);
            }
        }
        worst
    }
}

/// Uniform grid of `count` points on `[0, zmax]`.
pub fn z_grid(zmax: f64, count: usize) -> Vec<f64> {
    let count = count.max(2);
    (0..count).map(|k| zmax * k as f64 / (count - 1) as f64).collect()
}

/// Default Heine-Mehler grid: 600 points on `[0, 40]` for Laguerre families,
/// `[0, 20]` for Jacobi.
pub fn default_grid(family: &Family) -> Vec<f64> {
    z_grid(if family.is_laguerre() { 40.0 } else { 20.0 }, 600)
}

fn hm_constant(family: &Family) -> f64 {
    match *family {
        Family::ClassicalLaguerre { .. } | Family::ClassicalJacobi { .. } => 1.0,
        Family::TypeI { alpha, m } => binomial(alpha + m as f64 - 1.0, m as i32),
        Family::TypeII { alpha, m } => -binomial(m as f64 - 1.0 - alpha, m as i32),
        Family::Jacobi { alpha, m, .. } => {
            let s = if m % 2 == 0 { 1.0 } else { -1.0 };
            s * binomial(m as f64 - 1.0 - alpha, m as i32)
        }
    }
}

/// Bessel limit of the scaled family at `z`.
pub fn heine_mehler_limit(family: &Family, z: f64) -> Result<f64> {
    let alpha = family.alpha();
    let w = if family.is_laguerre() { 2.0 * z.sqrt() } else { z };
    Ok(hm_constant(family) * bessel_j_reduced(alpha, w)?)
}

/// `n^{-a} X_n(z/n)` (Laguerre, `a = α + 1` for type II) or
/// `n^{-α} X_n(cos(z/n))` (Jacobi).
pub fn heine_mehler_scaled(family: &Family, n: u32, z: f64) -> Result<f64> {
    let nf = n as f64;
    let alpha = family.alpha();
    match family {
        Family::TypeII { .. } => Ok(family.eval(n, z / nf)? * nf.powf(-alpha - 1.0)),
        _ if family.is_laguerre() => Ok(family.eval(n, z / nf)? * nf.powf(-alpha)),
        _ => Ok(family.eval(n, (z / nf).cos())? * nf.powf(-alpha)),
    }
}

/// Sup-norm distance to the Bessel limit over `grid`.
pub fn heine_mehler_error(family: &Family, n: u32, grid: &[f64]) -> Result<f64> {
    grid.iter().try_fold(0.0f64, |acc, &z| {
        let d = (heine_mehler_scaled(family, n, z)? - heine_mehler_limit(family, z)?).abs();
        Ok(acc.max(d))
    })
}

fn check_bessel_order(family: &Family) -> Result<()> {
    family.validate()?;
    if family.alpha() <= -1.0 {
        return Err(Error::InvalidParameter(format!(
            "Heine-Mehler limits need alpha > -1, got {}",
            family.alpha()
        )));
    }
    Ok(())
}

fn collect_track<F>(indices: &[u32], f: F) -> Result<Vec<(u32, f64)>>
where
    F: Fn(u32) -> Result<f64> + Sync,
{
    indices.par_iter().map(|&i| f(i).map(|e| (i, e))).collect()
}

/// Sup-error of the generalized Heine-Mehler limit for each degree in `n_list`.
pub fn heine_mehler_sweep(family: &Family, n_list: &[u32], grid: &[f64]) -> Result<ConvergenceTrack> {
    check_bessel_order(family)?;
    let points = collect_track(n_list, |n| heine_mehler_error(family, n, grid))?;
    let zmax = grid.iter().copied().fold(0.0, f64::max);
    ConvergenceTrack::new(
        format!("heine-mehler {family}"),
        format!("{:.6} x Bessel limit on [0, {zmax}]", hm_constant(family)),
        points,
    )
}

fn zero_scale(family: &Family, n: u32) -> f64 {
    match family {
        Family::TypeI { m, .. } => (n - m) as f64,
        _ => n as f64,
    }
}

/// The `i`-th regular zero nearest the hard edge (smallest for Laguerre,
/// largest for Jacobi), by sign-change scanning of the recurrence evaluator.
pub fn hard_edge_zero(family: &Family, n: u32, i: usize, bessel_guess: f64) -> Result<f64> {
    let scale = zero_scale(family, n).max(1.0);
    let f = |x: f64| family.eval(n, x).unwrap_or(f64::NAN);
    let mut reach = 2.0 * bessel_guess;
    for _ in 0..12 {
        let found = if family.is_laguerre() {
            let hi = reach * reach / (4.0 * scale);
            scan_sign_changes(f, 0.0, hi, 400 * (i + 1))
        } else {
            let lo = (reach / n as f64).min(std::f64::consts::PI).cos();
            let mut z = scan_sign_changes(f, lo, 1.0, 400 * (i + 1));
            z.reverse();
            z
        };
        if let Some(&x) = found.get(i - 1) {
            return Ok(x);
        }
        reach *= 1.5;
    }
    Err(Error::NoConvergence(format!("zero {i} of {family} at degree {n} not located")))
}

/// `|scale x_{j,i} - z_i^2 / 4|` (Laguerre, scale `j` for type I and `n`
/// otherwise) or `|n arccos x_{n,i} - z_i|` (Jacobi), for each `j`.
pub fn scaled_zero_track(family: &Family, i: usize, j_list: &[u32]) -> Result<ConvergenceTrack> {
    check_bessel_order(family)?;
    if i == 0 {
        return Err(Error::InvalidParameter("zero index is 1-based".into()));
    }
    if let Some(&j) = j_list.iter().find(|&&j| (j as usize) < i) {
        return Err(Error::InvalidParameter(format!("zero index {i} exceeds j = {j}")));
    }
    let alpha = family.alpha();
    let table = bessel_zeros(alpha, i + 1)?;
    let zi = table.get(i).expect("table has i entries");
    let m = family.codim();
    let points = collect_track(j_list, |j| {
        let n = m + j;
        let x = hard_edge_zero(family, n, i, zi)?;
        Ok(if family.is_laguerre() {
            (zero_scale(family, n) * x - zi * zi / 4.0).abs()
        } else {
            (n as f64 * x.clamp(-1.0, 1.0).acos() - zi).abs()
        })
    })?;
    let limit = if family.is_laguerre() {
        format!("z_{i}^2/4 = {:.12} (J_{alpha} zero)", zi * zi / 4.0)
    } else {
        format!("z_{i} = {zi:.12} (J_{alpha} zero)")
    };
    ConvergenceTrack::new(format!("scaled zero {i} {family}"), limit, points)
}

/// Hausdorff distance between two finite planar sets; zero when both are empty.
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    if a.is_empty() || b.is_empty() {
        return f64::INFINITY;
    }
    let directed = |p: &[Complex64], q: &[Complex64]| {
        p.iter().map(|x| q.iter().map(|y| (x - y).norm()).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// Roots of the polynomial the exceptional zeros converge to.
pub fn limit_roots(family: &Family) -> Result<Vec<Complex64>> {
    let p = family.limit_poly();
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    all_roots(&p)
}

/// Hausdorff distance between the exceptional zeros of `X_{m+j}` and the
/// limit roots, for each `j`.
pub fn exceptional_zero_track(family: &Family, j_list: &[u32]) -> Result<ConvergenceTrack> {
    family.validate()?;
    let target = limit_roots(family)?;
    let m = family.codim();
    let points = collect_track(j_list, |j| {
        let zs = family_zero_set(family, m + j)?;
        Ok(hausdorff(&zs.exceptional(), &target))
    })?;
    ConvergenceTrack::new(
        format!("exceptional zeros {family}"),
        format!("{} roots of the limit polynomial", target.len()),
        points,
    )
}

fn distance_to_interval(family: &Family, z: Complex64) -> f64 {
    let (lo, hi) = family.interval();
    let x = z.re.clamp(lo, hi);
    (z - Complex64::new(x, 0.0)).norm()
}

/// Largest deviation of the normalized outer ratio from its limit polynomial
/// over `samples`, which must keep a distance of 0.5 from the interval.
pub fn outer_ratio_check(family: &Family, j: u32, samples: &[Complex64]) -> Result<f64> {
    family.validate()?;
    if let Some(z) = samples.iter().find(|z| distance_to_interval(family, **z) < 0.5) {
        return Err(Error::SampleTooClose(z.to_string()));
    }
    let m = family.codim();
    let n = m + j;
    let jf = j as f64;
    let deviation = |z: Complex64| -> Result<f64> {
        let x: Complex64 = family.eval(n, z)?;
        let d = match *family {
            Family::ClassicalLaguerre { .. } | Family::ClassicalJacobi { .. } => 0.0,
            Family::TypeI { alpha, m } => {
                let ratio = x / laguerre_eval(alpha, j as i32, z);
                (ratio - xi_eval(alpha - 1.0, m as i32, z)).norm()
            }
            Family::TypeII { alpha, m } => {
                let ratio = -x / laguerre_eval(alpha, j as i32, z) / (alpha + 1.0 + jf);
                (ratio - eta_eval(alpha + 1.0, m as i32, z)).norm()
            }
            Family::Jacobi { alpha, beta, m } => {
                let ratio = x / jacobi_eval(alpha, beta, j as i32, z);
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let limit = jacobi_eval(-alpha - 1.0, beta - 1.0, m as i32, z) * sign;
                (ratio - limit).norm()
            }
        };
        Ok(d)
    };
    samples.iter().try_fold(0.0f64, |acc, &z| Ok(acc.max(deviation(z)?)))
}

/// Minimum quadrature order accepted for a Gram matrix up to `n_max`.
pub fn gram_min_order(family: &Family, n_max: u32) -> usize {
    2 * (n_max + family.codim()) as usize + 20
}

/// Weighted inner products of the family members of degree `m..=n_max`.
pub fn gram_matrix(family: &Family, n_max: u32, quad_order: usize) -> Result<GramReport> {
    let weight = family.weight()?;
    let m = family.codim();
    if n_max < m {
        return Err(Error::InvalidParameter(format!("n_max = {n_max} is below m = {m}")));
    }
    let need = gram_min_order(family, n_max);
    if quad_order < need {
        return Err(Error::QuadratureOrder { got: quad_order, need });
    }
    let rule = gauss_rule(weight.base, quad_order)?;
    let degrees: Vec<u32> = (m..=n_max).collect();
    let columns: Vec<Vec<f64>> = degrees
        .par_iter()
        .map(|&n| rule.nodes.iter().map(|&x| family.eval(n, x)).collect())
        .collect::<Result<_>>()?;
    let factor: Vec<f64> = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&x, &w)| if w == 0.0 { 0.0 } else { w * weight.rational_factor(x) })
        .collect();
    let size = degrees.len();
    let entries: Vec<Vec<f64>> = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    factor
                        .iter()
                        .zip(columns[a].iter().zip(&columns[b]))
                        .filter(|(f, _)| **f != 0.0)
                        .map(|(f, (x, y))| f * x * y)
                        .sum()
                })
                .collect()
        })
        .collect();
    let diag: Vec<f64> = (0..size).map(|i| entries[i][i]).collect();
    if let Some((i, d)) = diag.iter().enumerate().find(|(_, d)| !(**d > 0.0)) {
        return Err(Error::NoConvergence(format!("Gram diagonal entry for degree {} is {d}", degrees[i])));
    }
    let mut max_offdiag_ratio = 0.0f64;
    for a in 0..size {
        for b in 0..size {
            if a != b {
                max_offdiag_ratio = max_offdiag_ratio.max(entries[a][b].abs() / (diag[a] * diag[b]).sqrt());
            }
        }
    }
    Ok(GramReport { size, degrees, entries, diag, max_offdiag_ratio, quad_order })
}
