//! Root finding and classification.

pub mod sturm;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::Sign;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::poly::Polynomial;
use crate::quadrature::{gauss_rule, BaseWeight};
use crate::scalar::Jet;
use sturm::{Point, SturmSequence};

/// Highest degree handed to coefficient-based root finding.
pub const DEGREE_CAP: usize = 60;
/// Roots closer than this to a finite endpoint are not classified.
pub const BOUNDARY_BUFFER: f64 = 1e-10;

const MAX_ABERTH_ITER: usize = 600;
const MAX_NEWTON_ITER: usize = 50;
const RESIDUAL_TOL: f64 = 1e-8;

/// Classified roots of one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    /// Ascending, inside the open interval.
    pub regular: Vec<f64>,
    /// Ascending, outside the closed interval.
    pub exceptional_real: Vec<f64>,
    /// One representative per conjugate pair, `im > 0`.
    pub exceptional_complex: Vec<Complex64>,
    pub interval: (f64, f64),
}

impl ZeroSet {
    pub fn degree(&self) -> usize {
        self.regular.len() + self.exceptional_real.len() + 2 * self.exceptional_complex.len()
    }

    pub fn exceptional_count(&self) -> usize {
        self.exceptional_real.len() + 2 * self.exceptional_complex.len()
    }

    /// Every exceptional root, conjugates included.
    pub fn exceptional(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = self.exceptional_real.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        for z in &self.exceptional_complex {
            out.push(*z);
            out.push(z.conj());
        }
        out
    }

    /// Every root, conjugates included.
    pub fn all(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = self.regular.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        out.extend(self.exceptional());
        out
    }

    /// Real roots below the interval, ascending.
    pub fn negative(&self) -> Vec<f64> {
        self.exceptional_real.iter().copied().filter(|&x| x < self.interval.0).collect()
    }

    /// Smallest pairwise distance relative to `max(1, max |root|)`.
    pub fn min_separation(&self) -> f64 {
        min_separation(&self.all())
    }
}

pub fn min_separation(roots: &[Complex64]) -> f64 {
    let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let mut best = f64::INFINITY;
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            best = best.min((a - b).norm());
        }
    }
    best / scale
}

/// `(p(z), p'(z), sum |c_k| |z|^k)`
fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let r = z.norm();
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut s = 0.0;
    for &ck in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
        s = s * r + ck.abs();
    }
    (p, dp, s)
}

fn horner_real(c: &[f64], x: f64) -> (f64, f64, f64) {
    let r = x.abs();
    let (mut p, mut dp, mut s) = (0.0, 0.0, 0.0);
    for &ck in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + ck;
        s = s * r + ck.abs();
    }
    (p, dp, s)
}

fn cauchy_bound(p: &Polynomial) -> f64 {
    let c = p.coeffs();
    let lead = p.leading().abs();
    1.0 + c[..c.len() - 1].iter().map(|x| x.abs() / lead).fold(0.0, f64::max)
}

fn polish_complex(c: &[f64], mut z: Complex64) -> Complex64 {
    let (mut p, _, _) = horner(c, z);
    for _ in 0..MAX_NEWTON_ITER {
        let (_, dp, _) = horner(c, z);
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let mut step = p / dp;
        let mut improved = false;
        for _ in 0..8 {
            let trial = z - step;
            let (pt, _, _) = horner(c, trial);
            if pt.norm() < p.norm() {
                z = trial;
                p = pt;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved || step.norm() <= f64::EPSILON * z.norm() {
            break;
        }
    }
    z
}

/// All complex roots by Aberth-Ehrlich iteration, Newton-polished.
pub fn all_roots(p: &Polynomial) -> Result<Vec<Complex64>> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    let n = p.degree();
    if n > DEGREE_CAP {
        return Err(Error::DegreeCap { degree: n, cap: DEGREE_CAP });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let c = p.coeffs();
    let lead = c[n];
    let center = -c[n - 1] / (n as f64 * lead);
    let shifted_radius =
        (0..n).map(|k| (c[k] / lead).abs().powf(1.0 / (n - k) as f64)).fold(0.0, f64::max).max(1e-3);
    let radius = shifted_radius.max(center.abs()) * 1.1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            center + Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    let mut iters = 0;
    while done.iter().any(|d| !d) {
        if iters == MAX_ABERTH_ITER {
            let left = done.iter().filter(|d| !**d).count();
            return Err(Error::NoConvergence(format!(
                "Aberth iteration on a degree-{n} polynomial: {left} roots unconverged after {MAX_ABERTH_ITER} sweeps"
            )));
        }
        iters += 1;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (pv, dpv, s) = horner(c, z[k]);
            if pv.norm() <= 4.0 * f64::EPSILON * s {
                done[k] = true;
                continue;
            }
            let ratio = pv / dpv;
            let sum: Complex64 = (0..n).filter(|&l| l != k).map(|l| (z[k] - z[l]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                z[k] += Complex64::new(1e-3 * radius, 1e-3 * radius);
                continue;
            }
            z[k] -= w;
            if w.norm() <= 4.0 * f64::EPSILON * z[k].norm() {
                done[k] = true;
            }
        }
    }
    let mut roots = Vec::with_capacity(n);
    for zk in z {
        let zk = polish_complex(c, zk);
        let (pv, _, s) = horner(c, zk);
        if pv.norm() > RESIDUAL_TOL * s {
            return Err(Error::NoConvergence(format!(
                "root {zk} keeps relative residual {:.3e}",
                pv.norm() / s
            )));
        }
        roots.push(zk);
    }
    log::debug!("aberth: degree {n}, {iters} sweeps");
    Ok(roots)
}

fn point(x: f64) -> Point {
    if x == f64::INFINITY {
        Point::PosInf
    } else if x == f64::NEG_INFINITY {
        Point::NegInf
    } else {
        Point::At(x)
    }
}

/// Refines the unique root in `(a, b)` starting from `x0`.
fn refine(c: &[f64], a: f64, b: f64, x0: f64) -> f64 {
    let (fa, _, _) = horner_real(c, a);
    let (fb, _, _) = horner_real(c, b);
    let bracketed = a.is_finite() && b.is_finite() && fa * fb < 0.0;
    let mut x = x0.clamp(a, b);
    let (mut lo, mut hi) = (a, b);
    let mut f_lo = fa;
    for _ in 0..MAX_NEWTON_ITER + 200 {
        let (f, df, s) = horner_real(c, x);
        if f.abs() <= 1e-12 * s * f64::EPSILON || f == 0.0 {
            return x;
        }
        if bracketed {
            if (f < 0.0) == (f_lo < 0.0) {
                lo = x;
                f_lo = f;
            } else {
                hi = x;
            }
            if hi - lo <= 2.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
                return x;
            }
        }
        let newton = x - f / df;
        let next = if bracketed && !(newton > lo && newton < hi) || !newton.is_finite() {
            if bracketed {
                0.5 * (lo + hi)
            } else {
                break;
            }
        } else {
            newton
        };
        if next == x {
            return x;
        }
        if !bracketed {
            let (fn_, _, _) = horner_real(c, next);
            if fn_.abs() >= f.abs() {
                let half = 0.5 * (x + next);
                let (fh, _, _) = horner_real(c, half);
                if fh.abs() >= f.abs() {
                    break;
                }
                x = half;
                continue;
            }
        }
        x = next;
    }
    x
}

/// Exact Sturm bisection isolating every root in `(lo, hi)`.
fn isolate(sturm: &SturmSequence, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let k = sturm.count_open(Point::At(a), Point::At(b));
        if k == 0 {
            continue;
        }
        let mid = 0.5 * (a + b);
        if k == 1 || mid <= a || mid >= b {
            out.push((a, b));
            continue;
        }
        if sturm.sign(mid) == Sign::NoSign {
            out.push((mid, mid));
        }
        stack.push((a, mid));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

fn realness(z: &Complex64) -> f64 {
    z.im.abs() / z.norm().max(1.0)
}

/// Certified real roots in `(lo, hi)`, using `roots` as starting guesses.
fn real_roots_with(
    p: &Polynomial,
    sturm: &SturmSequence,
    roots: &[Complex64],
    lo: f64,
    hi: f64,
) -> Result<Vec<f64>> {
    let c = p.coeffs();
    let expected = sturm.count_open(point(lo), point(hi));
    let total = sturm.total();
    let mut by_realness: Vec<Complex64> = roots.to_vec();
    by_realness.sort_by(|a, b| realness(a).total_cmp(&realness(b)));
    let mut guesses: Vec<f64> = by_realness.iter().take(total).map(|z| z.re).collect();
    guesses.sort_by(f64::total_cmp);

    let mut brackets = Vec::new();
    for (i, &g) in guesses.iter().enumerate() {
        if !(g > lo && g < hi) {
            continue;
        }
        let a = if i == 0 { lo } else { 0.5 * (guesses[i - 1] + g) }.max(lo);
        let b = if i + 1 == guesses.len() { hi } else { 0.5 * (g + guesses[i + 1]) }.min(hi);
        brackets.push((a, b, g));
    }
    let certified = brackets.len() == expected
        && brackets.iter().all(|&(a, b, _)| sturm.count_open(point(a), point(b)) == 1);
    let located: Vec<f64> = if certified {
        brackets.iter().map(|&(a, b, g)| refine(c, a, b, g)).collect()
    } else {
        log::debug!("real_roots: guesses not certified, isolating by bisection");
        let bound = cauchy_bound(p);
        let (a, b) = (lo.max(-bound), hi.min(bound));
        isolate(sturm, a, b)
            .into_iter()
            .map(|(a, b)| if a == b { a } else { refine(c, a, b, 0.5 * (a + b)) })
            .collect()
    };
    if located.len() != expected {
        return Err(Error::RootCertification {
            region: format!("({lo}, {hi})"),
            expected,
            found: located.len(),
        });
    }
    Ok(located)
}

/// Certified real roots of `p` in the open interval `(lo, hi)`, ascending.
pub fn real_roots(p: &Polynomial, lo: f64, hi: f64) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let roots = all_roots(p)?;
    let sturm = SturmSequence::new(p);
    real_roots_with(p, &sturm, &roots, lo, hi)
}

/// Splits `roots` of `p` into regular and exceptional zeros for `interval`.
pub fn classify(interval: (f64, f64), p: &Polynomial, roots: &[Complex64]) -> Result<ZeroSet> {
    let (lo, hi) = interval;
    let n = p.degree();
    if roots.len() != n {
        return Err(Error::InvalidParameter(format!(
            "{} roots supplied for a degree-{n} polynomial",
            roots.len()
        )));
    }
    let sturm = SturmSequence::new(p);
    let total = sturm.total();
    let reals = if n == 0 {
        Vec::new()
    } else {
        real_roots_with(p, &sturm, roots, f64::NEG_INFINITY, f64::INFINITY)?
    };
    if reals.len() != total {
        return Err(Error::RootCertification {
            region: "the real line".into(),
            expected: total,
            found: reals.len(),
        });
    }

    let mut by_realness: Vec<Complex64> = roots.to_vec();
    by_realness.sort_by(|a, b| realness(a).total_cmp(&realness(b)));
    let nonreal = &by_realness[total..];
    let upper: Vec<Complex64> = nonreal.iter().filter(|z| z.im > 0.0).copied().collect();
    let lower: Vec<Complex64> = nonreal.iter().filter(|z| z.im <= 0.0).copied().collect();
    if upper.len() != lower.len() {
        return Err(Error::NoConvergence(format!(
            "non-real roots do not pair up: {} above and {} below the axis",
            upper.len(),
            lower.len()
        )));
    }
    let mut complex: Vec<Complex64> = upper
        .into_iter()
        .map(|z| {
            let partner = lower
                .iter()
                .min_by(|a, b| (z - a.conj()).norm().total_cmp(&(z - b.conj()).norm()))
                .expect("paired");
            let mid = 0.5 * (z + partner.conj());
            polish_complex(p.coeffs(), mid)
        })
        .collect();
    complex.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let mut regular = Vec::new();
    let mut exceptional_real = Vec::new();
    for x in reals {
        for endpoint in [lo, hi] {
            if endpoint.is_finite() && (x - endpoint).abs() <= BOUNDARY_BUFFER {
                return Err(Error::BoundaryAmbiguity { root: x, endpoint, buffer: BOUNDARY_BUFFER });
            }
        }
        if x > lo && x < hi {
            regular.push(x);
        } else {
            exceptional_real.push(x);
        }
    }
    let inside = sturm.count_open(point(lo), point(hi));
    if inside != regular.len() {
        return Err(Error::RootCertification {
            region: format!("({lo}, {hi})"),
            expected: inside,
            found: regular.len(),
        });
    }
    Ok(ZeroSet { regular, exceptional_real, exceptional_complex: complex, interval })
}

/// Damped Newton on a value/derivative oracle.
fn newton_polish<T, F>(f: F, x0: T) -> T
where
    T: Copy + std::ops::Sub<Output = T> + std::ops::Div<Output = T> + std::ops::Mul<f64, Output = T>,
    F: Fn(T) -> Option<(T, T, f64)>,
{
    let norm_of = |x: T| f(x).map(|(_, _, n)| n).filter(|n| n.is_finite());
    let Some(mut best) = norm_of(x0) else {
        return x0;
    };
    let mut x = x0;
    for _ in 0..MAX_NEWTON_ITER {
        let Some((v, d, _)) = f(x) else { break };
        let mut step = v / d;
        let mut improved = false;
        for _ in 0..8 {
            let trial = x - step;
            if let Some(nt) = norm_of(trial) {
                if nt < best {
                    x = trial;
                    best = nt;
                    improved = true;
                    break;
                }
            }
            step = step * 0.5;
        }
        if !improved || best == 0.0 {
            break;
        }
    }
    x
}

/// Re-polishes every root against the recurrence-based evaluator, which is
/// better conditioned than the monomial coefficients. Roots only move by
/// small relative amounts; their classification is kept.
fn polish_with_family(zs: &mut ZeroSet, family: &Family, n: u32) {
    let all = zs.all();
    // a polished root may not travel further than half way to its nearest neighbour
    let reach = |z: Complex64| {
        let gap = all.iter().map(|w| (w - z).norm()).filter(|&d| d > 0.0).fold(f64::INFINITY, f64::min);
        (0.5 * gap).min(1e-2 * z.norm().max(1.0))
    };
    let real =
        |x: f64| family.eval(n, Jet::var(x)).ok().filter(|j| j.d1 != 0.0).map(|j| (j.v, j.d1, j.v.abs()));
    for x in zs.regular.iter_mut().chain(zs.exceptional_real.iter_mut()) {
        let y = newton_polish(real, *x);
        if (y - *x).abs() < reach(Complex64::new(*x, 0.0)) {
            *x = y;
        }
    }
    let complex = |z: Complex64| {
        family.eval(n, Jet::var(z)).ok().filter(|j| j.d1.norm() != 0.0).map(|j| (j.v, j.d1, j.v.norm()))
    };
    for z in zs.exceptional_complex.iter_mut() {
        let w = newton_polish(complex, *z);
        if (w - *z).norm() < reach(*z) && w.im > 0.0 {
            *z = w;
        }
    }
    zs.regular.sort_by(f64::total_cmp);
    zs.exceptional_real.sort_by(f64::total_cmp);
}

/// Classified zeros of the degree-`n` member of `family`.
pub fn family_zero_set(family: &Family, n: u32) -> Result<ZeroSet> {
    let p = family.poly(n)?;
    let roots = all_roots(&p)?;
    let mut zs = classify(family.interval(), &p, &roots)?;
    polish_with_family(&mut zs, family, n);
    Ok(zs)
}

/// Sign changes of `f` on a uniform grid of `points` nodes over `[lo, hi]`,
/// each refined by bisection. Used beyond the coefficient degree cap.
pub fn scan_sign_changes<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let h = (hi - lo) / (points.max(2) - 1) as f64;
    let mut out = Vec::new();
    let mut a = lo;
    let mut fa = f(a);
    for k in 1..points.max(2) {
        let b = lo + k as f64 * h;
        let fb = f(b);
        if fa == 0.0 {
            out.push(a);
        } else if fa * fb < 0.0 {
            let (mut x0, mut x1, mut f0) = (a, b, fa);
            loop {
                let mid = 0.5 * (x0 + x1);
                if mid <= x0 || mid >= x1 {
                    break;
                }
                let fm = f(mid);
                if fm == 0.0 {
                    x0 = mid;
                    x1 = mid;
                    break;
                }
                if (fm < 0.0) == (f0 < 0.0) {
                    x0 = mid;
                    f0 = fm;
                } else {
                    x1 = mid;
                }
            }
            out.push(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    out
}

/// Outcome of an interlacing check.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct InterlacingReport {
    pub interlaces: bool,
    pub violations: Vec<String>,
}

impl InterlacingReport {
    fn from_violations(violations: Vec<String>) -> Self {
        InterlacingReport { interlaces: violations.is_empty(), violations }
    }

    fn merge(mut self, other: InterlacingReport) -> Self {
        self.violations.extend(other.violations);
        self.interlaces = self.violations.is_empty();
        self
    }
}

impl fmt::Display for InterlacingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.interlaces {
            write!(f, "interlaces")
        } else {
            write!(f, "{} violations: {}", self.violations.len(), self.violations.join("; "))
        }
    }
}

/// Strict alternation of two ascending sequences.
pub fn interlacing_report(a: &[f64], b: &[f64]) -> InterlacingReport {
    let mut violations = Vec::new();
    if a.len().abs_diff(b.len()) > 1 {
        violations.push(format!("sizes {} and {} differ by more than one", a.len(), b.len()));
    }
    let mut merged: Vec<(f64, char, usize)> = a
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, 'a', i))
        .chain(b.iter().enumerate().map(|(i, &x)| (x, 'b', i)))
        .collect();
    merged.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(Ordering::Equal));
    for w in merged.windows(2) {
        let ((x, s, i), (y, t, k)) = (w[0], w[1]);
        if s == t {
            violations.push(format!("{s}[{i}] = {x} and {t}[{k}] = {y} are adjacent"));
        } else if x == y {
            violations.push(format!("{s}[{i}] and {t}[{k}] coincide at {x}"));
        }
    }
    InterlacingReport::from_violations(violations)
}

fn check_window(violations: &mut Vec<String>, label: &str, x: f64, lo: f64, hi: f64) {
    if !(x > lo && x < hi) {
        violations.push(format!("{label} = {x} outside ({lo}, {hi})"));
    }
}

fn laguerre_zeros(alpha: f64, n: u32) -> Result<Vec<f64>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(gauss_rule(BaseWeight::Laguerre { alpha }, n as usize)?.nodes)
}

/// Full zero pattern of a type I polynomial of degree `m + j`: positive zeros
/// between consecutive zeros of `L_j` and `L_{j-1}`, the first one left of the
/// smallest zero of `L_j`, and negative zeros between those of `xi_{m-1}` and
/// `xi_m`. For `j = 0` the polynomial is `xi_m` and its zeros are matched
/// exactly.
pub fn type_i_pattern(alpha: f64, m: u32, j: u32, zeros: &ZeroSet) -> Result<InterlacingReport> {
    let mut violations = Vec::new();
    if zeros.regular.len() != j as usize {
        violations.push(format!("{} positive zeros, expected {j}", zeros.regular.len()));
    }
    let neg = zeros.negative();
    if neg.len() != m as usize || !zeros.exceptional_complex.is_empty() {
        violations.push(format!(
            "{} negative real and {} complex zeros, expected {m} negative",
            neg.len(),
            2 * zeros.exceptional_complex.len()
        ));
    }
    if !violations.is_empty() {
        return Ok(InterlacingReport::from_violations(violations));
    }
    let zj = laguerre_zeros(alpha, j)?;
    let zj1 = laguerre_zeros(alpha, j.saturating_sub(1))?;
    for (i, &x) in zeros.regular.iter().enumerate() {
        let lo = if i == 0 { 0.0 } else { zj1[i - 1] };
        check_window(&mut violations, &format!("x[{}]", i + 1), x, lo, zj[i]);
    }
    let zm = laguerre_zeros(alpha, m)?;
    if j == 0 {
        // X is xi_m itself
        for (i, &w) in neg.iter().rev().enumerate() {
            if (w + zm[i]).abs() > 1e-10 * zm[i] {
                violations.push(format!("w[{}] = {w} differs from {}", i + 1, -zm[i]));
            }
        }
        return Ok(InterlacingReport::from_violations(violations));
    }
    let zm1 = laguerre_zeros(alpha, m.saturating_sub(1))?;
    for (i, &w) in neg.iter().rev().enumerate() {
        let hi = if i == 0 { 0.0 } else { -zm1[i - 1] };
        check_window(&mut violations, &format!("w[{}]", i + 1), w, -zm[i], hi);
    }
    Ok(InterlacingReport::from_violations(violations))
}

/// Interlacing of the regular zeros of consecutive degrees.
pub fn consecutive_report(lower: &ZeroSet, upper: &ZeroSet) -> InterlacingReport {
    let mut report = interlacing_report(&upper.regular, &lower.regular);
    if upper.regular.len() != lower.regular.len() + 1 {
        report = report.merge(InterlacingReport::from_violations(vec![format!(
            "regular counts {} and {} are not consecutive",
            lower.regular.len(),
            upper.regular.len()
        )]));
    }
    report
}
