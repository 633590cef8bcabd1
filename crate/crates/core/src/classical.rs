//! Classical Laguerre and Jacobi polynomials.
//!
//! Pointwise evaluation runs the three-term recurrence in any [`Ring`], so the
//! same code yields values, complex values and derivative jets. Negative
//! degrees denote the zero polynomial.

use log::warn;

use crate::poly::Polynomial;
use crate::scalar::Ring;

const COEFF_WARN_DEGREE: i32 = 60;

/// `L_n^α(z)`
pub fn laguerre_eval<T: Ring>(alpha: f64, n: i32, z: T) -> T {
    if n < 0 {
        return T::zero();
    }
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = T::from_f64(1.0 + alpha) - z;
    for k in 1..n {
        let k = k as f64;
        let next = ((T::from_f64(2.0 * k + 1.0 + alpha) - z) * cur - prev * (k + alpha)) * (1.0 / (k + 1.0));
        prev = cur;
        cur = next;
    }
    cur
}

/// Monomial coefficients of `L_n^α`, exact degree `n` for every real `α`.
pub fn laguerre_coeffs(alpha: f64, n: i32) -> Polynomial {
    if n < 0 {
        return Polynomial::zero();
    }
    if n > COEFF_WARN_DEGREE {
        warn!("Laguerre coefficients of degree {n} lose accuracy in double precision");
    }
    let n_us = n as usize;
    let mut c = vec![0.0; n_us + 1];
    c[n_us] = if n % 2 == 0 { 1.0 } else { -1.0 } / crate::special::factorial(n as u32);
    for k in (1..=n_us).rev() {
        let kf = k as f64;
        c[k - 1] = c[k] * (-kf * (alpha + kf)) / (n_us - k + 1) as f64;
    }
    Polynomial::new(c)
}

/// Coefficients `d_k` of `P_n^{(a,b)} = ∑ d_k ((z-1)/2)^k`, valid for all
/// parameters including the degenerate ones.
fn jacobi_shifted(a: f64, b: f64, n: usize) -> Vec<f64> {
    let mut d = Vec::with_capacity(n + 1);
    // d_0 = (a+1)_n / n!
    let mut dk = (0..n).fold(1.0, |acc, i| acc * (a + 1.0 + i as f64) / (i + 1) as f64);
    d.push(dk);
    for k in 0..n {
        let kf = k as f64;
        let top = a + kf + 1.0;
        if top != 0.0 {
            dk *= (a + b + n as f64 + 1.0 + kf) * (n - k) as f64 / ((kf + 1.0) * top);
        } else {
            dk = direct_shifted(a, b, n, k + 1);
        }
        d.push(dk);
    }
    d
}

fn direct_shifted(a: f64, b: f64, n: usize, k: usize) -> f64 {
    let mut v = 1.0;
    for i in 0..n - k {
        v *= (a + k as f64 + 1.0 + i as f64) / (i + 1) as f64;
    }
    for i in 0..k {
        v *= (a + b + n as f64 + 1.0 + i as f64) / (i + 1) as f64;
    }
    v
}

fn jacobi_explicit<T: Ring>(a: f64, b: f64, n: usize, z: T) -> T {
    let t = (z - T::one()) * 0.5;
    jacobi_shifted(a, b, n).iter().rev().fold(T::zero(), |acc, &c| acc * t + T::from_f64(c))
}

fn recurrence_safe(a: f64, b: f64, n: i32) -> bool {
    (2..=n).all(|k| {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        (k + a + b).abs() > 1e-9 && (s - 2.0).abs() > 1e-9
    })
}

/// `P_n^{(a,b)}(z)`
pub fn jacobi_eval<T: Ring>(a: f64, b: f64, n: i32, z: T) -> T {
    if n < 0 {
        return T::zero();
    }
    if n == 0 {
        return T::one();
    }
    if !recurrence_safe(a, b, n) {
        return jacobi_explicit(a, b, n as usize, z);
    }
    let mut prev = T::one();
    let mut cur = (z - T::one()) * (0.5 * (a + b + 2.0)) + T::from_f64(a + 1.0);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let den = 2.0 * k * (k + a + b) * (s - 2.0);
        let lin = (s - 1.0) * (s * (s - 2.0));
        let cst = (s - 1.0) * (a * a - b * b);
        let back = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = ((z * lin + T::from_f64(cst)) * cur - prev * back) * (1.0 / den);
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficient form of a classical Jacobi polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiPoly {
    pub poly: Polynomial,
    /// Nominal degree `n`; differs from `poly.degree()` in the degenerate cases.
    pub nominal_degree: usize,
}

impl JacobiPoly {
    pub fn is_degenerate(&self) -> bool {
        (self.poly.is_zero() && self.nominal_degree > 0) || self.poly.degree() < self.nominal_degree
    }
}

fn jacobi_recurrence_coeffs(a: f64, b: f64, n: i32) -> Polynomial {
    let mut prev = Polynomial::constant(1.0);
    let mut cur = Polynomial::new(vec![0.5 * (a - b), 0.5 * (a + b + 2.0)]);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let den = 2.0 * k * (k + a + b) * (s - 2.0);
        let lin = (s - 1.0) * (s * (s - 2.0));
        let cst = (s - 1.0) * (a * a - b * b);
        let factor = Polynomial::new(vec![cst / den, lin / den]);
        let next = &(&factor * &cur) - &prev.scale(2.0 * (k + a - 1.0) * (k + b - 1.0) * s / den);
        prev = cur;
        cur = next;
    }
    if n == 0 {
        prev
    } else {
        cur
    }
}

/// Monomial coefficients of `P_n^{(a,b)}`.
pub fn jacobi_coeffs(a: f64, b: f64, n: i32) -> JacobiPoly {
    if n < 0 {
        return JacobiPoly { poly: Polynomial::zero(), nominal_degree: 0 };
    }
    if n > COEFF_WARN_DEGREE {
        warn!("Jacobi coefficients of degree {n} lose accuracy in double precision");
    }
    let poly = if recurrence_safe(a, b, n) {
        jacobi_recurrence_coeffs(a, b, n)
    } else {
        let t = Polynomial::new(vec![-0.5, 0.5]);
        jacobi_shifted(a, b, n as usize)
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, &c| &(&acc * &t) + &Polynomial::constant(c))
    };
    JacobiPoly { poly, nominal_degree: n as usize }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::chebyshev_points;
    use crate::scalar::Jet;
    use crate::special::binomial;
    use num_complex::Complex64;
    use proptest::prelude::*;

    #[test]
    fn laguerre_small_cases() {
        assert_eq!(laguerre_eval(0.0, 0, 7.3), 1.0);
        assert_eq!(laguerre_eval(0.0, 2, 0.0), 1.0);
        assert_eq!(laguerre_eval(1.0, 1, 2.0), 0.0);
        assert_eq!(laguerre_eval(1.0, -1, 2.0), 0.0);
        assert_eq!(laguerre_coeffs(1.0, 1).coeffs(), &[2.0, -1.0]);
        assert_eq!(laguerre_coeffs(0.0, 0).coeffs(), &[1.0]);
        assert_eq!(laguerre_coeffs(0.0, 2).coeffs(), &[1.0, -2.0, 0.5]);
    }

    #[test]
    fn laguerre_negative_integer_order_keeps_degree() {
        // L_3^{-2} = z^2 (z - 3) / (-6) up to normalization, degree 3
        let p = laguerre_coeffs(-2.0, 3);
        assert_eq!(p.degree(), 3);
        assert_eq!(p.coeffs()[0], 0.0);
        assert_eq!(p.coeffs()[1], 0.0);
        assert!((p.eval(1.7) - laguerre_eval(-2.0, 3, 1.7)).abs() < 1e-14);
    }

    #[test]
    fn jacobi_endpoint_examples() {
        assert_eq!(jacobi_eval(2.0, 1.0, 0, 0.3), 1.0);
        assert!((jacobi_eval(2.0, 1.0, 2, 1.0) - 6.0).abs() < 1e-14);
        assert!((jacobi_eval(2.0, 1.0, 2, -1.0) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn legendre_two() {
        let p = jacobi_coeffs(0.0, 0.0, 2);
        assert!(!p.is_degenerate());
        let c = p.poly.coeffs();
        assert!((c[0] + 0.5).abs() < 1e-15 && c[1].abs() < 1e-15 && (c[2] - 1.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_jacobi_drops_degree() {
        // a+b = -1-m-n with m=1, n=3: P_3 is a multiple of P_1
        let (a, b) = (0.5, -5.5);
        let p3 = jacobi_coeffs(a, b, 3);
        assert!(p3.is_degenerate());
        assert_eq!(p3.poly.degree(), 1);
        for z in [-0.7, 0.1, 0.9] {
            let lhs = binomial(a + 1.0, 1) * jacobi_eval(a, b, 3, z);
            let rhs = binomial(a + 3.0, 3) * jacobi_eval(a, b, 1, z);
            assert!((lhs - rhs).abs() < 1e-12 * rhs.abs().max(1.0));
            assert!((p3.poly.eval(z) - jacobi_eval(a, b, 3, z)).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_identity_small_integer_cases() {
        for (a, m, n) in [(1.0, 1, 2), (2.0, 0, 3), (0.0, 2, 3), (3.0, 1, 4)] {
            let b = -1.0 - a - (m + n) as f64;
            for z in chebyshev_points(7, -1.0, 1.0) {
                let lhs = binomial(a + m as f64, m) * jacobi_eval(a, b, n, z);
                let rhs = binomial(a + n as f64, n) * jacobi_eval(a, b, m, z);
                assert!((lhs - rhs).abs() < 1e-10 * (1.0 + rhs.abs()), "{a} {m} {n} {z}");
            }
        }
    }

    #[test]
    fn jets_match_differentiated_coefficients() {
        let p = laguerre_coeffs(2.5, 7);
        let d = p.derivative();
        let j = laguerre_eval(2.5, 7, Jet::var(1.3));
        assert!((j.d1 - d.eval(1.3)).abs() < 1e-12);
        assert!((j.d2 - d.derivative().eval(1.3)).abs() < 1e-12);
    }

    #[test]
    fn complex_evaluation_agrees() {
        let z = Complex64::new(0.3, -0.4);
        let p = jacobi_coeffs(1.5, 0.5, 6).poly;
        assert!((p.eval(z) - jacobi_eval(1.5, 0.5, 6, z)).norm() < 1e-13);
    }

    #[test]
    fn classical_heine_mehler_improves_with_n() {
        use crate::special::bessel_j_reduced;
        let a = 1.5;
        let sup = |n: i32| {
            (0..=400)
                .map(|i| {
                    let z = 40.0 * i as f64 / 400.0;
                    let nf = n as f64;
                    let lhs = nf.powf(-a) * laguerre_eval(a, n, z / nf);
                    let rhs = bessel_j_reduced(a, 2.0 * z.sqrt()).unwrap();
                    (lhs - rhs).abs()
                })
                .fold(0.0, f64::max)
        };
        let (e20, e40, e80) = (sup(20), sup(40), sup(80));
        assert!(e20 > e40 && e40 > e80, "{e20} {e40} {e80}");
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    proptest! {
        #[test]
        fn laguerre_coeffs_match_recurrence(alpha in -0.9f64..20.0, n in 0i32..=30, z in -10.0f64..50.0) {
            let p = laguerre_coeffs(alpha, n);
            prop_assert_eq!(p.degree(), n as usize);
            let scale = p.coeffs().iter().enumerate().map(|(k, c)| c.abs() * z.abs().powi(k as i32)).sum::<f64>();
            let v = laguerre_eval(alpha, n, z);
            prop_assert!((p.eval(z) - v).abs() <= 1e-9 * scale.max(v.abs()), "{} vs {}", p.eval(z), v);
        }

        #[test]
        fn jacobi_coeffs_match_recurrence(a in -0.9f64..6.0, b in -0.9f64..6.0, n in 0i32..=30, z in -1.0f64..1.0) {
            let p = jacobi_coeffs(a, b, n).poly;
            prop_assert_eq!(p.degree(), n as usize);
            let scale = p.coeffs().iter().enumerate().map(|(k, c)| c.abs() * z.abs().powi(k as i32)).sum::<f64>();
            let v = jacobi_eval(a, b, n, z);
            prop_assert!((p.eval(z) - v).abs() <= 1e-9 * scale.max(v.abs()), "{} vs {}", p.eval(z), v);
        }

        #[test]
        fn jacobi_coeffs_low_degree_absolute(a in -0.9f64..6.0, b in -0.9f64..6.0, n in 0i32..=15, z in -1.0f64..1.0) {
            let p = jacobi_coeffs(a, b, n).poly;
            let v = jacobi_eval(a, b, n, z);
            let scale = (0..=40).map(|i| jacobi_eval(a, b, n, -1.0 + 0.05 * i as f64).abs()).fold(1e-300, f64::max);
            prop_assert!((p.eval(z) - v).abs() <= 1e-9 * scale);
        }

        #[test]
        fn laguerre_value_at_origin(alpha in -0.9f64..20.0, n in 0i32..=25) {
            prop_assert!(rel_close(laguerre_eval(alpha, n, 0.0), binomial(n as f64 + alpha, n), 1e-12));
        }

        #[test]
        fn jacobi_endpoint_values(a in -0.9f64..8.0, b in -0.9f64..8.0, n in 0i32..=25) {
            let plus = binomial(n as f64 + a, n);
            let minus = if n % 2 == 0 { 1.0 } else { -1.0 } * binomial(n as f64 + b, n);
            prop_assert!(rel_close(jacobi_eval(a, b, n, 1.0), plus, 1e-12));
            prop_assert!(rel_close(jacobi_eval(a, b, n, -1.0), minus, 1e-12));
        }

        #[test]
        fn jacobi_helper_identity(a in -0.5f64..5.0, b in -0.5f64..5.0, j in 0i32..=15, z in -1.0f64..1.0) {
            // (z-1) P_j' = (a+j) P_j^{(a-1,b+1)} - a P_j
            let lhs = (z - 1.0) * jacobi_eval(a, b, j, Jet::var(z)).d1;
            let rhs = (a + j as f64) * jacobi_eval(a - 1.0, b + 1.0, j, z) - a * jacobi_eval(a, b, j, z);
            let scale = (a * jacobi_eval(a, b, j, z)).abs() + ((a + j as f64) * jacobi_eval(a - 1.0, b + 1.0, j, z)).abs();
            prop_assert!((lhs - rhs).abs() <= 1e-9 * scale.max(1.0));
        }
    }
}
