//! Scalar abstraction shared by every pointwise evaluator.
//!
//! All classical and exceptional evaluators are written once against [`Ring`]
//! and instantiated with `f64`, `Complex64`, or [`Jet`] (value plus first and
//! second derivative). Running a recurrence on `Jet::var(z)` yields exact
//! derivatives of the polynomial it evaluates, which is how the operator
//! identities are checked without ever expanding coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Commutative ring with a real embedding.
pub trait Ring:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
{
    fn from_f64(c: f64) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

impl Ring for f64 {
    #[inline]
    fn from_f64(c: f64) -> Self {
        c
    }
}

impl Ring for Complex64 {
    #[inline]
    fn from_f64(c: f64) -> Self {
        Complex64::new(c, 0.0)
    }
}

/// Truncated Taylor jet `(f, f', f'')` at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T> {
    pub v: T,
    pub d1: T,
    pub d2: T,
}

impl<T: Ring> Jet<T> {
    /// The independent variable evaluated at `z`.
    pub fn var(z: T) -> Self {
        Jet { v: z, d1: T::one(), d2: T::zero() }
    }

    pub fn constant(c: T) -> Self {
        Jet { v: c, d1: T::zero(), d2: T::zero() }
    }
}

impl<T: Ring> Add for Jet<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Jet { v: self.v + o.v, d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }
}

impl<T: Ring> Sub for Jet<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Jet { v: self.v - o.v, d1: self.d1 - o.d1, d2: self.d2 - o.d2 }
    }
}

impl<T: Ring> Mul for Jet<T> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Jet {
            v: self.v * o.v,
            d1: self.d1 * o.v + self.v * o.d1,
            d2: self.d2 * o.v + self.d1 * o.d1 * 2.0 + self.v * o.d2,
        }
    }
}

impl<T: Ring> Mul<f64> for Jet<T> {
    type Output = Self;
    #[inline]
    fn mul(self, c: f64) -> Self {
        Jet { v: self.v * c, d1: self.d1 * c, d2: self.d2 * c }
    }
}

impl<T: Ring> Neg for Jet<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Jet { v: -self.v, d1: -self.d1, d2: -self.d2 }
    }
}

impl<T: Ring> Ring for Jet<T> {
    fn from_f64(c: f64) -> Self {
        Jet::constant(T::from_f64(c))
    }
}

/// Evaluates `f` together with its first two derivatives at `z`.
pub fn jet_of<F>(f: F, z: f64) -> Jet<f64>
where
    F: FnOnce(Jet<f64>) -> Jet<f64>,
{
    f(Jet::var(z))
}

/// Value and first derivative at a complex point, as consumed by Newton and
/// Aberth iterations.
pub fn value_and_slope<F>(f: F, z: Complex64) -> (Complex64, Complex64)
where
    F: FnOnce(Jet<Complex64>) -> Jet<Complex64>,
{
    let j = f(Jet::var(z));
    (j.v, j.d1)
}
