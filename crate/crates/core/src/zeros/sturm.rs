//! Exact Sturm sequences.
//!
//! The double-precision coefficients are converted exactly to a common
//! dyadic scale, so the sequence is built over the integers with primitive
//! pseudo-remainders and every sign evaluation is exact. Root counts are
//! therefore certified for the stored polynomial.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Float, One, Signed, Zero};

use crate::poly::Polynomial;

/// Evaluation point for sign-variation counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    NegInf,
    At(f64),
    PosInf,
}

type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn primitive(mut p: IntPoly) -> IntPoly {
    trim(&mut p);
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c /= &g;
        }
    }
    p
}

/// `(m, e)` with `x = m 2^e` exactly.
fn dyadic(x: f64) -> (BigInt, i32) {
    let (mant, exp, sign) = Float::integer_decode(x);
    let m = BigInt::from(mant) * sign;
    (m, exp as i32)
}

fn to_integer(p: &Polynomial) -> IntPoly {
    let parts: Vec<(BigInt, i32)> = p.coeffs().iter().map(|&c| dyadic(c)).collect();
    let min_exp = parts.iter().filter(|(m, _)| !m.is_zero()).map(|&(_, e)| e).min().unwrap_or(0);
    primitive(
        parts.into_iter().map(|(m, e)| if m.is_zero() { m } else { m << (e - min_exp) as usize }).collect(),
    )
}

fn derivative(p: &IntPoly) -> IntPoly {
    primitive(p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
}

/// Negated remainder of `a / b`, up to a positive factor.
fn neg_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    let mut steps = 0u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let t = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + dr - db] -= &t * bc;
        }
        trim(&mut r);
        steps += 1;
    }
    let factor_negative = lc.is_negative() && steps % 2 == 1;
    if !factor_negative {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    primitive(r)
}

fn sign_at(p: &IntPoly, x: Point) -> Sign {
    let d = p.len() - 1;
    match x {
        Point::PosInf => p[d].sign(),
        Point::NegInf => {
            if d.is_multiple_of(2) {
                p[d].sign()
            } else {
                -p[d].sign()
            }
        }
        Point::At(v) => {
            if v == 0.0 {
                return p[0].sign();
            }
            let (m, e) = dyadic(v);
            if e >= 0 {
                let x = m << e as usize;
                p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c).sign()
            } else {
                // homogenized Horner: sum c_i m^i D^{d-i}, D = 2^{-e}
                let shift = (-e) as usize;
                let mut acc = p[d].clone();
                let mut pow = BigInt::one() << shift;
                for c in p[..d].iter().rev() {
                    acc = acc * &m + c * &pow;
                    pow <<= shift;
                }
                acc.sign()
            }
        }
    }
}

/// Sturm sequence of a nonzero real polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Self {
        let p0 = to_integer(p);
        let mut seq = vec![p0];
        if seq[0].len() > 1 {
            seq.push(derivative(&seq[0]));
            loop {
                let n = seq.len();
                let r = neg_remainder(&seq[n - 2], &seq[n - 1]);
                if r.is_empty() {
                    break;
                }
                seq.push(r);
            }
        }
        SturmSequence { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Exact sign of the polynomial at a finite point.
    pub fn sign(&self, x: f64) -> Sign {
        if self.seq[0].is_empty() {
            return Sign::NoSign;
        }
        sign_at(&self.seq[0], Point::At(x))
    }

    pub fn variations(&self, x: Point) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for p in &self.seq {
            let s = sign_at(p, x);
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: Point, hi: Point) -> usize {
        if self.seq[0].len() <= 1 {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct real roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: Point, hi: Point) -> usize {
        let c = self.count(lo, hi);
        match hi {
            Point::At(v) if self.sign(v) == Sign::NoSign => c.saturating_sub(1),
            _ => c,
        }
    }

    /// Distinct real roots.
    pub fn total(&self) -> usize {
        self.count(Point::NegInf, Point::PosInf)
    }

    /// Whether any root lies in the closed interval `[lo, hi]`.
    pub fn has_root_in_closed(&self, lo: f64, hi: f64) -> bool {
        if self.seq[0].len() <= 1 {
            return false;
        }
        let hi_pt = if hi.is_infinite() { Point::PosInf } else { Point::At(hi) };
        let lo_pt = if lo.is_infinite() { Point::NegInf } else { Point::At(lo) };
        (lo.is_finite() && self.sign(lo) == Sign::NoSign) || self.count(lo_pt, hi_pt) > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_counts() {
        // z^2 - 4z + 2
        let s = SturmSequence::new(&Polynomial::new(vec![2.0, -4.0, 1.0]));
        assert_eq!(s.total(), 2);
        assert_eq!(s.count(Point::At(0.0), Point::At(1.0)), 1);
        assert_eq!(s.count(Point::At(1.0), Point::PosInf), 1);
        assert_eq!(s.count(Point::NegInf, Point::At(0.0)), 0);
    }

    #[test]
    fn complex_pair_has_no_real_roots() {
        let s = SturmSequence::new(&Polynomial::new(vec![1.0, 0.0, 1.0]));
        assert_eq!(s.total(), 0);
        assert!(!s.has_root_in_closed(-5.0, 5.0));
    }

    #[test]
    fn endpoint_roots() {
        // (z-1)(z+2)
        let s = SturmSequence::new(&Polynomial::new(vec![-2.0, 1.0, 1.0]));
        assert_eq!(s.count(Point::At(0.0), Point::At(1.0)), 1);
        assert_eq!(s.count_open(Point::At(0.0), Point::At(1.0)), 0);
        assert!(s.has_root_in_closed(1.0, f64::INFINITY));
        assert!(s.has_root_in_closed(-2.0, -1.0));
        assert!(!s.has_root_in_closed(-1.9, 0.9));
    }

    #[test]
    fn repeated_root_counted_once() {
        let p = Polynomial::from_roots(&[0.5, 0.5, -3.0]);
        assert_eq!(SturmSequence::new(&p).total(), 2);
    }

    #[test]
    fn clustered_roots_separated_exactly() {
        let roots: Vec<f64> = (1..=12).map(|k| k as f64 * 0.125).collect();
        let p = Polynomial::from_roots(&roots);
        let s = SturmSequence::new(&p);
        assert_eq!(s.total(), 12);
        assert_eq!(s.count(Point::At(0.3), Point::At(0.8)), 4);
    }

    #[test]
    fn constants_have_no_roots() {
        let s = SturmSequence::new(&Polynomial::constant(3.0));
        assert_eq!(s.total(), 0);
    }
}
