//! Principal branch of the Lambert W function on `x >= 0`.
//!
//! Values are refined in double-double arithmetic, so the residual
//! `W(x) e^{W(x)} - x` is far below one unit in the last place of `x`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub const fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        DoubleDouble { hi: s, lo: err }
    }

    fn quick(a: f64, b: f64) -> Self {
        let s = a + b;
        DoubleDouble { hi: s, lo: b - (s - a) }
    }

    fn scale(self, k: i32) -> Self {
        let f = 2f64.powi(k);
        DoubleDouble { hi: self.hi * f, lo: self.lo * f }
    }

    pub fn exp(self) -> Self {
        const LN2: DoubleDouble = DoubleDouble {
            hi: std::f64::consts::LN_2,
            lo: 2.319_046_813_846_299_6e-17,
        };
        const SQUARINGS: i32 = 8;
        let k = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul(Self::from_f64(k))).scale(-SQUARINGS);
        // Taylor series of e^r - 1; |r| < 2e-3 so 14 terms are ample.
        let mut term = r;
        let mut sum = r;
        for i in 2..=14 {
            term = term.mul(r).div(Self::from_f64(f64::from(i)));
            sum = sum.add(term);
        }
        // (1 + s)^2 - 1 = s (2 + s) keeps the small part accurate.
        for _ in 0..SQUARINGS {
            sum = sum.mul(sum.add(Self::from_f64(2.0)));
        }
        sum.add(Self::from_f64(1.0)).scale(k as i32)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

impl Add for DoubleDouble {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        let s = Self::two_sum(self.hi, o.hi);
        let t = Self::two_sum(self.lo, o.lo);
        let v = Self::quick(s.hi, s.lo + t.hi);
        Self::quick(v.hi, v.lo + t.lo)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;

    fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        self + -o
    }
}

impl Mul for DoubleDouble {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let p = self.hi * o.hi;
        let err = self.hi.mul_add(o.hi, -p);
        Self::quick(p, err + (self.hi * o.lo + self.lo * o.hi))
    }
}

impl Div for DoubleDouble {
    type Output = Self;

    fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self - o * Self::from_f64(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Self::from_f64(q2);
        let q3 = r.hi / o.hi;
        Self::quick(q1, q2) + Self::from_f64(q3)
    }
}

/// `W(x)` in double-double precision.
pub fn lambert_w_dd(x: f64) -> Result<DoubleDouble> {
    if x.is_nan() || x < 0.0 || !x.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "Lambert W needs a finite x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(DoubleDouble::from_f64(0.0));
    }
    // Halley iteration in f64 from a logarithmic starting point.
    let mut w = if x < 2.0 {
        (1.0 + x).ln() * 0.7
    } else {
        let l = x.ln();
        l - l.ln() + l.ln() / l
    };
    for _ in 0..100 {
        let e = w.exp();
        let f = w * e - x;
        let step = f / (e * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    // Newton steps in double-double.
    let xd = DoubleDouble::from_f64(x);
    let one = DoubleDouble::from_f64(1.0);
    let mut wd = DoubleDouble::from_f64(w);
    for _ in 0..3 {
        let e = wd.exp();
        let f = wd.mul(e).sub(xd);
        wd = wd.sub(f.div(e.mul(wd.add(one))));
    }
    Ok(wd)
}

/// `W(x)` rounded to `f64`.
pub fn lambert_w(x: f64) -> Result<f64> {
    lambert_w_dd(x).map(DoubleDouble::to_f64)
}

/// `|W(x) e^{W(x)} - x|`, evaluated in double-double arithmetic.
pub fn lambert_residual(x: f64) -> Result<f64> {
    let w = lambert_w_dd(x)?;
    Ok(w.mul(w.exp()).sub(DoubleDouble::from_f64(x)).to_f64().abs())
}

/// The sublinear-strategy parameters `τ = sqrt(ln n / W(ln n))` and
/// `β = τ^{τ²}`, with the rounded sizes used by the staged decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambertParams {
    pub n: usize,
    pub tau: f64,
    pub beta: f64,
}

impl LambertParams {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "Lambert parameters need n >= 2, got {n}"
            )));
        }
        let l = (n as f64).ln();
        let tau = (l / lambert_w(l)?).sqrt();
        Ok(LambertParams { n, tau, beta: tau.powf(tau * tau) })
    }

    /// Long geodesic length `⌈βτ⌉`.
    pub fn long_len(&self) -> usize {
        (self.beta * self.tau).ceil() as usize
    }

    /// Guard radius, star degree threshold and second guard radius, `⌈τ⌉`.
    pub fn small(&self) -> usize {
        self.tau.ceil() as usize
    }

    /// Middle geodesic length `⌈τ²⌉`.
    pub fn mid_len(&self) -> usize {
        (self.tau * self.tau).ceil() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_points() {
        assert_eq!(lambert_w(0.0).unwrap(), 0.0);
        assert!((lambert_w(std::f64::consts::E).unwrap() - 1.0).abs() <= 1e-12);
        assert!((lambert_w(1.0).unwrap() - 0.567_143_290_409_783_8).abs() <= 1e-15);
        assert!(lambert_w(-0.5).is_err());
        assert!(lambert_w(f64::NAN).is_err());
    }

    #[test]
    fn residuals_are_tiny() {
        for x in [0.1, 0.5, 1.0, 3.0, 10.0, 1234.5, 1e5, 1e6] {
            assert!(lambert_residual(x).unwrap() <= 1e-12, "x = {x}");
        }
    }

    #[test]
    fn double_double_exp() {
        let e = DoubleDouble::from_f64(1.0).exp();
        assert_eq!(e.hi, std::f64::consts::E);
        // e = 2.718281828459045 + 1.4456468917292502e-16
        assert!((e.lo - 1.445_646_891_729_250_2e-16).abs() < 1e-30);
    }

    #[test]
    fn params() {
        assert!(LambertParams::new(1).is_err());
        let p = LambertParams::new(1000).unwrap();
        assert!(p.tau > 1.0 && p.beta > 1.0);
        assert!(p.long_len() >= p.mid_len());
    }
}
