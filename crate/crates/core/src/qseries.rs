//! Truncated formal series in `u = q^{1/2}` with exact rational coefficients.
//!
//! A [`HalfQSeries`] of truncation order `N` tracks the coefficients of
//! `u^0, ..., u^N`. Binary operations truncate to the smaller order; nothing
//! beyond a tracked order is ever assumed to be zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::univariate;

pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational as `p/q` always (`-1/1`), the machine-readable form.
pub fn fmt_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p`, `p/q`, or a decimal-free signed integer fraction.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfQSeries {
    coeffs: Vec<Rational>,
}

impl HalfQSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * u^power`, or zero if `power` exceeds `order`.
    pub fn monomial(power: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Builds a series from `u^0..u^N` coefficients; `N = coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series tracks at least u^0");
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^k`; `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    /// Coefficient of `q^n` (that is `u^{2n}`).
    pub fn q_coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(2 * n)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True iff every odd power of `u` vanishes, i.e. the series lies in `ℚ[[q]]`.
    pub fn is_integral_q(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `u^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n.saturating_sub(k) {
            if k + i <= n {
                out.coeffs[k + i] = self.coeffs[i].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: univariate::mul(&self.coeffs, &other.coeffs, n) }
    }

    /// In-place `self += c * other * u^shift`, truncated to `self`'s order.
    pub(crate) fn add_scaled_shifted(&mut self, other: &Self, c: &Rational, shift: usize) {
        let n = self.order();
        for (i, a) in other.coeffs.iter().enumerate() {
            if i + shift > n {
                break;
            }
            if !a.is_zero() {
                self.coeffs[i + shift] += a * c;
            }
        }
    }

    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self { coeffs: univariate::inverse(&self.coeffs, self.order()) })
    }

    /// `exp(self)` for a series with vanishing constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonNilpotentScalar(fmt_rational(&self.coeffs[0])));
        }
        Ok(Self { coeffs: univariate::exp(&self.coeffs, self.order()) })
    }

    /// `log(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Input("log needs constant term 1".into()));
        }
        Ok(Self { coeffs: univariate::log(&self.coeffs, self.order()) })
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// The substitution `τ ↦ τ + 1`, i.e. `u ↦ -u`.
    pub fn tau_plus_one(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Horner evaluation at a complex `u` with `|u| < 1`, returning the value
    /// and a heuristic bound on the neglected tail.
    pub fn eval_numeric(&self, u: Complex64) -> Result<(Complex64, f64)> {
        let r = u.norm();
        if r >= 1.0 {
            return Err(Error::DivergentTail(r));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c.to_f64().unwrap_or(f64::NAN);
        }
        let n = self.order();
        let tail_max = self.coeffs[n.saturating_sub(4)..]
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max);
        let bound = r.powi(n as i32 + 1) * tail_max / (1.0 - r);
        Ok((acc, bound))
    }

    /// Rows `(exponent of q, coefficient)`, with exponents as `k/2` strings.
    pub fn rows(&self) -> Vec<(String, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (half_power(k), c.clone()))
            .collect()
    }
}

/// `"0"`, `"1/2"`, `"1"`, `"3/2"`, ...
pub fn half_power(k: usize) -> String {
    if k.is_multiple_of(2) {
        (k / 2).to_string()
    } else {
        format!("{k}/2")
    }
}

/// `q^0`, `q^{1/2}`, `q^1`, `q^{3/2}`, ...
pub fn q_label(k: usize) -> String {
    if k.is_multiple_of(2) {
        format!("q^{}", k / 2)
    } else {
        format!("q^{{{k}/2}}")
    }
}

impl fmt::Display for HalfQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{}", fmt_rational(&mag))?,
                (_, true) => write!(f, "{}", q_label(k))?,
                _ => write!(f, "{}*{}", fmt_rational(&mag), q_label(k))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({})", q_label(self.order() + 1))
    }
}

impl Add for &HalfQSeries {
    type Output = HalfQSeries;
    fn add(self, rhs: Self) -> HalfQSeries {
        HalfQSeries::add(self, rhs)
    }
}

impl Sub for &HalfQSeries {
    type Output = HalfQSeries;
    fn sub(self, rhs: Self) -> HalfQSeries {
        HalfQSeries::sub(self, rhs)
    }
}

impl Mul for &HalfQSeries {
    type Output = HalfQSeries;
    fn mul(self, rhs: Self) -> HalfQSeries {
        HalfQSeries::mul(self, rhs)
    }
}

impl Neg for &HalfQSeries {
    type Output = HalfQSeries;
    fn neg(self) -> HalfQSeries {
        HalfQSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// `∏_{j≥1} (1 + sign·q^{j - s/2})^exponent` to u-order `order`, where
/// `s = 1` if `half_shift` else `0`.
///
/// Built as `exp(exponent · Σ_j log(1 + sign·t_j))`, so negative exponents
/// need no separate inversion.
pub fn eta_like_product(sign: i8, half_shift: bool, exponent: i64, order: usize) -> HalfQSeries {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let mut log = HalfQSeries::zero(order);
    if exponent != 0 {
        let mut j = 1;
        loop {
            let p = if half_shift { 2 * j - 1 } else { 2 * j };
            if p > order {
                break;
            }
            // log(1 + s t) = Σ_k (-1)^{k+1} s^k t^k / k
            let mut k = 1;
            while p * k <= order {
                let s_k = if sign == 1 || k % 2 == 0 { 1 } else { -1 };
                let alt = if k % 2 == 1 { 1 } else { -1 };
                log.coeffs[p * k] += rat(alt * s_k * exponent, k as i64);
                k += 1;
            }
            j += 1;
        }
    }
    log.exp().expect("log of an eta product has no constant term")
}
