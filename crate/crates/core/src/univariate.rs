//! Truncated univariate power series over the rationals, stored densely as
//! `c[0] + c[1] t + ... + c[n] t^n`. Used for the classical one-variable
//! factors (x/(2 sinh(x/2)), cosh(x/2), log(1+e^x), ...).

use num_traits::{One, Zero};

use crate::qseries::Rational;

pub fn mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Multiplicative inverse; `a[0]` must be nonzero.
pub fn inverse(a: &[Rational], n: usize) -> Vec<Rational> {
    let a0 = a[0].clone();
    assert!(!a0.is_zero(), "inverse of series with zero constant term");
    let mut out = vec![Rational::zero(); n + 1];
    out[0] = a0.recip();
    for k in 1..=n {
        let mut acc = Rational::zero();
        for i in 1..=k.min(a.len() - 1) {
            acc += &a[i] * &out[k - i];
        }
        out[k] = -acc / &a0;
    }
    out
}

/// `exp(a)` for `a[0] = 0`, via `E' = a' E`.
pub fn exp(a: &[Rational], n: usize) -> Vec<Rational> {
    debug_assert!(a.first().is_none_or(Zero::is_zero));
    let mut out = vec![Rational::zero(); n + 1];
    out[0] = Rational::one();
    for k in 1..=n {
        let mut acc = Rational::zero();
        for j in 1..=k.min(a.len().saturating_sub(1)) {
            acc += Rational::from_integer(j.into()) * &a[j] * &out[k - j];
        }
        out[k] = acc / Rational::from_integer(k.into());
    }
    out
}

/// `log(a)` for `a[0] = 1`, via `L' = a'/a`.
pub fn log(a: &[Rational], n: usize) -> Vec<Rational> {
    debug_assert!(a[0].is_one());
    let inv = inverse(a, n);
    let mut deriv = vec![Rational::zero(); n + 1];
    for k in 1..a.len().min(n + 1) {
        deriv[k - 1] = Rational::from_integer(k.into()) * &a[k];
    }
    let q = mul(&deriv, &inv, n);
    let mut out = vec![Rational::zero(); n + 1];
    for k in 1..=n {
        out[k] = &q[k - 1] / Rational::from_integer(k.into());
    }
    out
}

/// Coefficients of `e^{s t}` up to `t^n`.
pub fn exp_scaled(s: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = Rational::one();
    out.push(c.clone());
    for k in 1..=n {
        c = c * s / Rational::from_integer(k.into());
        out.push(c.clone());
    }
    out
}

/// `t / (e^{t/2} - e^{-t/2})`, the Â factor of one Chern root.
pub fn a_hat_factor(n: usize) -> Vec<Rational> {
    // (e^{t/2} - e^{-t/2}) / t = sum_k t^{2k} / (4^k (2k+1)!)
    let half = Rational::new(1.into(), 2.into());
    let e = exp_scaled(&half, n + 1);
    let mut denom = vec![Rational::zero(); n + 1];
    for k in 0..=n {
        if k % 2 == 0 {
            denom[k] = Rational::from_integer(2.into()) * &e[k + 1];
        }
    }
    inverse(&denom, n)
}

/// `cosh(t/2)`.
pub fn cosh_half(n: usize) -> Vec<Rational> {
    let half = Rational::new(1.into(), 2.into());
    exp_scaled(&half, n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c } else { Rational::zero() })
        .collect()
}
