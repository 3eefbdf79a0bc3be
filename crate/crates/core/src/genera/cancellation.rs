//! The dimension-12 cancellation identity, checked exactly in the free ring
//! of tangent power sums `s2T, s4T, s6T` and shifted bundle power sums
//! `s1E..s6E` (`s_kE = Σ (y_j + b)^k`).
//!
//! Left side: `{Â · Ch(√det Ē ⊗ (Λ^ev + Λ^odd)E)}^{(12)} = {2^l Â ∏ cosh(w_j/2)}^{(12)}`.
//! Right side: `2^{l-3} ({Â · ch}^{(12)} + (8 - 2l) {Â}^{(12)})`, with `ch`
//! chosen by [`ChernReading`].

use std::sync::Arc;

use num_traits::Zero;

use crate::cohring::{free_power_sum_ring, CohElement, Monomial, RingPresentation};
use crate::error::{Error, Result};
use crate::qseries::{int, HalfQSeries, Rational};
use crate::univariate;

const S2T: usize = 0;
const S2E: usize = 4;

/// How the Chern character on the right-hand side is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ChernReading {
    /// `Ch(E) + Ch(Ē)`, the complexification of the underlying real bundle.
    #[default]
    Complexified,
    /// `Ch_H(E)` alone.
    Literal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cancellation12 {
    pub rank: usize,
    pub relation_imposed: bool,
    pub reading: ChernReading,
    pub equal: bool,
    /// Degree-12 part of left minus right (after substitution, if imposed).
    pub residual: CohElement,
    /// `residual = (s2T - s2E) · quotient + remainder`.
    pub quotient: CohElement,
    pub remainder: CohElement,
}

impl Cancellation12 {
    pub fn divisible(&self) -> bool {
        self.remainder.is_zero()
    }
}

fn gen(pres: &Arc<RingPresentation>, name: &str) -> CohElement {
    let i = pres.generator_index(name).expect("free ring generator");
    CohElement::monomial(pres, pres.generator_monomial(i), HalfQSeries::one(0))
}

/// `exp(Σ_k c_{2k} s_{2k})` for the even coefficients of a log-series.
fn exp_even_power_sums(pres: &Arc<RingPresentation>, log_coeffs: &[Rational], suffix: &str) -> CohElement {
    let mut exponent = CohElement::zero(pres, 0);
    for k in 1..=3 {
        let c = &log_coeffs[2 * k];
        exponent = &exponent + &gen(pres, &format!("s{}{}", 2 * k, suffix)).scale(c);
    }
    exponent.exp_nilpotent().expect("positive-degree exponent")
}

fn factorial(k: i64) -> Rational {
    (2..=k).fold(int(1), |f, i| f * int(i))
}

pub fn cancellation12_check(l: usize, impose_relation: bool) -> Result<Cancellation12> {
    cancellation12_check_with(l, impose_relation, ChernReading::default())
}

pub fn cancellation12_check_with(l: usize, impose_relation: bool, reading: ChernReading) -> Result<Cancellation12> {
    if l != 2 && l != 4 {
        return Err(Error::UnsupportedRank(l));
    }
    let pres = Arc::new(free_power_sum_ring());
    let one = CohElement::one(&pres, 0);
    let a_hat = exp_even_power_sums(&pres, &univariate::log(&univariate::a_hat_factor(6), 6), "T");
    let cosh = exp_even_power_sums(&pres, &univariate::log(&univariate::cosh_half(6), 6), "E");
    let two_l = int(1 << l);
    let lhs = (&a_hat * &cosh).scale(&two_l);

    let l_int = int(l as i64);
    let ch = match reading {
        ChernReading::Complexified => (1..=3).fold(one.scale(&(int(2) * &l_int)), |acc, k| {
            &acc + &gen(&pres, &format!("s{}E", 2 * k)).scale(&(int(2) / factorial(2 * k)))
        }),
        ChernReading::Literal => (1..=6).fold(one.scale(&l_int), |acc, k| {
            &acc + &gen(&pres, &format!("s{k}E")).scale(&factorial(k).recip())
        }),
    };
    let rhs_inner = &(&a_hat * &ch) + &a_hat.scale(&int(8 - 2 * l as i64));
    let rhs = rhs_inner.scale(&(two_l / int(8)));

    let mut residual = (&lhs - &rhs).component(12);
    if impose_relation {
        residual = residual.substitute(S2T, &gen(&pres, "s2E"))?;
    }
    let (quotient, remainder) = divide_by_relation(&residual);
    Ok(Cancellation12 { rank: l, relation_imposed: impose_relation, reading, equal: residual.is_zero(), residual, quotient, remainder })
}

/// Synthetic division by `s2T - s2E`, treating `s2T` as the main variable.
pub fn divide_by_relation(r: &CohElement) -> (CohElement, CohElement) {
    let pres = r.presentation().clone();
    debug_assert_eq!(pres.generators()[S2E].name, "s2E");
    let max = r.terms().keys().map(|m| m.0[S2T]).max().unwrap_or(0) as usize;
    // a[k]: coefficient of s2T^k
    let mut a = vec![CohElement::zero(&pres, 0); max + 1];
    for (m, s) in r.terms() {
        let k = m.0[S2T] as usize;
        let mut rest: Monomial = m.clone();
        rest.0[S2T] = 0;
        a[k] = &a[k] + &CohElement::monomial(&pres, rest, s.clone());
    }
    let s2e = gen(&pres, "s2E");
    let s2t = gen(&pres, "s2T");
    let mut quotient = CohElement::zero(&pres, 0);
    let mut b = CohElement::zero(&pres, 0);
    for k in (1..=max).rev() {
        b = &a[k] + &(&s2e * &b);
        quotient = &quotient + &(&b * &s2t.pow(k as u32 - 1));
    }
    let remainder = &a[0] + &(&s2e * &b);
    (quotient, remainder)
}

impl Cancellation12 {
    /// `(s2T - s2E) · quotient + remainder == residual`.
    pub fn division_is_consistent(&self) -> bool {
        let pres = self.residual.presentation();
        let rel = &gen(pres, "s2T") - &gen(pres, "s2E");
        &(&rel * &self.quotient) + &self.remainder == self.residual
    }

    pub fn residual_is_zero(&self) -> bool {
        self.residual.terms().values().all(|s| s.constant_term().is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    #[test]
    fn holds_with_relation() {
        for l in [2, 4] {
            let c = cancellation12_check(l, true).unwrap();
            assert!(c.equal, "l = {l}: {}", c.residual);
            assert!(c.residual_is_zero());
        }
    }

    #[test]
    fn fails_without_relation_but_residual_is_divisible() {
        for l in [2, 4] {
            let c = cancellation12_check(l, false).unwrap();
            assert!(!c.equal);
            assert!(c.divisible());
            assert!(c.division_is_consistent());
            assert!(!c.quotient.is_zero());
        }
    }

    /// Independent oracle: the l = 2 residual is -(s2T - s2E)(s2E^2 - 2 s4E)/768.
    #[test]
    fn l2_residual_closed_form() {
        let c = cancellation12_check(2, false).unwrap();
        let pres = c.residual.presentation().clone();
        let g = |n: &str| gen(&pres, n);
        let p2 = g("s2T");
        let s2 = g("s2E");
        let s4 = g("s4E");
        let expected = (&(&p2 - &s2) * &(&(&s2 * &s2) - &s4.scale(&int(2)))).scale(&rat(-1, 768));
        assert_eq!(c.residual, expected);
    }

    #[test]
    fn literal_reading_fails_even_with_relation() {
        for l in [2, 4] {
            assert!(!cancellation12_check_with(l, true, ChernReading::Literal).unwrap().equal);
        }
    }

    #[test]
    fn unsupported_ranks() {
        assert_eq!(cancellation12_check(3, true).unwrap_err(), Error::UnsupportedRank(3));
        assert!(cancellation12_check(6, true).is_err());
    }

    #[test]
    fn division_round_trip() {
        let pres = Arc::new(free_power_sum_ring());
        let g = |n: &str| gen(&pres, n);
        let r = &(&g("s2T").pow(2) * &g("s4E")) + &g("s6T").scale(&int(3));
        let (q, rem) = divide_by_relation(&r);
        let rel = &g("s2T") - &g("s2E");
        assert_eq!(&(&rel * &q) + &rem, r);
        assert!(!rem.is_zero());
        assert!(rem.terms().keys().all(|m| m.0[S2T] == 0));
        let zero = CohElement::zero(&pres, 0);
        assert!(divide_by_relation(&zero).1.is_zero());
    }
}
