//! Schur characters via Jacobi–Trudi and Newton's identities, and the
//! `Λⁿ(U ⊗ V) = ⊕_λ S_λ U ⊗ S_{λ'} V` check.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cohring::{CohElement, Manifold};
use crate::error::{Error, Result};
use crate::qseries::{int, rat, Rational};

use super::{exp_class, Character, ProjBundle};

/// The ring operations Jacobi–Trudi needs.
pub trait CommRing: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl CommRing for CohElement {
    fn zero_like(&self) -> Self {
        CohElement::zero(self.presentation(), self.order())
    }
    fn one_like(&self) -> Self {
        CohElement::one(self.presentation(), self.order())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        CohElement::scale(self, c)
    }
}

/// Laurent polynomials with rational coefficients in independent variables
/// (exponentials of independent roots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl ExpPoly {
    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        Self { nvars, terms }
    }

    /// The monomial `X_0^{e_0} ... X_{n-1}^{e_{n-1}}`.
    pub fn monomial(exps: Vec<i32>) -> Self {
        Self { nvars: exps.len(), terms: BTreeMap::from([(exps, Rational::one())]) }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

impl CommRing for ExpPoly {
    fn zero_like(&self) -> Self {
        Self::constant(self.nvars, Rational::zero())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.nvars, Rational::one())
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let v = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = self.zero_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let v = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
                *v += ca * cb;
                if v.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }
}

/// Partitions of `n` in non-increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=left.min(max)).rev() {
            cur.push(part);
            rec(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(lambda: &[usize]) -> Vec<usize> {
    let cols = lambda.first().copied().unwrap_or(0);
    (1..=cols).map(|j| lambda.iter().filter(|&&p| p >= j).count()).collect()
}

/// `h_0..h_n` from power sums `p_1..p_n` by `k h_k = Σ_{i=1}^k p_i h_{k-i}`.
pub fn complete_from_power_sums<R: CommRing>(p: &[R], n: usize, one: &R) -> Vec<R> {
    let mut h = vec![one.clone()];
    for k in 1..=n {
        let mut acc = one.zero_like();
        for i in 1..=k {
            acc = acc.add(&p[i - 1].mul(&h[k - i]));
        }
        h.push(acc.scale(&rat(1, k as i64)));
    }
    h
}

fn determinant<R: CommRing>(m: &[Vec<R>], one: &R) -> R {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    // Laplace expansion along the first row; sizes here are at most 4.
    let mut acc = one.zero_like();
    for j in 0..n {
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = m[0][j].mul(&determinant(&minor, one));
        acc = acc.add(&if j % 2 == 0 { term } else { term.scale(&int(-1)) });
    }
    acc
}

/// `s_λ = det(h_{λ_i - i + j})` from power sums `p_1, p_2, ...` (at least |λ| of them).
pub fn schur_from_power_sums<R: CommRing>(lambda: &[usize], p: &[R], one: &R) -> R {
    let size: usize = lambda.iter().sum();
    let h = complete_from_power_sums(p, size, one);
    let len = lambda.len();
    let matrix: Vec<Vec<R>> = (0..len)
        .map(|i| {
            (0..len)
                .map(|j| {
                    let idx = lambda[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        one.zero_like()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix, one)
}

/// The character of `S_λ E`, from the exponential roots `e^{y_j + b}`.
pub fn schur_character(lambda: &[usize], e: &ProjBundle, m: &Manifold, order: usize) -> Result<Character> {
    if lambda.len() > e.rank() {
        return Err(Error::PartitionTooTall { partition: lambda.to_vec(), rank: e.rank() });
    }
    let size: usize = lambda.iter().sum();
    let roots = e.shifted_roots();
    let p: Vec<CohElement> = (1..=size.max(1))
        .map(|k| {
            roots.iter().fold(CohElement::zero(&m.presentation, order), |acc, w| &acc + &exp_class(m, w, &int(k as i64), order))
        })
        .collect();
    Ok(schur_from_power_sums(lambda, &p, &CohElement::one(&m.presentation, order)))
}

/// Largest rank accepted by [`tensor_exterior_identity_check`].
pub const MAX_SCHUR_RANK: usize = 4;

/// Checks `ch Λⁿ(U ⊗ V) = Σ_λ s_λ(U) s_{λ'}(V)` over partitions of `n` with
/// at most `rank_u` rows and `rank_v` columns. Roots are independent
/// variables, so this is an exact identity of Laurent polynomials.
pub fn tensor_exterior_identity_check(rank_u: usize, rank_v: usize, n: usize) -> Result<bool> {
    if rank_u == 0 || rank_v == 0 || rank_u > MAX_SCHUR_RANK || rank_v > MAX_SCHUR_RANK {
        return Err(Error::GuardExceeded(format!(
            "tensor_exterior_identity_check: ranks ({rank_u}, {rank_v}) must lie in 1..={MAX_SCHUR_RANK}"
        )));
    }
    if n > rank_u * rank_v {
        return Err(Error::Input(format!("n = {n} exceeds rank_u * rank_v = {}", rank_u * rank_v)));
    }
    let nv = rank_u + rank_v;
    let one = ExpPoly::constant(nv, Rational::one());
    let xs: Vec<ExpPoly> = (0..rank_u).map(|i| ExpPoly::variable(nv, i)).collect();
    let ys: Vec<ExpPoly> = (0..rank_v).map(|j| ExpPoly::variable(nv, rank_u + j)).collect();

    // left: coefficient of t^n in ∏_{i,j} (1 + t X_i Y_j), multiplied out directly
    let mut by_t = vec![one.clone()];
    for x in &xs {
        for y in &ys {
            let xy = x.mul(y);
            let mut next = by_t.clone();
            next.push(one.zero_like());
            for (k, c) in by_t.iter().enumerate() {
                next[k + 1] = next[k + 1].add(&c.mul(&xy));
            }
            by_t = next;
        }
    }
    let lhs = by_t[n].clone();

    let power_sums = |vars: &[ExpPoly]| -> Vec<ExpPoly> {
        (1..=n.max(1))
            .map(|k| {
                vars.iter().fold(one.zero_like(), |acc, v| {
                    let mut pk = one.clone();
                    for _ in 0..k {
                        pk = pk.mul(v);
                    }
                    acc.add(&pk)
                })
            })
            .collect()
    };
    let (pu, pv) = (power_sums(&xs), power_sums(&ys));
    let mut rhs = one.zero_like();
    for lambda in partitions(n) {
        let conj = conjugate(&lambda);
        if lambda.len() > rank_u || conj.len() > rank_v {
            continue;
        }
        let su = schur_from_power_sums(&lambda, &pu, &one);
        let sv = schur_from_power_sums(&conj, &pv, &one);
        rhs = rhs.add(&su.mul(&sv));
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohring::{builtin_manifold, LinearClass};

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate(&[2, 2]), vec![2, 2]);
    }

    fn vars(n: usize) -> (ExpPoly, Vec<ExpPoly>) {
        (ExpPoly::constant(n, Rational::one()), (0..n).map(|i| ExpPoly::variable(n, i)).collect())
    }

    fn psums(vs: &[ExpPoly], one: &ExpPoly, n: usize) -> Vec<ExpPoly> {
        (1..=n)
            .map(|k| vs.iter().fold(one.zero_like(), |a, v| a.add(&(0..k).fold(one.clone(), |p, _| p.mul(v)))))
            .collect()
    }

    #[test]
    fn schur_small_cases() {
        let (one, v) = vars(2);
        let p = psums(&v, &one, 3);
        assert_eq!(schur_from_power_sums(&[1], &p, &one), v[0].add(&v[1]));
        assert_eq!(schur_from_power_sums(&[1, 1], &p, &one), v[0].mul(&v[1]));
        // brute force: S^2 of a rank-2 bundle
        let s2 = v[0].mul(&v[0]).add(&v[0].mul(&v[1])).add(&v[1].mul(&v[1]));
        assert_eq!(schur_from_power_sums(&[2], &p, &one), s2);
        // three rows on two variables vanish
        assert!(schur_from_power_sums(&[1, 1, 1], &p, &one).is_zero());
    }

    #[test]
    fn exterior_and_symmetric_powers() {
        let (one, v) = vars(3);
        let p = psums(&v, &one, 3);
        let e3 = v[0].mul(&v[1]).mul(&v[2]);
        assert_eq!(schur_from_power_sums(&[1, 1, 1], &p, &one), e3);
        // h_3 in three variables has 10 monomials
        assert_eq!(schur_from_power_sums(&[3], &p, &one).num_terms(), 10);
    }

    #[test]
    fn schur_character_on_cp2() {
        let m = builtin_manifold("CP2").unwrap();
        let x = LinearClass::generator(&m.presentation, 0).unwrap();
        let e = ProjBundle::new(vec![x.clone(), x.scale(&int(-1))], LinearClass::zero(&m.presentation)).unwrap();
        let s11 = schur_character(&[1, 1], &e, &m, 0).unwrap();
        assert_eq!(s11, CohElement::one(&m.presentation, 0));
        let s1 = schur_character(&[1], &e, &m, 0).unwrap();
        assert_eq!(s1, super::super::ch(&e, &m, 0));
        assert!(matches!(schur_character(&[1, 1, 1], &e, &m, 0), Err(Error::PartitionTooTall { .. })));
        // S^2 = e^{2y1} + e^{y1+y2} + e^{2y2} with y1 = x, y2 = -x
        let s2 = schur_character(&[2], &e, &m, 0).unwrap();
        let xe = m.element(&x, 0);
        let expected = &CohElement::one(&m.presentation, 0).scale(&int(3)) + &(&xe * &xe).scale(&int(4));
        assert_eq!(s2, expected);
    }

    #[test]
    fn tensor_identity_cases() {
        assert!(tensor_exterior_identity_check(1, 1, 1).unwrap());
        assert!(tensor_exterior_identity_check(2, 2, 2).unwrap());
        assert!(tensor_exterior_identity_check(2, 2, 3).unwrap());
        assert!(tensor_exterior_identity_check(3, 2, 4).unwrap());
        assert!(matches!(tensor_exterior_identity_check(5, 1, 1), Err(Error::GuardExceeded(_))));
    }
}
