//! Projective bundles at character level: Chern characters, Witten bundles,
//! the determinant-weight graded decomposition, and Schur characters.
//!
//! A projective bundle is its rank, formal Chern roots `y_j` and a rational
//! degree-2 twist `b`. The conjugate bundle has roots `-y_j` and twist `-b`.
//! A constituent of determinant weight `m` picks up the factor `exp(m b)`,
//! so `E` contributes `e^{y_j + b}` and `Ē` contributes `e^{-y_j - b}`.

pub mod schur;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cohring::{sum_of_squares, CohElement, LinearClass, Manifold};
use crate::error::{Error, Result};
use crate::qseries::{int, rat, HalfQSeries, Rational};
use crate::univariate;

pub use schur::{schur_character, tensor_exterior_identity_check};

/// A Chern character: a cohomology element built from exponentials of roots.
pub type Character = CohElement;

/// Largest rank accepted by [`graded_decompose`].
pub const MAX_DECOMPOSE_RANK: usize = 6;
/// Largest u-order accepted by [`graded_decompose`].
pub const MAX_DECOMPOSE_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq)]
pub struct ProjBundle {
    roots: Vec<LinearClass>,
    twist_b: LinearClass,
}

impl ProjBundle {
    pub fn new(roots: Vec<LinearClass>, twist_b: LinearClass) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::Input("a bundle needs rank >= 1".into()));
        }
        let n = twist_b.coeffs().len();
        if roots.iter().any(|r| r.coeffs().len() != n) {
            return Err(Error::Input("bundle roots and twist live in different rings".into()));
        }
        Ok(Self { roots, twist_b })
    }

    /// Rank-`l` trivial bundle with no twist.
    pub fn trivial(m: &Manifold, rank: usize) -> Self {
        let z = LinearClass::zero(&m.presentation);
        Self { roots: vec![z.clone(); rank.max(1)], twist_b: z }
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[LinearClass] {
        &self.roots
    }

    pub fn twist(&self) -> &LinearClass {
        &self.twist_b
    }

    /// `w_j = y_j + b`.
    pub fn shifted_roots(&self) -> Vec<LinearClass> {
        self.roots.iter().map(|y| y.add(&self.twist_b)).collect()
    }

    pub fn conjugate(&self) -> Self {
        Self { roots: self.roots.iter().map(LinearClass::neg).collect(), twist_b: self.twist_b.neg() }
    }

    /// Direct sum; the twists must agree.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.twist_b != other.twist_b {
            return Err(Error::Input("direct sum needs equal twists".into()));
        }
        let mut roots = self.roots.clone();
        roots.extend(other.roots.iter().cloned());
        Ok(Self { roots, twist_b: self.twist_b.clone() })
    }

    /// `𝔭₁(E) = Σ (y_j + b)^2`.
    pub fn p1(&self, m: &Manifold, order: usize) -> CohElement {
        sum_of_squares(&m.presentation, &self.shifted_roots(), order)
    }

    pub fn describe(&self, m: &Manifold) -> String {
        let pres = &m.presentation;
        let roots: Vec<String> = self.roots.iter().map(|r| r.format(pres)).collect();
        format!("rank {} roots [{}] b = {}", self.rank(), roots.join(", "), self.twist_b.format(pres))
    }
}

fn exp_class(m: &Manifold, c: &LinearClass, scale: &Rational, order: usize) -> CohElement {
    let x = m.element(c, order);
    let top = m.dimension() as usize / 2;
    CohElement::eval_rational_series(&univariate::exp_scaled(scale, top), &x)
}

/// `Σ_j exp(y_j) · exp(b)`.
pub fn ch(e: &ProjBundle, m: &Manifold, order: usize) -> Character {
    let mut out = CohElement::zero(&m.presentation, order);
    for y in e.roots() {
        out = &out + &exp_class(m, y, &int(1), order);
    }
    &out * &exp_class(m, e.twist(), &int(1), order)
}

/// `exp(-½ Σ_j (y_j + b))`, the branch with constant term 1.
pub fn det_sqrt_ch(e: &ProjBundle, m: &Manifold, order: usize) -> Character {
    let total = e.shifted_roots().iter().fold(LinearClass::zero(&m.presentation), |a, w| a.add(w));
    exp_class(m, &total, &rat(-1, 2), order)
}

/// Which q-levels a Witten-type product runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Levels {
    /// `q^u`, `u ≥ 1` (u-powers 2, 4, ...).
    Integral,
    /// `q^{v-1/2}`, `v ≥ 1` (u-powers 1, 3, ...).
    HalfIntegral,
}

impl Levels {
    /// The u-powers of the levels up to `order`.
    pub fn u_powers(self, order: usize) -> Vec<usize> {
        match self {
            Levels::Integral => (2..=order).step_by(2).collect(),
            Levels::HalfIntegral => (1..=order).step_by(2).collect(),
        }
    }
}

/// `log ch ⊗_t Λ_{sign·t}(roots) = Σ_t Σ_k (-1)^{k+1} sign^k t^k/k Σ_roots e^{k·root}`.
pub fn log_lambda_sum(roots: &[LinearClass], sign: i8, levels: Levels, order: usize, m: &Manifold) -> Result<CohElement> {
    if sign != 1 && sign != -1 {
        return Err(Error::Input("sign must be ±1".into()));
    }
    let mut out = CohElement::zero(&m.presentation, order);
    if roots.is_empty() {
        return Ok(out);
    }
    let powers = levels.u_powers(order);
    let min_p = match powers.first() {
        Some(&p) => p,
        None => return Ok(out),
    };
    for k in 1..=order / min_p {
        let mut t_k = HalfQSeries::zero(order);
        for &p in &powers {
            if p * k <= order {
                t_k = t_k.add(&HalfQSeries::monomial(p * k, int(1), order));
            }
        }
        let alt = if k % 2 == 1 { 1 } else { -1 };
        let s_k = if sign == 1 || k % 2 == 0 { 1 } else { -1 };
        let c = rat(alt * s_k, k as i64);
        let mut power_sum = CohElement::zero(&m.presentation, order);
        for r in roots {
            power_sum = &power_sum + &exp_class(m, r, &int(k as i64), order);
        }
        out = &out + &power_sum.mul_series(&t_k).scale(&c);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WittenKind {
    Theta,
    Theta1,
    Theta2,
    Theta3,
}

impl WittenKind {
    fn sign_levels(self) -> (i8, Levels) {
        match self {
            WittenKind::Theta => (-1, Levels::Integral),
            WittenKind::Theta1 => (1, Levels::Integral),
            WittenKind::Theta2 => (-1, Levels::HalfIntegral),
            WittenKind::Theta3 => (1, Levels::HalfIntegral),
        }
    }
}

/// Character of `Θ_kind(E) = ⊗_t Λ_{±t}(E) ⊗ ⊗_t Λ_{±t}(Ē)`, with `E`-roots
/// `y_j + b` and `Ē`-roots `-(y_j + b)`.
pub fn witten_bundle_ch(kind: WittenKind, e: &ProjBundle, order: usize, m: &Manifold) -> Result<Character> {
    let (sign, levels) = kind.sign_levels();
    let w = e.shifted_roots();
    let mut both = w.clone();
    both.extend(w.iter().map(LinearClass::neg));
    log_lambda_sum(&both, sign, levels, order, m)?.exp_nilpotent()
}

/// The composite bundle of each graded decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionKind {
    /// `(Λ^ev − Λ^odd)E ⊗ Θ(E)`
    W,
    /// `(Λ^ev + Λ^odd)E ⊗ Θ₁(E)`
    A,
    /// `Θ₂(E)`
    B,
    /// `Θ₃(E)`
    C,
}

impl DecompositionKind {
    fn witten(self) -> WittenKind {
        match self {
            DecompositionKind::W => WittenKind::Theta,
            DecompositionKind::A => WittenKind::Theta1,
            DecompositionKind::B => WittenKind::Theta2,
            DecompositionKind::C => WittenKind::Theta3,
        }
    }

    /// Sign of `Λ^odd` in the level-zero factor, if there is one.
    fn level_zero_sign(self) -> Option<i64> {
        match self {
            DecompositionKind::W => Some(-1),
            DecompositionKind::A => Some(1),
            DecompositionKind::B | DecompositionKind::C => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DecompositionKind::W => "W",
            DecompositionKind::A => "A",
            DecompositionKind::B => "B",
            DecompositionKind::C => "C",
        }
    }
}

/// `∏_j (1 ± e^{w_j})` times the Witten character: the closed form every
/// resummed graded table must match.
pub fn composite_closed_form(kind: DecompositionKind, e: &ProjBundle, order: usize, m: &Manifold) -> Result<Character> {
    let mut out = witten_bundle_ch(kind.witten(), e, order, m)?;
    if let Some(s) = kind.level_zero_sign() {
        for w in e.shifted_roots() {
            let one = CohElement::one(&m.presentation, order);
            out = &out * &(&one + &exp_class(m, &w, &int(1), order).scale(&int(s)));
        }
    }
    Ok(out)
}

/// Laurent polynomial in the weight-tracking variable with element coefficients.
type WeightPoly = BTreeMap<i64, CohElement>;

/// Multiplies by `1 + c·w^shift`.
fn mul_binomial(p: &WeightPoly, c: &CohElement, shift: i64) -> WeightPoly {
    let mut out = p.clone();
    for (&k, a) in p {
        let t = a * c;
        if t.is_zero() {
            continue;
        }
        let slot = out.entry(k + shift).or_insert_with(|| CohElement::zero(c.presentation(), c.order()));
        *slot = &*slot + &t;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The table `(m, p) ↦ Ch_{mH}` of the weight-`m` constituent at `q^{p/2}`.
#[derive(Clone, Debug)]
pub struct GradedTable {
    pub kind: DecompositionKind,
    pub order: usize,
    entries: BTreeMap<(i64, usize), Character>,
}

impl GradedTable {
    /// Nonzero entries keyed by `(m, u-power)`; each is an order-0 element.
    pub fn entries(&self) -> &BTreeMap<(i64, usize), Character> {
        &self.entries
    }

    pub fn entry(&self, m: i64, u_power: usize) -> Option<&Character> {
        self.entries.get(&(m, u_power))
    }

    /// The weights `m` with a nonzero entry at the given u-power.
    pub fn weights_at(&self, u_power: usize) -> Vec<i64> {
        self.entries.keys().filter(|(_, p)| *p == u_power).map(|(m, _)| *m).collect()
    }
}

/// Expands the composite bundle of `kind` with a weight `w^{+1}` on each
/// `E`-exponential and `w^{-1}` on each `Ē`-exponential, then twists the
/// weight-`m` part by `exp(m b)`.
pub fn graded_decompose(kind: DecompositionKind, e: &ProjBundle, order: usize, m: &Manifold) -> Result<GradedTable> {
    if e.rank() > MAX_DECOMPOSE_RANK {
        return Err(Error::GuardExceeded(format!("graded_decompose: rank {} > {}", e.rank(), MAX_DECOMPOSE_RANK)));
    }
    if order > MAX_DECOMPOSE_ORDER {
        return Err(Error::GuardExceeded(format!("graded_decompose: order {} > {}", order, MAX_DECOMPOSE_ORDER)));
    }
    let pres = &m.presentation;
    let (sign, levels) = kind.witten().sign_levels();
    let mut poly: WeightPoly = BTreeMap::from([(0, CohElement::one(pres, order))]);
    let ey: Vec<CohElement> = e.roots().iter().map(|y| exp_class(m, y, &int(1), order)).collect();
    let emy: Vec<CohElement> = e.roots().iter().map(|y| exp_class(m, y, &int(-1), order)).collect();
    if let Some(s) = kind.level_zero_sign() {
        for x in &ey {
            poly = mul_binomial(&poly, &x.scale(&int(s)), 1);
        }
    }
    for p in levels.u_powers(order) {
        for (x, xbar) in ey.iter().zip(&emy) {
            poly = mul_binomial(&poly, &x.shift_u(p).scale(&int(sign.into())), 1);
            poly = mul_binomial(&poly, &xbar.shift_u(p).scale(&int(sign.into())), -1);
        }
    }
    let mut entries = BTreeMap::new();
    for (&w, coeff) in &poly {
        let twist = exp_class(m, e.twist(), &int(w), order);
        let twisted = coeff * &twist;
        for p in 0..=order {
            let c = twisted.u_coefficient(p);
            if !c.is_zero() {
                entries.insert((w, p), c);
            }
        }
    }
    Ok(GradedTable { kind, order, entries })
}

/// Resums a graded table: `Σ_{m,p} Ch_{mH}(entry) q^{p/2}`.
pub fn gch_from_table(t: &GradedTable, m: &Manifold) -> Character {
    let mut out = CohElement::zero(&m.presentation, t.order);
    for (&(_, p), c) in &t.entries {
        out = &out + &c.at_u_power(p, t.order);
    }
    out
}

/// The graded twisted Chern character of the composite bundle of `kind`.
pub fn gch(kind: DecompositionKind, e: &ProjBundle, order: usize, m: &Manifold) -> Result<Character> {
    Ok(gch_from_table(&graded_decompose(kind, e, order, m)?, m))
}

/// Scalar series as an element, for comparisons with degree-0 characters.
pub fn scalar_character(m: &Manifold, s: HalfQSeries) -> Character {
    CohElement::scalar(&m.presentation, s)
}

/// Whether every coefficient of `c` above degree 0 vanishes.
pub fn is_scalar(c: &Character) -> bool {
    c.terms().keys().all(|k| k.is_one()) || c.is_zero()
}

/// Virtual rank: the degree-0, `u^0` coefficient.
pub fn virtual_rank(c: &Character) -> Rational {
    c.scalar_part().coeff(0).cloned().unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohring::builtin_manifold;
    use crate::qseries::eta_like_product;
    use proptest::prelude::*;

    fn cp2() -> Manifold {
        builtin_manifold("CP2").unwrap()
    }

    fn x(m: &Manifold) -> LinearClass {
        LinearClass::generator(&m.presentation, 0).unwrap()
    }

    fn bundle(m: &Manifold, roots: &[Rational], b: Rational) -> ProjBundle {
        let xx = x(m);
        ProjBundle::new(roots.iter().map(|c| xx.scale(c)).collect(), xx.scale(&b)).unwrap()
    }

    fn poly(m: &Manifold, cs: &[Rational], order: usize) -> CohElement {
        let xx = m.element(&x(m), order);
        cs.iter().enumerate().fold(CohElement::zero(&m.presentation, order), |acc, (k, c)| &acc + &xx.pow(k as u32).scale(c))
    }

    #[test]
    fn ch_examples() {
        let m = cp2();
        assert_eq!(ch(&ProjBundle::trivial(&m, 1), &m, 0), CohElement::one(&m.presentation, 0));
        let o1 = bundle(&m, &[int(1)], int(0));
        assert_eq!(ch(&o1, &m, 0), poly(&m, &[int(1), int(1), rat(1, 2)], 0));
        let tw = bundle(&m, &[int(0)], rat(1, 2));
        assert_eq!(ch(&tw, &m, 0), poly(&m, &[int(1), rat(1, 2), rat(1, 8)], 0));
    }

    #[test]
    fn det_sqrt_examples() {
        let m = cp2();
        assert_eq!(det_sqrt_ch(&ProjBundle::trivial(&m, 3), &m, 0), CohElement::one(&m.presentation, 0));
        let o1 = bundle(&m, &[int(1)], int(0));
        assert_eq!(det_sqrt_ch(&o1, &m, 0), poly(&m, &[int(1), rat(-1, 2), rat(1, 8)], 0));
        let three = bundle(&m, &[int(1), int(1), int(1)], int(0));
        assert_eq!(det_sqrt_ch(&three, &m, 0), poly(&m, &[int(1), rat(-3, 2), rat(9, 8)], 0));
    }

    #[test]
    fn log_lambda_examples() {
        let m = cp2();
        assert!(log_lambda_sum(&[], -1, Levels::Integral, 6, &m).unwrap().is_zero());
        let z = LinearClass::zero(&m.presentation);
        let e = log_lambda_sum(&[z], -1, Levels::Integral, 10, &m).unwrap().exp_nilpotent().unwrap();
        assert_eq!(e, scalar_character(&m, eta_like_product(-1, false, 1, 10)));
    }

    /// Direct product oracle: ∏_v (1 - u^{2v-1} e^y) for a single root, u-order 3.
    #[test]
    fn log_lambda_half_levels_match_product() {
        let m = cp2();
        let y = x(&m);
        let n = 3;
        let got = log_lambda_sum(std::slice::from_ref(&y), -1, Levels::HalfIntegral, n, &m).unwrap().exp_nilpotent().unwrap();
        let ey = exp_class(&m, &y, &int(1), n);
        let one = CohElement::one(&m.presentation, n);
        let expected = &(&one - &ey.shift_u(1)) * &(&one - &ey.shift_u(3));
        assert_eq!(got, expected);
        // the degree-2 part at u^1 is -x
        assert_eq!(got.component(2).u_coefficient(1), m.element(&y, 0).neg());
    }

    #[test]
    fn witten_trivial_rank_one() {
        let m = cp2();
        let t = ProjBundle::trivial(&m, 1);
        let n = 12;
        let sq = |s: i8, half: bool| scalar_character(&m, eta_like_product(s, half, 2, n));
        assert_eq!(witten_bundle_ch(WittenKind::Theta1, &t, n, &m).unwrap(), sq(1, false));
        assert_eq!(witten_bundle_ch(WittenKind::Theta2, &t, n, &m).unwrap(), sq(-1, true));
        let o1 = bundle(&m, &[int(1)], int(0));
        let th = witten_bundle_ch(WittenKind::Theta, &o1, n, &m).unwrap();
        assert_eq!(th.scalar_part(), eta_like_product(-1, false, 2, n));
    }

    #[test]
    fn decompose_line_bundle_level_zero() {
        let m = cp2();
        let o1 = bundle(&m, &[int(1)], int(0));
        let t = graded_decompose(DecompositionKind::W, &o1, 2, &m).unwrap();
        assert_eq!(t.weights_at(0), vec![0, 1]);
        assert_eq!(t.entry(0, 0).unwrap(), &CohElement::one(&m.presentation, 0));
        assert_eq!(t.entry(1, 0).unwrap(), &exp_class(&m, &x(&m), &int(1), 0).neg());
    }

    #[test]
    fn decompose_kind_b_level_zero_is_one() {
        let m = cp2();
        let e = bundle(&m, &[int(1), int(-1), int(2)], rat(1, 2));
        let t = graded_decompose(DecompositionKind::B, &e, 6, &m).unwrap();
        assert_eq!(t.weights_at(0), vec![0]);
        assert_eq!(t.entry(0, 0).unwrap(), &CohElement::one(&m.presentation, 0));
    }

    #[test]
    fn decompose_trivial_kind_b_is_scalar_product() {
        let m = cp2();
        let t = ProjBundle::trivial(&m, 1);
        let g = gch(DecompositionKind::B, &t, 10, &m).unwrap();
        assert_eq!(g, scalar_character(&m, eta_like_product(-1, true, 2, 10)));
    }

    #[test]
    fn pure_twist_kind_w() {
        let m = cp2();
        let e = bundle(&m, &[int(0)], rat(1, 2));
        let g = gch(DecompositionKind::W, &e, 2, &m).unwrap();
        let expected = &CohElement::one(&m.presentation, 0) - &exp_class(&m, &x(&m), &rat(1, 2), 0);
        assert_eq!(g.u_coefficient(0), expected);
    }

    #[test]
    fn rank_two_kind_a_resums_to_closed_form() {
        let m = cp2();
        let e = bundle(&m, &[int(1), int(-2)], rat(1, 2));
        let g = gch(DecompositionKind::A, &e, 4, &m).unwrap();
        assert_eq!(g, composite_closed_form(DecompositionKind::A, &e, 4, &m).unwrap());
    }

    #[test]
    fn kind_b_and_c_related_by_tau_plus_one() {
        let m = cp2();
        let e = bundle(&m, &[int(1), rat(1, 3)], rat(-1, 2));
        let b = gch(DecompositionKind::B, &e, 8, &m).unwrap();
        let c = gch(DecompositionKind::C, &e, 8, &m).unwrap();
        for (k, s) in b.terms() {
            assert_eq!(s.tau_plus_one(), c.coefficient(k));
        }
        assert_eq!(b.terms().len(), c.terms().len());
    }

    #[test]
    fn untwisted_gch_is_ordinary_character() {
        let m = cp2();
        let e = bundle(&m, &[int(1), int(1)], int(0));
        for kind in [DecompositionKind::W, DecompositionKind::A, DecompositionKind::B, DecompositionKind::C] {
            assert_eq!(gch(kind, &e, 6, &m).unwrap(), composite_closed_form(kind, &e, 6, &m).unwrap(), "{kind:?}");
        }
    }

    #[test]
    fn guards() {
        let m = cp2();
        let big = ProjBundle::trivial(&m, 7);
        assert!(matches!(graded_decompose(DecompositionKind::W, &big, 4, &m), Err(Error::GuardExceeded(_))));
        let e = ProjBundle::trivial(&m, 1);
        assert!(matches!(graded_decompose(DecompositionKind::W, &e, 25, &m), Err(Error::GuardExceeded(_))));
    }

    fn small_bundle() -> impl Strategy<Value = (Vec<(i64, i64)>, (i64, i64))> {
        (prop::collection::vec((-3i64..=3, 1i64..=2), 1..=3), (-2i64..=2, 1i64..=2))
    }

    fn make(m: &Manifold, (roots, (bn, bd)): &(Vec<(i64, i64)>, (i64, i64))) -> ProjBundle {
        let rs: Vec<Rational> = roots.iter().map(|&(p, q)| rat(p, q)).collect();
        bundle(m, &rs, rat(*bn, *bd))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn gch_matches_closed_form(spec in small_bundle(), k in 0usize..4) {
            let m = cp2();
            let e = make(&m, &spec);
            let kind = [DecompositionKind::W, DecompositionKind::A, DecompositionKind::B, DecompositionKind::C][k];
            let table = graded_decompose(kind, &e, 4, &m).unwrap();
            for p in 0..=4 {
                let ws = table.weights_at(p);
                prop_assert!(ws.iter().all(|w| w.unsigned_abs() as usize <= e.rank() * (1 + p)));
            }
            prop_assert_eq!(gch_from_table(&table, &m), composite_closed_form(kind, &e, 4, &m).unwrap());
        }

        #[test]
        fn witten_ch_is_multiplicative(a in small_bundle(), b in small_bundle(), k in 0usize..4) {
            let m = cp2();
            let mut b = b;
            b.1 = a.1;
            let (ea, eb) = (make(&m, &a), make(&m, &b));
            let kind = [WittenKind::Theta, WittenKind::Theta1, WittenKind::Theta2, WittenKind::Theta3][k];
            let sum = ea.direct_sum(&eb).unwrap();
            let lhs = witten_bundle_ch(kind, &sum, 6, &m).unwrap();
            let rhs = &witten_bundle_ch(kind, &ea, 6, &m).unwrap() * &witten_bundle_ch(kind, &eb, 6, &m).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn virtual_ranks(spec in small_bundle()) {
            let m = cp2();
            let e = make(&m, &spec);
            let l = e.rank() as i64;
            prop_assert_eq!(virtual_rank(&ch(&e, &m, 2)), int(l));
            prop_assert_eq!(virtual_rank(&composite_closed_form(DecompositionKind::W, &e, 2, &m).unwrap()), int(0));
            prop_assert_eq!(virtual_rank(&composite_closed_form(DecompositionKind::A, &e, 2, &m).unwrap()), int(1 << l));
            prop_assert_eq!(virtual_rank(&witten_bundle_ch(WittenKind::Theta2, &e, 2, &m).unwrap()), int(1));
        }
    }
}
