//! Genus integrals: Â, the Witten genus, the four projective elliptic genera
//! and their pseudodifferential counterparts.
//!
//! Each projective genus has two independent pipelines. The theta pipeline
//! integrates a product of normalized theta quotients over Chern roots. The
//! definition pipeline builds the prefactor, `Â`, `Ch Θ(T_C Z)`, the square
//! root of the determinant and the graded twisted Chern character from the
//! bundle expansion, and integrates their product.

pub mod cancellation;

use std::fmt;

use num_traits::{One, Zero};

use crate::bundleops::{self, det_sqrt_ch, gch, DecompositionKind, Levels, ProjBundle};
use crate::cohring::{CohElement, LinearClass, Manifold};
use crate::error::{Error, Result};
use crate::modcheck::GroupSpec;
use crate::par;
use crate::qseries::{eta_like_product, int, HalfQSeries, Rational};
use crate::theta::{elliptic_factor, FactorSeries, ThetaKind};
use crate::univariate;

pub use cancellation::{cancellation12_check, cancellation12_check_with, Cancellation12, ChernReading};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenusKind {
    AHat,
    Witten,
    PEll,
    PEll1,
    PEll2,
    PEll3,
}

impl GenusKind {
    pub const PROJECTIVE: [GenusKind; 4] = [GenusKind::PEll, GenusKind::PEll1, GenusKind::PEll2, GenusKind::PEll3];

    pub fn name(self) -> &'static str {
        match self {
            GenusKind::AHat => "ahat",
            GenusKind::Witten => "witten",
            GenusKind::PEll => "pell",
            GenusKind::PEll1 => "pell1",
            GenusKind::PEll2 => "pell2",
            GenusKind::PEll3 => "pell3",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "ahat" => GenusKind::AHat,
            "witten" => GenusKind::Witten,
            "pell" => GenusKind::PEll,
            "pell1" => GenusKind::PEll1,
            "pell2" => GenusKind::PEll2,
            "pell3" => GenusKind::PEll3,
            _ => return Err(Error::Input(format!("unknown genus `{s}`"))),
        })
    }

    fn decomposition(self) -> Option<DecompositionKind> {
        match self {
            GenusKind::PEll => Some(DecompositionKind::W),
            GenusKind::PEll1 => Some(DecompositionKind::A),
            GenusKind::PEll2 => Some(DecompositionKind::B),
            GenusKind::PEll3 => Some(DecompositionKind::C),
            _ => None,
        }
    }

    fn group(self) -> Option<GroupSpec> {
        match self {
            GenusKind::AHat => None,
            GenusKind::Witten | GenusKind::PEll => Some(GroupSpec::SL2Z),
            GenusKind::PEll1 => Some(GroupSpec::Gamma0_2),
            GenusKind::PEll2 => Some(GroupSpec::GammaUp0_2),
            GenusKind::PEll3 => Some(GroupSpec::GammaTheta),
        }
    }
}

impl fmt::Display for GenusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Closed-form product of theta quotients over Chern roots.
    Theta,
    /// Literal prefactor · ∫ Â Ch Θ(T_C Z) √det · GCh.
    Definition,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Theta => "theta_product",
            Method::Definition => "definition",
        }
    }
}

/// Overall constant convention for `PEll` and `PEll₁`.
///
/// The literal integrals carry `√det Ē ⊗ (Λ^ev ∓ Λ^odd)E`, whose character is
/// `∏ (e^{-w/2} ∓ e^{w/2})`. Against the theta quotients this is
/// `(-1)^l ∏ 2 sinh(w/2)` and `2^l ∏ cosh(w/2)` respectively. `PEll₂` and
/// `PEll₃` agree in both conventions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// `∏ θ(w)/(w θ'(0))` and `∏ θ₁(w)/θ₁(0)` over bundle roots.
    #[default]
    ThetaQuotient,
    /// The literal integrals, `(-1)^l` resp. `2^l` times the quotients.
    Literal,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::ThetaQuotient => "theta_quotient",
            Normalization::Literal => "literal",
        }
    }

    /// Literal value divided by theta-quotient value.
    pub fn literal_factor(kind: GenusKind, rank: usize) -> Rational {
        match kind {
            GenusKind::PEll => int(if rank.is_multiple_of(2) { 1 } else { -1 }),
            GenusKind::PEll1 => int(1i64 << rank),
            _ => int(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenusReport {
    pub kind: GenusKind,
    pub manifold: String,
    pub bundle: Option<String>,
    pub method: Method,
    pub normalization: Normalization,
    pub series: HalfQSeries,
    /// `2r = dim/2`.
    pub weight: u32,
    /// Set when the modularity hypothesis holds for this input.
    pub group: Option<GroupSpec>,
}

/// Largest z-degree any factor needs on `m`.
fn slot_degree(m: &Manifold) -> usize {
    m.dimension() as usize / 2
}

fn apply_factor(f: &FactorSeries, classes: &[LinearClass], m: &Manifold, order: usize) -> CohElement {
    classes.iter().fold(CohElement::one(&m.presentation, order), |acc, c| &acc * &f.eval_at(&m.element(c, order)))
}

/// `Â(Z) = ∏ x/(e^{x/2} - e^{-x/2})` over the tangent roots.
pub fn a_hat_class(m: &Manifold, order: usize) -> CohElement {
    let f = FactorSeries::from_rational(&univariate::a_hat_factor(slot_degree(m)), order);
    apply_factor(&f, &m.tangent_roots, m, order)
}

pub fn a_hat_integral(m: &Manifold) -> Rational {
    a_hat_class(m, 0).integrate().constant_term().clone()
}

/// `∏ x θ'(0)/θ(x)` over the tangent roots.
pub fn tangent_theta_class(m: &Manifold, order: usize) -> CohElement {
    apply_factor(&elliptic_factor(ThetaKind::Theta, slot_degree(m), order), &m.tangent_roots, m, order)
}

/// The Witten genus with the reduced Witten bundle.
pub fn witten_genus(m: &Manifold, order: usize) -> HalfQSeries {
    tangent_theta_class(m, order).integrate()
}

/// The bundle part of the theta pipeline, in the theta-quotient normalization.
pub fn bundle_theta_class(kind: GenusKind, e: &ProjBundle, m: &Manifold, order: usize) -> Result<CohElement> {
    let d = slot_degree(m);
    let f = match kind {
        GenusKind::PEll => {
            // 1/(z θ'(0)/θ(z)) times z, i.e. θ(z)/θ'(0); one extra degree survives the shift
            let inv = elliptic_factor(ThetaKind::Theta, d + 1, order).invert()?.shift_z();
            FactorSeries::from_coeffs(inv.coeffs()[..=d].to_vec())
        }
        GenusKind::PEll1 => elliptic_factor(ThetaKind::Theta1, d, order),
        GenusKind::PEll2 => elliptic_factor(ThetaKind::Theta2, d, order),
        GenusKind::PEll3 => elliptic_factor(ThetaKind::Theta3, d, order),
        _ => return Err(Error::Input(format!("{kind} is not a projective genus"))),
    };
    Ok(apply_factor(&f, &e.shifted_roots(), m, order))
}

/// `Ch Θ(T_C Z)` for `T_C Z = Σ (L_i + L̄_i) - C^{2s-4r}` over `s` stable roots.
pub fn witten_bundle_tangent_ch(m: &Manifold, order: usize) -> Result<CohElement> {
    let mut both: Vec<LinearClass> = m.tangent_roots.clone();
    both.extend(m.tangent_roots.iter().map(LinearClass::neg));
    // ⊗ S_t = 1/⊗ Λ_{-t}, so the log flips sign
    let log = bundleops::log_lambda_sum(&both, -1, Levels::Integral, order, m)?.neg();
    let excess = 2 * m.tangent_roots.len() as i64 - 4 * i64::from(m.r());
    Ok(log.exp_nilpotent()?.mul_series(&eta_like_product(-1, false, excess, order)))
}

fn prefactor(kind: GenusKind, r: u32, l: usize, order: usize) -> HalfQSeries {
    let (r, l) = (i64::from(r), l as i64);
    let eta = |s: i8, half: bool, e: i64| eta_like_product(s, half, e, order);
    match kind {
        GenusKind::PEll => eta(-1, false, 4 * r - 2 * l),
        GenusKind::PEll1 => eta(-1, false, 4 * r).mul(&eta(1, false, -2 * l)),
        GenusKind::PEll2 => eta(-1, false, 4 * r).mul(&eta(-1, true, -2 * l)),
        GenusKind::PEll3 => eta(-1, false, 4 * r).mul(&eta(1, true, -2 * l)),
        GenusKind::Witten => eta(-1, false, 4 * r),
        GenusKind::AHat => HalfQSeries::one(order),
    }
}

/// The literal definition integral, before any renormalization.
pub fn pell_definition_literal(kind: GenusKind, e: &ProjBundle, m: &Manifold, order: usize) -> Result<HalfQSeries> {
    let dk = kind.decomposition().ok_or_else(|| Error::Input(format!("{kind} is not a projective genus")))?;
    let mut integrand = &a_hat_class(m, order) * &witten_bundle_tangent_ch(m, order)?;
    if matches!(kind, GenusKind::PEll | GenusKind::PEll1) {
        integrand = &integrand * &det_sqrt_ch(e, m, order);
    }
    integrand = &integrand * &gch(dk, e, order, m)?;
    Ok(prefactor(kind, m.r(), e.rank(), order).mul(&integrand.integrate()))
}

/// Whether `p₁(TZ) = 𝔭₁(E)` holds in the ring.
pub fn p1_matches(m: &Manifold, e: &ProjBundle) -> bool {
    m.p1(0) == e.p1(m, 0)
}

/// A projective elliptic genus by the chosen method and normalization.
pub fn pell(m: &Manifold, e: &ProjBundle, kind: GenusKind, method: Method, order: usize, norm: Normalization) -> Result<GenusReport> {
    let factor = Normalization::literal_factor(kind, e.rank());
    let series = match method {
        Method::Theta => {
            let s = (&tangent_theta_class(m, order) * &bundle_theta_class(kind, e, m, order)?).integrate();
            match norm {
                Normalization::ThetaQuotient => s,
                Normalization::Literal => s.scale(&factor),
            }
        }
        Method::Definition => {
            let s = pell_definition_literal(kind, e, m, order)?;
            match norm {
                Normalization::ThetaQuotient => s.scale(&factor.recip()),
                Normalization::Literal => s,
            }
        }
    };
    Ok(GenusReport {
        kind,
        manifold: m.name.clone(),
        bundle: Some(e.describe(m)),
        method,
        normalization: norm,
        series,
        weight: m.dimension() / 2,
        group: if p1_matches(m, e) { kind.group() } else { None },
    })
}

/// Any genus kind; the bundle is ignored for `AHat` and `Witten`.
pub fn compute(kind: GenusKind, m: &Manifold, e: Option<&ProjBundle>, method: Method, order: usize, norm: Normalization) -> Result<GenusReport> {
    let base = |series: HalfQSeries, group: Option<GroupSpec>| GenusReport {
        kind,
        manifold: m.name.clone(),
        bundle: None,
        method,
        normalization: norm,
        series,
        weight: m.dimension() / 2,
        group,
    };
    match kind {
        GenusKind::AHat => Ok(base(HalfQSeries::constant(a_hat_integral(m), 0), None)),
        GenusKind::Witten => {
            let series = match method {
                Method::Theta => witten_genus(m, order),
                Method::Definition => {
                    let integrand = &a_hat_class(m, order) * &witten_bundle_tangent_ch(m, order)?;
                    prefactor(kind, m.r(), 0, order).mul(&integrand.integrate())
                }
            };
            let group = m.p1(0).is_zero().then_some(GroupSpec::SL2Z);
            Ok(base(series, group))
        }
        _ => {
            let e = e.ok_or_else(|| Error::Input(format!("{kind} needs a bundle")))?;
            pell(m, e, kind, method, order, norm)
        }
    }
}

/// Computes many projective genera, data-parallel across inputs.
pub fn batch_pell(jobs: &[(Manifold, ProjBundle, GenusKind)], method: Method, order: usize) -> Vec<Result<GenusReport>> {
    par::map(jobs, |(m, e, k)| pell(m, e, *k, method, order, Normalization::default()))
}

/// A pseudodifferential operator, reduced to its associated bundle `E`.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudoDiffSpec {
    pub manifold: Manifold,
    pub bundle: ProjBundle,
}

impl PseudoDiffSpec {
    /// The spin^c Dirac operator: `E` is the trivial line.
    pub fn spin_c_dirac(m: &Manifold) -> Self {
        Self { manifold: m.clone(), bundle: ProjBundle::trivial(m, 1) }
    }
}

/// `Ell_kind(P) = PEll_kind(Z, E)`.
pub fn pseudodiff_genus(spec: &PseudoDiffSpec, kind: GenusKind, order: usize, norm: Normalization) -> Result<GenusReport> {
    pell(&spec.manifold, &spec.bundle, kind, Method::Theta, order, norm)
}

/// One row of [`classical_recovery_check`]: the sign `s` with
/// `PEll_literal = s · Ell_classical`, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalRecovery {
    pub rows: Vec<(GenusKind, Option<i64>)>,
}

impl ClassicalRecovery {
    pub fn matches(&self) -> bool {
        self.rows.iter().all(|(_, s)| s.is_some())
    }

    pub fn sign(&self, kind: GenusKind) -> Option<i64> {
        self.rows.iter().find(|(k, _)| *k == kind).and_then(|(_, s)| *s)
    }
}

/// Compares the literal projective genera at `b = 0` with the classical
/// bundle-twisted elliptic genera of the underlying real bundle, built from
/// `Δ^± ` characters and reduced Witten bundles.
pub fn classical_recovery_check(m: &Manifold, v: &ProjBundle, order: usize) -> Result<ClassicalRecovery> {
    if !v.twist().is_zero() {
        return Err(Error::Input("classical recovery needs b = 0".into()));
    }
    let l = v.rank() as i64;
    let pres = &m.presentation;
    let base = &a_hat_class(m, order) * &witten_bundle_tangent_ch(m, order)?;
    let base = base.mul_series(&eta_like_product(-1, false, 4 * i64::from(m.r()), order));
    // Δ⁺ ∓ Δ⁻ has character ∏ (e^{w/2} ∓ e^{-w/2})
    let spinor = |s: i64| {
        v.roots().iter().fold(CohElement::one(pres, order), |acc, w| {
            let half = m.element(w, order).scale(&Rational::new(1.into(), 2.into()));
            let plus = half.exp_nilpotent().expect("nilpotent");
            let minus = half.neg().exp_nilpotent().expect("nilpotent");
            &acc * &(&plus + &minus.scale(&int(s)))
        })
    };
    let mut rows = Vec::new();
    for kind in GenusKind::PROJECTIVE {
        let (wk, s, reduce) = match kind {
            GenusKind::PEll => (bundleops::WittenKind::Theta, Some(-1), eta_like_product(-1, false, -2 * l, order)),
            GenusKind::PEll1 => (bundleops::WittenKind::Theta1, Some(1), eta_like_product(1, false, -2 * l, order)),
            GenusKind::PEll2 => (bundleops::WittenKind::Theta2, None, eta_like_product(-1, true, -2 * l, order)),
            _ => (bundleops::WittenKind::Theta3, None, eta_like_product(1, true, -2 * l, order)),
        };
        let mut integrand = &base * &bundleops::witten_bundle_ch(wk, v, order, m)?.mul_series(&reduce);
        if let Some(s) = s {
            integrand = &integrand * &spinor(s);
        }
        let classical = integrand.integrate();
        let literal = pell(m, v, kind, Method::Definition, order, Normalization::Literal)?.series;
        let expected = if kind == GenusKind::PEll && l % 2 == 1 { -1 } else { 1 };
        let sign = [expected, -expected].into_iter().find(|&s| literal == classical.scale(&int(s)));
        rows.push((kind, sign));
    }
    Ok(ClassicalRecovery { rows })
}

/// The leading nonzero coefficient index of a series, if any.
pub fn valuation(s: &HalfQSeries) -> Option<usize> {
    s.coeffs().iter().position(|c| !c.is_zero())
}

/// `true` if `s` is the constant one series.
pub fn is_one(s: &HalfQSeries) -> bool {
    s.constant_term().is_one() && s.coeffs().iter().skip(1).all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohring::builtin_manifold;
    use crate::qseries::rat;
    use proptest::prelude::*;

    fn cp2() -> Manifold {
        builtin_manifold("CP2").unwrap()
    }

    fn line(m: &Manifold, c: Rational, b: Rational) -> ProjBundle {
        let x = LinearClass::generator(&m.presentation, 0).unwrap();
        ProjBundle::new(vec![x.scale(&c)], x.scale(&b)).unwrap()
    }

    fn bundle(m: &Manifold, roots: &[Rational], b: Rational) -> ProjBundle {
        let x = LinearClass::generator(&m.presentation, 0).unwrap();
        ProjBundle::new(roots.iter().map(|c| x.scale(c)).collect(), x.scale(&b)).unwrap()
    }

    #[test]
    fn a_hat_values() {
        assert_eq!(a_hat_integral(&cp2()), rat(-1, 8));
        assert_eq!(a_hat_integral(&builtin_manifold("CP4").unwrap()), rat(3, 128));
        let zero_roots = Manifold::new("flat", cp2().presentation.as_ref().clone(), vec![LinearClass::zero(&cp2().presentation); 3]).unwrap();
        assert_eq!(a_hat_integral(&zero_roots), int(0));
    }

    #[test]
    fn a_hat_is_multiplicative_over_root_lists() {
        let m = builtin_manifold("CP4").unwrap();
        let x = LinearClass::generator(&m.presentation, 0).unwrap();
        let roots_a = vec![x.clone(), x.scale(&int(2))];
        let roots_b = vec![x.scale(&rat(-1, 3)), x.clone(), x.clone()];
        let mk = |rs: Vec<LinearClass>| Manifold::new("t", m.presentation.as_ref().clone(), rs).unwrap();
        let joint = mk([roots_a.clone(), roots_b.clone()].concat());
        let pa = mk(roots_a);
        let pb = mk(roots_b);
        assert_eq!(a_hat_class(&joint, 0), &a_hat_class(&pa, 0) * &a_hat_class(&pb, 0));
    }

    #[test]
    fn witten_genus_degenerates_to_a_hat() {
        let m = cp2();
        let w = witten_genus(&m, 8);
        assert_eq!(w.constant_term(), &rat(-1, 8));
        let d = compute(GenusKind::Witten, &m, None, Method::Definition, 8, Normalization::default()).unwrap();
        assert_eq!(d.series, w);
    }

    #[test]
    fn example_line_bundle_on_cp2() {
        let m = cp2();
        let o1 = line(&m, int(1), int(0));
        let n = 12;
        let t = |k| pell(&m, &o1, k, Method::Theta, n, Normalization::default()).unwrap().series;
        assert!(t(GenusKind::PEll).is_zero());
        let p2 = t(GenusKind::PEll2);
        assert_eq!((p2.coeff(0), p2.coeff(1)), (Some(&rat(-1, 8)), Some(&int(-1))));
        let p3 = t(GenusKind::PEll3);
        assert_eq!((p3.coeff(0), p3.coeff(1)), (Some(&rat(-1, 8)), Some(&int(1))));
        assert_eq!(p2.tau_plus_one(), p3);
        let p1 = t(GenusKind::PEll1);
        assert_eq!(p1.coeff(1), Some(&int(0)));
        assert_eq!(p1.coeff(2), Some(&int(4)));
    }

    #[test]
    fn methods_agree_on_small_cases() {
        let m = cp2();
        for e in [line(&m, int(1), int(0)), line(&m, int(-1), rat(1, 2)), bundle(&m, &[int(1), int(2)], rat(1, 2))] {
            for kind in GenusKind::PROJECTIVE {
                for norm in [Normalization::ThetaQuotient, Normalization::Literal] {
                    let a = pell(&m, &e, kind, Method::Theta, 8, norm).unwrap();
                    let b = pell(&m, &e, kind, Method::Definition, 8, norm).unwrap();
                    assert_eq!(a.series, b.series, "{kind} {norm:?}");
                }
            }
        }
    }

    #[test]
    fn matched_p1_bundle_gives_zero_pell() {
        let m = cp2();
        let e = bundle(&m, &[int(1), int(1), int(1)], int(0));
        assert!(p1_matches(&m, &e));
        let r = pell(&m, &e, GenusKind::PEll, Method::Theta, 16, Normalization::default()).unwrap();
        assert!(r.series.is_zero());
        assert_eq!(r.group, Some(GroupSpec::SL2Z));
        assert_eq!(r.weight, 2);
        let o1 = line(&m, int(1), int(0));
        assert_eq!(pell(&m, &o1, GenusKind::PEll2, Method::Theta, 4, Normalization::default()).unwrap().group, None);
    }

    #[test]
    fn trivial_line_pseudodiff() {
        let m = cp2();
        let spec = PseudoDiffSpec::spin_c_dirac(&m);
        let w = witten_genus(&m, 12);
        let g = |k, norm| pseudodiff_genus(&spec, k, 12, norm).unwrap().series;
        assert!(g(GenusKind::PEll, Normalization::default()).is_zero());
        assert_eq!(g(GenusKind::PEll2, Normalization::default()), w);
        assert_eq!(g(GenusKind::PEll3, Normalization::default()), w);
        assert_eq!(g(GenusKind::PEll1, Normalization::default()), w);
        assert_eq!(g(GenusKind::PEll1, Normalization::Literal), w.scale(&int(2)));
    }

    #[test]
    fn classical_recovery() {
        let m = cp2();
        let rank2 = ProjBundle::trivial(&m, 2);
        let r = classical_recovery_check(&m, &rank2, 6).unwrap();
        assert!(r.matches());
        let o1 = line(&m, int(1), int(0));
        let two = o1.direct_sum(&o1).unwrap();
        let r = classical_recovery_check(&m, &two, 6).unwrap();
        assert!(r.matches());
        assert_eq!(r.sign(GenusKind::PEll), Some(1));
        let r = classical_recovery_check(&m, &o1, 6).unwrap();
        assert_eq!(r.sign(GenusKind::PEll), Some(-1));
        assert!(classical_recovery_check(&m, &line(&m, int(1), rat(1, 2)), 4).is_err());
    }

    #[test]
    fn batch_matches_sequential() {
        let m = cp2();
        let jobs: Vec<_> = GenusKind::PROJECTIVE.iter().map(|&k| (m.clone(), line(&m, int(1), int(0)), k)).collect();
        let out = batch_pell(&jobs, Method::Theta, 6);
        for ((m, e, k), r) in jobs.iter().zip(out) {
            assert_eq!(r.unwrap(), pell(m, e, *k, Method::Theta, 6, Normalization::default()).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn half_period_relation(roots in prop::collection::vec((-3i64..=3, 1i64..=2), 1..=3), b in -2i64..=2) {
            let m = cp2();
            let rs: Vec<Rational> = roots.iter().map(|&(p, q)| rat(p, q)).collect();
            let e = bundle(&m, &rs, rat(b, 2));
            let p2 = pell(&m, &e, GenusKind::PEll2, Method::Theta, 10, Normalization::default()).unwrap().series;
            let p3 = pell(&m, &e, GenusKind::PEll3, Method::Theta, 10, Normalization::default()).unwrap().series;
            prop_assert_eq!(p2.tau_plus_one(), p3);
        }

        #[test]
        fn pell_vanishes_with_trivial_summand(roots in prop::collection::vec((-3i64..=3, 1i64..=2), 0..=2)) {
            let m = cp2();
            let mut rs: Vec<Rational> = roots.iter().map(|&(p, q)| rat(p, q)).collect();
            rs.push(int(0));
            let e = bundle(&m, &rs, int(0));
            prop_assert!(pell(&m, &e, GenusKind::PEll, Method::Theta, 8, Normalization::default()).unwrap().series.is_zero());
        }
    }
}
