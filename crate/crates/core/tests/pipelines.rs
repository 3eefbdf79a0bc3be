//! End-to-end genus values on CP² and CP⁴ against closed forms built from
//! divisor sums, written independently of the theta-factor machinery.
//!
//! On CP² every class is a multiple of `x` and only the `x²` coefficient
//! integrates, so each even factor contributes `1 + h·w² + …` and the genus is
//! `3·G₂ + h·Σ w_j²` with `G₂ = -1/24 + Σ σ₁(n) qⁿ`.

use ellgen::bundleops::ProjBundle;
use ellgen::cohring::{builtin_manifold, LinearClass, Manifold};
use ellgen::genera::{a_hat_integral, pell, witten_genus, GenusKind, Method, Normalization};
use ellgen::qseries::{int, rat};
use ellgen::{HalfQSeries, Rational};
use proptest::prelude::*;

fn divisors(n: i64) -> impl Iterator<Item = i64> {
    (1..=n).filter(move |d| n % d == 0)
}

/// `G₂` in powers of `u = q^{1/2}`.
fn g2(order: usize) -> Vec<Rational> {
    (0..=order as i64)
        .map(|n| match n {
            0 => rat(-1, 24),
            n if n % 2 == 0 => int(divisors(n / 2).sum()),
            _ => int(0),
        })
        .collect()
}

/// `w²`-coefficient of the log of each bundle factor.
fn h(kind: GenusKind, order: usize) -> Vec<Rational> {
    (0..=order as i64)
        .map(|n| match (kind, n) {
            (GenusKind::PEll1, 0) => rat(1, 8),
            (GenusKind::PEll1, n) if n % 2 == 0 => int(divisors(n / 2).map(|k| if k % 2 == 1 { k } else { -k }).sum()),
            (GenusKind::PEll1, _) => int(0),
            (_, 0) => int(0),
            // Σ over u^{(2j-1)k}: divisors k with odd cofactor
            (GenusKind::PEll2, n) => int(-divisors(n).filter(|k| (n / k) % 2 == 1).sum::<i64>()),
            (GenusKind::PEll3, n) => int(divisors(n).filter(|k| (n / k) % 2 == 1).map(|k| if k % 2 == 1 { k } else { -k }).sum()),
            _ => unreachable!(),
        })
        .collect()
}

fn cp2() -> Manifold {
    builtin_manifold("CP2").unwrap()
}

fn bundle(m: &Manifold, roots: &[Rational], b: Rational) -> ProjBundle {
    let x = |c: &Rational| LinearClass::from_coeffs(&m.presentation, vec![c.clone()]).unwrap();
    ProjBundle::new(roots.iter().map(x).collect(), x(&b)).unwrap()
}

/// Closed form for CP² with shifted roots `w_j = c_j x`, theta normalization.
fn oracle(kind: GenusKind, cs: &[Rational], order: usize) -> HalfQSeries {
    match kind {
        GenusKind::PEll => {
            let mut v = vec![int(0); order + 1];
            if cs.len() == 2 {
                v[0] = &cs[0] * &cs[1];
            }
            HalfQSeries::from_coeffs(v)
        }
        _ => {
            let s: Rational = cs.iter().map(|c| c * c).sum();
            let g = g2(order);
            let hk = h(kind, order);
            HalfQSeries::from_coeffs(g.iter().zip(&hk).map(|(a, b)| a * int(3) + b * &s).collect())
        }
    }
}

#[test]
fn a_hat_of_projective_spaces() {
    // 1 - p₁/24 and (7p₁² - 4p₂)/5760 with p = (1+x²)^{n+1}
    assert_eq!(a_hat_integral(&cp2()), rat(-3, 24));
    assert_eq!(a_hat_integral(&builtin_manifold("CP4").unwrap()), rat(7 * 25 - 4 * 10, 5760));
}

#[test]
fn witten_genus_of_cp2() {
    let w = witten_genus(&cp2(), 30);
    let want: Vec<Rational> = g2(30).iter().map(|c| c * int(3)).collect();
    assert_eq!(w, HalfQSeries::from_coeffs(want));
}

#[test]
fn line_bundle_o1_all_kinds() {
    let m = cp2();
    let e = bundle(&m, &[int(1)], int(0));
    for kind in GenusKind::PROJECTIVE {
        for method in [Method::Theta, Method::Definition] {
            let got = pell(&m, &e, kind, method, 20, Normalization::default()).unwrap().series;
            assert_eq!(got, oracle(kind, &[int(1)], 20), "{kind} {method:?}");
        }
    }
}

#[test]
fn rank_two_pell_is_a_constant() {
    let m = cp2();
    let e = bundle(&m, &[int(2), int(-1)], rat(1, 2));
    let got = pell(&m, &e, GenusKind::PEll, Method::Definition, 10, Normalization::default()).unwrap().series;
    assert_eq!(got, oracle(GenusKind::PEll, &[rat(5, 2), rat(-1, 2)], 10));
    let lit = pell(&m, &e, GenusKind::PEll, Method::Definition, 10, Normalization::Literal).unwrap().series;
    assert_eq!(lit, got);
}

#[test]
fn literal_normalization_factors() {
    let m = cp2();
    let e = bundle(&m, &[int(1), int(0), int(-1)], int(0));
    let th = |k| pell(&m, &e, k, Method::Theta, 8, Normalization::ThetaQuotient).unwrap().series;
    let li = |k| pell(&m, &e, k, Method::Definition, 8, Normalization::Literal).unwrap().series;
    assert_eq!(li(GenusKind::PEll1), th(GenusKind::PEll1).scale(&int(8)));
    assert_eq!(li(GenusKind::PEll2), th(GenusKind::PEll2));
    assert_eq!(li(GenusKind::PEll3), th(GenusKind::PEll3));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3, prop_oneof![Just(1i64), Just(2i64)]).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cp2_bundles_match_divisor_sum_oracle(
        roots in prop::collection::vec(small_rational(), 1..=3),
        b in small_rational(),
        k in 0usize..4,
    ) {
        let m = cp2();
        let kind = GenusKind::PROJECTIVE[k];
        let e = bundle(&m, &roots, b.clone());
        let cs: Vec<Rational> = roots.iter().map(|r| r + &b).collect();
        let got = pell(&m, &e, kind, Method::Theta, 12, Normalization::default()).unwrap().series;
        prop_assert_eq!(got, oracle(kind, &cs, 12));
    }
}
