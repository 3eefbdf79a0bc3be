//! Modular behavior checks: exact `τ ↦ τ+1` comparisons on coefficients and
//! numeric `f(gτ) = χ(g) (cτ+d)^k f(τ)` checks at sample points.
//!
//! Numeric checks are falsification tests. The character `χ(g)` is measured
//! as the common ratio, never assumed.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::par;
use crate::qseries::HalfQSeries;
use crate::theta;

/// Default sample points in the upper half plane.
pub fn default_samples() -> Vec<Complex64> {
    vec![Complex64::new(0.0, 1.1), Complex64::new(0.3, 1.2)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SL2Matrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SL2Matrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::Input(format!("[[{a},{b}],[{c},{d}]] has determinant {}", a * d - b * c)));
        }
        Ok(Self { a, b, c, d })
    }

    pub const IDENTITY: SL2Matrix = SL2Matrix { a: 1, b: 0, c: 0, d: 1 };
    pub const S: SL2Matrix = SL2Matrix { a: 0, b: -1, c: 1, d: 0 };
    pub const T: SL2Matrix = SL2Matrix { a: 1, b: 1, c: 0, d: 1 };

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// Product of a word such as `"ST2ST"` in `S` and `T` (digits are powers).
    pub fn word(w: &str) -> Result<Self> {
        let mut out = Self::IDENTITY;
        let chars: Vec<char> = w.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let g = match chars[i] {
                'S' => Self::S,
                'T' => Self::T,
                c => return Err(Error::Input(format!("bad letter `{c}` in word `{w}`"))),
            };
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let power: u32 = if start == i { 1 } else { chars[start..i].iter().collect::<String>().parse().unwrap() };
            for _ in 0..power {
                out = out.mul(&g);
            }
        }
        Ok(out)
    }

    /// `(aτ + b)/(cτ + d)`.
    pub fn apply(&self, tau: Complex64) -> Complex64 {
        (tau * self.a as f64 + self.b as f64) / (tau * self.c as f64 + self.d as f64)
    }

    /// `cτ + d`.
    pub fn automorphy(&self, tau: Complex64) -> Complex64 {
        tau * self.c as f64 + self.d as f64
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    SL2Z,
    Gamma0_2,
    GammaUp0_2,
    GammaTheta,
}

impl GroupSpec {
    pub fn name(self) -> &'static str {
        match self {
            GroupSpec::SL2Z => "SL2Z",
            GroupSpec::Gamma0_2 => "Gamma0_2",
            GroupSpec::GammaUp0_2 => "Gamma_up0_2",
            GroupSpec::GammaTheta => "GammaTheta",
        }
    }

    /// Generators as `S`/`T` words.
    pub fn generator_words(self) -> &'static [&'static str] {
        match self {
            GroupSpec::SL2Z => &["S", "T"],
            GroupSpec::Gamma0_2 => &["T", "ST2ST"],
            GroupSpec::GammaUp0_2 => &["STS", "T2STS"],
            GroupSpec::GammaTheta => &["S", "T2"],
        }
    }

    pub fn generators(self) -> Vec<(String, SL2Matrix)> {
        self.generator_words().iter().map(|w| (w.to_string(), SL2Matrix::word(w).expect("valid word"))).collect()
    }

    pub fn contains(self, g: &SL2Matrix) -> bool {
        let m = |x: i64| x.rem_euclid(2);
        match self {
            GroupSpec::SL2Z => true,
            GroupSpec::Gamma0_2 => m(g.c) == 0,
            GroupSpec::GammaUp0_2 => m(g.b) == 0,
            GroupSpec::GammaTheta => {
                let r = (m(g.a), m(g.b), m(g.c), m(g.d));
                r == (1, 0, 0, 1) || r == (0, 1, 1, 0)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `tau_plus_one(f) == expected`, or `== f` when no target is given.
pub fn check_t_exact(f: &HalfQSeries, expected: Option<&HalfQSeries>) -> bool {
    let t = f.tau_plus_one();
    match expected {
        Some(e) => t == *e,
        None => t == *f,
    }
}

/// A named pass/fail line with its measured residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, residual: f64, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, residual, detail: detail.into() }
    }
}

/// `u = e^{πiτ}`.
pub fn u_of(tau: Complex64) -> Complex64 {
    (Complex64::i() * PI * tau).exp()
}

/// `q^c · f(τ)` and its tail bound; errors if the bound reaches `limit`.
fn eval_with(f: &HalfQSeries, tau: Complex64, q_power: f64, limit: f64) -> Result<Complex64> {
    if tau.im <= 0.0 {
        return Err(Error::InvalidTau(tau.im));
    }
    let (v, bound) = f.eval_numeric(u_of(tau))?;
    if bound >= limit {
        return Err(Error::TailTooLarge { tau: format!("{tau}"), bound, limit });
    }
    Ok(v * (Complex64::i() * 2.0 * PI * q_power * tau).exp())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleResult {
    pub tau: Complex64,
    /// `f(gτ)`
    pub lhs: Complex64,
    /// `(cτ+d)^k h(τ)`
    pub rhs: Complex64,
}

impl SampleResult {
    pub fn ratio(&self, tol: f64) -> Option<Complex64> {
        (self.rhs.norm() >= tol).then(|| self.lhs / self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericReport {
    pub generator: String,
    pub matrix: SL2Matrix,
    pub samples: Vec<SampleResult>,
    /// Measured character, when some sample has a nonzero right side.
    pub chi: Option<Complex64>,
    pub max_deviation: f64,
    pub passed: bool,
}

fn samples_for(f: &HalfQSeries, h: &HalfQSeries, g: SL2Matrix, weight: i32, taus: &[Complex64], tol: f64, q_power: f64) -> Result<Vec<SampleResult>> {
    par::try_map(taus, |&tau| {
        let lhs = eval_with(f, g.apply(tau), q_power, tol / 10.0)?;
        let rhs = g.automorphy(tau).powi(weight) * eval_with(h, tau, q_power, tol / 10.0)?;
        Ok(SampleResult { tau, lhs, rhs })
    })
}

/// `f(gτ) / ((cτ+d)^k f(τ))` must be one common unit-modulus constant.
pub fn check_numeric(f: &HalfQSeries, g: SL2Matrix, weight: i32, taus: &[Complex64], tol: f64) -> Result<NumericReport> {
    let samples = samples_for(f, f, g, weight, taus, tol, 0.0)?;
    let ratios: Vec<Complex64> = samples.iter().filter_map(|s| s.ratio(tol)).collect();
    let chi = ratios.first().copied();
    let mut dev: f64 = 0.0;
    for s in &samples {
        match s.ratio(tol) {
            Some(r) => {
                dev = dev.max((r - chi.unwrap()).norm()).max((r.norm() - 1.0).abs());
            }
            // both sides must then vanish together
            None => dev = dev.max(s.lhs.norm()),
        }
    }
    Ok(NumericReport { generator: g.to_string(), matrix: g, samples, chi, max_deviation: dev, passed: dev < tol })
}

/// `|f(gτ) - q-prefactor · (cτ+d)^k h(τ)| < tol` at every sample, with an
/// optional common prefactor `q^{c}` applied to both series.
pub fn check_pair(f: &HalfQSeries, h: &HalfQSeries, g: SL2Matrix, weight: i32, taus: &[Complex64], tol: f64, q_power: f64) -> Result<NumericReport> {
    let samples = samples_for(f, h, g, weight, taus, tol, q_power)?;
    let dev = samples.iter().map(|s| (s.lhs - s.rhs).norm()).fold(0.0, f64::max);
    let chi = samples.iter().find_map(|s| s.ratio(tol));
    Ok(NumericReport { generator: g.to_string(), matrix: g, samples, chi, max_deviation: dev, passed: dev < tol })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupReport {
    pub group: GroupSpec,
    pub generators: Vec<(String, NumericReport)>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.generators.iter().all(|(_, r)| r.passed)
    }
}

pub fn check_group(f: &HalfQSeries, group: GroupSpec, weight: i32, taus: &[Complex64], tol: f64) -> Result<GroupReport> {
    let gens = group.generators();
    let reports = par::try_map(&gens, |(w, g)| Ok((w.clone(), check_numeric(f, *g, weight, taus, tol)?)))?;
    Ok(GroupReport { group, generators: reports })
}

/// Scans prefactor exponents `k/24`, `|k| ≤ 24`, for the pair relation under
/// `g`, returning the best exponent and its deviation. Samples whose tails
/// are too large for a given exponent are skipped for that exponent.
pub fn best_q_power(f: &HalfQSeries, h: &HalfQSeries, g: SL2Matrix, weight: i32, taus: &[Complex64], tol: f64) -> Option<(f64, f64)> {
    let exps: Vec<i32> = (-24..=24).collect();
    let devs = par::map(&exps, |&k| {
        let c = f64::from(k) / 24.0;
        check_pair(f, h, g, weight, taus, tol, c).ok().map(|r| (c, r.max_deviation))
    });
    devs.into_iter().flatten().min_by(|a, b| a.1.total_cmp(&b.1))
}

/// The eight theta transformation laws at each `(v, τ)` sample.
pub fn theta_law_suite(samples: &[(Complex64, Complex64)], tol: f64) -> Result<Vec<Check>> {
    let rows = par::try_map(samples, |&(v, tau)| theta::transformation_laws(v, tau, theta::DEFAULT_TERMS))?;
    let mut out = Vec::new();
    for ((v, tau), laws) in samples.iter().zip(rows) {
        for law in laws {
            let r = law.residual();
            out.push(Check::new(format!("{} at v={v}, tau={tau}", law.law), r < tol, r, ""));
        }
    }
    Ok(out)
}

/// Three fixed `(v, τ)` samples for the theta-law suite.
pub fn default_theta_samples() -> Vec<(Complex64, Complex64)> {
    vec![
        (Complex64::new(0.1, 0.05), Complex64::new(0.0, 1.1)),
        (Complex64::new(0.23, -0.1), Complex64::new(0.3, 1.2)),
        (Complex64::new(-0.17, 0.2), Complex64::new(-0.2, 0.9)),
    ]
}
