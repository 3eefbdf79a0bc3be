//! Truncated graded-commutative rings with [`HalfQSeries`] coefficients.
//!
//! All generators have even degree, so the rings are commutative. An element
//! is a finite map from monomials to series; monomials above the top degree
//! or divisible by a declared vanishing monomial are zero.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::qseries::{fmt_rational, int, parse_rational, HalfQSeries, Rational};

/// Exponent vector over the generators of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    top_degree: u32,
    vanishing: Vec<Monomial>,
    integration: BTreeMap<Monomial, Rational>,
}

impl RingPresentation {
    pub fn new(
        generators: Vec<Generator>,
        top_degree: u32,
        vanishing: Vec<Monomial>,
        integration: BTreeMap<Monomial, Rational>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Input("a presentation needs at least one generator".into()));
        }
        for g in &generators {
            if g.degree < 2 || g.degree % 2 != 0 {
                return Err(Error::Input(format!(
                    "generator `{}` has degree {}; degrees must be even and >= 2",
                    g.name, g.degree
                )));
            }
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Input(format!("invalid generator name `{}`", g.name)));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::Input(format!("duplicate generator `{}`", g.name)));
            }
        }
        let pres = Self { generators, top_degree, vanishing, integration: BTreeMap::new() };
        for m in pres.vanishing.iter().chain(integration.keys()) {
            if m.0.len() != pres.generators.len() {
                return Err(Error::Input("monomial length does not match generator count".into()));
            }
        }
        for m in integration.keys() {
            if pres.degree(m) != top_degree {
                return Err(Error::Input(format!(
                    "integration entry `{}` has degree {} instead of {}",
                    pres.format_monomial(m),
                    pres.degree(m),
                    top_degree
                )));
            }
        }
        let integration = integration.into_iter().filter(|(m, _)| !pres.is_zero_monomial(m)).collect();
        Ok(Self { integration, ..pres })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn vanishing(&self) -> &[Monomial] {
        &self.vanishing
    }

    pub fn integration_table(&self) -> &BTreeMap<Monomial, Rational> {
        &self.integration
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.generators).map(|(&e, g)| u32::from(e) * g.degree).sum()
    }

    pub fn is_zero_monomial(&self, m: &Monomial) -> bool {
        self.degree(m) > self.top_degree || self.vanishing.iter().any(|v| v.divides(m))
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        let m = a.times(b);
        (!self.is_zero_monomial(&m)).then_some(m)
    }

    pub fn generator_monomial(&self, i: usize) -> Monomial {
        let mut m = Monomial::one(self.ngens());
        m.0[i] = 1;
        m
    }

    /// `x^2*y`, or `1` for the unit monomial.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .zip(&self.generators)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, g)| if e == 1 { g.name.clone() } else { format!("{}^{}", g.name, e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let mut m = Monomial::one(self.ngens());
        let s = s.trim();
        if s == "1" {
            return Ok(m);
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim().parse::<u16>().map_err(|_| Error::Input(format!("bad exponent in `{s}`")))?,
                ),
                None => (factor, 1),
            };
            let i = self
                .generator_index(name)
                .ok_or_else(|| Error::Input(format!("unknown generator `{name}` in `{s}`")))?;
            m.0[i] += exp;
        }
        Ok(m)
    }

    /// All nonzero monomials of exactly the given degree.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        fn rec(p: &RingPresentation, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i == p.ngens() {
                if left == 0 {
                    let m = Monomial(cur.clone());
                    if !p.is_zero_monomial(&m) {
                        out.push(m);
                    }
                }
                return;
            }
            let d = p.generators[i].degree;
            let mut e = 0;
            while e * d <= left {
                cur.push(e as u16);
                rec(p, i + 1, left - e * d, cur, out);
                cur.pop();
                e += 1;
            }
        }
        let mut out = Vec::new();
        rec(self, 0, degree, &mut Vec::new(), &mut out);
        out
    }
}

/// A rational linear combination of degree-2 generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearClass {
    coeffs: Vec<Rational>,
}

impl LinearClass {
    pub fn zero(pres: &RingPresentation) -> Self {
        Self { coeffs: vec![Rational::zero(); pres.ngens()] }
    }

    pub fn generator(pres: &RingPresentation, i: usize) -> Result<Self> {
        Self::from_coeffs(pres, (0..pres.ngens()).map(|j| if i == j { int(1) } else { int(0) }).collect())
    }

    pub fn from_coeffs(pres: &RingPresentation, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != pres.ngens() {
            return Err(Error::Input("linear class has wrong number of coefficients".into()));
        }
        for (c, g) in coeffs.iter().zip(pres.generators()) {
            if !c.is_zero() && g.degree != 2 {
                return Err(Error::Input(format!("`{}` has degree {}, not 2", g.name, g.degree)));
            }
        }
        Ok(Self { coeffs })
    }

    /// `c * generator`, by name.
    pub fn named(pres: &RingPresentation, name: &str, c: Rational) -> Result<Self> {
        let i = pres.generator_index(name).ok_or_else(|| Error::Input(format!("unknown generator `{name}`")))?;
        Ok(Self::generator(pres, i)?.scale(&c))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Parses `x`, `-x`, `3/2*x - y/2`, `0`.
    pub fn parse(pres: &RingPresentation, s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Input(format!("cannot parse linear class `{s}`: {why}"));
        let mut out = Self::zero(pres);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('*') && !cur.ends_with('/') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            if parse_rational(body).map(|r| r.is_zero()).unwrap_or(false) {
                continue;
            }
            // coef*name | name | name/den | coef*name/den
            let (num_part, name_part) = match body.split_once('*') {
                Some((c, n)) => (Some(c), n),
                None => (None, body),
            };
            let (name, den) = match name_part.split_once('/') {
                Some((n, d)) => (n, Some(d)),
                None => (name_part, None),
            };
            let mut c = match num_part {
                Some(c) => parse_rational(c)?,
                None => int(1),
            };
            if let Some(d) = den {
                let d = parse_rational(d)?;
                if d.is_zero() {
                    return Err(bad("division by zero"));
                }
                c /= d;
            }
            let i = pres.generator_index(name).ok_or_else(|| bad("unknown generator"))?;
            if pres.generators()[i].degree != 2 {
                return Err(bad("generator is not of degree 2"));
            }
            out.coeffs[i] += c * int(sign);
        }
        Ok(out)
    }

    pub fn format(&self, pres: &RingPresentation) -> String {
        let mut s = String::new();
        for (c, g) in self.coeffs.iter().zip(pres.generators()) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                s.push_str(&g.name);
            } else {
                s.push_str(&format!("{}*{}", fmt_rational(&mag), g.name));
            }
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

/// An element of a truncated cohomology ring with q-series coefficients.
/// Every coefficient series has the element's u-order.
#[derive(Clone, Debug)]
pub struct CohElement {
    pres: Arc<RingPresentation>,
    order: usize,
    terms: BTreeMap<Monomial, HalfQSeries>,
}

impl PartialEq for CohElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.pres, &other.pres) || self.pres == other.pres)
            && self.order == other.order
            && self.terms == other.terms
    }
}

impl CohElement {
    pub fn zero(pres: &Arc<RingPresentation>, order: usize) -> Self {
        Self { pres: Arc::clone(pres), order, terms: BTreeMap::new() }
    }

    pub fn one(pres: &Arc<RingPresentation>, order: usize) -> Self {
        Self::scalar(pres, HalfQSeries::one(order))
    }

    pub fn constant(pres: &Arc<RingPresentation>, c: Rational, order: usize) -> Self {
        Self::scalar(pres, HalfQSeries::constant(c, order))
    }

    pub fn scalar(pres: &Arc<RingPresentation>, s: HalfQSeries) -> Self {
        let order = s.order();
        Self::zero(pres, order).with_term(Monomial::one(pres.ngens()), s)
    }

    pub fn monomial(pres: &Arc<RingPresentation>, m: Monomial, s: HalfQSeries) -> Self {
        let order = s.order();
        Self::zero(pres, order).with_term(m, s)
    }

    pub fn linear(pres: &Arc<RingPresentation>, class: &LinearClass, order: usize) -> Self {
        let mut out = Self::zero(pres, order);
        for (i, c) in class.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = out.with_term(pres.generator_monomial(i), HalfQSeries::constant(c.clone(), order));
            }
        }
        out
    }

    fn with_term(mut self, m: Monomial, s: HalfQSeries) -> Self {
        self.add_term(m, &s, &int(1), 0);
        self
    }

    /// `self += c * u^shift * s * m`, dropping zero monomials and zero series.
    fn add_term(&mut self, m: Monomial, s: &HalfQSeries, c: &Rational, shift: usize) {
        if self.pres.is_zero_monomial(&m) {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                o.get_mut().add_scaled_shifted(s, c, shift);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                let mut z = HalfQSeries::zero(self.order);
                z.add_scaled_shifted(s, c, shift);
                if !z.is_zero() {
                    v.insert(z);
                }
            }
        }
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.pres
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, HalfQSeries> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> HalfQSeries {
        self.terms.get(m).cloned().unwrap_or_else(|| HalfQSeries::zero(self.order))
    }

    /// The degree-0 part.
    pub fn scalar_part(&self) -> HalfQSeries {
        self.coefficient(&Monomial::one(self.pres.ngens()))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || self.pres == other.pres {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        for (m, s) in &other.terms {
            out.add_term(m.clone(), s, &int(1), 0);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.pres, self.order);
        }
        Self {
            pres: Arc::clone(&self.pres),
            order: self.order,
            terms: self.terms.iter().map(|(m, s)| (m.clone(), s.scale(c))).collect(),
        }
    }

    pub fn mul_series(&self, s: &HalfQSeries) -> Self {
        let order = self.order.min(s.order());
        let mut out = Self::zero(&self.pres, order);
        for (m, t) in &self.terms {
            out.add_term(m.clone(), &t.mul(s), &int(1), 0);
        }
        out
    }

    /// Multiplication by `u^k`.
    pub fn shift_u(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.pres, self.order);
        for (m, s) in &self.terms {
            out.add_term(m.clone(), s, &int(1), k);
        }
        out
    }

    pub fn truncate(&self, order: usize) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut out = Self::zero(&self.pres, order);
        for (m, s) in &self.terms {
            out.add_term(m.clone(), &s.truncate(order), &int(1), 0);
        }
        out
    }

    /// The coefficient of `u^k` as an order-0 element.
    pub fn u_coefficient(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.pres, 0);
        for (m, s) in &self.terms {
            if let Some(c) = s.coeff(k) {
                if !c.is_zero() {
                    out.add_term(m.clone(), &HalfQSeries::constant(c.clone(), 0), &int(1), 0);
                }
            }
        }
        out
    }

    /// Embeds an order-0 element at `u^k` in an element of the given order.
    pub fn at_u_power(&self, k: usize, order: usize) -> Self {
        let mut out = Self::zero(&self.pres, order);
        if k > order {
            return out;
        }
        for (m, s) in &self.terms {
            out.add_term(m.clone(), &HalfQSeries::constant(s.constant_term().clone(), order), &int(1), k);
        }
        out
    }

    /// The homogeneous component of cohomological degree `d`.
    pub fn component(&self, d: u32) -> Self {
        Self {
            pres: Arc::clone(&self.pres),
            order: self.order,
            terms: self.terms.iter().filter(|(m, _)| self.pres.degree(m) == d).map(|(m, s)| (m.clone(), s.clone())).collect(),
        }
    }

    /// Product in the quotient ring.
    pub fn ring_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let order = self.order.min(other.order);
        let lhs: Vec<(&Monomial, &HalfQSeries)> = self.terms.iter().collect();
        let partial = |(ma, sa): &(&Monomial, &HalfQSeries)| {
            let mut out = Self::zero(&self.pres, order);
            for (mb, sb) in &other.terms {
                if let Some(m) = self.pres.mul_monomials(ma, mb) {
                    out.add_term(m, &sa.mul(sb), &int(1), 0);
                }
            }
            out
        };
        let pieces = if lhs.len() * other.terms.len() > 256 {
            par::map(&lhs, partial)
        } else {
            lhs.iter().map(partial).collect()
        };
        let mut out = Self::zero(&self.pres, order);
        for p in pieces {
            for (m, s) in p.terms {
                out.add_term(m, &s, &int(1), 0);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.pres, self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `exp(self)`; the u^0 coefficient of the degree-0 part must vanish.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        let scalar = self.scalar_part();
        if !scalar.constant_term().is_zero() {
            return Err(Error::NonNilpotentScalar(fmt_rational(scalar.constant_term())));
        }
        let scalar_exp = scalar.exp()?;
        let mut nil = self.clone();
        nil.terms.remove(&Monomial::one(self.pres.ngens()));
        // nil has no degree-0 part, so nil^k = 0 once 2k > top_degree
        let mut out = Self::one(&self.pres, self.order);
        let mut power = Self::one(&self.pres, self.order);
        let mut k = 1i64;
        loop {
            power = &power * &nil;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(&factorial(k).recip());
            k += 1;
        }
        Ok(out.mul_series(&scalar_exp))
    }

    /// Evaluates `Σ_k c_k x^k` by Horner's rule, with series coefficients.
    pub fn eval_power_series(coeffs: &[HalfQSeries], x: &Self) -> Self {
        let order = coeffs.iter().map(HalfQSeries::order).min().unwrap_or(0).min(x.order);
        let mut acc = Self::zero(&x.pres, order);
        for c in coeffs.iter().rev() {
            acc = (&acc * x).try_add(&Self::scalar(&x.pres, c.truncate(order))).expect("same presentation");
        }
        acc
    }

    /// Evaluates a rational univariate series at `x`.
    pub fn eval_rational_series(coeffs: &[Rational], x: &Self) -> Self {
        let series: Vec<HalfQSeries> = coeffs.iter().map(|c| HalfQSeries::constant(c.clone(), x.order)).collect();
        Self::eval_power_series(&series, x)
    }

    /// Pairs the top-degree component with the integration table.
    pub fn integrate(&self) -> HalfQSeries {
        let mut out = HalfQSeries::zero(self.order);
        for (m, c) in self.pres.integration_table() {
            if let Some(s) = self.terms.get(m) {
                out = out.add(&s.scale(c));
            }
        }
        out
    }

    /// Substitutes generator `i` by a linear combination of other degree-compatible
    /// elements, given as an element of the same ring.
    pub fn substitute(&self, i: usize, value: &Self) -> Result<Self> {
        self.check_same(value)?;
        let mut out = Self::zero(&self.pres, self.order.min(value.order));
        for (m, s) in &self.terms {
            let e = m.0[i];
            let mut rest = m.clone();
            rest.0[i] = 0;
            let base = Self::monomial(&self.pres, rest, s.truncate(out.order));
            out = &out + &(&base * &value.pow(u32::from(e)));
        }
        Ok(out)
    }

    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, s)| {
                let mono = self.pres.format_monomial(m);
                if s.order() == 0 {
                    format!("({})*{}", fmt_rational(s.constant_term()), mono)
                } else {
                    format!("({})*{}", s, mono)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn factorial(k: i64) -> Rational {
    (2..=k).fold(Rational::one(), |f, i| f * int(i))
}

impl fmt::Display for CohElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Add for &CohElement {
    type Output = CohElement;
    fn add(self, rhs: Self) -> CohElement {
        self.try_add(rhs).expect("elements of different presentations")
    }
}

impl Sub for &CohElement {
    type Output = CohElement;
    fn sub(self, rhs: Self) -> CohElement {
        self.try_sub(rhs).expect("elements of different presentations")
    }
}

impl Mul for &CohElement {
    type Output = CohElement;
    fn mul(self, rhs: Self) -> CohElement {
        self.ring_mul(rhs).expect("elements of different presentations")
    }
}

impl Neg for &CohElement {
    type Output = CohElement;
    fn neg(self) -> CohElement {
        CohElement::neg(self)
    }
}

/// A closed oriented `4r`-manifold, presented by its cohomology ring and
/// stable tangent Chern roots.
#[derive(Clone, Debug, PartialEq)]
pub struct Manifold {
    pub name: String,
    pub presentation: Arc<RingPresentation>,
    pub tangent_roots: Vec<LinearClass>,
}

impl Manifold {
    pub fn new(name: impl Into<String>, presentation: RingPresentation, tangent_roots: Vec<LinearClass>) -> Result<Self> {
        let dim = presentation.top_degree();
        if !dim.is_multiple_of(4) {
            return Err(Error::Input(format!("dimension {dim} is not divisible by 4")));
        }
        if tangent_roots.iter().any(|r| r.coeffs().len() != presentation.ngens()) {
            return Err(Error::Input("tangent root has wrong length".into()));
        }
        Ok(Self { name: name.into(), presentation: Arc::new(presentation), tangent_roots })
    }

    pub fn dimension(&self) -> u32 {
        self.presentation.top_degree()
    }

    /// `r` in `dim = 4r`.
    pub fn r(&self) -> u32 {
        self.dimension() / 4
    }

    pub fn element(&self, class: &LinearClass, order: usize) -> CohElement {
        CohElement::linear(&self.presentation, class, order)
    }

    /// `p_1 = Σ x_i^2` over the stable tangent roots.
    pub fn p1(&self, order: usize) -> CohElement {
        sum_of_squares(&self.presentation, &self.tangent_roots, order)
    }

    pub fn integrate(&self, a: &CohElement) -> Result<HalfQSeries> {
        if !(Arc::ptr_eq(a.presentation(), &self.presentation) || **a.presentation() == *self.presentation) {
            return Err(Error::PresentationMismatch);
        }
        Ok(a.integrate())
    }
}

pub(crate) fn sum_of_squares(pres: &Arc<RingPresentation>, classes: &[LinearClass], order: usize) -> CohElement {
    classes.iter().fold(CohElement::zero(pres, order), |acc, c| {
        let e = CohElement::linear(pres, c, order);
        &acc + &(&e * &e)
    })
}

/// `CP^n` (n even): one generator `x`, `x^{n+1} = 0`, `∫ x^n = 1`, stable
/// tangent roots `x` repeated `n+1` times.
pub fn complex_projective_space(n: u32) -> Result<Manifold> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::UnknownManifold(format!("CP{n} (need n even, so that dim = 4r)")));
    }
    let gens = vec![Generator { name: "x".into(), degree: 2 }];
    let top = Monomial(vec![n as u16]);
    let pres = RingPresentation::new(
        gens,
        2 * n,
        vec![Monomial(vec![n as u16 + 1])],
        BTreeMap::from([(top, int(1))]),
    )?;
    let x = LinearClass::generator(&pres, 0)?;
    Manifold::new(format!("CP{n}"), pres, vec![x; n as usize + 1])
}

/// Relation-free ring on tangent power sums `s2T, s4T, s6T` (degrees 4, 8, 12)
/// and bundle power sums `s1E..s6E` (degrees 2..12), truncated at degree 12.
pub fn free_power_sum_ring() -> RingPresentation {
    let mut gens = vec![
        Generator { name: "s2T".into(), degree: 4 },
        Generator { name: "s4T".into(), degree: 8 },
        Generator { name: "s6T".into(), degree: 12 },
    ];
    for k in 1..=6 {
        gens.push(Generator { name: format!("s{k}E"), degree: 2 * k });
    }
    RingPresentation::new(gens, 12, Vec::new(), BTreeMap::new()).expect("valid presentation")
}

/// `CP2`, `CP4`, any `CPn` with n even, or `free` (the degree-12 power-sum ring,
/// with no tangent roots and an empty integration table).
pub fn builtin_manifold(name: &str) -> Result<Manifold> {
    let lower = name.to_ascii_lowercase();
    if lower == "free" || lower == "free12" {
        return Manifold::new("free12", free_power_sum_ring(), Vec::new());
    }
    if let Some(n) = lower.strip_prefix("cp") {
        if let Ok(n) = n.parse::<u32>() {
            return complex_projective_space(n);
        }
    }
    Err(Error::UnknownManifold(name.into()))
}
