//! Text and JSON renderings of genus reports and check campaigns.
//!
//! Every number in the text form also appears in the JSON form; series
//! coefficients are exact `p/q` strings there.

use serde::Serialize;

use crate::genera::GenusReport;
use crate::modcheck::Check;
use crate::qseries::{fmt_fraction, fmt_rational, half_power, q_label};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientRow {
    pub power: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub residual: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl From<&Check> for CheckRow {
    fn from(c: &Check) -> Self {
        Self { name: c.name.clone(), passed: c.passed, residual: fmt_residual(c.residual), detail: c.detail.clone() }
    }
}

pub fn fmt_residual(r: f64) -> String {
    format!("{r:.3e}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub kind: String,
    pub method: Option<String>,
    pub weight: Option<u32>,
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub manifold: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bundle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub coefficients: Vec<CoefficientRow>,
    pub checks: Vec<CheckRow>,
    #[serde(skip)]
    text_values: Vec<String>,
}

impl Report {
    pub fn from_genus(g: &GenusReport) -> Self {
        let rows = g.series.rows();
        Self {
            kind: g.kind.name().into(),
            method: Some(g.method.name().into()),
            weight: Some(g.weight),
            group: g.group.map(|x| x.name().into()),
            manifold: Some(g.manifold.clone()),
            bundle: g.bundle.clone(),
            normalization: Some(g.normalization.name().into()),
            order: Some(g.series.order()),
            coefficients: rows.iter().map(|(p, c)| CoefficientRow { power: p.clone(), value: fmt_fraction(c) }).collect(),
            checks: Vec::new(),
            text_values: rows.iter().map(|(_, c)| fmt_rational(c)).collect(),
        }
    }

    pub fn from_checks(kind: impl Into<String>, checks: &[Check]) -> Self {
        Self {
            kind: kind.into(),
            method: None,
            weight: None,
            group: None,
            manifold: None,
            bundle: None,
            normalization: None,
            order: None,
            coefficients: Vec::new(),
            checks: checks.iter().map(CheckRow::from).collect(),
            text_values: Vec::new(),
        }
    }

    pub fn with_checks(mut self, checks: &[Check]) -> Self {
        self.checks.extend(checks.iter().map(CheckRow::from));
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| out.push_str(&format!("{k}: {v}\n"));
        line("genus", &self.kind);
        if let Some(m) = &self.manifold {
            line("manifold", m);
        }
        if let Some(b) = &self.bundle {
            line("bundle", b);
        }
        if let Some(m) = &self.method {
            line("method", m);
        }
        if let Some(n) = &self.normalization {
            line("normalization", n);
        }
        if let Some(w) = self.weight {
            line("weight", &w.to_string());
        }
        if self.method.is_some() {
            line("group", self.group.as_deref().unwrap_or("none"));
        }
        if let Some(n) = self.order {
            line("order", &n.to_string());
        }
        for (k, v) in self.text_values.iter().enumerate() {
            out.push_str(&format!("{}: {v}\n", q_label(k)));
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{status}] {} (residual {})", c.name, c.residual));
            if !c.detail.is_empty() {
                out.push_str(&format!(" {}", c.detail));
            }
            out.push('\n');
        }
        out
    }
}

/// `"3/2"`-style power labels for `0..=order`, matching the JSON rows.
pub fn power_labels(order: usize) -> Vec<String> {
    (0..=order).map(half_power).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundleops::ProjBundle;
    use crate::cohring::{builtin_manifold, LinearClass};
    use crate::genera::{pell, GenusKind, Method, Normalization};

    fn pell2_report() -> Report {
        let m = builtin_manifold("CP2").unwrap();
        let x = LinearClass::generator(&m.presentation, 0).unwrap();
        let e = ProjBundle::new(vec![x], LinearClass::zero(&m.presentation)).unwrap();
        Report::from_genus(&pell(&m, &e, GenusKind::PEll2, Method::Theta, 6, Normalization::default()).unwrap())
    }

    #[test]
    fn text_table_starts_with_known_values() {
        let text = pell2_report().to_text();
        assert!(text.contains("\nq^0: -1/8\n"), "{text}");
        assert!(text.contains("\nq^{1/2}: -1\n"), "{text}");
    }

    #[test]
    fn json_carries_every_text_number() {
        let r = pell2_report();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["kind", "method", "weight", "group", "coefficients", "checks"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let rows = v["coefficients"].as_array().unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0]["value"], "-1/8");
        assert_eq!(rows[1]["power"], "1/2");
        assert_eq!(rows[1]["value"], "-1/1");
        assert_eq!(power_labels(6), rows.iter().map(|r| r["power"].as_str().unwrap().to_string()).collect::<Vec<_>>());
    }

    #[test]
    fn check_rows() {
        let r = Report::from_checks("verify", &[Check::new("a", true, 1e-12, ""), Check::new("b", false, 0.5, "x")]);
        assert!(!r.all_passed());
        let t = r.to_text();
        assert!(t.contains("[PASS] a (residual 1.000e-12)"));
        assert!(t.contains("[FAIL] b (residual 5.000e-1) x"));
    }
}
