//! JSON manifests: a manifold (builtin name or explicit presentation), an
//! optional projective bundle and an optional order.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bundleops::ProjBundle;
use crate::cohring::{builtin_manifold, Generator, LinearClass, Manifold, RingPresentation};
use crate::error::{Error, Result};
use crate::qseries::{fmt_rational, parse_rational};

pub const ORDER_ENV: &str = "ELLGEN_ORDER_DEFAULT";
pub const FALLBACK_ORDER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestDoc {
    pub manifold: ManifoldDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ManifoldDoc {
    Builtin(String),
    Explicit(ExplicitManifold),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitManifold {
    pub name: String,
    pub generators: Vec<GeneratorDoc>,
    /// Vanishing monomials such as `"x^3"`.
    #[serde(default)]
    pub relations: Vec<String>,
    /// Top-degree monomial to its integral, e.g. `{"x^2": "1"}`.
    pub integration: BTreeMap<String, String>,
    pub tangent_roots: Vec<String>,
    /// Real dimension; inferred from the integration table when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDoc {
    pub rank: usize,
    pub roots: Vec<String>,
    #[serde(default = "zero_class")]
    pub twist_b: String,
}

fn zero_class() -> String {
    "0".into()
}

/// A validated manifest.
#[derive(Clone, Debug, PartialEq)]
pub struct Manifest {
    pub manifold: Manifold,
    pub bundle: Option<ProjBundle>,
    pub order: Option<usize>,
    builtin: Option<String>,
}

impl Manifest {
    pub fn from_doc(doc: &ManifestDoc) -> Result<Self> {
        let (manifold, builtin) = match &doc.manifold {
            ManifoldDoc::Builtin(name) => (builtin_manifold(name)?, Some(name.clone())),
            ManifoldDoc::Explicit(ex) => (explicit_manifold(ex)?, None),
        };
        let bundle = doc.bundle.as_ref().map(|b| load_bundle(b, &manifold)).transpose()?;
        if doc.order == Some(0) {
            return Err(Error::Input("order must be at least 1".into()));
        }
        Ok(Self { manifold, bundle, order: doc.order, builtin })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: ManifestDoc = serde_json::from_str(text).map_err(|e| Error::Input(format!("manifest: {e}")))?;
        Self::from_doc(&doc)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Regenerates a document from the loaded model.
    pub fn to_doc(&self) -> ManifestDoc {
        let pres = &self.manifold.presentation;
        let manifold = match &self.builtin {
            Some(name) => ManifoldDoc::Builtin(name.clone()),
            None => ManifoldDoc::Explicit(ExplicitManifold {
                name: self.manifold.name.clone(),
                generators: pres.generators().iter().map(|g| GeneratorDoc { name: g.name.clone(), degree: g.degree }).collect(),
                relations: pres.vanishing().iter().map(|m| pres.format_monomial(m)).collect(),
                integration: pres.integration_table().iter().map(|(m, c)| (pres.format_monomial(m), fmt_rational(c))).collect(),
                tangent_roots: self.manifold.tangent_roots.iter().map(|r| r.format(pres)).collect(),
                dimension: Some(pres.top_degree()),
            }),
        };
        let bundle = self.bundle.as_ref().map(|b| BundleDoc {
            rank: b.rank(),
            roots: b.roots().iter().map(|r| r.format(pres)).collect(),
            twist_b: b.twist().format(pres),
        });
        ManifestDoc { manifold, bundle, order: self.order }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("manifest serializes")
    }

    pub fn bundle(&self) -> Result<&ProjBundle> {
        self.bundle.as_ref().ok_or_else(|| Error::Input("manifest has no bundle".into()))
    }
}

fn explicit_manifold(ex: &ExplicitManifold) -> Result<Manifold> {
    let gens: Vec<Generator> = ex.generators.iter().map(|g| Generator { name: g.name.clone(), degree: g.degree }).collect();
    // parse monomials against a provisional presentation with no relations
    let probe = RingPresentation::new(gens.clone(), u32::MAX, Vec::new(), BTreeMap::new())?;
    let vanishing = ex.relations.iter().map(|r| probe.parse_monomial(r)).collect::<Result<Vec<_>>>()?;
    let mut integration = BTreeMap::new();
    for (k, v) in &ex.integration {
        integration.insert(probe.parse_monomial(k)?, parse_rational(v)?);
    }
    let top = match ex.dimension {
        Some(d) => d,
        None => {
            let degrees: Vec<u32> = integration.keys().map(|m| probe.degree(m)).collect();
            match degrees.first() {
                Some(&d) => d,
                None => return Err(Error::Input("explicit manifold needs an integration table or a dimension".into())),
            }
        }
    };
    let pres = RingPresentation::new(gens, top, vanishing, integration)?;
    let roots = ex.tangent_roots.iter().map(|r| LinearClass::parse(&pres, r)).collect::<Result<Vec<_>>>()?;
    Manifold::new(ex.name.clone(), pres, roots)
}

fn load_bundle(b: &BundleDoc, m: &Manifold) -> Result<ProjBundle> {
    if b.rank != b.roots.len() {
        return Err(Error::Input(format!("bundle rank {} but {} roots", b.rank, b.roots.len())));
    }
    let pres = &m.presentation;
    let roots = b.roots.iter().map(|r| LinearClass::parse(pres, r)).collect::<Result<Vec<_>>>()?;
    ProjBundle::new(roots, LinearClass::parse(pres, &b.twist_b)?)
}

/// Flag, then manifest, then `ELLGEN_ORDER_DEFAULT`, then 20.
pub fn resolve_order(flag: Option<usize>, manifest: Option<usize>) -> Result<usize> {
    if let Some(n) = flag.or(manifest) {
        return Ok(n);
    }
    match std::env::var(ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Input(format!("{ORDER_ENV}=`{v}` is not a positive integer"))),
        Err(_) => Ok(FALLBACK_ORDER),
    }
}
