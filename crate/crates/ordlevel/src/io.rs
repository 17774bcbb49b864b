//! JSON file formats for posets and polytopes.

use std::path::Path;

use anyhow::{bail, Context, Result};
use ordlevel_core::alcoved::{AlcovedPolytope, Bound, Polytope, ProductPolytope, SimplexPolytope};
use ordlevel_core::Poset;
use serde::{Deserialize, Serialize};

/// Element identifiers may be written as strings or integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Id {
    Text(String),
    Number(i64),
}

impl Id {
    pub fn into_string(self) -> String {
        match self {
            Id::Text(s) => s,
            Id::Number(n) => n.to_string(),
        }
    }
}

/// `{"elements": [...], "covers": [[a, b], ...]}`, each pair meaning `a ⋖ b`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<Id>,
    #[serde(default)]
    pub covers: Vec<(Id, Id)>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset) -> Self {
        PosetFile {
            elements: p.names().iter().cloned().map(Id::Text).collect(),
            covers: p
                .covers()
                .iter()
                .map(|&(i, j)| (Id::Text(p.name(i).to_string()), Id::Text(p.name(j).to_string())))
                .collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let elements: Vec<String> = self.elements.iter().cloned().map(Id::into_string).collect();
        let covers: Vec<(String, String)> = self
            .covers
            .iter()
            .cloned()
            .map(|(a, b)| (a.into_string(), b.into_string()))
            .collect();
        Ok(Poset::from_covers(&elements, &covers)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundFile {
    pub i: usize,
    pub j: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lo: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hi: Option<i64>,
}

/// One of the three polytope encodings.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolytopeFile {
    Alcoved { dim: usize, bounds: Vec<BoundFile> },
    Simplex { vertices: Vec<Vec<i64>> },
    Product { product: Vec<PolytopeFile> },
}

impl PolytopeFile {
    pub fn from_alcoved(a: &AlcovedPolytope) -> Self {
        PolytopeFile::Alcoved {
            dim: a.ambient_dim(),
            bounds: a
                .bounds()
                .into_iter()
                .map(|b| BoundFile { i: b.i, j: b.j, lo: b.lo, hi: b.hi })
                .collect(),
        }
    }

    pub fn to_polytope(&self) -> Result<Polytope> {
        Ok(match self {
            PolytopeFile::Alcoved { dim, bounds } => {
                let bounds: Vec<Bound> = bounds.iter().map(|b| Bound { i: b.i, j: b.j, lo: b.lo, hi: b.hi }).collect();
                Polytope::Alcoved(AlcovedPolytope::new(*dim, &bounds)?)
            }
            PolytopeFile::Simplex { vertices } => Polytope::Simplex(SimplexPolytope::new(vertices.clone())?),
            PolytopeFile::Product { product } => {
                let factors = product.iter().map(PolytopeFile::to_polytope).collect::<Result<Vec<_>>>()?;
                Polytope::Product(ProductPolytope::new(factors)?)
            }
        })
    }
}

/// Raw bytes of an input file, kept for hashing.
pub struct Input {
    pub bytes: Vec<u8>,
}

impl Input {
    pub fn read(path: &Path) -> Result<Self> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        Ok(Input { bytes })
    }

    pub fn sha256(&self) -> String {
        use sha2::{Digest, Sha256};
        hex::encode(Sha256::digest(&self.bytes))
    }

    pub fn poset(&self) -> Result<Poset> {
        let file: PosetFile = serde_json::from_slice(&self.bytes).context("parsing poset JSON")?;
        file.to_poset()
    }

    pub fn polytope(&self) -> Result<Polytope> {
        let file: PolytopeFile = serde_json::from_slice(&self.bytes).context("parsing polytope JSON")?;
        file.to_polytope()
    }

    /// A polytope file, or a poset file read as its order polytope.
    pub fn polytope_or_order(&self) -> Result<Polytope> {
        match self.polytope() {
            Ok(p) => Ok(p),
            Err(poly_err) => match self.poset() {
                Ok(p) => Ok(Polytope::Alcoved(ordlevel_core::alcoved::order_polytope_as_alcoved(&p))),
                Err(_) => Err(poly_err),
            },
        }
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn expect_two_factors(p: &Polytope) -> Result<(&Polytope, &Polytope)> {
    match p {
        Polytope::Product(prod) if prod.factors().len() == 2 => Ok((&prod.factors()[0], &prod.factors()[1])),
        Polytope::Product(prod) => bail!("expected two factors, found {}", prod.factors().len()),
        _ => bail!("expected a product polytope"),
    }
}
