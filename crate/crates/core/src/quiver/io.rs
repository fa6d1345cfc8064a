//! JSON file format for bound quivers.

use serde::{Deserialize, Serialize};

use super::{BoundQuiver, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// Coefficient literal: a rational string such as `"-2/3"`, or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Text(String),
    Int(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coef: Coef,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundQuiverFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

fn field_error(field: String, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{field}: {msg}"))
}

pub(crate) fn parse_coef(coef: &Coef, field: &str) -> Result<Rational> {
    match coef {
        Coef::Int(n) => Ok(Rational::from_integer((*n).into())),
        Coef::Text(s) => parse_rational(s).map_err(|e| field_error(field.to_string(), e)),
    }
}

/// Parses one relation from JSON terms; `field` prefixes error messages.
pub(crate) fn parse_terms(q: &Quiver, terms: &[TermSpec], field: &str) -> Result<Relation> {
    let mut out = Vec::with_capacity(terms.len());
    for (j, t) in terms.iter().enumerate() {
        let coef = parse_coef(&t.coef, &format!("{field}[{j}].coef"))?;
        let path = parse_path(q, &t.path, &format!("{field}[{j}].path"))?;
        out.push((coef, path));
    }
    Ok(Relation::new(out))
}

pub(crate) fn parse_path(q: &Quiver, names: &[String], field: &str) -> Result<Path> {
    if names.is_empty() {
        return Err(field_error(field.to_string(), "empty path"));
    }
    let ids = names
        .iter()
        .map(|n| q.arrow_id(n).map_err(|e| field_error(field.to_string(), e)))
        .collect::<Result<Vec<_>>>()?;
    Path::from_arrows(q, ids).map_err(|e| field_error(field.to_string(), e))
}

pub(crate) fn terms_of(q: &Quiver, r: &Relation) -> Vec<TermSpec> {
    r.terms()
        .iter()
        .map(|(c, p)| TermSpec {
            coef: Coef::Text(format_rational(c)),
            path: p.names(q).into_iter().map(String::from).collect(),
        })
        .collect()
}

impl BoundQuiverFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bound quiver file serializes")
    }

    /// Resolves names; structural problems are parse errors naming the field.
    /// Admissibility is left to [`BoundQuiver::validate`].
    pub fn to_bound_quiver(&self) -> Result<BoundQuiver> {
        let quiver = Quiver::new(
            self.vertices.iter().cloned(),
            self.arrows.iter().map(|a| (a.name.clone(), a.from.clone(), a.to.clone())),
        )
        .map_err(|e| {
            let field = match e {
                Error::DuplicateVertex(_) => "vertices",
                _ => "arrows",
            };
            field_error(field.into(), e)
        })?;
        if quiver.vertex_count() == 0 {
            return Err(field_error("vertices".into(), "no vertices"));
        }
        let generators = self
            .relations
            .iter()
            .enumerate()
            .map(|(i, terms)| parse_terms(&quiver, terms, &format!("relations[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let basepoint = match &self.basepoint {
            Some(name) => quiver.vertex(name).map_err(|e| field_error("basepoint".into(), e))?,
            None => super::VertexId(0),
        };
        BoundQuiver::new(quiver, generators, self.truncation, basepoint)
            .map_err(|e| field_error("truncation".into(), e))
    }

    pub fn from_bound_quiver(bq: &BoundQuiver) -> Self {
        let q = &bq.quiver;
        BoundQuiverFile {
            vertices: q.vertex_names().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowSpec {
                    name: a.name.clone(),
                    from: q.vertex_name(a.source).to_string(),
                    to: q.vertex_name(a.target).to_string(),
                })
                .collect(),
            relations: bq.generators.iter().map(|r| terms_of(q, r)).collect(),
            truncation: Some(bq.truncation),
            basepoint: Some(q.vertex_name(bq.basepoint).to_string()),
        }
    }
}

impl BoundQuiver {
    pub fn from_json(text: &str) -> Result<Self> {
        BoundQuiverFile::from_json(text)?.to_bound_quiver()
    }

    pub fn to_json(&self) -> String {
        BoundQuiverFile::from_bound_quiver(self).to_json()
    }
}
