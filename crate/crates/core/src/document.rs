//! JSON structure and twistor documents.
//!
//! All coefficients are strings in the scalar text encoding. Sparse entries
//! are arrays of indices followed by the coefficient:
//!
//! * `mult`: `[i, j, k, c]` means `e_i e_j` has coefficient `c` on `e_k`
//! * `delta`: entry `i` lists `[j, k, c]` terms of `Delta(e_i)`
//! * `antipode`: `[i, j, c]` means `S(e_i)` has coefficient `c` on `e_j`
//! * `phi`: `[i, j, k, c]`, and `r`: `[i, j, c]`
//!
//! [`serialize_structure`] writes a canonical form (fixed key order, sorted
//! entries, canonical scalars) so that parsing and re-serializing a canonical
//! document reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::map::StructureMap;
use crate::scalar::{FieldSpec, Scalar, ScalarError};
use crate::structure::{QhsaStructure, StructureError};
use crate::tensor::{TensorElement, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(String),
    #[error("{location}: {source}")]
    Scalar {
        location: String,
        source: ScalarError,
    },
    #[error("{location}: index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        location: String,
        index: usize,
        dim: usize,
    },
    #[error("{location}: expected length {expected}, found {found}")]
    LengthMismatch {
        location: String,
        expected: usize,
        found: usize,
    },
    #[error("{location}: duplicate entry {entry:?}")]
    Duplicate { location: String, entry: Vec<usize> },
    #[error("field: {0}")]
    Field(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FieldRepr {
    Name(String),
    Cyclotomic(CyclotomicRepr),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclotomicRepr {
    cyclotomic: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    name: String,
    field: FieldRepr,
    dimension: usize,
    parity: Vec<u8>,
    unit: Vec<String>,
    mult: Vec<(usize, usize, usize, String)>,
    delta: Vec<Vec<(usize, usize, String)>>,
    epsilon: Vec<String>,
    antipode: Vec<(usize, usize, String)>,
    phi: Vec<(usize, usize, usize, String)>,
    alpha: Vec<String>,
    beta: Vec<String>,
    #[serde(default)]
    r: Option<Vec<(usize, usize, String)>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNormalization {
    epsilon_alpha: String,
    epsilon_beta: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwist {
    name: String,
    field: FieldRepr,
    dimension: usize,
    element: Vec<(usize, usize, String)>,
    #[serde(default)]
    inverse: Option<Vec<(usize, usize, String)>>,
    #[serde(default)]
    normalization: Option<RawNormalization>,
}

pub type Entry2 = (usize, usize, Scalar);
pub type Entry3 = (usize, usize, usize, Scalar);

/// A parsed and index-checked structure document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDocument {
    pub name: String,
    pub field: FieldSpec,
    pub dimension: usize,
    pub parity: Vec<u8>,
    pub unit: Vec<Scalar>,
    pub mult: Vec<Entry3>,
    pub delta: Vec<Vec<Entry2>>,
    pub epsilon: Vec<Scalar>,
    pub antipode: Vec<Entry2>,
    pub phi: Vec<Entry3>,
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
    pub r: Option<Vec<Entry2>>,
}

/// A twistor document: an arity-2 element with optional declared inverse and
/// the `(epsilon(alpha), epsilon(beta))` pair of the structure it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistDocument {
    pub name: String,
    pub field: FieldSpec,
    pub dimension: usize,
    pub element: Vec<Entry2>,
    pub inverse: Option<Vec<Entry2>>,
    pub normalization: Option<(Scalar, Scalar)>,
}

fn parse_field(f: FieldRepr) -> Result<FieldSpec, DocumentError> {
    match f {
        FieldRepr::Name(n) if n == "rational" => Ok(FieldSpec::Rational),
        FieldRepr::Name(n) => Err(DocumentError::Field(format!("unknown field \"{n}\""))),
        FieldRepr::Cyclotomic(c) => FieldSpec::Cyclotomic(c.cyclotomic)
            .validate()
            .map_err(|e| DocumentError::Field(e.to_string())),
    }
}

fn field_json(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rational => "\"rational\"".into(),
        FieldSpec::Cyclotomic(n) => format!("{{\"cyclotomic\": {n}}}"),
    }
}

struct Ctx {
    field: FieldSpec,
    dim: usize,
}

impl Ctx {
    fn scalar(&self, text: &str, location: String) -> Result<Scalar, DocumentError> {
        Scalar::parse(text, self.field).map_err(|source| DocumentError::Scalar { location, source })
    }

    fn vector(&self, v: &[String], key: &str) -> Result<Vec<Scalar>, DocumentError> {
        if v.len() != self.dim {
            return Err(DocumentError::LengthMismatch {
                location: key.into(),
                expected: self.dim,
                found: v.len(),
            });
        }
        v.iter()
            .enumerate()
            .map(|(i, s)| self.scalar(s, format!("{key}[{i}]")))
            .collect()
    }

    fn indices(&self, idx: &[usize], location: &str, seen: &mut BTreeSet<Vec<usize>>) -> Result<(), DocumentError> {
        if let Some(&index) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(DocumentError::IndexOutOfRange {
                location: location.into(),
                index,
                dim: self.dim,
            });
        }
        if !seen.insert(idx.to_vec()) {
            return Err(DocumentError::Duplicate {
                location: location.into(),
                entry: idx.to_vec(),
            });
        }
        Ok(())
    }

    fn entries2(&self, v: &[(usize, usize, String)], key: &str) -> Result<Vec<Entry2>, DocumentError> {
        let mut seen = BTreeSet::new();
        v.iter()
            .enumerate()
            .map(|(n, (i, j, c))| {
                let loc = format!("{key}[{n}]");
                self.indices(&[*i, *j], &loc, &mut seen)?;
                Ok((*i, *j, self.scalar(c, loc)?))
            })
            .collect()
    }

    fn entries3(&self, v: &[(usize, usize, usize, String)], key: &str) -> Result<Vec<Entry3>, DocumentError> {
        let mut seen = BTreeSet::new();
        v.iter()
            .enumerate()
            .map(|(n, (i, j, k, c))| {
                let loc = format!("{key}[{n}]");
                self.indices(&[*i, *j, *k], &loc, &mut seen)?;
                Ok((*i, *j, *k, self.scalar(c, loc)?))
            })
            .collect()
    }
}

fn json_error(e: serde_json::Error) -> DocumentError {
    DocumentError::Json(e.to_string())
}

/// Parse and index-check a structure document.
pub fn parse_structure(text: &str) -> Result<StructureDocument, DocumentError> {
    let raw: RawStructure = serde_json::from_str(text).map_err(json_error)?;
    let field = parse_field(raw.field)?;
    let ctx = Ctx {
        field,
        dim: raw.dimension,
    };
    if raw.parity.len() != raw.dimension {
        return Err(DocumentError::LengthMismatch {
            location: "parity".into(),
            expected: raw.dimension,
            found: raw.parity.len(),
        });
    }
    if raw.delta.len() != raw.dimension {
        return Err(DocumentError::LengthMismatch {
            location: "delta".into(),
            expected: raw.dimension,
            found: raw.delta.len(),
        });
    }
    let delta = raw
        .delta
        .iter()
        .enumerate()
        .map(|(i, terms)| ctx.entries2(terms, &format!("delta[{i}]")))
        .collect::<Result<_, _>>()?;
    Ok(StructureDocument {
        name: raw.name,
        field,
        dimension: raw.dimension,
        parity: raw.parity,
        unit: ctx.vector(&raw.unit, "unit")?,
        mult: ctx.entries3(&raw.mult, "mult")?,
        delta,
        epsilon: ctx.vector(&raw.epsilon, "epsilon")?,
        antipode: ctx.entries2(&raw.antipode, "antipode")?,
        phi: ctx.entries3(&raw.phi, "phi")?,
        alpha: ctx.vector(&raw.alpha, "alpha")?,
        beta: ctx.vector(&raw.beta, "beta")?,
        r: raw.r.as_ref().map(|r| ctx.entries2(r, "r")).transpose()?,
    })
}

/// Parse a twistor document.
pub fn parse_twist(text: &str) -> Result<TwistDocument, DocumentError> {
    let raw: RawTwist = serde_json::from_str(text).map_err(json_error)?;
    let field = parse_field(raw.field)?;
    let ctx = Ctx {
        field,
        dim: raw.dimension,
    };
    let normalization = match raw.normalization {
        None => None,
        Some(n) => Some((
            ctx.scalar(&n.epsilon_alpha, "normalization.epsilon_alpha".into())?,
            ctx.scalar(&n.epsilon_beta, "normalization.epsilon_beta".into())?,
        )),
    };
    Ok(TwistDocument {
        name: raw.name,
        field,
        dimension: raw.dimension,
        element: ctx.entries2(&raw.element, "element")?,
        inverse: raw.inverse.as_ref().map(|v| ctx.entries2(v, "inverse")).transpose()?,
        normalization,
    })
}

fn element2(alg: &Arc<GradedAlgebra>, entries: &[Entry2]) -> Result<TensorElement, TensorError> {
    TensorElement::from_terms(alg, 2, entries.iter().map(|(i, j, c)| (vec![*i, *j], c.clone())))
}

fn entries_of2(x: &TensorElement) -> Vec<Entry2> {
    x.terms().iter().map(|(w, c)| (w[0], w[1], c.clone())).collect()
}

impl StructureDocument {
    pub fn to_structure(&self) -> Result<QhsaStructure, DocumentError> {
        let alg = Arc::new(GradedAlgebra::new(
            self.field,
            self.parity.clone(),
            self.unit.clone(),
            self.mult.clone(),
        )?);
        let d = self.dimension;
        let delta = StructureMap::new(
            &alg,
            2,
            self.delta
                .iter()
                .map(|terms| element2(&alg, terms))
                .collect::<Result<_, _>>()?,
        )?;
        let epsilon = StructureMap::new(
            &alg,
            0,
            self.epsilon
                .iter()
                .map(|c| TensorElement::scalar(&alg, c.clone()))
                .collect(),
        )?;
        let mut s_images = vec![TensorElement::zero(&alg, 1); d];
        for (i, j, c) in &self.antipode {
            s_images[*i] = &s_images[*i] + &TensorElement::word(&alg, vec![*j], c.clone());
        }
        let antipode = StructureMap::new(&alg, 1, s_images)?;
        let phi = TensorElement::from_terms(
            &alg,
            3,
            self.phi.iter().map(|(i, j, k, c)| (vec![*i, *j, *k], c.clone())),
        )?;
        let alpha = TensorElement::from_vector(&alg, &self.alpha);
        let beta = TensorElement::from_vector(&alg, &self.beta);
        let r = self.r.as_ref().map(|r| element2(&alg, r)).transpose()?;
        Ok(QhsaStructure::new(
            self.name.clone(),
            alg,
            delta,
            epsilon,
            antipode,
            phi,
            alpha,
            beta,
            r,
        )?)
    }

    pub fn from_structure(h: &QhsaStructure) -> Self {
        let alg = h.algebra();
        let d = alg.dim();
        StructureDocument {
            name: h.name().to_string(),
            field: alg.field(),
            dimension: d,
            parity: alg.parities().to_vec(),
            unit: alg.unit().to_vec(),
            mult: alg.mult_entries(),
            delta: (0..d).map(|i| entries_of2(h.delta().image(i))).collect(),
            epsilon: (0..d).map(|i| h.epsilon().image(i).to_scalar()).collect(),
            antipode: (0..d)
                .flat_map(|i| {
                    h.antipode()
                        .image(i)
                        .terms()
                        .iter()
                        .map(move |(w, c)| (i, w[0], c.clone()))
                        .collect::<Vec<_>>()
                })
                .collect(),
            phi: h
                .phi()
                .terms()
                .iter()
                .map(|(w, c)| (w[0], w[1], w[2], c.clone()))
                .collect(),
            alpha: h.alpha().to_vector(),
            beta: h.beta().to_vector(),
            r: h.r().map(entries_of2),
        }
    }
}

impl TwistDocument {
    pub fn from_element(
        name: impl Into<String>,
        element: &TensorElement,
        inverse: Option<&TensorElement>,
        normalization: Option<(Scalar, Scalar)>,
    ) -> Self {
        TwistDocument {
            name: name.into(),
            field: element.field(),
            dimension: element.algebra().dim(),
            element: entries_of2(element),
            inverse: inverse.map(entries_of2),
            normalization,
        }
    }

    /// The element (and declared inverse) over the algebra of `h`.
    pub fn elements(&self, h: &QhsaStructure) -> Result<(TensorElement, Option<TensorElement>), DocumentError> {
        let target = h.algebra().field();
        let liftable = self.field == FieldSpec::Rational;
        if (self.field != target && !liftable) || self.dimension != h.dim() {
            return Err(DocumentError::Mismatch(format!(
                "twistor \"{}\" is over {} with dimension {}, structure \"{}\" is over {} with dimension {}",
                self.name,
                self.field,
                self.dimension,
                h.name(),
                h.algebra().field(),
                h.dim()
            )));
        }
        let lift = |v: &[Entry2]| -> Vec<Entry2> {
            v.iter()
                .map(|(i, j, c)| {
                    let c = match c.as_rational() {
                        Some(q) if self.field != target => Scalar::from_rational(target, q),
                        _ => c.clone(),
                    };
                    (*i, *j, c)
                })
                .collect()
        };
        let f = element2(h.algebra(), &lift(&self.element))?;
        let inv = self.inverse.as_ref().map(|v| element2(h.algebra(), &lift(v))).transpose()?;
        Ok((f, inv))
    }
}

fn q(s: &Scalar) -> String {
    format!("\"{s}\"")
}

fn vector_json(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(q).collect();
    format!("[{}]", parts.join(", "))
}

fn entry2_json(e: &Entry2) -> String {
    format!("[{}, {}, {}]", e.0, e.1, q(&e.2))
}

fn entry3_json(e: &Entry3) -> String {
    format!("[{}, {}, {}, {}]", e.0, e.1, e.2, q(&e.3))
}

fn block(out: &mut String, key: &str, lines: Vec<String>, last: bool) {
    let comma = if last { "" } else { "," };
    if lines.is_empty() {
        let _ = writeln!(out, "  \"{key}\": []{comma}");
        return;
    }
    let _ = writeln!(out, "  \"{key}\": [");
    let n = lines.len();
    for (i, l) in lines.into_iter().enumerate() {
        let sep = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    {l}{sep}");
    }
    let _ = writeln!(out, "  ]{comma}");
}

fn sorted2(v: &[Entry2]) -> Vec<Entry2> {
    let mut v = v.to_vec();
    v.sort_by_key(|e| (e.0, e.1));
    v
}

fn sorted3(v: &[Entry3]) -> Vec<Entry3> {
    let mut v = v.to_vec();
    v.sort_by_key(|e| (e.0, e.1, e.2));
    v
}

fn nonzero2(v: &[Entry2]) -> Vec<Entry2> {
    sorted2(v).into_iter().filter(|e| !e.2.is_zero()).collect()
}

fn nonzero3(v: &[Entry3]) -> Vec<Entry3> {
    sorted3(v).into_iter().filter(|e| !e.3.is_zero()).collect()
}

fn name_json(name: &str) -> String {
    serde_json::to_string(name).expect("strings serialize")
}

/// Canonical text of a structure document.
pub fn serialize_structure(doc: &StructureDocument) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", name_json(&doc.name));
    let _ = writeln!(out, "  \"field\": {},", field_json(doc.field));
    let _ = writeln!(out, "  \"dimension\": {},", doc.dimension);
    let parity: Vec<String> = doc.parity.iter().map(u8::to_string).collect();
    let _ = writeln!(out, "  \"parity\": [{}],", parity.join(", "));
    let _ = writeln!(out, "  \"unit\": {},", vector_json(&doc.unit));
    block(&mut out, "mult", nonzero3(&doc.mult).iter().map(entry3_json).collect(), false);
    let delta: Vec<String> = doc
        .delta
        .iter()
        .map(|terms| {
            let parts: Vec<String> = nonzero2(terms).iter().map(entry2_json).collect();
            format!("[{}]", parts.join(", "))
        })
        .collect();
    block(&mut out, "delta", delta, false);
    let _ = writeln!(out, "  \"epsilon\": {},", vector_json(&doc.epsilon));
    block(&mut out, "antipode", nonzero2(&doc.antipode).iter().map(entry2_json).collect(), false);
    block(&mut out, "phi", nonzero3(&doc.phi).iter().map(entry3_json).collect(), false);
    let _ = writeln!(out, "  \"alpha\": {},", vector_json(&doc.alpha));
    match &doc.r {
        None => {
            let _ = writeln!(out, "  \"beta\": {}", vector_json(&doc.beta));
        }
        Some(r) => {
            let _ = writeln!(out, "  \"beta\": {},", vector_json(&doc.beta));
            block(&mut out, "r", nonzero2(r).iter().map(entry2_json).collect(), true);
        }
    }
    out.push_str("}\n");
    out
}

/// Canonical text of a twistor document.
pub fn serialize_twist(doc: &TwistDocument) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", name_json(&doc.name));
    let _ = writeln!(out, "  \"field\": {},", field_json(doc.field));
    let _ = writeln!(out, "  \"dimension\": {},", doc.dimension);
    let more = doc.inverse.is_some() || doc.normalization.is_some();
    block(&mut out, "element", nonzero2(&doc.element).iter().map(entry2_json).collect(), !more);
    if let Some(inv) = &doc.inverse {
        block(
            &mut out,
            "inverse",
            nonzero2(inv).iter().map(entry2_json).collect(),
            doc.normalization.is_none(),
        );
    }
    if let Some((ea, eb)) = &doc.normalization {
        let _ = writeln!(
            out,
            "  \"normalization\": {{\"epsilon_alpha\": {}, \"epsilon_beta\": {}}}",
            q(ea),
            q(eb)
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
  "name": "small",
  "field": "rational",
  "dimension": 1,
  "parity": [0],
  "unit": ["1"],
  "mult": [
    [0, 0, 0, "1"]
  ],
  "delta": [
    [[0, 0, "1"]]
  ],
  "epsilon": ["1"],
  "antipode": [
    [0, 0, "1"]
  ],
  "phi": [
    [0, 0, 0, "1"]
  ],
  "alpha": ["1"],
  "beta": ["1"]
}
"#;

    #[test]
    fn canonical_roundtrip() {
        let doc = parse_structure(SMALL).unwrap();
        assert_eq!(serialize_structure(&doc), SMALL);
        let h = doc.to_structure().unwrap();
        assert_eq!(serialize_structure(&StructureDocument::from_structure(&h)), SMALL);
    }

    #[test]
    fn zero_denominator_names_its_position() {
        let bad = SMALL.replace("\"alpha\": [\"1\"]", "\"alpha\": [\"1/0\"]");
        let err = parse_structure(&bad).unwrap_err();
        assert!(matches!(err, DocumentError::Scalar { ref location, source: ScalarError::ZeroDenominator(_) } if location == "alpha[0]"));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_indices() {
        let extra = SMALL.replace("\"name\": \"small\",", "\"name\": \"small\", \"extra\": 1,");
        assert!(matches!(parse_structure(&extra), Err(DocumentError::Json(_))));
        let oob = SMALL.replace("[0, 0, 0, \"1\"]\n  ],\n  \"delta\"", "[0, 0, 3, \"1\"]\n  ],\n  \"delta\"");
        assert!(matches!(parse_structure(&oob), Err(DocumentError::IndexOutOfRange { .. })));
        let dup = SMALL.replace("[[0, 0, \"1\"]]", "[[0, 0, \"1\"], [0, 0, \"2\"]]");
        assert!(matches!(parse_structure(&dup), Err(DocumentError::Duplicate { .. })));
        let len = SMALL.replace("\"epsilon\": [\"1\"]", "\"epsilon\": [\"1\", \"0\"]");
        assert!(matches!(parse_structure(&len), Err(DocumentError::LengthMismatch { .. })));
        let field = SMALL.replace("\"rational\"", "\"real\"");
        assert!(matches!(parse_structure(&field), Err(DocumentError::Field(_))));
    }

    #[test]
    fn cyclotomic_field_syntax() {
        let doc = SMALL.replace("\"rational\"", "{\"cyclotomic\": 4}").replace("\"1\"", "\"[1, 0]\"");
        let parsed = parse_structure(&doc).unwrap();
        assert_eq!(parsed.field, FieldSpec::Cyclotomic(4));
        assert_eq!(serialize_structure(&parsed), doc);
    }

    #[test]
    fn twist_roundtrip() {
        let text = r#"{
  "name": "t",
  "field": "rational",
  "dimension": 2,
  "element": [
    [0, 0, "1"],
    [1, 1, "2"]
  ],
  "inverse": [
    [0, 0, "1"],
    [1, 1, "1/2"]
  ],
  "normalization": {"epsilon_alpha": "1", "epsilon_beta": "1"}
}
"#;
        let doc = parse_twist(text).unwrap();
        assert_eq!(serialize_twist(&doc), text);
        let mut plain = doc.clone();
        plain.inverse = None;
        plain.normalization = None;
        assert_eq!(parse_twist(&serialize_twist(&plain)).unwrap(), plain);
    }
}
