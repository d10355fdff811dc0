//! JSON file formats. Rationals are written as strings (`"p/q"` or `"p"`);
//! plain JSON integers are accepted on input.
//!
//! ```text
//! matrix      {"rows": [["1", "0"], ["1/2", "0"]]}
//! subspace    {"ambient": 3, "basis": [["1", "0", "0"]]}
//! filtration  {"ambient": 3, "steps": {"-2": [["0", "0", "1"]], "-1": [...]}}
//! curves      {"genus": 1, "punctures": 2, "curves": [{"label": "a", "class": [1, 0, 0]}]}
//! ```

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::filtered::Filtration;
use crate::linalg::{format_scalar, parse_scalar, LinearMap, Scalar, Subspace, Vector};
use crate::nilwf::{RelativeViolation, RelativeWFOutcome, Route};
use crate::pants::PantsGraph;
use crate::surface::{CurveSystem, SurfaceModel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Text(String),
    Int(i64),
}

impl RawScalar {
    fn value(&self) -> Result<Scalar> {
        match self {
            RawScalar::Text(s) => parse_scalar(s),
            RawScalar::Int(i) => Ok(crate::linalg::int(*i)),
        }
    }
}

fn raw_vector(v: &[RawScalar]) -> Result<Vector> {
    v.iter().map(RawScalar::value).collect()
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn from_value<T: DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

pub fn vector_to_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_scalar(x))).collect())
}

fn vectors_to_value(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(|v| vector_to_value(v)).collect())
}

#[derive(Deserialize)]
struct MatrixDoc {
    rows: Vec<Vec<RawScalar>>,
    #[serde(default)]
    cols: Option<usize>,
}

pub fn matrix_from_value(v: Value) -> Result<LinearMap> {
    let doc: MatrixDoc = from_value(v)?;
    let rows = doc
        .rows
        .iter()
        .map(|r| raw_vector(r))
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_rows(rows, doc.cols.unwrap_or(0))
        .map_err(|e| Error::Parse(format!("matrix: {e}")))
}

pub fn matrix_from_json(text: &str) -> Result<LinearMap> {
    matrix_from_value(parse(text)?)
}

pub fn matrix_to_value(m: &LinearMap) -> Value {
    json!({ "rows": vectors_to_value(&m.to_rows()) })
}

#[derive(Deserialize)]
struct SubspaceDoc {
    ambient: usize,
    basis: Vec<Vec<RawScalar>>,
}

pub fn subspace_from_value(v: Value) -> Result<Subspace> {
    let doc: SubspaceDoc = from_value(v)?;
    let basis = doc
        .basis
        .iter()
        .map(|r| raw_vector(r))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(doc.ambient, basis).map_err(|e| Error::Parse(format!("subspace: {e}")))
}

pub fn subspace_to_value(s: &Subspace) -> Value {
    json!({ "ambient": s.ambient(), "basis": vectors_to_value(s.basis()) })
}

#[derive(Deserialize)]
struct FiltrationDoc {
    ambient: usize,
    steps: BTreeMap<String, Vec<Vec<RawScalar>>>,
}

pub fn filtration_from_value(v: Value) -> Result<Filtration> {
    let doc: FiltrationDoc = from_value(v)?;
    let mut steps = Vec::new();
    for (k, basis) in &doc.steps {
        let weight: i64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("filtration weight {k:?} is not an integer")))?;
        let vs = basis
            .iter()
            .map(|r| raw_vector(r))
            .collect::<Result<Vec<_>>>()?;
        let s = Subspace::span(doc.ambient, vs)
            .map_err(|e| Error::Parse(format!("filtration step {weight}: {e}")))?;
        steps.push((weight, s));
    }
    Filtration::new(doc.ambient, steps)
}

pub fn filtration_from_json(text: &str) -> Result<Filtration> {
    filtration_from_value(parse(text)?)
}

/// Jumps only, keyed by weight.
pub fn filtration_to_value(f: &Filtration) -> Value {
    let steps: serde_json::Map<String, Value> = f
        .jumps()
        .iter()
        .map(|(k, s)| (k.to_string(), vectors_to_value(s.basis())))
        .collect();
    json!({ "ambient": f.ambient(), "steps": steps })
}

pub fn gr_dims_to_value(dims: &BTreeMap<i64, usize>) -> Value {
    Value::Object(
        dims.iter()
            .map(|(k, d)| (k.to_string(), Value::from(*d)))
            .collect(),
    )
}

#[derive(Serialize, Deserialize)]
struct CurveDoc {
    label: String,
    class: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct CurveSystemDoc {
    genus: usize,
    #[serde(default)]
    punctures: usize,
    curves: Vec<CurveDoc>,
}

pub fn curve_system_from_json(text: &str) -> Result<(SurfaceModel, CurveSystem)> {
    let doc: CurveSystemDoc = parse(text)?;
    let s = SurfaceModel::new(doc.genus, doc.punctures);
    let cs = CurveSystem::new(doc.curves.into_iter().map(|c| (c.label, c.class)));
    Ok((s, cs))
}

pub fn curve_system_to_value(s: &SurfaceModel, cs: &CurveSystem) -> Value {
    let doc = CurveSystemDoc {
        genus: s.genus(),
        punctures: s.punctures(),
        curves: cs
            .labels()
            .iter()
            .zip(cs.classes())
            .map(|(l, c)| CurveDoc {
                label: l.clone(),
                class: c.clone(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data")
}

pub fn pants_graph_from_json(text: &str) -> Result<PantsGraph> {
    parse(text)
}

pub fn pants_graph_to_value(pg: &PantsGraph) -> Value {
    serde_json::to_value(pg).expect("plain data")
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::Strict => "strict",
        Route::SingleWeight => "single-weight",
        Route::Forced => "forced",
        Route::Search => "search",
    }
}

pub fn outcome_to_value(o: &RelativeWFOutcome) -> Value {
    match o {
        RelativeWFOutcome::Exists { filtration, route } => json!({
            "outcome": "Exists",
            "route": route_name(*route),
            "filtration": filtration_to_value(filtration),
            "gr": gr_dims_to_value(&filtration.gr_dims()),
        }),
        RelativeWFOutcome::CertifiedNonexistent {
            k,
            witness,
            candidate,
        } => json!({
            "outcome": "CertifiedNonexistent",
            "k": k,
            "witness": vector_to_value(witness),
            "candidate": filtration_to_value(candidate),
        }),
        RelativeWFOutcome::Inconclusive { depth } => json!({
            "outcome": "Inconclusive",
            "depth": depth,
        }),
    }
}

pub fn violation_to_value(v: &RelativeViolation) -> Value {
    match v {
        RelativeViolation::Shift { k, witness } => json!({
            "clause": 1,
            "k": k,
            "witness": vector_to_value(witness),
        }),
        RelativeViolation::Graded { weight, k } => json!({
            "clause": 2,
            "weight": weight,
            "k": k,
        }),
    }
}
