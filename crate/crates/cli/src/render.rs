use std::collections::BTreeMap;
use std::fmt::Write;

use nilweight::filtered::Filtration;
use nilweight::json;
use nilweight::linalg::{format_scalar, LinearMap, Scalar, Subspace};
use nilweight::nilwf::{RelativeViolation, RelativeWFOutcome, Route};
use serde_json::Value;

/// What a command produces: the same result as JSON and as text.
pub struct Report {
    pub json: Value,
    pub table: String,
}

impl Report {
    pub fn new(json: Value, table: String) -> Self {
        Report { json, table }
    }
}

pub fn vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

pub fn basis(s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let vs: Vec<String> = s.basis().iter().map(|v| vector(v)).collect();
    format!("<{}>", vs.join(", "))
}

pub fn matrix(out: &mut String, name: &str, m: &LinearMap) {
    let _ = writeln!(out, "{name} ({}x{}):", m.rows(), m.cols());
    let cells: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(format_scalar).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [ {} ]", padded.join(" "));
    }
}

pub fn filtration(out: &mut String, name: &str, f: &Filtration) {
    for (k, s) in f.jumps() {
        let _ = writeln!(out, "  {name}_{k:<3} dim {:<2} {}", s.dim(), basis(s));
    }
    gr(out, &f.gr_dims());
}

pub fn gr(out: &mut String, dims: &BTreeMap<i64, usize>) {
    let parts: Vec<String> = dims.iter().map(|(k, d)| format!("{k}:{d}")).collect();
    let _ = writeln!(out, "  Gr dims {{{}}}", parts.join(", "));
}

pub fn filtration_report(name: &str, title: &str, f: &Filtration) -> Report {
    let mut t = format!("{title}\n");
    filtration(&mut t, name, f);
    let json = serde_json::json!({
        "filtration": json::filtration_to_value(f),
        "gr": json::gr_dims_to_value(&f.gr_dims()),
    });
    Report::new(json, t)
}

fn route(r: Route) -> &'static str {
    match r {
        Route::Strict => "strict",
        Route::SingleWeight => "single-weight",
        Route::Forced => "forced",
        Route::Search => "search",
    }
}

pub fn outcome(out: &mut String, o: &RelativeWFOutcome) {
    match o {
        RelativeWFOutcome::Exists {
            filtration: f,
            route: r,
        } => {
            let _ = writeln!(out, "Exists (route: {})", route(*r));
            filtration(out, "M", f);
        }
        RelativeWFOutcome::CertifiedNonexistent {
            k,
            witness,
            candidate,
        } => {
            let _ = writeln!(out, "CertifiedNonexistent, witness k={k}");
            let _ = writeln!(
                out,
                "  N {} is not in M_{} of the forced candidate",
                vector(witness),
                k - 2
            );
            filtration(out, "M", candidate);
        }
        RelativeWFOutcome::Inconclusive { depth } => {
            let _ = writeln!(out, "Inconclusive (search depth {depth})");
        }
    }
}

pub fn violation(out: &mut String, v: &RelativeViolation) {
    match v {
        RelativeViolation::Shift { k, witness } => {
            let _ = writeln!(
                out,
                "  clause 1 fails at k={k}: N {} leaves M_{}",
                vector(witness),
                k - 2
            );
        }
        RelativeViolation::Graded { weight, k } => {
            let _ = writeln!(out, "  clause 2 fails on Gr^W_{weight} at k={k}");
        }
    }
}
