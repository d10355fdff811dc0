use std::fmt::Write;

use nilweight::filtered::Filtration;
use nilweight::json;
use nilweight::linalg::{int_vector, LinearMap, Subspace};
use nilweight::nilwf::{
    check_weight_axioms, construct_relative, relative_wf_curve_formula, verify_relative,
    weight_filtration, NilpotentOperator, RelativeWFOutcome, DEFAULT_SEARCH_DEPTH,
};
use nilweight::surface::{bounding_pair_model, sp_graded_dims, CurveSystem, SurfaceModel};
use nilweight::Result;
use serde_json::json;

use crate::render::{self, Report};

pub fn jordan() -> Result<Report> {
    let n = NilpotentOperator::new(LinearMap::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]))?;
    let w = weight_filtration(&n);
    let axioms = check_weight_axioms(&n, &w, 0)?.is_ok();
    let mut t = String::from("Jordan block of size 3, N e_0 = e_-2, N e_2 = e_0\n");
    render::matrix(&mut t, "N", n.matrix());
    t.push_str("weight filtration W(N):\n");
    render::filtration(&mut t, "W", &w);
    let _ = writeln!(t, "axioms hold: {axioms}");
    let j = json!({
        "demo": "jordan",
        "operator": json::matrix_to_value(n.matrix()),
        "filtration": json::filtration_to_value(&w),
        "gr": json::gr_dims_to_value(&w.gr_dims()),
        "axioms": axioms,
    });
    Ok(Report::new(j, t))
}

pub fn strict() -> Result<Report> {
    let e = |v: &[i64]| int_vector(v);
    let w = Filtration::new(
        3,
        [
            (-2, Subspace::span(3, vec![e(&[1, 0, 0])])?),
            (0, Subspace::span(3, vec![e(&[1, 0, 0]), e(&[0, 1, 0])])?),
            (1, Subspace::full(3)),
        ],
    )?;
    let n = NilpotentOperator::new(LinearMap::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]))?;
    let outcome = construct_relative(&n, &w, DEFAULT_SEARCH_DEPTH)?;
    let equals_w = outcome.filtration() == Some(&w);
    let mut t = String::from("N lowers W by two, so every Gr^W N vanishes\n");
    render::matrix(&mut t, "N", n.matrix());
    t.push_str("W:\n");
    render::filtration(&mut t, "W", &w);
    render::outcome(&mut t, &outcome);
    let _ = writeln!(t, "M = W: {equals_w}");
    let j = json!({
        "demo": "strict",
        "operator": json::matrix_to_value(n.matrix()),
        "w": json::filtration_to_value(&w),
        "result": json::outcome_to_value(&outcome),
        "equals_w": equals_w,
    });
    Ok(Report::new(j, t))
}

pub fn curve_system(genus: usize) -> Result<Report> {
    let s = SurfaceModel::new(genus, 2);
    let cs = CurveSystem::a_curves(&s, &[1]);
    let n = nilweight::surface::picard_lefschetz(&s, &cs)?;
    let v = nilweight::surface::punctured_homology(genus, 2)?;
    let m = relative_wf_curve_formula(&v, &n)?;
    let verified = verify_relative(&n, v.filtration(), &m)?.is_ok();
    let mut t = format!("genus {genus}, 2 punctures, curve system {{a_1}}\n");
    render::matrix(&mut t, "N", n.matrix());
    t.push_str("W:\n");
    render::filtration(&mut t, "W", v.filtration());
    t.push_str("M = (im N + W_-2, ker N + W_-2, V):\n");
    render::filtration(&mut t, "M", &m);
    let _ = writeln!(t, "relative weight filtration verified: {verified}");
    let j = json!({
        "demo": "curve-system",
        "genus": genus,
        "curves": json::curve_system_to_value(&s, &cs),
        "operator": json::matrix_to_value(n.matrix()),
        "w": json::filtration_to_value(v.filtration()),
        "m": json::filtration_to_value(&m),
        "gr": json::gr_dims_to_value(&m.gr_dims()),
        "verified": verified,
    });
    Ok(Report::new(j, t))
}

pub fn bounding_pair(genus: usize) -> Result<Report> {
    let bp = bounding_pair_model(genus)?;
    let outcome = construct_relative(&bp.operator, bp.space.filtration(), DEFAULT_SEARCH_DEPTH)?;
    let mut t = format!(
        "bounding pair on genus {genus} with 2 punctures: c0 = {}, c1 = {}\n",
        render::vector(&bp.curves[0]),
        render::vector(&bp.curves[1])
    );
    render::matrix(&mut t, "N", bp.operator.matrix());
    t.push_str("W:\n");
    render::filtration(&mut t, "W", bp.space.filtration());
    render::outcome(&mut t, &outcome);
    let checked = match &outcome {
        RelativeWFOutcome::CertifiedNonexistent {
            k,
            witness,
            candidate,
        } => {
            let image = bp.operator.matrix().apply(witness);
            let ok =
                candidate.step(*k).contains(witness) && !candidate.step(k - 2).contains(&image);
            let _ = writeln!(t, "witness checked: {ok}");
            ok
        }
        _ => false,
    };
    let j = json!({
        "demo": "bounding-pair",
        "genus": genus,
        "operator": json::matrix_to_value(bp.operator.matrix()),
        "w": json::filtration_to_value(bp.space.filtration()),
        "result": json::outcome_to_value(&outcome),
        "witness_checked": checked,
    });
    Ok(Report::new(j, t))
}

pub fn sp_bigrading(genus: usize) -> Result<Report> {
    let s = SurfaceModel::new(genus, 0);
    let single = sp_graded_dims(&s, &CurveSystem::a_curves(&s, &[1]))?;
    let all: Vec<usize> = (1..=genus).collect();
    let lagrangian = sp_graded_dims(&s, &CurveSystem::a_curves(&s, &all))?;
    let mut t = format!("Gr^M of sp(H), genus {genus}\n");
    t.push_str("curve system {a_1}:\n");
    render::gr(&mut t, &single);
    let _ = writeln!(t, "  total {}", single.values().sum::<usize>());
    t.push_str("curve system {a_1, ..., a_g}:\n");
    render::gr(&mut t, &lagrangian);
    let _ = writeln!(t, "  total {}", lagrangian.values().sum::<usize>());
    let j = json!({
        "demo": "sp-bigrading",
        "genus": genus,
        "single": json::gr_dims_to_value(&single),
        "lagrangian": json::gr_dims_to_value(&lagrangian),
    });
    Ok(Report::new(j, t))
}
