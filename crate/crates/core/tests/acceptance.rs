//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the report is always printed.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use nilweight::filtered::{bigraded_dims, dual_filtration, hom_filtration, tensor_filtration};
use nilweight::nilwf::{
    check_weight_axioms, construct_relative, relative_wf_curve_formula, verify_relative,
    weight_filtration, RelativeWFOutcome, Route,
};
use nilweight::pants::{
    a_move_neighbors, a_move_reachable, catalog, handlebody_invariant, Reachability,
};
use nilweight::repdim::{
    codim_bound, dim_kk, dim_kk1, gl_irrep_dim, single_irrep_insufficient, Partition,
};
use nilweight::surface::{
    ab_decomposition, bounding_pair_model, picard_lefschetz, punctured_homology, sp_graded_dims,
    span_and_isotropy, xi_eigenvalue_check, CurveSystem, SurfaceModel,
};
use rand::Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn weight_axioms() -> Verdict {
    let mut rng = rng(1);
    let start = Instant::now();
    for case in 0..200 {
        let d = rng.gen_range(1..=8);
        let n = random_nilpotent(&mut rng, d);
        let w = weight_filtration(&n);
        let axioms = check_weight_axioms(&n, &w, 0).map_err(|e| e.to_string())?;
        ensure(axioms.is_ok(), || format!("case {case}: {axioms:?}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("200 operators in {:.2}s", elapsed.as_secs_f64()))
}

fn jordan_oracle() -> Verdict {
    let mut rng = rng(2);
    for case in 0..100 {
        let d = rng.gen_range(1..=8);
        let n = random_nilpotent(&mut rng, d);
        let got = weight_filtration(&n).gr_dims();
        let want = jordan_gr_dims(n.matrix());
        ensure(got == want, || format!("case {case}: {got:?} vs {want:?}"))?;
    }
    Ok("100 operators".into())
}

fn strict_case() -> Verdict {
    let mut rng = rng(3);
    for case in 0..50 {
        let d = rng.gen_range(1..=6);
        let flag = AdaptedFlag::random(&mut rng, d, 3);
        let w = flag.filtration();
        let n = nilweight::nilwf::NilpotentOperator::new(flag.lowering_operator(&mut rng, 2))
            .map_err(|e| e.to_string())?;
        let outcome = construct_relative(&n, &w, 3).map_err(|e| e.to_string())?;
        let ok = matches!(
            &outcome,
            RelativeWFOutcome::Exists { filtration, route: Route::Strict } if *filtration == w
        );
        ensure(ok, || format!("case {case}: {outcome:?}"))?;
    }
    Ok("50 operators".into())
}

fn curve_formula() -> Verdict {
    let mut rng = rng(4);
    for case in 0..20 {
        let (s, cs) = random_curve_system(&mut rng);
        cs.validate(&s).map_err(|e| format!("case {case}: {e}"))?;
        let v = punctured_homology(s.genus(), s.punctures()).map_err(|e| e.to_string())?;
        let n = picard_lefschetz(&s, &cs).map_err(|e| e.to_string())?;
        let m = relative_wf_curve_formula(&v, &n).map_err(|e| e.to_string())?;
        let check = verify_relative(&n, v.filtration(), &m).map_err(|e| e.to_string())?;
        ensure(check.is_ok(), || {
            format!(
                "case {case} (g={}, n={}): {check:?}",
                s.genus(),
                s.punctures()
            )
        })?;
    }
    Ok("20 curve systems".into())
}

fn bounding_pair() -> Verdict {
    for g in 1..=3 {
        let bp = bounding_pair_model(g).map_err(|e| e.to_string())?;
        let outcome = construct_relative(&bp.operator, bp.space.filtration(), 3)
            .map_err(|e| e.to_string())?;
        let RelativeWFOutcome::CertifiedNonexistent {
            k,
            witness,
            candidate,
        } = &outcome
        else {
            return Err(format!("g={g}: {outcome:?}"));
        };
        let image = bp.operator.matrix().apply(witness);
        ensure(
            candidate == bp.space.filtration()
                && candidate.step(*k).contains(witness)
                && !candidate.step(k - 2).contains(&image),
            || format!("g={g}: witness does not check"),
        )?;
    }
    Ok("g = 1, 2, 3 certified with witness at k=-1".into())
}

fn calculus() -> Verdict {
    let mut rng = rng(6);
    for case in 0..100 {
        let a = random_filtered_space(&mut rng, 5);
        let b = random_filtered_space(&mut rng, 5);
        let (ga, gb) = (a.gr_dims(), b.gr_dims());
        let tensor = tensor_filtration(&a, &b).gr_dims();
        ensure(tensor == convolve(&ga, &gb), || {
            format!("case {case}: tensor")
        })?;
        let hom = hom_filtration(&a, &b).gr_dims();
        ensure(hom == convolve(&negate(&ga), &gb), || {
            format!("case {case}: hom")
        })?;
        let dual = dual_filtration(&a).gr_dims();
        ensure(dual == negate(&ga), || format!("case {case}: dual"))?;

        let second = AdaptedFlag::random(&mut rng, a.dim(), 2).filtration();
        let bi = bigraded_dims(&a, &second).map_err(|e| e.to_string())?;
        let mut table = bi.table().clone();
        table.retain(|_, v| *v > 0);
        ensure(bi.agrees(), || format!("case {case}: orders disagree"))?;
        ensure(table == bigraded_oracle(a.filtration(), &second), || {
            format!("case {case}: bigrading vs intersection oracle")
        })?;
    }
    Ok("100 bi-filtered spaces".into())
}

fn sp_bigrading() -> Verdict {
    let s = SurfaceModel::new(2, 0);
    let dims = sp_graded_dims(&s, &CurveSystem::a_curves(&s, &[1])).map_err(|e| e.to_string())?;
    let want: BTreeMap<i64, usize> = [(-2, 1), (-1, 2), (0, 4), (1, 2), (2, 1)].into();
    ensure(dims == want, || format!("g=2, {{a_1}}: {dims:?}"))?;
    // gl(A) ⊕ sp(H_0) with dim A = 1, dim H_0 = 2; Gr_2 = r(r+1)/2 with r = 1
    ensure(dims[&0] == 1 + 3 && dims[&2] == 1, || "Gr_0 or Gr_2".into())?;
    for g in 2..=4usize {
        let s = SurfaceModel::new(g, 0);
        let all: Vec<usize> = (1..=g).collect();
        let dims =
            sp_graded_dims(&s, &CurveSystem::a_curves(&s, &all)).map_err(|e| e.to_string())?;
        ensure(dims.get(&2) == Some(&(g * (g + 1) / 2)), || {
            format!("Lagrangian g={g}: {dims:?}")
        })?;
    }
    Ok("profile (1,2,4,2,1); Lagrangian Gr_2 = g(g+1)/2 for g = 2, 3, 4".into())
}

fn xi_eigenvalues() -> Verdict {
    let systems: [(usize, &[usize]); 5] = [
        (1, &[1]),
        (2, &[1]),
        (2, &[1, 2]),
        (3, &[2]),
        (3, &[1, 2, 3]),
    ];
    let mut pieces = 0;
    for (g, idx) in systems {
        let s = SurfaceModel::new(g, 0);
        let dec =
            ab_decomposition(&s, &CurveSystem::a_curves(&s, idx)).map_err(|e| e.to_string())?;
        for power in 1..=3 {
            let check = xi_eigenvalue_check(&dec, power).map_err(|e| e.to_string())?;
            ensure(check.holds(), || {
                format!("g={g} {idx:?} n={power}: {:?}", check.eigenvalues)
            })?;
            pieces += check.eigenvalues.len();
        }
    }
    Ok(format!("{pieces} graded pieces act by k+n"))
}

fn dimension_formulas() -> Verdict {
    for g in 3..=8u32 {
        for k in 1..=5u32 {
            let kk = dim_kk(g, k).map_err(|e| e.to_string())?;
            let kk1 = dim_kk1(g, k).map_err(|e| e.to_string())?;
            let oracle_kk = ssyt_count(&[k as usize, k as usize], g as usize) as u128;
            let oracle_kk1 = ssyt_count(&[k as usize, k as usize, 1], g as usize) as u128;
            ensure(kk == oracle_kk && kk1 == oracle_kk1, || {
                format!("g={g} k={k}: {kk}/{oracle_kk}, {kk1}/{oracle_kk1}")
            })?;
            ensure(
                gl_irrep_dim(&Partition::kk(k), g) == Ok(kk)
                    && gl_irrep_dim(&Partition::kk1(k), g) == Ok(kk1),
                || format!("g={g} k={k}: hook-content disagrees"),
            )?;
            if k > 1 {
                ensure(
                    kk > dim_kk(g, k - 1).unwrap() && kk1 > dim_kk1(g, k - 1).unwrap(),
                    || format!("g={g} k={k}: not increasing"),
                )?;
            }
        }
    }
    ensure(codim_bound(7, 1) == Ok(7), || "codim_bound(7,1)".into())?;
    let listed = single_irrep_insufficient(8, 6).map_err(|e| e.to_string())?;
    ensure(listed.contains(&(3, 4)) && listed.contains(&(6, 2)), || {
        format!("insufficient list {listed:?}")
    })?;
    Ok(format!(
        "SSYT oracle for 3≤g≤8, k≤5; insufficient {listed:?}"
    ))
}

fn pants_calculus() -> Verdict {
    let graphs = catalog();
    ensure(graphs.len() >= 10, || "catalog too small".into())?;
    let mut moves = 0;
    for (name, pg) in &graphs {
        pg.validate().map_err(|e| format!("{name}: {e}"))?;
        let inv = handlebody_invariant(pg).map_err(|e| e.to_string())?;
        let span =
            span_and_isotropy(&pg.surface(), &pg.curve_system()).map_err(|e| e.to_string())?;
        ensure(span.lagrangian, || format!("{name}: span not Lagrangian"))?;
        for next in a_move_neighbors(pg) {
            moves += 1;
            ensure(
                next.is_valid()
                    && next.betti() == pg.genus as i64
                    && next.blacks.len() == pg.blacks.len()
                    && next.whites.len() == pg.whites.len(),
                || format!("{name}: move broke the graph"),
            )?;
            ensure(handlebody_invariant(&next) == Ok(inv.clone()), || {
                format!("{name}: move changed the invariant")
            })?;
        }
    }
    let get = |n: &str| graphs.iter().find(|(m, _)| *m == n).unwrap().1.clone();
    for (x, y) in [("dumbbell-a", "theta-a"), ("dumbbell-b", "theta-b")] {
        let (p, q) = (get(x), get(y));
        ensure(handlebody_invariant(&p) == handlebody_invariant(&q), || {
            format!("{x} vs {y}: invariants differ")
        })?;
        let r = a_move_reachable(&p, &q, 3).map_err(|e| e.to_string())?;
        ensure(matches!(r, Reachability::Reachable { .. }), || {
            format!("{x} vs {y}: {r:?}")
        })?;
    }
    for (x, y) in [("theta-a", "theta-b"), ("dumbbell-a", "dumbbell-mixed")] {
        ensure(
            handlebody_invariant(&get(x)) != handlebody_invariant(&get(y)),
            || format!("{x} vs {y}: invariants agree"),
        )?;
    }
    Ok(format!("{} graphs, {moves} A-moves checked", graphs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 weight-filtration axioms", weight_axioms),
        ("2 Jordan rank-of-powers oracle", jordan_oracle),
        ("3 strict case gives M = W", strict_case),
        ("4 curve-system formula verifies", curve_formula),
        ("5 bounding pair has no relative filtration", bounding_pair),
        ("6 filtration calculus identities", calculus),
        ("7 sp bigrading profile", sp_bigrading),
        (
            "8 xi acts by scalars on Gr^M of tensor powers",
            xi_eigenvalues,
        ),
        ("9 dimension formulas", dimension_formulas),
        ("10 pants calculus", pants_calculus),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!(
                "[PASS] {name}: {detail} ({:.2}s)",
                start.elapsed().as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
