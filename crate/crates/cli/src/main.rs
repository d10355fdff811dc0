//! `nilweight`: weight filtrations, relative weight filtrations and curve
//! systems from the command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed but the
//! computation is refused, and 2 when the input cannot be read or parsed.

mod demo;
mod render;

use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilweight::filtered::Filtration;
use nilweight::json;
use nilweight::nilwf::{
    construct_relative, monodromy_filtration, relative_wf_curve_formula, verify_relative,
    weight_filtration, NilpotentOperator, DEFAULT_SEARCH_DEPTH,
};
use nilweight::pants::{self, Pairing, PantsGraph, Reachability, WhiteKind};
use nilweight::repdim;
use nilweight::surface::{self, picard_lefschetz};
use nilweight::Error;
use serde_json::{json, Value};

use render::Report;

#[derive(Parser)]
#[command(
    name = "nilweight",
    version,
    about = "Weight filtrations of nilpotent operators"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Table, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Weight filtration W(N) of a nilpotent matrix, centered at 0.
    Wf { matrix: PathBuf },
    /// W(N) recentered at the given weight.
    Mwf {
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        center: i64,
    },
    /// Relative weight filtration of N on a filtered space.
    Rwf {
        matrix: PathBuf,
        filtration: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEARCH_DEPTH)]
        depth: usize,
        /// Read the filtration as decreasing, F^p = F_{-p}.
        #[arg(long)]
        decreasing: bool,
    },
    /// Picard-Lefschetz operator of a curve system and its filtrations.
    Pl { curves: PathBuf },
    /// Pants graph operations.
    #[command(subcommand)]
    Pants(PantsCommand),
    /// Dimension bounds from the representation theory of GL(g).
    Dims {
        #[arg(long)]
        g: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        /// Tabulate 3 <= g <= g-max.
        #[arg(long)]
        g_max: Option<u32>,
        /// Tabulate 1 <= m <= m-max.
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        /// Dimensions of the structural modules for the given g.
        #[arg(long)]
        structural: bool,
    },
    /// Worked examples.
    Demo {
        #[arg(value_enum)]
        which: Demo,
        #[arg(long)]
        genus: Option<usize>,
    },
}

#[derive(Subcommand)]
enum PantsCommand {
    /// Check the graph and its homology labels.
    Validate { graph: PathBuf },
    /// Perform an A-move at the given internal white vertex.
    Move {
        graph: PathBuf,
        #[arg(long)]
        white: String,
        #[arg(long, value_enum, default_value_t = PairingArg::Cross)]
        pairing: PairingArg,
        /// Class of the new curve, comma separated; defaults to the first
        /// admissible candidate.
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
    /// Span of the curve classes and the induced monodromy filtration.
    Invariant { graph: PathBuf },
    /// Breadth-first search for a sequence of A-moves.
    Reach {
        from: PathBuf,
        to: PathBuf,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// List the built-in graphs, or print one as JSON.
    Catalog { name: Option<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum PairingArg {
    Cross,
    Twist,
}

impl From<PairingArg> for Pairing {
    fn from(p: PairingArg) -> Self {
        match p {
            PairingArg::Cross => Pairing::Cross,
            PairingArg::Twist => Pairing::Twist,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    Jordan,
    Strict,
    CurveSystem,
    BoundingPair,
    SpBigrading,
}

enum Failure {
    Input(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Input(msg),
            e => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: nilweight::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| match e {
        Error::Parse(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        e => Failure::Domain(e.to_string()),
    })
}

fn load_operator(path: &Path) -> std::result::Result<NilpotentOperator, Failure> {
    let m = with_path(path, json::matrix_from_json(&read(path)?))?;
    Ok(NilpotentOperator::new(m)?)
}

fn load_filtration(path: &Path, decreasing: bool) -> std::result::Result<Filtration, Failure> {
    let text = read(path)?;
    let mut v: Value = with_path(
        path,
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string())),
    )?;
    if decreasing {
        if let Some(Value::Object(steps)) = v.get_mut("steps") {
            let flipped = std::mem::take(steps)
                .into_iter()
                .map(|(k, b)| match k.trim().parse::<i64>() {
                    Ok(p) => ((-p).to_string(), b),
                    Err(_) => (k, b),
                })
                .collect();
            *steps = flipped;
        }
    }
    with_path(path, json::filtration_from_value(v))
}

fn load_graph(path: &Path) -> std::result::Result<PantsGraph, Failure> {
    with_path(path, json::pants_graph_from_json(&read(path)?))
}

fn wf(path: &Path, center: Option<i64>) -> Outcome {
    let n = load_operator(path)?;
    let (f, title) = match center {
        None => (weight_filtration(&n), "weight filtration W(N)".to_string()),
        Some(c) => (
            monodromy_filtration(&n, c),
            format!("monodromy filtration centered at {c}"),
        ),
    };
    Ok(render::filtration_report(
        if center.is_some() { "M" } else { "W" },
        &title,
        &f,
    ))
}

fn rwf(matrix: &Path, filtration: &Path, depth: usize, decreasing: bool) -> Outcome {
    let n = load_operator(matrix)?;
    let w = load_filtration(filtration, decreasing)?;
    let outcome = construct_relative(&n, &w, depth)?;
    let mut t = String::new();
    render::outcome(&mut t, &outcome);
    Ok(Report::new(json::outcome_to_value(&outcome), t))
}

fn pl(path: &Path) -> Outcome {
    let (s, cs) = with_path(path, json::curve_system_from_json(&read(path)?))?;
    let n = picard_lefschetz(&s, &cs)?;
    let v = surface::punctured_homology(s.genus(), s.punctures())?;
    let m = monodromy_filtration(&n, -1);
    let relative = relative_wf_curve_formula(&v, &n)?;
    let check = verify_relative(&n, v.filtration(), &relative)?;
    let mut t = format!(
        "genus {}, {} punctures, {} curves\n",
        s.genus(),
        s.punctures(),
        cs.len()
    );
    render::matrix(&mut t, "N", n.matrix());
    t.push_str("monodromy filtration centered at -1:\n");
    render::filtration(&mut t, "M", &m);
    t.push_str("relative weight filtration:\n");
    render::filtration(&mut t, "M", &relative);
    let _ = writeln!(t, "verified: {}", check.is_ok());
    if let Err(v) = &check {
        render::violation(&mut t, v);
    }
    let j = json!({
        "operator": json::matrix_to_value(n.matrix()),
        "monodromy": json::filtration_to_value(&m),
        "relative": json::filtration_to_value(&relative),
        "verified": check.is_ok(),
        "violation": check.err().map(|v| json::violation_to_value(&v)),
    });
    Ok(Report::new(j, t))
}

fn graph_table(t: &mut String, pg: &PantsGraph) {
    let _ = writeln!(
        t,
        "genus {}, {} boundary, {} pants",
        pg.genus,
        pg.boundary,
        pg.blacks.len()
    );
    for w in &pg.whites {
        let ends: Vec<&str> = pg
            .edges
            .iter()
            .filter(|(_, wid)| *wid == w.id)
            .map(|(b, _)| b.as_str())
            .collect();
        let kind = match w.kind {
            WhiteKind::Internal => "internal",
            WhiteKind::Boundary => "boundary",
        };
        let _ = writeln!(t, "  {} {:?} [{}] {kind}", w.id, w.class, ends.join(" "));
    }
}

fn pants_cmd(cmd: &PantsCommand) -> Outcome {
    match cmd {
        PantsCommand::Validate { graph } => {
            let pg = load_graph(graph)?;
            pg.validate()?;
            let t = format!("valid, b_1 = {}\n", pg.betti());
            Ok(Report::new(json!({"valid": true, "betti": pg.betti()}), t))
        }
        PantsCommand::Move {
            graph,
            white,
            pairing,
            class,
        } => {
            let pg = load_graph(graph)?;
            let pairing = Pairing::from(*pairing);
            let class = match class {
                Some(text) => text
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Failure::Input(format!("--class: {e}")))?,
                None => pants::candidate_classes(&pg, white, pairing)?
                    .into_iter()
                    .next()
                    .ok_or_else(|| Failure::Domain(format!("no admissible class at {white}")))?,
            };
            let moved = pants::a_move(&pg, white, pairing, &class)?;
            let mut t = String::new();
            graph_table(&mut t, &moved);
            Ok(Report::new(json::pants_graph_to_value(&moved), t))
        }
        PantsCommand::Invariant { graph } => {
            let inv = pants::handlebody_invariant(&load_graph(graph)?)?;
            let mut t = format!("span {}\n", render::basis(&inv.span));
            render::filtration(&mut t, "M", &inv.filtration);
            let j = json!({
                "span": json::subspace_to_value(&inv.span),
                "filtration": json::filtration_to_value(&inv.filtration),
            });
            Ok(Report::new(j, t))
        }
        PantsCommand::Reach { from, to, bound } => {
            let r = pants::a_move_reachable(&load_graph(from)?, &load_graph(to)?, *bound)?;
            let (j, t) = match r {
                Reachability::Reachable { moves } => (
                    json!({"reachable": true, "moves": moves}),
                    format!("reachable in {moves} A-moves\n"),
                ),
                Reachability::NotWithinBound => (
                    json!({"reachable": false, "bound": bound}),
                    format!("not reachable within {bound} A-moves\n"),
                ),
            };
            Ok(Report::new(j, t))
        }
        PantsCommand::Catalog { name } => {
            let catalog = pants::catalog();
            match name {
                None => {
                    let names: Vec<&str> = catalog.iter().map(|(n, _)| *n).collect();
                    let t = names.iter().map(|n| format!("{n}\n")).collect();
                    Ok(Report::new(json!(names), t))
                }
                Some(name) => {
                    let (_, pg) = catalog
                        .into_iter()
                        .find(|(n, _)| n == name)
                        .ok_or_else(|| Failure::Input(format!("unknown catalog graph {name:?}")))?;
                    let mut t = String::new();
                    graph_table(&mut t, &pg);
                    Ok(Report::new(json::pants_graph_to_value(&pg), t))
                }
            }
        }
    }
}

fn dims_line(t: &mut String, row: &repdim::DimsRow) {
    let _ = writeln!(
        t,
        "  g={:<2} m={:<2} {:<10} dim {:<8} bound {}",
        row.g, row.m, row.partition, row.dim, row.bound
    );
}

fn dims(
    g: Option<u32>,
    m: Option<u32>,
    g_max: Option<u32>,
    m_max: u32,
    structural: bool,
) -> Outcome {
    if structural {
        let g = g.ok_or_else(|| Failure::Input("--structural needs --g".into()))?;
        let d = repdim::structural_dims(g)?;
        let t = format!(
            "g={}: Λ³H {}, Hom(A,L2) {}, Hom(A,L3) {}, Hom(V,Λ²V) {}, Λ²Hom(A,L2) {}\n",
            d.g, d.lambda3_h, d.hom_a_l2, d.hom_a_l3, d.hom_v_lambda2_v, d.lambda2_hom_a_l2
        );
        return Ok(Report::new(json!(d), t));
    }
    match (g, m, g_max) {
        (Some(g), Some(m), None) => {
            let row = repdim::dims_row(g, m)?;
            let mut t = String::new();
            dims_line(&mut t, &row);
            Ok(Report::new(json!(row), t))
        }
        (None, None, Some(g_max)) => {
            let mut rows = Vec::new();
            let mut t = String::new();
            for g in 3..=g_max {
                for m in 1..=m_max {
                    let row = repdim::dims_row(g, m)?;
                    dims_line(&mut t, &row);
                    rows.push(row);
                }
            }
            let insufficient = repdim::single_irrep_insufficient(g_max, m_max)?;
            let listed: Vec<String> = insufficient
                .iter()
                .map(|(g, m)| format!("({g},{m})"))
                .collect();
            let _ = writeln!(
                t,
                "bound not positive within the theorem range: {}",
                listed.join(" ")
            );
            let j = json!({"rows": rows, "insufficient": insufficient});
            Ok(Report::new(j, t))
        }
        _ => Err(Failure::Input(
            "give either --g and --m, or --g-max [--m-max]".into(),
        )),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Wf { matrix } => wf(matrix, None),
        Command::Mwf { matrix, center } => wf(matrix, Some(*center)),
        Command::Rwf {
            matrix,
            filtration,
            depth,
            decreasing,
        } => rwf(matrix, filtration, *depth, *decreasing),
        Command::Pl { curves } => pl(curves),
        Command::Pants(cmd) => pants_cmd(cmd),
        Command::Dims {
            g,
            m,
            g_max,
            m_max,
            structural,
        } => dims(*g, *m, *g_max, *m_max, *structural),
        Command::Demo { which, genus } => Ok(match which {
            Demo::Jordan => demo::jordan()?,
            Demo::Strict => demo::strict()?,
            Demo::CurveSystem => demo::curve_system(genus.unwrap_or(1))?,
            Demo::BoundingPair => demo::bounding_pair(genus.unwrap_or(2))?,
            Demo::SpBigrading => demo::sp_bigrading(genus.unwrap_or(2))?,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.output {
                Output::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.json).expect("json")
                    )
                }
                Output::Table => print!("{}", report.table),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("malformed input: {msg}");
            ExitCode::from(2)
        }
    }
}
