//! Batch command-line front-end: classify spaces, run the census and the
//! surveys, print diagram-dimension tables, and drive the verification
//! suites. All output is deterministic; `--format json` is byte-stable for
//! fixed inputs and seeds.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qmetric::classify::{
    self, enumerate_vertex_transitive, replay_check, survey, ClassKind, SurveyMode, TraceEntry,
};
use qmetric::diagram::{quantum_vs_classical, DiagramFamily, DimsRow};
use qmetric::perm::{automorphism_group, orbit_count_on_tuples, PermutationGroup};
use qmetric::space::{ColoredSpace, Graph, Rational64};
use qmetric::verify::run_suite;
use serde::Serialize;
use std::io::Write;

/// A verification or replay check failed.
const EXIT_CHECK_FAILED: i32 = 1;
/// Usage or input problem.
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "qmetric",
    about = "Classify the quantum symmetries of small finite metric spaces",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a space read from a matrix file.
    Classify(ClassifyArgs),
    /// Enumerate vertex-transitive graphs up to isomorphism.
    EnumerateVt(EnumerateArgs),
    /// Classify all (or sampled) colorings on n points.
    Survey(SurveyArgs),
    /// Diagram-category dimension tables (Gram ranks).
    Dims(DimsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Input file: size line, then an n×n matrix of rationals or letters.
    #[arg(long)]
    input: String,
    /// Report triangle-inequality violations (numeric inputs only).
    #[arg(long)]
    check_triangle: bool,
    /// Include the automorphism group in the report.
    #[arg(long)]
    autgroup: bool,
    /// Re-run the cascade and fail (exit 1) on any divergence.
    #[arg(long)]
    replay_check: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest vertex count (at most 8).
    #[arg(long)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SurveyArgs {
    /// Point count.
    #[arg(long)]
    n: usize,
    /// Enumerate every coloring (n <= 5).
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Draw this many uniform colorings instead (n <= 7).
    #[arg(long)]
    sample: Option<u64>,
    /// Seed for the sample generator.
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct DimsArgs {
    /// Diagram family: "tl" or "fc".
    #[arg(long)]
    family: String,
    /// TL parameter n (with --family tl).
    #[arg(long)]
    param: Option<u64>,
    /// FC parameters "m,s" (with --family fc).
    #[arg(long)]
    params: Option<String>,
    /// Largest tensor power.
    #[arg(long)]
    max_k: u32,
    /// Add classical orbit counts and the gap column.
    #[arg(long)]
    classical: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// magic | commutation | duplex | circulant | eigenspace | all
    #[arg(long)]
    suite: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Parses `argv` and dispatches. Returns the process exit code; output goes to
/// the supplied sinks. Exit codes: 0 success, 1 failed check, 2 usage/input.
pub fn run(argv: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(&args, stdout),
        Command::EnumerateVt(args) => cmd_enumerate(&args, stdout),
        Command::Survey(args) => cmd_survey(&args, stdout),
        Command::Dims(args) => cmd_dims(&args, stdout),
        Command::Verify(args) => cmd_verify(&args, stdout),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    let _ = writeln!(out, "{text}");
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct AutGroupReport {
    order: usize,
    generators: Vec<String>,
    orbits: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    n: usize,
    colors: u16,
    classification: &'a ClassKind,
    trace: &'a [TraceEntry],
    #[serde(skip_serializing_if = "Option::is_none")]
    autgroup: Option<AutGroupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    triangle_warnings: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    replay_check: Option<&'static str>,
}

fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("cannot read {}: {e}", args.input))?;
    let space = ColoredSpace::parse(&text).map_err(|e| format!("{}: {e}", args.input))?;
    let classification = classify::classify(&space);

    let autgroup = if args.autgroup {
        let g = automorphism_group(&space).map_err(|e| e.to_string())?;
        Some(AutGroupReport {
            order: g.order(),
            generators: g.generators().iter().map(|p| p.cycle_notation()).collect(),
            orbits: g.point_orbits(),
        })
    } else {
        None
    };
    let triangle_warnings = if args.check_triangle {
        let warnings = space.validate_metric().map_err(|e| e.to_string())?;
        Some(warnings.iter().map(|w| w.to_string()).collect::<Vec<_>>())
    } else {
        None
    };

    let replay = args
        .replay_check
        .then(|| if replay_check(&space, &classification) { "ok" } else { "diverged" });
    let report = ClassifyReport {
        n: space.size(),
        colors: space.num_colors(),
        classification: &classification.kind,
        trace: &classification.trace,
        autgroup,
        triangle_warnings,
        replay_check: replay,
    };
    match args.format {
        Format::Json => emit_json(&report, out),
        Format::Text => render_classify_text(&space, &report, out),
    }
    Ok(if replay == Some("diverged") { EXIT_CHECK_FAILED } else { 0 })
}

fn render_classify_text(space: &ColoredSpace, report: &ClassifyReport, out: &mut dyn Write) {
    let _ = writeln!(out, "space: {} points, {} colors", report.n, report.colors);
    // Void-color convention: the most frequent color is left undrawn.
    let decomposition = space.color_decomposition();
    let void = decomposition
        .iter()
        .max_by_key(|(c, g)| (g.edge_count(), std::cmp::Reverse(*c)))
        .map(|(c, _)| *c);
    for (c, g) in &decomposition {
        if Some(*c) == void {
            continue;
        }
        let edges: Vec<String> = g.edges().iter().map(|(i, j)| format!("({i},{j})")).collect();
        let _ = writeln!(out, "  color {c}: {}", edges.join(" "));
    }
    if let Some(v) = void {
        let _ = writeln!(out, "  (void color {v}: most frequent, not drawn)");
    }
    let _ = writeln!(out, "classification: {}", describe_kind(report.classification));
    let _ = writeln!(out, "trace:");
    for entry in report.trace {
        let rule = serde_token(&entry.rule);
        let outcome = serde_token(&entry.outcome);
        match &entry.witness {
            Some(w) => {
                let _ = writeln!(out, "  {rule:<23} {outcome}  [{}]", w.detail);
            }
            None => {
                let _ = writeln!(out, "  {rule:<23} {outcome}");
            }
        }
    }
    if let Some(aut) = &report.autgroup {
        let _ = writeln!(out, "automorphism group:");
        let _ = writeln!(out, "  order: {}", aut.order);
        let _ = writeln!(out, "  generators: {}", aut.generators.join(", "));
        let orbits: Vec<String> = aut
            .orbits
            .iter()
            .map(|o| format!("{{{}}}", o.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")))
            .collect();
        let _ = writeln!(out, "  orbits: {}", orbits.join(" "));
    }
    if let Some(warnings) = &report.triangle_warnings {
        if warnings.is_empty() {
            let _ = writeln!(out, "triangle inequality: ok");
        } else {
            let _ = writeln!(out, "triangle inequality: {} violations", warnings.len());
            for w in warnings {
                let _ = writeln!(out, "  {w}");
            }
        }
    }
    if let Some(replay) = report.replay_check {
        let _ = writeln!(out, "replay-check: {replay}");
    }
}

/// Serializes a unit enum through serde to reuse its snake_case names.
fn serde_token<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|j| j.as_str().map(str::to_owned))
        .unwrap_or_else(|| "?".into())
}

fn describe_kind(kind: &ClassKind) -> String {
    match kind {
        ClassKind::NonTransitive { witness } => {
            format!("non_transitive ({})", witness.detail)
        }
        ClassKind::Commutative { group: Some(g) } => {
            format!("commutative (group order {})", g.order)
        }
        ClassKind::Commutative { group: None } => "commutative".into(),
        ClassKind::TemperleyLieb { n } => format!("temperley_lieb (delta^2 = {n})"),
        ClassKind::FussCatalan { m, s } => format!("fuss_catalan (m = {m}, s = {s})"),
        ClassKind::Undetermined { reason } => format!("undetermined ({reason})"),
    }
}

// ---------------------------------------------------------------------------
// enumerate-vt
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct GraphReport {
    edge_count: usize,
    degree: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct EnumerateLevel {
    n: usize,
    count: usize,
    graphs: Vec<GraphReport>,
}

#[derive(Serialize)]
struct EnumerateReport {
    max_n: usize,
    counts: Vec<usize>,
    total: usize,
    levels: Vec<EnumerateLevel>,
}

fn graph_report(g: &Graph) -> GraphReport {
    GraphReport {
        edge_count: g.edge_count(),
        degree: if g.size() > 0 { g.degree(0) } else { 0 },
        edges: g.edges(),
    }
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, String> {
    let levels = enumerate_vertex_transitive(args.max_n).map_err(|e| e.to_string())?;
    let report = EnumerateReport {
        max_n: args.max_n,
        counts: levels.iter().map(Vec::len).collect(),
        total: levels.iter().map(Vec::len).sum(),
        levels: levels
            .iter()
            .enumerate()
            .map(|(i, graphs)| EnumerateLevel {
                n: i + 1,
                count: graphs.len(),
                graphs: graphs.iter().map(graph_report).collect(),
            })
            .collect(),
    };
    match args.format {
        Format::Json => emit_json(&report, out),
        Format::Text => {
            for level in &report.levels {
                let _ = writeln!(out, "n={}: {} graphs", level.n, level.count);
                for g in &level.graphs {
                    let edges: Vec<String> =
                        g.edges.iter().map(|(i, j)| format!("({i},{j})")).collect();
                    let _ = writeln!(
                        out,
                        "  {}-regular, {} edges: {}",
                        g.degree,
                        g.edge_count,
                        edges.join(" ")
                    );
                }
            }
            let counts: Vec<String> = report.counts.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "counts: {}", counts.join(" "));
            let _ = writeln!(out, "total: {}", report.total);
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// survey
// ---------------------------------------------------------------------------

fn cmd_survey(args: &SurveyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let mode = match (args.exhaustive, args.sample) {
        (true, None) => SurveyMode::Exhaustive,
        (false, Some(count)) => SurveyMode::Sample { count, seed: args.seed },
        (false, None) => return Err("pass --exhaustive or --sample K".into()),
        (true, Some(_)) => unreachable!("clap conflicts_with"),
    };
    let report = survey(args.n, mode).map_err(|e| e.to_string())?;
    match args.format {
        Format::Json => emit_json(&report, out),
        Format::Text => {
            let _ = writeln!(out, "survey: n={} mode={}", report.n, report.mode);
            let _ = writeln!(out, "note: {}", report.note);
            let _ = writeln!(
                out,
                "examined {} colorings, {} isomorphism classes",
                report.examined,
                report.classes.len()
            );
            let _ = writeln!(out, "tallies:");
            for (kind, count) in &report.tallies {
                let _ = writeln!(out, "  {kind}: {count} classes");
            }
            let _ = writeln!(out, "classes:");
            for class in &report.classes {
                let _ = writeln!(
                    out,
                    "  {}  {}  count={}",
                    class.key,
                    describe_kind(&class.classification.kind),
                    class.count
                );
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// dims
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct DimsReport {
    family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u64>,
    max_k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    classical_group_order: Option<usize>,
    rows: Vec<DimsRow>,
}

fn cmd_dims(args: &DimsArgs, out: &mut dyn Write) -> Result<i32, String> {
    let family = match args.family.as_str() {
        "tl" => {
            let n = args.param.ok_or("--family tl needs --param N")?;
            DiagramFamily::Tl { n }
        }
        "fc" => {
            let raw = args.params.as_deref().ok_or("--family fc needs --params M,S")?;
            let (m, s) = raw
                .split_once(',')
                .and_then(|(m, s)| Some((m.trim().parse().ok()?, s.trim().parse().ok()?)))
                .ok_or_else(|| format!("cannot parse --params {raw:?} as M,S"))?;
            DiagramFamily::Fc { m, s }
        }
        other => return Err(format!("unknown family {other:?}; use tl or fc")),
    };
    // Classical side: S_n for the simplex, the automorphism group of the
    // product space for Fuss-Catalan.
    let (classical, group_order) = if args.classical {
        let group = classical_group(family)?;
        let counts: Result<Vec<u64>, _> =
            (0..=args.max_k).map(|k| orbit_count_on_tuples(&group, k)).collect();
        (Some(counts.map_err(|e| e.to_string())?), Some(group.order()))
    } else {
        (None, None)
    };
    let rows = quantum_vs_classical(family, args.max_k, classical.as_deref())
        .map_err(|e| e.to_string())?;
    let (fname, n, m, s) = match family {
        DiagramFamily::Tl { n } => ("tl", Some(n), None, None),
        DiagramFamily::Fc { m, s } => ("fc", None, Some(m), Some(s)),
    };
    let report = DimsReport {
        family: fname.into(),
        n,
        m,
        s,
        max_k: args.max_k,
        classical_group_order: group_order,
        rows,
    };
    match args.format {
        Format::Json => emit_json(&report, out),
        Format::Text => {
            let header = match family {
                DiagramFamily::Tl { n } => format!("TL(delta^2 = {n})"),
                DiagramFamily::Fc { m, s } => format!("FC(delta_Y^2 = {m}, delta_Z^2 = {s})"),
            };
            let _ = writeln!(out, "{header}");
            if let Some(order) = report.classical_group_order {
                let _ = writeln!(out, "classical group order: {order}");
            }
            let _ = writeln!(out, "{:>3} {:>9} {:>6} {:>10} {:>5}", "k", "diagrams", "rank", "classical", "gap");
            for row in &report.rows {
                let classical = row.classical.map_or_else(|| "-".into(), |c| c.to_string());
                let gap = row.gap.map_or_else(|| "-".into(), |g| g.to_string());
                let _ = writeln!(
                    out,
                    "{:>3} {:>9} {:>6} {:>10} {:>5}",
                    row.k, row.diagrams, row.rank, classical, gap
                );
            }
        }
    }
    Ok(0)
}

fn classical_group(family: DiagramFamily) -> Result<PermutationGroup, String> {
    match family {
        DiagramFamily::Tl { n } => {
            if n > 9 {
                return Err(format!("classical comparison supports n <= 9, got {n}"));
            }
            Ok(PermutationGroup::symmetric(n as usize))
        }
        DiagramFamily::Fc { m, s } => {
            let one = Rational64::from_integer(1);
            let three_halves = Rational64::new(3, 2);
            let space = ColoredSpace::build_simplex_product(m as usize, s as usize, one, three_halves)
                .map_err(|e| e.to_string())?;
            automorphism_group(&space).map_err(|e| e.to_string())
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let names: Vec<&str> = if args.suite == "all" {
        qmetric::verify::suite_names().to_vec()
    } else {
        vec![args.suite.as_str()]
    };
    let mut reports = Vec::new();
    for name in names {
        let report = run_suite(name).ok_or_else(|| {
            format!("unknown suite {name:?}; use one of magic, commutation, duplex, circulant, eigenspace, all")
        })?;
        reports.push(report);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    match args.format {
        Format::Json => emit_json(&reports, out),
        Format::Text => {
            for report in &reports {
                let _ = writeln!(
                    out,
                    "suite {}: {}",
                    report.suite,
                    if report.passed { "PASS" } else { "FAIL" }
                );
                for check in &report.checks {
                    let _ = writeln!(
                        out,
                        "  [{}] {} — {}",
                        if check.passed { "ok" } else { "FAIL" },
                        check.name,
                        check.detail
                    );
                }
            }
        }
    }
    Ok(if all_passed { 0 } else { EXIT_CHECK_FAILED })
}

/// Test convenience: run with string args, capture output.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("qmetric".to_owned())
        .chain(args.iter().map(|s| (*s).to_owned()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}
