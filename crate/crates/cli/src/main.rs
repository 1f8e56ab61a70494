//! `theta`: command-line front end for the E7 grading toolkit.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use theta_core::atlas::verify::{self, Options, Status, Suite};
use theta_core::atlas::{self, Atlas, CaseRecord, OrbitRecord};
use theta_core::bott::{bott, signed_dimension, BottResult};
use theta_core::bundles::DEFAULT_MAX_CELLS;
use theta_core::geomtech::{self, DesingData};
use theta_core::grading::{closed_form_scalar_product, Case, GradedAlgebra};
use theta_core::orbits::{self, parse_representative, Representative, ThetaRep, DEFAULT_SEED};

mod space;

#[derive(Parser)]
#[command(name = "theta", version, about = "Orbits, Bott cohomology and Hilbert series for the gradings of E7")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Seed for generic span coefficients.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Size guard for exterior and symmetric powers, in weight cells.
    #[arg(long, default_value_t = DEFAULT_MAX_CELLS, global = true)]
    max_cells: u128,
    /// Atlas directory (default: $THETA_ATLAS_PATH, else the bundled copy).
    #[arg(long, global = true)]
    atlas: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Graded components and Levi factors of a case.
    Grade(CaseArg),
    /// Root labels of g_1, optionally checking the closed scalar-product formula.
    Labels {
        #[command(flatten)]
        case: CaseArg,
        /// Compare every pairwise scalar product with its closed form.
        #[arg(long)]
        check_products: bool,
    },
    /// Orbit dimension at a representative.
    Dim(Target),
    /// Ranks of the tensor flattenings at a representative.
    Flatten(Target),
    /// Bott's algorithm for an irreducible bundle on a classical flag space.
    Bott {
        /// `P3`, `Grass(2,4)`, `Flag(1,2;4)`, `IGrass(2,10)`, or a product joined by `x`.
        #[arg(long)]
        space: String,
        /// Comma-separated ε-coordinates; halves as `1/2`.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Euler characteristics χ(Λ^j ξ) of the desingularization.
    Euler {
        #[command(flatten)]
        target: Target,
        /// Range `a..b` (inclusive) or a single power.
        #[arg(long, default_value = "0..64")]
        powers: String,
        /// Print `S_λE⊗V_ω` names instead of table tuples.
        #[arg(long)]
        schur: bool,
        /// Also list each cohomology module with its degree.
        #[arg(long)]
        modules: bool,
    },
    /// Hilbert numerator of the (normalized) orbit closure.
    Hilbert {
        #[command(flatten)]
        target: Target,
        /// Truncation degree (default: table numerator length + 1, else 24).
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Replay the atlas against the computations.
    Verify {
        /// `all` or a case tag.
        #[arg(long, default_value = "all")]
        case: String,
        /// Suites to run (repeatable or comma-separated; default all).
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Print every check, not only the non-passing ones.
        #[arg(long)]
        all: bool,
    },
    /// Write the atlas as JSON.
    AtlasDump {
        /// Restrict to one case.
        #[arg(long)]
        case: Option<String>,
        /// Write one file per case plus a manifest into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CaseArg {
    /// Case tag, `e7a1` … `e7a7`.
    #[arg(long)]
    case: String,
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    case: String,
    /// Representative, e.g. `[123]+[456]+[147]`.
    #[arg(long, conflicts_with = "orbit", required_unless_present = "orbit", allow_hyphen_values = true)]
    rep: Option<String>,
    /// Orbit number in the atlas.
    #[arg(long)]
    orbit: Option<usize>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(theta_core::Error),
    Io(io::Error),
}

impl From<theta_core::Error> for CliError {
    fn from(e: theta_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Success, or verification found mismatches.
enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("theta: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("theta: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.cmd {
        Cmd::Grade(c) => grade_cmd(cli, parse_case(&c.case)?),
        Cmd::Labels { case, check_products } => labels_cmd(cli, parse_case(&case.case)?, *check_products),
        Cmd::Dim(t) => dim_cmd(cli, t),
        Cmd::Flatten(t) => flatten_cmd(cli, t),
        Cmd::Bott { space, weight } => bott_cmd(cli, space, weight),
        Cmd::Euler { target, powers, schur, modules } => euler_cmd(cli, target, powers, *schur, *modules),
        Cmd::Hilbert { target, max_degree } => hilbert_cmd(cli, target, *max_degree),
        Cmd::Verify { case, suite, all } => verify_cmd(cli, case, suite, *all),
        Cmd::AtlasDump { case, out } => dump_cmd(cli, case.as_deref(), out.as_deref()),
    }
}

fn parse_case(s: &str) -> CliResult<Case> {
    Case::parse(s).map_err(|_| CliError::Usage(format!("unknown case `{s}` (expected e7a1 … e7a7)")))
}

fn load(cli: &Cli) -> CliResult<Atlas> {
    Ok(match &cli.atlas {
        Some(dir) => atlas::load_atlas_from(dir)?,
        None => atlas::load_atlas()?,
    })
}

fn emit(cli: &Cli, value: Value, table: impl FnOnce() -> Vec<String>) -> CliResult<()> {
    let mut out = io::stdout().lock();
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json value"))?,
        Format::Table => {
            for line in table() {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

/// A representative plus, when taken from the atlas, its row.
struct Resolved {
    g: GradedAlgebra,
    rep: Representative,
    row: Option<OrbitRecord>,
}

fn resolve(cli: &Cli, t: &Target) -> CliResult<Resolved> {
    let case = parse_case(&t.case)?;
    let g = GradedAlgebra::new(case)?;
    let (text, row) = match (&t.rep, t.orbit) {
        (Some(r), _) => (r.clone(), None),
        (None, Some(n)) => {
            let atlas = load(cli)?;
            let row = atlas
                .case(case)
                .orbit(n)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("{case} has no orbit {n}")))?;
            (row.rep.clone(), Some(row))
        }
        (None, None) => return Err(CliError::Usage("one of --rep or --orbit is required".into())),
    };
    let rep = parse_representative(&g, &text)?;
    Ok(Resolved { g, rep, row })
}

fn desing(r: &Resolved) -> CliResult<DesingData> {
    Ok(match &r.row {
        Some(row) => verify::desing_for(&r.g, row)?,
        None => DesingData::from_characteristic(&r.g, &r.rep)?,
    })
}

fn grade_cmd(cli: &Cli, case: Case) -> CliResult<Outcome> {
    let g = GradedAlgebra::new(case)?;
    let m = g.max_degree();
    let comps: Vec<(i64, usize)> = (-m..=m).map(|i| (i, g.dim(i))).collect();
    let total: usize = comps.iter().map(|c| c.1).sum();
    let factors: Vec<String> = case.levi_factors().iter().map(|f| format!("{} ({:?})", f.name, f.kind)).collect();
    let value = json!({
        "case": case,
        "node": case.node(),
        "components": comps.iter().map(|(i, d)| json!({"degree": i, "dim": d})).collect::<Vec<_>>(),
        "total": total,
        "levi": factors,
    });
    emit(cli, value, || {
        let mut lines = vec![format!("{case}  grading node {}", case.node())];
        lines.extend(comps.iter().map(|(i, d)| format!("g_{i:<3} {d:>4}")));
        lines.push(format!("total  {total:>4}"));
        lines.push(format!("levi   {}", factors.join(" x ")));
        lines
    })?;
    Ok(Outcome::Ok)
}

fn labels_cmd(cli: &Cli, case: Case, check: bool) -> CliResult<Outcome> {
    let g = GradedAlgebra::new(case)?;
    let mut rows = Vec::new();
    for (label, root) in g.labels() {
        let coeffs: String = root.iter().map(|c| c.to_string()).collect();
        let weight = g.display_weight(&g.root_dynkin(root))?;
        rows.push((label.to_string(), coeffs, weight));
    }
    let mut value = json!({
        "case": case,
        "labels": rows.iter().map(|(l, c, w)| json!({"label": l, "root": c, "weight": w})).collect::<Vec<_>>(),
    });
    let mut mismatches = 0usize;
    let mut uncovered = 0usize;
    if check {
        let labels = g.labels();
        for (a, _) in labels {
            for (b, _) in labels {
                match closed_form_scalar_product(case, a, b) {
                    Some(v) if v == g.scalar_product(a, b)? => {}
                    Some(_) => mismatches += 1,
                    None => uncovered += 1,
                }
            }
        }
        value["pairs"] = json!(labels.len() * labels.len());
        value["mismatches"] = json!(mismatches);
        value["without_formula"] = json!(uncovered);
    }
    let n = rows.len();
    emit(cli, value, || {
        let mut lines: Vec<String> = rows.iter().map(|(l, c, w)| format!("{l:<14} {c}  {w}")).collect();
        if check {
            lines.push(format!(
                "scalar products: {} pairs, {mismatches} mismatches, {uncovered} without closed form",
                n * n
            ));
        }
        lines
    })?;
    Ok(if mismatches == 0 { Outcome::Ok } else { Outcome::Mismatch })
}

fn dim_cmd(cli: &Cli, t: &Target) -> CliResult<Outcome> {
    let r = resolve(cli, t)?;
    let theta = ThetaRep::new(r.g.case)?;
    let dim = orbits::orbit_dimension_seeded(&theta, &r.rep, cli.seed)?;
    let table = r.row.as_ref().map(|o| o.dim);
    let value = json!({"case": r.g.case, "rep": r.rep.to_string(), "dim": dim, "table": table});
    emit(cli, value, || match table {
        Some(t) => vec![format!("{dim} (table {t})")],
        None => vec![dim.to_string()],
    })?;
    Ok(if table.is_none_or(|t| t == dim) { Outcome::Ok } else { Outcome::Mismatch })
}

fn flatten_cmd(cli: &Cli, t: &Target) -> CliResult<Outcome> {
    let r = resolve(cli, t)?;
    let ranks = orbits::flattening_ranks(&r.rep)?;
    emit(cli, json!(ranks), || ranks.iter().map(|(k, v)| format!("{k} {v}")).collect())?;
    Ok(Outcome::Ok)
}

fn bott_cmd(cli: &Cli, space_text: &str, weight: &str) -> CliResult<Outcome> {
    let fs = space::parse_space(space_text).map_err(CliError::Usage)?;
    let lambda = space::parse_doubled(weight).map_err(CliError::Usage)?;
    if lambda.len() != fs.frame().dim() {
        return Err(CliError::Usage(format!(
            "{} needs {} coordinates, got {}",
            fs.name(),
            fs.frame().dim(),
            lambda.len()
        )));
    }
    let result = bott(&fs, &lambda)?;
    let dim = signed_dimension(fs.frame(), &result);
    let value = match &result {
        BottResult::Zero => json!({"space": fs.name(), "vanishes": true}),
        BottResult::Cohomology { degree, highest } => json!({
            "space": fs.name(),
            "degree": degree,
            "highest": space::show_halves(highest),
            "dim": dim.to_string().trim_start_matches('-'),
        }),
    };
    emit(cli, value, || match &result {
        BottResult::Zero => vec![format!("all cohomology of {} vanishes", fs.name())],
        BottResult::Cohomology { degree, highest } => vec![format!(
            "H^{degree} = V({})  dim {}",
            space::show_halves(highest),
            dim.to_string().trim_start_matches('-')
        )],
    })?;
    Ok(Outcome::Ok)
}

fn parse_powers(text: &str) -> CliResult<(usize, usize)> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad power range `{text}`")));
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(CliError::Usage(format!("empty power range `{text}`")));
            }
            Ok((a, b))
        }
        None => {
            let a = num(text)?;
            Ok((a, a))
        }
    }
}

fn euler_cmd(cli: &Cli, t: &Target, powers: &str, schur: bool, modules: bool) -> CliResult<Outcome> {
    let (lo, hi) = parse_powers(powers)?;
    let r = resolve(cli, t)?;
    let d = desing(&r)?;
    let hi = hi.min(d.xi_rank());
    let terms = geomtech::resolution_terms(&d, hi, cli.max_cells)?;
    let mut rows = Vec::new();
    for (j, m) in terms.iter().enumerate().skip(lo) {
        let chi = if schur { geomtech::format_chi_schur(&r.g, m)? } else { geomtech::format_chi(&r.g, m)? };
        let mods = if modules { geomtech::format_module(&r.g, m)? } else { Vec::new() };
        rows.push((j, chi, mods));
    }
    let value = json!({
        "case": r.g.case,
        "rep": r.rep.to_string(),
        "space": d.fs.name(),
        "xi_rank": d.xi_rank(),
        "powers": rows.iter().map(|(j, chi, mods)| {
            let mut v = json!({"j": j, "chi": chi});
            if modules {
                v["modules"] = json!(mods);
            }
            v
        }).collect::<Vec<_>>(),
    });
    emit(cli, value, || {
        let mut lines = vec![format!("# {} over {}, rank ξ = {}", r.rep, d.fs.name(), d.xi_rank())];
        for (j, chi, mods) in &rows {
            lines.push(format!("Λ^{j}: {chi}"));
            lines.extend(mods.iter().map(|m| format!("    {m}")));
        }
        lines
    })?;
    Ok(Outcome::Ok)
}

fn hilbert_cmd(cli: &Cli, t: &Target, max_degree: Option<usize>) -> CliResult<Outcome> {
    let r = resolve(cli, t)?;
    let table = r.row.as_ref().map(|o| o.numerator.clone());
    let dim = r.row.as_ref().map(|o| o.dim);
    let numerator = match dim {
        Some(0) => vec![1],
        Some(d) if d == r.g.dim(1) => vec![1],
        _ => {
            let d = desing(&r)?;
            let depth = max_degree.or_else(|| table.as_ref().map(|n| n.len() + 1)).unwrap_or(24);
            geomtech::hilbert_numerator(&d, d.total_dim(), depth, cli.max_cells)?
        }
    };
    let degree = geomtech::numerator_degree(&numerator);
    let agrees = table.as_ref().map(|n| *n == numerator);
    let value = json!({
        "case": r.g.case,
        "rep": r.rep.to_string(),
        "numerator": numerator,
        "degree": degree,
        "table": table,
        "agrees": agrees,
    });
    emit(cli, value, || {
        let mut lines = vec![format!("N(t) = {}", show_poly(&numerator)), format!("degree {degree}")];
        if let Some(ok) = agrees {
            lines.push(if ok { "table: agrees".into() } else { format!("table: {:?}", table.clone().unwrap_or_default()) });
        }
        lines
    })?;
    Ok(if agrees == Some(false) { Outcome::Mismatch } else { Outcome::Ok })
}

fn show_poly(c: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &a) in c.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mono = match i {
            0 => a.to_string(),
            1 if a == 1 => "t".into(),
            1 => format!("{a}t"),
            _ if a == 1 => format!("t^{i}"),
            _ => format!("{a}t^{i}"),
        };
        parts.push(mono);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn verify_cmd(cli: &Cli, case: &str, suites: &[String], all: bool) -> CliResult<Outcome> {
    let cases = if case == "all" { Case::ALL.to_vec() } else { vec![parse_case(case)?] };
    let suites: BTreeSet<Suite> = if suites.is_empty() {
        Suite::ALL.into_iter().collect()
    } else {
        suites
            .iter()
            .map(|s| {
                Suite::parse(s).ok_or_else(|| {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    CliError::Usage(format!("unknown suite `{s}` (one of {})", names.join(", ")))
                })
            })
            .collect::<CliResult<_>>()?
    };
    let atlas = load(cli)?;
    let opts = Options { seed: cli.seed, max_cells: cli.max_cells, cases, suites };
    let report = verify::verify(&atlas, &opts, &|line: &str| eprintln!("{line}"))?;
    let value = serde_json::to_value(&report).expect("report serializes");
    emit(cli, value, || {
        let mut lines = vec![format!("atlas {} ({})", report.atlas, report.fingerprint)];
        lines.extend(report.checks.iter().filter(|c| all || c.status != Status::Pass).map(|c| c.to_string()));
        lines.extend(report.summary());
        lines
    })?;
    Ok(if report.is_clean() { Outcome::Ok } else { Outcome::Mismatch })
}

fn dump_cmd(cli: &Cli, case: Option<&str>, out: Option<&Path>) -> CliResult<Outcome> {
    let atlas = load(cli)?;
    let cases: Vec<&CaseRecord> = match case {
        Some(c) => vec![atlas.case(parse_case(c)?)],
        None => Case::ALL.iter().map(|&c| atlas.case(c)).collect(),
    };
    match out {
        Some(dir) => {
            atlas::write_atlas_dir(dir, &cases)?;
            eprintln!("wrote {} case files to {}", cases.len(), dir.display());
        }
        None => {
            let all: Vec<Value> = cases.iter().map(|c| serde_json::to_value(c).expect("case serializes")).collect();
            println!("{}", serde_json::to_string_pretty(&all).expect("json"));
        }
    }
    Ok(Outcome::Ok)
}
