use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use safeset_core::generators::{self, FamilySpec};
use safeset_core::reductions::{fvs_to_safeset, setcover_to_indominating, SatChain};
use safeset_core::rng::Ratio;
use safeset_core::scc_decompose;
use safeset_core::solvers::{
    dp_tables, min_feedback_vertex_set, min_indominating, min_safe_set, min_strong_safe_set, DpTable, Method,
    ScanResult, SolveResult,
};
use safeset_core::verify::{is_in_dominating, is_safe_set, is_strong_safe_set, Violation};
use safeset_core::{classify, lsc, vertex_connectivity, Digraph};

use crate::bench::{bench_dp, BenchError};
use crate::format::{self, ParseError};
use crate::parallel::parallel_scan;
use crate::report::{
    Extreme, InputSummary, ReportResult, RunReport, Size, TableCell, TableRow, Timer, VertexSet,
};

#[derive(Debug, Parser)]
#[command(name = "safeset", version, about = "Safe sets, strong safe sets and in-dominating sets in digraphs")]
pub struct Cli {
    /// Worker threads for the extremal scan.
    #[arg(long, global = true, env = "SAFESET_THREADS", default_value_t = 1)]
    pub threads: usize,
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Strong components in chain order.
    Scc { file: PathBuf },
    /// Structural flags, lsc and vertex connectivity.
    Classify { file: PathBuf },
    /// Verify a vertex set and print its certificate.
    Check(CheckArgs),
    /// Minimum safe, strong safe or in-dominating set.
    Solve(SolveArgs),
    /// Minimum feedback vertex set.
    Fvs { file: PathBuf },
    /// Extremal safe numbers over all tournaments of given order and connectivity.
    Scan(ScanArgs),
    /// Generate a tournament family or random instance.
    Gen(GenArgs),
    /// Build a hardness gadget.
    Reduce(ReduceArgs),
    /// Dynamic-program scaling benchmark.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Comma-separated vertex ids or labels.
    #[arg(long, value_delimiter = ',', required = true)]
    pub set: Vec<String>,
    #[arg(long, conflicts_with = "indominating")]
    pub strong: bool,
    #[arg(long)]
    pub indominating: bool,
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Dp,
    Auto,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long, conflicts_with = "indominating")]
    pub strong: bool,
    #[arg(long)]
    pub indominating: bool,
    /// Largest set size tried first by the in-dominating search.
    #[arg(long, requires = "indominating")]
    pub alpha_cap: Option<usize>,
    /// Include the full dynamic-programming table.
    #[arg(long, conflicts_with_all = ["strong", "indominating"])]
    pub tables: bool,
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// n = 7 enumerates 2^21 tournaments.
    #[arg(long)]
    pub allow_n7: bool,
    /// Include the arcs of every witness tournament.
    #[arg(long)]
    pub witnesses: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// transitive, circulant_Tk, extended_Tk, Tprime, Ttripleprime, Tdag,
    /// Tstar, Tstarstar, random_tournament or random_semicomplete.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub kprime: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Probability such as `1/4` or `0.25`.
    #[arg(long)]
    pub digon_prob: Option<String>,
    #[arg(short, long, default_value = "-")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gadget {
    Setcover,
    Sat,
    Fvs,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    pub gadget: Gadget,
    pub file: PathBuf,
    #[arg(short, long, default_value = "-")]
    pub output: PathBuf,
    #[arg(long)]
    pub map_out: Option<PathBuf>,
    /// For `sat`: also write the intermediate width-4 formula (DIMACS).
    #[arg(long)]
    pub sat4_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub lsc: Vec<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Refused(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Input(_) => "input",
            CliError::Refused(_) => "refused",
            CliError::Usage(_) => "usage",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse { .. } => 3,
            CliError::Input(_) => 4,
            CliError::Refused(_) => 5,
            CliError::Io { .. } => 6,
            CliError::Internal(_) => 70,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": { "category": self.category(), "message": self.to_string() } }).to_string()
    }
}

impl From<safeset_core::Error> for CliError {
    fn from(e: safeset_core::Error) -> Self {
        use safeset_core::Error as E;
        match e {
            E::ScanRefused { .. } | E::TooLarge { .. } => CliError::Refused(e.to_string()),
            E::SelfCheck(_) | E::ConstructionCheck(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Core(c) => c.into(),
            BenchError::LscTooLarge(_) => CliError::Refused(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn display(path: &Path) -> String {
    if path.as_os_str() == "-" {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    }
}

fn read(path: &Path) -> CliResult<String> {
    format::read_input(path).map_err(|source| CliError::Io {
        path: display(path),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    format::write_output(path, text).map_err(|source| CliError::Io {
        path: display(path),
        source,
    })
}

fn load_digraph(path: &Path) -> CliResult<Digraph> {
    format::parse_digraph(&read(path)?).map_err(|source| CliError::Parse {
        path: display(path),
        source,
    })
}

/// What a command hands back: a report, or raw text that already went to
/// standard output.
pub enum Outcome {
    Report(Box<RunReport>),
    Printed,
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let mut timer = Timer::new();
    let (command, input, result, seed) = match &cli.command {
        Command::Scc { file } => {
            let d = load_digraph(file)?;
            timer.lap("parse");
            let c = scc_decompose(&d);
            timer.lap("scc");
            let components = c.components.iter().map(|comp| VertexSet::of(&d, comp)).collect();
            ("scc", Some(summary(&d)), ReportResult::Scc { components }, None)
        }
        Command::Classify { file } => {
            let d = load_digraph(file)?;
            timer.lap("parse");
            let result = ReportResult::Classify {
                lsc: lsc(&d),
                components: scc_decompose(&d).len(),
                vertex_connectivity: vertex_connectivity(&d),
            };
            timer.lap("classify");
            ("classify", Some(summary(&d)), result, None)
        }
        Command::Check(args) => {
            let d = load_digraph(&args.file)?;
            timer.lap("parse");
            let set = resolve_set(&d, &args.set)?;
            let (problem, cert) = if args.strong {
                ("strong_safe", is_strong_safe_set(&d, &set)?)
            } else if args.indominating {
                ("indominating", is_in_dominating(&d, &set)?)
            } else {
                ("safe", is_safe_set(&d, &set)?)
            };
            timer.lap("check");
            let result = ReportResult::Check {
                problem: problem.into(),
                set: VertexSet::of(&d, &set),
                verdict: cert.verdict(),
                violations: cert.violations.iter().map(|v| describe_violation(&d, v)).collect(),
            };
            ("check", Some(summary(&d)), result, None)
        }
        Command::Solve(args) => {
            let d = load_digraph(&args.file)?;
            timer.lap("parse");
            let (problem, r, table) = solve(&d, args)?;
            timer.lap("solve");
            if cli.format == Format::Text {
                if let Some(t) = &table {
                    write(Path::new("-"), &render_tables(&d, t))?;
                }
            }
            let result = ReportResult::Solve {
                problem: problem.into(),
                method: r.method.name().into(),
                size: Size(r.size),
                set: VertexSet::of(&d, &r.set),
                subsets_examined: r.stats.subsets_examined,
                tables: table.as_ref().map(|t| table_rows(&d, t)),
            };
            ("solve", Some(summary(&d)), result, None)
        }
        Command::Fvs { file } => {
            let d = load_digraph(file)?;
            timer.lap("parse");
            let r = min_feedback_vertex_set(&d)?;
            timer.lap("solve");
            let result = ReportResult::Fvs {
                size: Size(r.size),
                set: VertexSet::of(&d, &r.set),
            };
            ("fvs", Some(summary(&d)), result, None)
        }
        Command::Scan(args) => {
            let threads = cli.threads.max(1);
            let r = parallel_scan(args.n, args.k, args.allow_n7, threads)?;
            timer.lap("scan");
            let extreme = |e| Extreme {
                value: Size(ScanResult::value(e)),
                witness_index: e.map(|e: safeset_core::solvers::scan::Extreme| e.witness),
                witness_arcs: args.witnesses.then(|| r.witness(e).map(|w| w.arcs().collect())).flatten(),
            };
            let result = ReportResult::Scan {
                n: r.n,
                k: r.k,
                threads,
                examined: r.examined,
                matching: r.matching,
                s_min: extreme(r.s_min),
                s_max: extreme(r.s_max),
                ss_min: extreme(r.ss_min),
                ss_max: extreme(r.ss_max),
            };
            ("scan", None, result, None)
        }
        Command::Gen(args) => {
            let spec = family_spec(args)?;
            let d = generators::generate(&spec)?;
            timer.lap("generate");
            write(&args.output, &format::write_digraph(&d))?;
            if args.output.as_os_str() == "-" {
                return Ok(Outcome::Printed);
            }
            let result = ReportResult::Gen {
                family: generators::describe(&spec),
                n: d.n(),
                m: d.arc_count(),
                output: display(&args.output),
            };
            ("gen", Some(summary(&d)), result, args.seed)
        }
        Command::Reduce(args) => {
            let (d, map_text, gadget, offset, threshold) = reduce(args)?;
            timer.lap("reduce");
            write(&args.output, &format::write_digraph(&d))?;
            if let Some(p) = &args.map_out {
                write(p, &map_text)?;
            }
            if args.output.as_os_str() == "-" {
                return Ok(Outcome::Printed);
            }
            let result = ReportResult::Reduce {
                gadget: gadget.into(),
                n: d.n(),
                m: d.arc_count(),
                size_offset: offset,
                threshold,
                output: display(&args.output),
            };
            ("reduce", Some(summary(&d)), result, None)
        }
        Command::Bench(args) => {
            let rows = bench_dp(&args.lsc, args.n, args.seed)?;
            timer.lap("bench");
            ("bench", None, ReportResult::Bench { rows }, Some(args.seed))
        }
    };
    Ok(Outcome::Report(Box::new(RunReport {
        command: command.into(),
        input,
        result,
        timing: timer.finish(),
        seed,
    })))
}

fn summary(d: &Digraph) -> InputSummary {
    InputSummary::of(d, &classify(d))
}

fn resolve_set(d: &Digraph, items: &[String]) -> CliResult<Vec<usize>> {
    let mut set = Vec::new();
    for item in items.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let v = match d.vertex_by_label(item) {
            Some(v) => v,
            None => item
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("`{item}` is neither a vertex id nor a label")))?,
        };
        if v >= d.n() {
            return Err(CliError::Input(format!("vertex {v} out of range for a digraph on {} vertices", d.n())));
        }
        set.push(v);
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

fn names(d: &Digraph, vs: &[usize]) -> String {
    let names: Vec<String> = vs.iter().map(|&v| d.display_name(v)).collect();
    format!("{{{}}}", names.join(", "))
}

fn describe_violation(d: &Digraph, v: &Violation) -> String {
    match v {
        Violation::EmptySet => "the set is empty".into(),
        Violation::NoArcIntoSet { component } => {
            format!("component {} outside the set has no arc into it", names(d, component))
        }
        Violation::ArcIntoSmaller { component, target, arc } => format!(
            "component {} has the arc {}->{} into the smaller component {}",
            names(d, component),
            d.display_name(arc.0),
            d.display_name(arc.1),
            names(d, target)
        ),
        Violation::NotStrong { components } => {
            let parts: Vec<String> = components.iter().map(|c| names(d, c)).collect();
            format!("the set induces {} strong components: {}", components.len(), parts.join(" "))
        }
        Violation::Undominated { vertex } => {
            format!("{} has no out-neighbour in the set", d.display_name(*vertex))
        }
    }
}

fn solve(d: &Digraph, args: &SolveArgs) -> CliResult<(&'static str, SolveResult, Option<DpTable>)> {
    let method = match args.method {
        MethodArg::Brute => Method::Brute,
        MethodArg::Dp => Method::Dp,
        MethodArg::Auto => Method::Auto,
    };
    if (args.strong || args.indominating) && method == Method::Dp {
        return Err(CliError::Usage("the dynamic program only computes safe sets".into()));
    }
    if args.strong {
        return Ok(("strong_safe", min_strong_safe_set(d)?, None));
    }
    if args.indominating {
        return Ok(("indominating", min_indominating(d, args.alpha_cap)?, None));
    }
    if args.tables {
        if method == Method::Brute {
            return Err(CliError::Usage("--tables needs the dynamic program".into()));
        }
        let t = dp_tables(d)?;
        let best = t.best();
        return Ok(("safe", best, Some(t)));
    }
    Ok(("safe", min_safe_set(d, method)?, None))
}

fn table_rows(d: &Digraph, t: &DpTable) -> Vec<TableRow> {
    (1..=t.p())
        .rev()
        .map(|a| TableRow {
            a,
            component: VertexSet::of(d, &t.condensation().components[a - 1]),
            cells: (1..=t.lsc())
                .map(|b| TableCell {
                    b,
                    size: Size(t.size(a, b)),
                    set: t.set(a, b).map(|s| VertexSet::of(d, &s)),
                })
                .collect(),
        })
        .collect()
}

/// One block per component, last component first: for every `b` the set
/// `S*(a, b)` and its size `s*(a, b)`.
pub fn render_tables(d: &Digraph, t: &DpTable) -> String {
    let mut s = String::new();
    for row in table_rows(d, t) {
        let a = row.a;
        let _ = writeln!(s, "C{a} = {}", row.component.names.join(" "));
        let header = format!("S*({a},b)");
        let width = row
            .cells
            .iter()
            .filter_map(|c| c.set.as_ref().map(|v| names(d, &v.ids).len()))
            .max()
            .unwrap_or(0)
            .max(header.len());
        let _ = writeln!(s, "{:>3}  {header:<width$}  s*({a},b)", "b");
        for cell in &row.cells {
            let set = cell.set.as_ref().map_or("-".to_string(), |v| names(d, &v.ids));
            let _ = writeln!(s, "{:>3}  {set:<width$}  {}", cell.b, cell.size);
        }
        s.push('\n');
    }
    let best = t.best();
    let _ = writeln!(s, "s(D) = {}  {}", best.size, names(d, &best.set));
    s
}

/// `p/q` or a decimal such as `0.25`.
pub fn parse_ratio(text: &str) -> Option<Ratio> {
    if let Some((p, q)) = text.split_once('/') {
        return Ratio::new(p.trim().parse().ok()?, q.trim().parse().ok()?);
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let den = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    Ratio::new(int.checked_mul(den)?.checked_add(frac)?, den)
}

fn family_spec(args: &GenArgs) -> CliResult<FamilySpec> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("--family {} needs --{flag}", args.family)));
    let seed = || args.seed.ok_or_else(|| CliError::Usage(format!("--family {} needs --seed", args.family)));
    Ok(match args.family.to_ascii_lowercase().as_str() {
        "transitive" => FamilySpec::Transitive { n: need(args.n, "n")? },
        "circulant_tk" => FamilySpec::CirculantTk { k: need(args.k, "k")? },
        "extended_tk" => FamilySpec::ExtendedTk {
            k: need(args.k, "k")?,
            n: need(args.n, "n")?,
        },
        "tprime" => FamilySpec::TPrime { n: need(args.n, "n")? },
        "ttripleprime" => FamilySpec::TTriplePrime { n: need(args.n, "n")? },
        "tdag" => FamilySpec::TDagger {
            kprime: need(args.kprime, "kprime")?,
        },
        "tstar" => FamilySpec::TStar {
            k: need(args.k, "k")?,
            n: need(args.n, "n")?,
        },
        "tstarstar" => FamilySpec::TStarStar {
            k: need(args.k, "k")?,
            n: need(args.n, "n")?,
        },
        "random_tournament" => FamilySpec::RandomTournament {
            n: need(args.n, "n")?,
            seed: seed()?,
        },
        "random_semicomplete" => FamilySpec::RandomSemicomplete {
            n: need(args.n, "n")?,
            seed: seed()?,
            digon_prob: match &args.digon_prob {
                Some(p) => parse_ratio(p).ok_or_else(|| CliError::Usage(format!("bad probability `{p}`")))?,
                None => Ratio::default(),
            },
        },
        other => return Err(CliError::Usage(format!("unknown family `{other}`"))),
    })
}

type Reduced = (Digraph, String, &'static str, Option<i64>, Option<usize>);

fn reduce(args: &ReduceArgs) -> CliResult<Reduced> {
    let text = read(&args.file)?;
    let parse_err = |source| CliError::Parse {
        path: display(&args.file),
        source,
    };
    match args.gadget {
        Gadget::Setcover => {
            let inst = format::parse_setcover(&text).map_err(parse_err)?;
            let g = setcover_to_indominating(&inst)?;
            Ok((g.digraph, g.map.to_text(), g.map.gadget, g.map.size_offset, None))
        }
        Gadget::Fvs => {
            let t = format::parse_digraph(&text).map_err(parse_err)?;
            let g = fvs_to_safeset(&t)?;
            Ok((g.digraph, g.map.to_text(), g.map.gadget, g.map.size_offset, None))
        }
        Gadget::Sat => {
            let f = format::parse_dimacs(&text, 3).map_err(parse_err)?;
            let chain = SatChain::new(&f)?;
            if let Some(p) = &args.sat4_out {
                write(p, &format::write_dimacs(&chain.traceable.formula))?;
            }
            let irr = &chain.irreducible;
            let mut map = String::new();
            let _ = writeln!(map, "gadget irreducible");
            let kept: Vec<String> = irr.kept_vars.iter().map(|v| format!("x{v}")).collect();
            let _ = writeln!(map, "kept_vars {}", kept.join(" "));
            for (c, lit) in &irr.deleted {
                let _ = writeln!(map, "deleted_clause {} satisfied_by {lit}", c + 1);
            }
            map.push('\n');
            map.push_str(&chain.traceable.map.to_text());
            map.push('\n');
            map.push_str(&chain.dag.map.to_text());
            let k = chain.dag.k;
            Ok((chain.dag.digraph, map, "sat-traceable-dag", None, Some(k)))
        }
    }
}
