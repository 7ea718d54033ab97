//! The `exactpart` command line.
//!
//! Graph inputs are DIMACS `.col` files; set systems are JSON `{"n": .., "sets": [[..], ..]}`
//! (recognized by a `.json` extension or a leading `{`). JSON documents carry `"schema": 1`.
//!
//! Exit codes: 0 success, 2 input error, 3 instance too large, 4 internal error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::chromatic::{chromatic_number_traced, DEFAULT_CAP};
use crate::costmodel::{cost_row, cost_table, CostRow};
use crate::dnc::{domatic_number_with, witness, Solver, Strategy, StrategyTag};
use crate::enumerate::{enum_mis, enum_min_dom_in, enum_minimal_covers, BranchStats};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::setsys::{
    dominating_family, explicit_family, independent_family, neighborhood_system, parse_dimacs, ExplicitSystem,
    Graph, ImplicitFamily, ProblemKind, Subset,
};

pub const SCHEMA: u32 = 1;
pub const THREADS_ENV: &str = "EXACTPART_THREADS";

#[derive(Parser, Debug)]
#[command(name = "exactpart", version, about = "Exact partitioning, covering and packing of set systems")]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic number of a DIMACS graph.
    Color {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Decide whether the universe has a k-cover, k-partition or k-packing.
    Solve {
        path: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: ProblemKind,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "dde", value_parser = parse_strategy)]
        strategy: StrategyTag,
        /// Table depth for the third-level strategy.
        #[arg(long, value_parser = parse_alpha)]
        alpha: Option<Frac>,
        /// Family built from a graph input.
        #[arg(long, value_enum, default_value_t = GraphFamily::Independent)]
        family: GraphFamily,
        #[arg(long)]
        witness: bool,
    },
    /// Stream maximal independent sets, minimal set covers or minimal dominating sets.
    Enum {
        #[arg(value_enum)]
        what: EnumTarget,
        path: PathBuf,
    },
    /// CSV of the solver bases over a range of c.
    CostTable {
        #[arg(long, default_value_t = 1.0)]
        cmin: f64,
        #[arg(long, default_value_t = 2.0)]
        cmax: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        /// A single value of c instead of a range.
        #[arg(long)]
        c: Option<f64>,
        /// Also write a whitespace-separated data file for plotting.
        #[arg(long)]
        dat: Option<PathBuf>,
    },
    /// Domatic number of a DIMACS graph.
    Domatic { path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFamily {
    Independent,
    Dominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumTarget {
    Mis,
    MinimalCovers,
    MinDom,
}

fn parse_kind(s: &str) -> std::result::Result<ProblemKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_strategy(s: &str) -> std::result::Result<StrategyTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_alpha(s: &str) -> std::result::Result<Frac, String> {
    Frac::alpha(s).map_err(|e| e.to_string())
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::UniverseTooLarge(_) => 3,
        Error::IncompleteTable(_) => 4,
        _ => 2,
    }
}

enum Input {
    Graph(Graph),
    System(ExplicitSystem),
}

fn read_input(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path)?;
    let json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    if json {
        Ok(Input::System(ExplicitSystem::from_json(&text)?))
    } else {
        Ok(Input::Graph(parse_dimacs(&text)?))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    match read_input(path)? {
        Input::Graph(g) => Ok(g),
        Input::System(_) => Err(Error::InvalidGraph("expected a DIMACS graph".into())),
    }
}

fn to_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn elements(s: Subset) -> Vec<usize> {
    s.to_vec()
}

fn cmd_color(path: &Path, cap: usize, out: &mut dyn Write) -> Result<()> {
    let g = read_graph(path)?;
    let (chi, trace, cost) = chromatic_number_traced(&g, cap)?;
    to_json_line(out, &json!({"schema": SCHEMA, "chi": chi, "trace": trace, "cost": cost}))
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    path: &Path,
    kind: ProblemKind,
    k: usize,
    tag: StrategyTag,
    alpha: Option<Frac>,
    family: GraphFamily,
    want_witness: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let strategy = match (tag, alpha) {
        (StrategyTag::ThirdLevel, Some(a)) => Strategy::third_level(a)?,
        (StrategyTag::ThirdLevel, None) => Strategy::third_level_default(),
        (t, a) => Strategy::new(t, a.unwrap_or(Frac::QUARTER))?,
    };
    let fam: ImplicitFamily = match read_input(path)? {
        Input::Graph(g) => match family {
            GraphFamily::Independent => independent_family(&g),
            GraphFamily::Dominating => dominating_family(&g),
        },
        Input::System(sys) => explicit_family(&sys),
    };
    let mut solver = Solver::new(&fam, kind, strategy, k.max(1))?;
    let (sat, cost) = solver.solve(k)?;
    let mut doc = json!({
        "schema": SCHEMA,
        "kind": kind,
        "k": k,
        "strategy": strategy.tag.to_string(),
        "alpha": strategy.alpha,
        "sat": sat,
        "cost": cost,
    });
    if want_witness && sat && k >= 1 {
        let parts = witness(&fam, kind, k)?.ok_or(Error::IncompleteTable(0))?;
        doc["witness"] = json!(parts.into_iter().map(elements).collect::<Vec<_>>());
    }
    to_json_line(out, &doc)
}

fn stats_line(out: &mut dyn Write, stats: &BranchStats) -> Result<()> {
    to_json_line(out, &json!({"schema": SCHEMA, "stats": stats}))
}

fn cmd_enum(path: &Path, what: EnumTarget, out: &mut dyn Write) -> Result<()> {
    let input = read_input(path)?;
    let mut lines = Vec::new();
    let stats = match (what, &input) {
        (EnumTarget::Mis, Input::Graph(g)) => enum_mis(g, g.vertices(), |s| lines.push(elements(s))),
        (EnumTarget::MinDom, Input::Graph(g)) => enum_min_dom_in(g, g.vertices(), |s| lines.push(elements(s))),
        (EnumTarget::MinimalCovers, Input::Graph(g)) => {
            let sys = neighborhood_system(g, g.vertices())?;
            enum_minimal_covers(&sys, |c| lines.push(c.to_vec()))
        }
        (EnumTarget::MinimalCovers, Input::System(sys)) => enum_minimal_covers(sys, |c| lines.push(c.to_vec())),
        (_, Input::System(_)) => return Err(Error::InvalidGraph("this enumeration needs a DIMACS graph".into())),
    };
    for line in &lines {
        to_json_line(out, line)?;
    }
    stats_line(out, &stats)
}

fn csv_row(r: &CostRow) -> String {
    let opt = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x:.6}"));
    format!(
        "{:.4},{},{:.6},{:.6},{},{:.6},{}",
        r.c,
        opt(r.alpha_star),
        r.base_main,
        r.base_smallc,
        opt(r.base_smallc2),
        r.best,
        r.strategy
    )
}

fn cmd_cost_table(cmin: f64, cmax: f64, step: f64, c: Option<f64>, dat: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let rows = match c {
        Some(c) => vec![cost_row(c)?],
        None => cost_table(cmin, cmax, step)?,
    };
    writeln!(out, "c,alpha_star,base_main,base_smallc,base_smallc2,best,strategy")?;
    for r in &rows {
        writeln!(out, "{}", csv_row(r))?;
    }
    if let Some(path) = dat {
        let mut f = io::BufWriter::new(fs::File::create(path)?);
        writeln!(f, "# c main smallc smallc2 best")?;
        for r in &rows {
            let third = r.base_smallc2.map_or("nan".to_string(), |v| format!("{v:.6}"));
            writeln!(f, "{:.4} {:.6} {:.6} {} {:.6}", r.c, r.base_main, r.base_smallc, third, r.best)?;
        }
    }
    Ok(())
}

fn cmd_domatic(path: &Path, out: &mut dyn Write) -> Result<()> {
    let g = read_graph(path)?;
    let (d, cost) = domatic_number_with(&g, Strategy::main_cover())?;
    to_json_line(out, &json!({"schema": SCHEMA, "domatic": d, "cost": cost}))
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .map_err(|_| Error::Precondition(format!("{THREADS_ENV} must be a positive integer, got `{v}`")))?;
        // A second call in the same process finds the pool already built.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    configure_threads()?;
    match &cli.command {
        Command::Color { path, cap } => cmd_color(path, *cap, out),
        Command::Solve {
            path,
            kind,
            k,
            strategy,
            alpha,
            family,
            witness,
        } => cmd_solve(path, *kind, *k, *strategy, *alpha, *family, *witness, out),
        Command::Enum { what, path } => cmd_enum(path, *what, out),
        Command::CostTable {
            cmin,
            cmax,
            step,
            c,
            dat,
        } => cmd_cost_table(*cmin, *cmax, *step, *c, dat.as_deref(), out),
        Command::Domatic { path } => cmd_domatic(path, out),
    }
}

/// Runs the command line on `args` (including the program name) and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = execute(&cli, &mut buf).and_then(|()| match &cli.output {
        Some(path) => Ok(fs::write(path, &buf)?),
        None => Ok(out.write_all(&buf)?),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock())
}
