//! The `harary` command line.
//!
//! Layering for every setting: built-in default, then the config file, then
//! `HARARY_THREADS` (threads only), then flags. Exit codes: 0 success,
//! 1 a verification check failed, 2 usage or input error, 3 a capacity
//! limit fired.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{census_upto, parse_graph6, parse_named, read_census, write_graph6, Graph};
use crate::harness::{check_ids, run_selected, HarnessReport, Scope, Verdict};
use crate::limits::Limits;
use crate::mates::{classify, compare_dp, Invariant, MateClassification};
use crate::polynomials::{coloring_counts, harary_counts_with};
use crate::properties::Property;
use crate::random::{
    collision_rate, fr_vanishing_rate, max_degree_profile, parse_ratio, triangle_in_blocks_rate,
    two_cycle_incidence_rate, EdgeProbability, ExperimentReport, GnpParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Environment fallback for `--threads`.
pub const THREADS_ENV: &str = "HARARY_THREADS";

const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "harary", version, about = "Partition-count graph polynomials and their mates")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads (falls back to HARARY_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Config file of `key = value` lines.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Seed for sampling commands and seeded checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest census order.
    #[arg(long, global = true)]
    pub enumeration: Option<usize>,
    /// Largest order for general partition counting.
    #[arg(long, global = true)]
    pub partition: Option<usize>,
    /// Largest order for the brute-force canonical form.
    #[arg(long, global = true)]
    pub canonical: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition counts, colouring counts and values of one graph.
    Poly(PolyArgs),
    /// Groups graphs into classes with equal invariant.
    Mates(MatesArgs),
    /// Compares the distinguishing power of two invariants.
    Compare(CompareArgs),
    /// Runs registered checks.
    Verify(VerifyArgs),
    /// Runs a seeded random-graph experiment.
    Random(RandomArgs),
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Named graph such as K3, C4, P5, D6, K1,3, `mc 2 3` or C4+C4.
    #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
    pub graph: Option<String>,
    #[arg(long)]
    pub graph6: Option<String>,
    /// Property expression, e.g. `edgeless` or `(du C4)`.
    #[arg(long)]
    pub property: String,
}

#[derive(Debug, Args)]
pub struct MatesArgs {
    /// Classify the census of this order.
    #[arg(long, conflicts_with = "census", required_unless_present = "census")]
    pub order: Option<usize>,
    /// Classify the graphs of a graph6 file.
    #[arg(long)]
    pub census: Option<PathBuf>,
    /// One of chromatic, harary, ind, clique, dom, matching, mu, char, lap, subset.
    #[arg(long)]
    pub invariant: String,
    /// Property for `harary` and `subset`.
    #[arg(long)]
    pub property: Option<String>,
    /// Keep only members of this property.
    #[arg(long)]
    pub domain: Option<String>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// First invariant as `name` or `name:property`.
    pub first: String,
    /// Second invariant as `name` or `name:property`.
    pub second: String,
    /// Compare on all census graphs of order 1..=N.
    #[arg(long, conflicts_with_all = ["graphs", "census"])]
    pub upto: Option<usize>,
    /// Semicolon-separated graph names or graph6 strings.
    #[arg(long, conflicts_with = "census")]
    pub graphs: Option<String>,
    /// Compare on the graphs of a graph6 file.
    #[arg(long)]
    pub census: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check ids to run.
    pub ids: Vec<String>,
    /// Run every registered check.
    #[arg(long, conflicts_with = "ids")]
    pub all: bool,
    /// Print details of passing checks too.
    #[arg(long)]
    pub verbose: bool,
    /// List check ids and exit.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// Fraction of G(n, p) graphs on which F_r vanishes.
    FrVanish,
    /// Fraction of G(n, d/n) graphs with two r-cycles sharing one vertex.
    TwoCycles,
    /// Fraction of random equipartitions into blocks of size r with no triangle inside a block.
    TriangleBlocks,
    /// Fraction of non-isomorphic sample pairs with equal invariant.
    Collision,
    /// Mean maximum degree.
    MaxDegree,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(value_enum)]
    pub experiment: Experiment,
    /// Cycle length or block size.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Comma-separated orders.
    #[arg(long, default_value = "24", value_delimiter = ',')]
    pub n: Vec<usize>,
    /// Constant edge probability `p/q`.
    #[arg(long, conflicts_with = "d")]
    pub p: Option<String>,
    /// Average degree `d`, giving edge probability d/n.
    #[arg(long)]
    pub d: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    /// Random partitions drawn per graph (triangle-blocks).
    #[arg(long, default_value_t = 1)]
    pub partitions: u64,
    /// Invariant for `collision`.
    #[arg(long, default_value = "harary")]
    pub invariant: String,
    /// Property for `collision` with harary or subset.
    #[arg(long)]
    pub property: Option<String>,
}

/// Contents of a `--config` file. Every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub enumeration: Option<usize>,
    pub partition: Option<usize>,
    pub canonical: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| {
            let offset = e.span().map_or(0, |s| s.start);
            Error::Parse {
                offset,
                message: e.message().to_string(),
            }
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

/// Settings after layering defaults, config file, environment and flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub limits: Limits,
    pub seed: u64,
    pub format: Format,
    pub threads: Option<usize>,
}

impl Settings {
    pub fn resolve(opts: &GlobalOpts, env_threads: Option<&str>) -> Result<Self> {
        let file = match &opts.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let env = match env_threads {
            Some(t) => Some(t.trim().parse::<usize>().map_err(|_| {
                Error::argument(format!("{THREADS_ENV} must be a positive integer, got `{t}`"))
            })?),
            None => None,
        };
        let mut limits = Limits::default();
        if let Some(v) = opts.enumeration.or(file.enumeration) {
            limits.enumeration = v;
        }
        if let Some(v) = opts.partition.or(file.partition) {
            limits.partition = v;
        }
        if let Some(v) = opts.canonical.or(file.canonical) {
            limits.canonical_exhaustive = v;
        }
        limits.validate()?;
        let threads = opts.threads.or(env).or(file.threads);
        if threads == Some(0) {
            return Err(Error::argument("thread count must be at least 1"));
        }
        Ok(Settings {
            limits,
            seed: opts.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            format: opts.format.or(file.format).unwrap_or_default(),
            threads,
        })
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let env = std::env::var(THREADS_ENV).ok();
    let outcome = Settings::resolve(&cli.global, env.as_deref()).and_then(|settings| {
        let task = || dispatch(&cli.command, &settings);
        match settings.threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::argument(format!("cannot start thread pool: {e}")))?
                .install(task),
            None => task(),
        }
    });
    match outcome {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(command: &Command, s: &Settings) -> Result<(String, i32)> {
    match command {
        Command::Poly(a) => cmd_poly(a, s).map(|t| (t, EXIT_OK)),
        Command::Mates(a) => cmd_mates(a, s).map(|t| (t, EXIT_OK)),
        Command::Compare(a) => cmd_compare(a, s).map(|t| (t, EXIT_OK)),
        Command::Verify(a) => cmd_verify(a, s),
        Command::Random(a) => cmd_random(a, s).map(|t| (t, EXIT_OK)),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable output");
    s.push('\n');
    s
}

fn parse_property(text: &str) -> Result<Property> {
    text.parse()
}

fn parse_graph_arg(named: Option<&str>, graph6: Option<&str>) -> Result<Graph> {
    match (named, graph6) {
        (Some(n), _) => parse_named(n),
        (None, Some(g)) => parse_graph6(g),
        (None, None) => Err(Error::argument("a graph is required")),
    }
}

/// `name` or `name:property`.
pub fn parse_invariant_spec(text: &str) -> Result<Invariant> {
    match text.split_once(':') {
        Some((name, prop)) => Invariant::parse(name.trim(), Some(parse_property(prop)?)),
        None => Invariant::parse(text.trim(), None),
    }
}

fn load_graphs(path: &Path) -> Result<Vec<Graph>> {
    read_census(BufReader::new(File::open(path)?))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_poly(a: &PolyArgs, s: &Settings) -> Result<String> {
    let g = parse_graph_arg(a.graph.as_deref(), a.graph6.as_deref())?;
    let p = parse_property(&a.property)?;
    let h = harary_counts_with(&g, &p, &s.limits)?;
    let c = coloring_counts(&h);
    let mono = h.to_monomial();
    let n = g.order();
    let values: Vec<BigUint> = (0..=n).map(|k| h.evaluate(&BigUint::from(k))).collect();
    Ok(match s.format {
        Format::Json => to_json(&json!({
            "graph": write_graph6(&g),
            "order": n,
            "property": p.to_string(),
            "h": h,
            "c": c.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "monomial": mono,
            "values": values.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("i,h,c,value\n");
            for i in 0..=n {
                out.push_str(&format!("{i},{},{},{}\n", h.coeffs()[i], c[i], values[i]));
            }
            out
        }
        Format::Table => format!(
            "graph     {} (order {n})\nproperty  {p}\nh         {}\nc         {}\nfalling   {h}\nmonomial  {mono}\nvalues    {} (k = 0..{n})\n",
            write_graph6(&g),
            join(h.coeffs()),
            join(&c),
            join(&values),
        ),
    })
}

fn mates_table(c: &MateClassification) -> String {
    let mut out = format!(
        "invariant {}\ngraphs    {}\nclasses   {}\nunique    {}\nindex     {}\n",
        c.invariant,
        c.total,
        c.classes.len(),
        c.unique_count,
        c.index()
    );
    for (i, class) in c.classes.iter().enumerate() {
        let names: Vec<&str> = class.graphs.iter().map(|g| g.as_graph6()).collect();
        out.push_str(&format!("class {i:>4}  size {:>4}  {}\n", names.len(), names.join(" ")));
    }
    out
}

fn cmd_mates(a: &MatesArgs, s: &Settings) -> Result<String> {
    let inv = Invariant::parse(&a.invariant, a.property.as_deref().map(parse_property).transpose()?)?;
    let mut graphs = match (&a.census, a.order) {
        (Some(path), _) => load_graphs(path)?,
        (None, Some(n)) => crate::graph::census(n, &s.limits)?.to_vec(),
        (None, None) => return Err(Error::argument("give --order or --census")),
    };
    if let Some(d) = &a.domain {
        let domain = parse_property(d)?;
        graphs.retain(|g| domain.contains(g));
    }
    let c = classify(&graphs, &inv, &s.limits)?;
    Ok(match s.format {
        Format::Json => to_json(&c),
        Format::Csv => format!("{}\n{}\n", MateClassification::CSV_HEADER, c.csv_row()),
        Format::Table => mates_table(&c),
    })
}

fn cmd_compare(a: &CompareArgs, s: &Settings) -> Result<String> {
    let first = parse_invariant_spec(&a.first)?;
    let second = parse_invariant_spec(&a.second)?;
    let graphs = if let Some(path) = &a.census {
        load_graphs(path)?
    } else if let Some(list) = &a.graphs {
        list.split(';').map(parse_named).collect::<Result<_>>()?
    } else {
        census_upto(a.upto.unwrap_or(5), &s.limits)?
    };
    let cmp = compare_dp(&first, &second, &graphs, &s.limits)?;
    let verdict = serde_json::to_value(cmp.verdict).unwrap_or(Value::Null);
    let verdict = verdict.as_str().unwrap_or_default();
    let pair = |p: &Option<(Graph, Graph)>| {
        p.map(|(x, y)| format!("{} {}", write_graph6(&x), write_graph6(&y)))
            .unwrap_or_else(|| "-".into())
    };
    Ok(match s.format {
        Format::Json => to_json(&json!({
            "first": first.id(),
            "second": second.id(),
            "graphs": graphs.len(),
            "comparison": cmp,
        })),
        Format::Csv => format!(
            "first,second,graphs,verdict\n\"{}\",\"{}\",{},{verdict}\n",
            first.id(),
            second.id(),
            graphs.len()
        ),
        Format::Table => format!(
            "first             {}\nsecond            {}\ngraphs            {}\nverdict           {verdict}\nfirst-not-second  {}\nsecond-not-first  {}\n",
            first.id(),
            second.id(),
            graphs.len(),
            pair(&cmp.first_not_second),
            pair(&cmp.second_not_first),
        ),
    })
}

fn cmd_verify(a: &VerifyArgs, s: &Settings) -> Result<(String, i32)> {
    let known = check_ids();
    if a.list {
        return Ok((known.join("\n") + "\n", EXIT_OK));
    }
    if !a.all && a.ids.is_empty() {
        return Err(Error::argument("give check ids or --all"));
    }
    if let Some(bad) = a.ids.iter().find(|id| !known.contains(&id.as_str())) {
        return Err(Error::UnknownCheck(bad.clone()));
    }
    let scope = Scope {
        limits: s.limits,
        seed: s.seed,
    };
    let selected = (!a.all).then_some(a.ids.as_slice());
    let report = HarnessReport::new(scope, run_selected(selected, &scope));
    let code = if report.failed > 0 {
        EXIT_CHECK_FAILED
    } else if report.skipped > 0 {
        EXIT_CAPACITY
    } else {
        EXIT_OK
    };
    let text = match s.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("id,verdict\n");
            for r in &report.results {
                let v = match r.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                    Verdict::Skipped => "skipped",
                };
                out.push_str(&format!("{},{v}\n", r.id));
            }
            out
        }
        Format::Table => report.to_text(a.verbose),
    };
    Ok((text, code))
}

fn edge_probability(a: &RandomArgs) -> Result<EdgeProbability> {
    Ok(match (&a.p, &a.d) {
        (Some(p), _) => EdgeProbability::Constant(parse_ratio(p)?),
        (None, Some(d)) => EdgeProbability::AverageDegree(parse_ratio(d)?),
        (None, None) if a.experiment == Experiment::TwoCycles => {
            EdgeProbability::AverageDegree(parse_ratio("2")?)
        }
        (None, None) => EdgeProbability::Constant(parse_ratio("1/2")?),
    })
}

fn cmd_random(a: &RandomArgs, s: &Settings) -> Result<String> {
    if a.n.is_empty() {
        return Err(Error::argument("give at least one order with --n"));
    }
    let base = GnpParams::new(a.n[0], edge_probability(a)?, s.seed, a.trials)?;
    let reports: Vec<ExperimentReport> = match a.experiment {
        Experiment::TwoCycles => two_cycle_incidence_rate(a.r, &base, &a.n)?,
        _ => a
            .n
            .iter()
            .map(|&n| {
                let params = base.with_order(n)?;
                match a.experiment {
                    Experiment::FrVanish => fr_vanishing_rate(a.r, &params),
                    Experiment::TriangleBlocks => triangle_in_blocks_rate(a.r, &params, a.partitions),
                    Experiment::Collision => {
                        let prop = a.property.as_deref().map(parse_property).transpose()?;
                        let prop = match (a.invariant.as_str(), prop) {
                            ("harary" | "subset", None) => Some(Property::Edgeless),
                            (_, p) => p,
                        };
                        collision_rate(&Invariant::parse(&a.invariant, prop)?, &params, &s.limits)
                    }
                    Experiment::MaxDegree => max_degree_profile(&params),
                    Experiment::TwoCycles => unreachable!("handled above"),
                }
            })
            .collect::<Result<_>>()?,
    };
    Ok(match s.format {
        Format::Json if reports.len() == 1 => to_json(&reports[0]),
        Format::Json => to_json(&reports),
        Format::Csv => {
            let mut out = format!("{}\n", ExperimentReport::CSV_HEADER);
            for r in &reports {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for r in &reports {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!(
                    "{}  {}  successes {} / trials {}  estimate {}\n",
                    r.experiment,
                    params.join(" "),
                    r.successes,
                    r.trials,
                    r.estimate
                ));
                for (k, v) in &r.stats {
                    out.push_str(&format!("    {k} = {v}\n"));
                }
                for note in &r.notes {
                    out.push_str(&format!("    note: {note}\n"));
                }
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["harary"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn poly_examples() {
        let (code, out, _) = run_str(&["poly", "--graph", "K3", "--property", "edgeless", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["h"]["coeffs"], json!(["0", "0", "0", "1"]));
        assert_eq!(v["monomial"]["coeffs"], json!(["0", "2", "-3", "1"]));
        assert_eq!(v["values"], json!(["0", "0", "0", "6"]));

        let (_, out, _) = run_str(&["poly", "--graph", "C4", "--property", "(du C4)", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["h"]["coeffs"], json!(["0", "1", "0", "0", "0"]));

        let (_, out, _) = run_str(&["poly", "--graph6", "@", "--property", "all", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["h"]["coeffs"], json!(["0", "1"]));
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_str(&["poly", "--graph", "K3", "--property", "(mcc"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("byte 4"), "{err}");
        assert_eq!(run_str(&["verify", "nonexistent"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["mates", "--order", "9", "--invariant", "chromatic"]).0, EXIT_CAPACITY);
        assert_eq!(run_str(&["verify", "chk_not_harary"]).0, EXIT_CHECK_FAILED);
        assert_eq!(run_str(&["verify", "chk_ind_mates_cn_dn"]).0, EXIT_OK);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn mates_examples() {
        let (_, out, _) = run_str(&["mates", "--order", "4", "--invariant", "harary", "--property", "all", "--format", "csv"]);
        assert_eq!(out, "n,total,classes,unique,index\n4,11,1,0,0\n");
        let (_, out, _) = run_str(&["mates", "--order", "1", "--invariant", "chromatic", "--format", "csv"]);
        assert_eq!(out, "n,total,classes,unique,index\n1,1,1,1,1\n");
        let (_, out, _) = run_str(&["mates", "--order", "5", "--invariant", "chromatic", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        let sizes: Vec<usize> = v["classes"].as_array().unwrap().iter().map(|c| c["graphs"].as_array().unwrap().len()).collect();
        assert!(sizes.contains(&3));
    }

    #[test]
    fn compare_examples() {
        let (_, out, _) = run_str(&["compare", "harary:all", "chromatic", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["comparison"]["verdict"], "first_below_second");
        let (_, out, _) = run_str(&["compare", "chromatic", "harary:all", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["comparison"]["verdict"], "second_below_first");
        let (_, out, _) = run_str(&[
            "compare", "harary:(explicit C4)", "harary:(explicit K1,3)",
            "--graphs", "C4;K1,3;C4+C4;K1,3+K1,3", "--format", "json",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["comparison"]["verdict"], "incomparable");
        let (_, out, _) = run_str(&["compare", "chromatic", "chromatic", "--format", "csv"]);
        assert!(out.ends_with(",equivalent\n"), "{out}");
    }

    #[test]
    fn random_fast_path() {
        let (code, out, _) = run_str(&[
            "random", "fr-vanish", "--r", "4", "--n", "23", "--p", "1/2", "--trials", "500", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["estimate"], "1/1");
        assert_eq!(v["stats"]["sampled"], 0);
    }

    #[test]
    fn config_layering() {
        let c = Config::parse("enumeration = 6\nseed = 11\nformat = \"json\"\n").unwrap();
        assert_eq!(c.enumeration, Some(6));
        assert_eq!(c.format, Some(Format::Json));
        assert!(matches!(Config::parse("bogus = 1"), Err(Error::Parse { .. })));

        let dir = std::env::temp_dir().join(format!("harary-cfg-{}", std::process::id()));
        std::fs::write(&dir, "enumeration = 6\nseed = 11\nthreads = 3\n").unwrap();
        let opts = GlobalOpts {
            format: None,
            threads: None,
            config: Some(dir.clone()),
            seed: Some(5),
            enumeration: None,
            partition: None,
            canonical: None,
        };
        let s = Settings::resolve(&opts, Some("2")).unwrap();
        assert_eq!((s.limits.enumeration, s.seed, s.threads), (6, 5, Some(2)));
        let s = Settings::resolve(&opts, None).unwrap();
        assert_eq!(s.threads, Some(3));
        assert!(Settings::resolve(&opts, Some("many")).is_err());
        std::fs::remove_file(dir).unwrap();
    }
}
