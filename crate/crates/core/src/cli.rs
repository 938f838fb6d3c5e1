//! The `msgraph` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.
//! The last line on standard output is always a `RESULT:` summary, except
//! for `gen` writing a document to standard output. Timings and
//! diagnostics go to standard error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use crate::classify::{
    classify_hamiltonian, classify_triangles, is_balanced, Balance, HamiltonianClass,
};
use crate::error::{Error, Result};
use crate::gen::{gen_constant, gen_planted_mixed, gen_random};
use crate::graph::MultisignedCompleteGraph;
use crate::io::{parse_graph, serialize_graph};
use crate::multisign::Multisign;
use crate::oracle::{agreement_with, enumerate_hamiltonian, verify_with, SpaceMode};
use crate::props::{run_all, PropsConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "msgraph",
    version,
    about = "Hamiltonian cycle multisigns of signed and multisigned complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify triangles, Hamiltonian cycles and balance without enumeration
    Classify {
        /// msgraph document, or `-` for standard input
        file: PathBuf,
    },
    /// Enumerate every Hamiltonian cycle and tally multisigns (n <= 13)
    Oracle { file: PathBuf },
    /// Compare the classifier against full enumeration (n <= 13)
    Verify { file: PathBuf },
    /// Write a generated graph as an msgraph document
    Gen(GenArgs),
    /// Check the classifier against enumeration over every graph of a size
    Exhaust {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run the seeded property suites
    Props {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        #[arg(long, default_value_t = 8)]
        mmax: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Constant,
    Random,
    PlantedMixed,
}

#[derive(Debug, clap::Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Multisign width; defaults to the --sign width for constant, else 1
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Edge multisign for the constant model, e.g. `-+`
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Per-component probability of `-` for the random model
    #[arg(long)]
    p: Option<f64>,
    /// Output path; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A command failure and the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Classify { file } => load(&file).and_then(|g| classify_report(&g, out)),
        Command::Oracle { file } => load(&file).and_then(|g| oracle_report(&g, out)),
        Command::Verify { file } => {
            load(&file).and_then(|g| verify_report(&g, classify_hamiltonian, out))
        }
        Command::Gen(args) => gen_command(&args, out),
        Command::Exhaust { n, m } => {
            exhaust_report(n, m, classify_hamiltonian, Path::new("."), out, err)
        }
        Command::Props {
            trials,
            seed,
            nmax,
            mmax,
        } => props_report(
            &PropsConfig {
                trials,
                seed,
                n_max: nmax,
                m_max: mmax,
            },
            out,
        ),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Reads and parses a graph document; `-` means standard input.
pub fn load(path: &Path) -> std::result::Result<MultisignedCompleteGraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
    };
    parse_graph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn header(graph: &MultisignedCompleteGraph, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "graph: n={} m={}", graph.n(), graph.width())
}

pub fn classify_report(graph: &MultisignedCompleteGraph, out: &mut dyn Write) -> CmdResult {
    let triangles = classify_triangles(graph);
    let ham = classify_hamiltonian(graph)?;
    header(graph, out)?;
    writeln!(out, "triangles: {triangles}")?;
    writeln!(out, "hamiltonian: {} ({})", ham.verdict, ham.basis)?;
    match is_balanced(graph) {
        Balance::Balanced => writeln!(out, "balanced: yes")?,
        Balance::Unbalanced {
            certificate: ([a, b, c], g),
        } => writeln!(out, "balanced: no (triangle {a} {b} {c} = {g})")?,
    }
    writeln!(out, "RESULT: {}", ham.verdict)?;
    Ok(EXIT_OK)
}

pub fn oracle_report(graph: &MultisignedCompleteGraph, out: &mut dyn Write) -> CmdResult {
    let survey = enumerate_hamiltonian(graph)?;
    header(graph, out)?;
    writeln!(out, "hamiltonian cycles: {}", survey.total)?;
    for (g, count) in &survey.counts {
        writeln!(out, "  {g} {count}")?;
    }
    writeln!(out, "RESULT: {} distinct", survey.distinct_count())?;
    Ok(EXIT_OK)
}

/// Runs `classifier` and the oracle; exit 1 when they disagree.
pub fn verify_report<F>(
    graph: &MultisignedCompleteGraph,
    classifier: F,
    out: &mut dyn Write,
) -> CmdResult
where
    F: Fn(&MultisignedCompleteGraph) -> Result<HamiltonianClass>,
{
    let v = verify_with(graph, classifier)?;
    header(graph, out)?;
    writeln!(
        out,
        "classifier: {} ({})",
        v.classified.verdict, v.classified.basis
    )?;
    writeln!(
        out,
        "oracle: {} ({} cycles, {} distinct)",
        v.survey.verdict(),
        v.survey.total,
        v.survey.distinct_count()
    )?;
    if v.agrees() {
        writeln!(out, "RESULT: PASS")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "RESULT: FAIL")?;
        Ok(EXIT_FAIL)
    }
}

fn gen_graph(args: &GenArgs) -> std::result::Result<MultisignedCompleteGraph, Failure> {
    let reject = |flag: &str| {
        Failure::usage(format!(
            "--{flag} is not accepted by --model {}",
            args.model
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))
    };
    match args.model {
        ModelArg::Constant => {
            if args.seed.is_some() {
                return Err(reject("seed"));
            }
            if args.p.is_some() {
                return Err(reject("p"));
            }
            let sign = args
                .sign
                .as_deref()
                .ok_or_else(|| Failure::usage("--model constant requires --sign"))?;
            let g = Multisign::parse(sign)?;
            let m = args.m.unwrap_or(g.width());
            Ok(gen_constant(args.n, m, g)?)
        }
        ModelArg::Random => {
            if args.sign.is_some() {
                return Err(reject("sign"));
            }
            let p = args.p.unwrap_or(0.5);
            Ok(gen_random(
                args.n,
                args.m.unwrap_or(1),
                args.seed.unwrap_or(0),
                p,
            )?)
        }
        ModelArg::PlantedMixed => {
            if args.sign.is_some() {
                return Err(reject("sign"));
            }
            if args.p.is_some() {
                return Err(reject("p"));
            }
            Ok(gen_planted_mixed(
                args.n,
                args.m.unwrap_or(1),
                args.seed.unwrap_or(0),
            )?)
        }
    }
}

fn gen_command(args: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let graph = gen_graph(args).map_err(|f| Failure {
        code: f.code,
        message: format!("{}\n{}", f.message, Cli::command().render_usage()),
    })?;
    let doc = serialize_graph(&graph);
    match &args.out {
        Some(path) => {
            fs::write(path, &doc)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            writeln!(
                out,
                "wrote {} (n={} m={})",
                path.display(),
                graph.n(),
                graph.width()
            )?;
            writeln!(out, "RESULT: PASS")?;
        }
        None => out.write_all(doc.as_bytes())?,
    }
    Ok(EXIT_OK)
}

/// Exhaustive agreement run. Each mismatching graph is written to `dir` as
/// `counterexample-n<n>-m<m>-<index>.msgraph`.
pub fn exhaust_report<F>(
    n: usize,
    m: usize,
    classifier: F,
    dir: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult
where
    F: Fn(&MultisignedCompleteGraph) -> Result<HamiltonianClass>,
{
    let report = agreement_with(n, m, SpaceMode::Exhaustive, classifier)?;
    writeln!(out, "space: n={n} m={m} {}", report.mode)?;
    writeln!(out, "instances: {}", report.instances)?;
    writeln!(out, "mismatches: {}", report.mismatches.len())?;
    for mm in &report.mismatches {
        let path = dir.join(format!("counterexample-n{n}-m{m}-{}.msgraph", mm.index));
        fs::write(&path, &mm.document)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        writeln!(
            out,
            "  index {}: classifier {} oracle {} -> {}",
            mm.index,
            mm.classified,
            mm.observed,
            path.display()
        )?;
    }
    writeln!(err, "elapsed: {:.3} s", report.elapsed.as_secs_f64())?;
    if report.passed() {
        writeln!(out, "RESULT: PASS")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "RESULT: FAIL")?;
        Ok(EXIT_FAIL)
    }
}

pub fn props_report(cfg: &PropsConfig, out: &mut dyn Write) -> CmdResult {
    cfg.validate()?;
    let reports = run_all(cfg)?;
    writeln!(
        out,
        "props: trials={} seed={} nmax={} mmax={}",
        cfg.trials, cfg.seed, cfg.n_max, cfg.m_max
    )?;
    for r in &reports {
        writeln!(out, "{r}")?;
        if let Some(first) = &r.first_failure {
            writeln!(out, "  first failure: {first}")?;
        }
    }
    if reports.iter().all(|r| r.passed()) {
        writeln!(out, "RESULT: PASS")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "RESULT: FAIL")?;
        Ok(EXIT_FAIL)
    }
}
