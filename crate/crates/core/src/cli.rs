//! The `schur` command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bases::{enumerate_basis, quantum_rank_certificate, rank_of_family, schur_dimension, BasisKind, BasisTable};
use crate::error::SchurError;
use crate::hecke::{hecke_summary, HeckeSummary};
use crate::ring::Mode;
use crate::rootvectors::BasisLabel;
use crate::tensormodel::{Model, DEFAULT_WORD_CAP};
use crate::verify::{run_suite, CheckReport, Suite};

pub const WORD_CAP_ENV: &str = "SCHUR_WORD_CAP";
pub const SCHEMA: &str = "1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SIZE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "schur", version, about = "Exact Schur and q-Schur algebras on tensor space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    /// Largest allowed n^d; overrides SCHUR_WORD_CAP.
    #[arg(long, global = true)]
    pub word_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size of B1 and its certified rank.
    Dim {
        n: usize,
        d: usize,
        #[arg(long)]
        quantum: bool,
    },
    /// List the labels of a basis.
    Basis {
        n: usize,
        d: usize,
        /// b1, b2, pbw, pbw:K, plus, minus, borel_up, borel_down, zero
        #[arg(long, default_value = "b1")]
        kind: String,
        #[arg(long)]
        k0: Option<usize>,
        #[arg(long)]
        quantum: bool,
    },
    /// Run verification suites.
    Verify {
        n: usize,
        d: usize,
        #[arg(long)]
        quantum: bool,
        /// all, relations, idempotent, reduction, structural, specialize, rank1
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Structure constants b_L b_R in a basis; L and R are label positions.
    Structconst {
        n: usize,
        d: usize,
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
        #[arg(long, default_value = "b1")]
        kind: String,
        #[arg(long)]
        k0: Option<usize>,
        #[arg(long)]
        quantum: bool,
    },
    /// Dimension and generators of 1_omega S 1_omega.
    Hecke {
        n: usize,
        d: usize,
        #[arg(long)]
        quantum: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Dim,
    Basis,
    Verify(Suite),
    Structconst { left: usize, right: usize },
    Hecke,
}

/// A validated request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    pub n: usize,
    pub d: usize,
    pub mode: Mode,
    pub kind: BasisKind,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub word_cap: usize,
}

/// Exit status and the rendered report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub body: String,
}

fn mode_of(quantum: bool) -> Mode {
    if quantum {
        Mode::Quantum
    } else {
        Mode::Classical
    }
}

/// Parses a basis kind; a bare `pbw` takes `k0` from the flag, defaulting to `n`.
pub fn parse_kind(kind: &str, k0: Option<usize>, n: usize) -> Result<BasisKind, String> {
    match kind.parse::<BasisKind>()? {
        BasisKind::Pbw { k0: parsed } => {
            let k0 = k0.or((parsed > 0).then_some(parsed)).unwrap_or(n);
            if (1..=n).contains(&k0) {
                Ok(BasisKind::Pbw { k0 })
            } else {
                Err(format!("k0 must lie in 1..={n}, got {k0}"))
            }
        }
        other => Ok(other),
    }
}

impl RunConfig {
    /// Validates parsed arguments. `env_cap` is the value of `SCHUR_WORD_CAP`.
    pub fn from_cli(cli: Cli, env_cap: Option<String>) -> Result<Self, String> {
        let word_cap = match (cli.word_cap, env_cap) {
            (Some(c), _) => c,
            (None, Some(s)) => s
                .trim()
                .parse()
                .map_err(|_| format!("{WORD_CAP_ENV} must be a positive integer, got {s:?}"))?,
            (None, None) => DEFAULT_WORD_CAP,
        };
        let (task, n, d, mode, kind) = match cli.command {
            Command::Dim { n, d, quantum } => (Task::Dim, n, d, mode_of(quantum), BasisKind::B1),
            Command::Basis { n, d, kind, k0, quantum } => {
                (Task::Basis, n, d, mode_of(quantum), parse_kind(&kind, k0, n)?)
            }
            Command::Verify { n, d, quantum, suite } => {
                (Task::Verify(suite.parse()?), n, d, mode_of(quantum), BasisKind::B1)
            }
            Command::Structconst { n, d, left, right, kind, k0, quantum } => (
                Task::Structconst { left, right },
                n,
                d,
                mode_of(quantum),
                parse_kind(&kind, k0, n)?,
            ),
            Command::Hecke { n, d, quantum } => (Task::Hecke, n, d, mode_of(quantum), BasisKind::B1),
        };
        if n < 2 || d < 1 {
            return Err(format!("need n >= 2 and d >= 1, got n = {n}, d = {d}"));
        }
        Ok(RunConfig { task, n, d, mode, kind, format: cli.format, output: cli.output, word_cap })
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    n: usize,
    d: usize,
    mode: Mode,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct Certificate {
    point: String,
    rank: usize,
}

#[derive(Serialize)]
struct DimBody {
    count: usize,
    rank: usize,
    expected: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<Certificate>>,
    pass: bool,
}

#[derive(Serialize)]
struct BasisBody<'a> {
    kind: String,
    count: usize,
    labels: &'a [BasisLabel],
}

#[derive(Serialize)]
struct VerifyBody<'a> {
    suite: String,
    reports: &'a [CheckReport],
    pass: bool,
}

#[derive(Serialize)]
struct StructBody<'a> {
    kind: String,
    basis: &'a [BasisLabel],
    triples: &'a [crate::bases::StructTriple],
    integral: bool,
    pass: bool,
}

fn json<T: Serialize>(cfg: &RunConfig, command: &str, body: T) -> String {
    let env = Envelope { schema: SCHEMA, command, n: cfg.n, d: cfg.d, mode: cfg.mode, body };
    let mut s = serde_json::to_string_pretty(&env).expect("serializable report");
    s.push('\n');
    s
}

fn status(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn error_status(e: &SchurError) -> i32 {
    match e {
        SchurError::SizeLimit { .. } => EXIT_SIZE,
        SchurError::NotInSpan | SchurError::Ring(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn suite_name(s: Suite) -> String {
    serde_json::to_value(s).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

/// Executes a validated request.
pub fn run(cfg: &RunConfig) -> Result<Outcome, SchurError> {
    let model = Model::with_word_cap(cfg.n, cfg.d, cfg.mode, cfg.word_cap)?;
    let pf = |p: bool| if p { "pass" } else { "FAIL" };
    match cfg.task {
        Task::Dim => {
            let table = BasisTable::new(&model, enumerate_basis(cfg.n, cfg.d, BasisKind::B1))?;
            let count = table.len();
            let expected = schur_dimension(cfg.n, cfg.d).to_usize().expect("small");
            let rank = rank_of_family(&model, table.ops());
            let certificate = (cfg.mode == Mode::Quantum).then(|| {
                quantum_rank_certificate(&model, table.ops())
                    .into_iter()
                    .map(|(point, rank)| Certificate { point, rank })
                    .collect::<Vec<_>>()
            });
            let pass = count == expected
                && rank == count
                && certificate.as_ref().is_none_or(|c| c.iter().all(|x| x.rank == count));
            let body = match cfg.format {
                Format::Json => json(cfg, "dim", DimBody { count, rank, expected, certificate, pass }),
                Format::Csv => format!("n,d,mode,count,rank,expected,pass\n{},{},{},{count},{rank},{expected},{pass}\n", cfg.n, cfg.d, cfg.mode),
                Format::Text => format!("count={count} rank={rank} expected={expected} {}\n", pf(pass)),
            };
            Ok(Outcome { status: status(pass), body })
        }
        Task::Basis => {
            let labels = enumerate_basis(cfg.n, cfg.d, cfg.kind);
            let body = match cfg.format {
                Format::Json => json(cfg, "basis", BasisBody { kind: cfg.kind.to_string(), count: labels.len(), labels: &labels }),
                Format::Csv => {
                    let mut s = String::from("index,label\n");
                    for (k, l) in labels.iter().enumerate() {
                        let _ = writeln!(s, "{k},{}", l.key());
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("{} basis, {} labels\n", cfg.kind, labels.len());
                    for (k, l) in labels.iter().enumerate() {
                        let _ = writeln!(s, "{k:>5}  {}", l.key());
                    }
                    s
                }
            };
            Ok(Outcome { status: EXIT_PASS, body })
        }
        Task::Verify(suite) => {
            let reports = run_suite(&model, suite)?;
            let pass = reports.iter().all(|r| r.pass);
            let body = match cfg.format {
                Format::Json => json(cfg, "verify", VerifyBody { suite: suite_name(suite), reports: &reports, pass }),
                Format::Csv => {
                    let mut s = String::from("check,relation,cases,pass,vacuous\n");
                    for r in &reports {
                        for rel in &r.relations {
                            let _ = writeln!(s, "{},{},{},{},{}", r.check, rel.id, rel.cases, rel.pass, rel.vacuous);
                        }
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        let _ = write!(s, "{r}");
                    }
                    let _ = writeln!(s, "overall: {}", pf(pass));
                    s
                }
            };
            Ok(Outcome { status: status(pass), body })
        }
        Task::Structconst { left, right } => {
            let table = BasisTable::new(&model, enumerate_basis(cfg.n, cfg.d, cfg.kind))?;
            for k in [left, right] {
                if k >= table.len() {
                    return Err(SchurError::IndexOutOfRange { what: "basis label", index: k });
                }
            }
            let st = table.table(&model, &[(left, right)])?;
            let integral = st.is_integral();
            let pass = integral || !matches!(cfg.kind, BasisKind::B1 | BasisKind::B2);
            let body = match cfg.format {
                Format::Json => json(
                    cfg,
                    "structconst",
                    StructBody { kind: cfg.kind.to_string(), basis: &st.basis, triples: &st.triples, integral, pass },
                ),
                Format::Csv => {
                    let mut s = String::from("left,right,label,coefficient\n");
                    for t in &st.triples {
                        for (k, x) in &t.coeffs {
                            let _ = writeln!(s, "{},{},{k},\"{x}\"", t.left, t.right);
                        }
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for t in &st.triples {
                        let _ = writeln!(s, "{} * {} =", t.left, t.right);
                        if t.coeffs.is_empty() {
                            let _ = writeln!(s, "  0");
                        }
                        for (k, x) in &t.coeffs {
                            let _ = writeln!(s, "  ({x}) {k}");
                        }
                    }
                    let _ = writeln!(s, "integral: {integral}");
                    s
                }
            };
            Ok(Outcome { status: status(pass), body })
        }
        Task::Hecke => {
            let h: HeckeSummary = hecke_summary(&model)?;
            let body = match cfg.format {
                Format::Json => json(cfg, "hecke", &h),
                Format::Csv => format!(
                    "omega,dim,expected,EF,FE,pass\n\"{}\",{},{},{},{},{}\n",
                    h.omega,
                    h.dim,
                    h.expected,
                    h.generation.as_ref().map_or(String::new(), |g| g.ef.to_string()),
                    h.generation.as_ref().map_or(String::new(), |g| g.fe.to_string()),
                    h.pass
                ),
                Format::Text => {
                    let mut s = format!("omega={} dim={} expected={}", h.omega, h.dim, h.expected);
                    if let Some(g) = &h.generation {
                        let _ = write!(s, " EF={} FE={}", pf(g.ef), pf(g.fe));
                    }
                    let _ = writeln!(s, " {}", pf(h.pass));
                    s
                }
            };
            Ok(Outcome { status: status(h.pass), body })
        }
    }
}

/// Parses `args`, runs, writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let cfg = match RunConfig::from_cli(cli, std::env::var(WORD_CAP_ENV).ok()) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    match run(&cfg) {
        Ok(out) => {
            match &cfg.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &out.body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_USAGE;
                    }
                }
                None => print!("{}", out.body),
            }
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            error_status(&e)
        }
    }
}
