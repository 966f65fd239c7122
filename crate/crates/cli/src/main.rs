//! `isopair`: build, verify and persist pairs, superalgebras and
//! representations, and run the acceptance suite.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad
//! input (unknown builder, unreadable or malformed JSON, failed construction).

mod builders;
mod catalog;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use isopair_core::pairs::{verify, AxiomReport, PairStructure};
use isopair_core::polyfields::sample_check_w_o_pair;
use isopair_core::reps::{
    check_graph_rep, check_rep, check_split, diagonal_grading, hw_split_module, induced_split_module, weight_characters,
    GraphRep, PairRep, SplitData, Subpair, WordModule,
};
use isopair_core::suite::{run_suite, DEFAULT_SEED};
use isopair_core::tkk::{check_lts_axioms, check_superalgebra, lts_from_pair, superalgebra_from_pair};
use isopair_core::Scalar;

use catalog::CatalogEntry;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("construction failed: {0}")]
    Build(String),
}

#[derive(Parser)]
#[command(name = "isopair", version, about = "Exact graded isotopic pairs, super-Jordan pairs and their representations")]
struct Cli {
    /// Worker threads for the exhaustive checkers.
    #[arg(long, global = true, env = "ISOPAIR_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// Print the report as JSON.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Print the report as indented text (default).
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a pair from a builder string such as `gl:2,1` and write its JSON.
    Make {
        builder: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write a catalog entry (pair, verify report, digest) under this name.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// Check every axiom of a stored pair or catalog entry.
    Verify {
        input: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Build the polarized superalgebra of an isotopic pair and check it.
    Tkk {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Build the triple system of a super-Jordan pair and check its axioms.
    Lts {
        input: PathBuf,
        /// Flip parities first (for isotopic input).
        #[arg(long)]
        flip: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Sampled checks of the vector field / function pair.
    PolyCheck {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        deg: u32,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Run the acceptance suite.
    Suite {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Show sub-check lines for passing criteria too.
        #[arg(long)]
        details: bool,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Check a representation (a rep JSON or a module written by `rep hw`).
    Check {
        input: PathBuf,
        #[arg(long)]
        split: Option<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Highest-weight split module of an envelope pair, diagonally graded.
    Hw {
        #[arg(long)]
        pair: String,
        /// Weight `j1,j2`, for pairs whose degree-zero part is `E11, E22`.
        #[arg(long, conflicts_with_all = ["chi1", "chi2"])]
        weights: Option<String>,
        /// Raw character values on the whole first-space basis (zero off
        /// even degree-zero vectors).
        #[arg(long, requires = "chi2")]
        chi1: Option<String>,
        #[arg(long, requires = "chi1")]
        chi2: Option<String>,
        #[arg(long, default_value_t = 6)]
        cap: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Module induced from a representation of a coordinate subpair.
    Induce {
        #[arg(long)]
        pair: String,
        /// Basis indices of the subpair in the first space.
        #[arg(long, default_value = "")]
        sub1: String,
        #[arg(long, default_value = "")]
        sub2: String,
        /// Seed representation of the subpair; zero action when absent.
        #[arg(long, requires = "split")]
        subrep: Option<PathBuf>,
        #[arg(long, requires = "subrep")]
        split: Option<PathBuf>,
        /// Dimensions of `H1`, `H2` for the zero seed.
        #[arg(long, default_value_t = 1)]
        h1: usize,
        #[arg(long, default_value_t = 0)]
        h2: usize,
        #[arg(long, default_value_t = 4)]
        cap: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a graph-representation.
    GraphCheck {
        input: PathBuf,
        #[command(flatten)]
        format: Format,
    },
}

/// Writes to stdout; a closed pipe (`isopair ... | head`) is not an error.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| CliError::Io { path: p.display().to_string(), msg: e.to_string() }),
        None => {
            outln!("{text}");
            Ok(())
        }
    }
}

fn parse_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Parse { path: path.display().to_string(), msg: e.to_string() }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn emit(r: &AxiomReport, f: Format) -> bool {
    if f.json {
        outln!("{}", json(r));
    } else {
        out!("{}", r.to_text());
    }
    r.pass()
}

fn load_pair(path: &Path) -> Result<(PairStructure, Option<CatalogEntry>), CliError> {
    let src = read(path)?;
    let v: serde_json::Value = serde_json::from_str(&src).map_err(|e| parse_err(path, e))?;
    if v.get("builder").is_some() {
        let c: CatalogEntry = serde_json::from_str(&src).map_err(|e| parse_err(path, e))?;
        Ok((c.pair.clone(), Some(c)))
    } else {
        Ok((PairStructure::from_json(&src).map_err(|e| parse_err(path, e))?, None))
    }
}

fn scalars(s: &str) -> Result<Vec<Scalar>, CliError> {
    s.split(',').map(|t| t.trim().parse::<Scalar>().map_err(|e| CliError::Usage(format!("bad number `{t}`: {e}")))).collect()
}

fn indices(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad index `{t}`"))))
        .collect()
}

fn module_summary(m: &WordModule) -> bool {
    for d in &m.dims {
        outln!("level {} side {} degree {}: dim {}", d.level, d.side, d.degree, d.dim);
    }
    outln!("total dimension {}, stabilized: {}", m.total_dim(), m.stabilized);
    match (&m.rep, &m.split) {
        (Some(r), Some(s)) => {
            let (a, b) = (check_rep(r), check_split(r, s));
            outln!("H1 dim {}, H2 dim {}", s.h1.len(), s.h2.len());
            outln!("check_rep: {}", if a.pass() { "pass" } else { "FAIL" });
            outln!("check_split: {}", if b.pass() { "pass" } else { "FAIL" });
            a.pass() && b.pass()
        }
        _ => false,
    }
}

fn rep_cmd(cmd: RepCmd) -> Result<bool, CliError> {
    match cmd {
        RepCmd::Check { input, split, format } => {
            let src = read(&input)?;
            let (rep, mut sp) = match PairRep::from_json(&src) {
                Ok(r) => (r, None),
                Err(first) => {
                    let m: WordModule = serde_json::from_str(&src).map_err(|_| parse_err(&input, first))?;
                    let r = m.rep.ok_or_else(|| CliError::Usage("module has no extracted action".into()))?;
                    (r, m.split)
                }
            };
            if let Some(p) = split {
                sp = Some(serde_json::from_str::<SplitData>(&read(&p)?).map_err(|e| parse_err(&p, e))?);
            }
            let mut parts = vec![check_rep(&rep)];
            if let Some(s) = &sp {
                parts.push(check_split(&rep, s));
            }
            Ok(emit(&AxiomReport::aggregate("representation", parts), format))
        }
        RepCmd::Hw { pair, weights, chi1, chi2, cap, out } => {
            let b = builders::build(&pair)?;
            let ep = b.envelope.ok_or_else(|| CliError::Usage(format!("`{pair}` has no matrix envelope to grade")))?;
            let g = diagonal_grading(&ep).map_err(|e| CliError::Build(e.to_string()))?;
            let (c1, c2) = match (weights, chi1, chi2) {
                (_, Some(a), Some(b)) => (scalars(&a)?, scalars(&b)?),
                (w, _, _) => {
                    let w = scalars(w.as_deref().unwrap_or("1/2,1/2"))?;
                    if w.len() != 2 {
                        return Err(CliError::Usage("--weights takes two numbers".into()));
                    }
                    weight_characters(&g, &w[0], &w[1]).map_err(|e| CliError::Usage(e.to_string()))?
                }
            };
            let m = hw_split_module(&g, &c1, &c2, cap).map_err(|e| CliError::Build(e.to_string()))?;
            let ok = module_summary(&m);
            if let Some(o) = out {
                write_or_print(Some(&o), &m.to_json())?;
            }
            Ok(ok)
        }
        RepCmd::Induce { pair, sub1, sub2, subrep, split, h1, h2, cap, out } => {
            let b = builders::build(&pair)?;
            let sub = Subpair::of_indices(&b.pair, &indices(&sub1)?, &indices(&sub2)?).map_err(|e| CliError::Build(e.to_string()))?;
            let (seed, sp) = match (subrep, split) {
                (Some(r), Some(s)) => (
                    PairRep::from_json(&read(&r)?).map_err(|e| parse_err(&r, e))?,
                    serde_json::from_str::<SplitData>(&read(&s)?).map_err(|e| parse_err(&s, e))?,
                ),
                _ => {
                    use isopair_core::supercore::{Parity, SuperSpace};
                    let h = SuperSpace::numbered("v", vec![Parity::EVEN; h1 + h2]);
                    (PairRep::zero(sub.pair.clone(), h), SplitData { h1: (0..h1).collect(), h2: (h1..h1 + h2).collect() })
                }
            };
            let m = induced_split_module(&b.pair, &sub, &seed, &sp, cap).map_err(|e| CliError::Build(e.to_string()))?;
            let ok = module_summary(&m);
            if let Some(o) = out {
                write_or_print(Some(&o), &m.to_json())?;
            }
            Ok(ok)
        }
        RepCmd::GraphCheck { input, format } => {
            let g = GraphRep::from_json(&read(&input)?).map_err(|e| parse_err(&input, e))?;
            let r = check_graph_rep(&g).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(emit(&r, format))
        }
    }
}

fn run(cmd: Cmd) -> Result<bool, CliError> {
    match cmd {
        Cmd::Make { builder, out, catalog } => {
            let b = builders::build(&builder)?;
            for n in &b.notes {
                eprintln!("{n}");
            }
            eprintln!("dims {} / {}", b.pair.v1().dims_string(), b.pair.v2().dims_string());
            let text = match catalog {
                Some(name) => {
                    let report = verify(&b.pair);
                    json(&CatalogEntry::new(&name, &builder, b.pair, report))
                }
                None => b.pair.to_json(),
            };
            write_or_print(out.as_deref(), &text)?;
            Ok(true)
        }
        Cmd::Verify { input, format } => {
            let (p, entry) = load_pair(&input)?;
            let r = verify(&p);
            let ok = emit(&r, format);
            if let Some(c) = entry {
                if !c.linked() {
                    eprintln!("catalog entry `{}`: stored digest does not match the pair", c.name);
                    return Ok(false);
                }
                if c.report != r {
                    eprintln!("catalog entry `{}`: stored report differs from a fresh run", c.name);
                    return Ok(false);
                }
            }
            Ok(ok)
        }
        Cmd::Tkk { input, out, format } => {
            let (p, _) = load_pair(&input)?;
            let a = superalgebra_from_pair(&p).map_err(|e| CliError::Usage(e.to_string()))?;
            eprintln!("g0 dim {}, total dim {}", a.g0_dim(), a.dim());
            if let Some(o) = out {
                write_or_print(Some(&o), &a.to_json())?;
            }
            Ok(emit(&check_superalgebra(&a), format))
        }
        Cmd::Lts { input, flip, out, format } => {
            let (mut p, _) = load_pair(&input)?;
            if flip {
                p = p.parity_flip();
            }
            let l = lts_from_pair(&p).map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(o) = out {
                write_or_print(Some(&o), &l.to_json())?;
            }
            Ok(emit(&check_lts_axioms(&l), format))
        }
        Cmd::Rep(c) => rep_cmd(c),
        Cmd::PolyCheck { n, m, deg, trials, seed, format } => Ok(emit(&sample_check_w_o_pair(n, m, deg, trials, seed), format)),
        Cmd::Suite { seed, json: as_json, details } => {
            // The pool is already sized by `main`.
            let r = run_suite(seed, None);
            if as_json {
                outln!("{}", json(&r));
            } else {
                out!("{}", r.to_table(details));
            }
            Ok(r.pass())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot size the thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
