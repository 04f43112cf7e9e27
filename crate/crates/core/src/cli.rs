//! Command-line front end: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 when the command succeeds or the checked property holds,
//! 1 when a property is violated, 2 on bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::DEFAULT_SEED;
use crate::decomposition::{canonical_decompose, decomposition_tree, reconstruct, roundtrip};
use crate::dot::{decomposition_to_dot, emit_dot};
use crate::error::{Error, Result};
use crate::format::{parse_layered, parse_matroid, parse_ray, parse_tree, read_text, write_tree};
use crate::layered::{check_never_meet_once_graph, end_disjointness_report, layered_bonds, layered_circuits, Psi};
use crate::matroid::{Matroid, ScrawlVerdict};
use crate::ray::{Window, WindowMode};
use crate::suite::{run_suite, SuiteConfig};
use crate::two_sum::{two_sum, SharedEdgeWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PsiArg {
    Empty,
    End,
}

impl From<PsiArg> for Psi {
    fn from(p: PsiArg) -> Psi {
        match p {
            PsiArg::Empty => Psi::Empty,
            PsiArg::End => Psi::End,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check that a circuit family satisfies the matroid axioms.
    Validate { file: PathBuf },
    /// Print the dual matroid.
    Dual { file: PathBuf },
    /// Print the minor obtained by contracting and deleting labels.
    Minor {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
    },
    /// Decide whether a set is a union of circuits.
    Scrawl {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
    /// Print the 2-sum of two matroids along a shared label.
    TwoSum {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        shared: String,
    },
    /// Glue a tree of matroids into one matroid.
    Glue { file: PathBuf },
    /// Validate a tree and check that precircuits and precocircuits never meet once.
    TreeCheck { file: PathBuf },
    /// Print the canonical decomposition as a tree file.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Glue a decomposition tree back together.
    Reconstruct { file: PathBuf },
    /// Decompose and reconstruct; succeeds iff the circuits are unchanged.
    Roundtrip { file: PathBuf },
    /// Niceness, circuit counts and tameness of a ray of matroids.
    RayAnalyze {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Circuits, bonds and end bookkeeping of a layered graph.
    GraphAnalyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = PsiArg::Empty)]
        psi: PsiArg,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Run the acceptance suite.
    Suite,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "matroid-forge", version, about = "2-sums, trees of matroids and canonical decompositions")]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { code: EXIT_OK, report }
    }
}

/// Errors that mean the input was fine but a checked property failed.
fn is_violation(e: &Error) -> bool {
    matches!(
        e,
        Error::AxiomViolation { .. }
            | Error::NotAMatroid(_)
            | Error::LemmaViolation(_)
            | Error::UniquenessFailure(_)
            | Error::AssertionFailure(_)
            | Error::InconsistentPrecircuit(_)
    )
}

fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, reason } => Error::Parse {
            line,
            reason: format!("{}: {reason}", path.display()),
        },
        other => other,
    }
}

fn load<T>(path: &Path, parse: fn(&str) -> Result<T>) -> Result<T> {
    let text = read_text(path).map_err(|e| match e {
        Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
        other => other,
    })?;
    parse(&text).map_err(|e| with_path(path, e))
}

pub fn run(req: &CommandRequest) -> Outcome {
    match dispatch(req) {
        Ok(o) => o,
        Err(e) => Outcome {
            code: if is_violation(&e) { EXIT_VIOLATION } else { EXIT_INPUT },
            report: format!("error: {e}\n"),
        },
    }
}

fn summary(m: &Matroid) -> String {
    format!("{} elements, rank {}, {} circuits", m.len(), m.rank(), m.circuits().len())
}

fn dispatch(req: &CommandRequest) -> Result<Outcome> {
    let mut out = String::new();
    match &req.command {
        Command::Validate { file } => {
            let m = load(file, parse_matroid)?;
            let _ = writeln!(out, "valid matroid: {}", summary(&m));
        }
        Command::Dual { file } => out = load(file, parse_matroid)?.dual().to_string(),
        Command::Minor { file, contract, delete } => {
            out = load(file, parse_matroid)?.minor_by_labels(contract, delete)?.to_string();
        }
        Command::Scrawl { file, set } => {
            let m = load(file, parse_matroid)?;
            match m.is_scrawl(m.set_of(set)?) {
                ScrawlVerdict::Scrawl(cover) => {
                    out.push_str("scrawl: union of\n");
                    for c in cover {
                        let _ = writeln!(out, "  {}", m.labels(c).join(" "));
                    }
                }
                ScrawlVerdict::NotScrawl(b) => {
                    let _ = writeln!(out, "not a scrawl: cocircuit {} meets it once", m.labels(b).join(" "));
                }
            }
        }
        Command::TwoSum { left, right, shared } => {
            let (a, b) = (load(left, parse_matroid)?, load(right, parse_matroid)?);
            out = two_sum(&SharedEdgeWitness::new(&a, &b, shared))?.to_string();
        }
        Command::Glue { file } | Command::Reconstruct { file } => {
            out = reconstruct(&load(file, parse_tree)?)?.to_string();
        }
        Command::TreeCheck { file } => {
            let t = load(file, parse_tree)?;
            let r = t.check_never_meet_once()?;
            let _ = writeln!(
                out,
                "tree ok: {} nodes, {} precircuit supports, {} precocircuit supports",
                t.nodes().len(),
                r.precircuit_supports,
                r.precocircuit_supports
            );
            let _ = writeln!(
                out,
                "never meet once: {} pairs checked, largest meet {}",
                r.pairs_checked, r.max_intersection
            );
        }
        Command::Decompose { file, dot } => {
            let m = load(file, parse_matroid)?;
            let c = canonical_decompose(&m)?;
            out = write_tree(&decomposition_tree(&m, &c.decomposition)?);
            if let Some(path) = dot {
                emit_dot(&decomposition_to_dot(&m, &c.decomposition)?, path)?;
            }
        }
        Command::Roundtrip { file } => {
            let r = roundtrip(&load(file, parse_matroid)?)?;
            let verdict = if r.identity { "identity holds" } else { "identity fails" };
            let _ = writeln!(out, "{verdict} ({} nodes)", r.nodes);
            if !r.identity {
                return Ok(Outcome {
                    code: EXIT_VIOLATION,
                    report: out,
                });
            }
        }
        Command::RayAnalyze { file, depth } => out = ray_analyze(file, *depth)?,
        Command::GraphAnalyze { file, psi, depth } => out = graph_analyze(file, (*psi).into(), *depth, req.verbose)?,
        Command::Suite => {
            let report = run_suite(SuiteConfig {
                seed: req.seed,
                verbose: req.verbose,
            });
            return Ok(Outcome {
                code: if report.passed() { EXIT_OK } else { EXIT_VIOLATION },
                report: report.render(req.verbose),
            });
        }
    }
    Ok(Outcome::ok(out))
}

fn ray_analyze(file: &Path, d: usize) -> Result<String> {
    let ray = load(file, parse_ray)?;
    let mut out = String::new();
    let window = ray.finite_circuits(d)?;
    let open = ray.window_family(Window {
        depth: d,
        mode: WindowMode::AllowEnd,
    })?;
    let _ = writeln!(out, "prefix nodes {}, period nodes {}", ray.prefix().len(), ray.period().len());
    let _ = writeln!(out, "periodic circuits {}", ray.periodic_circuits().len());
    let _ = writeln!(
        out,
        "window {d}: {} elements, {} finite circuits, {} circuits through the end",
        window.ground.len(),
        window.finite.len(),
        open.through_end.len()
    );
    match ray.is_nice() {
        Err(w) => {
            let _ = writeln!(
                out,
                "not nice: dummy after node {} is a {:?} seen {:?}",
                w.edge, w.kind, w.direction
            );
        }
        Ok(()) => {
            out.push_str("nice\n");
            let psi = ray.psi_matroids_of_ray(d)?;
            let _ = writeln!(
                out,
                "gluings at window {d}: {}",
                if psi.differ { "differ" } else { "agree" }
            );
            let t = ray.tameness_report(d)?;
            let use_line = |name: &str, u: crate::ray::EndUse| {
                format!("{name} gluing: circuits use end {}, cocircuits use end {}\n", u.circuits, u.cocircuits)
            };
            out.push_str(&use_line("empty", t.empty_gluing));
            out.push_str(&use_line("end", t.omega_gluing));
            let _ = writeln!(
                out,
                "periodic cocircuits {}, shared end {}, per-period intersections {:?}",
                t.periodic_cocircuits, t.shared_end, t.per_period_intersections
            );
            let f = ray.finitarisation_check(d)?;
            let _ = writeln!(
                out,
                "finitarisation: circuits {}, cocircuits {}",
                if f.circuits_identity { "identity holds" } else { "identity fails" },
                if f.cocircuits_identity { "identity holds" } else { "identity fails" }
            );
        }
    }
    Ok(out)
}

fn graph_analyze(file: &Path, psi: Psi, d: usize, verbose: bool) -> Result<String> {
    let lg = load(file, parse_layered)?;
    let mut out = String::new();
    let circuits = layered_circuits(&lg, psi, d)?;
    let bonds = layered_bonds(&lg, psi, d)?;
    let _ = writeln!(out, "psi {psi:?}, depth {d}: {} circuits, {} bonds", circuits.len(), bonds.len());
    if verbose {
        for c in &circuits {
            let _ = writeln!(out, "  circuit {}", c.describe());
        }
        for b in &bonds {
            let _ = writeln!(out, "  bond {}", b.describe());
        }
    }
    let r = check_never_meet_once_graph(&lg, psi, d)?;
    let _ = writeln!(
        out,
        "never meet once: {} pairs checked, largest finite meet {}",
        r.pairs_checked, r.max_finite_intersection
    );
    let e = end_disjointness_report(&lg, psi, d)?;
    let _ = writeln!(
        out,
        "end use: {} circuits, {} bonds, disjoint {}",
        e.circuits_using_end, e.bonds_using_end, e.disjoint
    );
    Ok(out)
}

/// Parses `args` (program name first) and runs the command. Usage errors
/// come back with exit code 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CommandRequest::try_parse_from(args) {
        Ok(req) => run(&req),
        Err(e) => Outcome {
            code: if e.use_stderr() { EXIT_INPUT } else { EXIT_OK },
            report: e.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_parse() {
        let r = CommandRequest::try_parse_from(["mf", "graph-analyze", "x", "--psi", "end", "--depth", "4", "--verbose"])
            .unwrap();
        assert_eq!(
            r.command,
            Command::GraphAnalyze {
                file: "x".into(),
                psi: PsiArg::End,
                depth: 4
            }
        );
        assert!(r.verbose);
        assert_eq!(r.seed, DEFAULT_SEED);
    }

    #[test]
    fn usage_error_is_input_error() {
        assert_eq!(run_args(["mf", "two-sum", "a"]).code, EXIT_INPUT);
        assert_eq!(run_args(["mf", "validate", "/nonexistent/file"]).code, EXIT_INPUT);
    }
}
