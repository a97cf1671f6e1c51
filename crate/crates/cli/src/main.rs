//! Command-line front end: inspect space files, run verification suites, and
//! compute single quantities.
//!
//! Exit codes: 0 success, 1 suite failure, 2 parse error, 3 hypothesis
//! violation, 4 bad invocation.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use rankmatch::space::{parse_space, AffineSpace, SpaceError, SpaceKind, DEFAULT_ORACLE_CAP};
use rankmatch::suite::{self, VerificationReport};
use rankmatch::theorem::{witness_search_alt, witness_search_ws, TheoremError, WitnessResult};
use rankmatch::{graph, Matrix};

const EXIT_SUITE_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_BAD_INVOCATION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "rankmatch",
    about = "Exact finite-field checks relating max rank of affine matrix spaces to graph matchings",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a space file: dimension, leading graph, nu, mu, rho, witness.
    Info {
        /// Space file path.
        #[arg(long)]
        file: PathBuf,
        /// Max members enumerated by the exact rank oracle.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u64,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite (thm1, thm2, cor3, thm4, thm5, erdos-gallai,
    /// counterexamples, all).
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        d: Option<usize>,
        /// With loops (erdos-gallai only).
        #[arg(long)]
        loops: bool,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compute one quantity: rank, det, pf (on a dim-0 space file), mu, nu
    /// (on a graph file), ua, us (from --n/--k).
    Compute {
        kind: String,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn bad(msg: impl Into<String>) -> Failure {
        Failure { code: EXIT_BAD_INVOCATION, message: msg.into() }
    }

    fn parse(msg: impl Into<String>) -> Failure {
        Failure { code: EXIT_PARSE, message: msg.into() }
    }

    fn hypothesis(msg: impl Into<String>) -> Failure {
        Failure { code: EXIT_HYPOTHESIS, message: msg.into() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Let clap print its rendered help/usage, but keep our exit code
            // convention: anything unparseable is a bad invocation.
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help { ExitCode::SUCCESS } else { ExitCode::from(EXIT_BAD_INVOCATION) };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Info { file, cap, json } => cmd_info(&file, cap, json),
        Command::Verify { suite, n, k, p, d, loops, trials, seed, cap, json } => {
            cmd_verify(&suite, n, k, p, d, loops, trials, seed, cap, json)
        }
        Command::Compute { kind, file, n, k, json } => cmd_compute(&kind, file.as_deref(), n, k, json),
    }
}

fn load_space(path: &std::path::Path) -> Result<AffineSpace, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    parse_space(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct InfoOutput {
    p: u16,
    n: usize,
    kind: String,
    dim: usize,
    dropped_dependent: usize,
    graph: Vec<Vec<usize>>,
    nu: usize,
    mu: usize,
    rho: Option<usize>,
    rho_lower_bound: usize,
    witness_rank: usize,
    witness: Vec<Vec<u16>>,
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<u16>> {
    (0..m.n_rows())
        .map(|i| (0..m.n_cols()).map(|j| m.get(i, j).value()).collect())
        .collect()
}

fn cmd_info(path: &std::path::Path, cap: u64, json: bool) -> Result<u8, Failure> {
    let space = load_space(path)?;
    space.validate_span(rankmatch::SPAN_CHECK_CAP).map_err(|e| Failure::hypothesis(e.to_string()))?;
    let canon = space.canonicalize().map_err(|e| Failure::hypothesis(e.to_string()))?;
    if canon.dropped > 0 {
        eprintln!(
            "warning: basis reduced from {} to {} generators (dependent input)",
            space.dim(),
            canon.space.dim()
        );
    }
    let canonical = canon.space;
    let graph = canonical.leading_graph().map_err(|e| Failure::hypothesis(e.to_string()))?;
    let nu = graph.nu();
    let mu = graph.mu();

    let witness: Option<WitnessResult> = match canonical.kind() {
        SpaceKind::Alternating => match witness_search_alt(&canonical) {
            Ok(w) => Some(w),
            Err(TheoremError::HypothesisViolation { what, .. }) => {
                return Err(Failure::hypothesis(what))
            }
            Err(e) => return Err(Failure::hypothesis(e.to_string())),
        },
        _ if canonical.spec().p() >= 3 && canonical.kind() != SpaceKind::General => {
            match witness_search_ws(&canonical, rankmatch::SPAN_CHECK_CAP) {
                Ok(w) => Some(w),
                Err(TheoremError::HypothesisViolation { what, .. }) => {
                    return Err(Failure::hypothesis(what))
                }
                Err(e) => return Err(Failure::hypothesis(e.to_string())),
            }
        }
        // GF(2) non-alternating or general kind: no grid witness applies.
        _ => None,
    };

    let oracle = match canonical.max_rank_oracle(cap) {
        Ok((rho, member)) => Some((rho, member)),
        Err(SpaceError::EnumerationTooLarge { .. }) => None,
        Err(e) => return Err(Failure::hypothesis(e.to_string())),
    };

    let (rho, rho_lower_bound, witness_member, witness_rank) = match (&oracle, &witness) {
        (Some((rho, _)), Some(w)) => (Some(*rho), *rho, w.member.clone(), w.achieved_rank),
        (Some((rho, member)), None) => (Some(*rho), *rho, member.clone(), *rho),
        (None, Some(w)) => (None, w.achieved_rank, w.member.clone(), w.achieved_rank),
        (None, None) => {
            return Err(Failure::bad(format!(
                "the space has {} members, beyond --cap {cap}, and no grid witness applies",
                canonical.member_count()
            )))
        }
    };

    if json {
        let out = InfoOutput {
            p: canonical.spec().p(),
            n: canonical.n(),
            kind: canonical.kind().name().to_string(),
            dim: canonical.dim(),
            dropped_dependent: canon.dropped,
            graph: graph.edges().map(|e| e.vertices().collect()).collect(),
            nu,
            mu,
            rho,
            rho_lower_bound,
            witness_rank,
            witness: matrix_rows(&witness_member),
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        let rho_text = match rho {
            Some(r) => format!("rho={r}"),
            None => format!("rho>={rho_lower_bound} (witness lower bound; oracle beyond cap)"),
        };
        println!("dim={} G={} nu={} mu={} {}", canonical.dim(), graph, nu, mu, rho_text);
        println!("witness rank {witness_rank} member:");
        println!("{witness_member}");
    }
    Ok(0)
}

fn suite_failure(e: suite::SuiteError) -> Failure {
    Failure::bad(e.to_string())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite_name: &str,
    n: Option<usize>,
    k: Option<usize>,
    p: Option<u32>,
    d: Option<usize>,
    loops: bool,
    trials: u64,
    seed: u64,
    cap: u64,
    json: bool,
) -> Result<u8, Failure> {
    let reports: Vec<VerificationReport> = match suite_name {
        "thm1" => vec![
            suite::verify_thm1(n.unwrap_or(6), p.unwrap_or(3), d.unwrap_or(5), trials, seed, cap)
                .map_err(suite_failure)?,
        ],
        "thm2" => vec![
            suite::verify_thm2(n.unwrap_or(6), p.unwrap_or(2), d.unwrap_or(5), trials, seed, cap)
                .map_err(suite_failure)?,
        ],
        "cor3" => {
            if let Some(p) = p {
                if p != 2 {
                    return Err(Failure::bad(format!(
                        "the symmetric nu-bound suite is specific to GF(2); got p = {p}"
                    )));
                }
            }
            vec![suite::verify_cor3(n.unwrap_or(5), d.unwrap_or(4), trials, seed, cap)
                .map_err(suite_failure)?]
        }
        "thm4" => {
            let n = n.unwrap_or(6);
            vec![suite::verify_thm4(n, k.unwrap_or(n), p.unwrap_or(3), trials, seed, cap)
                .map_err(suite_failure)?]
        }
        "thm5" => {
            let n = n.unwrap_or(6);
            vec![suite::verify_thm5(n, k.unwrap_or(n), p.unwrap_or(3), trials, seed, cap)
                .map_err(suite_failure)?]
        }
        "erdos-gallai" => {
            let n = n.unwrap_or(if loops { 5 } else { 6 });
            vec![suite::verify_erdos_gallai(n, loops).map_err(suite_failure)?]
        }
        "counterexamples" => vec![suite::verify_counterexamples_f2()],
        "all" => {
            if n.is_some() || k.is_some() || p.is_some() || d.is_some() {
                return Err(Failure::bad(
                    "'verify all' runs fixed shapes; only --trials/--seed/--cap/--json apply",
                ));
            }
            suite::verify_all(trials, seed, cap).map_err(suite_failure)?
        }
        other => {
            return Err(Failure::bad(format!(
                "unknown suite '{other}'; expected thm1, thm2, cor3, thm4, thm5, erdos-gallai, counterexamples or all"
            )))
        }
    };

    if json {
        if reports.len() == 1 {
            println!("{}", serde_json::to_string_pretty(&reports[0]).expect("serializable"));
        } else {
            println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
        }
    } else {
        for r in &reports {
            print!("{}", r.render_text());
        }
        let total_fail: u64 = reports.iter().map(|r| r.fail).sum();
        let verdict = if total_fail == 0 { "PASS" } else { "FAIL" };
        println!("overall: {verdict}");
    }
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { EXIT_SUITE_FAILURE })
}

#[derive(Serialize)]
struct ComputeOutput {
    kind: String,
    params: BTreeMap<String, u64>,
    value: u64,
}

fn print_value(kind: &str, params: &[(&str, u64)], value: u64, json: bool) {
    if json {
        let out = ComputeOutput {
            kind: kind.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            value,
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("{value}");
    }
}

fn single_matrix(path: Option<&std::path::Path>, what: &str) -> Result<Matrix, Failure> {
    let path = path.ok_or_else(|| Failure::bad(format!("compute {what} needs --file <space file>")))?;
    let space = load_space(path)?;
    if space.dim() != 0 {
        return Err(Failure::bad(format!(
            "compute {what} operates on a single matrix; the file declares dim {} (use dim 0)",
            space.dim()
        )));
    }
    Ok(space.base().clone())
}

fn load_graph(path: Option<&std::path::Path>, what: &str) -> Result<graph::LoopGraph, Failure> {
    let path = path.ok_or_else(|| Failure::bad(format!("compute {what} needs --file <graph file>")))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    graph::parse_graph(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn cmd_compute(
    kind: &str,
    file: Option<&std::path::Path>,
    n: Option<u64>,
    k: Option<u64>,
    json: bool,
) -> Result<u8, Failure> {
    match kind {
        "rank" => {
            let m = single_matrix(file, "rank")?;
            print_value("rank", &[], m.rank() as u64, json);
        }
        "det" => {
            let m = single_matrix(file, "det")?;
            let v = m.det().map_err(|e| Failure::hypothesis(e.to_string()))?;
            print_value("det", &[], v.value() as u64, json);
        }
        "pf" => {
            let m = single_matrix(file, "pf")?;
            let v = m.pfaffian_elimination().map_err(|e| Failure::hypothesis(e.to_string()))?;
            let check = m.pfaffian_combinatorial();
            if let Ok(c) = check {
                debug_assert_eq!(c, v);
            }
            print_value("pf", &[], v.value() as u64, json);
        }
        "mu" => {
            let g = load_graph(file, "mu")?;
            print_value("mu", &[], g.mu() as u64, json);
        }
        "nu" => {
            let g = load_graph(file, "nu")?;
            print_value("nu", &[], g.nu() as u64, json);
        }
        "ua" => {
            let (n, k) = require_nk(n, k, "ua")?;
            let v = graph::u_a(n, k).map_err(|e| Failure::bad(e.to_string()))?;
            print_value("ua", &[("n", n), ("k", k)], v, json);
        }
        "us" => {
            let (n, k) = require_nk(n, k, "us")?;
            let v = graph::u_s(n, k).map_err(|e| Failure::bad(e.to_string()))?;
            print_value("us", &[("n", n), ("k", k)], v, json);
        }
        other => {
            return Err(Failure::bad(format!(
                "unknown compute kind '{other}'; expected rank, det, pf, mu, nu, ua or us"
            )))
        }
    }
    Ok(0)
}

fn require_nk(n: Option<u64>, k: Option<u64>, what: &str) -> Result<(u64, u64), Failure> {
    match (n, k) {
        (Some(n), Some(k)) => Ok((n, k)),
        _ => Err(Failure::bad(format!("compute {what} needs --n and --k"))),
    }
}
