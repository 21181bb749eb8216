//! `agtool`: build, verify and probe the algebra A(g) from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ag_core::construction2::{load_rep, natural_rep_sl3, save_rep};
use ag_core::io::AlgebraFile;
use ag_core::rational::{self, Q};
use ag_core::unitize::{unique_c_scan, ScanStatus};
use ag_core::verify::{self, VerifyConfig};
use ag_core::{AlgebraTable, Error, Execution, Family, RootSystemSpec};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

const EXIT_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

const SUPPORTED: &str = "A1-A4, B2-B4, C2-C4, D3-D4, G2, F4 (E6 with --allow-e6)";

#[derive(Parser)]
#[command(
    name = "agtool",
    version,
    about = "Exact structure constants of A(g) for split simple Lie algebras"
)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for every sampled quantity.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArg {
    /// Cartan type, e.g. A2, G2, F4.
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,

    /// Permit E6 (651-dimensional algebra).
    #[arg(long)]
    allow_e6: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build the structure-constant JSON.
    Build {
        #[command(flatten)]
        ty: TypeArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        ty: TypeArg,
        /// Samples for sampled identities.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Check associativity of tau on every basis triple.
        #[arg(long)]
        exhaustive: bool,
        /// Representation JSON for the sigma checks.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test candidate scalings c of the form in Unit(V, c f) for power-associativity.
    UnitizeScan {
        /// Structure-constant JSON of a unital algebra with counit.
        input: PathBuf,
        /// Comma-separated rationals.
        #[arg(long, default_value = "")]
        candidates: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of Cartan idempotents.
    Peirce {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in representation JSON (A2 natural representation).
    Rep {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Consistency(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn parse_type(arg: &TypeArg) -> Result<RootSystemSpec, Failure> {
    let spec: RootSystemSpec = arg
        .ty
        .parse()
        .map_err(|e: Error| Failure::usage(format!("{e}; supported: {SUPPORTED}")))?;
    let ok = match spec.family {
        Family::A | Family::B | Family::C | Family::D => spec.rank <= 4,
        Family::F | Family::G => true,
        Family::E if spec.rank == 6 => {
            if !arg.allow_e6 {
                return Err(Failure::usage(format!(
                    "E6 needs --allow-e6 (dim A = 651; verification is slow); supported: {SUPPORTED}"
                )));
            }
            true
        }
        Family::E => false,
    };
    if !ok {
        return Err(Failure::usage(format!(
            "{spec} exceeds the memory budget of an exact build; supported: {SUPPORTED}"
        )));
    }
    Ok(spec)
}

fn write_out(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn build(spec: RootSystemSpec, exec: Execution) -> Result<AlgebraTable, Failure> {
    Ok(AlgebraTable::build(spec, exec)?)
}

fn cmd_build(ty: &TypeArg, out: Option<&Path>, seed: u64, exec: Execution) -> Outcome {
    let spec = parse_type(ty)?;
    let t = build(spec, exec)?;
    let json = AlgebraFile::from_table(&t, seed).to_json()?;
    match out {
        Some(p) => {
            write_out(p, &json)?;
            println!("{spec}: dim A = {}, {} written", t.dim(), p.display());
        }
        None => print!("{json}"),
    }
    Ok(0)
}

fn cmd_verify(
    ty: &TypeArg,
    samples: usize,
    exhaustive: bool,
    rep: Option<&Path>,
    out: Option<&Path>,
    seed: u64,
    exec: Execution,
) -> Outcome {
    let spec = parse_type(ty)?;
    let rep = rep.map(load_rep).transpose()?;
    let t = build(spec, exec)?;
    let cfg = VerifyConfig {
        seed,
        samples,
        exhaustive,
        exec,
        rep,
        ..VerifyConfig::default()
    };
    let report = verify::run_all(&t, &cfg);
    print!("{}", report.to_text());
    if let Some(p) = out {
        write_out(p, &report.to_json()?)?;
    }
    Ok(if report.has_failures() { EXIT_CHECK } else { 0 })
}

fn parse_candidates(s: &str) -> Result<Vec<Q>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|c| !c.is_empty())
        .map(|c| rational::parse_q(c).map_err(|e| Failure::usage(format!("bad candidate `{c}`: {e}"))))
        .collect()
}

fn cmd_unitize_scan(
    input: &Path,
    candidates: &str,
    samples: usize,
    out: Option<&Path>,
    seed: u64,
    exec: Execution,
) -> Outcome {
    let cands = parse_candidates(candidates)?;
    let file = AlgebraFile::read(input).map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;
    let loaded = file
        .load()
        .map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;
    let split = loaded.split_counit()?;
    let report = unique_c_scan(&split.algebra, &cands, samples, seed, exec);
    for c in &report.candidates {
        match &c.witness {
            Some(w) => println!("c = {}: eliminated (witness support {})", c.c, w.element.len()),
            None => println!("c = {}: survives {} samples", c.c, report.samples),
        }
    }
    println!("survivors: [{}]", report.survivors().join(", "));
    let hyp = match report.hypotheses {
        ScanStatus::Confirmed => "confirmed (at most one c can survive)",
        ScanStatus::Inconclusive => "not confirmed on the samples (several c may survive)",
    };
    println!("uniqueness hypotheses: {hyp}");
    if let Some(p) = out {
        let v = json!({
            "survivors": report.survivors(),
            "report": report,
        });
        write_out(p, &pretty(&v))?;
    }
    Ok(0)
}

fn cmd_peirce(ty: &TypeArg, count: usize, out: Option<&Path>, seed: u64, exec: Execution) -> Outcome {
    let spec = parse_type(ty)?;
    if spec.rank <= 2 && spec.family == Family::A {
        return Err(Failure::usage(format!(
            "{spec}: no positive root is orthogonal to the highest root, so there is no eigenvector to follow"
        )));
    }
    let t = build(spec, exec)?;
    let entries = verify::idempotent_spectrum(&t, count, seed)?
        .ok_or_else(|| Failure::usage(format!("{spec}: no positive root orthogonal to the highest root")))?;
    let mut distinct: Vec<&str> = entries.iter().map(|e| e.lambda.as_str()).collect();
    distinct.sort_unstable();
    distinct.dedup();
    for e in &entries {
        let eig: Vec<String> = e.eigenvalues.iter().map(|(r, m)| format!("{r}^{m}")).collect();
        println!(
            "H = {:?}  K(H,H) = {}  lambda_H = {}  idempotent {}  eigenvector {}  spectrum {{{}}}{}",
            e.h,
            e.k_hh,
            e.lambda,
            e.idempotent,
            e.eigenvector,
            eig.join(", "),
            if e.irrational_degree > 0 {
                format!(" + degree {} without rational roots", e.irrational_degree)
            } else {
                String::new()
            }
        );
    }
    println!("{} distinct lambda_H", distinct.len());
    if let Some(p) = out {
        let v = json!({
            "type": spec.to_string(),
            "seed": seed,
            "count": count,
            "distinctLambda": distinct,
            "entries": entries,
        });
        write_out(p, &pretty(&v))?;
    }
    let consistent = entries.iter().all(|e| e.idempotent && e.eigenvector);
    let spread = count == 0 || distinct.len() >= 3.min(count);
    Ok(if consistent && spread { 0 } else { EXIT_CHECK })
}

fn cmd_rep(ty: &TypeArg, out: &Path) -> Outcome {
    let spec = parse_type(ty)?;
    if spec.to_string() != "A2" {
        return Err(Failure::usage("only the A2 natural representation is built in"));
    }
    save_rep(&natural_rep_sl3()?, out)?;
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    let threads = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        return Err(Failure::usage("--threads must be positive"));
    }
    // Fails only when a pool already exists, which cannot happen here.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    let exec = if threads == 1 {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let seed = cli.seed;
    match &cli.command {
        Command::Build { ty, out } => cmd_build(ty, out.as_deref(), seed, exec),
        Command::Verify {
            ty,
            samples,
            exhaustive,
            rep,
            out,
        } => cmd_verify(ty, *samples, *exhaustive, rep.as_deref(), out.as_deref(), seed, exec),
        Command::UnitizeScan {
            input,
            candidates,
            samples,
            out,
        } => cmd_unitize_scan(input, candidates, *samples, out.as_deref(), seed, exec),
        Command::Peirce { ty, count, out } => cmd_peirce(ty, *count, out.as_deref(), seed, exec),
        Command::Rep { ty, out } => cmd_rep(ty, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("agtool: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
