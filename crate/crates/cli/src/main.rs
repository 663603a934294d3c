use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hta_core::current::{tensor_algebra, verify_current_iff};
use hta_core::json::{self, OperadDims, OperadDual};
use hta_core::laws::{check, Law, LawKind};
use hta_core::operad;
use hta_core::{mu_chain, Error, Permutation, ProductSpec, Tensor};

mod bench;

#[derive(Parser)]
#[command(
    name = "hta",
    version,
    about = "Chain products, associativity laws and the ternary operad"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chain product of tensor files; prints the resulting tensor.
    Product {
        /// Product spec file; defaults to left-to-right with no transposes.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(required = true)]
        tensors: Vec<PathBuf>,
    },
    /// Exhaustive law check of a structure-constant table.
    Check {
        #[arg(long, value_enum)]
        law: LawArg,
        /// Images of the twisting permutation, e.g. 3,2,1.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
        table: PathBuf,
    },
    /// Tensor product of two tables and the s_k verdicts on both sides.
    Current {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Dimensions of the operad components, or the dual relation check.
    Operad {
        #[arg(long)]
        arity: usize,
        #[arg(long, value_enum, default_value_t = Target::Dims)]
        target: Target,
    },
    /// Times the floating-point chain kernel. Seed from HTA_SEED.
    Bench {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        iters: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LawArg {
    Partial,
    Total,
    SigmaPartial,
    SigmaTotal,
}

impl From<LawArg> for LawKind {
    fn from(l: LawArg) -> LawKind {
        match l {
            LawArg::Partial => LawKind::Partial,
            LawArg::Total => LawKind::Total,
            LawArg::SigmaPartial => LawKind::SigmaPartial,
            LawArg::SigmaTotal => LawKind::SigmaTotal,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Dims,
    Dual,
}

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const PARSE: u8 = 2;
const SHAPE: u8 = 3;
const USAGE: u8 = 4;
const UNSUPPORTED: u8 = 5;

/// A diagnostic and the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_)
            | Error::IndexOutOfRange { .. }
            | Error::DuplicateEntry(_)
            | Error::InvalidPermutation(_) => PARSE,
            Error::ArityMismatch { .. }
            | Error::DimMismatch { .. }
            | Error::ShapeMismatch(_)
            | Error::SlotOutOfRange { .. } => SHAPE,
            Error::UnsupportedArity(_) => UNSUPPORTED,
            Error::PreconditionFailed(_) => FAILS,
        };
        Failure(code, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: hta_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| {
        let Failure(code, msg) = Failure::from(e);
        Failure(code, format!("{}: {msg}", path.display()))
    })
}

fn product(spec: Option<PathBuf>, files: Vec<PathBuf>) -> Result<(String, u8), Failure> {
    let spec = match spec {
        Some(path) => in_file(&path, json::spec_from_json(&read(&path)?))?,
        None => {
            if files.len() < 3 || files.len().is_multiple_of(2) {
                return Err(Failure(
                    SHAPE,
                    format!("expected an odd number (at least 3) of tensors, got {}", files.len()),
                ));
            }
            ProductSpec::ltr(files.len() / 2)
        }
    };
    let args = files
        .iter()
        .map(|f| in_file(f, json::tensor_from_json(&read(f)?)))
        .collect::<Result<Vec<Tensor>, Failure>>()?;
    let t = mu_chain(&spec, &args)?;
    Ok((json::tensor_to_json(&t), HOLDS))
}

fn check_cmd(law: LawArg, sigma: Option<Vec<usize>>, path: PathBuf) -> Result<(String, u8), Failure> {
    let table = in_file(&path, json::table_from_json(&read(&path)?))?;
    let kind = LawKind::from(law);
    let n = table.arity();
    let law = match (kind.needs_sigma(), sigma) {
        (true, None) => return Err(Failure(USAGE, format!("--law {kind} requires --sigma"))),
        (false, Some(_)) => return Err(Failure(USAGE, format!("--law {kind} takes no --sigma"))),
        (true, Some(images)) => {
            let s = Permutation::from_images(&images).map_err(|e| Failure(USAGE, format!("--sigma: {e}")))?;
            if s.degree() != n {
                return Err(Failure(
                    USAGE,
                    format!("--sigma has degree {}, table arity is {n}", s.degree()),
                ));
            }
            if kind == LawKind::SigmaTotal {
                Law::sigma_total(s)
            } else {
                Law::sigma_partial(s)
            }
        }
        (false, None) => {
            if kind == LawKind::Total {
                Law::total(n)
            } else {
                Law::partial(n)
            }
        }
    };
    let report = check(&table, &law)?;
    let code = if report.holds { HOLDS } else { FAILS };
    Ok((json::report_to_json(&report), code))
}

fn current(left: PathBuf, right: PathBuf, k: usize) -> Result<(String, u8), Failure> {
    if k == 0 {
        return Err(Failure(USAGE, "--k must be at least 1".into()));
    }
    let a = in_file(&left, json::table_from_json(&read(&left)?))?;
    let b = in_file(&right, json::table_from_json(&read(&right)?))?;
    if b.arity() != a.arity() {
        return Err(Failure(
            SHAPE,
            format!("factor arities differ: {} and {}", a.arity(), b.arity()),
        ));
    }
    let verdict = verify_current_iff(&a, &b, k)?;
    let algebra = tensor_algebra(&a, &b)?;
    let out = format!(
        r#"{{"left":{},"right":{},"table":{},"forward":{},"backward":{}}}"#,
        json::table_to_json(&algebra.left),
        json::table_to_json(&algebra.right),
        json::table_to_json(&algebra.table),
        verdict.forward,
        verdict.backward
    );
    if verdict.forward != verdict.backward {
        eprintln!("forward and backward verdicts disagree");
    }
    let code = if verdict.forward && verdict.backward {
        HOLDS
    } else {
        FAILS
    };
    Ok((out, code))
}

fn operad_cmd(arity: usize, target: Target) -> Result<(String, u8), Failure> {
    match target {
        Target::Dims => {
            let free_dim = operad::free_dim(arity)?;
            let ideal_rank = if arity == 3 {
                0
            } else {
                operad::ideal_component(arity)?.rank()
            };
            let dims = OperadDims {
                arity,
                free_dim,
                ideal_rank,
                quotient_dim: free_dim - ideal_rank,
            };
            Ok((json::operad_dims_to_json(&dims), HOLDS))
        }
        Target::Dual => {
            if arity != 5 {
                return Err(Failure(
                    UNSUPPORTED,
                    format!("the dual target is only available at arity 5, not {arity}"),
                ));
            }
            let perp = operad::annihilator(&operad::ideal_component(5)?)?;
            let matches = perp.same_span(&operad::sigma_closure(&operad::partial_relation())?);
            let dual = OperadDual {
                arity,
                perp_dim: perp.rank(),
                matches_partial_closure: matches,
            };
            Ok((json::operad_dual_to_json(&dual), if matches { HOLDS } else { FAILS }))
        }
    }
}

fn bench_cmd(dim: usize, k: usize, iters: usize) -> Result<(String, u8), Failure> {
    if dim == 0 || k == 0 || iters == 0 {
        return Err(Failure(USAGE, "--dim, --k and --iters must be positive".into()));
    }
    let seed = match std::env::var("HTA_SEED") {
        Ok(s) => s
            .parse::<u64>()
            .map_err(|_| Failure(USAGE, format!("HTA_SEED must be an unsigned integer, got {s:?}")))?,
        Err(_) => 0,
    };
    let r = bench::run(dim, k, iters, seed);
    let out = serde_json::json!({
        "dim": dim,
        "k": k,
        "iters": iters,
        "seed": seed,
        "seconds": r.seconds,
        "products_per_second": iters as f64 / r.seconds.max(f64::MIN_POSITIVE),
        "checksum": r.checksum,
    });
    Ok((out.to_string(), HOLDS))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { HOLDS });
        }
    };
    let result = match cli.command {
        Command::Product { spec, tensors } => product(spec, tensors),
        Command::Check { law, sigma, table } => check_cmd(law, sigma, table),
        Command::Current { left, right, k } => current(left, right, k),
        Command::Operad { arity, target } => operad_cmd(arity, target),
        Command::Bench { dim, k, iters } => bench_cmd(dim, k, iters),
    };
    match result {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(Failure(code, msg)) => {
            eprintln!("hta: {msg}");
            ExitCode::from(code)
        }
    }
}
