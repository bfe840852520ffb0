use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use schubert_core::interpolation::{descriptor, interpolate, ks_set, BasisKind};
use schubert_core::io::{expansion_from_json, expansion_to_json, poly_from_json, poly_to_json};
use schubert_core::lr::{lr_expand_product, lr_oracle_triangular};
use schubert_core::schubert::{schubert_eval, schubert_expand_dd, schubert_expand_transition};
use schubert_core::skew::{arithmetization_eval, skew_eval, skew_expand};
use schubert_core::{BigRational, Code, Error, Poly};

#[derive(Parser)]
#[command(name = "schub", version, about = "Exact Schubert polynomials and sparse interpolation")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandMethod {
    Transition,
    Dd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SkewMethod {
    Chains,
    Arithmetization,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial expansion of a Schubert polynomial.
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[arg(long, value_enum, default_value = "transition")]
        method: ExpandMethod,
    },
    /// Evaluate a Schubert polynomial at a nonnegative integer point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Monomial expansion of the skew Schubert polynomial of ⟨w⟩/⟨v⟩.
    SkewExpand {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Evaluate a skew Schubert polynomial.
    SkewEval {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value = "chains")]
        method: SkewMethod,
    },
    /// Recover a basis expansion from a polynomial file used as a black box.
    Interp {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, value_parser = parse_basis)]
        basis: BasisKind,
        /// Total degree bound.
        #[arg(long)]
        d: u64,
        /// Bound on the number of terms.
        #[arg(long)]
        m: usize,
    },
    /// Schubert expansion of Y_u·Y_v.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Bound on the number of terms; counted by triangular elimination when absent.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Klivans–Spielman vectors.
    Ks {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1/3")]
        eps: String,
        #[arg(long)]
        d: u64,
    },
    /// Turn an expansion file into a polynomial file.
    Materialize {
        #[arg(long)]
        expansion: PathBuf,
        /// Variable count; defaults to the longest label.
        #[arg(long)]
        nvars: Option<usize>,
    },
}

fn parse_basis(s: &str) -> Result<BasisKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_code(s: &str) -> Result<Code, Error> {
    s.parse()
}

fn parse_point(s: &str) -> Result<Vec<BigInt>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad coordinate {x:?}"))))
        .collect()
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn decimal(value: &BigInt) -> String {
    serde_json::to_string(&value.to_string()).expect("string serializes")
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Expand { code, method } => {
            let v = parse_code(&code)?;
            let p: Poly = match method {
                ExpandMethod::Transition => schubert_expand_transition(&v),
                ExpandMethod::Dd => schubert_expand_dd(&v),
            };
            Ok(poly_to_json(&p))
        }
        Command::Eval { code, point } => {
            let v = parse_code(&code)?;
            Ok(decimal(&schubert_eval(&v, &parse_point(&point)?)?))
        }
        Command::SkewExpand { v, w } => {
            let p: Poly = skew_expand(&parse_code(&v)?, &parse_code(&w)?);
            Ok(poly_to_json(&p))
        }
        Command::SkewEval { v, w, point, method } => {
            let (v, w, a) = (parse_code(&v)?, parse_code(&w)?, parse_point(&point)?);
            let value = match method {
                SkewMethod::Chains => skew_eval(&v, &w, &a)?,
                SkewMethod::Arithmetization => arithmetization_eval(&v, &w, &a)?.0,
            };
            Ok(decimal(&value))
        }
        Command::Interp { poly, basis, d, m } => {
            let f = poly_from_json(&read(&poly)?)?;
            let n = f.nvars();
            Ok(expansion_to_json(&interpolate(&f, descriptor(basis), n, d, m)?))
        }
        Command::Lr { u, v, m } => {
            let (u, v) = (parse_code(&u)?, parse_code(&v)?);
            let m = match m {
                Some(m) => m,
                None => lr_oracle_triangular(&u, &v)?.len(),
            };
            Ok(expansion_to_json(&lr_expand_product(&u, &v, m)?))
        }
        Command::Ks { m, n, eps, d } => {
            let epsilon: BigRational = eps
                .parse()
                .map_err(|_| Error::Parse(format!("bad epsilon {eps:?}")))?;
            let ks = ks_set(m, n, &epsilon, d)?;
            let value = serde_json::json!({
                "m": ks.m,
                "n": ks.n,
                "epsilon": ks.epsilon.to_string(),
                "d": ks.d_param,
                "t": ks.t,
                "p": ks.p,
                "vectors": ks.vectors,
            });
            Ok(serde_json::to_string(&value)?)
        }
        Command::Materialize { expansion, nvars } => {
            let e = expansion_from_json(&read(&expansion)?)?;
            let n = nvars.unwrap_or_else(|| e.min_nvars());
            Ok(poly_to_json(&e.materialize(n)?))
        }
    }
}

fn configure_threads() {
    let Ok(value) = std::env::var("SCHUB_THREADS") else {
        return;
    };
    let threads = match value.trim().parse::<usize>() {
        Ok(0) => 1,
        Ok(n) => n,
        Err(_) => {
            eprintln!("warning: ignoring SCHUB_THREADS={value:?}");
            return;
        }
    };
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    configure_threads();
    let output = match run(cli.command) {
        Ok(text) => text + "\n",
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_contract_violation() { 2 } else { 1 });
        }
    };
    match cli.out {
        Some(path) => {
            if let Err(e) = fs::write(&path, output) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{output}"),
    }
    ExitCode::SUCCESS
}
