mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qladder_core::basis::{self, classify, ComponentLabel, Scheme, TIndex};
use qladder_core::checks::{self, CheckResult};
use qladder_core::ladder::{EquivariantOp, LadderOp};
use qladder_core::numeric::GridSpec;
use qladder_core::pairings::{self, PairingKind};
use qladder_core::tensor::TensorElement;
use qladder_core::{parse_zh, Alphabet, Zh};

use report::Report;

#[derive(Parser)]
#[command(name = "qladder", version, about = "Exact algebra and verification for quaternionic ladder operators")]
struct Cli {
    /// Emit one JSON report per line.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time in reports (otherwise elapsedMs is 0).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the basis function t^l_{n,m}(Z) N(Z)^k.
    GenT {
        #[arg(long = "twoL")]
        two_l: u32,
        #[arg(long = "twoN", allow_hyphen_values = true)]
        two_n: i32,
        #[arg(long = "twoM", allow_hyphen_values = true)]
        two_m: i32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i32,
    },
    /// Expand a function of Z in the t-basis.
    Expand {
        #[arg(long)]
        f: String,
        /// Print the reconstruction from the expansion instead.
        #[arg(long)]
        reconstruct: bool,
    },
    /// Label a cell (--twoL, --k) or each t-basis component of a function
    /// (--f) by its invariant subspace.
    Classify {
        #[arg(long, required_unless_present = "two_l", conflicts_with_all = ["two_l", "k"])]
        f: Option<String>,
        #[arg(long = "twoL", requires = "k")]
        two_l: Option<u32>,
        #[arg(long, requires = "two_l", allow_hyphen_values = true)]
        k: Option<i32>,
        #[arg(long, value_enum, default_value_t = SchemeArg::Varpi2)]
        scheme: SchemeArg,
    },
    /// Evaluate one of the invariant pairings.
    Pair {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
    },
    /// Embed a function of Z into two variables, printed in w and y.
    Embed {
        #[arg(long)]
        f: String,
    },
    /// Apply a ladder operator to a function of (z, y).
    Apply {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long)]
        input: String,
    },
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Subcommand)]
enum Verify {
    Eigenvalues {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long, default_value_t = 5)]
        nmax: u32,
    },
    Orthogonality {
        #[arg(long = "twoLMax", default_value_t = 3)]
        two_l_max: u32,
        #[arg(long, default_value_t = 2)]
        kmax: i32,
    },
    Decomposition {
        #[arg(long, value_enum, default_value_t = SchemeArg::Varpi2)]
        scheme: SchemeArg,
        #[arg(long = "twoLMax", alias = "twoLmax", default_value_t = 4)]
        two_l_max: u32,
        #[arg(long, default_value_t = -6, allow_hyphen_values = true)]
        kmin: i32,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        kmax: i32,
    },
    Equivariance {
        /// Restrict to one operator (default: all).
        #[arg(long, value_enum)]
        op: Option<EquivOpArg>,
        #[arg(long, default_value_t = 3)]
        nmax: u32,
    },
    Symmetry {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        degmax: u32,
        #[arg(long, default_value_t = 11)]
        seed: u64,
    },
    PoissonExact {
        #[arg(long = "twoLMax", default_value_t = 3)]
        two_l_max: u32,
    },
    Numeric {
        #[arg(long, value_enum)]
        check: NumericArg,
        #[arg(long, default_value_t = 24)]
        grid: usize,
        #[arg(long, default_value_t = 3)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Varpi2,
    Rho1,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Varpi2 => Scheme::Varpi2,
            SchemeArg::Rho1 => Scheme::Rho1,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Hr,
    Rho1,
    H2,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Lambda,
    L1,
    Tildel2,
    L2,
}

impl From<OpArg> for LadderOp {
    fn from(o: OpArg) -> LadderOp {
        match o {
            OpArg::Lambda => LadderOp::Lambda,
            OpArg::L1 => LadderOp::L1,
            OpArg::Tildel2 => LadderOp::TildeL2,
            OpArg::L2 => LadderOp::L2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivOpArg {
    M,
    I,
    Lambda,
    L2,
}

impl From<EquivOpArg> for EquivariantOp {
    fn from(o: EquivOpArg) -> EquivariantOp {
        match o {
            EquivOpArg::M => EquivariantOp::M,
            EquivOpArg::I => EquivariantOp::IEmbed,
            EquivOpArg::Lambda => EquivariantOp::Lambda,
            EquivOpArg::L2 => EquivariantOp::L2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NumericArg {
    Norm,
    Poisson,
    Expansion,
    Conformal,
    Derivative,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn parse(s: &str) -> Result<Zh, Failure> {
    parse_zh(s).map_err(|e| Failure::Usage(format!("cannot parse {s:?}: {e}")))
}

fn runtime<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Runtime(e.to_string())
}

fn print_labels(f: &Zh, scheme: Scheme) -> Result<(), Failure> {
    let e = basis::expand_in_tbasis(f).map_err(runtime)?;
    for (idx, c) in &e.coeffs {
        let label: ComponentLabel = classify(idx, scheme);
        println!("{idx}: {c} in {label}");
    }
    Ok(())
}

fn run_verify(v: Verify) -> Vec<CheckResult> {
    match v {
        Verify::Eigenvalues { op, nmax } => checks::eigenvalues(op.into(), 1..=nmax),
        Verify::Orthogonality { two_l_max, kmax } => {
            let mut r = checks::orthogonality(two_l_max, kmax);
            r.extend(checks::h_orthogonality(two_l_max));
            r
        }
        Verify::Decomposition { scheme, two_l_max, kmin, kmax } => {
            checks::decomposition(scheme.into(), two_l_max, kmin, kmax)
        }
        Verify::Equivariance { op, nmax } => match op {
            Some(op) => checks::equivariance(&[op.into()], nmax),
            None => checks::equivariance(&EquivariantOp::ALL, nmax),
        },
        Verify::Symmetry { count, degmax, seed } => checks::symmetry(count, degmax, seed),
        Verify::PoissonExact { two_l_max } => {
            let mut r = checks::poisson_exact(two_l_max);
            r.extend(checks::quotient(two_l_max));
            r
        }
        Verify::Numeric { check, grid, seed } => {
            let g = GridSpec { seed, ..GridSpec::uniform(grid) };
            if let Err(e) = g.validate() {
                return vec![CheckResult::new("grid", &[], "valid grid".into(), e.to_string(), false)];
            }
            match check {
                NumericArg::Norm => {
                    let mut r = checks::numeric_norm(&g);
                    r.extend(checks::numeric_s3(&g));
                    r
                }
                NumericArg::Poisson => checks::numeric_poisson(5, &g),
                NumericArg::Expansion => checks::numeric_expansion(),
                NumericArg::Conformal => checks::numeric_conformal(&g),
                NumericArg::Derivative => checks::numeric_derivative(50, seed),
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.cmd {
        Cmd::GenT { two_l, two_n, two_m, k } => {
            let idx = TIndex::new(two_l, two_m, two_n, k).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{}", idx.element());
        }
        Cmd::Expand { f, reconstruct } => {
            let e = basis::expand_in_tbasis(&parse(&f)?).map_err(runtime)?;
            if reconstruct {
                println!("{}", e.reconstruct());
            } else {
                println!("{e}");
            }
        }
        Cmd::Classify { f, two_l, k, scheme } => match (f, two_l, k) {
            (Some(f), _, _) => print_labels(&parse(&f)?, scheme.into())?,
            (None, Some(two_l), Some(k)) => println!("{}", basis::classify_lk(two_l, k, scheme.into())),
            _ => return Err(Failure::Usage("classify needs --f or both --twoL and --k".into())),
        },
        Cmd::Pair { kind, f1, f2 } => {
            let kind = match kind {
                KindArg::Hr => PairingKind::HR,
                KindArg::Rho1 => PairingKind::Rho1,
                KindArg::H2 => PairingKind::H2,
            };
            let v = pairings::pair(kind, &parse(&f1)?, &parse(&f2)?).map_err(runtime)?;
            println!("{v}");
        }
        Cmd::Embed { f } => {
            let t = pairings::i_embed(&parse(&f)?).map_err(runtime)?;
            println!("{}", t.as_zh().rename(Alphabet::Z, Alphabet::W));
        }
        Cmd::Apply { op, input } => {
            let t = TensorElement::new(parse(&input)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let out = LadderOp::from(op).apply(&t).map_err(runtime)?;
            println!("{out}");
        }
        Cmd::Verify(v) => {
            let t = Instant::now();
            let results = run_verify(v);
            let ms = if cli.timing { t.elapsed().as_millis() as u64 } else { 0 };
            let ok = checks::all_pass(&results);
            let reports: Vec<Report> = results.into_iter().map(|r| Report::from_check(r, ms)).collect();
            report::emit(&reports, cli.json).map_err(runtime)?;
            return Ok(ok);
        }
    }
    Ok(true)
}

fn init_threads() {
    if let Some(n) = std::env::var("QL_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
