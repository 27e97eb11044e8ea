use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod input;

/// Alternating subgroups of Coxeter and braid groups, and alternating
/// subalgebras of Hecke algebras.
#[derive(Parser, Debug)]
#[command(name = "alterna", version, about)]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,

    /// Seed for random evaluation points and fuzzing.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputArgs {
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Human-readable output (the default).
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients a_k of the dihedral relations, and the α tables behind them.
    Coeffs(CoeffsArgs),
    /// Emit a group or algebra presentation for a Coxeter matrix.
    Present(PresentArgs),
    /// Identities in the rank-2 Hecke algebra.
    Dihedral(DihedralArgs),
    /// Reidemeister–Schreier rewriting for the kernel of a sign character.
    Rs(RsArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Summary of a Coxeter matrix.
    Info(InfoArgs),
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    /// The label m.
    #[arg(long, required_unless_present = "check_gen")]
    m: Option<u32>,
    /// Use the one-parameter closed form.
    #[arg(long, conflicts_with_all = ["alpha", "check_gen"])]
    one_param: bool,
    /// Print the table α^(m)_{k,l,l'} instead.
    #[arg(long, conflicts_with = "check_gen")]
    alpha: bool,
    /// Compare the recursion with both generating functions.
    #[arg(long)]
    check_gen: bool,
    /// Highest order for --check-gen.
    #[arg(long, default_value_t = 12, requires = "check_gen")]
    max: usize,
}

#[derive(Args, Debug)]
struct PresentArgs {
    /// Matrix JSON file or type name such as `B3` or `I2(5)`.
    #[arg(long)]
    input: String,
    #[arg(long)]
    kind: String,
}

#[derive(Args, Debug)]
struct DihedralArgs {
    #[arg(long)]
    m: u32,
    /// Run every dihedral identity and print PASS/FAIL lines.
    #[arg(long)]
    check: bool,
    /// Evaluate at random rational points above the symbolic limit.
    #[arg(long, requires = "check")]
    eval_mode: bool,
    /// Random triples for the associativity and φ fuzzing.
    #[arg(long, default_value_t = 100, requires = "check")]
    fuzz: usize,
    /// Use a single parameter (forced when m is odd).
    #[arg(long)]
    one_param: bool,
}

#[derive(Args, Debug)]
struct RsArgs {
    /// Group presentation JSON file.
    #[arg(long)]
    input: PathBuf,
    /// `all-minus` or a JSON file mapping generators to ±1.
    #[arg(long, default_value = "all-minus")]
    character: String,
    /// Eliminate generators from short relations and drop tautologies.
    #[arg(long)]
    simplify: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long)]
    suite: String,
    /// `default` or a JSON file listing type names or matrices.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// Cap on cosets and on subgroup closure.
    #[arg(long, default_value_t = 50_000)]
    cap: usize,
}

#[derive(Args, Debug)]
struct InfoArgs {
    #[arg(long)]
    input: String,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Invalid input or usage; exit code 2.
    Invalid(String),
    /// Some check failed; exit code 1.
    Checks,
}

impl From<alterna_core::Error> for Failure {
    fn from(e: alterna_core::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.output.json;
    let result = match cli.command {
        Command::Coeffs(a) => commands::coeffs(&a, json),
        Command::Present(a) => commands::present(&a, json),
        Command::Dihedral(a) => commands::dihedral(&a, cli.seed, json),
        Command::Rs(a) => commands::rs(&a, json),
        Command::Verify(a) => commands::verify(&a, cli.seed, json),
        Command::Info(a) => commands::info(&a, json),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, Failure::Checks)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err((_, Failure::Invalid(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
