//! `twodom` command-line front-end.
//!
//! Exit status: 0 when everything checks out, 1 when a verification fails,
//! 2 on usage or I/O errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "twodom",
    version,
    about = "2-domination: selection algorithms, coefficient checks and LP bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Edge-list file (`u v` per line, optional `n <count>` header, `#` comments)
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Named graph: K<n>, C<n>, P<n> or K4xK2
    #[arg(long, value_name = "NAME")]
    named: Option<String>,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct CoeffSource {
    /// Coefficient set as JSON `{d, s, a, y, b}`
    #[arg(long, value_name = "FILE")]
    coeffs: Option<PathBuf>,
    /// Built-in coefficient set for the given degree (6..=9)
    #[arg(long, value_name = "D")]
    builtin: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgorithmArg {
    Rule,
    Weight,
    Swap,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a selection algorithm and certify the result
    Solve {
        #[arg(long, value_enum, default_value = "weight")]
        algorithm: AlgorithmArg,
        #[command(flatten)]
        source: GraphSource,
        /// Degree parameter (defaults to the coefficient set's, else the minimum degree)
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        coeffs: CoeffSource,
        /// Write the certificate JSON here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Print one line per certified step
        #[arg(long)]
        trace: bool,
    },
    /// Exact 2-domination number by exhaustive search
    Exact {
        #[command(flatten)]
        source: GraphSource,
        /// Largest graph accepted
        #[arg(long, default_value_t = twodom::algorithms::EXACT_LIMIT)]
        limit: usize,
    },
    /// Check a coefficient set against every condition
    CheckCoeffs {
        #[command(flatten)]
        coeffs: CoeffSource,
        /// Write the full report JSON here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Solve the bound LP exactly for one degree
    Optimize {
        #[arg(short = 'd', long = "d")]
        d: usize,
        /// Write the solution JSON here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// LP optimum next to the reference bound for a list of degrees
    Table1 {
        /// Comma-separated degrees
        #[arg(long, value_delimiter = ',', default_values_t = twodom::lp::DEFAULT_TABLE_DEGREES)]
        deltas: Vec<usize>,
    },
    /// Recompute the exact ratios of the built-in coefficient sets
    VerifyCorollary,
    /// Generate a random d-regular graph as an edge list
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Seeded sweep over random regular graphs, emitted as CSV
    #[command(
        long_about = "Seeded sweep over random regular graphs, emitted as CSV.\n\n\
        Columns: d,n,seed,algorithm,size,bound,ok\n  \
        d          degree of the random regular graph\n  \
        n          number of vertices\n  \
        seed       graph seed (drawn from --seed)\n  \
        algorithm  rule | weight | swap\n  \
        size       |D| (for swap: the smaller part)\n  \
        bound      (a/s)*n for rule/weight, n/2 for swap, three decimals\n  \
        ok         certificate sound / both parts 2-dominating\n\n\
        Rows are ordered by (d, n, seed, algorithm) independently of threading."
    )]
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per degree
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Comma-separated degrees
        #[arg(long, value_delimiter = ',', default_values_t = [6usize, 7, 8, 9])]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        n_min: usize,
        #[arg(long, default_value_t = 200)]
        n_max: usize,
        /// Run instances one after another
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
