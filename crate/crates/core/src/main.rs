use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fatpoints::cli::{self, parse_range, CommandOutput, RunConfig};

/// Exact verification toolkit for linear systems of fat points: emptiness
/// certificates, symbolic-power degrees, Waldschmidt and Chudnovsky bounds,
/// containment criteria, and Cremona reductions.
#[derive(Parser)]
#[command(name = "fatpoints", version)]
struct Args {
    /// Prime modulus of the evaluation field (default 2^61 - 1)
    #[arg(long, global = true)]
    prime: Option<u64>,

    /// Base seed for point sampling; FATPOINTS_SEED applies when unset
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Independent certification trials per system
    #[arg(long, global = true)]
    trials: Option<u32>,

    /// Emit JSON records (one object per record) instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timings in records (sacrifices byte-identical reruns)
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and certification of one system at random points
    Dim {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// Multiplicities, e.g. `4x71` or `8x4,4x7` or `2,2,2`
        #[arg(long)]
        mults: String,
        /// Also write the interpolation matrix dump to this file
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Initial degree alpha(I^(m)) of the m-th symbolic power
    Alpha {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: u32,
    },
    /// Waldschmidt-constant bounds from samples m = 1..m-max
    Wdc {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 2)]
        m_max: u32,
    },
    /// Chudnovsky inequality verdicts for the listed m values
    Chudnovsky {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: usize,
        /// Comma-separated list, e.g. `1,2,3`
        #[arg(long)]
        m: String,
    },
    /// Sufficient containment criterion alpha(I^(nm)) >= (n-1)m + m reg(I)
    Containment {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: u32,
    },
    /// Combinatorial lemma grids (part 1: k^n <= C(kn-n, n); part 2: 3^n <= C(2n, n))
    Lemma {
        #[arg(long)]
        part: u32,
        /// Inclusive range `a..b` (or single value); part 1 only
        #[arg(long)]
        k: Option<String>,
        /// Inclusive range `a..b` (or single value)
        #[arg(long)]
        n: String,
    },
    /// Scan n*floor(s^(1/n)) >= n + r over an interval of s
    IneqScan {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Certify one floor-bound instance (km-1; m^(x k^n))
    Floor {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
    },
    /// Certify the 71-point systems in P^4 at a given m
    SeventyOne {
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Cremona reduction chain, optionally oracle-checked per step
    Cremona {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        mults: String,
        /// Cross-check each step's dimension with the interpolation oracle
        #[arg(long)]
        check: bool,
    },
    /// Run the full verification suite and report per-criterion pass/fail
    VerifyPaper {
        /// Include the long-running m = 2 71-point certificate
        #[arg(long)]
        long: bool,
    },
}

fn resolve_config(args: &Args, long: bool) -> RunConfig {
    let defaults = RunConfig::default();
    let env_seed = std::env::var("FATPOINTS_SEED").ok().and_then(|v| v.parse().ok());
    RunConfig {
        prime: args.prime.unwrap_or(defaults.prime),
        seed: args.seed.or(env_seed).unwrap_or(defaults.seed),
        trials: args.trials.unwrap_or(defaults.trials).max(1),
        json: args.json,
        long,
        timings: args.timings,
    }
}

fn run(args: Args) -> fatpoints::Result<CommandOutput> {
    let config = resolve_config(
        &args,
        matches!(args.command, Command::VerifyPaper { long: true }),
    );
    match args.command {
        Command::Dim { n, d, mults, dump } => cli::cmd_dim(n, d, &mults, dump.as_deref(), &config),
        Command::Alpha { n, s, m } => cli::cmd_alpha(n, s, m, &config),
        Command::Wdc { n, s, m_max } => cli::cmd_wdc(n, s, m_max, &config),
        Command::Chudnovsky { n, s, m } => {
            let m_list = m
                .split(',')
                .map(|x| {
                    x.trim().parse::<u32>().map_err(|_| {
                        fatpoints::Error::InvalidArgument(format!("bad m value '{x}'"))
                    })
                })
                .collect::<fatpoints::Result<Vec<_>>>()?;
            cli::cmd_chudnovsky(n, s, &m_list, &config)
        }
        Command::Containment { n, s, m } => cli::cmd_containment(n, s, m, &config),
        Command::Lemma { part, k, n } => {
            let k_range = k.as_deref().map(parse_range).transpose()?;
            cli::cmd_lemma(part, k_range, parse_range(&n)?)
        }
        Command::IneqScan { n, from, to } => cli::cmd_ineq_scan(n, from, to),
        Command::Floor { n, k, m } => cli::cmd_floor(n, k, m, &config),
        Command::SeventyOne { m } => cli::cmd_seventy_one(m, &config),
        Command::Cremona { n, d, mults, check } => cli::cmd_cremona(n, d, &mults, check, &config),
        Command::VerifyPaper { .. } => cli::cmd_verify_paper(&config),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let json = args.json;
    if let Some(p) = args.prime {
        if let Err(e) = fatpoints::PrimeField::new(p) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(args) {
        Ok(output) => {
            print!("{}", output.render(json));
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
