use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use pellshift_cli::commands::{self, SampleSource};
use pellshift_cli::envelope::OutputEnvelope;
use pellshift_cli::{render, CliError, CliResult};
use pellshift_core::Natural;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "pellshift",
    version,
    about = "Exact solution families for a*x^2 + k = (a+k)*y^2, their degenerate cases, \
             geometric pairs in gap-bounded sets, and bounded power-shift searches"
)]
struct Cli {
    /// Emit structured JSON instead of human-readable tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve u^2 - d*v^2 = 1: continued fraction, fundamental solution, stream.
    Pell {
        /// The nonsquare coefficient d.
        #[arg(value_parser = parse_natural)]
        d: Natural,
        /// How many solutions to list.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// List witnesses of a*x^2 + k = (a+k)*y^2 for one instance.
    Family {
        #[arg(long, value_parser = parse_positive)]
        a: Natural,
        #[arg(long, value_parser = parse_positive)]
        k: Natural,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Enumerate all a with a(a+k) a perfect square, with certificates.
    Squares {
        #[arg(long, value_parser = parse_positive)]
        k: Natural,
        /// Cross-check against a direct scan of a <= LIMIT.
        #[arg(long, value_name = "LIMIT", value_parser = clap::value_parser!(u64).range(1..))]
        oracle: Option<u64>,
    },
    /// Analyse a gap-bounded sample: hypotheses and the {a, a*x^2} dichotomy.
    Syndetic {
        #[command(flatten)]
        input: SampleInput,
        #[arg(long, value_parser = parse_positive)]
        k: Natural,
        /// Membership horizon; defaults to the largest file element.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=10_000_000))]
        horizon: Option<u64>,
        /// Gap bound for file samples and the random generator.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        gap_bound: u64,
        /// Family members to try per adjacent pair.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        tries: u64,
        /// Seed for the random generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustively scan a box for a*x^m + k = (a+ell)*y^n.
    Search {
        #[arg(long, value_parser = parse_positive)]
        a: Natural,
        #[arg(long, value_parser = parse_positive)]
        k: Natural,
        #[arg(long, value_parser = parse_positive)]
        ell: Natural,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        /// Bound for both x and y.
        #[arg(long, default_value = "1000", value_parser = parse_positive)]
        bound: Natural,
        /// Override the x bound alone.
        #[arg(long, value_parser = parse_positive)]
        x_bound: Option<Natural>,
        /// Override the y bound alone.
        #[arg(long, value_parser = parse_positive)]
        y_bound: Option<Natural>,
        /// Restrict to x, y >= 2 (geometric-progression relevance).
        #[arg(long)]
        nontrivial: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
    /// Run search over a parameter grid and tabulate solution counts.
    Survey {
        /// Values of a: a single integer or an inclusive range lo..hi.
        #[arg(long, value_parser = parse_range)]
        a: NaturalRange,
        #[arg(long, value_parser = parse_range)]
        k: NaturalRange,
        #[arg(long, value_parser = parse_range)]
        ell: NaturalRange,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long, default_value = "1000", value_parser = parse_positive)]
        bound: Natural,
        #[arg(long)]
        nontrivial: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SampleInput {
    /// Set file: one ascending positive integer per line, '#' comments.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Built-in generator: all | odd | avoid-residue R M | random.
    #[arg(long, num_args = 1..=3, value_name = "KIND [ARGS]")]
    gen: Option<Vec<String>>,
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    s.parse()
        .map_err(|_| format!("'{s}' is not a non-negative integer"))
}

fn parse_positive(s: &str) -> Result<Natural, String> {
    let n = parse_natural(s)?;
    if n.is_zero() {
        return Err(format!("'{s}' must be positive"));
    }
    Ok(n)
}

/// A single value `5` or an inclusive range `1..9`.
#[derive(Debug, Clone)]
struct NaturalRange(Vec<Natural>);

fn parse_range(s: &str) -> Result<NaturalRange, String> {
    const MAX_SPAN: u64 = 100_000;
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse_positive(lo)?, parse_positive(hi)?),
        None => {
            let v = parse_positive(s)?;
            (v.clone(), v)
        }
    };
    if lo > hi {
        return Err(format!("range '{s}' is empty (lo > hi)"));
    }
    let mut values = Vec::new();
    let mut cur = lo;
    while cur <= hi {
        values.push(cur.clone());
        cur += 1u32;
        if values.len() as u64 > MAX_SPAN {
            return Err(format!("range '{s}' spans more than {MAX_SPAN} values"));
        }
    }
    Ok(NaturalRange(values))
}

fn sample_source(
    input: &SampleInput,
    horizon: Option<u64>,
    gap_bound: u64,
    seed: u64,
) -> CliResult<SampleSource> {
    if let Some(path) = &input.file {
        return Ok(SampleSource::File {
            path: path.clone(),
            gap_bound,
            horizon,
        });
    }
    let parts = input.gen.as_deref().expect("clap enforces file xor gen");
    let need_horizon = || {
        horizon.ok_or_else(|| CliError::Usage("--horizon is required with --gen".into()))
    };
    let parse_u64 = |s: &String, what: &str| {
        s.parse::<u64>()
            .map_err(|_| CliError::Usage(format!("{what} '{s}' is not an integer")))
    };
    match (parts[0].as_str(), parts.len()) {
        ("all", 1) => Ok(SampleSource::All { horizon: need_horizon()? }),
        ("odd", 1) => Ok(SampleSource::Odd { horizon: need_horizon()? }),
        ("avoid-residue", 3) => Ok(SampleSource::AvoidResidue {
            residue: parse_u64(&parts[1], "residue")?,
            modulus: parse_u64(&parts[2], "modulus")?,
            horizon: need_horizon()?,
        }),
        ("random", 1) => Ok(SampleSource::Random {
            gap_bound,
            horizon: need_horizon()?,
            seed,
        }),
        ("avoid-residue", _) => Err(CliError::Usage(
            "avoid-residue takes exactly two arguments: --gen avoid-residue R M".into(),
        )),
        (kind @ ("all" | "odd" | "random"), _) => Err(CliError::Usage(format!(
            "generator '{kind}' takes no extra arguments"
        ))),
        (other, _) => Err(CliError::Usage(format!(
            "unknown generator '{other}'; expected all | odd | avoid-residue R M | random"
        ))),
    }
}

fn run(command: &Command) -> CliResult<OutputEnvelope> {
    match command {
        Command::Pell { d, count } => commands::cmd_pell(d, *count),
        Command::Family { a, k, count } => commands::cmd_family(a, k, *count),
        Command::Squares { k, oracle } => commands::cmd_squares(k, *oracle),
        Command::Syndetic {
            input,
            k,
            horizon,
            gap_bound,
            tries,
            seed,
        } => {
            let source = sample_source(input, *horizon, *gap_bound, *seed)?;
            commands::cmd_syndetic(&source, k, *tries)
        }
        Command::Search {
            a,
            k,
            ell,
            m,
            n,
            bound,
            x_bound,
            y_bound,
            nontrivial,
            workers,
        } => commands::cmd_search(
            a,
            k,
            ell,
            *m,
            *n,
            x_bound.as_ref().unwrap_or(bound),
            y_bound.as_ref().unwrap_or(bound),
            if *nontrivial { 2 } else { 1 },
            *workers as usize,
        ),
        Command::Survey {
            a,
            k,
            ell,
            m,
            n,
            bound,
            nontrivial,
            workers,
        } => commands::cmd_survey(
            &a.0,
            &k.0,
            &ell.0,
            *m,
            *n,
            bound,
            bound,
            if *nontrivial { 2 } else { 1 },
            *workers as usize,
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(envelope) => {
            if cli.json {
                println!("{}", envelope.to_json());
            } else {
                print!("{}", render::render(&envelope));
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
