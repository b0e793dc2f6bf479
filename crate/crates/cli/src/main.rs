use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use linshap::random::{generate, RandomSpec};
use linshap::spec_file::{load_family, GameSpecFile};
use linshap::{run, CliError, Options, Outcome};
use serde_json::json;

/// Exact Shapley values for weighted voting, bankruptcy, liability, airport
/// and tabulated games.
#[derive(Debug, Parser)]
#[command(name = "linshap", version)]
struct Args {
    /// Game description (JSON), or `-` to read standard input.
    #[arg(required_unless_present = "random")]
    input: Option<PathBuf>,

    /// Compute a single player's value (1-based; the liability firm is 0).
    #[arg(long, value_name = "N", conflicts_with_all = ["verify", "base_polys"])]
    player: Option<usize>,

    /// Cross-check the engine against brute-force enumeration.
    #[arg(long, conflicts_with = "base_polys")]
    verify: bool,

    /// Print the base polynomials instead of Shapley values.
    #[arg(long)]
    base_polys: bool,

    /// Emit a JSON object instead of plain text.
    #[arg(long)]
    json: bool,

    /// Digits after the decimal point in decimal renderings.
    #[arg(long, value_name = "D", default_value_t = 6)]
    precision: usize,

    /// Worker threads for the per-player phase.
    #[arg(long, value_name = "T", default_value_t = 1)]
    threads: usize,

    /// Generate a seeded random instance instead of reading a file.
    #[arg(long, value_name = "family,n,maxweight,seed", conflicts_with = "input")]
    random: Option<String>,

    /// Work limit in polynomial-coefficient cells.
    #[arg(long, value_name = "CELLS", default_value_t = linshap_core::engine::DEFAULT_CELL_LIMIT)]
    limit: u64,
}

fn execute(args: &Args) -> Result<Outcome, CliError> {
    let random = args.random.as_deref().map(str::parse::<RandomSpec>).transpose()?;
    let family = match (&random, &args.input) {
        (Some(spec), _) => generate(spec),
        (None, Some(path)) => load_family(path)?,
        (None, None) => unreachable!("clap requires an input or --random"),
    };
    let opts = Options {
        precision: args.precision,
        threads: args.threads,
        cell_limit: args.limit,
    };

    let mut outcome = if let Some(player) = args.player {
        run::run_single(&family, player, &opts)?
    } else if args.verify {
        run::run_verify(&family, &opts)?
    } else if args.base_polys {
        run::run_base_polys(&family, &opts)?
    } else {
        run::run_shapley(&family, &opts)?
    };

    if let Some(spec) = random {
        let game = serde_json::to_value(GameSpecFile::from_family(&family))?;
        outcome.text = format!(
            "# random family={} n={} maxweight={} seed={}\n# game {}\n{}",
            spec.family.name(),
            spec.players,
            spec.max_weight,
            spec.seed,
            game,
            outcome.text
        );
        outcome.json = json!({
            "random": { "spec": spec.to_string(), "seed": spec.seed, "game": game },
            "result": outcome.json,
        });
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(outcome) => {
            if args.json {
                println!("{}", outcome.json);
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
