use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pickroute::dp::OnePassTable;
use pickroute::{GeneratorParams, SweepRanges};
use pickroute_cli::{
    cmd_bench, cmd_generate, cmd_solve, cmd_verify, write_csv, Algorithm, BenchParams, CliError, VerifySource,
};

#[derive(Parser)]
#[command(
    name = "pickroute",
    version,
    about = "Exact order-picker routing in single-block warehouses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random instance.
    Generate {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Solve an instance file and print a JSON run report.
    Solve {
        input: PathBuf,
        #[arg(short, long, value_enum, default_value = "one-pass")]
        algorithm: Algorithm,
        /// Also print the closed walk.
        #[arg(long)]
        walk: bool,
        /// Compare against the Held-Karp oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Cross-check both dynamic programs against Held-Karp.
    Verify {
        /// Instance file; omit to sweep seeds instead.
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed_from: u64,
        #[arg(long, default_value_t = 1000)]
        seed_to: u64,
        #[arg(long, default_value_t = 6)]
        max_aisles: usize,
        #[arg(long, default_value_t = 8)]
        max_items: usize,
    },
    /// Time one-pass against original and emit CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [10, 100, 1000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        items_per_aisle: usize,
        #[arg(long, default_value_t = 11)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        rectangular: bool,
        /// CSV destination; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    aisles: usize,
    #[arg(long)]
    items: usize,
    #[arg(long, default_value_t = 10)]
    aisle_length: u64,
    #[arg(long, default_value_t = 1)]
    cross_min: u64,
    #[arg(long, default_value_t = 10)]
    cross_max: u64,
    #[arg(long)]
    rectangular: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate { gen, output } => {
            let params = GeneratorParams {
                num_aisles: gen.aisles,
                num_items: gen.items,
                aisle_length: gen.aisle_length,
                cross_min: gen.cross_min,
                cross_max: gen.cross_max,
                rectangular: gen.rectangular,
                seed: gen.seed,
            };
            println!("{}", cmd_generate(&params, &output)?);
        }
        Command::Solve {
            input,
            algorithm,
            walk,
            oracle,
        } => {
            let out = cmd_solve(&input, algorithm, walk, oracle)?;
            println!("{}", serde_json::to_string(&out.report).expect("report serializes"));
            if let Some(points) = out.walk {
                println!("{}", serde_json::json!({ "walk": points }));
            }
        }
        Command::Verify {
            input,
            seed_from,
            seed_to,
            max_aisles,
            max_items,
        } => {
            let source = match input {
                Some(path) => VerifySource::File(path),
                None => VerifySource::Sweep {
                    seeds: seed_from..=seed_to,
                    ranges: SweepRanges {
                        aisles: 1..=max_aisles.max(1),
                        items: 0..=max_items,
                        ..SweepRanges::small()
                    },
                },
            };
            println!("{}", cmd_verify(&source, &OnePassTable::standard())?);
        }
        Command::Bench {
            sizes,
            items_per_aisle,
            reps,
            seed,
            rectangular,
            output,
        } => {
            let rows = cmd_bench(&BenchParams {
                sizes,
                items_per_aisle,
                reps,
                seed,
                rectangular,
                ..BenchParams::default()
            })?;
            match output {
                Some(path) => {
                    let file = std::fs::File::create(&path).map_err(|source| CliError::Io { path, source })?;
                    write_csv(file, &rows)?;
                }
                None => write_csv(std::io::stdout().lock(), &rows)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Mismatch { instance, .. } = &e {
                print!("{instance}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
