use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use txaging::cli_io::{self, ConfigError};
use txaging::{engine, fit, SimConfig};

/// Transformer insulation aging simulator.
#[derive(Debug, Parser)]
#[command(name = "txaging", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a simulation and write the per-tick trace.
    ///
    /// With --out the trace goes to the file and the run summary to stdout;
    /// without it the trace goes to stdout.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the seed from the config file.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Time full runs over several horizons and fit a cubic to the timings.
    ///
    /// The years,wall_seconds table goes to --out (or stdout); the summary
    /// with the fit goes to stdout when --out is given.
    Bench {
        #[arg(long)]
        config: PathBuf,
        /// Comma-separated horizons in years.
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,6,8,10,12")]
        years: Vec<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least-squares polynomial fit of a two-column x,y CSV.
    Fit {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
}

enum Failure {
    Config(String),
    Runtime(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<txaging::Error> for Failure {
    fn from(e: txaging::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn load_config(path: &Path) -> Result<SimConfig, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    cli_io::parse_config(&text)
        .map_err(|e: ConfigError| Failure::Config(format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn simulate(config: &Path, out: Option<&Path>, seed: Option<u64>) -> Result<(), Failure> {
    let mut cfg = load_config(config)?;
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    let result = engine::run(&cfg)?;
    match out {
        Some(path) => {
            let mut w = create(path)?;
            cli_io::write_trace(&result, &mut w)?;
            w.flush()?;
            cli_io::write_summary(&result, None, io::stdout().lock())?;
        }
        None => cli_io::write_trace(&result, io::stdout().lock())?,
    }
    Ok(())
}

fn bench(config: &Path, years: &[u32], out: Option<&Path>) -> Result<(), Failure> {
    let cfg = load_config(config)?;
    let rows = engine::bench(&cfg, years)?;
    match out {
        Some(path) => {
            let mut w = create(path)?;
            cli_io::write_bench_table(&rows, &mut w)?;
            w.flush()?;
            let result = engine::run(&cfg)?;
            cli_io::write_summary(&result, Some(&rows), io::stdout().lock())?;
        }
        None => cli_io::write_bench_table(&rows, io::stdout().lock())?,
    }
    Ok(())
}

fn fit_csv(input: &Path, degree: usize) -> Result<(), Failure> {
    let file =
        File::open(input).map_err(|e| Failure::Runtime(format!("{}: {e}", input.display())))?;
    let (xs, ys) = cli_io::read_xy(BufReader::new(file))
        .map_err(|e| Failure::Runtime(format!("{}: {e}", input.display())))?;
    let fit = fit::polyfit(&xs, &ys, degree)?;
    cli_io::write_fit(&fit, io::stdout().lock())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Simulate { config, out, seed } => simulate(config, out.as_deref(), *seed),
        Command::Bench { config, years, out } => bench(config, years, out.as_deref()),
        Command::Fit { input, degree } => fit_csv(input, *degree),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(msg)) => {
            eprintln!("config error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
