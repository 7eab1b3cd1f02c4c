//! Run summary block and benchmark tables.

use std::io::{self, BufRead, Write};

use crate::engine::{BenchRow, SimulationResult};
use crate::fit::{polyfit, PolyFit};
use crate::scalar::Real;

/// Degree of the polynomial fitted to benchmark timings.
pub const BENCH_FIT_DEGREE: usize = 3;

/// Writes `key = value` lines for the run, followed by the benchmark table
/// and its cubic fit when `bench` is given.
pub fn write_summary<T: Real, W: Write>(
    result: &SimulationResult<T>,
    bench: Option<&[BenchRow]>,
    mut sink: W,
) -> io::Result<()> {
    writeln!(sink, "ticks = {}", result.ticks.len())?;
    writeln!(sink, "replicates = {}", result.replicate_finals.len())?;
    writeln!(sink, "k_rtl_h = {}", result.k_rtl)?;
    writeln!(sink, "feqa = {}", result.feqa)?;
    writeln!(sink, "life_mean_h = {}", result.life_summary.mean)?;
    writeln!(sink, "life_min_h = {}", result.life_summary.min)?;
    writeln!(sink, "life_max_h = {}", result.life_summary.max)?;
    writeln!(sink, "rol_final_pct = {}", result.rol_final)?;
    writeln!(sink, "filtered_k_count = {}", result.filtered_k_count)?;
    if let Some(rows) = bench {
        writeln!(sink)?;
        write_bench_table(rows, &mut sink)?;
        writeln!(sink)?;
        let xs: Vec<f64> = rows.iter().map(|r| r.years as f64).collect();
        let ys: Vec<f64> = rows.iter().map(|r| r.wall_seconds).collect();
        match polyfit(&xs, &ys, BENCH_FIT_DEGREE) {
            Ok(fit) => write_fit(&fit, &mut sink)?,
            Err(e) => writeln!(sink, "fit_error = {e}")?,
        }
    }
    sink.flush()
}

/// `years,wall_seconds` CSV, readable by the `fit` subcommand.
pub fn write_bench_table<W: Write>(rows: &[BenchRow], mut sink: W) -> io::Result<()> {
    writeln!(sink, "years,wall_seconds")?;
    for r in rows {
        writeln!(sink, "{},{}", r.years, r.wall_seconds)?;
    }
    Ok(())
}

pub fn write_fit<T: Real, W: Write>(fit: &PolyFit<T>, mut sink: W) -> io::Result<()> {
    writeln!(sink, "fit_degree = {}", fit.degree())?;
    let coefficients: Vec<String> = fit.coefficients.iter().map(|c| c.to_string()).collect();
    writeln!(sink, "fit_coefficients = {}", coefficients.join(","))?;
    writeln!(sink, "fit_sse = {}", fit.sse)?;
    writeln!(sink, "fit_rmse = {}", fit.rmse)?;
    writeln!(sink, "fit_rmse_normalization = {}", fit.normalization)
}

/// Reads two-column numeric CSV. A non-numeric first row is treated as a
/// header and skipped; blank lines are ignored.
pub fn read_xy<R: BufRead>(source: R) -> io::Result<(Vec<f64>, Vec<f64>)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(source);
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for (idx, record) in reader.records().enumerate() {
        let record =
            record.map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e.to_string()))?;
        if record.len() != 2 {
            return Err(io::Error::new(
                io::ErrorKind::InvalidData,
                format!(
                    "row {}: expected 2 columns, found {}",
                    idx + 1,
                    record.len()
                ),
            ));
        }
        match (record[0].parse::<f64>(), record[1].parse::<f64>()) {
            (Ok(x), Ok(y)) => {
                xs.push(x);
                ys.push(y);
            }
            _ if idx == 0 => continue,
            _ => {
                return Err(io::Error::new(
                    io::ErrorKind::InvalidData,
                    format!("row {}: non-numeric value", idx + 1),
                ))
            }
        }
    }
    Ok((xs, ys))
}
