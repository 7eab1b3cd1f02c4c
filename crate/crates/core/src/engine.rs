//! Simulation driver: sequences clock, load, thermal and aging for every
//! tick, runs replicate ensembles and times whole runs for scaling studies.

use std::time::Instant;

use crate::aging::{self, AgingSpec, LifeSummary};
use crate::algoc::{tick_count, ClockStamp, TickConfig};
use crate::error::{Error, Result};
use crate::loadgen::{self, LoadSpec};
use crate::scalar::Real;
use crate::thermal::{self, ThermalSpec};

/// Complete set of working parameters for a run.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig<T> {
    pub tick: TickConfig,
    pub load: LoadSpec<T>,
    pub thermal: ThermalSpec<T>,
    pub k_rtl: T,
    pub seed: u64,
    pub replicates: u32,
}

impl<T: Real> SimConfig<T> {
    /// Aging parameters; the tick length always follows the clock interval.
    pub fn aging(&self) -> AgingSpec<T> {
        AgingSpec {
            k_rtl: self.k_rtl,
            dt_hours: self.tick.dt_hours(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.load.validate()?;
        self.thermal.validate()?;
        self.aging().validate()?;
        if self.replicates < 1 {
            return Err(Error::InvalidValue {
                key: "replicates",
                reason: "must be at least 1".into(),
            });
        }
        Ok(())
    }

    /// Seed of replicate `r`.
    pub fn replicate_seed(&self, r: u32) -> u64 {
        self.seed.wrapping_add(r as u64)
    }
}

/// One row of the simulation trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TickRecord<T> {
    pub stamp: ClockStamp,
    pub current: T,
    pub k: T,
    pub dto: T,
    pub dtw: T,
    pub dta: T,
    pub t_hs: T,
    pub faa: T,
    pub cum_life: T,
    pub rol: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult<T> {
    /// Trace of replicate 0.
    pub ticks: Vec<TickRecord<T>>,
    /// Equivalent aging factor of replicate 0.
    pub feqa: T,
    pub life_summary: LifeSummary<T>,
    /// Final consumed life of every replicate, in replicate order.
    pub replicate_finals: Vec<T>,
    pub rol_final: T,
    /// Ticks of replicate 0 whose k-factor lies strictly inside `(k_min, k_max)`.
    pub filtered_k_count: usize,
    pub k_rtl: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub years: u32,
    pub wall_seconds: f64,
}

/// Runs one replicate and returns its full trace.
pub fn run_replicate<T: Real>(
    cfg: &SimConfig<T>,
    stamps: &[ClockStamp],
    seed: u64,
) -> Result<Vec<TickRecord<T>>> {
    let loads = loadgen::generate_currents(&cfg.load, stamps, seed)?;
    let ks: Vec<T> = loads.iter().map(|s| s.k).collect();
    let temps = thermal::generate_thermal(&cfg.thermal, stamps, &ks, seed)?;
    let hot_spots: Vec<T> = temps.iter().map(|t| t.t_hs).collect();
    let aged = aging::age_series(stamps, &hot_spots, &cfg.aging())?;

    Ok(loads
        .iter()
        .zip(&temps)
        .zip(&aged)
        .map(|((load, temp), age)| TickRecord {
            stamp: load.stamp,
            current: load.current,
            k: load.k,
            dto: temp.dto,
            dtw: temp.dtw,
            dta: temp.dta,
            t_hs: temp.t_hs,
            faa: age.faa,
            cum_life: age.cum_life,
            rol: age.rol,
        })
        .collect())
}

pub fn run<T: Real>(cfg: &SimConfig<T>) -> Result<SimulationResult<T>> {
    cfg.validate()?;
    let stamps: Vec<ClockStamp> = cfg.tick.stamps().collect();
    debug_assert_eq!(stamps.len() as u64, tick_count(&cfg.tick));

    let ticks = run_replicate(cfg, &stamps, cfg.replicate_seed(0))?;
    let final_life =
        |trace: &[TickRecord<T>]| trace.last().map(|t| t.cum_life).unwrap_or_else(T::zero);

    let mut replicate_finals = Vec::with_capacity(cfg.replicates as usize);
    replicate_finals.push(final_life(&ticks));
    for r in 1..cfg.replicates {
        let trace = run_replicate(cfg, &stamps, cfg.replicate_seed(r))?;
        replicate_finals.push(final_life(&trace));
    }

    let faas: Vec<T> = ticks.iter().map(|t| t.faa).collect();
    let ks: Vec<T> = ticks.iter().map(|t| t.k).collect();
    let filtered_k_count = loadgen::filter_suboptimal_k(&ks, cfg.load.k_min, cfg.load.k_max)
        .iter()
        .filter(|&&b| b == 1)
        .count();

    Ok(SimulationResult {
        feqa: aging::feqa(&faas, cfg.tick.dt_hours())?,
        life_summary: aging::life_summary(&replicate_finals)?,
        rol_final: aging::rol(replicate_finals[0], cfg.k_rtl)?,
        replicate_finals,
        filtered_k_count,
        k_rtl: cfg.k_rtl,
        ticks,
    })
}

/// Times one full run per horizon in `years`. Rows come back sorted by years.
pub fn bench<T: Real>(cfg_base: &SimConfig<T>, years: &[u32]) -> Result<Vec<BenchRow>> {
    bench_trials(cfg_base, years, 1)
}

/// Like [`bench`], reporting the median of `trials` timings per horizon.
/// Runs are strictly sequential.
pub fn bench_trials<T: Real>(
    cfg_base: &SimConfig<T>,
    years: &[u32],
    trials: usize,
) -> Result<Vec<BenchRow>> {
    if years.is_empty() {
        return Err(Error::Empty("benchmark year list"));
    }
    let mut sorted = years.to_vec();
    sorted.sort_unstable();

    let mut rows = Vec::with_capacity(sorted.len());
    for &y in &sorted {
        let mut cfg = cfg_base.clone();
        cfg.tick = cfg.tick.with_horizon(y)?;
        let mut samples = Vec::with_capacity(trials.max(1));
        for _ in 0..trials.max(1) {
            let start = Instant::now();
            let result = run(&cfg)?;
            let elapsed = start.elapsed().as_secs_f64();
            drop(result);
            samples.push(elapsed.max(f64::MIN_POSITIVE));
        }
        samples.sort_by(|a, b| a.total_cmp(b));
        rows.push(BenchRow {
            years: y,
            wall_seconds: samples[samples.len() / 2],
        });
    }
    Ok(rows)
}
