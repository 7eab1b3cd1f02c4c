//! Seeded simulator of power-transformer insulation aging.
//!
//! A calendar clock drives per-tick load currents, temperature terms and the
//! Arrhenius aging factor; consumed life and rate of loss accumulate over
//! multi-year horizons. A benchmark harness times whole runs and fits a
//! polynomial to runtime versus horizon.
//!
//! Numeric code is generic over [`Real`] (`f32` or `f64`). The aliases below
//! fix the scalar to `f64`, which the command-line tool uses.

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod aging;
pub mod algoc;
pub mod cli_io;
pub mod engine;
mod error;
pub mod fit;
pub mod loadgen;
mod rng;
mod scalar;
pub mod thermal;

pub use algoc::{ClockStamp, TickConfig};
pub use engine::BenchRow;
pub use error::{Error, Result};
pub use fit::RmseNormalization;
pub use loadgen::GeneratorKind;
pub use scalar::{rel_diff, Real};
pub use thermal::Coupling;

pub type LoadSpec = loadgen::LoadSpec<f64>;
pub type LoadSample = loadgen::LoadSample<f64>;
pub type LoadStats = loadgen::LoadStats<f64>;
pub type ThermalSpec = thermal::ThermalSpec<f64>;
pub type ThermalState = thermal::ThermalState<f64>;
pub type AgingSpec = aging::AgingSpec<f64>;
pub type AgingRecord = aging::AgingRecord<f64>;
pub type LifeSummary = aging::LifeSummary<f64>;
pub type SimConfig = engine::SimConfig<f64>;
pub type SimulationResult = engine::SimulationResult<f64>;
pub type TickRecord = engine::TickRecord<f64>;
pub type PolyFit = fit::PolyFit<f64>;
