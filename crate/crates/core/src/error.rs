use thiserror::Error;

use crate::algoc::ClockStamp;

/// Errors raised by the simulation modules. Values are carried as `f64`
/// regardless of the scalar type the computation ran on.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tick interval of {0} minutes does not divide an hour")]
    InvalidInterval(u32),
    #[error("horizon must be at least one year")]
    InvalidHorizon,
    #[error("clock stamps out of order: {start} is after {end}")]
    OutOfOrder { start: ClockStamp, end: ClockStamp },
    #[error("tick sequence must be strictly increasing (violated at index {0})")]
    TicksNotIncreasing(usize),
    #[error("{0} must not be empty")]
    Empty(&'static str),
    #[error("invalid bounds: {lower_key} = {lower} exceeds {upper_key} = {upper}")]
    InvalidBounds {
        lower_key: &'static str,
        upper_key: &'static str,
        lower: f64,
        upper: f64,
    },
    #[error("invalid value for {key}: {reason}")]
    InvalidValue { key: &'static str, reason: String },
    #[error("rated current must be positive, got {0}")]
    NonPositiveRated(f64),
    #[error("normal life constant must be positive, got {0}")]
    NonPositiveLife(f64),
    #[error("hot-spot temperature {0} °C is at or below absolute zero")]
    NonPhysicalTemperature(f64),
    #[error("length mismatch: {ticks} ticks but {values} k-factors")]
    LengthMismatch { ticks: usize, values: usize },
    #[error("polynomial fit needs at least {needed} points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("polynomial fit is rank deficient (duplicate or degenerate x values)")]
    RankDeficient,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
