//! Per-tick top-oil, winding and ambient temperature terms and the net
//! hot-spot temperature.

use crate::algoc::ClockStamp;
use crate::error::{Error, Result};
use crate::loadgen::bounds;
use crate::rng;
use crate::scalar::Real;

pub const DEFAULT_ZETA: f64 = 0.05;

/// How the top-oil and winding rises are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coupling {
    /// Independent uniform draws within bounds.
    #[default]
    Stochastic,
    /// `min + (max - min) * k^2`, clamped to bounds.
    KCoupled,
}

impl Coupling {
    pub fn as_str(&self) -> &'static str {
        match self {
            Coupling::Stochastic => "stochastic",
            Coupling::KCoupled => "k_coupled",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "stochastic" => Some(Coupling::Stochastic),
            "k_coupled" => Some(Coupling::KCoupled),
            _ => None,
        }
    }
}

/// Field bounds for the three temperature terms, in °C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalSpec<T> {
    pub dto_min: T,
    pub dto_max: T,
    pub dtw_min: T,
    pub dtw_max: T,
    pub dta_min: T,
    pub dta_max: T,
    /// Half-width of the hourly ambient factor, drawn on `[1 - zeta, 1 + zeta]`.
    pub zeta: T,
    pub coupling: Coupling,
}

impl<T: Real> ThermalSpec<T> {
    pub fn validate(&self) -> Result<()> {
        for (lo_key, hi_key, lo, hi) in [
            ("dto_min", "dto_max", self.dto_min, self.dto_max),
            ("dtw_min", "dtw_max", self.dtw_min, self.dtw_max),
            ("dta_min", "dta_max", self.dta_min, self.dta_max),
        ] {
            if !(lo <= hi) {
                return Err(bounds(lo_key, hi_key, lo, hi));
            }
        }
        if !(self.zeta >= T::zero() && self.zeta < T::one()) {
            return Err(Error::InvalidValue {
                key: "zeta",
                reason: format!("{} is outside [0, 1)", self.zeta),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalState<T> {
    pub stamp: ClockStamp,
    pub dto: T,
    pub dtw: T,
    pub dta: T,
    /// Hourly ambient factor applied to `dta`.
    pub z: T,
    pub t_hs: T,
}

/// Net hot-spot temperature.
pub fn hot_spot<T: Real>(dto: T, dtw: T, dta: T) -> T {
    dto + dtw + dta
}

fn k_coupled<T: Real>(lo: T, hi: T, k: T) -> T {
    (lo + (hi - lo) * k * k).max(lo).min(hi)
}

/// Generates one thermal state per tick.
///
/// Draw order per tick is: a fresh ambient factor when the tick opens a new
/// simulated hour, then the top-oil and winding rises (stochastic coupling
/// only), then the base ambient term.
pub fn generate_thermal<T: Real>(
    spec: &ThermalSpec<T>,
    ticks: &[ClockStamp],
    k_series: &[T],
    seed: u64,
) -> Result<Vec<ThermalState<T>>> {
    spec.validate()?;
    if ticks.len() != k_series.len() {
        return Err(Error::LengthMismatch {
            ticks: ticks.len(),
            values: k_series.len(),
        });
    }

    let mut rng = rng::stream(seed, rng::THERMAL_STREAM);
    let mut hour = None;
    let mut z = T::one();
    let mut out = Vec::with_capacity(ticks.len());
    for (&stamp, &k) in ticks.iter().zip(k_series) {
        if hour != Some(stamp.hour_index()) {
            hour = Some(stamp.hour_index());
            z = rng::uniform(&mut rng, T::one() - spec.zeta, T::one() + spec.zeta);
        }
        let (dto, dtw) = match spec.coupling {
            Coupling::Stochastic => (
                rng::uniform(&mut rng, spec.dto_min, spec.dto_max),
                rng::uniform(&mut rng, spec.dtw_min, spec.dtw_max),
            ),
            Coupling::KCoupled => (
                k_coupled(spec.dto_min, spec.dto_max, k),
                k_coupled(spec.dtw_min, spec.dtw_max, k),
            ),
        };
        let dta = rng::uniform(&mut rng, spec.dta_min, spec.dta_max) * z;
        out.push(ThermalState {
            stamp,
            dto,
            dtw,
            dta,
            z,
            t_hs: hot_spot(dto, dtw, dta),
        });
    }
    Ok(out)
}
