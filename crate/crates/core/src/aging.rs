//! Accelerated aging factor, equivalent aging factor, consumed life and
//! rate of loss.
//!
//! Consumed life is the running sum of `FAA * dt` in hours: a tick at the
//! 110 °C reference hot-spot consumes exactly its own duration.

use crate::algoc::ClockStamp;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Normal insulation life in hours.
pub const DEFAULT_K_RTL: f64 = 65_000.0;

const ACTIVATION: f64 = 15_000.0;
const REFERENCE_KELVIN: f64 = 383.0;
/// Celsius to Kelvin offset used by the aging law (deliberately 273, not 273.15).
const KELVIN_OFFSET: f64 = 273.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgingSpec<T> {
    pub k_rtl: T,
    pub dt_hours: T,
}

impl<T: Real> AgingSpec<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.k_rtl > T::zero()) {
            return Err(Error::NonPositiveLife(self.k_rtl.as_f64()));
        }
        check_dt(self.dt_hours)?;
        if self.dt_hours > T::one() {
            return Err(Error::InvalidValue {
                key: "dt_hours",
                reason: format!("{} exceeds one hour", self.dt_hours),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgingRecord<T> {
    pub stamp: ClockStamp,
    pub faa: T,
    pub cum_life: T,
    pub rol: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifeSummary<T> {
    pub mean: T,
    pub min: T,
    pub max: T,
}

/// Accelerated aging factor at hot-spot temperature `t_hs` (°C).
pub fn faa<T: Real>(t_hs: T) -> Result<T> {
    let kelvin = t_hs + T::lit(KELVIN_OFFSET);
    if !(kelvin > T::zero()) {
        return Err(Error::NonPhysicalTemperature(t_hs.as_f64()));
    }
    let activation = T::lit(ACTIVATION);
    Ok((activation / T::lit(REFERENCE_KELVIN) - activation / kelvin).exp())
}

fn check_dt<T: Real>(dt_hours: T) -> Result<()> {
    if !(dt_hours > T::zero()) {
        return Err(Error::InvalidValue {
            key: "dt_hours",
            reason: format!("{dt_hours} is not positive"),
        });
    }
    Ok(())
}

fn check_series<T: Real>(faa_series: &[T], dt_hours: T) -> Result<()> {
    if faa_series.is_empty() {
        return Err(Error::Empty("FAA series"));
    }
    check_dt(dt_hours)?;
    if let Some(bad) = faa_series.iter().find(|&&f| !(f > T::zero())) {
        return Err(Error::InvalidValue {
            key: "faa",
            reason: format!("{bad} is not positive"),
        });
    }
    Ok(())
}

/// Equivalent aging factor: `sum(faa * dt) / (N * dt)`.
pub fn feqa<T: Real>(faa_series: &[T], dt_hours: T) -> Result<T> {
    check_series(faa_series, dt_hours)?;
    let weighted: T = faa_series.iter().map(|&f| f * dt_hours).sum();
    Ok(weighted / (T::from_count(faa_series.len()) * dt_hours))
}

/// Prefix sums of `faa * dt`, in hours.
pub fn accumulate_life<T: Real>(faa_series: &[T], dt_hours: T) -> Result<Vec<T>> {
    check_series(faa_series, dt_hours)?;
    Ok(faa_series
        .iter()
        .scan(T::zero(), |acc, &f| {
            *acc = *acc + f * dt_hours;
            Some(*acc)
        })
        .collect())
}

/// Percentage of normal life consumed. Not clamped at 100.
pub fn rol<T: Real>(cum_life: T, k_rtl: T) -> Result<T> {
    if !(k_rtl > T::zero()) {
        return Err(Error::NonPositiveLife(k_rtl.as_f64()));
    }
    Ok(cum_life / k_rtl * T::lit(100.0))
}

/// Mean, minimum and maximum of per-replicate final consumed life.
pub fn life_summary<T: Real>(replicate_finals: &[T]) -> Result<LifeSummary<T>> {
    if replicate_finals.is_empty() {
        return Err(Error::Empty("replicate results"));
    }
    // Summing in sorted order makes the result independent of replicate order.
    let mut sorted = replicate_finals.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let (min, max) = (sorted[0], sorted[sorted.len() - 1]);
    let n = T::from_count(sorted.len());
    let mean = min + sorted.iter().map(|&v| v - min).sum::<T>() / n;
    Ok(LifeSummary {
        // keep mean inside [min, max] under rounding
        mean: mean.max(min).min(max),
        min,
        max,
    })
}

/// Aging records for a hot-spot series.
pub fn age_series<T: Real>(
    stamps: &[ClockStamp],
    hot_spots: &[T],
    spec: &AgingSpec<T>,
) -> Result<Vec<AgingRecord<T>>> {
    spec.validate()?;
    if stamps.len() != hot_spots.len() {
        return Err(Error::LengthMismatch {
            ticks: stamps.len(),
            values: hot_spots.len(),
        });
    }
    let factors = hot_spots
        .iter()
        .map(|&t| faa(t))
        .collect::<Result<Vec<T>>>()?;
    let life = accumulate_life(&factors, spec.dt_hours)?;
    stamps
        .iter()
        .zip(factors)
        .zip(life)
        .map(|((&stamp, faa), cum_life)| {
            Ok(AgingRecord {
                stamp,
                faa,
                cum_life,
                rol: rol(cum_life, spec.k_rtl)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rel_diff;
    use proptest::prelude::*;

    #[test]
    fn faa_reference_points() {
        assert!((faa(110.0_f64).unwrap() - 1.0).abs() <= 1e-12);
        // exp(15000/383 - 15000/393) evaluated with numpy
        assert!(rel_diff(faa(120.0_f64).unwrap(), 2.7089251438281656) <= 1e-9);
        assert!((faa(120.0_f64).unwrap() - 2.7093).abs() < 1e-3);
        assert!(rel_diff(faa(80.0_f64).unwrap(), 0.03584945245027534) <= 1e-9);
        assert!((faa(110.0_f32).unwrap() - 1.0).abs() <= 1e-6);
    }

    #[test]
    fn faa_rejects_absolute_zero() {
        assert_eq!(faa(-273.0_f64), Err(Error::NonPhysicalTemperature(-273.0)));
        assert!(faa(-300.0_f64).is_err());
        assert!(faa(-200.0_f64).unwrap() > 0.0);
    }

    #[test]
    fn feqa_examples() {
        assert_eq!(feqa(&[1.0, 1.0, 1.0], 0.25).unwrap(), 1.0);
        assert_eq!(feqa(&[2.0, 4.0], 0.25).unwrap(), 3.0);
        assert_eq!(feqa(&[2.0, 4.0], 1.0).unwrap(), 3.0);
        assert_eq!(feqa(&vec![0.5; 35040], 0.25).unwrap(), 0.5);
        assert_eq!(feqa::<f64>(&[], 1.0), Err(Error::Empty("FAA series")));
        assert!(feqa(&[1.0, 0.0], 1.0).is_err());
        assert!(feqa(&[1.0], 0.0).is_err());
    }

    #[test]
    fn accumulate_examples() {
        assert_eq!(
            accumulate_life(&[1.0, 1.0, 1.0, 1.0], 0.25).unwrap(),
            vec![0.25, 0.5, 0.75, 1.0]
        );
        let life = accumulate_life(&vec![2.0; 8760], 1.0).unwrap();
        assert_eq!(*life.last().unwrap(), 17520.0);
        assert!(life.windows(2).all(|w| w[0] < w[1]));
        assert!(accumulate_life::<f64>(&[], 1.0).is_err());
    }

    #[test]
    fn rol_examples() {
        assert_eq!(rol(65000.0, 65000.0).unwrap(), 100.0);
        assert_eq!(rol(0.0, 65000.0).unwrap(), 0.0);
        assert!((rol(58500.0_f64, 65000.0).unwrap() - 90.0).abs() < 1e-12);
        assert!((rol(130000.0_f64, 65000.0).unwrap() - 200.0).abs() < 1e-12);
        assert_eq!(rol(1.0, 0.0), Err(Error::NonPositiveLife(0.0)));
    }

    #[test]
    fn life_summary_examples() {
        let s = life_summary(&[10.0, 20.0, 30.0]).unwrap();
        assert_eq!((s.mean, s.min, s.max), (20.0, 10.0, 30.0));
        let s = life_summary(&[42.0]).unwrap();
        assert_eq!((s.mean, s.min, s.max), (42.0, 42.0, 42.0));
        let s = life_summary(&vec![8760.1; 100]).unwrap();
        assert_eq!((s.mean, s.min), (s.max, s.max));
        assert!(life_summary::<f64>(&[]).is_err());
    }

    #[test]
    fn aging_spec_validation() {
        assert!(AgingSpec {
            k_rtl: 65000.0,
            dt_hours: 0.25
        }
        .validate()
        .is_ok());
        assert!(AgingSpec {
            k_rtl: 0.0,
            dt_hours: 0.25
        }
        .validate()
        .is_err());
        assert!(AgingSpec {
            k_rtl: 65000.0,
            dt_hours: 2.0
        }
        .validate()
        .is_err());
        assert!(AgingSpec {
            k_rtl: 65000.0,
            dt_hours: 0.0
        }
        .validate()
        .is_err());
    }

    proptest! {
        #[test]
        fn faa_monotone(a in -200.0f64..300.0, b in -200.0f64..300.0) {
            prop_assume!(a != b);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assert!(faa(lo).unwrap() < faa(hi).unwrap() || faa(hi).unwrap() == f64::INFINITY);
        }

        #[test]
        fn faa_below_unity_iff_below_reference(t in -200.0f64..300.0) {
            prop_assert_eq!(faa(t).unwrap() < 1.0, t < 110.0);
        }

        #[test]
        fn feqa_bounded_and_dt_invariant(xs in proptest::collection::vec(1e-3f64..50.0, 1..300)) {
            let f = feqa(&xs, 0.25).unwrap();
            let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = xs.iter().cloned().fold(0.0, f64::max);
            prop_assert!(f >= lo * (1.0 - 1e-12) && f <= hi * (1.0 + 1e-12));
            prop_assert!(rel_diff(f, feqa(&xs, 1.0).unwrap()) <= 1e-12);
            prop_assert!(rel_diff(f, feqa(&xs, 1.0 / 6.0).unwrap()) <= 1e-12);
        }

        #[test]
        fn accumulation_matches_feqa(xs in proptest::collection::vec(1e-3f64..50.0, 1..300), dt in 0.01f64..1.0) {
            let life = accumulate_life(&xs, dt).unwrap();
            let expected = feqa(&xs, dt).unwrap() * xs.len() as f64 * dt;
            prop_assert!(rel_diff(*life.last().unwrap(), expected) <= 1e-9);
            prop_assert!(life.windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn rol_linear(l in 0.0f64..1e6, a in 0.0f64..10.0, k in 1.0f64..1e6) {
            prop_assert!(rel_diff(rol(a * l, k).unwrap(), a * rol(l, k).unwrap()) <= 1e-12);
        }

        #[test]
        fn summary_order_independent(mut xs in proptest::collection::vec(0.0f64..1e5, 1..50)) {
            let a = life_summary(&xs).unwrap();
            xs.reverse();
            let b = life_summary(&xs).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
