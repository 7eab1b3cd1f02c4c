//! Stochastic load currents, k-factors, sample statistics and the
//! sub-optimal k-factor filter.

use crate::algoc::ClockStamp;
use crate::error::{Error, Result};
use crate::rng;
use crate::scalar::Real;

/// How per-tick load currents are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeneratorKind {
    /// Independent uniform draw on `[i_min, i_max]` for every tick.
    #[default]
    UniformRandom,
    /// Deterministic diurnal ramp `i_min -> i_max -> i_min` over each day,
    /// peaking at noon.
    LinearStep,
}

impl GeneratorKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GeneratorKind::UniformRandom => "uniform_random",
            GeneratorKind::LinearStep => "linear_step",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "uniform_random" => Some(GeneratorKind::UniformRandom),
            "linear_step" => Some(GeneratorKind::LinearStep),
            _ => None,
        }
    }
}

/// Nameplate rating and field bounds of the load.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadSpec<T> {
    pub i_rated: T,
    pub i_min: T,
    pub i_max: T,
    pub k_min: T,
    pub k_max: T,
    pub generator: GeneratorKind,
}

impl<T: Real> LoadSpec<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.i_rated > T::zero()) {
            return Err(Error::NonPositiveRated(self.i_rated.as_f64()));
        }
        if !(self.i_min >= T::zero()) {
            return Err(Error::InvalidValue {
                key: "i_min",
                reason: format!("{} is negative", self.i_min),
            });
        }
        if !(self.i_min <= self.i_max) {
            return Err(bounds("i_min", "i_max", self.i_min, self.i_max));
        }
        if !(self.k_min >= T::zero()) {
            return Err(Error::InvalidValue {
                key: "k_min",
                reason: format!("{} is negative", self.k_min),
            });
        }
        if !(self.k_min < self.k_max) {
            return Err(bounds("k_min", "k_max", self.k_min, self.k_max));
        }
        Ok(())
    }
}

pub(crate) fn bounds<T: Real>(
    lower_key: &'static str,
    upper_key: &'static str,
    lower: T,
    upper: T,
) -> Error {
    Error::InvalidBounds {
        lower_key,
        upper_key,
        lower: lower.as_f64(),
        upper: upper.as_f64(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadSample<T> {
    pub stamp: ClockStamp,
    pub current: T,
    pub k: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadStats<T> {
    pub mean: T,
    /// Population standard deviation (normalized by `n`).
    pub std: T,
    pub n: usize,
}

/// Ratio of actual to rated current.
pub fn k_factor<T: Real>(current: T, i_rated: T) -> Result<T> {
    if !(i_rated > T::zero()) {
        return Err(Error::NonPositiveRated(i_rated.as_f64()));
    }
    Ok(current / i_rated)
}

/// Produces one load sample per tick. `seed` is ignored by
/// [`GeneratorKind::LinearStep`].
pub fn generate_currents<T: Real>(
    spec: &LoadSpec<T>,
    ticks: &[ClockStamp],
    seed: u64,
) -> Result<Vec<LoadSample<T>>> {
    spec.validate()?;
    if ticks.is_empty() {
        return Err(Error::Empty("tick sequence"));
    }
    if let Some(i) = ticks.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::TicksNotIncreasing(i + 1));
    }

    let mut rng = rng::stream(seed, rng::LOAD_STREAM);
    let half_day = T::lit(720.0);
    ticks
        .iter()
        .map(|&stamp| {
            let current = match spec.generator {
                GeneratorKind::UniformRandom => rng::uniform(&mut rng, spec.i_min, spec.i_max),
                GeneratorKind::LinearStep => {
                    let m = T::from_u32(stamp.minute_of_day()).unwrap();
                    let frac = if m <= half_day {
                        m / half_day
                    } else {
                        (T::lit(1440.0) - m) / half_day
                    };
                    (spec.i_min + (spec.i_max - spec.i_min) * frac).min(spec.i_max)
                }
            };
            Ok(LoadSample {
                stamp,
                current,
                k: k_factor(current, spec.i_rated)?,
            })
        })
        .collect()
}

/// Mean and population standard deviation of a current series.
pub fn current_stats<T: Real>(currents: &[T]) -> Result<LoadStats<T>> {
    let first = *currents.first().ok_or(Error::Empty("load samples"))?;
    let n = T::from_count(currents.len());
    // Shifting by the first sample keeps constant series exactly constant.
    let mean = first + currents.iter().map(|&c| c - first).sum::<T>() / n;
    let var = currents.iter().map(|&c| (c - mean) * (c - mean)).sum::<T>() / n;
    Ok(LoadStats {
        mean,
        std: var.sqrt(),
        n: currents.len(),
    })
}

pub fn load_stats<T: Real>(samples: &[LoadSample<T>]) -> Result<LoadStats<T>> {
    let currents: Vec<T> = samples.iter().map(|s| s.current).collect();
    current_stats(&currents)
}

/// 1 where `k_min < k < k_max` (strict on both sides), else 0.
pub fn filter_suboptimal_k<T: Real>(ks: &[T], k_min: T, k_max: T) -> Vec<u8> {
    ks.iter()
        .map(|&k| u8::from(k > k_min && k < k_max))
        .collect()
}

/// Samples whose k-factor passes [`filter_suboptimal_k`].
pub fn suboptimal_samples<T: Real>(
    samples: &[LoadSample<T>],
    k_min: T,
    k_max: T,
) -> Vec<&LoadSample<T>> {
    samples
        .iter()
        .filter(|s| s.k > k_min && s.k < k_max)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algoc::TickConfig;
    use proptest::prelude::*;

    fn spec(lo: f64, hi: f64, generator: GeneratorKind) -> LoadSpec<f64> {
        LoadSpec {
            i_rated: 600.0,
            i_min: lo,
            i_max: hi,
            k_min: 0.5,
            k_max: 0.9,
            generator,
        }
    }

    fn day_ticks(interval: u32) -> Vec<ClockStamp> {
        TickConfig::new(interval, 1)
            .unwrap()
            .stamps()
            .take(24 * 60 / interval as usize)
            .collect()
    }

    #[test]
    fn k_factor_examples() {
        assert_eq!(k_factor(600.0, 600.0).unwrap(), 1.0);
        assert_eq!(k_factor(300.0, 600.0).unwrap(), 0.5);
        assert_eq!(k_factor(0.0, 600.0).unwrap(), 0.0);
        assert_eq!(k_factor(10.0, 0.0), Err(Error::NonPositiveRated(0.0)));
        assert!(k_factor(10.0, -1.0).is_err());
    }

    #[test]
    fn degenerate_range() {
        let ticks = day_ticks(15);
        for kind in [GeneratorKind::UniformRandom, GeneratorKind::LinearStep] {
            let samples = generate_currents(&spec(400.0, 400.0, kind), &ticks, 7).unwrap();
            assert!(samples.iter().all(|s| s.current == 400.0));
        }
    }

    #[test]
    fn seeded_determinism() {
        let ticks = day_ticks(5);
        let s = spec(100.0, 500.0, GeneratorKind::UniformRandom);
        let a = generate_currents(&s, &ticks, 42).unwrap();
        let b = generate_currents(&s, &ticks, 42).unwrap();
        assert!(a
            .iter()
            .zip(&b)
            .all(|(x, y)| x.current.to_bits() == y.current.to_bits()));
        let c = generate_currents(&s, &ticks, 43).unwrap();
        assert!(a.iter().zip(&c).any(|(x, y)| x.current != y.current));
    }

    #[test]
    fn uniform_mean_within_standard_error() {
        let ticks: Vec<_> = TickConfig::new(1, 1)
            .unwrap()
            .stamps()
            .take(100_000)
            .collect();
        let samples = generate_currents(
            &spec(100.0, 500.0, GeneratorKind::UniformRandom),
            &ticks,
            11,
        )
        .unwrap();
        let stats = load_stats(&samples).unwrap();
        // uniform on [a, b]: sigma = (b - a) / sqrt(12)
        let sigma = 400.0 / 12f64.sqrt();
        let se = sigma / (samples.len() as f64).sqrt();
        assert!((stats.mean - 300.0).abs() < 3.0 * se, "mean {}", stats.mean);
    }

    #[test]
    fn linear_step_ramps_over_day() {
        let ticks = day_ticks(60);
        let samples =
            generate_currents(&spec(100.0, 340.0, GeneratorKind::LinearStep), &ticks, 0).unwrap();
        let currents: Vec<f64> = samples.iter().map(|s| s.current).collect();
        assert_eq!(currents[0], 100.0);
        assert_eq!(currents[12], 340.0);
        assert_eq!(currents[6], 220.0);
        assert_eq!(currents[18], 220.0);
        // equal steps up then down
        for h in 0..12 {
            assert!((currents[h + 1] - currents[h] - 20.0).abs() < 1e-9);
        }
        for h in 12..23 {
            assert!((currents[h] - currents[h + 1] - 20.0).abs() < 1e-9);
        }
    }

    #[test]
    fn generate_rejects_bad_input() {
        let s = spec(100.0, 500.0, GeneratorKind::UniformRandom);
        assert_eq!(
            generate_currents(&s, &[], 1),
            Err(Error::Empty("tick sequence"))
        );
        let inverted = spec(500.0, 100.0, GeneratorKind::UniformRandom);
        assert!(matches!(
            generate_currents(&inverted, &day_ticks(60), 1),
            Err(Error::InvalidBounds {
                lower_key: "i_min",
                upper_key: "i_max",
                ..
            })
        ));
        let t = ClockStamp::START;
        assert_eq!(
            generate_currents(&s, &[t, t], 1),
            Err(Error::TicksNotIncreasing(1))
        );
    }

    #[test]
    fn stats_examples() {
        let st = current_stats(&[200.0, 200.0, 200.0]).unwrap();
        assert_eq!((st.mean, st.std, st.n), (200.0, 0.0, 3));
        let st = current_stats(&[100.0, 200.0, 300.0]).unwrap();
        assert_eq!(st.mean, 200.0);
        assert!((st.std - (20000.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((st.std - 81.6497).abs() < 1e-4);
        let st = current_stats(&[150.0]).unwrap();
        assert_eq!((st.mean, st.std), (150.0, 0.0));
        assert_eq!(current_stats::<f64>(&[]), Err(Error::Empty("load samples")));
        let st = current_stats(&[0.1, 0.1, 0.1]).unwrap();
        assert_eq!(st.std, 0.0);
    }

    #[test]
    fn filter_examples() {
        assert_eq!(
            filter_suboptimal_k(&[0.4, 0.6, 0.8], 0.5, 0.9),
            vec![0, 1, 1]
        );
        assert_eq!(filter_suboptimal_k(&[0.5, 0.9], 0.5, 0.9), vec![0, 0]);
        assert!(filter_suboptimal_k::<f64>(&[], 0.5, 0.9).is_empty());
    }

    proptest! {
        #[test]
        fn currents_stay_in_range(seed: u64, lo in 0.0f64..1000.0, width in 0.0f64..1000.0) {
            let s = spec(lo, lo + width, GeneratorKind::UniformRandom);
            for sample in generate_currents(&s, &day_ticks(15), seed).unwrap() {
                prop_assert!(sample.current >= s.i_min && sample.current <= s.i_max);
                prop_assert_eq!(sample.k, sample.current / s.i_rated);
            }
        }

        #[test]
        fn k_factor_is_linear(c in 0.0f64..1e4, a in 0.0f64..100.0, r in 1.0f64..1e4) {
            let lhs = k_factor(a * c, r).unwrap();
            let rhs = a * k_factor(c, r).unwrap();
            prop_assert!(crate::scalar::rel_diff(lhs, rhs) <= 1e-12);
        }

        #[test]
        fn stats_match_two_pass(xs in proptest::collection::vec(0.0f64..1e4, 1..500)) {
            let st = current_stats(&xs).unwrap();
            let n = xs.len() as f64;
            let mean = xs.iter().sum::<f64>() / n;
            let std = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n).sqrt();
            prop_assert!(crate::scalar::rel_diff(st.mean, mean) <= 1e-9);
            prop_assert!((st.std - std).abs() <= 1e-9 * mean.max(1.0));
        }

        #[test]
        fn filter_count_matches_scan(ks in proptest::collection::vec(0.0f64..2.0, 0..200)) {
            let ones: usize = filter_suboptimal_k(&ks, 0.5, 1.2).iter().map(|&b| b as usize).sum();
            let mut count = 0;
            for k in &ks {
                if *k > 0.5 && *k < 1.2 {
                    count += 1;
                }
            }
            prop_assert_eq!(ones, count);
        }
    }
}
