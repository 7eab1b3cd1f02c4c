//! Algorithmic clock: a calendar-shaped time base of years, days, hours and
//! minutes that sequences every tick of a simulation.
//!
//! Years are fixed at 365 days. The clock never consults the wall clock.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Real;

pub const DAYS_PER_YEAR: u32 = 365;
pub const MINUTES_PER_HOUR: u64 = 60;
pub const MINUTES_PER_DAY: u64 = 24 * MINUTES_PER_HOUR;
pub const MINUTES_PER_YEAR: u64 = DAYS_PER_YEAR as u64 * MINUTES_PER_DAY;

/// Tick intervals that divide an hour evenly.
pub const VALID_INTERVALS: [u32; 12] = [1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60];

pub const DEFAULT_INTERVAL_MINUTES: u32 = 15;

/// Calendar position of a tick. Field order makes the derived ordering
/// lexicographic over (year, day, hour, minute).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClockStamp {
    year: u32,
    day: u32,
    hour: u32,
    minute: u32,
}

impl ClockStamp {
    /// Year 1, day 1, 00:00.
    pub const START: ClockStamp = ClockStamp {
        year: 1,
        day: 1,
        hour: 0,
        minute: 0,
    };

    pub fn new(year: u32, day: u32, hour: u32, minute: u32) -> Result<Self> {
        if year < 1 {
            return Err(invalid("year", format!("{year} is below 1")));
        }
        if !(1..=DAYS_PER_YEAR).contains(&day) {
            return Err(invalid("day", format!("{day} is outside [1, 365]")));
        }
        if hour > 23 {
            return Err(invalid("hour", format!("{hour} is outside [0, 23]")));
        }
        if minute > 59 {
            return Err(invalid("minute", format!("{minute} is outside [0, 59]")));
        }
        Ok(Self {
            year,
            day,
            hour,
            minute,
        })
    }

    pub fn year(&self) -> u32 {
        self.year
    }

    pub fn day(&self) -> u32 {
        self.day
    }

    pub fn hour(&self) -> u32 {
        self.hour
    }

    pub fn minute(&self) -> u32 {
        self.minute
    }

    /// Minutes elapsed since [`ClockStamp::START`].
    pub fn minutes_since_start(&self) -> u64 {
        (self.year as u64 - 1) * MINUTES_PER_YEAR
            + (self.day as u64 - 1) * MINUTES_PER_DAY
            + self.hour as u64 * MINUTES_PER_HOUR
            + self.minute as u64
    }

    fn from_minutes_since_start(total: u64) -> Self {
        let year = total / MINUTES_PER_YEAR;
        let rem = total % MINUTES_PER_YEAR;
        let day = rem / MINUTES_PER_DAY;
        let rem = rem % MINUTES_PER_DAY;
        Self {
            year: (year + 1) as u32,
            day: (day + 1) as u32,
            hour: (rem / MINUTES_PER_HOUR) as u32,
            minute: (rem % MINUTES_PER_HOUR) as u32,
        }
    }

    /// Index of the simulated hour this stamp falls in, counted from the start.
    pub fn hour_index(&self) -> u64 {
        self.minutes_since_start() / MINUTES_PER_HOUR
    }

    /// Minutes since midnight of the stamp's day.
    pub fn minute_of_day(&self) -> u32 {
        self.hour * 60 + self.minute
    }
}

impl fmt::Display for ClockStamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y{} d{} {:02}:{:02}",
            self.year, self.day, self.hour, self.minute
        )
    }
}

fn invalid(key: &'static str, reason: String) -> Error {
    Error::InvalidValue { key, reason }
}

/// Returns the stamp `minutes` later, carrying into hours, days and years.
pub fn advance(stamp: ClockStamp, minutes: u32) -> ClockStamp {
    ClockStamp::from_minutes_since_start(stamp.minutes_since_start() + minutes as u64)
}

/// Hours between two stamps.
pub fn elapsed_hours<T: Real>(start: ClockStamp, end: ClockStamp) -> Result<T> {
    if start > end {
        return Err(Error::OutOfOrder { start, end });
    }
    let minutes = end.minutes_since_start() - start.minutes_since_start();
    let whole = minutes / MINUTES_PER_HOUR;
    let part = minutes % MINUTES_PER_HOUR;
    Ok(T::from_u64(whole).expect("hour count representable")
        + T::from_u64(part).unwrap() / T::lit(60.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TickConfig {
    interval_minutes: u32,
    horizon_years: u32,
}

impl TickConfig {
    pub fn new(interval_minutes: u32, horizon_years: u32) -> Result<Self> {
        if !VALID_INTERVALS.contains(&interval_minutes) {
            return Err(Error::InvalidInterval(interval_minutes));
        }
        if horizon_years < 1 {
            return Err(Error::InvalidHorizon);
        }
        Ok(Self {
            interval_minutes,
            horizon_years,
        })
    }

    pub fn interval_minutes(&self) -> u32 {
        self.interval_minutes
    }

    pub fn horizon_years(&self) -> u32 {
        self.horizon_years
    }

    pub fn with_horizon(&self, horizon_years: u32) -> Result<Self> {
        Self::new(self.interval_minutes, horizon_years)
    }

    /// Tick length in hours.
    pub fn dt_hours<T: Real>(&self) -> T {
        T::from_u32(self.interval_minutes).unwrap() / T::lit(60.0)
    }

    /// Stamps of every tick, starting at [`ClockStamp::START`].
    pub fn stamps(&self) -> impl Iterator<Item = ClockStamp> + '_ {
        let interval = self.interval_minutes;
        let mut current = ClockStamp::START;
        (0..tick_count(self)).map(move |_| {
            let stamp = current;
            current = advance(current, interval);
            stamp
        })
    }
}

impl Default for TickConfig {
    fn default() -> Self {
        Self {
            interval_minutes: DEFAULT_INTERVAL_MINUTES,
            horizon_years: 1,
        }
    }
}

/// Number of ticks in the configured horizon.
pub fn tick_count(cfg: &TickConfig) -> u64 {
    cfg.horizon_years as u64 * DAYS_PER_YEAR as u64 * 24 * (60 / cfg.interval_minutes as u64)
}
