//! Line-oriented `key = value` configuration files.
//!
//! Blank lines and `#` comments are ignored. Unknown and duplicate keys are
//! rejected. Everything is required except `zeta`, `coupling`, `k_rtl` and
//! `replicates`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::aging::DEFAULT_K_RTL;
use crate::algoc::TickConfig;
use crate::engine::SimConfig;
use crate::error::Error;
use crate::loadgen::{GeneratorKind, LoadSpec};
use crate::scalar::Real;
use crate::thermal::{Coupling, ThermalSpec, DEFAULT_ZETA};

/// Every accepted key, in canonical output order.
pub const KEYS: [&str; 19] = [
    "interval_minutes",
    "horizon_years",
    "i_rated",
    "i_min",
    "i_max",
    "k_min",
    "k_max",
    "generator_kind",
    "dto_min",
    "dto_max",
    "dtw_min",
    "dtw_max",
    "dta_min",
    "dta_max",
    "zeta",
    "coupling",
    "k_rtl",
    "seed",
    "replicates",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}` (first set on line {first})")]
    DuplicateKey {
        line: usize,
        key: String,
        first: usize,
    },
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error("line {line}: cannot parse `{value}` as a value for `{key}`")]
    Parse {
        line: usize,
        key: &'static str,
        value: String,
    },
    #[error("{source} (line {})", join_lines(.lines))]
    Invalid { lines: Vec<usize>, source: Error },
}

fn join_lines(lines: &[usize]) -> String {
    lines
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

struct Entries<'a> {
    values: HashMap<&'static str, (usize, &'a str)>,
}

impl<'a> Entries<'a> {
    fn parse(text: &'a str) -> Result<Self, ConfigError> {
        let mut values: HashMap<&'static str, (usize, &'a str)> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or(ConfigError::Syntax { line })?;
            let (key, value) = (key.trim(), value.trim());
            if key.is_empty() || value.is_empty() {
                return Err(ConfigError::Syntax { line });
            }
            let known =
                *KEYS
                    .iter()
                    .find(|&&k| k == key)
                    .ok_or_else(|| ConfigError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })?;
            if let Some(&(first, _)) = values.get(known) {
                return Err(ConfigError::DuplicateKey {
                    line,
                    key: known.to_string(),
                    first,
                });
            }
            values.insert(known, (line, value));
        }
        Ok(Self { values })
    }

    fn line(&self, key: &str) -> usize {
        self.values.get(key).map(|&(l, _)| l).unwrap_or(0)
    }

    fn get<V: std::str::FromStr>(&self, key: &'static str) -> Result<Option<V>, ConfigError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(&(line, value)) => value.parse().map(Some).map_err(|_| ConfigError::Parse {
                line,
                key,
                value: value.to_string(),
            }),
        }
    }

    fn require<V: std::str::FromStr>(&self, key: &'static str) -> Result<V, ConfigError> {
        self.get(key)?.ok_or(ConfigError::MissingKey(key))
    }

    fn require_with<V>(
        &self,
        key: &'static str,
        parse: impl Fn(&str) -> Option<V>,
    ) -> Result<Option<V>, ConfigError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(&(line, value)) => parse(value).map(Some).ok_or_else(|| ConfigError::Parse {
                line,
                key,
                value: value.to_string(),
            }),
        }
    }

    /// Attaches the lines of the keys an invariant error refers to.
    fn invalid(&self, source: Error) -> ConfigError {
        let keys: Vec<&str> = match &source {
            Error::InvalidBounds {
                lower_key,
                upper_key,
                ..
            } => vec![lower_key, upper_key],
            Error::InvalidValue { key, .. } => vec![key],
            Error::InvalidInterval(_) => vec!["interval_minutes"],
            Error::InvalidHorizon => vec!["horizon_years"],
            Error::NonPositiveRated(_) => vec!["i_rated"],
            Error::NonPositiveLife(_) => vec!["k_rtl"],
            _ => vec![],
        };
        let mut lines: Vec<usize> = keys
            .iter()
            .map(|k| self.line(k))
            .filter(|&l| l > 0)
            .collect();
        lines.sort_unstable();
        lines.dedup();
        ConfigError::Invalid { lines, source }
    }
}

/// Parses and fully validates a configuration file.
pub fn parse_config<T: Real>(text: &str) -> Result<SimConfig<T>, ConfigError> {
    let e = Entries::parse(text)?;

    // First missing required key, in canonical order.
    for key in KEYS {
        let optional = matches!(key, "zeta" | "coupling" | "k_rtl" | "replicates");
        if !optional && !e.values.contains_key(key) {
            return Err(ConfigError::MissingKey(key));
        }
    }

    let tick = TickConfig::new(e.require("interval_minutes")?, e.require("horizon_years")?)
        .map_err(|err| e.invalid(err))?;
    let load = LoadSpec {
        i_rated: e.require("i_rated")?,
        i_min: e.require("i_min")?,
        i_max: e.require("i_max")?,
        k_min: e.require("k_min")?,
        k_max: e.require("k_max")?,
        generator: e
            .require_with("generator_kind", GeneratorKind::parse)?
            .ok_or(ConfigError::MissingKey("generator_kind"))?,
    };
    let thermal = ThermalSpec {
        dto_min: e.require("dto_min")?,
        dto_max: e.require("dto_max")?,
        dtw_min: e.require("dtw_min")?,
        dtw_max: e.require("dtw_max")?,
        dta_min: e.require("dta_min")?,
        dta_max: e.require("dta_max")?,
        zeta: e.get("zeta")?.unwrap_or_else(|| T::lit(DEFAULT_ZETA)),
        coupling: e
            .require_with("coupling", Coupling::parse)?
            .unwrap_or_default(),
    };
    let cfg = SimConfig {
        tick,
        load,
        thermal,
        k_rtl: e.get("k_rtl")?.unwrap_or_else(|| T::lit(DEFAULT_K_RTL)),
        seed: e.require("seed")?,
        replicates: e.get("replicates")?.unwrap_or(1),
    };
    cfg.validate().map_err(|err| e.invalid(err))?;
    Ok(cfg)
}

/// Renders a configuration with every key present, in canonical order.
pub fn to_config_text<T: Real>(cfg: &SimConfig<T>) -> String {
    let mut out = String::new();
    let mut put = |key: &str, value: &dyn std::fmt::Display| {
        writeln!(out, "{key} = {value}").expect("writing to String");
    };
    put("interval_minutes", &cfg.tick.interval_minutes());
    put("horizon_years", &cfg.tick.horizon_years());
    put("i_rated", &cfg.load.i_rated);
    put("i_min", &cfg.load.i_min);
    put("i_max", &cfg.load.i_max);
    put("k_min", &cfg.load.k_min);
    put("k_max", &cfg.load.k_max);
    put("generator_kind", &cfg.load.generator.as_str());
    put("dto_min", &cfg.thermal.dto_min);
    put("dto_max", &cfg.thermal.dto_max);
    put("dtw_min", &cfg.thermal.dtw_min);
    put("dtw_max", &cfg.thermal.dtw_max);
    put("dta_min", &cfg.thermal.dta_min);
    put("dta_max", &cfg.thermal.dta_max);
    put("zeta", &cfg.thermal.zeta);
    put("coupling", &cfg.thermal.coupling.as_str());
    put("k_rtl", &cfg.k_rtl);
    put("seed", &cfg.seed);
    put("replicates", &cfg.replicates);
    out
}
