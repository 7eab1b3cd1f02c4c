//! Configuration files, trace CSV and summary output.

mod config;
mod summary;
mod trace;

pub use config::{parse_config, to_config_text, ConfigError, KEYS};
pub use summary::{read_xy, write_bench_table, write_fit, write_summary, BENCH_FIT_DEGREE};
pub use trace::{read_trace, write_trace, TRACE_HEADER};
