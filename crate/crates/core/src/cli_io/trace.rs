//! Per-tick trace CSV.
//!
//! Reals are written with `Display`, the shortest text that parses back to
//! the identical value, so a trace read back is bit-exact.

use std::io::{self, Read, Write};

use crate::algoc::ClockStamp;
use crate::engine::{SimulationResult, TickRecord};
use crate::scalar::Real;

pub const TRACE_HEADER: [&str; 14] = [
    "tick",
    "year",
    "day",
    "hour",
    "minute",
    "current_a",
    "k_factor",
    "dto_c",
    "dtw_c",
    "dta_c",
    "ths_c",
    "faa",
    "cum_life_h",
    "rol_pct",
];

fn csv_err(err: csv::Error) -> io::Error {
    match err.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::new(io::ErrorKind::InvalidData, format!("{other:?}")),
    }
}

pub fn write_trace<T: Real, W: Write>(result: &SimulationResult<T>, sink: W) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(TRACE_HEADER).map_err(csv_err)?;
    for (i, t) in result.ticks.iter().enumerate() {
        let s = t.stamp;
        w.write_record([
            i.to_string(),
            s.year().to_string(),
            s.day().to_string(),
            s.hour().to_string(),
            s.minute().to_string(),
            t.current.to_string(),
            t.k.to_string(),
            t.dto.to_string(),
            t.dtw.to_string(),
            t.dta.to_string(),
            t.t_hs.to_string(),
            t.faa.to_string(),
            t.cum_life.to_string(),
            t.rol.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()
}

/// Reads a trace written by [`write_trace`].
pub fn read_trace<T: Real, R: Read>(source: R) -> io::Result<Vec<TickRecord<T>>> {
    let mut r = csv::Reader::from_reader(source);
    let header = r.headers().map_err(csv_err)?;
    if header.iter().ne(TRACE_HEADER) {
        return Err(invalid("unexpected trace header".into()));
    }
    let mut out = Vec::new();
    for (row, record) in r.records().enumerate() {
        let record = record.map_err(csv_err)?;
        let field = |i: usize| -> io::Result<&str> {
            record.get(i).ok_or_else(|| {
                invalid(format!(
                    "row {}: missing column {}",
                    row + 1,
                    TRACE_HEADER[i]
                ))
            })
        };
        let int = |i: usize| -> io::Result<u32> {
            field(i)?
                .parse()
                .map_err(|_| invalid(format!("row {}: bad {}", row + 1, TRACE_HEADER[i])))
        };
        let real = |i: usize| -> io::Result<T> {
            field(i)?
                .parse()
                .map_err(|_| invalid(format!("row {}: bad {}", row + 1, TRACE_HEADER[i])))
        };
        let stamp = ClockStamp::new(int(1)?, int(2)?, int(3)?, int(4)?)
            .map_err(|e| invalid(format!("row {}: {e}", row + 1)))?;
        out.push(TickRecord {
            stamp,
            current: real(5)?,
            k: real(6)?,
            dto: real(7)?,
            dtw: real(8)?,
            dta: real(9)?,
            t_hs: real(10)?,
            faa: real(11)?,
            cum_life: real(12)?,
            rol: real(13)?,
        });
    }
    Ok(out)
}

fn invalid(msg: String) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg)
}
