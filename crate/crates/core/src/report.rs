//! Output records and their JSON, JSON-lines, CSV and human renderings.
//!
//! Machine formats print floats with 17 significant digits so values parse
//! back bit for bit; the human format uses 6.

use std::io::Write;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;
use thiserror::Error;

use crate::pressure::PressureResult;
use crate::series::OrderSumResult;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("non-finite value in field {0}")]
    NonFinite(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One object, or an array when there are several records.
    Json,
    /// One JSON object per line.
    Jsonl,
    Csv,
    Human,
}

/// 17 significant digits, the shortest width that always round-trips.
pub fn fmt_machine(v: f64) -> String {
    format!("{v:.16e}")
}

/// 6 significant digits.
pub fn fmt_human(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..6).contains(&exp) {
        format!("{:.*}", (5 - exp) as usize, v)
    } else {
        format!("{v:.5e}")
    }
}

fn ser_f64<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if !v.is_finite() {
        return Err(serde::ser::Error::custom("non-finite float"));
    }
    let raw = RawValue::from_string(fmt_machine(*v)).map_err(serde::ser::Error::custom)?;
    raw.serialize(s)
}

fn ser_opt_f64<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_f64(v, s),
        None => s.serialize_none(),
    }
}

/// One computed result. There is deliberately no field combining boundary
/// conditions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub bc: String,
    /// Built-in material name, or `custom`.
    pub material: String,
    #[serde(serialize_with = "ser_f64")]
    pub a_meters: f64,
    #[serde(serialize_with = "ser_f64")]
    pub omega_p: f64,
    #[serde(serialize_with = "ser_f64")]
    pub x_cutoff: f64,
    #[serde(serialize_with = "ser_f64")]
    pub sigma: f64,
    #[serde(serialize_with = "ser_f64")]
    pub force_coeff: f64,
    #[serde(serialize_with = "ser_opt_f64")]
    pub si_force: Option<f64>,
    pub m_used: u32,
    pub converged: bool,
    #[serde(serialize_with = "ser_f64")]
    pub tail_estimate: f64,
}

impl OutputRecord {
    pub const FIELDS: [&'static str; 11] = [
        "bc",
        "material",
        "a_meters",
        "omega_p",
        "x_cutoff",
        "sigma",
        "force_coeff",
        "si_force",
        "m_used",
        "converged",
        "tail_estimate",
    ];

    pub fn from_result(res: &PressureResult, material: &str, a_meters: f64, omega_p: f64) -> Self {
        OutputRecord {
            bc: res.bc.as_str().to_string(),
            material: material.to_string(),
            a_meters,
            omega_p,
            x_cutoff: res.x_cutoff,
            sigma: res.sigma,
            force_coeff: res.force_coeff.unwrap_or(2.0 * std::f64::consts::PI * res.stress_coeff),
            si_force: res.si_force,
            m_used: res.m_used(),
            converged: res.converged(),
            tail_estimate: res.tail_estimate(),
        }
    }

    fn check_finite(&self) -> Result<(), ReportError> {
        let fields = [
            ("a_meters", self.a_meters),
            ("omega_p", self.omega_p),
            ("x_cutoff", self.x_cutoff),
            ("sigma", self.sigma),
            ("force_coeff", self.force_coeff),
            ("si_force", self.si_force.unwrap_or(0.0)),
            ("tail_estimate", self.tail_estimate),
        ];
        match fields.iter().find(|(_, v)| !v.is_finite()) {
            Some((name, _)) => Err(ReportError::NonFinite(name)),
            None => Ok(()),
        }
    }

    fn csv_row(&self) -> [String; 11] {
        [
            self.bc.clone(),
            self.material.clone(),
            fmt_machine(self.a_meters),
            fmt_machine(self.omega_p),
            fmt_machine(self.x_cutoff),
            fmt_machine(self.sigma),
            fmt_machine(self.force_coeff),
            self.si_force.map(fmt_machine).unwrap_or_default(),
            self.m_used.to_string(),
            self.converged.to_string(),
            fmt_machine(self.tail_estimate),
        ]
    }

    fn human(&self) -> String {
        let si = self
            .si_force
            .map(|v| format!("{} N/m", fmt_human(v)))
            .unwrap_or_else(|| "-".into());
        format!(
            "bc            {}\n\
             material      {}\n\
             a             {} m\n\
             omega_p       {} rad/s\n\
             x_cutoff      {}\n\
             sigma         {}\n\
             force_coeff   {}  (x hbar c / a^2)\n\
             si_force      {}  (per metre of length)\n\
             m_used        {}\n\
             converged     {}\n\
             tail_estimate {}\n",
            self.bc,
            self.material,
            fmt_human(self.a_meters),
            fmt_human(self.omega_p),
            fmt_human(self.x_cutoff),
            fmt_human(self.sigma),
            fmt_human(self.force_coeff),
            si,
            self.m_used,
            self.converged,
            fmt_human(self.tail_estimate),
        )
    }
}

/// Streams records; CSV gets its header before the first row and JSON
/// arrays are closed by [`RecordWriter::finish`].
pub struct RecordWriter<W: Write> {
    out: W,
    format: Format,
    count: usize,
    array: bool,
}

impl<W: Write> RecordWriter<W> {
    /// With `array`, the `json` format always emits an array.
    pub fn new(out: W, format: Format, array: bool) -> Self {
        RecordWriter {
            out,
            format,
            count: 0,
            array,
        }
    }

    pub fn write(&mut self, rec: &OutputRecord) -> Result<(), ReportError> {
        rec.check_finite()?;
        match self.format {
            Format::Json => {
                let sep = if self.count == 0 {
                    if self.array {
                        "[\n"
                    } else {
                        ""
                    }
                } else {
                    ",\n"
                };
                write!(self.out, "{sep}{}", serde_json::to_string_pretty(rec)?)?;
            }
            Format::Jsonl => writeln!(self.out, "{}", serde_json::to_string(rec)?)?,
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .has_headers(false)
                    .from_writer(&mut self.out);
                if self.count == 0 {
                    w.write_record(OutputRecord::FIELDS)?;
                }
                w.write_record(rec.csv_row())?;
                w.flush()?;
            }
            Format::Human => {
                if self.count > 0 {
                    writeln!(self.out)?;
                }
                write!(self.out, "{}", rec.human())?;
            }
        }
        self.count += 1;
        Ok(())
    }

    pub fn finish(mut self) -> Result<W, ReportError> {
        if self.format == Format::Json {
            if self.array {
                if self.count == 0 {
                    write!(self.out, "[")?;
                }
                writeln!(self.out, "\n]")?;
            } else if self.count > 0 {
                writeln!(self.out)?;
            }
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

/// Write all records; `json` gives an object for one record, else an array.
pub fn write_records<W: Write>(
    out: W,
    records: &[OutputRecord],
    format: Format,
) -> Result<W, ReportError> {
    let mut w = RecordWriter::new(out, format, records.len() != 1);
    for r in records {
        w.write(r)?;
    }
    w.finish()
}

/// Parse a JSON object, a JSON array, or JSON lines.
pub fn parse_json_records(text: &str) -> Result<Vec<OutputRecord>, ReportError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return Ok(serde_json::from_str(trimmed)?);
    }
    serde_json::Deserializer::from_str(trimmed)
        .into_iter::<OutputRecord>()
        .map(|r| r.map_err(ReportError::from))
        .collect()
}

pub fn parse_csv_records(text: &str) -> Result<Vec<OutputRecord>, ReportError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(ReportError::from))
        .collect()
}

/// One line of a convergence report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub family: String,
    pub m: u32,
    #[serde(serialize_with = "ser_f64")]
    pub contribution: f64,
    /// Sum of contributions over `1..=m`.
    #[serde(serialize_with = "ser_f64")]
    pub order_sum: f64,
    /// `c_0 + 2 order_sum`.
    #[serde(serialize_with = "ser_f64")]
    pub total: f64,
}

impl ConvergenceRow {
    pub const FIELDS: [&'static str; 5] = ["family", "m", "contribution", "order_sum", "total"];
}

pub fn convergence_rows(sum: &OrderSumResult) -> Vec<ConvergenceRow> {
    sum.partial_sums()
        .into_iter()
        .map(|r| ConvergenceRow {
            family: sum.kind.as_str().to_string(),
            m: r.m,
            contribution: r.contribution,
            order_sum: r.order_sum,
            total: r.total,
        })
        .collect()
}

pub fn write_convergence<W: Write>(
    mut out: W,
    rows: &[ConvergenceRow],
    format: Format,
) -> Result<W, ReportError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
        Format::Jsonl => {
            for r in rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(ConvergenceRow::FIELDS)?;
            for r in rows {
                w.write_record([
                    r.family.clone(),
                    r.m.to_string(),
                    fmt_machine(r.contribution),
                    fmt_machine(r.order_sum),
                    fmt_machine(r.total),
                ])?;
            }
            w.flush()?;
        }
        Format::Human => {
            writeln!(
                out,
                "{:<10} {:>6} {:>14} {:>14} {:>14}",
                "family", "m", "contribution", "order_sum", "total"
            )?;
            for r in rows {
                writeln!(
                    out,
                    "{:<10} {:>6} {:>14} {:>14} {:>14}",
                    r.family,
                    r.m,
                    fmt_human(r.contribution),
                    fmt_human(r.order_sum),
                    fmt_human(r.total)
                )?;
            }
        }
    }
    out.flush()?;
    Ok(out)
}

pub fn parse_convergence_csv(text: &str) -> Result<Vec<ConvergenceRow>, ReportError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(ReportError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        OutputRecord {
            bc: "neumann".into(),
            material: "gold".into(),
            a_meters: 1e-7,
            omega_p: 1.37e16,
            x_cutoff: 1.37e16 * 1e-7 / 3e8,
            sigma: 34.214_147_123_456_78,
            force_coeff: -34.214_147_123_456_78 / std::f64::consts::PI,
            si_force: None,
            m_used: 1000,
            converged: false,
            tail_estimate: 0.063_461,
        }
    }

    #[test]
    fn human_digits() {
        assert_eq!(fmt_human(4.566666666), "4.56667");
        assert_eq!(fmt_human(-10.890701), "-10.8907");
        assert_eq!(fmt_human(1.37e16), "1.37000e16");
        assert_eq!(fmt_human(0.000123456789), "0.000123457");
    }

    #[test]
    fn json_and_csv_round_trip() {
        let mut recs = vec![sample(), sample()];
        recs[1].si_force = Some(-3.4e-12);
        for fmt in [Format::Json, Format::Jsonl] {
            let out = write_records(Vec::new(), &recs, fmt).unwrap();
            let back = parse_json_records(std::str::from_utf8(&out).unwrap()).unwrap();
            assert_eq!(back, recs);
        }
        let single = write_records(Vec::new(), &recs[..1], Format::Json).unwrap();
        assert_eq!(parse_json_records(std::str::from_utf8(&single).unwrap()).unwrap(), recs[..1]);
        let out = write_records(Vec::new(), &recs, Format::Csv).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().next().unwrap(), OutputRecord::FIELDS.join(","));
        assert_eq!(parse_csv_records(&text).unwrap(), recs);
    }

    #[test]
    fn rejects_non_finite() {
        let mut r = sample();
        r.sigma = f64::NAN;
        assert!(write_records(Vec::new(), &[r], Format::Csv).is_err());
    }
}
