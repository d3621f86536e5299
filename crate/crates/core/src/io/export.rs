//! Per-week time series as CSV or JSON lines.
//!
//! Column order is fixed:
//!
//! ```text
//! week, p_c, p_nk, p_ok, p_w, K_stock, labor_exante, labor_expost,
//! capital_rented, output_consumer, output_capital, consumption_expost,
//! newcap_expost, real_wage_ratio, rich_O_al, rich_freetime, clamp_count
//! ```
//!
//! Prices are those in force during the week. Reals are written as the
//! shortest decimal that parses back to the same `f64`.

use std::io::Write;

use serde::Serialize;
use thiserror::Error;

use crate::engine::{SimulationSeries, WeekRecord};

pub const CSV_COLUMNS: [&str; 17] = [
    "week",
    "p_c",
    "p_nk",
    "p_ok",
    "p_w",
    "K_stock",
    "labor_exante",
    "labor_expost",
    "capital_rented",
    "output_consumer",
    "output_capital",
    "consumption_expost",
    "newcap_expost",
    "real_wage_ratio",
    "rich_O_al",
    "rich_freetime",
    "clamp_count",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    JsonLines,
}

impl ExportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ExportFormat::Csv => "csv",
            ExportFormat::JsonLines => "jsonl",
        }
    }
}

impl std::str::FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ExportFormat::Csv),
            "jsonl" | "json-lines" => Ok(ExportFormat::JsonLines),
            other => Err(format!("unknown export format `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// One exported row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesRow {
    pub week: u64,
    pub p_c: f64,
    pub p_nk: f64,
    pub p_ok: f64,
    pub p_w: f64,
    #[serde(rename = "K_stock")]
    pub k_stock: f64,
    pub labor_exante: f64,
    pub labor_expost: f64,
    pub capital_rented: f64,
    pub output_consumer: f64,
    pub output_capital: f64,
    pub consumption_expost: f64,
    pub newcap_expost: f64,
    pub real_wage_ratio: f64,
    #[serde(rename = "rich_O_al")]
    pub rich_o_al: f64,
    pub rich_freetime: f64,
    pub clamp_count: u32,
}

impl From<&WeekRecord> for SeriesRow {
    fn from(r: &WeekRecord) -> Self {
        SeriesRow {
            week: r.week,
            p_c: r.prices_before.p_c,
            p_nk: r.prices_before.p_nk,
            p_ok: r.prices_before.p_ok,
            p_w: r.prices_before.p_w,
            k_stock: r.capital_stock,
            labor_exante: r.labor_ex_ante(),
            labor_expost: r.labor_ex_post(),
            capital_rented: r.capital_rented(),
            output_consumer: r.output_consumer,
            output_capital: r.output_capital,
            consumption_expost: r.consumption(),
            newcap_expost: r.new_capital_bought(),
            real_wage_ratio: r.real_wage_ratio,
            rich_o_al: r.rich_plan.supply_labor,
            rich_freetime: r.rich_plan.free_time,
            clamp_count: r.diagnostics.clamp_count,
        }
    }
}

pub fn rows(series: &SimulationSeries) -> Vec<SeriesRow> {
    series.records.iter().map(SeriesRow::from).collect()
}

pub fn write_series<W: Write>(
    series: &SimulationSeries,
    format: ExportFormat,
    out: W,
) -> Result<(), ExportError> {
    match format {
        ExportFormat::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            writer.write_record(CSV_COLUMNS)?;
            for row in rows(series) {
                writer.serialize(row)?;
            }
            writer.flush()?;
        }
        ExportFormat::JsonLines => {
            let mut out = out;
            for row in rows(series) {
                serde_json::to_writer(&mut out, &row)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

/// The series rendered as a complete document.
pub fn export_series(series: &SimulationSeries, format: ExportFormat) -> String {
    let mut buf = Vec::new();
    write_series(series, format, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("exports are UTF-8")
}
