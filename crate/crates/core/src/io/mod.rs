//! Files in and out: scenario configs, series exports, charts and sweeps.

pub mod config;
pub mod export;
pub mod plot;
pub mod sweep;

pub use config::{parse_config, serialize_config, ConfigError};
pub use export::{export_series, write_series, ExportFormat, CSV_COLUMNS};
pub use plot::{emit_plots, PlotError};
pub use sweep::{parse_sweep_spec, run_sweep, SweepError, SweepReport, SweepSpec};
