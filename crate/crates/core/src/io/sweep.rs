//! Cartesian parameter sweeps.
//!
//! A sweep spec is a flat document in the config format with three extra
//! kinds of line:
//!
//! ```text
//! base = scenarios/mixed.conf    # optional, relative to this file
//! window = 201                   # trailing weeks used for classification
//! max_combinations = 10000
//! sweep.populations.n_poor = 0, 1
//! sweep.varmax = 0.001, 0.003, 0.01
//! varmax = 0.002                 # plain keys override the base config
//! ```
//!
//! Combinations are enumerated with the last axis varying fastest and the
//! report is ordered by that index whatever the degree of parallelism.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::economy::{validate_config, ScenarioConfig};
use crate::engine::{classify_regime, run_simulation, Regime, Termination};
use crate::io::config::{apply_document, set_field, split_line, ConfigError};
use crate::scenarios::scenario_mixed;

pub const DEFAULT_WINDOW: usize = 201;
pub const DEFAULT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepAxis {
    pub key: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: ScenarioConfig,
    pub axes: Vec<SweepAxis>,
    pub window: usize,
    pub max_combinations: usize,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("sweep has {count} combinations, more than the cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("sweep axis `{key}`: {message}")]
    BadAxis { key: String, message: String },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("building worker pool: {0}")]
    Pool(String),
}

/// Outcome of one combination.
#[derive(Debug, Clone, PartialEq)]
pub enum RowOutcome {
    Classified {
        regime: Regime,
        termination: Termination,
        weeks: usize,
        final_capital: f64,
        final_real_wage: f64,
    },
    Invalid(String),
    Diverged(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub index: usize,
    pub values: Vec<String>,
    pub outcome: RowOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub keys: Vec<String>,
    pub rows: Vec<SweepRow>,
}

impl SweepSpec {
    pub fn new(base: ScenarioConfig) -> Self {
        Self {
            base,
            axes: Vec::new(),
            window: DEFAULT_WINDOW,
            max_combinations: DEFAULT_CAP,
        }
    }

    /// Adds an axis after checking the key exists and every value parses.
    pub fn with_axis<S: ToString>(
        mut self,
        key: &str,
        values: impl IntoIterator<Item = S>,
    ) -> Result<Self, SweepError> {
        let values: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
        if values.is_empty() {
            return Err(SweepError::BadAxis {
                key: key.to_string(),
                message: "no values".to_string(),
            });
        }
        if self.axes.iter().any(|a| a.key == key) {
            return Err(SweepError::BadAxis {
                key: key.to_string(),
                message: "axis listed twice".to_string(),
            });
        }
        let mut probe = self.base;
        for v in &values {
            set_field(&mut probe, key, v).map_err(|e| SweepError::BadAxis {
                key: key.to_string(),
                message: e.to_string(),
            })?;
        }
        self.axes.push(SweepAxis {
            key: key.to_string(),
            values,
        });
        Ok(self)
    }

    pub fn combination_count(&self) -> usize {
        self.axes
            .iter()
            .map(|a| a.values.len())
            .fold(1usize, |acc, n| acc.saturating_mul(n))
    }

    /// Axis values of combination `index`, last axis fastest.
    pub fn combination(&self, mut index: usize) -> Vec<&str> {
        let mut picked = vec![""; self.axes.len()];
        for (slot, axis) in picked.iter_mut().zip(&self.axes).rev() {
            let n = axis.values.len();
            *slot = &axis.values[index % n];
            index /= n;
        }
        picked
    }
}

/// Parses a sweep document. `base` lines are resolved against `dir`.
pub fn parse_sweep_spec(text: &str, dir: &Path) -> Result<SweepSpec, SweepError> {
    let mut base = scenario_mixed();
    let mut overrides = String::new();
    let mut axes: Vec<(String, Vec<String>)> = Vec::new();
    let mut window = DEFAULT_WINDOW;
    let mut cap = DEFAULT_CAP;
    let mut seen = HashSet::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let Some((key, value)) = split_line(line_no, line)? else {
            continue;
        };
        if !seen.insert(key.to_string()) {
            return Err(ConfigError::DuplicateKey {
                line: line_no,
                key: key.to_string(),
            }
            .into());
        }
        let count = |v: &str| {
            v.parse::<usize>().map_err(|_| ConfigError::SyntaxError {
                line: line_no,
                message: format!("`{key}` expects a non-negative integer"),
            })
        };
        match key {
            "base" => {
                let path = dir.join(value);
                let doc = std::fs::read_to_string(&path).map_err(|source| SweepError::Io {
                    path: path.clone(),
                    source,
                })?;
                base = apply_document(scenario_mixed(), &doc)?;
            }
            "window" => window = count(value)?,
            "max_combinations" => cap = count(value)?,
            _ => {
                if let Some(param) = key.strip_prefix("sweep.") {
                    let values = value.split(',').map(|v| v.trim().to_string()).collect();
                    axes.push((param.to_string(), values));
                } else {
                    writeln!(overrides, "{key} = {value}").unwrap();
                }
            }
        }
    }
    let base = apply_document(base, &overrides)?;
    let mut spec = SweepSpec {
        window,
        max_combinations: cap,
        ..SweepSpec::new(base)
    };
    for (key, values) in axes {
        spec = spec.with_axis(&key, values)?;
    }
    Ok(spec)
}

fn run_one(spec: &SweepSpec, index: usize) -> SweepRow {
    let values: Vec<String> = spec
        .combination(index)
        .into_iter()
        .map(String::from)
        .collect();
    let mut config = spec.base;
    for (axis, v) in spec.axes.iter().zip(&values) {
        set_field(&mut config, &axis.key, v).expect("axis values checked when added");
    }
    let outcome = match validate_config(config) {
        Err(e) => RowOutcome::Invalid(e.to_string()),
        Ok(valid) => match run_simulation(&valid) {
            Err(e) => RowOutcome::Diverged(e.to_string()),
            Ok(series) => match classify_regime(&series, spec.window) {
                Err(e) => RowOutcome::Invalid(e.to_string()),
                Ok(regime) => {
                    let last = series.last().expect("classified series are nonempty");
                    RowOutcome::Classified {
                        regime,
                        termination: series.termination,
                        weeks: series.len(),
                        final_capital: series.final_state().capital_stock,
                        final_real_wage: last.real_wage_ratio,
                    }
                }
            },
        },
    };
    SweepRow {
        index,
        values,
        outcome,
    }
}

/// Runs every combination on up to `jobs` threads.
pub fn run_sweep(spec: &SweepSpec, jobs: usize) -> Result<SweepReport, SweepError> {
    let count = spec.combination_count();
    if count > spec.max_combinations {
        return Err(SweepError::CapExceeded {
            count,
            cap: spec.max_combinations,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let rows = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| run_one(spec, i))
            .collect::<Vec<_>>()
    });
    Ok(SweepReport {
        keys: spec.axes.iter().map(|a| a.key.clone()).collect(),
        rows,
    })
}

impl SweepReport {
    /// CSV with one row per combination:
    /// `index, <axis keys...>, regime, collapse_onset, termination, weeks,
    /// final_K, final_real_wage_ratio`.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["index".to_string()];
        header.extend(self.keys.iter().cloned());
        header.extend(
            [
                "regime",
                "collapse_onset",
                "termination",
                "weeks",
                "final_K",
                "final_real_wage_ratio",
            ]
            .map(String::from),
        );
        writer.write_record(&header).unwrap();
        for row in &self.rows {
            let mut rec = vec![row.index.to_string()];
            rec.extend(row.values.iter().cloned());
            match &row.outcome {
                RowOutcome::Classified {
                    regime,
                    termination,
                    weeks,
                    final_capital,
                    final_real_wage,
                } => {
                    rec.push(regime.name().to_string());
                    rec.push(
                        regime
                            .onset_week()
                            .map(|w| w.to_string())
                            .unwrap_or_default(),
                    );
                    rec.push(
                        match termination {
                            Termination::HorizonReached => "horizon_reached",
                            Termination::CollapsedAbsorbing => "collapsed_absorbing",
                        }
                        .to_string(),
                    );
                    rec.push(weeks.to_string());
                    rec.push(format!("{final_capital:?}"));
                    rec.push(format!("{final_real_wage:?}"));
                }
                RowOutcome::Invalid(msg) | RowOutcome::Diverged(msg) => {
                    let tag = if matches!(row.outcome, RowOutcome::Invalid(_)) {
                        "invalid"
                    } else {
                        "diverged"
                    };
                    rec.push(tag.to_string());
                    rec.push(String::new());
                    rec.push(msg.clone());
                    rec.extend([String::new(), String::new(), String::new()]);
                }
            }
            writer.write_record(&rec).unwrap();
        }
        String::from_utf8(writer.into_inner().unwrap()).unwrap()
    }

    pub fn regimes(&self) -> Vec<Option<Regime>> {
        self.rows
            .iter()
            .map(|r| match r.outcome {
                RowOutcome::Classified { regime, .. } => Some(regime),
                _ => None,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_enumerate_last_axis_fastest() {
        let spec = SweepSpec::new(scenario_mixed())
            .with_axis("populations.n_poor", [0, 1])
            .unwrap()
            .with_axis("varmax", ["0.001", "0.002", "0.003"])
            .unwrap();
        assert_eq!(spec.combination_count(), 6);
        assert_eq!(spec.combination(0), vec!["0", "0.001"]);
        assert_eq!(spec.combination(2), vec!["0", "0.003"]);
        assert_eq!(spec.combination(4), vec!["1", "0.002"]);
    }

    #[test]
    fn bad_axes_are_rejected() {
        let spec = SweepSpec::new(scenario_mixed());
        assert!(spec.clone().with_axis("alpha_four", [1]).is_err());
        assert!(spec
            .clone()
            .with_axis("populations.n_poor", ["1.5"])
            .is_err());
        assert!(spec.with_axis::<f64>("varmax", []).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let mut spec = SweepSpec::new(scenario_mixed())
            .with_axis("populations.n_poor", 0..50)
            .unwrap()
            .with_axis("populations.n_rich", 0..50)
            .unwrap();
        spec.max_combinations = 100;
        assert!(matches!(
            run_sweep(&spec, 1),
            Err(SweepError::CapExceeded {
                count: 2500,
                cap: 100
            })
        ));
    }

    #[test]
    fn parses_spec_document() {
        let doc =
            "window = 50\nmax_combinations = 9\nhorizon = 120\nsweep.populations.n_poor = 0, 1\n";
        let spec = parse_sweep_spec(doc, Path::new(".")).unwrap();
        assert_eq!(spec.window, 50);
        assert_eq!(spec.max_combinations, 9);
        assert_eq!(spec.base.horizon, 120);
        assert_eq!(spec.axes[0].values, vec!["0", "1"]);
        assert!(parse_sweep_spec("sweep.nope = 1\n", Path::new(".")).is_err());
        assert!(parse_sweep_spec("window = x\n", Path::new(".")).is_err());
    }

    #[test]
    fn invalid_combinations_are_reported_not_fatal() {
        let spec = SweepSpec::new(scenario_mixed())
            .with_axis("preferences.alpha_one", ["0.3", "0.9"])
            .unwrap();
        let report = run_sweep(&spec, 2).unwrap();
        assert!(matches!(
            report.rows[0].outcome,
            RowOutcome::Classified { .. }
        ));
        assert!(matches!(report.rows[1].outcome, RowOutcome::Invalid(_)));
        assert!(report.to_csv().lines().nth(2).unwrap().contains("invalid"));
    }
}
