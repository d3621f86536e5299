//! Flat `path = value` scenario files.
//!
//! One key per line, `#` starts a comment, blank lines are ignored. Keys
//! mirror the config field paths; any key left out takes its value from
//! [`scenario_mixed`](crate::scenarios::scenario_mixed).
//!
//! ```text
//! preferences.scale_C            preferences.alpha_one
//! preferences.alpha_two          preferences.alpha_three
//! technology_consumer.scale_B    technology_consumer.beta_one
//! technology_consumer.beta_two   technology_capital.scale_B
//! technology_capital.beta_one    technology_capital.beta_two
//! populations.n_rich             populations.n_poor
//! populations.omega              populations.time_endowment_T
//! varmax                         horizon
//! scale_cap_multiplier
//! initial.p_c  initial.p_nk  initial.p_ok  initial.p_w  initial.K0
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::economy::{validate_config, ScenarioConfig, ValidatedConfig, ValidationErrors};
use crate::scenarios::scenario_mixed;

/// Every recognised key, in serialization order.
pub const CONFIG_KEYS: [&str; 22] = [
    "preferences.scale_C",
    "preferences.alpha_one",
    "preferences.alpha_two",
    "preferences.alpha_three",
    "technology_consumer.scale_B",
    "technology_consumer.beta_one",
    "technology_consumer.beta_two",
    "technology_capital.scale_B",
    "technology_capital.beta_one",
    "technology_capital.beta_two",
    "populations.n_rich",
    "populations.n_poor",
    "populations.omega",
    "populations.time_endowment_T",
    "varmax",
    "horizon",
    "scale_cap_multiplier",
    "initial.p_c",
    "initial.p_nk",
    "initial.p_ok",
    "initial.p_w",
    "initial.K0",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: key `{key}` set more than once")]
    DuplicateKey { line: usize, key: String },
    #[error("invalid config: {0}")]
    ValidationFailure(#[from] ValidationErrors),
}

/// Why a single `key = value` assignment was refused.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("`{key}` expects {expected}, got `{value}`")]
    BadValue {
        key: String,
        value: String,
        expected: &'static str,
    },
}

fn parse_real(key: &str, raw: &str) -> Result<f64, FieldError> {
    raw.parse::<f64>().map_err(|_| FieldError::BadValue {
        key: key.to_string(),
        value: raw.to_string(),
        expected: "a number",
    })
}

fn parse_count(key: &str, raw: &str) -> Result<u64, FieldError> {
    raw.parse::<u64>().map_err(|_| FieldError::BadValue {
        key: key.to_string(),
        value: raw.to_string(),
        expected: "a non-negative integer",
    })
}

/// Assigns one field of `config` from its textual value.
pub fn set_field(config: &mut ScenarioConfig, key: &str, raw: &str) -> Result<(), FieldError> {
    let raw = raw.trim();
    let c = config;
    match key {
        "populations.n_rich" => c.populations.n_rich = parse_count(key, raw)?,
        "populations.n_poor" => c.populations.n_poor = parse_count(key, raw)?,
        "horizon" => c.horizon = parse_count(key, raw)?,
        _ => {
            let slot = match key {
                "preferences.scale_C" => &mut c.preferences.scale_c,
                "preferences.alpha_one" => &mut c.preferences.alpha_one,
                "preferences.alpha_two" => &mut c.preferences.alpha_two,
                "preferences.alpha_three" => &mut c.preferences.alpha_three,
                "technology_consumer.scale_B" => &mut c.technology_consumer.scale_b,
                "technology_consumer.beta_one" => &mut c.technology_consumer.beta_one,
                "technology_consumer.beta_two" => &mut c.technology_consumer.beta_two,
                "technology_capital.scale_B" => &mut c.technology_capital.scale_b,
                "technology_capital.beta_one" => &mut c.technology_capital.beta_one,
                "technology_capital.beta_two" => &mut c.technology_capital.beta_two,
                "populations.omega" => &mut c.populations.omega,
                "populations.time_endowment_T" => &mut c.populations.time_endowment,
                "varmax" => &mut c.varmax,
                "scale_cap_multiplier" => &mut c.scale_cap_multiplier,
                "initial.p_c" => &mut c.initial_state.prices.p_c,
                "initial.p_nk" => &mut c.initial_state.prices.p_nk,
                "initial.p_ok" => &mut c.initial_state.prices.p_ok,
                "initial.p_w" => &mut c.initial_state.prices.p_w,
                "initial.K0" => &mut c.initial_state.capital_stock,
                _ => return Err(FieldError::UnknownKey(key.to_string())),
            };
            *slot = parse_real(key, raw)?;
        }
    }
    Ok(())
}

/// Textual value of one field, formatted so that it parses back exactly.
pub fn get_field(config: &ScenarioConfig, key: &str) -> Option<String> {
    let c = config;
    let real = |v: f64| Some(format!("{v:?}"));
    match key {
        "preferences.scale_C" => real(c.preferences.scale_c),
        "preferences.alpha_one" => real(c.preferences.alpha_one),
        "preferences.alpha_two" => real(c.preferences.alpha_two),
        "preferences.alpha_three" => real(c.preferences.alpha_three),
        "technology_consumer.scale_B" => real(c.technology_consumer.scale_b),
        "technology_consumer.beta_one" => real(c.technology_consumer.beta_one),
        "technology_consumer.beta_two" => real(c.technology_consumer.beta_two),
        "technology_capital.scale_B" => real(c.technology_capital.scale_b),
        "technology_capital.beta_one" => real(c.technology_capital.beta_one),
        "technology_capital.beta_two" => real(c.technology_capital.beta_two),
        "populations.n_rich" => Some(c.populations.n_rich.to_string()),
        "populations.n_poor" => Some(c.populations.n_poor.to_string()),
        "populations.omega" => real(c.populations.omega),
        "populations.time_endowment_T" => real(c.populations.time_endowment),
        "varmax" => real(c.varmax),
        "horizon" => Some(c.horizon.to_string()),
        "scale_cap_multiplier" => real(c.scale_cap_multiplier),
        "initial.p_c" => real(c.initial_state.prices.p_c),
        "initial.p_nk" => real(c.initial_state.prices.p_nk),
        "initial.p_ok" => real(c.initial_state.prices.p_ok),
        "initial.p_w" => real(c.initial_state.prices.p_w),
        "initial.K0" => real(c.initial_state.capital_stock),
        _ => None,
    }
}

/// A non-empty, comment-stripped line split into key and value.
pub(crate) fn split_line(line_no: usize, line: &str) -> Result<Option<(&str, &str)>, ConfigError> {
    let content = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim();
    if content.is_empty() {
        return Ok(None);
    }
    let Some((key, value)) = content.split_once('=') else {
        return Err(ConfigError::SyntaxError {
            line: line_no,
            message: format!("expected `key = value`, got `{content}`"),
        });
    };
    let (key, value) = (key.trim(), value.trim());
    if key.is_empty() || value.is_empty() {
        return Err(ConfigError::SyntaxError {
            line: line_no,
            message: "empty key or value".to_string(),
        });
    }
    Ok(Some((key, value)))
}

/// Applies every assignment in `text` on top of `base`, without validating.
pub fn apply_document(base: ScenarioConfig, text: &str) -> Result<ScenarioConfig, ConfigError> {
    let mut config = base;
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
            });
        }
        set_field(&mut config, key, value).map_err(|e| match e {
            FieldError::UnknownKey(key) => ConfigError::UnknownKey { line: line_no, key },
            other => ConfigError::SyntaxError {
                line: line_no,
                message: other.to_string(),
            },
        })?;
    }
    Ok(config)
}

/// Parses and validates a scenario document.
pub fn parse_config(text: &str) -> Result<ValidatedConfig, ConfigError> {
    let config = apply_document(scenario_mixed(), text)?;
    Ok(validate_config(config)?)
}

/// Writes every key, one per line, in [`CONFIG_KEYS`] order.
pub fn serialize_config(config: &ScenarioConfig) -> String {
    let mut out = String::new();
    for key in CONFIG_KEYS {
        let value = get_field(config, key).expect("every listed key is readable");
        writeln!(out, "{key} = {value}").unwrap();
    }
    out
}
