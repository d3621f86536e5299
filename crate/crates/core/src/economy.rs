//! Domain types shared by every stage of the simulator and the validation
//! that guards them.
//!
//! All quantities and prices are `f64`. The rich and the poor are each
//! simulated as one representative agent whose plan is multiplied by the
//! class population.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance for the share-sum constraints on preferences and technologies.
pub const SHARE_SUM_TOLERANCE: f64 = 1e-12;

/// The four prices carried from one week to the next.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PriceVector {
    /// Consumer good, currency per unit.
    pub p_c: f64,
    /// Newly produced capital good, currency per unit.
    pub p_nk: f64,
    /// Rental of old capital, currency per unit.
    pub p_ok: f64,
    /// Wage, currency per hour.
    pub p_w: f64,
}

impl PriceVector {
    pub const fn new(p_c: f64, p_nk: f64, p_ok: f64, p_w: f64) -> Self {
        Self {
            p_c,
            p_nk,
            p_ok,
            p_w,
        }
    }

    pub const fn uniform(p: f64) -> Self {
        Self::new(p, p, p, p)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(
            self.p_c * factor,
            self.p_nk * factor,
            self.p_ok * factor,
            self.p_w * factor,
        )
    }

    pub fn get(&self, market: Market) -> f64 {
        match market {
            Market::Consumer => self.p_c,
            Market::NewCapital => self.p_nk,
            Market::OldCapital => self.p_ok,
            Market::Labor => self.p_w,
        }
    }

    pub fn set(&mut self, market: Market, price: f64) {
        match market {
            Market::Consumer => self.p_c = price,
            Market::NewCapital => self.p_nk = price,
            Market::OldCapital => self.p_ok = price,
            Market::Labor => self.p_w = price,
        }
    }

    /// Wage measured in units of the consumer good.
    pub fn real_wage(&self) -> f64 {
        self.p_w / self.p_c
    }

    pub fn is_valid(&self) -> bool {
        Market::ALL
            .iter()
            .all(|&m| self.get(m).is_finite() && self.get(m) > 0.0)
    }
}

/// The four markets opened every week.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Market {
    Consumer,
    NewCapital,
    OldCapital,
    Labor,
}

impl Market {
    pub const ALL: [Market; 4] = [
        Market::Consumer,
        Market::NewCapital,
        Market::OldCapital,
        Market::Labor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Market::Consumer => "consumer",
            Market::NewCapital => "new_capital",
            Market::OldCapital => "old_capital",
            Market::Labor => "labor",
        }
    }

    fn price_field(self) -> &'static str {
        match self {
            Market::Consumer => "p_c",
            Market::NewCapital => "p_nk",
            Market::OldCapital => "p_ok",
            Market::Labor => "p_w",
        }
    }
}

impl fmt::Display for Market {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Cobb-Douglas preferences of the rich over consumption, new capital and
/// free time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Preferences {
    pub scale_c: f64,
    pub alpha_one: f64,
    pub alpha_two: f64,
    pub alpha_three: f64,
}

/// Constant-returns Cobb-Douglas technology of one production line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Technology {
    pub scale_b: f64,
    pub beta_one: f64,
    pub beta_two: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Populations {
    pub n_rich: u64,
    pub n_poor: u64,
    /// Hours each poor agent works every week.
    pub omega: f64,
    /// Hours each rich agent splits between labor and free time.
    pub time_endowment: f64,
}

/// Everything inherited from one week by the next.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EconomyState {
    pub week: u64,
    /// Old capital owned by the rich class as a whole.
    pub capital_stock: f64,
    pub prices: PriceVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub preferences: Preferences,
    pub technology_consumer: Technology,
    pub technology_capital: Technology,
    pub populations: Populations,
    pub varmax: f64,
    pub horizon: u64,
    pub initial_state: EconomyState,
    /// Bound on planned scale, as a multiple of the anticipated inputs.
    pub scale_cap_multiplier: f64,
}

/// One broken invariant found by [`validate_config`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigViolation {
    #[error("alpha shares sum to {sum}, expected 1")]
    AlphaSumViolation { sum: f64 },
    #[error("{line} beta exponents sum to {sum}, expected 1")]
    BetaSumViolation { line: &'static str, sum: f64 },
    #[error("initial price {field} must be positive and finite, got {value}")]
    NonPositivePrice { field: &'static str, value: f64 },
    #[error("{field} must be positive and finite, got {value}")]
    NonPositiveParameter { field: &'static str, value: f64 },
    #[error("{field} = {value} is outside {range}")]
    OutOfRange {
        field: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("economy has no agents (n_rich + n_poor = 0)")]
    EmptyEconomy,
}

/// The complete list of violations of a rejected config.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct ValidationErrors(pub Vec<ConfigViolation>);

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} config violation(s)", self.0.len())?;
        for v in &self.0 {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

impl ValidationErrors {
    pub fn violations(&self) -> &[ConfigViolation] {
        &self.0
    }
}

/// A [`ScenarioConfig`] that passed [`validate_config`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidatedConfig(ScenarioConfig);

impl ValidatedConfig {
    pub fn into_inner(self) -> ScenarioConfig {
        self.0
    }

    /// Above `1/pi` a single price step can cross zero and the positivity
    /// floor may engage.
    pub fn varmax_may_clamp(&self) -> bool {
        self.0.varmax >= std::f64::consts::FRAC_1_PI
    }
}

impl Deref for ValidatedConfig {
    type Target = ScenarioConfig;

    fn deref(&self) -> &ScenarioConfig {
        &self.0
    }
}

impl AsRef<ScenarioConfig> for ValidatedConfig {
    fn as_ref(&self) -> &ScenarioConfig {
        &self.0
    }
}

fn positive(value: f64) -> bool {
    value.is_finite() && value > 0.0
}

fn check_positive(out: &mut Vec<ConfigViolation>, field: &'static str, value: f64) {
    if !positive(value) {
        out.push(ConfigViolation::NonPositiveParameter { field, value });
    }
}

/// False for NaN sums too.
fn shares_sum_to_one(sum: f64) -> bool {
    (sum - 1.0).abs() <= SHARE_SUM_TOLERANCE
}

fn check_technology(out: &mut Vec<ConfigViolation>, line: &'static str, tech: &Technology) {
    let (b, b1, b2) = match line {
        "consumer" => (
            "technology_consumer.scale_B",
            "technology_consumer.beta_one",
            "technology_consumer.beta_two",
        ),
        _ => (
            "technology_capital.scale_B",
            "technology_capital.beta_one",
            "technology_capital.beta_two",
        ),
    };
    check_positive(out, b, tech.scale_b);
    check_positive(out, b1, tech.beta_one);
    check_positive(out, b2, tech.beta_two);
    let sum = tech.beta_one + tech.beta_two;
    if !shares_sum_to_one(sum) {
        out.push(ConfigViolation::BetaSumViolation { line, sum });
    }
}

/// Checks every invariant of the config and its nested types, collecting
/// all violations rather than stopping at the first.
pub fn validate_config(config: ScenarioConfig) -> Result<ValidatedConfig, ValidationErrors> {
    let mut out = Vec::new();

    let prefs = &config.preferences;
    check_positive(&mut out, "preferences.scale_C", prefs.scale_c);
    check_positive(&mut out, "preferences.alpha_one", prefs.alpha_one);
    check_positive(&mut out, "preferences.alpha_two", prefs.alpha_two);
    check_positive(&mut out, "preferences.alpha_three", prefs.alpha_three);
    let alpha_sum = prefs.alpha_one + prefs.alpha_two + prefs.alpha_three;
    if !shares_sum_to_one(alpha_sum) {
        out.push(ConfigViolation::AlphaSumViolation { sum: alpha_sum });
    }

    check_technology(&mut out, "consumer", &config.technology_consumer);
    check_technology(&mut out, "capital", &config.technology_capital);

    let pops = &config.populations;
    if pops.n_rich + pops.n_poor == 0 {
        out.push(ConfigViolation::EmptyEconomy);
    }
    if !(pops.omega.is_finite() && pops.omega >= 0.0) {
        out.push(ConfigViolation::OutOfRange {
            field: "populations.omega",
            value: pops.omega,
            range: "[0, inf)",
        });
    }
    check_positive(
        &mut out,
        "populations.time_endowment_T",
        pops.time_endowment,
    );

    if !positive(config.varmax) {
        out.push(ConfigViolation::NonPositiveParameter {
            field: "varmax",
            value: config.varmax,
        });
    } else if config.varmax >= 1.0 {
        out.push(ConfigViolation::OutOfRange {
            field: "varmax",
            value: config.varmax,
            range: "(0, 1)",
        });
    }

    if !(config.scale_cap_multiplier.is_finite() && config.scale_cap_multiplier > 1.0) {
        out.push(ConfigViolation::OutOfRange {
            field: "scale_cap_multiplier",
            value: config.scale_cap_multiplier,
            range: "(1, inf)",
        });
    }

    let init = &config.initial_state;
    if init.week != 0 {
        out.push(ConfigViolation::OutOfRange {
            field: "initial.week",
            value: init.week as f64,
            range: "{0}",
        });
    }
    if !(init.capital_stock.is_finite() && init.capital_stock >= 0.0) {
        out.push(ConfigViolation::OutOfRange {
            field: "initial.K0",
            value: init.capital_stock,
            range: "[0, inf)",
        });
    }
    for market in Market::ALL {
        let value = init.prices.get(market);
        if !positive(value) {
            out.push(ConfigViolation::NonPositivePrice {
                field: market.price_field(),
                value,
            });
        }
    }

    if out.is_empty() {
        let validated = ValidatedConfig(config);
        if validated.varmax_may_clamp() {
            log::warn!(
                "varmax = {} >= 1/pi: the positive price floor may engage",
                config.varmax
            );
        }
        Ok(validated)
    } else {
        Err(ValidationErrors(out))
    }
}

impl TryFrom<ScenarioConfig> for ValidatedConfig {
    type Error = ValidationErrors;

    fn try_from(config: ScenarioConfig) -> Result<Self, Self::Error> {
        validate_config(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric() -> ScenarioConfig {
        let tech = Technology {
            scale_b: 1.0,
            beta_one: 0.5,
            beta_two: 0.5,
        };
        ScenarioConfig {
            preferences: Preferences {
                scale_c: 1.0,
                alpha_one: 1.0 / 3.0,
                alpha_two: 1.0 / 3.0,
                alpha_three: 1.0 / 3.0,
            },
            technology_consumer: tech,
            technology_capital: tech,
            populations: Populations {
                n_rich: 1,
                n_poor: 1,
                omega: 8.0,
                time_endowment: 12.0,
            },
            varmax: 0.1,
            horizon: 10,
            initial_state: EconomyState {
                week: 0,
                capital_stock: 4.0,
                prices: PriceVector::uniform(1.0),
            },
            scale_cap_multiplier: 1.2,
        }
    }

    #[test]
    fn symmetric_config_is_valid() {
        let cfg = symmetric();
        let validated = validate_config(cfg).unwrap();
        assert_eq!(*validated, cfg);
        assert!(!validated.varmax_may_clamp());
    }

    #[test]
    fn alpha_sum_violation() {
        let mut cfg = symmetric();
        cfg.preferences.alpha_one = 0.5;
        cfg.preferences.alpha_two = 0.5;
        cfg.preferences.alpha_three = 0.5;
        let err = validate_config(cfg).unwrap_err();
        assert_eq!(err.0, vec![ConfigViolation::AlphaSumViolation { sum: 1.5 }]);
    }

    #[test]
    fn empty_economy() {
        let mut cfg = symmetric();
        cfg.populations.n_rich = 0;
        cfg.populations.n_poor = 0;
        let err = validate_config(cfg).unwrap_err();
        assert_eq!(err.0, vec![ConfigViolation::EmptyEconomy]);
    }

    #[test]
    fn reports_every_violation() {
        let mut cfg = symmetric();
        cfg.technology_capital.beta_one = 0.9;
        cfg.initial_state.prices.p_w = 0.0;
        cfg.initial_state.prices.p_c = f64::NAN;
        cfg.varmax = -0.1;
        cfg.populations.n_rich = 0;
        cfg.populations.n_poor = 0;
        let err = validate_config(cfg).unwrap_err();
        let v = err.violations();
        assert_eq!(v.len(), 5, "{v:?}");
        assert!(v.iter().any(|e| matches!(
            e,
            ConfigViolation::BetaSumViolation {
                line: "capital",
                ..
            }
        )));
        assert!(v
            .iter()
            .any(|e| matches!(e, ConfigViolation::NonPositivePrice { field: "p_w", .. })));
        assert!(v
            .iter()
            .any(|e| matches!(e, ConfigViolation::NonPositivePrice { field: "p_c", .. })));
        assert!(v.iter().any(|e| matches!(
            e,
            ConfigViolation::NonPositiveParameter {
                field: "varmax",
                ..
            }
        )));
        assert!(v.contains(&ConfigViolation::EmptyEconomy));
    }

    #[test]
    fn varmax_range() {
        let mut cfg = symmetric();
        cfg.varmax = 1.0;
        assert!(validate_config(cfg).is_err());
        cfg.varmax = 0.5;
        assert!(validate_config(cfg).unwrap().varmax_may_clamp());
    }

    #[test]
    fn multiplier_must_exceed_one() {
        let mut cfg = symmetric();
        cfg.scale_cap_multiplier = 1.0;
        let err = validate_config(cfg).unwrap_err();
        assert!(matches!(
            err.0[0],
            ConfigViolation::OutOfRange {
                field: "scale_cap_multiplier",
                ..
            }
        ));
    }

    #[test]
    fn validation_is_idempotent() {
        let once = validate_config(symmetric()).unwrap();
        let twice = validate_config(once.into_inner()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn price_vector_helpers() {
        let mut p = PriceVector::new(2.0, 3.0, 4.0, 5.0);
        assert_eq!(p.real_wage(), 2.5);
        p.set(Market::Labor, 6.0);
        assert_eq!(p.get(Market::Labor), 6.0);
        assert!(p.is_valid());
        p.set(Market::Consumer, -1.0);
        assert!(!p.is_valid());
    }
}
