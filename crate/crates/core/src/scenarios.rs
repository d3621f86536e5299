//! Shipped scenarios.
//!
//! The three scenarios share every parameter except the class populations.
//! With both classes present the economy grows without bound. With the rich
//! alone it collapses once they stop working. With the poor alone capital is
//! never replaced.

use crate::economy::{
    validate_config, EconomyState, Populations, Preferences, PriceVector, ScenarioConfig,
    Technology, ValidatedConfig,
};

/// Rich and poor together; also the default for an empty config document.
pub fn scenario_mixed() -> ScenarioConfig {
    ScenarioConfig {
        preferences: Preferences {
            scale_c: 1.0,
            alpha_one: 0.3,
            alpha_two: 0.2,
            alpha_three: 0.5,
        },
        technology_consumer: Technology {
            scale_b: 10.0,
            beta_one: 0.8,
            beta_two: 0.2,
        },
        technology_capital: Technology {
            scale_b: 10.0,
            beta_one: 0.95,
            beta_two: 0.05,
        },
        populations: Populations {
            n_rich: 1,
            n_poor: 1,
            omega: 0.5,
            time_endowment: 2.0,
        },
        varmax: 0.003,
        horizon: 400,
        initial_state: EconomyState {
            week: 0,
            capital_stock: 1.5,
            prices: PriceVector::new(6.0, 0.15, 0.12, 1.0),
        },
        scale_cap_multiplier: 2.5,
    }
}

pub fn scenario_rich_only() -> ScenarioConfig {
    let mut config = scenario_mixed();
    config.populations.n_poor = 0;
    config
}

pub fn scenario_poor_only() -> ScenarioConfig {
    let mut config = scenario_mixed();
    config.populations.n_rich = 0;
    config
}

/// Looks up a shipped scenario by name.
pub fn by_name(name: &str) -> Option<ScenarioConfig> {
    match name {
        "mixed" | "scenario_mixed" => Some(scenario_mixed()),
        "rich_only" | "scenario_rich_only" => Some(scenario_rich_only()),
        "poor_only" | "scenario_poor_only" => Some(scenario_poor_only()),
        _ => None,
    }
}

pub fn validated(config: ScenarioConfig) -> ValidatedConfig {
    validate_config(config).expect("shipped scenarios are valid")
}
