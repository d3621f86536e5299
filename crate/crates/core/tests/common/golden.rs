//! The one-week fixture and its expected values, produced by the
//! independent hand trace in `fixtures/one_week_trace.py`.

use shortside::economy::{
    validate_config, EconomyState, Populations, Preferences, PriceVector, ScenarioConfig,
    Technology, ValidatedConfig,
};
use shortside::engine::WeekRecord;

pub fn fixture(scale_b: f64) -> ValidatedConfig {
    let third = 1.0 / 3.0;
    let tech = Technology {
        scale_b,
        beta_one: 0.5,
        beta_two: 0.5,
    };
    validate_config(ScenarioConfig {
        preferences: Preferences {
            scale_c: 1.0,
            alpha_one: third,
            alpha_two: third,
            alpha_three: third,
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
    })
    .unwrap()
}

/// Both lines shut down: unit cost 2 exceeds both output prices.
pub const SHUTDOWN_WEEK: [(&str, f64); 25] = [
    ("rich_dac", 16.0 / 3.0),
    ("rich_dnk", 16.0 / 3.0),
    ("rich_free", 16.0 / 3.0),
    ("rich_oal", 20.0 / 3.0),
    ("poor_dbc", 8.0),
    ("cons_K", 0.0),
    ("cons_L", 0.0),
    ("cons_S", 0.0),
    ("cap_K", 0.0),
    ("cap_L", 0.0),
    ("cap_S", 0.0),
    ("old_capital_q", 0.0),
    ("labor_q", 0.0),
    ("cons_k_alloc", 0.0),
    ("cons_l_alloc", 0.0),
    ("cap_k_alloc", 0.0),
    ("cap_l_alloc", 0.0),
    ("output_consumer", 0.0),
    ("output_capital", 0.0),
    ("consumption", 0.0),
    ("capital_next", 0.0),
    ("pc_next", 1.299187295816826),
    ("pnk_next", 1.2770896753598404),
    ("pok_next", 0.7348364672663934),
    ("pw_next", 0.6994560262926206),
];

/// Same economy with B = 2.5: both lines run, capital is the short side.
pub const PROFITABLE_WEEK: [(&str, f64); 25] = [
    ("rich_dac", 5.333333333333333),
    ("rich_dnk", 5.333333333333333),
    ("rich_free", 5.333333333333333),
    ("rich_oal", 6.666666666666667),
    ("poor_dbc", 8.0),
    ("cons_K", 4.8),
    ("cons_L", 4.8),
    ("cons_S", 11.999999999999996),
    ("cap_K", 4.8),
    ("cap_L", 4.8),
    ("cap_S", 11.999999999999996),
    ("old_capital_q", 4.0),
    ("labor_q", 9.6),
    ("cons_k_alloc", 2.0),
    ("cons_l_alloc", 4.8),
    ("cap_k_alloc", 2.0),
    ("cap_l_alloc", 4.8),
    ("output_consumer", 7.745966692414833),
    ("output_capital", 7.745966692414833),
    ("consumption", 7.745966692414833),
    ("capital_next", 5.333333333333333),
    ("pc_next", 1.1854590436003227),
    ("pnk_next", 0.7156187241629202),
    ("pok_next", 1.2788174941449721),
    ("pw_next", 0.7248135185787951),
];

pub fn field(r: &WeekRecord, name: &str) -> f64 {
    match name {
        "rich_dac" => r.rich_plan.demand_consumer,
        "rich_dnk" => r.rich_plan.demand_new_capital,
        "rich_free" => r.rich_plan.free_time,
        "rich_oal" => r.rich_plan.supply_labor,
        "poor_dbc" => r.poor_plan.demand_consumer,
        "cons_K" => r.consumer_producer.demand_capital,
        "cons_L" => r.consumer_producer.demand_labor,
        "cons_S" => r.consumer_producer.supply_output,
        "cap_K" => r.capital_producer.demand_capital,
        "cap_L" => r.capital_producer.demand_labor,
        "cap_S" => r.capital_producer.supply_output,
        "old_capital_q" => r.markets.old_capital.ex_post_quantity,
        "labor_q" => r.markets.labor.ex_post_quantity,
        "cons_k_alloc" => r.consumer_line_inputs.capital,
        "cons_l_alloc" => r.consumer_line_inputs.labor,
        "cap_k_alloc" => r.capital_line_inputs.capital,
        "cap_l_alloc" => r.capital_line_inputs.labor,
        "output_consumer" => r.output_consumer,
        "output_capital" => r.output_capital,
        "consumption" => r.markets.consumer.ex_post_quantity,
        "capital_next" => r.capital_stock_next,
        "pc_next" => r.prices_after.p_c,
        "pnk_next" => r.prices_after.p_nk,
        "pok_next" => r.prices_after.p_ok,
        "pw_next" => r.prices_after.p_w,
        other => panic!("unknown fixture field {other}"),
    }
}

/// Fields whose relative error exceeds `tol`, as `(name, got, want)`.
pub fn mismatches(r: &WeekRecord, expected: &[(&str, f64)], tol: f64) -> Vec<(String, f64, f64)> {
    expected
        .iter()
        .filter_map(|&(name, want)| {
            let got = field(r, name);
            let ok = got == want || (got - want).abs() / want.abs().max(1e-300) <= tol;
            (!ok).then(|| (name.to_string(), got, want))
        })
        .collect()
}
