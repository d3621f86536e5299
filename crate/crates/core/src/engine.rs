//! The weekly pipeline and multi-week runs.
//!
//! One week, in order:
//!
//! ```text
//! 1. rich and poor plans at the inherited prices, scaled by population
//! 2. producer plans against the capital stock and ex-ante labor supply
//! 3. old-capital and labor markets clear on the short side, rationed
//! 4. each line produces from its rationed inputs
//! 5. consumer and new-capital markets clear on the short side, rationed
//! 6. next capital stock = new capital bought
//! 7. prices adjust on ex-ante excess demands
//! ```
//!
//! Capital is circulating: whatever is rented out is used up, unsold output
//! is discarded, and only purchased new capital carries over.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::agents::{poor_plan, rich_plan, PoorPlan, RichPlan};
use crate::economy::{EconomyState, Market, PriceVector, ValidatedConfig};
use crate::markets::{ration_pair, update_all_prices, MarketSnapshot};
use crate::production::{produce, producer_plan, ProducerPlan};

/// Output below this counts as no production when classifying regimes.
pub const OUTPUT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("numerical divergence in week {week}: {field} = {value}")]
    NumericalDivergence {
        week: u64,
        field: &'static str,
        value: f64,
    },
    #[error("regime window of {window} weeks exceeds series length {len}")]
    WindowTooLong { window: usize, len: usize },
    #[error("cannot classify an empty series")]
    EmptySeries,
}

/// The four markets of one week.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Markets {
    pub consumer: MarketSnapshot,
    pub new_capital: MarketSnapshot,
    pub old_capital: MarketSnapshot,
    pub labor: MarketSnapshot,
}

impl Markets {
    pub fn as_array(&self) -> [MarketSnapshot; 4] {
        [
            self.consumer,
            self.new_capital,
            self.old_capital,
            self.labor,
        ]
    }
}

/// Rationed quantities assigned to one side of the economy.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Allocation {
    pub capital: f64,
    pub labor: f64,
}

/// Ex-post transactions of each class, aggregated over the population.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ClassOutcome {
    pub labor_sold: f64,
    pub capital_rented: f64,
    pub consumption: f64,
    pub new_capital: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Times the positive price floor engaged this week.
    pub clamp_count: u32,
    /// The rich labor corner was active.
    pub corner_active: bool,
}

/// Complete audit of one week.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeekRecord {
    pub week: u64,
    pub capital_stock: f64,
    pub prices_before: PriceVector,
    pub prices_after: PriceVector,
    /// Plan of one representative rich agent.
    pub rich_plan: RichPlan,
    /// Plan of one representative poor agent.
    pub poor_plan: PoorPlan,
    /// Rich plan scaled by the rich population.
    pub rich_aggregate: RichPlan,
    /// Poor plan scaled by the poor population.
    pub poor_aggregate: PoorPlan,
    pub consumer_producer: ProducerPlan,
    pub capital_producer: ProducerPlan,
    /// Clearing snapshots. Output markets clear against realized output.
    pub markets: Markets,
    /// Ex-ante snapshots that drive the price update. They differ from
    /// `markets` only on the output side, where supply is the planned one.
    pub price_signals: Markets,
    pub consumer_line_inputs: Allocation,
    pub capital_line_inputs: Allocation,
    pub output_consumer: f64,
    pub output_capital: f64,
    pub rich_outcome: ClassOutcome,
    pub poor_outcome: ClassOutcome,
    pub capital_stock_next: f64,
    pub real_wage_ratio: f64,
    pub diagnostics: Diagnostics,
}

impl WeekRecord {
    pub fn labor_ex_ante(&self) -> f64 {
        self.markets.labor.ex_ante_supply
    }

    pub fn labor_ex_post(&self) -> f64 {
        self.markets.labor.ex_post_quantity
    }

    pub fn capital_rented(&self) -> f64 {
        self.markets.old_capital.ex_post_quantity
    }

    pub fn consumption(&self) -> f64 {
        self.markets.consumer.ex_post_quantity
    }

    pub fn new_capital_bought(&self) -> f64 {
        self.markets.new_capital.ex_post_quantity
    }

    /// No labor employed and nothing produced.
    pub fn is_dead(&self) -> bool {
        self.labor_ex_post() == 0.0
            && self.output_consumer < OUTPUT_EPSILON
            && self.output_capital < OUTPUT_EPSILON
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    HorizonReached,
    /// The capital stock hit zero in a week without employment. New capital
    /// needs capital to be produced, so nothing can happen afterwards.
    CollapsedAbsorbing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationSeries {
    pub config: ValidatedConfig,
    pub records: Vec<WeekRecord>,
    pub termination: Termination,
}

impl SimulationSeries {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> Option<&WeekRecord> {
        self.records.last()
    }

    /// State after the last recorded week.
    pub fn final_state(&self) -> EconomyState {
        match self.records.last() {
            Some(r) => EconomyState {
                week: r.week + 1,
                capital_stock: r.capital_stock_next,
                prices: r.prices_after,
            },
            None => self.config.initial_state,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "regime", rename_all = "snake_case")]
pub enum Regime {
    Collapse { onset_week: u64 },
    Growth,
    Indeterminate,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::Collapse { .. } => "collapse",
            Regime::Growth => "growth",
            Regime::Indeterminate => "indeterminate",
        }
    }

    pub fn onset_week(&self) -> Option<u64> {
        match self {
            Regime::Collapse { onset_week } => Some(*onset_week),
            _ => None,
        }
    }
}

fn finite(week: u64, field: &'static str, value: f64) -> Result<f64, EngineError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(EngineError::NumericalDivergence { week, field, value })
    }
}

/// Runs one week from `state`, returning the next state and the audit.
pub fn step_week(
    state: &EconomyState,
    config: &ValidatedConfig,
) -> Result<(EconomyState, WeekRecord), EngineError> {
    let week = state.week;
    let prices = state.prices;
    let pops = config.populations;
    let n_rich = pops.n_rich as f64;
    let n_poor = pops.n_poor as f64;
    finite(week, "capital_stock", state.capital_stock)?;
    for m in Market::ALL {
        finite(week, "prices", prices.get(m))?;
    }

    // 1. households
    let capital_each = if pops.n_rich > 0 {
        state.capital_stock / n_rich
    } else {
        0.0
    };
    let rich = rich_plan(
        &prices,
        capital_each,
        &config.preferences,
        pops.time_endowment,
    );
    let poor = poor_plan(&prices, pops.omega);
    let rich_all = rich.scaled(n_rich);
    let poor_all = poor.scaled(n_poor);
    let labor_supply = rich_all.supply_labor + poor_all.supply_labor;
    let capital_supply = rich_all.supply_old_capital;

    // 2. producers
    let plan_line = |tech, output_price| {
        producer_plan(
            tech,
            output_price,
            prices.p_ok,
            prices.p_w,
            state.capital_stock,
            labor_supply,
            config.scale_cap_multiplier,
        )
    };
    let consumer_producer = plan_line(&config.technology_consumer, prices.p_c);
    let capital_producer = plan_line(&config.technology_capital, prices.p_nk);

    // 3. input markets
    let old_capital = MarketSnapshot::clear(
        Market::OldCapital,
        consumer_producer.demand_capital + capital_producer.demand_capital,
        capital_supply,
    );
    let labor = MarketSnapshot::clear(
        Market::Labor,
        consumer_producer.demand_labor + capital_producer.demand_labor,
        labor_supply,
    );
    let (k_consumer, k_capital) = ration_pair(
        consumer_producer.demand_capital,
        capital_producer.demand_capital,
        old_capital.ex_post_quantity,
    );
    let (l_consumer, l_capital) = ration_pair(
        consumer_producer.demand_labor,
        capital_producer.demand_labor,
        labor.ex_post_quantity,
    );
    let (rich_labor, poor_labor) = ration_pair(
        rich_all.supply_labor,
        poor_all.supply_labor,
        labor.ex_post_quantity,
    );

    // 4. production
    let output_consumer = finite(
        week,
        "output_consumer",
        produce(&config.technology_consumer, k_consumer, l_consumer),
    )?;
    let output_capital = finite(
        week,
        "output_capital",
        produce(&config.technology_capital, k_capital, l_capital),
    )?;

    // 5. output markets
    let consumer_demand = rich_all.demand_consumer + poor_all.demand_consumer;
    let consumer = MarketSnapshot::clear(Market::Consumer, consumer_demand, output_consumer);
    let new_capital = MarketSnapshot::clear(
        Market::NewCapital,
        rich_all.demand_new_capital,
        output_capital,
    );
    let (rich_consumption, poor_consumption) = ration_pair(
        rich_all.demand_consumer,
        poor_all.demand_consumer,
        consumer.ex_post_quantity,
    );

    // 6. capital carried forward
    let capital_stock_next = finite(week, "capital_stock_next", new_capital.ex_post_quantity)?;

    // 7. prices
    let markets = Markets {
        consumer,
        new_capital,
        old_capital,
        labor,
    };
    let price_signals = Markets {
        consumer: MarketSnapshot::clear(
            Market::Consumer,
            consumer_demand,
            consumer_producer.supply_output,
        ),
        new_capital: MarketSnapshot::clear(
            Market::NewCapital,
            rich_all.demand_new_capital,
            capital_producer.supply_output,
        ),
        ..markets
    };
    let (prices_after, clamp_count) =
        update_all_prices(&prices, &price_signals.as_array(), config.varmax);
    for m in Market::ALL {
        finite(week, "prices_after", prices_after.get(m))?;
    }

    let record = WeekRecord {
        week,
        capital_stock: state.capital_stock,
        prices_before: prices,
        prices_after,
        rich_plan: rich,
        poor_plan: poor,
        rich_aggregate: rich_all,
        poor_aggregate: poor_all,
        consumer_producer,
        capital_producer,
        markets,
        price_signals,
        consumer_line_inputs: Allocation {
            capital: k_consumer,
            labor: l_consumer,
        },
        capital_line_inputs: Allocation {
            capital: k_capital,
            labor: l_capital,
        },
        output_consumer,
        output_capital,
        rich_outcome: ClassOutcome {
            labor_sold: rich_labor,
            capital_rented: old_capital.ex_post_quantity,
            consumption: rich_consumption,
            new_capital: new_capital.ex_post_quantity,
        },
        poor_outcome: ClassOutcome {
            labor_sold: poor_labor,
            capital_rented: 0.0,
            consumption: poor_consumption,
            new_capital: 0.0,
        },
        capital_stock_next,
        real_wage_ratio: prices.real_wage(),
        diagnostics: Diagnostics {
            clamp_count,
            corner_active: pops.n_rich > 0 && rich.corner,
        },
    };
    let next = EconomyState {
        week: week + 1,
        capital_stock: capital_stock_next,
        prices: prices_after,
    };
    Ok((next, record))
}

/// Iterates [`step_week`] for the configured horizon, stopping early once
/// the economy is dead with no capital left.
pub fn run_simulation(config: &ValidatedConfig) -> Result<SimulationSeries, EngineError> {
    let mut state = config.initial_state;
    let mut records = Vec::with_capacity(config.horizon.min(1 << 16) as usize);
    let mut termination = Termination::HorizonReached;
    for _ in 0..config.horizon {
        let (next, record) = step_week(&state, config)?;
        log::debug!(
            "week {}: K {:.6e}, labor {:.6e}, consumption {:.6e}, p_w/p_c {:.6}",
            record.week,
            record.capital_stock,
            record.labor_ex_post(),
            record.consumption(),
            record.real_wage_ratio
        );
        if record.diagnostics.clamp_count > 0 {
            log::warn!(
                "week {}: price floor engaged {} time(s)",
                record.week,
                record.diagnostics.clamp_count
            );
        }
        let absorbing = record.capital_stock_next == 0.0 && record.is_dead();
        records.push(record);
        state = next;
        if absorbing {
            log::info!("economy collapsed in week {}", record.week);
            termination = Termination::CollapsedAbsorbing;
            break;
        }
    }
    Ok(SimulationSeries {
        config: *config,
        records,
        termination,
    })
}

fn strictly_increasing(values: impl Iterator<Item = f64>) -> bool {
    let values: Vec<f64> = values.collect();
    values.windows(2).all(|w| w[1] > w[0])
}

/// Classifies the trailing `window` weeks of a series.
///
/// A series that ended in the absorbing state is a collapse regardless of
/// its length, since the dead state would persist for any window.
pub fn classify_regime(series: &SimulationSeries, window: usize) -> Result<Regime, EngineError> {
    let records = &series.records;
    if records.is_empty() {
        return Err(EngineError::EmptySeries);
    }
    let onset_of_final_dead_run = || {
        let dead = records.iter().rev().take_while(|r| r.is_dead()).count();
        records[records.len() - dead].week
    };
    if series.termination == Termination::CollapsedAbsorbing {
        return Ok(Regime::Collapse {
            onset_week: onset_of_final_dead_run(),
        });
    }
    if window == 0 || window > records.len() {
        return Err(EngineError::WindowTooLong {
            window,
            len: records.len(),
        });
    }
    let tail = &records[records.len() - window..];
    if tail.iter().all(WeekRecord::is_dead) {
        return Ok(Regime::Collapse {
            onset_week: onset_of_final_dead_run(),
        });
    }
    let growth = strictly_increasing(tail.iter().map(|r| r.capital_stock))
        && strictly_increasing(tail.iter().map(|r| r.consumption()))
        && strictly_increasing(tail.iter().map(|r| r.real_wage_ratio));
    Ok(if growth {
        Regime::Growth
    } else {
        Regime::Indeterminate
    })
}
