//! Deterministic simulator of a two-class, two-line economy whose markets
//! clear on the short side and whose prices follow a bounded arc-tangent
//! adjustment between weeks.
//!
//! ```
//! use shortside::prelude::*;
//!
//! let config = validate_config(scenario_mixed()).unwrap();
//! let series = run_simulation(&config).unwrap();
//! assert_eq!(classify_regime(&series, 201).unwrap(), Regime::Growth);
//! ```

pub mod agents;
pub mod economy;
pub mod engine;
pub mod io;
pub mod markets;
pub mod production;
pub mod scenarios;

pub mod prelude {
    pub use crate::agents::{poor_plan, rich_plan, utility, PoorPlan, RichPlan};
    pub use crate::economy::{
        validate_config, EconomyState, Market, Populations, Preferences, PriceVector,
        ScenarioConfig, Technology, ValidatedConfig,
    };
    pub use crate::engine::{
        classify_regime, run_simulation, step_week, EngineError, Regime, SimulationSeries,
        Termination, WeekRecord,
    };
    pub use crate::markets::{ration, short_side, update_all_prices, update_price, MarketSnapshot};
    pub use crate::production::{produce, producer_plan, unit_cost, ProducerPlan, UnitCost};
    pub use crate::scenarios::{scenario_mixed, scenario_poor_only, scenario_rich_only};
}
