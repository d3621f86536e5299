//! Ex-ante behavior of the two agent classes.
//!
//! The rich maximize `C * D_ac^a1 * D_nk^a2 * free_time^a3` subject to
//! `p_ok * O_ok + p_w * O_al = p_c * D_ac + p_nk * D_nk` with
//! `O_al = T - free_time`. Because they can always sell their whole time
//! endowment, the problem is a standard Cobb-Douglas demand over full
//! income `M = p_ok * capital + p_w * T`. Once the desired free time exceeds
//! `T` the labor corner binds and the remaining capital income is split
//! between the two goods with the renormalized shares.
//!
//! The poor work a fixed number of hours and spend the whole wage on the
//! consumer good.

use serde::{Deserialize, Serialize};

use crate::economy::{Preferences, PriceVector};

/// Ex-ante plan of one rich agent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RichPlan {
    pub demand_consumer: f64,
    pub demand_new_capital: f64,
    pub free_time: f64,
    pub supply_labor: f64,
    pub supply_old_capital: f64,
    /// True when desired free time met the time endowment.
    pub corner: bool,
}

impl RichPlan {
    /// Income from renting capital and selling labor.
    pub fn income(&self, prices: &PriceVector) -> f64 {
        prices.p_ok * self.supply_old_capital + prices.p_w * self.supply_labor
    }

    pub fn expenditure(&self, prices: &PriceVector) -> f64 {
        prices.p_c * self.demand_consumer + prices.p_nk * self.demand_new_capital
    }

    /// Population-scaled plan. Free time scales too, so the time identity
    /// holds against `n * T`.
    pub fn scaled(&self, n: f64) -> Self {
        Self {
            demand_consumer: self.demand_consumer * n,
            demand_new_capital: self.demand_new_capital * n,
            free_time: self.free_time * n,
            supply_labor: self.supply_labor * n,
            supply_old_capital: self.supply_old_capital * n,
            corner: self.corner,
        }
    }
}

/// Ex-ante plan of one poor agent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoorPlan {
    pub demand_consumer: f64,
    pub supply_labor: f64,
}

impl PoorPlan {
    pub fn scaled(&self, n: f64) -> Self {
        Self {
            demand_consumer: self.demand_consumer * n,
            supply_labor: self.supply_labor * n,
        }
    }
}

/// Utility-maximizing plan of a rich agent owning `capital_owned` units of
/// old capital with a weekly time endowment of `time_endowment` hours.
pub fn rich_plan(
    prices: &PriceVector,
    capital_owned: f64,
    prefs: &Preferences,
    time_endowment: f64,
) -> RichPlan {
    debug_assert!(capital_owned >= 0.0 && time_endowment > 0.0);
    let capital_income = prices.p_ok * capital_owned;
    let full_income = capital_income + prices.p_w * time_endowment;
    let desired_free_time = prefs.alpha_three * full_income / prices.p_w;

    if desired_free_time >= time_endowment {
        let goods_share = prefs.alpha_one + prefs.alpha_two;
        RichPlan {
            demand_consumer: prefs.alpha_one / goods_share * capital_income / prices.p_c,
            demand_new_capital: prefs.alpha_two / goods_share * capital_income / prices.p_nk,
            free_time: time_endowment,
            supply_labor: 0.0,
            supply_old_capital: capital_owned,
            corner: true,
        }
    } else {
        RichPlan {
            demand_consumer: prefs.alpha_one * full_income / prices.p_c,
            demand_new_capital: prefs.alpha_two * full_income / prices.p_nk,
            free_time: desired_free_time,
            supply_labor: time_endowment - desired_free_time,
            supply_old_capital: capital_owned,
            corner: false,
        }
    }
}

/// Capital holding at which the labor corner starts to bind: the rich stop
/// working once `capital_owned >= corner_threshold`.
pub fn corner_threshold(prices: &PriceVector, prefs: &Preferences, time_endowment: f64) -> f64 {
    // a3 * (p_ok k + p_w T) = p_w T
    (1.0 - prefs.alpha_three) * prices.p_w * time_endowment / (prefs.alpha_three * prices.p_ok)
}

pub fn poor_plan(prices: &PriceVector, omega: f64) -> PoorPlan {
    PoorPlan {
        demand_consumer: omega * (prices.p_w / prices.p_c),
        supply_labor: omega,
    }
}

/// Utility level of a rich plan; zero whenever one of the goods is zero.
pub fn utility(plan: &RichPlan, prefs: &Preferences) -> f64 {
    cobb_douglas_utility(
        prefs,
        plan.demand_consumer,
        plan.demand_new_capital,
        plan.free_time,
    )
}

pub(crate) fn cobb_douglas_utility(
    prefs: &Preferences,
    consumer: f64,
    new_capital: f64,
    free_time: f64,
) -> f64 {
    if consumer <= 0.0 || new_capital <= 0.0 || free_time <= 0.0 {
        return 0.0;
    }
    prefs.scale_c
        * consumer.powf(prefs.alpha_one)
        * new_capital.powf(prefs.alpha_two)
        * free_time.powf(prefs.alpha_three)
}
