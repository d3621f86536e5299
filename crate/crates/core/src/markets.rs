//! Short-side clearing, proportional rationing and the bounded arc-tangent
//! price adjustment.

use serde::{Deserialize, Serialize};

use crate::economy::{Market, PriceVector};

/// Lowest price the adjustment rule may return.
pub const POSITIVE_FLOOR: f64 = 1e-12;

/// Ex-ante and ex-post quantities of one market in one week.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarketSnapshot {
    pub market: Market,
    pub ex_ante_demand: f64,
    pub ex_ante_supply: f64,
    pub ex_post_quantity: f64,
}

impl MarketSnapshot {
    pub fn clear(market: Market, demand: f64, supply: f64) -> Self {
        Self {
            market,
            ex_ante_demand: demand,
            ex_ante_supply: supply,
            ex_post_quantity: short_side(demand, supply),
        }
    }

    pub fn excess_demand(&self) -> f64 {
        self.ex_ante_demand - self.ex_ante_supply
    }
}

/// The transacted quantity: the smaller of demand and supply.
pub fn short_side(demand: f64, supply: f64) -> f64 {
    demand.min(supply)
}

/// Splits `transacted` across `claims` in proportion to each claim. Claims
/// are served in full when they do not exceed the transacted total.
pub fn ration(claims: &[f64], transacted: f64) -> Vec<f64> {
    let total: f64 = claims.iter().sum();
    if total <= transacted {
        return claims.to_vec();
    }
    let share = transacted / total;
    claims.iter().map(|c| (c * share).min(*c)).collect()
}

/// Same as [`ration`] for the common two-claimant case.
pub fn ration_pair(first: f64, second: f64, transacted: f64) -> (f64, f64) {
    let total = first + second;
    if total <= transacted {
        return (first, second);
    }
    let share = transacted / total;
    let a = (first * share).min(first);
    // the remainder keeps the pair summing to the short side exactly
    let b = (transacted - a).clamp(0.0, second);
    (a, b)
}

/// Outcome of one price adjustment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriceUpdate {
    pub price: f64,
    /// Set when the raw rule produced a price below [`POSITIVE_FLOOR`].
    pub clamped: bool,
}

/// `price * (1 + 2 * atan(demand - supply) * varmax)`, floored at
/// [`POSITIVE_FLOOR`].
pub fn update_price(price: f64, demand: f64, supply: f64, varmax: f64) -> PriceUpdate {
    let raw = price + price * 2.0 * (demand - supply).atan() * varmax;
    if raw < POSITIVE_FLOOR {
        log::debug!("price floor engaged: raw price {raw} from {price}");
        PriceUpdate {
            price: POSITIVE_FLOOR,
            clamped: true,
        }
    } else {
        PriceUpdate {
            price: raw,
            clamped: false,
        }
    }
}

/// Applies [`update_price`] to each market independently. Returns the new
/// prices and how many times the floor engaged.
pub fn update_all_prices(
    prices: &PriceVector,
    snapshots: &[MarketSnapshot; 4],
    varmax: f64,
) -> (PriceVector, u32) {
    let mut next = *prices;
    let mut clamps = 0;
    for snap in snapshots {
        let old = prices.get(snap.market);
        let update = update_price(old, snap.ex_ante_demand, snap.ex_ante_supply, varmax);
        clamps += u32::from(update.clamped);
        next.set(snap.market, update.price);
    }
    (next, clamps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn short_side_examples() {
        assert_eq!(short_side(5.0, 3.0), 3.0);
        assert_eq!(short_side(2.0, 7.0), 2.0);
        assert_eq!(short_side(4.0, 4.0), 4.0);
    }

    #[test]
    fn ration_examples() {
        assert_eq!(ration(&[6.0, 4.0], 5.0), vec![3.0, 2.0]);
        assert_eq!(ration(&[6.0, 4.0], 10.0), vec![6.0, 4.0]);
        assert_eq!(ration(&[0.0, 0.0], 0.0), vec![0.0, 0.0]);
        assert_eq!(ration_pair(6.0, 4.0, 5.0), (3.0, 2.0));
        assert_eq!(ration_pair(0.0, 0.0, 0.0), (0.0, 0.0));
    }

    #[test]
    fn update_price_examples() {
        assert_eq!(update_price(1.0, 3.0, 3.0, 0.7).price, 1.0);
        let p = update_price(2.0, 4.0, 3.0, 0.1).price;
        assert!((p - (2.0 + 0.1 * PI)).abs() < 1e-12);
        let sup = 1.0 + 0.1 * PI;
        let near = update_price(1.0, 1e6, 0.0, 0.1).price;
        assert!(near < sup && sup - near < 1e-6);
    }

    #[test]
    fn floor_engages_only_for_fast_adjustment() {
        let slow = update_price(1.0, 0.0, 1e300, 0.3);
        assert!(!slow.clamped && slow.price > 0.0);
        let fast = update_price(1.0, 0.0, 1e300, 0.9);
        assert!(fast.clamped);
        assert_eq!(fast.price, POSITIVE_FLOOR);
    }

    #[test]
    fn componentwise_update() {
        let prices = PriceVector::new(1.0, 2.0, 3.0, 4.0);
        let snaps = [
            MarketSnapshot::clear(Market::Consumer, 2.0, 2.0),
            MarketSnapshot::clear(Market::NewCapital, 1.0, 1.0),
            MarketSnapshot::clear(Market::OldCapital, 5.0, 3.0),
            MarketSnapshot::clear(Market::Labor, 0.5, 0.5),
        ];
        let (next, clamps) = update_all_prices(&prices, &snaps, 0.1);
        assert_eq!(clamps, 0);
        assert_eq!(next.p_c, 1.0);
        assert_eq!(next.p_nk, 2.0);
        assert!(next.p_ok > 3.0);
        assert_eq!(next.p_ok, update_price(3.0, 5.0, 3.0, 0.1).price);
        assert_eq!(next.p_w, 4.0);
    }
}
