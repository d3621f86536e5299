//! Producer planning and production for the two constant-returns lines.
//!
//! Under constant returns a price-taking producer either shuts down or wants
//! to produce without bound. Planned scale is therefore capped at
//! `multiplier` times the inputs anticipated to be on offer; a profitable
//! line jumps straight from zero to that cap. Both lines see the same
//! anticipated inputs and competition between them is settled by rationing.

use serde::{Deserialize, Serialize};

use crate::economy::Technology;

/// Cost-minimizing unit cost and input mix for one line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitCost {
    /// Currency per unit of output.
    pub cost: f64,
    /// Capital per hour of labor.
    pub capital_labor_ratio: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ProducerPlan {
    pub demand_capital: f64,
    pub demand_labor: f64,
    pub supply_output: f64,
}

impl ProducerPlan {
    pub const ZERO: ProducerPlan = ProducerPlan {
        demand_capital: 0.0,
        demand_labor: 0.0,
        supply_output: 0.0,
    };

    pub fn is_active(&self) -> bool {
        self.supply_output > 0.0
    }
}

/// `B * K^beta_one * L^beta_two`.
pub fn produce(tech: &Technology, capital: f64, labor: f64) -> f64 {
    if capital <= 0.0 || labor <= 0.0 {
        return 0.0;
    }
    tech.scale_b * capital.powf(tech.beta_one) * labor.powf(tech.beta_two)
}

pub fn unit_cost(tech: &Technology, rental: f64, wage: f64) -> UnitCost {
    let (b1, b2) = (tech.beta_one, tech.beta_two);
    UnitCost {
        cost: (rental / b1).powf(b1) * (wage / b2).powf(b2) / tech.scale_b,
        capital_labor_ratio: (b1 / b2) * (wage / rental),
    }
}

/// Ex-ante plan of the producer of one line.
///
/// Shuts down when `output_price <= unit cost`. Otherwise demands inputs in
/// the cost-minimizing mix, scaled up until one of
/// `K <= multiplier * capital_available` or
/// `L <= multiplier * labor_available` binds.
pub fn producer_plan(
    tech: &Technology,
    output_price: f64,
    rental: f64,
    wage: f64,
    capital_available: f64,
    labor_available: f64,
    multiplier: f64,
) -> ProducerPlan {
    let UnitCost {
        cost,
        capital_labor_ratio: ratio,
    } = unit_cost(tech, rental, wage);
    if output_price <= cost || capital_available <= 0.0 || labor_available <= 0.0 {
        return ProducerPlan::ZERO;
    }
    let capital_cap = multiplier * capital_available;
    let labor_cap = multiplier * labor_available;
    let (capital, labor) = if capital_cap <= ratio * labor_cap {
        (capital_cap, capital_cap / ratio)
    } else {
        (ratio * labor_cap, labor_cap)
    };
    ProducerPlan {
        demand_capital: capital,
        demand_labor: labor,
        supply_output: produce(tech, capital, labor),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT: Technology = Technology {
        scale_b: 1.0,
        beta_one: 0.5,
        beta_two: 0.5,
    };

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * a.abs().max(b.abs())
    }

    #[test]
    fn produce_examples() {
        let t = Technology {
            scale_b: 2.0,
            ..SQRT
        };
        assert!(close(produce(&t, 4.0, 9.0), 12.0));
        assert_eq!(produce(&t, 0.0, 9.0), 0.0);
        assert_eq!(produce(&t, 4.0, 0.0), 0.0);
        for lambda in [0.5, 2.0, 10.0] {
            let scaled = produce(&t, 4.0 * lambda, 9.0 * lambda);
            assert!((scaled - 12.0 * lambda).abs() <= 1e-12 * scaled);
        }
    }

    #[test]
    fn unit_cost_symmetric() {
        let uc = unit_cost(&SQRT, 1.0, 1.0);
        assert!(close(uc.cost, 2.0));
        assert_eq!(uc.capital_labor_ratio, 1.0);
        let doubled = unit_cost(
            &Technology {
                scale_b: 2.0,
                ..SQRT
            },
            1.0,
            1.0,
        );
        assert!(close(doubled.cost, 1.0));
        assert_eq!(doubled.capital_labor_ratio, 1.0);
    }

    #[test]
    fn unprofitable_line_shuts_down() {
        assert_eq!(
            producer_plan(&SQRT, 1.9, 1.0, 1.0, 10.0, 10.0, 1.5),
            ProducerPlan::ZERO
        );
        // zero-profit tie
        assert_eq!(
            producer_plan(&SQRT, 2.0, 1.0, 1.0, 10.0, 10.0, 1.5),
            ProducerPlan::ZERO
        );
    }

    #[test]
    fn profitable_line_scales_to_cap() {
        let plan = producer_plan(&SQRT, 3.0, 1.0, 1.0, 10.0, 10.0, 1.5);
        assert_eq!(plan.demand_capital, 15.0);
        assert_eq!(plan.demand_labor, 15.0);
        assert!(close(plan.supply_output, 15.0));
    }

    #[test]
    fn labor_cap_can_bind() {
        // ratio = wage/rental = 4, so labor binds first
        let plan = producer_plan(&SQRT, 100.0, 1.0, 4.0, 100.0, 10.0, 1.2);
        assert_eq!(plan.demand_labor, 12.0);
        assert_eq!(plan.demand_capital, 48.0);
        assert!(plan.demand_capital <= 120.0);
    }

    #[test]
    fn no_capital_means_no_plan() {
        assert_eq!(
            producer_plan(&SQRT, 1e9, 1.0, 1.0, 0.0, 10.0, 1.5),
            ProducerPlan::ZERO
        );
        assert_eq!(
            producer_plan(&SQRT, 1e9, 1.0, 1.0, 10.0, 0.0, 1.5),
            ProducerPlan::ZERO
        );
    }
}
