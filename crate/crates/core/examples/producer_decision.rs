// Unit cost and the bang-bang supply decision of a line.
use shortside::prelude::*;

fn main() {
    let tech = Technology {
        scale_b: 2.0,
        beta_one: 0.4,
        beta_two: 0.6,
    };
    let (rental, wage) = (0.8, 1.2);
    let cost = unit_cost(&tech, rental, wage);
    println!(
        "unit cost {:.4}, K/L {:.4}",
        cost.cost, cost.capital_labor_ratio
    );

    // capital 10 and labor 30 on offer, plans may overshoot by 20%
    for price in [0.5, cost.cost, 1.5, 3.0] {
        let plan = producer_plan(&tech, price, rental, wage, 10.0, 30.0, 1.2);
        println!(
            "price {price:.4}: K {:.3} L {:.3} supply {:.3}",
            plan.demand_capital, plan.demand_labor, plan.supply_output
        );
    }
    println!("produce(4, 9) = {}", produce(&tech, 4.0, 9.0));
}
