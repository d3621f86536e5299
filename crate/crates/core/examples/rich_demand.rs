// A rich household's plan as its capital grows. Past the threshold the
// household takes all of its time as leisure and lives off capital income.
use shortside::agents::corner_threshold;
use shortside::prelude::*;

fn main() {
    let prices = PriceVector::new(1.0, 1.0, 0.5, 1.0);
    let prefs = Preferences {
        scale_c: 1.0,
        alpha_one: 0.25,
        alpha_two: 0.25,
        alpha_three: 0.5,
    };
    let t = 10.0;
    let k_star = corner_threshold(&prices, &prefs, t);
    println!("labor hits zero once capital reaches {k_star}");

    println!("capital   D_ac    D_nk    leisure  O_al   corner");
    for k in [0.0, 10.0, 15.0, k_star, 60.0, 200.0] {
        let plan = rich_plan(&prices, k, &prefs, t);
        println!(
            "{k:>7.1} {:>7.3} {:>7.3} {:>7.3} {:>6.3} {}",
            plan.demand_consumer,
            plan.demand_new_capital,
            plan.free_time,
            plan.supply_labor,
            plan.corner
        );
    }

    let poor = poor_plan(&prices, 8.0);
    println!(
        "a worker with 8 hours buys {} of the consumer good",
        poor.demand_consumer
    );
}
