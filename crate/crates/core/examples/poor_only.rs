// Workers only. Nobody demands new capital, so the first week's output of
// the capital line goes unsold and the stock vanishes.
use shortside::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let series = run_simulation(&validate_config(scenario_poor_only())?)?;
    for r in &series.records {
        println!(
            "week {}: K {} -> {}, consumption {:.4}, labor {:.4}",
            r.week,
            r.capital_stock,
            r.capital_stock_next,
            r.consumption(),
            r.labor_ex_post()
        );
    }
    println!("{:?}", series.termination);
    Ok(())
}
