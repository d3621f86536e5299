// Rich and poor together. Once the rich withdraw, poor labor keeps both
// lines running and the real wage climbs.
use shortside::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = validate_config(scenario_mixed())?;
    let series = run_simulation(&config)?;

    let rich_exit = series
        .records
        .iter()
        .find(|r| r.rich_plan.supply_labor == 0.0)
        .map(|r| r.week);
    println!("rich stop working at week {rich_exit:?}");

    println!("week      K_stock   consumption   p_w/p_c");
    let last = series.len() - 1;
    for r in series
        .records
        .iter()
        .filter(|r| r.week % 50 == 0 || r.week as usize == last)
    {
        println!(
            "{:>4} {:>12.3} {:>13.3} {:>9.4}",
            r.week,
            r.capital_stock,
            r.consumption(),
            r.real_wage_ratio
        );
    }
    println!("regime: {:?}", classify_regime(&series, 201)?);
    Ok(())
}
