// Capital owners alone: they sell less labor each week until none is left.
use shortside::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = validate_config(scenario_rich_only())?;
    let series = run_simulation(&config)?;

    println!("week   K_stock      O_al     labor   output_c");
    let last = series.len() - 1;
    for r in series
        .records
        .iter()
        .filter(|r| r.week % 8 == 0 || r.week as usize == last)
    {
        println!(
            "{:>4} {:>9.4} {:>9.4} {:>9.4} {:>10.4}",
            r.week,
            r.capital_stock,
            r.rich_plan.supply_labor,
            r.labor_ex_post(),
            r.output_consumer
        );
    }
    let regime = classify_regime(&series, 201)?;
    println!(
        "{:?} after {} weeks: {regime:?}",
        series.termination,
        series.len()
    );
    Ok(())
}
