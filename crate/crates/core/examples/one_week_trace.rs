// Step a single week and dump everything the engine recorded.
use shortside::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let week = std::env::args()
        .nth(1)
        .map(|w| w.parse())
        .transpose()?
        .unwrap_or(0u64);
    let config = validate_config(scenario_mixed())?;
    let mut state = config.initial_state;
    let record = loop {
        let (next, record) = step_week(&state, &config)?;
        if record.week == week {
            break record;
        }
        state = next;
    };

    for m in record.markets.as_array() {
        println!(
            "{:<12} demand {:>10.4} supply {:>10.4} traded {:>10.4}",
            m.market.name(),
            m.ex_ante_demand,
            m.ex_ante_supply,
            m.ex_post_quantity
        );
    }
    println!("{}", serde_json::to_string_pretty(&record)?);
    Ok(())
}
