// Vary the number of workers and capital owners and classify each run.
use shortside::io::{run_sweep, SweepSpec};
use shortside::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SweepSpec::new(scenario_mixed())
        .with_axis("populations.n_rich", [1, 2, 4])?
        .with_axis("populations.n_poor", [0, 1, 3])?;
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_sweep(&spec, jobs)?;
    print!("{}", report.to_csv());
    Ok(())
}
