// Write the weekly series as CSV and JSON lines, plus the four SVG charts.
use shortside::io::{emit_plots, write_series, ExportFormat};
use shortside::prelude::*;
use std::fs::File;
use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "target/shortside-demo".into()),
    );
    std::fs::create_dir_all(&out)?;

    for (name, config) in [
        ("mixed", scenario_mixed()),
        ("rich_only", scenario_rich_only()),
    ] {
        let series = run_simulation(&validate_config(config)?)?;
        let dir = out.join(name);
        std::fs::create_dir_all(&dir)?;
        for format in [ExportFormat::Csv, ExportFormat::JsonLines] {
            let path = dir.join(format!("series.{}", format.extension()));
            write_series(&series, format, File::create(&path)?)?;
        }
        for path in emit_plots(&series, &dir)? {
            println!("{}", path.display());
        }
    }
    Ok(())
}
