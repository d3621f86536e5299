use clap::{Parser, Subcommand};
use shortside::economy::ValidatedConfig;
use shortside::engine::{classify_regime, run_simulation, step_week, EngineError};
use shortside::io::{
    emit_plots, parse_config, parse_sweep_spec, run_sweep, write_series, ExportFormat,
};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Short-side rationing economy simulator.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate one scenario and export its weekly series.
    Run {
        config: PathBuf,
        /// Write the series (and plots) here instead of printing to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: ExportFormat,
        /// Also draw the four charts; needs --out.
        #[arg(long, requires = "out")]
        plots: bool,
    },
    /// Run every combination of a sweep document and report the regimes.
    Sweep {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a scenario document and list every problem found.
    Validate { config: PathBuf },
    /// Print the full record of one week as JSON.
    Trace {
        config: PathBuf,
        #[arg(long)]
        week: u64,
    },
}

enum Failure {
    Invalid(String),
    Diverged(EngineError),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Invalid(_) => ExitCode::from(1),
            Failure::Diverged(_) => ExitCode::from(2),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::NumericalDivergence { .. } => Failure::Diverged(e),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn invalid(e: impl ToString) -> Failure {
    Failure::Invalid(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ValidatedConfig, Failure> {
    parse_config(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn run(
    config: &Path,
    out: Option<&Path>,
    format: ExportFormat,
    plots: bool,
) -> Result<(), Failure> {
    let config = load(config)?;
    let series = run_simulation(&config)?;
    match out {
        None => write_series(&series, format, io::stdout().lock()).map_err(invalid)?,
        Some(dir) => {
            fs::create_dir_all(dir).map_err(invalid)?;
            let path = dir.join(format!("series.{}", format.extension()));
            let file = fs::File::create(&path).map_err(invalid)?;
            write_series(&series, format, io::BufWriter::new(file)).map_err(invalid)?;
            if plots {
                emit_plots(&series, dir).map_err(invalid)?;
            }
        }
    }
    let regime = match classify_regime(&series, series.len().min(201)) {
        Ok(r) => r.name().to_string(),
        Err(_) => "none".to_string(),
    };
    eprintln!(
        "{} weeks, termination {:?}, regime {regime}",
        series.len(),
        series.termination
    );
    Ok(())
}

fn sweep(spec: &Path, out: Option<&Path>, jobs: usize) -> Result<(), Failure> {
    let dir = spec.parent().unwrap_or(Path::new("."));
    let spec = parse_sweep_spec(&read(spec)?, dir).map_err(invalid)?;
    let report = run_sweep(&spec, jobs).map_err(invalid)?;
    let csv = report.to_csv();
    match out {
        None => io::stdout()
            .lock()
            .write_all(csv.as_bytes())
            .map_err(invalid)?,
        Some(dir) => {
            fs::create_dir_all(dir).map_err(invalid)?;
            fs::write(dir.join("sweep.csv"), csv).map_err(invalid)?;
        }
    }
    eprintln!("{} combinations", report.rows.len());
    Ok(())
}

fn trace(config: &Path, week: u64) -> Result<(), Failure> {
    let config = load(config)?;
    if week >= config.horizon {
        return Err(invalid(format!(
            "week {week} is past the horizon {}",
            config.horizon
        )));
    }
    let mut state = config.initial_state;
    loop {
        let (next, record) = step_week(&state, &config)?;
        if record.week == week {
            let json = serde_json::to_string_pretty(&record).map_err(invalid)?;
            println!("{json}");
            return Ok(());
        }
        if record.is_dead() && next.capital_stock == 0.0 {
            return Err(invalid(format!(
                "the economy was absorbed at week {}, before week {week}",
                record.week
            )));
        }
        state = next;
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SHORTSIDE_LOG", "warn"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Run {
            config,
            out,
            format,
            plots,
        } => run(&config, out.as_deref(), format, plots),
        Command::Sweep { spec, out, jobs } => sweep(&spec, out.as_deref(), jobs),
        Command::Validate { config } => load(&config).map(|c| {
            println!(
                "ok: {} weeks, {} rich, {} poor",
                c.horizon, c.populations.n_rich, c.populations.n_poor
            );
        }),
        Command::Trace { config, week } => trace(&config, week),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Invalid(msg) => eprintln!("error: {msg}"),
                Failure::Diverged(e) => eprintln!("error: {e}"),
            }
            failure.exit_code()
        }
    }
}
