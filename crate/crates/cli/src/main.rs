//! `ffsim`: deterministic command-line simulator for front-following LRF
//! sensor layouts. See the repository README for the file formats.

mod commands;
mod config;
mod numfmt;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ffsim_core::Point2;

use config::{ConfigFile, ScenarioFile};
use render::RenderSpec;

/// Failure categories aligned with the exit-code contract: input-parse
/// errors exit 2, domain precondition violations exit 3, I/O failures
/// exit 4. Bad command-line arguments also exit 2, via clap.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Domain(ffsim_core::Error),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "invalid input: {msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<ffsim_core::Error> for CliError {
    fn from(e: ffsim_core::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Parser)]
#[command(
    name = "ffsim",
    version,
    about = "Sensor-placement simulator for a front-following robot",
    long_about = "Builds the virtual sensing frame for a front-following robot, places the \
                  laser range finders under the four-corner or four-sided-center model, and \
                  answers geometric questions about the result: region classification, lock \
                  tracking along trajectories, coverage statistics, and SVG figures.\n\n\
                  All outputs are deterministic: the same inputs produce identical bytes."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolve the scale-expansion parameters and print them as JSON
    Expand(ExpandArgs),
    /// Print the constructed layout (rectangles, key points, LRF mounts)
    Layout(LayoutArgs),
    /// Classify a point and report the LRF units responsible for it
    Classify(ClassifyArgs),
    /// Replay a human trajectory and report per-step lock state
    Simulate(SimulateArgs),
    /// Sample a window into a coverage grid and print area statistics
    Coverage(CoverageArgs),
    /// Draw the layout as an SVG figure
    Render(RenderArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Config JSON file
    config: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct LayoutArgs {
    /// Config JSON file
    config: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Config JSON file
    config: PathBuf,
    /// Point to classify, as X,Y in meters (body frame, +Y forward)
    #[arg(long, allow_hyphen_values = true)]
    point: String,
}

#[derive(Args)]
struct SimulateArgs {
    /// Scenario JSON file (config + trajectory)
    scenario: PathBuf,
    /// Also write the JSON report to this file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a per-step CSV to this file
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct CoverageArgs {
    /// Config JSON file
    config: PathBuf,
    /// Side length of an origin-centered square window, meters
    /// (default: a square three virtual-frame sizes around the layout)
    #[arg(long, allow_negative_numbers = true)]
    window: Option<f64>,
    /// Grid cell size, meters
    #[arg(long, default_value_t = 0.05)]
    resolution: f64,
    /// Write the per-cell CSV to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Config JSON file
    config: PathBuf,
    /// Output SVG file
    #[arg(long)]
    out: PathBuf,
    /// Side length of an origin-centered square window, meters
    #[arg(long, allow_negative_numbers = true)]
    window: Option<f64>,
    /// Skip the virtual-frame rectangle
    #[arg(long)]
    no_virtual: bool,
    /// Skip the real-footprint rectangle
    #[arg(long)]
    no_real: bool,
    /// Skip the restricted-area rectangle
    #[arg(long)]
    no_restricted: bool,
    /// Skip the partition lines
    #[arg(long)]
    no_partition: bool,
    /// Skip the LRF markers
    #[arg(long)]
    no_lrf: bool,
    /// Mark and label a sample point, as X,Y (repeatable)
    #[arg(long = "point", allow_hyphen_values = true)]
    points: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn load_config(path: &Path) -> Result<ConfigFile, CliError> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_scenario(path: &Path) -> Result<ScenarioFile, CliError> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_point(s: &str) -> Result<Point2, CliError> {
    let bad = || CliError::Input(format!("point must be X,Y with finite numbers, got `{s}`"));
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    let x: f64 = x.trim().parse().map_err(|_| bad())?;
    let y: f64 = y.trim().parse().map_err(|_| bad())?;
    if !(x.is_finite() && y.is_finite()) {
        return Err(bad());
    }
    Ok(Point2::new(x, y))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Expand(a) => {
            let cfg = load_config(&a.config)?;
            print!("{}", commands::expand_text(&cfg)?);
        }
        Command::Layout(a) => {
            let cfg = load_config(&a.config)?;
            let text = match a.format {
                OutputFormat::Json => commands::layout_json(&cfg)?,
                OutputFormat::Csv => commands::layout_csv(&cfg)?,
            };
            print!("{text}");
        }
        Command::Classify(a) => {
            let cfg = load_config(&a.config)?;
            let point = parse_point(&a.point)?;
            print!("{}", commands::classify_text(&cfg, point)?);
        }
        Command::Simulate(a) => {
            let scenario = load_scenario(&a.scenario)?;
            let out = commands::simulate_outputs(scenario)?;
            if let Some(path) = &a.out {
                write_file(path, &out.json)?;
            }
            if let Some(path) = &a.csv {
                write_file(path, &out.csv)?;
            }
            print!("{}", out.json);
        }
        Command::Coverage(a) => {
            let cfg = load_config(&a.config)?;
            let out = commands::coverage_outputs(&cfg, a.window, a.resolution)?;
            if let Some(path) = &a.out {
                write_file(path, &out.cells_csv)?;
            }
            print!("{}", out.summary_json);
        }
        Command::Render(a) => {
            let cfg = load_config(&a.config)?;
            let mut sample_points = Vec::with_capacity(a.points.len());
            for s in &a.points {
                sample_points.push(parse_point(s)?);
            }
            let spec = RenderSpec {
                show_virtual: !a.no_virtual,
                show_real: !a.no_real,
                show_restricted: !a.no_restricted,
                show_partition: !a.no_partition,
                show_lrf: !a.no_lrf,
                sample_points,
            };
            let svg = commands::render_text(&cfg, a.window, &spec)?;
            write_file(&a.out, &svg)?;
        }
    }
    Ok(())
}
