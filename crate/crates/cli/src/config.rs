//! Command-line flags, JSON configuration files and their resolution into
//! a [`RunConfig`]. Precedence is flag, then config file, then default.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use qarrow::experiments::{ThreeQubitGrid, ThreeQubitTrace, TwoQubitScenario, DEFAULT_DEAD_BAND};
use qarrow::state::ThreeQubitParams;
use serde::Deserialize;

use crate::alpha::parse_alpha;

#[derive(Debug, Parser)]
#[command(name = "qarrow", version, about = "Heat exchange between qubits and the complexity of their state")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Two thermal qubits under the exchange interaction.
    TwoQubit(TwoQubitArgs),
    /// Sweep of the three-qubit interaction strengths at fixed time.
    ThreeQubitGrid(GridArgs),
    /// Three-qubit evolution in time at s = t = 1.
    ThreeQubitTrace(TraceArgs),
    /// Arrow-of-time report for an existing two-qubit CSV file.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Output path prefix; `.csv` and `.svg` are appended.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write an SVG plot.
    #[arg(long)]
    pub plot: bool,
    /// Worker threads for the evaluation.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    /// JSON file with default values for any of the other flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TwoQubitArgs {
    /// Correlation strength: `0.1`, `0.1i`, `0.1+0.2i` or `0.1@1.5708`.
    #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub beta_a: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub beta_b: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub t_start: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub t_end: Option<f64>,
    /// Number of samples, endpoints included.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub steps: Option<u64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub temp_b: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub lambda_a: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub lambda_c: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub tau: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub s_min: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub s_max: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub t_min: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub t_max: Option<f64>,
    /// Points per axis.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub resolution: Option<u64>,
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    /// First evolution time.
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub t_start: Option<f64>,
    /// Last evolution time.
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub t_end: Option<f64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub steps: Option<u64>,
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// CSV file written by `two-qubit`.
    pub csv: PathBuf,
    /// |derivative| at or below which a sample counts as flat.
    #[arg(long, value_parser = non_negative)]
    pub dead_band: Option<f64>,
}

fn finite(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        Ok(_) => Err("value must be finite".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn non_negative(s: &str) -> Result<f64, String> {
    let x = finite(s)?;
    if x < 0.0 {
        return Err("value must not be negative".into());
    }
    Ok(x)
}

/// Either a number or one of the [`parse_alpha`] strings.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum AlphaValue {
    Real(f64),
    Text(String),
}

/// Contents of a `--config` file. Every field is optional and named after
/// its flag.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub alpha: Option<AlphaValue>,
    pub beta_a: Option<f64>,
    pub beta_b: Option<f64>,
    pub t_start: Option<f64>,
    pub t_end: Option<f64>,
    pub steps: Option<usize>,
    pub tau: Option<f64>,
    pub s_min: Option<f64>,
    pub s_max: Option<f64>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub resolution: Option<usize>,
    pub temp_b: Option<f64>,
    pub lambda_a: Option<f64>,
    pub lambda_c: Option<f64>,
    pub gamma: Option<f64>,
    pub out: Option<PathBuf>,
    pub plot: Option<bool>,
    pub jobs: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("--config: cannot read {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("--config: invalid JSON in {}", path.display()))
    }

    fn alpha(&self) -> anyhow::Result<Option<Complex64>> {
        match &self.alpha {
            None => Ok(None),
            Some(AlphaValue::Real(x)) => Ok(Some(Complex64::new(*x, 0.0))),
            Some(AlphaValue::Text(s)) => parse_alpha(s).map(Some).map_err(|e| anyhow::anyhow!("config field `alpha`: {e}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Experiment {
    TwoQubit(TwoQubitScenario),
    ThreeQubitGrid(ThreeQubitGrid),
    ThreeQubitTrace(ThreeQubitTrace),
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        match self {
            Self::TwoQubit(_) => "two_qubit",
            Self::ThreeQubitGrid(_) => "three_qubit_grid",
            Self::ThreeQubitTrace(_) => "three_qubit_trace",
        }
    }
}

/// A fully resolved simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub experiment: Experiment,
    pub out: PathBuf,
    pub plot: bool,
    /// `None` uses the ambient thread pool.
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn csv_path(&self) -> PathBuf {
        with_suffix(&self.out, "csv")
    }

    pub fn svg_path(&self) -> PathBuf {
        with_suffix(&self.out, "svg")
    }
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportConfig {
    pub csv: PathBuf,
    pub dead_band: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Invocation {
    Run(RunConfig),
    Report(ReportConfig),
}

fn load_config(path: &Option<PathBuf>) -> anyhow::Result<ConfigFile> {
    path.as_deref().map(ConfigFile::load).transpose().map(Option::unwrap_or_default)
}

fn count(flag: Option<u64>, file: Option<usize>, default: usize, name: &str) -> anyhow::Result<usize> {
    let n = flag.map(|n| n as usize).or(file).unwrap_or(default);
    if n < 2 {
        bail!("--{name}: must be at least 2, got {n}");
    }
    Ok(n)
}

fn number(flag: Option<f64>, file: Option<f64>, default: f64, name: &str) -> anyhow::Result<f64> {
    let x = flag.or(file).unwrap_or(default);
    if !x.is_finite() {
        bail!("--{name}: must be finite");
    }
    Ok(x)
}

fn ordered(lo: f64, hi: f64, lo_name: &str, hi_name: &str) -> anyhow::Result<()> {
    if lo >= hi {
        bail!("--{lo_name} ({lo}) must be below --{hi_name} ({hi})");
    }
    Ok(())
}

fn state_params(args: &StateArgs, file: &ConfigFile) -> anyhow::Result<ThreeQubitParams<f64>> {
    let d = ThreeQubitParams::<f64>::default();
    let p = ThreeQubitParams {
        temp_b: number(args.temp_b, file.temp_b, d.temp_b, "temp-b")?,
        lambda_a: number(args.lambda_a, file.lambda_a, d.lambda_a, "lambda-a")?,
        lambda_c: number(args.lambda_c, file.lambda_c, d.lambda_c, "lambda-c")?,
        gamma: number(args.gamma, file.gamma, d.gamma, "gamma")?,
    };
    qarrow::state::three_qubit_initial(&p)
        .with_context(|| "--lambda-a/--lambda-c/--gamma/--temp-b do not describe a valid initial state")?;
    Ok(p)
}

fn common(args: &CommonArgs, file: &ConfigFile, default_out: &str) -> anyhow::Result<(PathBuf, bool, Option<usize>)> {
    let out = args.out.clone().or_else(|| file.out.clone()).unwrap_or_else(|| default_out.into());
    if out.as_os_str().is_empty() {
        bail!("--out: output prefix must not be empty");
    }
    let jobs = args.jobs.map(|j| j as usize).or(file.jobs);
    if jobs == Some(0) {
        bail!("--jobs: must be at least 1");
    }
    Ok((out, args.plot || file.plot.unwrap_or(false), jobs))
}

/// Resolves parsed flags against the config file and the defaults.
pub fn resolve(cli: Cli) -> anyhow::Result<Invocation> {
    let (experiment, (out, plot, jobs)) = match cli.command {
        Command::Report(args) => {
            return Ok(Invocation::Report(ReportConfig {
                csv: args.csv,
                dead_band: args.dead_band.unwrap_or(DEFAULT_DEAD_BAND),
            }))
        }
        Command::TwoQubit(args) => {
            let file = load_config(&args.common.config)?;
            let d = TwoQubitScenario::default();
            let scenario = TwoQubitScenario {
                beta_a: number(args.beta_a, file.beta_a, d.beta_a, "beta-a")?,
                beta_b: number(args.beta_b, file.beta_b, d.beta_b, "beta-b")?,
                alpha: args.alpha.or(file.alpha()?).unwrap_or(d.alpha),
                t_start: number(args.t_start, file.t_start, d.t_start, "t-start")?,
                t_end: number(args.t_end, file.t_end, d.t_end, "t-end")?,
                steps: count(args.steps, file.steps, d.steps, "steps")?,
            };
            ordered(scenario.t_start, scenario.t_end, "t-start", "t-end")?;
            scenario.initial_state().with_context(|| {
                format!("--alpha {}: initial state is not a valid density matrix", scenario.alpha)
            })?;
            let experiment = Experiment::TwoQubit(scenario);
            let c = common(&args.common, &file, experiment.name())?;
            (experiment, c)
        }
        Command::ThreeQubitGrid(args) => {
            let file = load_config(&args.common.config)?;
            let d = ThreeQubitGrid::default();
            let grid = ThreeQubitGrid {
                tau: number(args.tau, file.tau, d.tau, "tau")?,
                s_range: (
                    number(args.s_min, file.s_min, d.s_range.0, "s-min")?,
                    number(args.s_max, file.s_max, d.s_range.1, "s-max")?,
                ),
                t_range: (
                    number(args.t_min, file.t_min, d.t_range.0, "t-min")?,
                    number(args.t_max, file.t_max, d.t_range.1, "t-max")?,
                ),
                resolution: count(args.resolution, file.resolution, d.resolution, "resolution")?,
                state: state_params(&args.state, &file)?,
            };
            ordered(grid.s_range.0, grid.s_range.1, "s-min", "s-max")?;
            ordered(grid.t_range.0, grid.t_range.1, "t-min", "t-max")?;
            let experiment = Experiment::ThreeQubitGrid(grid);
            let c = common(&args.common, &file, experiment.name())?;
            (experiment, c)
        }
        Command::ThreeQubitTrace(args) => {
            let file = load_config(&args.common.config)?;
            let d = ThreeQubitTrace::default();
            let trace = ThreeQubitTrace {
                tau_range: (
                    number(args.t_start, file.t_start, d.tau_range.0, "t-start")?,
                    number(args.t_end, file.t_end, d.tau_range.1, "t-end")?,
                ),
                steps: count(args.steps, file.steps, d.steps, "steps")?,
                state: state_params(&args.state, &file)?,
                ..d
            };
            ordered(trace.tau_range.0, trace.tau_range.1, "t-start", "t-end")?;
            let experiment = Experiment::ThreeQubitTrace(trace);
            let c = common(&args.common, &file, experiment.name())?;
            (experiment, c)
        }
    };
    Ok(Invocation::Run(RunConfig { experiment, out, plot, jobs }))
}

/// Parses `argv` (including the program name) and resolves it.
pub fn parse_args<I, T>(argv: I) -> anyhow::Result<Invocation>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    resolve(Cli::try_parse_from(argv)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(argv: &[&str]) -> RunConfig {
        match parse_args(std::iter::once("qarrow").chain(argv.iter().copied())).unwrap() {
            Invocation::Run(r) => r,
            other => panic!("{other:?}"),
        }
    }

    fn scenario(argv: &[&str]) -> TwoQubitScenario {
        match run(argv).experiment {
            Experiment::TwoQubit(s) => s,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn defaults() {
        let r = run(&["two-qubit"]);
        assert_eq!(r.experiment, Experiment::TwoQubit(TwoQubitScenario::default()));
        assert_eq!(r.csv_path(), PathBuf::from("two_qubit.csv"));
        assert!(!r.plot);
        assert_eq!(r.jobs, None);
        assert_eq!(run(&["three-qubit-grid"]).experiment, Experiment::ThreeQubitGrid(ThreeQubitGrid::default()));
        assert_eq!(run(&["three-qubit-trace"]).experiment, Experiment::ThreeQubitTrace(ThreeQubitTrace::default()));
    }

    #[test]
    fn alpha_flag() {
        assert_eq!(scenario(&["two-qubit", "--alpha", "0.1"]).alpha, Complex64::new(0.1, 0.0));
        assert_eq!(scenario(&["two-qubit", "--alpha", "0.1i"]).alpha, Complex64::new(0.0, 0.1));
        assert_eq!(scenario(&["two-qubit", "--alpha", "-0.1"]).alpha, Complex64::new(-0.1, 0.0));
    }

    #[test]
    fn usage_errors_name_the_flag() {
        let err = |argv: &[&str]| {
            parse_args(std::iter::once("qarrow").chain(argv.iter().copied())).unwrap_err().to_string()
        };
        assert!(err(&["three-qubit-grid", "--resolution", "0"]).contains("--resolution"));
        assert!(err(&["two-qubit", "--steps", "1"]).contains("--steps"));
        assert!(err(&["two-qubit", "--alpha", "zz"]).contains("--alpha"));
        assert!(err(&["two-qubit", "--alpha", "0.5"]).contains("--alpha"));
        assert!(err(&["two-qubit", "--t-start", "2"]).contains("--t-start"));
        assert!(err(&["two-qubit", "--bogus", "1"]).contains("--bogus"));
        assert!(err(&["two-qubit", "--jobs", "0"]).contains("--jobs"));
        assert!(err(&["three-qubit-grid", "--gamma", "0.9"]).contains("--gamma"));
        assert!(err(&["two-qubit", "--resolution", "5"]).contains("--resolution"));
    }

    #[test]
    fn flags_beat_config_beats_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        fs::write(&path, r#"{"alpha": "0.1i", "steps": 11, "beta_a": 0.5, "plot": true, "out": "x"}"#).unwrap();
        let p = path.to_str().unwrap();
        let r = run(&["two-qubit", "--config", p, "--steps", "21"]);
        let Experiment::TwoQubit(s) = &r.experiment else { panic!() };
        assert_eq!(s.steps, 21);
        assert_eq!(s.alpha, Complex64::new(0.0, 0.1));
        assert_eq!(s.beta_a, 0.5);
        assert_eq!(s.beta_b, 2.0);
        assert!(r.plot);
        assert_eq!(r.out, PathBuf::from("x"));
        fs::write(&path, r#"{"alpha": 0.1}"#).unwrap();
        assert_eq!(scenario(&["two-qubit", "--config", p]).alpha, Complex64::new(0.1, 0.0));
    }

    #[test]
    fn config_errors() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        fs::write(&path, r#"{"stepz": 3}"#).unwrap();
        let argv = ["qarrow", "two-qubit", "--config", path.to_str().unwrap()];
        assert!(format!("{:#}", parse_args(argv).unwrap_err()).contains("stepz"));
        fs::write(&path, r#"{"resolution": 1}"#).unwrap();
        let argv = ["qarrow", "three-qubit-grid", "--config", path.to_str().unwrap()];
        assert!(parse_args(argv).unwrap_err().to_string().contains("--resolution"));
        let argv = ["qarrow", "two-qubit", "--config", "/nonexistent/c.json"];
        assert!(parse_args(argv).unwrap_err().to_string().contains("--config"));
    }

    #[test]
    fn report_arguments() {
        let inv = parse_args(["qarrow", "report", "a.csv", "--dead-band", "1e-5"]).unwrap();
        assert_eq!(inv, Invocation::Report(ReportConfig { csv: "a.csv".into(), dead_band: 1e-5 }));
    }
}
