//! Command-line driver for the `qarrow` heat-exchange experiments.
//!
//! [`parse_args`] turns an argument vector into an [`Invocation`];
//! [`execute`] runs it, writes the CSV (and optionally SVG) output and
//! returns a human-readable summary.

pub mod alpha;
pub mod config;
pub mod output;
pub mod plot;

use std::fmt::Write as _;
use std::fs;

use anyhow::Context;
use qarrow::experiments::{
    arrow_complexity_report, arrow_concurrence_report, grid_rank_correlations, run_three_qubit_grid,
    run_three_qubit_trace, run_two_qubit, sign_change_times, ArrowReport, ReportOptions, TraceRecord,
    TwoQubitRecord,
};

pub use config::{parse_args, Experiment, Invocation, ReportConfig, RunConfig};
pub use output::{emit_csv, format_number, render_csv};

/// Runs the simulation described by `config` and writes its outputs.
pub fn execute_run(config: &RunConfig) -> anyhow::Result<String> {
    match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .context("cannot start the worker pool")?
            .install(|| run_inner(config)),
        None => run_inner(config),
    }
}

fn run_inner(config: &RunConfig) -> anyhow::Result<String> {
    let csv = config.csv_path();
    let svg = config.svg_path();
    let mut summary = String::new();
    match &config.experiment {
        Experiment::TwoQubit(scenario) => {
            let records = run_two_qubit(scenario)?;
            emit_csv(&records, &csv)?;
            if config.plot {
                let title = format!("two qubits, alpha = {}", scenario.alpha);
                output::write_atomic(&svg, &plot::two_qubit_plot(&records, &title))?;
            }
            summary.push_str(&two_qubit_summary(&records, &ReportOptions::default())?);
        }
        Experiment::ThreeQubitGrid(grid) => {
            let records = run_three_qubit_grid(grid)?;
            emit_csv(&records, &csv)?;
            if config.plot {
                let title = format!("three qubits at tau = {}", grid.tau);
                output::write_atomic(&svg, &plot::grid_plot(&records, &grid.s_axis(), &grid.t_axis(), &title))?;
            }
            let rho = grid_rank_correlations(&records);
            let _ = writeln!(summary, "rank correlation  C_AB      C_BC      C_AC");
            for (name, row) in ["E_A", "E_B", "E_C"].iter().zip(rho) {
                let cells: Vec<String> =
                    row.iter().map(|c| c.map_or("   n/a  ".into(), |v| format!("{v:+.5}"))).collect();
                let _ = writeln!(summary, "{name:<17} {}", cells.join("  "));
            }
        }
        Experiment::ThreeQubitTrace(trace) => {
            let records = run_three_qubit_trace(trace)?;
            emit_csv(&records, &csv)?;
            if config.plot {
                let title = format!("three qubits, s = {}, t = {}", trace.s, trace.t);
                output::write_atomic(&svg, &plot::trace_plot(&records, &title))?;
            }
            summary.push_str(&trace_summary(&records));
        }
    }
    let _ = writeln!(summary, "wrote {}", csv.display());
    if config.plot {
        let _ = writeln!(summary, "wrote {}", svg.display());
    }
    Ok(summary)
}

fn describe(label: &str, report: &ArrowReport) -> String {
    let fraction = report.fraction.map_or("undefined (every sample stalled)".to_string(), |f| format!("{f:.4}"));
    let mut line = format!("{label}: {}/{} consistent, fraction {fraction}", report.consistent, report.classified);
    if !report.mismatches.is_empty() {
        let shown: Vec<String> = report.mismatches.iter().take(8).map(|t| format!("{t:.4}")).collect();
        let more = if report.mismatches.len() > 8 { ", ..." } else { "" };
        let _ = write!(line, "; mismatches at t = {}{more}", shown.join(", "));
    }
    line.push('\n');
    line
}

/// Arrow-of-time agreement with complexity and with concurrence.
pub fn two_qubit_summary(records: &[TwoQubitRecord], opts: &ReportOptions) -> anyhow::Result<String> {
    let mut s = describe("arrow vs complexity", &arrow_complexity_report(records, opts)?);
    s.push_str(&describe("arrow vs concurrence", &arrow_concurrence_report(records, opts)?));
    Ok(s)
}

type Column = (&'static str, fn(&TraceRecord) -> f64);

fn trace_summary(records: &[TraceRecord]) -> String {
    let taus: Vec<f64> = records.iter().map(|r| r.tau).collect();
    let columns: [Column; 6] = [
        ("E_A", |r| r.e_a),
        ("E_B", |r| r.e_b),
        ("E_C", |r| r.e_c),
        ("C_AB", |r| r.c_ab),
        ("C_BC", |r| r.c_bc),
        ("C_AC", |r| r.c_ac),
    ];
    let mut s = String::from("turning points\n");
    for (name, f) in columns {
        let values: Vec<f64> = records.iter().map(f).collect();
        let changes: Vec<String> = sign_change_times(&taus, &values, qarrow::experiments::DEFAULT_DEAD_BAND)
            .iter()
            .map(|t| format!("{t:.3}"))
            .collect();
        let _ = writeln!(s, "  {name:<5} {}", changes.join(" "));
    }
    s
}

/// Re-reads a two-qubit CSV and reports its arrow-of-time consistency.
pub fn execute_report(config: &ReportConfig) -> anyhow::Result<String> {
    let text = fs::read_to_string(&config.csv).with_context(|| format!("cannot read {}", config.csv.display()))?;
    let records = output::parse_two_qubit_csv(&text).with_context(|| format!("{}", config.csv.display()))?;
    let opts = ReportOptions { dead_band: config.dead_band, ..ReportOptions::default() };
    two_qubit_summary(&records, &opts)
}

pub fn execute(invocation: &Invocation) -> anyhow::Result<String> {
    match invocation {
        Invocation::Run(run) => execute_run(run),
        Invocation::Report(report) => execute_report(report),
    }
}
