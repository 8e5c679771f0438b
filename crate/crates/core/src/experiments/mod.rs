//! End-to-end reproductions of the heat-exchange experiments.
//!
//! Every run evaluates its samples independently (each propagator is built
//! from time zero), so work is spread over the ambient rayon pool while
//! the returned records stay in grid order. Wrap calls in
//! `ThreadPool::install` to bound the parallelism.

mod report;
mod three_qubit;
mod two_qubit;

pub use report::{
    arrow_complexity_report, arrow_concurrence_report, arrow_report, central_difference,
    grid_rank_correlations, rank_correlation, sign_change_times, ArrowKind, ArrowReport,
    ArrowSample, ReportOptions, Trend, DEFAULT_DEAD_BAND, DEFAULT_TEMPERATURE_BAND,
};
pub use three_qubit::{
    run_three_qubit_grid, run_three_qubit_trace, three_qubit_diagnostics, GridRecord,
    ThreeQubitDiagnostics, ThreeQubitGrid, ThreeQubitTrace, TraceRecord,
};
pub use two_qubit::{run_two_qubit, two_qubit_sample, TwoQubitRecord, TwoQubitScenario};

use crate::error::{Error, Result};

/// `steps` evenly spaced points from `start` to `end`, both included.
pub fn linspace(start: f64, end: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let h = (end - start) / (steps - 1) as f64;
            (0..steps)
                .map(|k| if k == steps - 1 { end } else { start + h * k as f64 })
                .collect()
        }
    }
}

pub(crate) fn check_range(name: &str, lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidConfig(format!("{name}: need finite {lo} < {hi}")));
    }
    Ok(())
}

pub(crate) fn check_count(name: &str, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!("{name} must be at least 2, got {n}")));
    }
    Ok(())
}
