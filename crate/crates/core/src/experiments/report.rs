//! Arrow-of-time classification and its agreement with a second signal.
//!
//! At each interior sample the hotter qubit is the one with the larger
//! internal energy (both qubits share the same local Hamiltonian, so this
//! is the one at higher local temperature). Heat leaving the hotter qubit
//! is a normal arrow; heat entering it is reversed. The report counts how
//! often a normal arrow coincides with a rising signal and a reversed
//! arrow with a falling one.

use super::{GridRecord, TwoQubitRecord};
use crate::error::{Error, Result};

/// Default |d/dt| below which a derivative counts as zero.
pub const DEFAULT_DEAD_BAND: f64 = 1e-6;
/// Default |E_A − E_B| below which neither qubit is hotter.
pub const DEFAULT_TEMPERATURE_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportOptions {
    pub dead_band: f64,
    pub temperature_band: f64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { dead_band: DEFAULT_DEAD_BAND, temperature_band: DEFAULT_TEMPERATURE_BAND }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    Normal,
    Reversed,
    Stalled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Rising,
    Falling,
    Flat,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrowSample {
    pub time: f64,
    pub arrow: ArrowKind,
    pub trend: Trend,
}

impl ArrowSample {
    pub fn is_consistent(&self) -> bool {
        matches!((self.arrow, self.trend), (ArrowKind::Normal, Trend::Rising) | (ArrowKind::Reversed, Trend::Falling))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArrowReport {
    pub samples: Vec<ArrowSample>,
    /// Samples with a non-stalled arrow.
    pub classified: usize,
    pub consistent: usize,
    /// `consistent / classified`; `None` when every sample is stalled.
    pub fraction: Option<f64>,
    /// Times of classified samples that disagree with the signal.
    pub mismatches: Vec<f64>,
}

/// Central differences, one-sided at the ends.
pub fn central_difference(times: &[f64], values: &[f64]) -> Vec<f64> {
    let n = values.len();
    assert_eq!(times.len(), n, "times and values differ in length");
    if n < 2 {
        return vec![0.0; n];
    }
    (0..n)
        .map(|i| {
            let (lo, hi) = match i {
                0 => (0, 1),
                i if i == n - 1 => (n - 2, n - 1),
                i => (i - 1, i + 1),
            };
            (values[hi] - values[lo]) / (times[hi] - times[lo])
        })
        .collect()
}

fn trend(d: f64, dead_band: f64) -> Trend {
    if d > dead_band {
        Trend::Rising
    } else if d < -dead_band {
        Trend::Falling
    } else {
        Trend::Flat
    }
}

/// Classifies every interior sample of a two-qubit energy series against
/// `signal`.
pub fn arrow_report(
    times: &[f64],
    e_a: &[f64],
    e_b: &[f64],
    signal: &[f64],
    opts: &ReportOptions,
) -> Result<ArrowReport> {
    let n = times.len();
    if n < 3 {
        return Err(Error::TooFewSamples { needed: 3, found: n });
    }
    if e_a.len() != n || e_b.len() != n || signal.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: e_a.len().min(e_b.len()).min(signal.len()) });
    }
    let d_a = central_difference(times, e_a);
    let d_b = central_difference(times, e_b);
    let d_signal = central_difference(times, signal);

    let mut samples = Vec::with_capacity(n - 2);
    for i in 1..n - 1 {
        let gap = e_a[i] - e_b[i];
        let arrow = if gap.abs() <= opts.temperature_band {
            ArrowKind::Stalled
        } else {
            let d_hot = if gap > 0.0 { d_a[i] } else { d_b[i] };
            match trend(d_hot, opts.dead_band) {
                Trend::Falling => ArrowKind::Normal,
                Trend::Rising => ArrowKind::Reversed,
                Trend::Flat => ArrowKind::Stalled,
            }
        };
        samples.push(ArrowSample { time: times[i], arrow, trend: trend(d_signal[i], opts.dead_band) });
    }
    let classified = samples.iter().filter(|s| s.arrow != ArrowKind::Stalled).count();
    let consistent = samples.iter().filter(|s| s.is_consistent()).count();
    let mismatches = samples
        .iter()
        .filter(|s| s.arrow != ArrowKind::Stalled && !s.is_consistent())
        .map(|s| s.time)
        .collect();
    Ok(ArrowReport {
        samples,
        classified,
        consistent,
        fraction: (classified > 0).then(|| consistent as f64 / classified as f64),
        mismatches,
    })
}

fn split(series: &[TwoQubitRecord]) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    (
        series.iter().map(|r| r.time).collect(),
        series.iter().map(|r| r.e_a).collect(),
        series.iter().map(|r| r.e_b).collect(),
    )
}

/// Arrow of time against the state complexity of `ρ_AB`.
pub fn arrow_complexity_report(series: &[TwoQubitRecord], opts: &ReportOptions) -> Result<ArrowReport> {
    let (t, a, b) = split(series);
    let c: Vec<f64> = series.iter().map(|r| r.complexity).collect();
    arrow_report(&t, &a, &b, &c, opts)
}

/// Arrow of time against the concurrence of `ρ_AB`.
pub fn arrow_concurrence_report(series: &[TwoQubitRecord], opts: &ReportOptions) -> Result<ArrowReport> {
    let (t, a, b) = split(series);
    let c: Vec<f64> = series.iter().map(|r| r.concurrence).collect();
    arrow_report(&t, &a, &b, &c, opts)
}

/// Interior sample times at which the derivative changes sign (ignoring
/// samples inside the dead band).
pub fn sign_change_times(times: &[f64], values: &[f64], dead_band: f64) -> Vec<f64> {
    let d = central_difference(times, values);
    let mut out = Vec::new();
    let mut last: Option<(usize, Trend)> = None;
    for (i, &di) in d.iter().enumerate() {
        let tr = trend(di, dead_band);
        if tr == Trend::Flat {
            continue;
        }
        if let Some((j, prev)) = last {
            if prev != tr {
                out.push(0.5 * (times[j] + times[i]));
            }
        }
        last = Some((i, tr));
    }
    out
}

fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&a, &b| xs[a].partial_cmp(&xs[b]).expect("finite"));
    let mut r = vec![0.0; xs.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && xs[idx[j + 1]] == xs[idx[i]] {
            j += 1;
        }
        let avg = 0.5 * (i + j) as f64;
        for k in i..=j {
            r[idx[k]] = avg;
        }
        i = j + 1;
    }
    r
}

/// Spearman rank correlation; `None` for constant inputs.
pub fn rank_correlation(xs: &[f64], ys: &[f64]) -> Option<f64> {
    assert_eq!(xs.len(), ys.len());
    let (rx, ry) = (ranks(xs), ranks(ys));
    let n = rx.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    (sxx > 0.0 && syy > 0.0).then(|| sxy / (sxx * syy).sqrt())
}

/// Spearman coefficients between each energy surface (rows E_A, E_B, E_C)
/// and each complexity surface (columns C_AB, C_BC, C_AC).
pub fn grid_rank_correlations(records: &[GridRecord]) -> [[Option<f64>; 3]; 3] {
    let col = |f: fn(&GridRecord) -> f64| records.iter().map(f).collect::<Vec<_>>();
    let energies = [col(|r| r.e_a), col(|r| r.e_b), col(|r| r.e_c)];
    let complexities = [col(|r| r.c_ab), col(|r| r.c_bc), col(|r| r.c_ac)];
    let mut out = [[None; 3]; 3];
    for (i, e) in energies.iter().enumerate() {
        for (j, c) in complexities.iter().enumerate() {
            out[i][j] = rank_correlation(e, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_series_is_all_stalled() {
        let t = [0.0, 0.1, 0.2, 0.3];
        let e = [0.4; 4];
        let r = arrow_report(&t, &e, &[0.2; 4], &[0.0; 4], &ReportOptions::default()).unwrap();
        assert!(r.samples.iter().all(|s| s.arrow == ArrowKind::Stalled));
        assert_eq!(r.fraction, None);
    }

    #[test]
    fn too_few_samples() {
        let err = arrow_report(&[0.0, 1.0], &[0.0; 2], &[0.0; 2], &[0.0; 2], &ReportOptions::default());
        assert_eq!(err.unwrap_err(), Error::TooFewSamples { needed: 3, found: 2 });
    }

    #[test]
    fn hand_built_classification() {
        // A is hotter and cooling while the signal climbs, then A warms
        // while the signal falls.
        let t = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0];
        let e_a = [0.9, 0.8, 0.7, 0.8, 0.9, 1.0];
        let e_b = [0.1, 0.2, 0.3, 0.2, 0.1, 0.0];
        let sig = [0.0, 0.1, 0.2, 0.1, 0.0, -0.1];
        let r = arrow_report(&t, &e_a, &e_b, &sig, &ReportOptions::default()).unwrap();
        let kinds: Vec<_> = r.samples.iter().map(|s| s.arrow).collect();
        assert_eq!(kinds, vec![ArrowKind::Normal, ArrowKind::Stalled, ArrowKind::Reversed, ArrowKind::Reversed]);
        assert_eq!(r.classified, 3);
        assert_eq!(r.fraction, Some(1.0));
        // Against a flat signal every classified sample is a mismatch.
        let r = arrow_report(&t, &e_a, &e_b, &[0.5; 6], &ReportOptions::default()).unwrap();
        assert_eq!(r.fraction, Some(0.0));
        assert_eq!(r.mismatches, vec![1.0, 3.0, 4.0]);
    }

    #[test]
    fn central_difference_exact_on_quadratics() {
        let t: Vec<f64> = (0..5).map(|k| k as f64 * 0.5).collect();
        let v: Vec<f64> = t.iter().map(|x| x * x).collect();
        let d = central_difference(&t, &v);
        for i in 1..4 {
            assert!((d[i] - 2.0 * t[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn sign_changes() {
        let t: Vec<f64> = (0..101).map(|k| k as f64 * 0.1).collect();
        let v: Vec<f64> = t.iter().map(|x| (x * std::f64::consts::PI / 5.0).cos()).collect();
        let changes = sign_change_times(&t, &v, 1e-9);
        assert_eq!(changes.len(), 1);
        assert!((changes[0] - 5.0).abs() < 0.11);
    }

    #[test]
    fn spearman() {
        let x = [1.0, 2.0, 3.0, 4.0];
        assert!((rank_correlation(&x, &[10.0, 20.0, 25.0, 100.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!((rank_correlation(&x, &[4.0, 3.0, 2.0, 1.0]).unwrap() + 1.0).abs() < 1e-15);
        assert_eq!(rank_correlation(&x, &[1.0; 4]), None);
    }
}
