//! Standalone SVG figures: stacked line panels for time series and a
//! 2×3 heatmap layout for grid sweeps.

use std::fmt::Write as _;

use qarrow::experiments::{GridRecord, TraceRecord, TwoQubitRecord};

const PALETTE: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];
/// Viridis anchor colours, evenly spaced on [0, 1].
const VIRIDIS: [(u8, u8, u8); 5] = [(68, 1, 84), (59, 82, 139), (33, 145, 140), (94, 201, 98), (253, 231, 37)];
/// Heatmaps are subsampled to at most this many cells per axis.
pub const MAX_CELLS: usize = 101;

pub struct Series<'a> {
    pub name: &'a str,
    pub values: Vec<f64>,
}

pub struct Panel<'a> {
    pub y_label: &'a str,
    pub series: Vec<Series<'a>>,
}

fn min_max(values: impl IntoIterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.into_iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Line plots sharing one horizontal axis, stacked vertically.
pub fn line_panels(title: &str, x: &[f64], x_label: &str, panels: &[Panel]) -> String {
    let (width, panel_h, left, right, top, gap) = (820.0, 260.0, 80.0, 150.0, 40.0, 50.0);
    let plot_w = width - left - right;
    let height = top + panels.len() as f64 * (panel_h + gap) + 10.0;
    let (x0, x1) = min_max(x.iter().copied());
    let sx = |v: f64| left + (v - x0) / (x1 - x0) * plot_w;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(svg, r#"<text x="{}" y="24" font-size="15" text-anchor="middle">{}</text>"#, width / 2.0, escape(title));
    for (p, panel) in panels.iter().enumerate() {
        let y_top = top + p as f64 * (panel_h + gap);
        let (y0, y1) = min_max(panel.series.iter().flat_map(|s| s.values.iter().copied()));
        let sy = |v: f64| y_top + panel_h - (v - y0) / (y1 - y0) * panel_h;
        let _ = writeln!(svg, r#"<g class="panel">"#);
        let _ = writeln!(
            svg,
            r#"<rect x="{left}" y="{y_top}" width="{plot_w}" height="{panel_h}" fill="none" stroke="black"/>"#
        );
        for k in 0..=4 {
            let fy = y0 + (y1 - y0) * k as f64 / 4.0;
            let fx = x0 + (x1 - x0) * k as f64 / 4.0;
            let _ = writeln!(
                svg,
                r#"<text x="{}" y="{:.2}" text-anchor="end">{:.4}</text>"#,
                left - 6.0,
                sy(fy) + 4.0,
                fy
            );
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{}" text-anchor="middle">{:.3}</text>"#,
                sx(fx),
                y_top + panel_h + 16.0,
                fx
            );
        }
        let _ = writeln!(
            svg,
            r#"<text transform="translate({},{}) rotate(-90)" text-anchor="middle">{}</text>"#,
            18.0,
            y_top + panel_h / 2.0,
            escape(panel.y_label)
        );
        for (i, s) in panel.series.iter().enumerate() {
            let colour = PALETTE[i % PALETTE.len()];
            let points: Vec<String> =
                x.iter().zip(&s.values).map(|(&a, &b)| format!("{:.2},{:.2}", sx(a), sy(b))).collect();
            let _ = writeln!(
                svg,
                r#"<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{}"/>"#,
                points.join(" ")
            );
            let ly = y_top + 16.0 + 18.0 * i as f64;
            let lx = left + plot_w + 12.0;
            let _ = writeln!(
                svg,
                r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{colour}" stroke-width="2"/><text x="{}" y="{}">{}</text>"#,
                lx + 20.0,
                lx + 26.0,
                ly + 4.0,
                escape(s.name)
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        left + plot_w / 2.0,
        height - 4.0,
        escape(x_label)
    );
    svg.push_str("</svg>\n");
    svg
}

fn colour(u: f64) -> String {
    let u = u.clamp(0.0, 1.0) * (VIRIDIS.len() - 1) as f64;
    let k = (u.floor() as usize).min(VIRIDIS.len() - 2);
    let f = u - k as f64;
    let mix = |a: u8, b: u8| (a as f64 + (b as f64 - a as f64) * f).round() as u8;
    let (a, b) = (VIRIDIS[k], VIRIDIS[k + 1]);
    format!("#{:02x}{:02x}{:02x}", mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

/// Indices `0..n` thinned to at most [`MAX_CELLS`], always keeping both ends.
fn stride_indices(n: usize) -> Vec<usize> {
    if n <= MAX_CELLS {
        return (0..n).collect();
    }
    (0..MAX_CELLS).map(|k| ((k * (n - 1)) as f64 / (MAX_CELLS - 1) as f64).round() as usize).collect()
}

/// Six heatmaps in two rows over an `n × n` grid stored `t`-outer.
/// Horizontal axis is `s`, vertical axis `t` (increasing upwards).
pub fn heatmaps(title: &str, s_axis: &[f64], t_axis: &[f64], surfaces: &[Series]) -> String {
    let n = s_axis.len();
    let (panel, margin, top) = (242.4, 60.0, 40.0);
    let cols = 3;
    let rows = surfaces.len().div_ceil(cols);
    let width = margin + cols as f64 * (panel + margin);
    let height = top + rows as f64 * (panel + 70.0);
    let keep = stride_indices(n);
    let cell = panel / keep.len() as f64;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(svg, r#"<text x="{}" y="24" font-size="15" text-anchor="middle">{}</text>"#, width / 2.0, escape(title));
    for (p, surface) in surfaces.iter().enumerate() {
        let x_off = margin + (p % cols) as f64 * (panel + margin);
        let y_off = top + (p / cols) as f64 * (panel + 70.0);
        let (lo, hi) = surface.values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        let span = if hi > lo { hi - lo } else { 1.0 };
        let _ = writeln!(svg, r#"<g class="heatmap">"#);
        let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, x_off + panel / 2.0, y_off + 12.0, escape(surface.name));
        let grid_top = y_off + 20.0;
        for (row, &ti) in keep.iter().enumerate() {
            let y = grid_top + panel - (row + 1) as f64 * cell;
            for (col, &si) in keep.iter().enumerate() {
                let v = surface.values[ti * n + si];
                let _ = write!(
                    svg,
                    r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                    x_off + col as f64 * cell,
                    y,
                    cell + 0.05,
                    cell + 0.05,
                    colour((v - lo) / span)
                );
            }
            svg.push('\n');
        }
        let _ = writeln!(
            svg,
            r#"<rect x="{x_off}" y="{grid_top}" width="{panel}" height="{panel}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x_off}" y="{}">s: {} to {}; t: {} to {}</text>"#,
            grid_top + panel + 16.0,
            s_axis[0],
            s_axis[n - 1],
            t_axis[0],
            t_axis[n - 1]
        );
        let _ = writeln!(
            svg,
            r#"<text class="range" x="{x_off}" y="{}">min {lo:.6}  max {hi:.6}</text>"#,
            grid_top + panel + 32.0
        );
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn two_qubit_plot(records: &[TwoQubitRecord], title: &str) -> String {
    let col = |f: fn(&TwoQubitRecord) -> f64| records.iter().map(f).collect::<Vec<_>>();
    let panels = [
        Panel {
            y_label: "internal energy",
            series: vec![Series { name: "E_A", values: col(|r| r.e_a) }, Series { name: "E_B", values: col(|r| r.e_b) }],
        },
        Panel {
            y_label: "correlation measures",
            series: vec![
                Series { name: "complexity", values: col(|r| r.complexity) },
                Series { name: "concurrence", values: col(|r| r.concurrence) },
            ],
        },
    ];
    line_panels(title, &col(|r| r.time), "t", &panels)
}

pub fn trace_plot(records: &[TraceRecord], title: &str) -> String {
    let col = |f: fn(&TraceRecord) -> f64| records.iter().map(f).collect::<Vec<_>>();
    let panels = [
        Panel {
            y_label: "internal energy",
            series: vec![
                Series { name: "E_A", values: col(|r| r.e_a) },
                Series { name: "E_B", values: col(|r| r.e_b) },
                Series { name: "E_C", values: col(|r| r.e_c) },
            ],
        },
        Panel {
            y_label: "pair complexity",
            series: vec![
                Series { name: "C_AB", values: col(|r| r.c_ab) },
                Series { name: "C_BC", values: col(|r| r.c_bc) },
                Series { name: "C_AC", values: col(|r| r.c_ac) },
            ],
        },
    ];
    line_panels(title, &col(|r| r.tau), "tau", &panels)
}

pub fn grid_plot(records: &[GridRecord], s_axis: &[f64], t_axis: &[f64], title: &str) -> String {
    let col = |f: fn(&GridRecord) -> f64| records.iter().map(f).collect::<Vec<_>>();
    let surfaces = [
        Series { name: "E_A", values: col(|r| r.e_a) },
        Series { name: "E_B", values: col(|r| r.e_b) },
        Series { name: "E_C", values: col(|r| r.e_c) },
        Series { name: "C_AB", values: col(|r| r.c_ab) },
        Series { name: "C_BC", values: col(|r| r.c_bc) },
        Series { name: "C_AC", values: col(|r| r.c_ac) },
    ];
    heatmaps(title, s_axis, t_axis, &surfaces)
}
