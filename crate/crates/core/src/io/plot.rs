//! Self-contained SVG line charts of a run.
//!
//! Four charts are written:
//!
//! * `g1_inputs_employed.svg`: capital and labor employed per week
//! * `g2_produced_capital.svg`: output of the capital line
//! * `g3_consumption.svg`: consumer good bought
//! * `g4_real_wage.svg`: wage over consumer-good price
//!
//! Every plotted point is also recorded as `data-week` / `data-value`
//! attributes so charts can be checked against the exported series.
//! Output depends only on the series, so the same run always yields the same
//! bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::engine::{SimulationSeries, WeekRecord};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 48.0;
const BOTTOM: f64 = 56.0;
const COLORS: [&str; 2] = ["#1f77b4", "#d62728"];

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("cannot plot an empty series")]
    EmptySeries,
    #[error("writing {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// One line in a chart.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub label: String,
    pub points: Vec<(u64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Chart {
    pub file_name: &'static str,
    pub title: &'static str,
    pub y_label: &'static str,
    pub lines: Vec<Line>,
}

fn line(label: &str, series: &SimulationSeries, f: impl Fn(&WeekRecord) -> f64) -> Line {
    Line {
        label: label.to_string(),
        points: series.records.iter().map(|r| (r.week, f(r))).collect(),
    }
}

/// The four charts of a run, ready to render.
pub fn charts(series: &SimulationSeries) -> Vec<Chart> {
    vec![
        Chart {
            file_name: "g1_inputs_employed.svg",
            title: "Capital and labor employed",
            y_label: "units / hours",
            lines: vec![
                line("capital", series, WeekRecord::capital_rented),
                line("labor", series, WeekRecord::labor_ex_post),
            ],
        },
        Chart {
            file_name: "g2_produced_capital.svg",
            title: "Produced capital",
            y_label: "units",
            lines: vec![line("produced capital", series, |r| r.output_capital)],
        },
        Chart {
            file_name: "g3_consumption.svg",
            title: "Consumption",
            y_label: "units",
            lines: vec![line("consumption", series, WeekRecord::consumption)],
        },
        Chart {
            file_name: "g4_real_wage.svg",
            title: "Real wage (p_w / p_c)",
            y_label: "ratio",
            lines: vec![line("real wage", series, |r| r.real_wage_ratio)],
        },
    ]
}

/// Round step size giving roughly `target` intervals over `span`.
fn tick_step(span: f64, target: f64) -> f64 {
    let raw = span / target;
    let magnitude = 10f64.powf(raw.log10().floor());
    let norm = raw / magnitude;
    let nice = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * magnitude
}

fn tick_label(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".to_string()
    } else if !(1e-3..1e5).contains(&a) {
        format!("{v:.1e}")
    } else {
        let s = format!("{v:.4}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Renders a chart as an SVG document.
pub fn render_svg(chart: &Chart) -> String {
    let all = chart.lines.iter().flat_map(|l| l.points.iter());
    let (mut x_min, mut x_max) = (u64::MAX, 0u64);
    let (mut y_min, mut y_max) = (0.0f64, f64::NEG_INFINITY);
    for &(w, v) in all {
        x_min = x_min.min(w);
        x_max = x_max.max(w);
        y_min = y_min.min(v);
        y_max = y_max.max(v);
    }
    if x_min > x_max {
        (x_min, x_max) = (0, 0);
    }
    if !y_max.is_finite() || y_max <= y_min {
        y_max = y_min + 1.0;
    }
    let x_span = (x_max - x_min).max(1) as f64;
    let y_step = tick_step(y_max - y_min, 5.0);
    let y_top = (y_max / y_step).ceil() * y_step;
    let y_bottom = (y_min / y_step).floor() * y_step;
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |w: u64| LEFT + (w - x_min) as f64 / x_span * plot_w;
    let py = |v: f64| TOP + (y_top - v) / (y_top - y_bottom) * plot_h;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, "<title>{}</title>", escape(chart.title)).unwrap();
    writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.2}" y="28" text-anchor="middle" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(chart.title)
    )
    .unwrap();

    // axes and grid
    writeln!(s, r##"<g class="axes" stroke="#333" fill="none">"##).unwrap();
    writeln!(
        s,
        r#"<line x1="{LEFT:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
        TOP + plot_h,
        LEFT + plot_w,
        TOP + plot_h
    )
    .unwrap();
    writeln!(
        s,
        r#"<line x1="{LEFT:.2}" y1="{TOP:.2}" x2="{LEFT:.2}" y2="{:.2}"/>"#,
        TOP + plot_h
    )
    .unwrap();
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g class="y-ticks" text-anchor="end">"#).unwrap();
    let n_y = ((y_top - y_bottom) / y_step).round() as i64;
    for i in 0..=n_y {
        let v = y_bottom + i as f64 * y_step;
        let y = py(v);
        writeln!(
            s,
            r##"<line x1="{LEFT:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#ddd"/><text x="{:.2}" y="{:.2}">{}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            y + 4.0,
            tick_label(v)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g class="x-ticks" text-anchor="middle">"#).unwrap();
    let x_step = tick_step(x_span, 8.0).max(1.0) as u64;
    let mut w = x_min.div_ceil(x_step) * x_step;
    while w <= x_max {
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">{w}</text>"#,
            px(w),
            TOP + plot_h + 18.0
        )
        .unwrap();
        w += x_step;
    }
    writeln!(s, "</g>").unwrap();

    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">week</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 14.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        escape(chart.y_label)
    )
    .unwrap();

    for (i, l) in chart.lines.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let label = escape(&l.label);
        writeln!(s, r#"<g class="series" data-series="{label}">"#).unwrap();
        let mut pts = String::new();
        for &(w, v) in &l.points {
            if !pts.is_empty() {
                pts.push(' ');
            }
            write!(pts, "{:.2},{:.2}", px(w), py(v)).unwrap();
        }
        writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>"#
        )
        .unwrap();
        for &(w, v) in &l.points {
            writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="1.5" fill="{color}" data-week="{w}" data-value="{v:?}"/>"#,
                px(w),
                py(v)
            )
            .unwrap();
        }
        writeln!(s, "</g>").unwrap();
        let ly = TOP + 14.0 + 16.0 * i as f64;
        writeln!(
            s,
            r#"<g class="legend"><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{label}</text></g>"#,
            LEFT + plot_w - 130.0,
            ly - 4.0,
            LEFT + plot_w - 110.0,
            ly - 4.0,
            LEFT + plot_w - 104.0,
            ly
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Writes the four charts into `dir`, creating it if needed, and returns
/// the written paths.
pub fn emit_plots(series: &SimulationSeries, dir: &Path) -> Result<Vec<PathBuf>, PlotError> {
    if series.is_empty() {
        return Err(PlotError::EmptySeries);
    }
    fs::create_dir_all(dir).map_err(|source| PlotError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::new();
    for chart in charts(series) {
        let path = dir.join(chart.file_name);
        fs::write(&path, render_svg(&chart)).map_err(|source| PlotError::Io {
            path: path.clone(),
            source,
        })?;
        written.push(path);
    }
    Ok(written)
}

/// Recovers the `(week, value)` points of one series from a rendered chart.
pub fn read_points(svg: &str, series_label: &str) -> Vec<(u64, f64)> {
    let marker = format!(r#"data-series="{series_label}""#);
    let Some(start) = svg.find(&marker) else {
        return Vec::new();
    };
    let body = &svg[start..];
    let body = &body[..body.find("</g>").unwrap_or(body.len())];
    let attr = |line: &str, name: &str| -> Option<String> {
        let key = format!(r#"{name}=""#);
        let i = line.find(&key)? + key.len();
        let j = line[i..].find('"')? + i;
        Some(line[i..j].to_string())
    };
    body.lines()
        .filter(|l| l.starts_with("<circle"))
        .filter_map(|l| {
            let w = attr(l, "data-week")?.parse().ok()?;
            let v = attr(l, "data-value")?.parse().ok()?;
            Some((w, v))
        })
        .collect()
}
