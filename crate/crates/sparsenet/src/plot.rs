//! Four-panel SVG output: one file per statistic, node count on a log
//! x-axis, one polyline per series with standard-error whiskers.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::summary::{GroupSummary, StatSummary};
use crate::Error;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 55.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

#[derive(Debug, Clone, Copy)]
pub struct Panel {
    pub file: &'static str,
    pub title: &'static str,
    pub stat: fn(&GroupSummary) -> &StatSummary,
}

pub const PANELS: [Panel; 4] = [
    Panel {
        file: "panel_a.svg",
        title: "(a) connected components",
        stat: |g| &g.components,
    },
    Panel {
        file: "panel_b.svg",
        title: "(b) clustering coefficient",
        stat: |g| &g.clustering,
    },
    Panel {
        file: "panel_c.svg",
        title: "(c) assortativity coefficient",
        stat: |g| &g.assortativity,
    },
    Panel {
        file: "panel_d.svg",
        title: "(d) share of nodes in core",
        stat: |g| &g.core_share,
    },
];

struct Point {
    x: f64,
    mean: f64,
    se: f64,
}

/// Series label and its points, in order of first appearance.
fn series(summary: &[GroupSummary], panel: &Panel) -> Vec<(String, Vec<Point>)> {
    let mut out: Vec<(String, Vec<Point>)> = Vec::new();
    for g in summary {
        let label = g.series_label();
        let idx = match out.iter().position(|(l, _)| *l == label) {
            Some(i) => i,
            None => {
                out.push((label, Vec::new()));
                out.len() - 1
            }
        };
        let s = (panel.stat)(g);
        if let Some(mean) = s.mean {
            out[idx].1.push(Point {
                x: g.n_target as f64,
                mean,
                se: s.std_error.unwrap_or(0.0),
            });
        }
    }
    for (_, points) in &mut out {
        points.sort_by(|a, b| a.x.total_cmp(&b.x));
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn nice_ticks(lo: f64, hi: f64) -> Vec<f64> {
    let span = (hi - lo).max(1e-12);
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * mag)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * mag);
    let mut t = (lo / step).ceil() * step;
    let mut ticks = Vec::new();
    while t <= hi + 1e-9 * step {
        ticks.push(if t.abs() < 1e-12 * step { 0.0 } else { t });
        t += step;
    }
    ticks
}

pub fn render_panel(summary: &[GroupSummary], panel: &Panel) -> String {
    let data = series(summary, panel);
    let points = data.iter().flat_map(|(_, p)| p.iter());
    let (mut x_lo, mut x_hi, mut y_lo, mut y_hi) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in points {
        x_lo = x_lo.min(p.x);
        x_hi = x_hi.max(p.x);
        y_lo = y_lo.min(p.mean - p.se);
        y_hi = y_hi.max(p.mean + p.se);
    }
    if x_lo > x_hi {
        (x_lo, x_hi, y_lo, y_hi) = (1.0, 2.0, 0.0, 1.0);
    }
    let (lx_lo, lx_hi) = if x_hi > x_lo {
        (x_lo.log2() - 0.25, x_hi.log2() + 0.25)
    } else {
        (x_lo.log2() - 1.0, x_lo.log2() + 1.0)
    };
    if y_hi - y_lo < 1e-9 {
        y_lo -= 0.5;
        y_hi += 0.5;
    } else {
        let pad = 0.05 * (y_hi - y_lo);
        y_lo -= pad;
        y_hi += pad;
    }
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x.log2() - lx_lo) / (lx_hi - lx_lo) * plot_w;
    let sy = |y: f64| TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();
    writeln!(
        svg,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
        LEFT + plot_w / 2.0,
        escape(panel.title)
    )
    .unwrap();
    writeln!(
        svg,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    )
    .unwrap();

    let mut xs: Vec<f64> = summary.iter().map(|g| g.n_target as f64).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    for x in xs {
        let px = sx(x);
        writeln!(
            svg,
            r#"<line class="tick" x1="{px:.2}" y1="{b}" x2="{px:.2}" y2="{b2}" stroke="black"/><text x="{px:.2}" y="{t}" text-anchor="middle">{x}</text>"#,
            b = TOP + plot_h,
            b2 = TOP + plot_h + 5.0,
            t = TOP + plot_h + 19.0
        )
        .unwrap();
    }
    for y in nice_ticks(y_lo, y_hi) {
        let py = sy(y);
        writeln!(
            svg,
            r#"<line class="tick" x1="{l2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/><text x="{t}" y="{ty:.2}" text-anchor="end">{y}</text>"#,
            l2 = LEFT - 5.0,
            t = LEFT - 8.0,
            ty = py + 4.0
        )
        .unwrap();
    }
    writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">number of nodes</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 12.0
    )
    .unwrap();

    for (i, (label, points)) in data.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        if points.len() > 1 {
            let path: Vec<String> = points
                .iter()
                .map(|p| format!("{:.2},{:.2}", sx(p.x), sy(p.mean)))
                .collect();
            writeln!(
                svg,
                r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
                path.join(" ")
            )
            .unwrap();
        }
        for p in points {
            let (px, py) = (sx(p.x), sy(p.mean));
            if p.se > 0.0 {
                writeln!(
                    svg,
                    r#"<line class="whisker" x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="{color}"/>"#,
                    sy(p.mean - p.se),
                    sy(p.mean + p.se)
                )
                .unwrap();
            }
            writeln!(
                svg,
                r#"<circle class="point" cx="{px:.2}" cy="{py:.2}" r="3" fill="{color}"/>"#
            )
            .unwrap();
        }
        let ly = TOP + 12.0 + 18.0 * i as f64;
        let lx = WIDTH - RIGHT + 12.0;
        writeln!(
            svg,
            r#"<g class="legend"><line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}">{}</text></g>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(label)
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}

/// Writes `panel_a.svg` through `panel_d.svg`; nothing is written for an
/// empty summary.
pub fn emit_plots(summary: &[GroupSummary], output_dir: &Path) -> Result<Vec<PathBuf>, Error> {
    if summary.is_empty() {
        return Err(Error::EmptyInput);
    }
    std::fs::create_dir_all(output_dir)?;
    let mut written = Vec::new();
    for panel in &PANELS {
        let path = output_dir.join(panel.file);
        std::fs::write(&path, render_panel(summary, panel))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ticks_cover_range() {
        let t = nice_ticks(0.03, 0.41);
        assert_eq!(t.first().copied(), Some(0.1));
        assert!(t.iter().all(|&x| (0.03..=0.41).contains(&x)));
        assert!(nice_ticks(-1.05, 1.05).contains(&0.0));
    }

    #[test]
    fn escapes_markup() {
        assert_eq!(escape("a<b&c>"), "a&lt;b&amp;c&gt;");
    }
}
