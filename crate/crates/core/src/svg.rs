//! Static SVG 1.1 plots: an eigenvalue scatter with an optional dashed
//! marker line, and eigenvector line plots over the sample points.

use crate::error::{Error, Result};
use std::fmt::Write;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 320.0;
const PAD: f64 = 48.0;
const COLORS: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn new(xs: impl Iterator<Item = f64> + Clone, ys: impl Iterator<Item = f64> + Clone) -> Self {
        let (x0, x1) = bounds(xs);
        let (y0, y1) = bounds(ys);
        Frame { x0, x1, y0, y1 }
    }

    fn px(&self, x: f64) -> f64 {
        PAD + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2.0 * PAD)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - PAD - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2.0 * PAD)
    }
}

fn bounds(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = vals
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    let pad = if hi > lo { 0.05 * (hi - lo) } else { 0.5 * lo.abs().max(1.0) };
    (lo - pad, hi + pad)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn header(out: &mut String, title: &str, frame: &Frame) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<rect x="{PAD}" y="{PAD}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        WIDTH - 2.0 * PAD,
        HEIGHT - 2.0 * PAD
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        PAD / 2.0,
        escape(title)
    );
    for (v, anchor, x, y) in [
        (frame.y0, "end", PAD - 4.0, HEIGHT - PAD),
        (frame.y1, "end", PAD - 4.0, PAD + 10.0),
    ] {
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{y}" font-family="sans-serif" font-size="10" text-anchor="{anchor}">{v:.4}</text>"#
        );
    }
    for (v, x) in [(frame.x0, PAD), (frame.x1, WIDTH - PAD)] {
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{}" font-family="sans-serif" font-size="10" text-anchor="middle">{v:.3}</text>"#,
            HEIGHT - PAD + 14.0
        );
    }
}

/// Scatter of `(i, λ_i)` with 1-based `i`, plus one dashed horizontal line
/// at `marker` when given.
pub fn eigenvalue_plot(values: &[f64], marker: Option<f64>, title: &str) -> Result<String> {
    if values.is_empty() {
        return Err(Error::Scenario("no eigenvalues to plot".into()));
    }
    let frame = Frame::new(
        (1..=values.len()).map(|i| i as f64),
        values.iter().copied().chain(marker),
    );
    let mut out = String::new();
    header(&mut out, title, &frame);
    if let Some(m) = marker {
        let y = frame.py(m);
        let _ = writeln!(
            out,
            r#"<line class="marker" x1="{PAD}" y1="{y:.2}" x2="{}" y2="{y:.2}" stroke="gray" stroke-width="1" stroke-dasharray="6,4"/>"#,
            WIDTH - PAD
        );
    }
    for (i, &v) in values.iter().enumerate() {
        if v.is_finite() {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{}"/>"#,
                frame.px((i + 1) as f64),
                frame.py(v),
                COLORS[0]
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Line plots of `(x_i, v_i)` for each selected eigenvector, ordered by `x`.
/// Returns `None` for an empty selection.
pub fn eigenvector_plot(x: &[f64], vectors: &[(usize, &[f64])], title: &str) -> Result<Option<String>> {
    if vectors.is_empty() {
        return Ok(None);
    }
    if x.is_empty() || vectors.iter().any(|(_, v)| v.len() != x.len()) {
        return Err(Error::Scenario("eigenvector data does not match the sample points".into()));
    }
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    let frame = Frame::new(
        x.iter().copied(),
        vectors.iter().flat_map(|(_, v)| v.iter().copied()),
    );
    let mut out = String::new();
    header(&mut out, title, &frame);
    for (k, (index, v)) in vectors.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let pts: Vec<String> = order
            .iter()
            .filter(|&&i| v[i].is_finite())
            .map(|&i| format!("{:.2},{:.2}", frame.px(x[i]), frame.py(v[i])))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.2"/>"#,
            pts.join(" ")
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="10" fill="{color}">v{index}</text>"#,
            WIDTH - PAD + 4.0,
            PAD + 12.0 * (k as f64 + 1.0)
        );
    }
    out.push_str("</svg>\n");
    Ok(Some(out))
}
