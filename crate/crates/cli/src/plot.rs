//! Minimal deterministic SVG line plots.

use std::fmt::Write as _;

use anyhow::{bail, Result};

use crate::table::Data;

const W: f64 = 720.0;
const H: f64 = 460.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const TICKS: usize = 5;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

fn tick_label(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 {
        "0".into()
    } else if (1e-3..1e4).contains(&a) {
        let s = format!("{v:.4}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        format!("{v:.2e}")
    }
}

fn range(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if lo == hi {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.05 };
        (lo - pad, hi + pad)
    } else {
        (lo, hi)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// First column on the x axis, one polyline per remaining column. Columns
/// whose name contains `approx` are dashed.
pub fn render(data: &Data, title: &str) -> Result<String> {
    if data.columns.len() < 2 {
        bail!("need at least two columns to plot");
    }
    if data.rows.len() < 2 {
        bail!("need at least two rows to plot");
    }
    if data.rows.iter().flatten().any(|v| !v.is_finite()) {
        bail!("non-finite value in plot data");
    }
    let (x0, x1) = range(data.rows.iter().map(|r| r[0]));
    let (y0, y1) = range(data.rows.iter().flat_map(|r| r[1..].iter().copied()));
    let pw = W - LEFT - RIGHT;
    let ph = H - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * pw;
    let sy = |y: f64| TOP + (y1 - y) / (y1 - y0) * ph;

    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#)?;
    writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#)?;
    writeln!(
        s,
        r#"<text x="{:.2}" y="24" font-family="sans-serif" font-size="15" text-anchor="middle">{}</text>"#,
        LEFT + pw / 2.0,
        escape(title)
    )?;
    writeln!(s, r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#)?;
    for k in 0..=TICKS {
        let f = k as f64 / TICKS as f64;
        let (xv, yv) = (x0 + f * (x1 - x0), y0 + f * (y1 - y0));
        let (px, py) = (sx(xv), sy(yv));
        writeln!(s, r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/>"#, TOP + ph, TOP + ph + 5.0)?;
        writeln!(
            s,
            r#"<text x="{px:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>"#,
            TOP + ph + 18.0,
            tick_label(xv)
        )?;
        writeln!(s, r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/>"#, LEFT - 5.0)?;
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"#,
            LEFT - 8.0,
            py + 4.0,
            tick_label(yv)
        )?;
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
        LEFT + pw / 2.0,
        H - 16.0,
        escape(&data.columns[0])
    )?;
    for (c, name) in data.columns.iter().enumerate().skip(1) {
        let color = PALETTE[(c - 1) % PALETTE.len()];
        let dash = if name.contains("approx") { r#" stroke-dasharray="2,4""# } else { "" };
        let pts: Vec<String> = data.rows.iter().map(|r| format!("{:.2},{:.2}", sx(r[0]), sy(r[c]))).collect();
        writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{}"/>"#,
            pts.join(" ")
        )?;
        let ly = TOP + 14.0 + 18.0 * (c - 1) as f64;
        let lx = LEFT + pw + 12.0;
        writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="1.5"{dash}/>"#,
            lx + 24.0
        )?;
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{}</text>"#,
            lx + 30.0,
            ly + 4.0,
            escape(name)
        )?;
    }
    writeln!(s, "</svg>")?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data() -> Data {
        Data {
            columns: vec!["x".into(), "exact".into(), "approx".into()],
            rows: vec![vec![0.0, 1.0, 1.1], vec![1.0, 2.0, 2.2], vec![2.0, 3.0, 2.9]],
        }
    }

    #[test]
    fn deterministic_and_dashed() {
        let a = render(&data(), "t").unwrap();
        assert_eq!(a, render(&data(), "t").unwrap());
        assert_eq!(a.matches("<polyline").count(), 2);
        assert!(a.contains("stroke-dasharray"));
    }

    #[test]
    fn rejects_degenerate_input() {
        let d = Data { columns: vec!["x".into(), "y".into()], rows: vec![vec![0.0, 1.0]] };
        assert!(render(&d, "t").is_err());
    }

    #[test]
    fn tick_labels() {
        assert_eq!(tick_label(0.05), "0.05");
        assert_eq!(tick_label(2.5e-7), "2.50e-7");
        assert_eq!(tick_label(0.0), "0");
    }
}
