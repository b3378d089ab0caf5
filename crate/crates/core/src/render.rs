//! CSV and SVG renderings of matrices and cross-scape grids.
//!
//! Heatmap colour is a fixed linear map from `[0, max]` onto white → deep
//! blue, where `max` is the largest value in the rendered matrix; negative
//! values are drawn as 0. Every cell carries its exact value in a
//! `data-value` attribute, formatted like the CSV output.

use std::fmt::Write as _;

use crate::semantics::CrossScapeGrid;

const CELL: usize = 28;
const MARGIN: usize = 40;
const LOW: (f64, f64, f64) = (255.0, 255.0, 255.0);
const HIGH: (f64, f64, f64) = (8.0, 48.0, 107.0);

/// Rows of comma-separated values, no header.
pub fn matrix_csv(rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// `level,start,end,value` for every window; `start` and `end` are
/// 1-based inclusive line numbers.
pub fn cross_scape_csv(grid: &CrossScapeGrid) -> String {
    let mut out = String::from("level,start,end,value\n");
    for (k, row) in grid.levels().iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            let _ = writeln!(out, "{},{},{},{}", k + 1, i + 1, i + k + 1, v);
        }
    }
    out
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Fill colour for `v` on the `[0, max]` scale.
pub fn color(v: f64, max: f64) -> String {
    let t = if max > 0.0 { (v / max).clamp(0.0, 1.0) } else { 0.0 };
    let mix = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        mix(LOW.0, HIGH.0),
        mix(LOW.1, HIGH.1),
        mix(LOW.2, HIGH.2)
    )
}

fn scale_max<'a>(values: impl Iterator<Item = &'a f64>) -> f64 {
    values.copied().fold(0.0, f64::max)
}

fn header(out: &mut String, width: usize, height: usize, title: &str, max: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" data-scale-min="0" data-scale-max="{max}">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(
        out,
        r#"<text x="{MARGIN}" y="{}" font-family="sans-serif" font-size="12">{}</text>"#,
        MARGIN / 2,
        escape(title)
    );
}

/// Heatmap of an arbitrary (not necessarily square) matrix; rows run top
/// to bottom, columns left to right.
pub fn heatmap_svg(title: &str, rows: &[Vec<f64>]) -> String {
    let nrows = rows.len();
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let max = scale_max(rows.iter().flatten());
    let mut out = String::new();
    header(
        &mut out,
        2 * MARGIN + ncols * CELL,
        2 * MARGIN + nrows * CELL,
        title,
        max,
    );
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{}" data-row="{i}" data-col="{j}" data-value="{v}"/>"#,
                MARGIN + j * CELL,
                MARGIN + i * CELL,
                color(*v, max)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Pyramid plot of a cross-scape grid: single lines along the bottom, the
/// whole lyric at the apex.
pub fn cross_scape_svg(title: &str, grid: &CrossScapeGrid) -> String {
    let n = grid.n();
    let max = scale_max(grid.levels().iter().flatten());
    let mut out = String::new();
    header(&mut out, 2 * MARGIN + n * CELL, 2 * MARGIN + n * CELL, title, max);
    for (k, row) in grid.levels().iter().enumerate() {
        let y = MARGIN + (n - 1 - k) * CELL;
        for (i, v) in row.iter().enumerate() {
            let x = MARGIN + i * CELL + k * CELL / 2;
            let _ = writeln!(
                out,
                r#"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{}" data-level="{}" data-start="{i}" data-value="{v}"/>"#,
                color(*v, max),
                k + 1
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
