//! Deterministic SVG and ASCII drawings of grid models.

use std::collections::HashMap;
use std::fmt::Write;

use crate::grid::{GridModel, GridPath, UnitEdge};

const CELL: f64 = 32.0;
const MARGIN: f64 = 24.0;
const SHIFT: f64 = 2.5;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
];

fn sorted_paths(m: &GridModel) -> Vec<&GridPath> {
    let mut paths: Vec<&GridPath> = m.paths().iter().collect();
    paths.sort_by(|a, b| a.id().cmp(b.id()));
    paths
}

/// Diagonal shift applied to each path (by sorted id), so paths sharing an
/// edge are drawn side by side. Any eight consecutive ids get distinct
/// shifts.
pub fn svg_offsets(m: &GridModel) -> Vec<(String, f64)> {
    sorted_paths(m)
        .iter()
        .enumerate()
        .map(|(k, p)| (p.id().to_owned(), ((k % 8) as f64 - 3.5) * SHIFT))
        .collect()
}

pub fn render_svg(m: &GridModel) -> String {
    let (rows, cols) = m.bounds();
    let width = 2.0 * MARGIN + cols as f64 * CELL;
    let height = 2.0 * MARGIN + rows as f64 * CELL;
    let mut out = String::new();
    let w = &mut out;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(w, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    writeln!(w, r##"<g stroke="#dddddd" stroke-width="1">"##).unwrap();
    for r in 0..=rows {
        let y = MARGIN + r as f64 * CELL;
        writeln!(w, r#"<line x1="{MARGIN:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}"/>"#, width - MARGIN).unwrap();
    }
    for c in 0..=cols {
        let x = MARGIN + c as f64 * CELL;
        writeln!(w, r#"<line x1="{x:.1}" y1="{MARGIN:.1}" x2="{x:.1}" y2="{:.1}"/>"#, height - MARGIN).unwrap();
    }
    writeln!(w, "</g>").unwrap();
    if let Some(rect) = m.rect() {
        let (x, y) = (MARGIN + rect.c1 as f64 * CELL, MARGIN + rect.r1 as f64 * CELL);
        writeln!(
            w,
            r##"<rect x="{x:.1}" y="{y:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="#999999" stroke-dasharray="4 3"/>"##,
            rect.width() as f64 * CELL,
            rect.height() as f64 * CELL
        )
        .unwrap();
    }
    let offsets: HashMap<String, f64> = svg_offsets(m).into_iter().collect();
    for (k, p) in sorted_paths(m).into_iter().enumerate() {
        let off = offsets[p.id()];
        let points: Vec<String> = p
            .corners()
            .iter()
            .map(|c| {
                format!(
                    "{:.1},{:.1}",
                    MARGIN + c.col as f64 * CELL + off,
                    MARGIN + c.row as f64 * CELL + off
                )
            })
            .collect();
        writeln!(
            w,
            r#"<polyline fill="none" stroke="{}" stroke-width="2" points="{}"><title>{}</title></polyline>"#,
            PALETTE[k % PALETTE.len()],
            points.join(" "),
            p.id()
        )
        .unwrap();
    }
    writeln!(w, "</svg>").unwrap();
    out
}

/// A character drawing: lattice points are `.` (unused) or `+`, edges are
/// `-` and `|`, and edges used by several paths are `=` and `H`. A legend
/// lists each path's corners.
pub fn render_ascii(m: &GridModel) -> String {
    let (rows, cols) = m.bounds();
    let (h, w) = (2 * rows as usize + 1, 4 * cols as usize + 1);
    let mut canvas = vec![vec![' '; w]; h];
    for r in 0..=rows as usize {
        for c in 0..=cols as usize {
            canvas[2 * r][4 * c] = '.';
        }
    }
    let mut uses: HashMap<UnitEdge, usize> = HashMap::new();
    for p in m.paths() {
        for e in p.edges() {
            *uses.entry(e).or_default() += 1;
        }
    }
    for (e, count) in uses {
        let (a, b) = e.ends();
        canvas[2 * a.row as usize][4 * a.col as usize] = '+';
        canvas[2 * b.row as usize][4 * b.col as usize] = '+';
        if e.is_horizontal() {
            let ch = if count > 1 { '=' } else { '-' };
            for x in 1..4 {
                canvas[2 * a.row as usize][4 * a.col as usize + x] = ch;
            }
        } else {
            canvas[2 * a.row as usize + 1][4 * a.col as usize] = if count > 1 { 'H' } else { '|' };
        }
    }
    let mut out = String::new();
    for line in canvas {
        out.push_str(line.into_iter().collect::<String>().trim_end());
        out.push('\n');
    }
    for p in sorted_paths(m) {
        out.push_str(p.id());
        out.push(':');
        for c in p.corners() {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}
