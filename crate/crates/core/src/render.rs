//! SVG diagrams: upper row on top, lower row below, points in increasing
//! order left to right.

use std::fmt::Write;

use crate::partition::Partition;

// Layout v1. Changing any constant here changes the golden files.
pub const LAYOUT_VERSION: u32 = 1;
const SCALE: f64 = 40.0;
const MARGIN: f64 = 20.0;
const RADIUS: f64 = 3.0;
/// Arc depth per unit of horizontal distance, capped at `MAX_DEPTH`.
const DEPTH_PER_UNIT: f64 = 0.15;
const MAX_DEPTH: f64 = 0.45;

fn x(i: usize) -> f64 {
    MARGIN + (i - 1) as f64 * SCALE
}

fn y(lower: bool) -> f64 {
    MARGIN + if lower { SCALE } else { 0.0 }
}

fn arc(out: &mut String, a: usize, b: usize, lower: bool) {
    let depth = (DEPTH_PER_UNIT * (b - a) as f64).min(MAX_DEPTH) * SCALE;
    let (y0, dy) = (y(lower), if lower { -depth } else { depth });
    let _ = writeln!(
        out,
        r#"  <path d="M {:.1} {:.1} C {:.1} {:.1} {:.1} {:.1} {:.1} {:.1}" fill="none" stroke="black"/>"#,
        x(a),
        y0,
        x(a),
        y0 + dy,
        x(b),
        y0 + dy,
        x(b),
        y0
    );
}

/// Deterministic SVG for `a`. Same-row neighbours in a block are joined by
/// arcs; each transversal gets one straight edge between the least upper
/// and least lower points.
pub fn render_svg(a: &Partition) -> String {
    let n = a.degree();
    let width = 2.0 * MARGIN + n.saturating_sub(1) as f64 * SCALE;
    let height = 2.0 * MARGIN + SCALE;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, "  <!-- layout v{LAYOUT_VERSION} -->");
    for block in a.blocks() {
        let mut upper: Vec<usize> = block
            .iter()
            .filter(|&&v| v > 0)
            .map(|&v| v as usize)
            .collect();
        let mut lower: Vec<usize> = block
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| v.unsigned_abs() as usize)
            .collect();
        upper.sort_unstable();
        lower.sort_unstable();
        for w in upper.windows(2) {
            arc(&mut out, w[0], w[1], false);
        }
        for w in lower.windows(2) {
            arc(&mut out, w[0], w[1], true);
        }
        if let (Some(&u), Some(&l)) = (upper.first(), lower.first()) {
            let _ = writeln!(
                out,
                r#"  <line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black"/>"#,
                x(u),
                y(false),
                x(l),
                y(true)
            );
        }
    }
    for lower in [false, true] {
        for i in 1..=n {
            let _ = writeln!(
                out,
                r#"  <circle cx="{:.1}" cy="{:.1}" r="{RADIUS:.1}" fill="black"/>"#,
                x(i),
                y(lower)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
