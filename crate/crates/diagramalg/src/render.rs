//! SVG and ASCII pictures of (ramified) diagrams: two rows of vertices,
//! bones drawn as arcs and lines, islands as translucent rounded outlines.
//! Output only; the text formats in [`crate::partitions`] and
//! [`crate::diagrams`] are the parseable interchange forms.

use std::fmt::Write as _;

use crate::diagrams::{PartitionDiagram, RamifiedDiagram};
use crate::partitions::GroundElement;

const STEP: f64 = 60.0;
const MARGIN: f64 = 50.0;
const TOP_Y: f64 = 50.0;
const BOT_Y: f64 = 170.0;

fn vertex_xy(n: usize, e: &GroundElement) -> (f64, f64) {
    let _ = n;
    let x = MARGIN + (e.index as f64 - 1.0) * STEP;
    let y = if e.primed { BOT_Y } else { TOP_Y };
    (x, y)
}

fn block_edges(block: &[GroundElement]) -> Vec<(GroundElement, GroundElement)> {
    // connect consecutive vertices within each row, plus one bridge between
    // the rows when the block spans both
    let top: Vec<_> = block.iter().copied().filter(|e| !e.primed).collect();
    let bot: Vec<_> = block.iter().copied().filter(|e| e.primed).collect();
    let mut edges = Vec::new();
    for w in top.windows(2) {
        edges.push((w[0], w[1]));
    }
    for w in bot.windows(2) {
        edges.push((w[0], w[1]));
    }
    if let (Some(&a), Some(&b)) = (top.last(), bot.first()) {
        edges.push((a, b));
    }
    edges
}

fn svg_edges(out: &mut String, n: usize, d: &PartitionDiagram, color: &str, width: f64) {
    for block in d.partition().blocks() {
        for (a, b) in block_edges(block) {
            let (x1, y1) = vertex_xy(n, &a);
            let (x2, y2) = vertex_xy(n, &b);
            if (y1 - y2).abs() < f64::EPSILON {
                // same row: arc bulging into the frame
                let bulge = if y1 == TOP_Y { 32.0 } else { -32.0 };
                let _ = writeln!(
                    out,
                    r#"  <path d="M {x1} {y1} Q {:.1} {:.1} {x2} {y2}" fill="none" stroke="{color}" stroke-width="{width}"/>"#,
                    (x1 + x2) / 2.0,
                    y1 + bulge,
                );
            } else {
                let _ = writeln!(
                    out,
                    r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="{width}"/>"#
                );
            }
        }
    }
}

fn svg_islands(out: &mut String, n: usize, coarse: &PartitionDiagram) {
    for block in coarse.partition().blocks() {
        let xs: Vec<(f64, f64)> = block.iter().map(|e| vertex_xy(n, e)).collect();
        let min_x = xs.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - 18.0;
        let max_x = xs.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + 18.0;
        let min_y = xs.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - 18.0;
        let max_y = xs.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + 18.0;
        let _ = writeln!(
            out,
            r#"  <rect x="{min_x}" y="{min_y}" width="{:.1}" height="{:.1}" rx="16" fill="#4477aa22" stroke="#4477aa" stroke-width="1" stroke-dasharray="4 3"/>"#,
            max_x - min_x,
            max_y - min_y,
        );
    }
}

fn svg_vertices(out: &mut String, n: usize) {
    for i in 1..=n {
        for primed in [false, true] {
            let e = GroundElement { primed, index: i };
            let (x, y) = vertex_xy(n, &e);
            let _ = writeln!(
                out,
                r##"  <circle cx="{x}" cy="{y}" r="4" fill="#222"/>"##
            );
            let label_y = if primed { y + 22.0 } else { y - 12.0 };
            let _ = writeln!(
                out,
                r##"  <text x="{x}" y="{label_y}" font-size="13" text-anchor="middle" font-family="monospace">{e}</text>"##
            );
        }
    }
}

/// A self-contained SVG of a ramified diagram: fine blocks as solid bones,
/// coarse blocks as dashed island outlines.
pub fn ramified_svg(d: &RamifiedDiagram) -> String {
    let n = d.n();
    let width = 2.0 * MARGIN + (n.saturating_sub(1)) as f64 * STEP;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="220" viewBox="0 0 {width} 220">"#
    );
    let _ = writeln!(out, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);
    svg_islands(&mut out, n, d.coarse());
    svg_edges(&mut out, n, d.fine(), "#222222", 1.8);
    svg_vertices(&mut out, n);
    out.push_str("</svg>\n");
    out
}

/// SVG of a plain diagram (drawn as the ramified pair `(d, d)` without
/// island outlines).
pub fn diagram_svg(d: &PartitionDiagram) -> String {
    let n = d.n();
    let width = 2.0 * MARGIN + (n.saturating_sub(1)) as f64 * STEP;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="220" viewBox="0 0 {width} 220">"#
    );
    let _ = writeln!(out, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);
    svg_edges(&mut out, n, d, "#222222", 1.8);
    svg_vertices(&mut out, n);
    out.push_str("</svg>\n");
    out
}

/// Plain-text picture: one letter per vertex naming its bone, one digit
/// naming its island.
pub fn ramified_ascii(d: &RamifiedDiagram) -> String {
    let n = d.n();
    let fine_ids = d.fine().partition().block_ids();
    let coarse_ids = d.coarse().partition().block_ids();
    let letter = |b: usize| (b'a' + (b % 26) as u8) as char;
    let mut lines = vec![String::new(); 4];
    for i in 1..=n {
        let top = GroundElement::plain(i);
        let bot = GroundElement::primed(i);
        let _ = write!(lines[0], "{:<4}", top.to_string());
        let _ = write!(
            lines[1],
            "{:<4}",
            format!("{}{}", letter(fine_ids[&top]), coarse_ids[&top])
        );
        let _ = write!(
            lines[2],
            "{:<4}",
            format!("{}{}", letter(fine_ids[&bot]), coarse_ids[&bot])
        );
        let _ = write!(lines[3], "{:<4}", bot.to_string());
    }
    format!(
        "{}\n{}\n{}\n{}\nbones: {}\nislands: {}\n",
        lines[0].trim_end(),
        lines[1].trim_end(),
        lines[2].trim_end(),
        lines[3].trim_end(),
        d.fine(),
        d.coarse(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_is_self_contained_and_mentions_every_vertex() {
        let d = RamifiedDiagram::parse("{1,2}{1'}{2'} | {1,2,1'}{2'}").unwrap();
        let svg = ramified_svg(&d);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(!svg.contains("http://") || svg.contains("xmlns"));
        for label in ["1<", "2<", "1'<", "2'<"] {
            assert!(svg.contains(&format!(">{label}")), "missing {label}");
        }
    }

    #[test]
    fn ascii_shows_bone_and_island_structure() {
        let d = RamifiedDiagram::parse("{1,2}{1'}{2'} | {1,2,1'}{2'}").unwrap();
        let text = ramified_ascii(&d);
        assert!(text.contains("bones: {1,2}{1'}{2'}"));
        assert!(text.contains("islands: {1,2,1'}{2'}"));
    }
}
