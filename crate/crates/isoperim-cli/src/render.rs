//! Text and SVG renderings of vertex sets. Rows print north to south; SVG
//! flips the y axis so the picture matches the lattice orientation.

use anyhow::Result;
use isoperim::boxes::enclosing_box;
use isoperim::lattice::{Vertex, VertexSet};
use std::fmt::Write as _;

fn xy_bounds(points: impl Iterator<Item = Vertex>) -> (i64, i64, i64, i64) {
    let mut min_x = i64::MAX;
    let mut max_x = i64::MIN;
    let mut min_y = i64::MAX;
    let mut max_y = i64::MIN;
    for p in points {
        min_x = min_x.min(p.x);
        max_x = max_x.max(p.x);
        min_y = min_y.min(p.y);
        max_y = max_y.max(p.y);
    }
    (min_x, max_x, min_y, max_y)
}

/// Cells of the enclosing box not in the set, or empty without the flag.
fn shell(set: &VertexSet, show_enc: bool) -> Result<Vec<Vertex>> {
    if !show_enc {
        return Ok(Vec::new());
    }
    let enc = enclosing_box(set)?;
    Ok(enc
        .vertices()
        .iter()
        .filter(|v| !set.contains(*v))
        .collect())
}

/// `#` for set cells, `.` for enclosing-box cells outside the set (with
/// `show_enc`), space elsewhere. Rows run from the largest y downward.
pub fn ascii(set: &VertexSet, show_enc: bool) -> Result<String> {
    let shell = shell(set, show_enc)?;
    let (min_x, max_x, min_y, max_y) =
        xy_bounds(set.iter().chain(shell.iter().copied()));
    let mut out = String::new();
    for y in (min_y..=max_y).rev() {
        let mut line = String::new();
        for x in min_x..=max_x {
            let v = Vertex::new(x, y);
            line.push(if set.contains(v) {
                '#'
            } else if shell.contains(&v) {
                '.'
            } else {
                ' '
            });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// Unit squares centered on the lattice points: the cell at `(x, y)` is a
/// rect at `(x - 0.5, -y - 0.5)`. Enclosing-box cells render first as
/// white squares with black outlines, so set cells paint over them.
pub fn svg(set: &VertexSet, show_enc: bool) -> Result<String> {
    let shell = shell(set, show_enc)?;
    let (min_x, max_x, min_y, max_y) =
        xy_bounds(set.iter().chain(shell.iter().copied()));
    let x0 = min_x as f64 - 1.0;
    let y0 = -(max_y as f64) - 1.0;
    let width = (max_x - min_x) as f64 + 2.0;
    let height = (max_y - min_y) as f64 + 2.0;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0:.1} {y0:.1} {width:.1} {height:.1}\">"
    )
    .unwrap();
    for v in &shell {
        writeln!(
            out,
            "  <rect x=\"{:.1}\" y=\"{:.1}\" width=\"1.0\" height=\"1.0\" fill=\"white\" stroke=\"black\" stroke-width=\"0.1\"/>",
            v.x as f64 - 0.5,
            -(v.y as f64) - 0.5,
        )
        .unwrap();
    }
    for v in set.iter() {
        writeln!(
            out,
            "  <rect x=\"{:.1}\" y=\"{:.1}\" width=\"1.0\" height=\"1.0\" fill=\"black\"/>",
            v.x as f64 - 0.5,
            -(v.y as f64) - 0.5,
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
