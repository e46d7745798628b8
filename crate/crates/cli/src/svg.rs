//! Diagnostic drawing of a chord diagram.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use chordcolor_core::{Color, Instance, PartialColoring};

const SIZE: f64 = 400.0;
const RADIUS: f64 = 180.0;

fn stroke(c: Option<Color>) -> &'static str {
    match c {
        Some(Color::Red) => "#d62728",
        Some(Color::Green) => "#2ca02c",
        Some(Color::Blue) => "#1f77b4",
        None => "#888888",
    }
}

fn point(pos: u32, universe: u32) -> (f64, f64) {
    let angle = TAU * f64::from(pos) / f64::from(universe.max(1));
    // Position 0 at the top, increasing clockwise on screen.
    let c = SIZE / 2.0;
    (c + RADIUS * angle.sin(), c - RADIUS * angle.cos())
}

/// Positions sit at angle `2*pi*p/universe`. Chords are straight segments in
/// their vertex's color, gray when uncolored.
pub fn render_svg(inst: &Instance, coloring: Option<&PartialColoring>) -> String {
    let mut out = String::new();
    let c = SIZE / 2.0;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"  <circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black"/>"#).unwrap();
    for chord in inst.chords() {
        let (x1, y1) = point(chord.p, inst.universe());
        let (x2, y2) = point(chord.q, inst.universe());
        let color = stroke(coloring.and_then(|col| col.get(chord.id)));
        writeln!(
            out,
            r#"  <line data-id="{}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="2"/>"#,
            chord.id
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
