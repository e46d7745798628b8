//! Line-oriented text formats.
//!
//! Chord instances:
//! ```text
//! n=2
//! 0 2 RGB
//! 1 3 RG
//! ```
//! The header fixes the universe to `2n` positions. Each further line is a
//! chord with its color list, letters in `RGB` order; chord ids follow line
//! order starting at 0. Ordered graphs use the same header with `u v` edge
//! lines over vertices `1..=n`. Colorings are `id letter` lines. Blank
//! lines and everything after `#` are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use chordcolor_core::bookembed::{GraphError, OrderedGraph};
use chordcolor_core::chords::Chord;
use chordcolor_core::{Color, ColorSet, Instance, PartialColoring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {cause}")]
pub struct ParseError {
    pub line: usize,
    pub cause: String,
}

fn err(line: usize, cause: impl Into<String>) -> ParseError {
    ParseError { line, cause: cause.into() }
}

/// Non-empty content lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<u32, ParseError> {
    let (no, line) = lines.next().ok_or_else(|| err(1, "missing `n=<count>` header"))?;
    let value = line
        .strip_prefix("n=")
        .ok_or_else(|| err(no, format!("expected `n=<count>` header, found `{line}`")))?;
    value.trim().parse().map_err(|_| err(no, format!("bad count `{value}`")))
}

fn number(no: usize, field: &str, what: &str) -> Result<u32, ParseError> {
    field.parse().map_err(|_| err(no, format!("bad {what} `{field}`")))
}

fn parse_list(no: usize, field: &str) -> Result<ColorSet, ParseError> {
    let mut list = ColorSet::EMPTY;
    let mut last = None;
    for ch in field.chars() {
        let c = Color::from_letter(ch).ok_or_else(|| err(no, format!("unknown color letter `{ch}`")))?;
        if last.is_some_and(|l: Color| l.index() >= c.index()) {
            return Err(err(no, format!("color list `{field}` must list R, G, B in that order without repeats")));
        }
        last = Some(c);
        list.insert(c);
    }
    if list.is_empty() {
        return Err(err(no, "empty color list"));
    }
    Ok(list)
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = content_lines(text);
    let n = header(&mut lines)?;
    let universe = n
        .checked_mul(2)
        .ok_or_else(|| err(1, format!("count {n} is too large")))?;
    let mut used: HashMap<u32, usize> = HashMap::new();
    let mut entries = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [p, q, colors] = fields[..] else {
            return Err(err(no, format!("expected `<p> <q> <colors>`, found `{line}`")));
        };
        let (p, q) = (number(no, p, "position")?, number(no, q, "position")?);
        if entries.len() as u32 == n {
            return Err(err(no, format!("more than {n} chords")));
        }
        for pos in [p, q] {
            if pos >= universe {
                return Err(err(no, format!("position {pos} is outside 0..{universe}")));
            }
        }
        let id = entries.len() as u32;
        let chord = Chord::new(id, p, q).map_err(|_| err(no, format!("degenerate chord `{p} {q}`")))?;
        for pos in [p, q] {
            if let Some(first) = used.insert(pos, no) {
                return Err(err(no, format!("duplicate endpoint {pos} (also used on line {first})")));
            }
        }
        entries.push((chord, parse_list(no, colors)?));
    }
    Instance::from_chords(universe, entries).map_err(|e| err(0, e.to_string()))
}

/// Canonical text: header, then chords by id with `p < q`.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = format!("n={}\n", inst.universe() / 2);
    for (chord, list) in inst.entries() {
        writeln!(out, "{} {} {}", chord.p, chord.q, list).expect("writing to a string");
    }
    out
}

pub fn parse_ordered_graph(text: &str) -> Result<OrderedGraph, ParseError> {
    let mut lines = content_lines(text);
    let n = header(&mut lines)?;
    let mut edges = Vec::new();
    let mut seen: HashMap<(u32, u32), usize> = HashMap::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(no, format!("expected `<u> <v>`, found `{line}`")));
        };
        let (u, v) = (number(no, u, "vertex")?, number(no, v, "vertex")?);
        let single = OrderedGraph::new(n, vec![(u, v)]).map_err(|e| err(no, e.to_string()))?;
        debug_assert_eq!(single.edges().len(), 1);
        if let Some(first) = seen.insert((u.min(v), u.max(v)), no) {
            let e = GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) };
            return Err(err(no, format!("{e} (first on line {first})")));
        }
        edges.push((u, v));
    }
    OrderedGraph::new(n, edges).map_err(|e| err(0, e.to_string()))
}

pub fn serialize_ordered_graph(g: &OrderedGraph) -> String {
    let mut out = format!("n={}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<PartialColoring, ParseError> {
    let mut col = PartialColoring::new();
    for (no, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [id, letter] = fields[..] else {
            return Err(err(no, format!("expected `<id> <R|G|B>`, found `{line}`")));
        };
        let id = number(no, id, "vertex id")?;
        let mut chars = letter.chars();
        let color = match (chars.next(), chars.next()) {
            (Some(ch), None) => Color::from_letter(ch),
            _ => None,
        }
        .ok_or_else(|| err(no, format!("bad color `{letter}`")))?;
        if col.contains(id) {
            return Err(err(no, format!("vertex {id} colored twice")));
        }
        col.set(id, color);
    }
    Ok(col)
}

pub fn serialize_coloring(col: &PartialColoring) -> String {
    let mut out = String::new();
    for (id, c) in col.iter() {
        writeln!(out, "{id} {}", c.letter()).expect("writing to a string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_examples() {
        let i = parse_instance("n=2\n0 2 RGB\n1 3 RG\n").unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(i.list(1).unwrap().to_string(), "RG");

        let e = parse_instance("n=2\n0 0 RGB\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.cause.contains("degenerate"), "{e}");

        let e = parse_instance("n=3\n0 3 R\n# note\n\n1 3 G\n").unwrap_err();
        assert_eq!(e.line, 5);
        assert!(e.cause.contains("duplicate endpoint 3"), "{e}");
    }

    #[test]
    fn instance_errors() {
        let cases = [
            ("", 1, "header"),
            ("m=2\n", 1, "header"),
            ("n=x\n", 1, "bad count"),
            ("n=2\n0 4 R\n", 2, "outside"),
            ("n=2\n0 1\n", 2, "expected"),
            ("n=2\n0 1 \n", 2, "expected"),
            ("n=2\n0 1 RX\n", 2, "letter"),
            ("n=2\n0 1 GR\n", 2, "order"),
            ("n=2\n0 1 RR\n", 2, "order"),
            ("n=1\n0 1 R\n0 1 G\n", 3, "more than 1"),
            ("n=2\n0 -1 R\n", 2, "position"),
        ];
        for (text, line, needle) in cases {
            let e = parse_instance(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
            assert!(e.cause.contains(needle), "{text:?}: {e}");
        }
    }

    #[test]
    fn comments_and_fewer_chords() {
        let i = parse_instance("# header follows\nn=3  # six positions\n 5 0 B # reversed\n").unwrap();
        assert_eq!(i.universe(), 6);
        assert_eq!(serialize_instance(&i), "n=3\n0 5 B\n");
    }

    #[test]
    fn graph_examples() {
        let g = parse_ordered_graph("n=4\n1 3\n2 4\n").unwrap();
        assert_eq!(g.edges(), &[(1, 3), (2, 4)]);
        assert_eq!(serialize_ordered_graph(&g), "n=4\n1 3\n2 4\n");
        let e = parse_ordered_graph("n=4\n2 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.cause.contains("self-loop"));
        let e = parse_ordered_graph("n=4\n1 2\n\n2 1\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.cause.contains("twice"));
        assert!(parse_ordered_graph("n=4\n1 5\n").unwrap_err().cause.contains("out of range"));
    }

    #[test]
    fn coloring_round_trip() {
        let col = parse_coloring("0 R\n2 B\n1 G\n").unwrap();
        assert_eq!(serialize_coloring(&col), "0 R\n1 G\n2 B\n");
        assert_eq!(parse_coloring("0 R\n0 G\n").unwrap_err().line, 2);
        assert_eq!(parse_coloring("0 RG\n").unwrap_err().line, 1);
    }
}
