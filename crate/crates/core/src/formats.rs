//! Line-based text formats.
//!
//! ```text
//! arcs <n>                      paths <n> [rect <r1> <r2> <c1> <c2>]
//! arc <id> <tail> <head>        path <id> (r,c) (r,c) ...
//!
//! graph <n> <m>
//! vertex <id>
//! edge <u> <v>
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Parsers collect
//! every problem they find, each tagged with its line number.

use std::fmt::Write;

use crate::circle::{Arc, CircleModelViolation, CircularArcModel};
use crate::error::{Diagnostic, Error, Result};
use crate::graph::Graph;
use crate::grid::{GridModel, GridPath, GridPoint, Rect};

/// A line number with the line's tokens.
type Line<'a> = (usize, Vec<&'a str>);

struct Lines<'a> {
    items: Vec<Line<'a>>,
    diags: Vec<Diagnostic>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(i, l)| (i, l.split_whitespace().collect()))
            .collect();
        Self {
            items,
            diags: Vec::new(),
        }
    }

    fn err(&mut self, line: usize, message: impl Into<String>) {
        self.diags.push(Diagnostic {
            line,
            message: message.into(),
        });
    }

    /// Checks the header keyword and returns its line, its tokens and the
    /// remaining lines.
    fn header(&mut self, keyword: &str) -> Option<(usize, Vec<&'a str>, Vec<Line<'a>>)> {
        let mut items = std::mem::take(&mut self.items).into_iter();
        match items.next() {
            Some((line, toks)) if toks[0] == keyword => Some((line, toks, items.collect())),
            Some((line, toks)) => {
                self.err(line, format!("expected `{keyword}` header, found `{}`", toks[0]));
                None
            }
            None => {
                self.err(1, format!("empty input, expected `{keyword}` header"));
                None
            }
        }
    }

    fn finish<T>(self, value: Option<T>) -> Result<T> {
        match value {
            Some(v) if self.diags.is_empty() => Ok(v),
            _ => Err(Error::Parse(self.diags)),
        }
    }
}

fn number<T: std::str::FromStr>(lines: &mut Lines, line: usize, tok: &str, what: &str) -> Option<T> {
    match tok.parse() {
        Ok(v) => Some(v),
        Err(_) => {
            lines.err(line, format!("{what} `{tok}` is not a nonnegative integer"));
            None
        }
    }
}

pub fn parse_arcs(text: &str) -> Result<CircularArcModel> {
    let mut lines = Lines::new(text);
    let Some((hline, head, body)) = lines.header("arcs") else {
        return lines.finish(None);
    };
    let declared = match head.as_slice() {
        [_, n] => number::<usize>(&mut lines, hline, n, "arc count"),
        _ => {
            lines.err(hline, "header must be `arcs <n>`");
            None
        }
    };
    let mut arcs = Vec::new();
    let mut arc_lines = Vec::new();
    for (line, toks) in body {
        match toks.as_slice() {
            ["arc", id, t, h] => {
                let t = number::<u32>(&mut lines, line, t, "tail");
                let h = number::<u32>(&mut lines, line, h, "head");
                if let (Some(t), Some(h)) = (t, h) {
                    arcs.push(Arc::new(*id, t, h));
                    arc_lines.push(line);
                }
            }
            _ => lines.err(line, "expected `arc <id> <tail> <head>`"),
        }
    }
    if let Some(n) = declared {
        if n != arcs.len() && lines.diags.is_empty() {
            lines.err(hline, format!("header declares {n} arcs, found {}", arcs.len()));
        }
    }
    let model = if lines.diags.is_empty() {
        match CircularArcModel::new(arcs.clone()) {
            Ok(m) => Some(m),
            Err(Error::InvalidModel(violations)) => {
                for v in violations {
                    let line = violation_line(&v, &arcs, &arc_lines, hline);
                    lines.err(line, v.to_string());
                }
                None
            }
            Err(e) => {
                lines.err(hline, e.to_string());
                None
            }
        }
    } else {
        None
    };
    lines.finish(model)
}

/// The line of the arc a violation is about; the later line for clashes.
fn violation_line(v: &CircleModelViolation, arcs: &[Arc], arc_lines: &[usize], header: usize) -> usize {
    let id = match v {
        CircleModelViolation::Empty => return header,
        CircleModelViolation::DuplicateId(id)
        | CircleModelViolation::TailEqualsHead { id }
        | CircleModelViolation::OutOfRange { id, .. }
        | CircleModelViolation::DuplicateEndpoint { second: id, .. } => id,
    };
    arcs.iter()
        .rposition(|a| &a.id == id)
        .map_or(header, |i| arc_lines[i])
}

pub fn emit_arcs(m: &CircularArcModel) -> String {
    let mut out = format!("arcs {}\n", m.n());
    for a in m.arcs() {
        writeln!(out, "arc {} {} {}", a.id, a.tail, a.head).expect("writing to a string");
    }
    out
}

fn parse_point(tok: &str) -> Option<GridPoint> {
    let inner = tok.strip_prefix('(')?.strip_suffix(')')?;
    let (r, c) = inner.split_once(',')?;
    Some(GridPoint::new(r.trim().parse().ok()?, c.trim().parse().ok()?))
}

pub fn parse_paths(text: &str) -> Result<GridModel> {
    let mut lines = Lines::new(text);
    let Some((hline, head, body)) = lines.header("paths") else {
        return lines.finish(None);
    };
    let mut declared = None;
    let mut rect = None;
    match head.as_slice() {
        [_, n] => declared = number::<usize>(&mut lines, hline, n, "path count"),
        [_, n, "rect", r1, r2, c1, c2] => {
            declared = number::<usize>(&mut lines, hline, n, "path count");
            let v: Vec<Option<u32>> = [r1, r2, c1, c2]
                .iter()
                .map(|t| number::<u32>(&mut lines, hline, t, "rectangle bound"))
                .collect();
            if let [Some(r1), Some(r2), Some(c1), Some(c2)] = v[..] {
                match Rect::new(r1, r2, c1, c2) {
                    Ok(r) => rect = Some(r),
                    Err(e) => lines.err(hline, e.to_string()),
                }
            }
        }
        _ => lines.err(hline, "header must be `paths <n> [rect <r1> <r2> <c1> <c2>]`"),
    }
    let mut paths = Vec::new();
    let mut ids = std::collections::HashSet::new();
    for (line, toks) in body {
        match toks.as_slice() {
            ["path", id, pts @ ..] => {
                let corners: Option<Vec<GridPoint>> = pts.iter().map(|t| parse_point(t)).collect();
                let Some(corners) = corners else {
                    lines.err(line, "corners must be written `(row,col)`");
                    continue;
                };
                if !ids.insert(id.to_string()) {
                    lines.err(line, format!("duplicate path id {id}"));
                    continue;
                }
                match GridPath::new(*id, corners) {
                    Ok(p) => paths.push(p),
                    Err(e) => lines.err(line, e.to_string()),
                }
            }
            _ => lines.err(line, "expected `path <id> (r,c) (r,c) ...`"),
        }
    }
    if let Some(n) = declared {
        if n != paths.len() && lines.diags.is_empty() {
            lines.err(hline, format!("header declares {n} paths, found {}", paths.len()));
        }
    }
    let model = lines
        .diags
        .is_empty()
        .then(|| GridModel::new(paths, rect).expect("ids checked above"));
    lines.finish(model)
}

/// Canonical form: paths sorted by id, single spaces, no comments.
pub fn emit_paths(m: &GridModel) -> String {
    let mut out = format!("paths {}", m.len());
    if let Some(r) = m.rect() {
        write!(out, " rect {} {} {} {}", r.r1, r.r2, r.c1, r.c2).expect("writing to a string");
    }
    out.push('\n');
    let mut paths: Vec<&GridPath> = m.paths().iter().collect();
    paths.sort_by(|a, b| a.id().cmp(b.id()));
    for p in paths {
        out.push_str("path ");
        out.push_str(p.id());
        for c in p.corners() {
            write!(out, " {c}").expect("writing to a string");
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let Some((hline, head, body)) = lines.header("graph") else {
        return lines.finish(None);
    };
    let counts = match head.as_slice() {
        [_, n, m] => {
            let n = number::<usize>(&mut lines, hline, n, "vertex count");
            let m = number::<usize>(&mut lines, hline, m, "edge count");
            n.zip(m)
        }
        _ => {
            lines.err(hline, "header must be `graph <n> <m>`");
            None
        }
    };
    let mut ids: Vec<&str> = Vec::new();
    let mut edges: Vec<(usize, &str, &str)> = Vec::new();
    for (line, toks) in body {
        match toks.as_slice() {
            ["vertex", id] => ids.push(id),
            ["edge", u, v] => edges.push((line, u, v)),
            _ => lines.err(line, "expected `vertex <id>` or `edge <u> <v>`"),
        }
    }
    let mut g = match Graph::new(ids.iter().copied()) {
        Ok(g) => g,
        Err(e) => {
            lines.err(hline, e.to_string());
            return lines.finish(None);
        }
    };
    for (line, u, v) in edges.iter().copied() {
        if let Err(e) = g.add_edge_by_id(u, v) {
            lines.err(line, e.to_string());
        } else if edges.iter().filter(|&&(_, a, b)| (a, b) == (u, v) || (a, b) == (v, u)).count() > 1 {
            lines.err(line, format!("repeated edge {u} {v}"));
        }
    }
    if let Some((n, m)) = counts {
        if lines.diags.is_empty() && (n != g.order() || m != g.size()) {
            lines.err(
                hline,
                format!("header declares {n} vertices and {m} edges, found {} and {}", g.order(), g.size()),
            );
        }
    }
    lines.finish(Some(g))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.order(), g.size());
    for id in g.ids() {
        writeln!(out, "vertex {id}").expect("writing to a string");
    }
    for (u, v) in g.edges() {
        writeln!(out, "edge {} {}", g.id(u), g.id(v)).expect("writing to a string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::pt;

    #[test]
    fn arcs_examples() {
        let m = parse_arcs("arcs 2\narc v1 1 3\narc v2 2 4\n").unwrap();
        assert!(m.intersection_graph().has_edge_by_id("v1", "v2").unwrap());
        assert!(parse_arcs("arcs 1\narc v1 1 1\n").is_err());
        let Err(Error::Parse(d)) = parse_arcs("arcs 2\narc a 1 3\narc b 3 2\n") else {
            panic!("duplicate endpoint accepted");
        };
        assert!(d[0].message.contains("endpoint 3"));
    }

    #[test]
    fn malformed_lines_are_reported_with_numbers() {
        let Err(Error::Parse(d)) = parse_arcs("arcs 2\narc a 1 x\n\narc b 2\n") else {
            panic!("malformed input accepted");
        };
        let lines: Vec<usize> = d.iter().map(|d| d.line).collect();
        assert_eq!(lines, [2, 4]);
    }

    #[test]
    fn arcs_roundtrip() {
        let text = "arcs 3\narc a 1 4\narc b 3 6\narc c 5 2\n";
        assert_eq!(emit_arcs(&parse_arcs(text).unwrap()), text);
    }

    #[test]
    fn paths_examples() {
        let m = parse_paths("paths 1\npath v1 (0,8) (0,3) (3,3)\n").unwrap();
        assert_eq!(m.paths()[0].bend_count(), 1);
        assert!(parse_paths("paths 1\npath v1 (0,0) (1,1)\n").is_err());
        assert!(parse_paths("paths 1\npath v1 (0,0) (0,0)\n").is_err());
    }

    #[test]
    fn paths_emit_is_canonical() {
        let m = parse_paths("paths 2 rect 0 2 0 3\npath b  (0,1) (0,3)\n# note\npath a (2,0) (0,0)\n").unwrap();
        let once = emit_paths(&m);
        assert_eq!(once, "paths 2 rect 0 2 0 3\npath a (2,0) (0,0)\npath b (0,1) (0,3)\n");
        assert_eq!(emit_paths(&parse_paths(&once).unwrap()), once);
        assert_eq!(m.rect(), Some(Rect::new(0, 2, 0, 3).unwrap()));
        assert_eq!(m.path("a").unwrap().corners(), &[pt(2, 0), pt(0, 0)]);
    }

    #[test]
    fn graph_roundtrip() {
        let text = "graph 3 2\nvertex a\nvertex b\nvertex c\nedge a b\nedge b c\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(emit_graph(&g), text);
        assert!(parse_graph("graph 2 1\nvertex a\nvertex b\nedge a z\n").is_err());
        assert!(parse_graph("graph 2 1\nvertex a\nvertex a\n").is_err());
    }
}
