//! Plain-text file formats.
//!
//! Hypergraph: a header line `n k m`, then `m` lines of `k` space-separated
//! vertex ids, each line sorted and the lines in lexicographic order.
//! Coloring: one line of `n` space-separated colors.
//! Path trace: one line per step, `index vertex old_color new_color`, with
//! indices counting from 1.

use std::fmt::Write as _;

use recolor_core::{
    Color, Coloring, Hypergraph, HypergraphError, RecolorPath, RecolorStep, Vertex,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("empty input")]
    Empty,
    #[error("header says m={expected} edges but {found} lines follow")]
    EdgeCount { expected: usize, found: usize },
    #[error("trace line {line}: index {found}, expected {expected}")]
    TraceIndex {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("trace line {line}: vertex {vertex} out of range 1..={n}")]
    TraceVertex { line: usize, vertex: Vertex, n: u32 },
    #[error("trace line {line}: vertex {vertex} has color {actual}, trace says {claimed}")]
    TraceOldColor {
        line: usize,
        vertex: Vertex,
        actual: Color,
        claimed: Color,
    },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

fn numbers<T: std::str::FromStr>(text: &str, line: usize) -> Result<Vec<T>, FormatError> {
    text.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| FormatError::Syntax {
                line,
                msg: format!("not a non-negative integer: {t:?}"),
            })
        })
        .collect()
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::Empty)?;
    let head: Vec<u64> = numbers(header, hl)?;
    let [n, k, m] = head[..] else {
        return Err(FormatError::Syntax {
            line: hl,
            msg: "header must be `n k m`".into(),
        });
    };
    let (n, k) = match (u32::try_from(n), u32::try_from(k)) {
        (Ok(n), Ok(k)) => (n, k),
        _ => {
            return Err(FormatError::Syntax {
                line: hl,
                msg: "n or k too large".into(),
            })
        }
    };
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let e: Vec<Vertex> = numbers(l, ln)?;
        if e.len() != k as usize {
            return Err(FormatError::Syntax {
                line: ln,
                msg: format!("expected {k} vertices, found {}", e.len()),
            });
        }
        edges.push(e);
    }
    if edges.len() as u64 != m {
        return Err(FormatError::EdgeCount {
            expected: m as usize,
            found: edges.len(),
        });
    }
    Ok(Hypergraph::build(n, k, edges)?)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut s = format!("{} {} {}\n", h.n(), h.k(), h.m());
    for e in h.edges() {
        push_joined(&mut s, e);
    }
    s
}

fn push_joined(s: &mut String, xs: &[u32]) {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x}");
    }
    s.push('\n');
}

pub fn parse_coloring(text: &str) -> Result<Coloring, FormatError> {
    let mut lines = content_lines(text);
    let (ln, l) = lines.next().ok_or(FormatError::Empty)?;
    if let Some((extra, _)) = lines.next() {
        return Err(FormatError::Syntax {
            line: extra,
            msg: "coloring must be a single line".into(),
        });
    }
    Ok(Coloring::new(numbers(l, ln)?)?)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    push_joined(&mut s, c.as_slice());
    s
}

/// One parsed trace line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceLine {
    pub index: usize,
    pub vertex: Vertex,
    pub old_color: Color,
    pub new_color: Color,
}

pub fn write_trace(path: &RecolorPath) -> String {
    let mut s = String::new();
    let mut cur = path.start.clone();
    for (i, st) in path.steps.iter().enumerate() {
        let old = cur.get(st.vertex);
        let _ = writeln!(s, "{} {} {} {}", i + 1, st.vertex, old, st.new_color);
        cur.set(st.vertex, st.new_color);
    }
    s
}

/// The same trace as CSV with a header row.
pub fn write_trace_csv(path: &RecolorPath) -> String {
    let mut s = String::from("index,vertex,old_color,new_color\n");
    for l in write_trace(path).lines() {
        s.push_str(&l.replace(' ', ","));
        s.push('\n');
    }
    s
}

pub fn parse_trace(text: &str) -> Result<Vec<TraceLine>, FormatError> {
    content_lines(text)
        .map(|(ln, l)| {
            let xs: Vec<u64> = numbers(l, ln)?;
            let [index, vertex, old_color, new_color] = xs[..] else {
                return Err(FormatError::Syntax {
                    line: ln,
                    msg: "expected `index vertex old_color new_color`".into(),
                });
            };
            let small = |x: u64| {
                u32::try_from(x).map_err(|_| FormatError::Syntax {
                    line: ln,
                    msg: format!("{x} too large"),
                })
            };
            Ok(TraceLine {
                index: index as usize,
                vertex: small(vertex)?,
                old_color: small(old_color)?,
                new_color: small(new_color)?,
            })
        })
        .collect()
}

/// Rebuilds a path from `start`, checking the indices and the recorded old
/// colors along the way. Properness is left to `verify_path`.
pub fn trace_to_path(start: &Coloring, lines: &[TraceLine]) -> Result<RecolorPath, FormatError> {
    let n = start.len() as u32;
    let mut cur = start.clone();
    let mut steps = Vec::with_capacity(lines.len());
    for (i, l) in lines.iter().enumerate() {
        if l.index != i + 1 {
            return Err(FormatError::TraceIndex {
                line: i + 1,
                expected: i + 1,
                found: l.index,
            });
        }
        if l.vertex == 0 || l.vertex > n {
            return Err(FormatError::TraceVertex {
                line: i + 1,
                vertex: l.vertex,
                n,
            });
        }
        let actual = cur.get(l.vertex);
        if actual != l.old_color {
            return Err(FormatError::TraceOldColor {
                line: i + 1,
                vertex: l.vertex,
                actual,
                claimed: l.old_color,
            });
        }
        cur.set(l.vertex, l.new_color);
        steps.push(RecolorStep {
            vertex: l.vertex,
            new_color: l.new_color,
        });
    }
    let mut path = RecolorPath::empty(start.clone());
    path.steps = steps;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_round_trip() {
        let text = "5 3 2\n1 2 3\n2 4 5\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(write_hypergraph(&h), text);
    }

    #[test]
    fn coloring_round_trip() {
        let text = "1 2 1 3\n";
        assert_eq!(write_coloring(&parse_coloring(text).unwrap()), text);
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(parse_hypergraph(""), Err(FormatError::Empty)));
        assert!(matches!(
            parse_hypergraph("3 2 2\n1 2\n"),
            Err(FormatError::EdgeCount { .. })
        ));
        assert!(matches!(
            parse_hypergraph("3 2 1\n1 2 3\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_hypergraph("3 2 1\n1 x\n"),
            Err(FormatError::Syntax { .. })
        ));
        assert!(matches!(
            parse_hypergraph("3 2 1\n1 1\n"),
            Err(FormatError::Hypergraph(_))
        ));
        assert!(matches!(
            parse_coloring("1 0 2\n"),
            Err(FormatError::Hypergraph(_))
        ));
        assert!(matches!(
            parse_coloring("1 2\n3\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn trace_round_trip_and_checks() {
        let start = Coloring::new(vec![1, 2]).unwrap();
        let mut p = RecolorPath::empty(start.clone());
        p.steps = vec![
            RecolorStep {
                vertex: 1,
                new_color: 3,
            },
            RecolorStep {
                vertex: 2,
                new_color: 1,
            },
            RecolorStep {
                vertex: 1,
                new_color: 2,
            },
        ];
        let text = write_trace(&p);
        assert_eq!(text, "1 1 1 3\n2 2 2 1\n3 1 3 2\n");
        let back = trace_to_path(&start, &parse_trace(&text).unwrap()).unwrap();
        assert_eq!(back.steps, p.steps);
        let bad = parse_trace("1 1 2 3\n").unwrap();
        assert!(matches!(
            trace_to_path(&start, &bad),
            Err(FormatError::TraceOldColor { .. })
        ));
        let skip = parse_trace("2 1 1 3\n").unwrap();
        assert!(matches!(
            trace_to_path(&start, &skip),
            Err(FormatError::TraceIndex { .. })
        ));
        assert_eq!(write_trace_csv(&p).lines().nth(1), Some("1,1,1,3"));
    }
}
