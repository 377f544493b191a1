//! Edge-list files and cycle output.
//!
//! Edge lists hold one `u v` pair per line, whitespace separated. Lines
//! starting with `#` and blank lines are skipped. A comment of the form
//! `# n=<count> ...` (as written by [`write_edge_list`]) is taken as the
//! vertex count hint so isolated trailing vertices survive a round trip.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::cycle::CanonicalCycle;
use crate::error::{Error, Result};
use crate::graph::{build_graph, BuiltGraph, Graph, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeList {
    pub edges: Vec<(Vertex, Vertex)>,
    pub n_hint: Option<usize>,
}

fn header_n(comment: &str) -> Option<usize> {
    comment
        .trim_start_matches('#')
        .split_whitespace()
        .next()?
        .strip_prefix("n=")?
        .parse()
        .ok()
}

/// Parses an edge list. `path` is only used in error messages.
pub fn parse_edge_list(reader: impl BufRead, path: &Path) -> Result<EdgeList> {
    let mut edges = Vec::new();
    let mut n_hint = None;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let trimmed = line.trim();
        if trimmed.starts_with('#') {
            n_hint = n_hint.or_else(|| header_n(trimmed));
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let malformed = |reason: &str| Error::Malformed {
            path: path.to_path_buf(),
            line: line_no,
            content: line.clone(),
            reason: reason.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed("expected exactly two vertex ids"));
        };
        let u: Vertex = a
            .parse()
            .map_err(|_| malformed("vertex id is not a non-negative integer"))?;
        let v: Vertex = b
            .parse()
            .map_err(|_| malformed("vertex id is not a non-negative integer"))?;
        if u == v {
            return Err(Error::SelfLoopLine {
                path: path.to_path_buf(),
                line: line_no,
                vertex: u,
            });
        }
        edges.push((u, v));
    }
    Ok(EdgeList { edges, n_hint })
}

pub fn read_edge_list(path: &Path) -> Result<BuiltGraph> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let list = parse_edge_list(BufReader::new(file), path)?;
    build_graph(&list.edges, list.n_hint)
}

/// Writes `g` as an edge list headed by `# n=<n> m=<m>`.
pub fn write_edge_list(g: &Graph, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "# n={} m={}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}

pub fn write_cycle<W: Write + ?Sized>(out: &mut W, c: &CanonicalCycle) -> std::io::Result<()> {
    writeln!(out, "{c}")
}

/// Parses one `a b c d` cycle line.
pub fn parse_cycle_line(line: &str) -> Option<CanonicalCycle> {
    let mut it = line.split_whitespace().map(|s| s.parse::<Vertex>());
    let c = CanonicalCycle {
        a: it.next()?.ok()?,
        b: it.next()?.ok()?,
        c: it.next()?.ok()?,
        d: it.next()?.ok()?,
    };
    it.next().is_none().then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Vec<(Vertex, Vertex)>> {
        parse_edge_list(text.as_bytes(), Path::new("in.txt")).map(|l| l.edges)
    }

    #[test]
    fn comments_blanks_and_whitespace() {
        let edges = parse("# header\n0 1\n\n  1\t2  \n# 9 9\n2 3\n").unwrap();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse("0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 2, .. }), "{err}");
        assert!(matches!(
            parse("0 1 2\n").unwrap_err(),
            Error::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            parse("7\n").unwrap_err(),
            Error::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            parse("-1 2\n").unwrap_err(),
            Error::Malformed { line: 1, .. }
        ));
        let err = parse("0 1\n\n4 4\n").unwrap_err();
        assert!(matches!(
            err,
            Error::SelfLoopLine {
                line: 3,
                vertex: 4,
                ..
            }
        ));
        assert!(err.to_string().contains("in.txt:3"));
    }

    #[test]
    fn write_then_read() {
        let g = build_graph(&[(0, 1), (1, 2), (2, 0), (2, 3)], Some(7))
            .unwrap()
            .graph;
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let list = parse_edge_list(buf.as_slice(), Path::new("-")).unwrap();
        assert_eq!(list.n_hint, Some(7));
        assert_eq!(build_graph(&list.edges, list.n_hint).unwrap().graph, g);
        assert_eq!(
            parse_edge_list("# nodes\n0 1\n".as_bytes(), Path::new("-"))
                .unwrap()
                .n_hint,
            None
        );
    }

    #[test]
    fn cycle_lines() {
        let c = CanonicalCycle {
            a: 0,
            b: 1,
            c: 2,
            d: 3,
        };
        let mut buf = Vec::new();
        write_cycle(&mut buf, &c).unwrap();
        assert_eq!(buf, b"0 1 2 3\n");
        assert_eq!(parse_cycle_line("0 1 2 3"), Some(c));
        assert_eq!(parse_cycle_line("0 1 2"), None);
        assert_eq!(parse_cycle_line("0 1 2 3 4"), None);
    }
}
