//! Text graph formats.
//!
//! The edge-list format is a header line `n m` followed by exactly `m` lines `u v`
//! with 0-indexed endpoints. The DIMACS variant uses a `p edge n m` header, `e u v`
//! lines with 1-indexed endpoints, and `c` comment lines.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InputFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Self::EdgeList),
            "dimacs" => Ok(Self::Dimacs),
            other => Err(Error::Argument(format!("unknown format `{other}`"))),
        }
    }
}

pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, fields: &[&str]) -> Result<(usize, usize)> {
    match fields {
        [a, b] => {
            let a = a
                .parse()
                .map_err(|_| parse_err(line_no, format!("expected an integer, found `{a}`")))?;
            let b = b
                .parse()
                .map_err(|_| parse_err(line_no, format!("expected an integer, found `{b}`")))?;
            Ok((a, b))
        }
        _ => Err(parse_err(
            line_no,
            format!("expected two integers, found {} fields", fields.len()),
        )),
    }
}

fn check_edge(line_no: usize, n: usize, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(parse_err(
                line_no,
                format!("vertex {x} out of range for a graph on {n} vertices"),
            ));
        }
    }
    if u == v {
        return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = parse_pair(header_no, &fields)?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(parse_err(
                line_no,
                format!("more than the declared {m} edges"),
            ));
        }
        let (u, v) = parse_pair(line_no, &fields)?;
        check_edge(line_no, n, u, v)?;
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(parse_err(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate `p` line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(parse_err(line_no, "expected `p edge n m`"));
                }
                header = Some(parse_pair(line_no, &fields[2..])?);
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "edge before `p` line"))?;
                let (u, v) = parse_pair(line_no, &fields[1..])?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line_no, "DIMACS vertex ids start at 1"));
                }
                check_edge(line_no, n, u - 1, v - 1)?;
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_err(
                    line_no,
                    format!("unexpected line type `{other}`"),
                ));
            }
        }
    }
    let (n, _) = header.ok_or_else(|| parse_err(1, "missing `p edge n m` line"))?;
    Graph::from_edges(n, edges)
}

/// Renders `g` in the edge-list format, edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("2 1\n0 1").unwrap(), Graph::complete(2));
        assert_eq!(
            parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap(),
            Graph::path(4)
        );
        assert_eq!(parse_edge_list("3 0").unwrap(), Graph::empty(3));
    }

    #[test]
    fn duplicate_edges_merge() {
        let g = parse_edge_list("3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("3 1\n0 3\n", 2),
            ("3 1\n1 1\n", 2),
            ("3 2\n0 1\nx 2\n", 3),
            ("3 1\n0 1 2\n", 2),
            ("3 1\n0 1\n1 2\n", 3),
            ("3 2\n0 1\n", 2),
            ("three 0\n", 1),
        ];
        for (text, want) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "input {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn dimacs_is_one_indexed() {
        let g = parse_dimacs("c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
        assert_eq!(g, Graph::path(4));
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("e 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn writer_round_trips() {
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
