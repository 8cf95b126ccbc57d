//! Plain-text structure files.
//!
//! ```text
//! # a comment
//! digraph 3
//! 1 2
//! 2 3
//! ```
//!
//! The header is `graph n`, `digraph n`, `poset n` or `tree n root r`; each
//! further line holds one pair of 1-based vertices. Poset pairs mean `u < v`
//! and are closed transitively.

use std::fmt::Write as _;

use super::{Digraph, Graph, Poset, RootedTree};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Graph(Graph),
    Digraph(Digraph),
    Poset(Poset),
    Tree(RootedTree),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Graph(_) => "graph",
            Structure::Digraph(_) => "digraph",
            Structure::Poset(_) => "poset",
            Structure::Tree(_) => "tree",
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_structure(text: &str) -> Result<Structure> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input, expected a header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (kind, n, root) = match toks.as_slice() {
        [k @ ("graph" | "digraph" | "poset"), n] => (*k, number(n, hline, "a vertex count")?, None),
        ["tree", n, "root", r] => ("tree", number(n, hline, "a vertex count")?, Some(number(r, hline, "a root")?)),
        _ => {
            return Err(parse_err(
                hline,
                format!("bad header {header:?}; expected \"graph n\", \"digraph n\", \"poset n\" or \"tree n root r\""),
            ))
        }
    };
    if n > super::graph::MAX_VERTICES {
        return Err(parse_err(hline, format!("at most {} vertices are supported", super::graph::MAX_VERTICES)));
    }
    let mut pairs = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(parse_err(line, format!("expected two vertices, found {l:?}")));
        };
        let (u, v) = (number(a, line, "a vertex")?, number(b, line, "a vertex")?);
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(parse_err(line, format!("vertex {w} outside 1..={n}")));
            }
        }
        if kind != "digraph" && u == v {
            return Err(parse_err(line, format!("loop at vertex {u} not allowed in a {kind}")));
        }
        pairs.push((line, (u - 1, v - 1)));
    }
    let at = |line: usize| move |e: Error| parse_err(line, e.to_string());
    let last = pairs.last().map_or(hline, |p| p.0);
    let edges: Vec<(usize, usize)> = pairs.iter().map(|p| p.1).collect();
    Ok(match kind {
        "graph" => Structure::Graph(Graph::from_edges(n, &edges).map_err(at(last))?),
        "digraph" => Structure::Digraph(Digraph::from_edges(n, &edges).map_err(at(last))?),
        "poset" => Structure::Poset(Poset::from_relations(n, &edges).map_err(at(last))?),
        _ => {
            let root = root.unwrap();
            if root == 0 || root > n {
                return Err(parse_err(hline, format!("root {root} outside 1..={n}")));
            }
            let g = Graph::from_edges(n, &edges).map_err(at(last))?;
            Structure::Tree(RootedTree::new(g, root - 1).map_err(at(last))?)
        }
    })
}

pub fn serialize_structure(s: &Structure) -> String {
    let (header, pairs) = match s {
        Structure::Graph(g) => (format!("graph {}", g.n()), g.edges()),
        Structure::Digraph(d) => (format!("digraph {}", d.d()), d.edges()),
        Structure::Poset(p) => (format!("poset {}", p.n()), p.cover_relations()),
        Structure::Tree(t) => (format!("tree {} root {}", t.n(), t.root() + 1), t.graph().edges()),
    };
    let mut out = header;
    out.push('\n');
    for (u, v) in pairs {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_structure("digraph 2\n1 2").unwrap(), Structure::Digraph(Digraph::path(2)));
        let Structure::Poset(p) = parse_structure("poset 3\n1 2\n2 3").unwrap() else { panic!() };
        assert!(p.lt(0, 2));
        assert_eq!(parse_structure("graph 1").unwrap(), Structure::Graph(Graph::empty(1)));
        let Structure::Tree(t) = parse_structure("# star\ntree 3 root 2\n1 2\n2 3\n").unwrap() else { panic!() };
        assert_eq!(t.root(), 1);
    }

    #[test]
    fn errors_carry_lines() {
        let err = |t: &str| match parse_structure(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(err(""), 1);
        assert_eq!(err("digraph x"), 1);
        assert_eq!(err("graph 2\n1 3"), 2);
        assert_eq!(err("graph 2\n\n1 1"), 3);
        assert_eq!(err("poset 2\n1 2\n2 1"), 3);
        assert_eq!(err("tree 3 root 1\n1 2"), 2);
        assert_eq!(err("digraph 2\n1 2 3"), 2);
    }

    #[test]
    fn round_trip() {
        let samples = [
            "graph 3\n1 2\n2 3\n",
            "digraph 2\n1 1\n2 1\n",
            "poset 3\n1 2\n1 3\n",
            "tree 4 root 3\n1 2\n2 3\n3 4\n",
        ];
        for s in samples {
            let parsed = parse_structure(s).unwrap();
            assert_eq!(serialize_structure(&parsed), s);
            assert_eq!(parse_structure(&serialize_structure(&parsed)).unwrap(), parsed);
        }
    }
}
