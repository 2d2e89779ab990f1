use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rand::Rng;

use crate::ParseError;

/// A directed graph with designated `from` and `to` nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    from: usize,
    to: usize,
}

impl DiGraph {
    /// Duplicate edges are merged; edge order is normalized.
    pub fn new(names: Vec<String>, edges: Vec<(usize, usize)>, from: usize, to: usize) -> DiGraph {
        let n = names.len();
        assert!(from < n && to < n, "endpoints must be nodes");
        assert!(edges.iter().all(|&(x, y)| x < n && y < n), "edge endpoint out of range");
        let edges: Vec<(usize, usize)> = edges.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        DiGraph {
            names,
            edges,
            from,
            to,
        }
    }

    /// Nodes named `0..n`.
    pub fn with_nodes(n: usize, edges: Vec<(usize, usize)>, from: usize, to: usize) -> DiGraph {
        DiGraph::new((0..n).map(|i| i.to_string()).collect(), edges, from, to)
    }

    /// The four-node example graph: A→B→C→D plus the shortcut A→D.
    pub fn example() -> DiGraph {
        DiGraph::new(
            ["A", "B", "C", "D"].iter().map(|s| s.to_string()).collect(),
            vec![(0, 1), (1, 2), (2, 3), (0, 3)],
            0,
            3,
        )
    }

    /// Each ordered pair of distinct nodes is an edge with probability
    /// `density`; `from` and `to` are distinct random nodes when `n >= 2`.
    pub fn random<R: Rng>(n: usize, density: f64, rng: &mut R) -> DiGraph {
        assert!(n >= 1);
        let mut edges = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && rng.gen_bool(density) {
                    edges.push((x, y));
                }
            }
        }
        let from = rng.gen_range(0..n);
        let to = if n == 1 {
            0
        } else {
            (from + rng.gen_range(1..n)) % n
        };
        DiGraph::with_nodes(n, edges, from, to)
    }

    pub fn num_nodes(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn from(&self) -> usize {
        self.from
    }

    pub fn to(&self) -> usize {
        self.to
    }

    pub fn name(&self, node: usize) -> &str {
        &self.names[node]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.binary_search(&(x, y)).is_ok()
    }

    /// Self-loops are accepted but never lie on a simple path.
    pub fn has_self_loops(&self) -> bool {
        self.edges.iter().any(|&(x, y)| x == y)
    }

    /// Edge-list text: `n m` header, `m` lines `u v`, then `from to`.
    ///
    /// When every node token is an integer, tokens are indices in `0..n`.
    /// Otherwise tokens are names, numbered by first appearance, and there
    /// must be exactly `n` of them.
    pub fn parse(text: &str) -> Result<DiGraph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let pair = |line: usize, l: &str| -> Result<(String, String), ParseError> {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks.as_slice() {
                [a, b] => Ok((a.to_string(), b.to_string())),
                _ => Err(ParseError::new(line, format!("expected two tokens, got `{l}`"))),
            }
        };
        let (hline, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(0, "empty graph file"))?;
        let (n, m) = pair(hline, header)?;
        let n: usize = n
            .parse()
            .map_err(|_| ParseError::new(hline, format!("bad node count `{n}`")))?;
        let m: usize = m
            .parse()
            .map_err(|_| ParseError::new(hline, format!("bad edge count `{m}`")))?;
        let mut raw = Vec::with_capacity(m + 1);
        for _ in 0..=m {
            let (line, l) = lines.next().ok_or_else(|| {
                ParseError::new(hline, format!("expected {m} edge lines followed by `from to`"))
            })?;
            let (a, b) = pair(line, l)?;
            raw.push((line, a, b));
        }
        if let Some((line, l)) = lines.next() {
            return Err(ParseError::new(line, format!("unexpected trailing line `{l}`")));
        }
        let numeric = raw
            .iter()
            .all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut resolve = |line: usize, tok: &str| -> Result<usize, ParseError> {
            if numeric {
                let i: usize = tok.parse().expect("checked numeric");
                if i >= n {
                    return Err(ParseError::new(line, format!("node {i} out of range 0..{n}")));
                }
                Ok(i)
            } else {
                let next = index.len();
                let i = *index.entry(tok.to_string()).or_insert_with(|| {
                    names.push(tok.to_string());
                    next
                });
                Ok(i)
            }
        };
        let mut pairs = Vec::with_capacity(raw.len());
        for (line, a, b) in &raw {
            pairs.push((resolve(*line, a)?, resolve(*line, b)?));
        }
        let (from, to) = pairs.pop().expect("at least the endpoint line");
        if numeric {
            return Ok(DiGraph::with_nodes(n, pairs, from, to));
        }
        if names.len() != n {
            return Err(ParseError::new(
                hline,
                format!("header declares {n} nodes but {} distinct names appear", names.len()),
            ));
        }
        Ok(DiGraph::new(names, pairs, from, to))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.num_nodes(), self.edges.len()).unwrap();
        for &(x, y) in &self.edges {
            writeln!(out, "{} {}", self.names[x], self.names[y]).unwrap();
        }
        writeln!(out, "{} {}", self.names[self.from], self.names[self.to]).unwrap();
        out
    }
}
