//! Shortest directed paths as minimal models, under four encodings that
//! differ in how reachability along the chosen edges is defined.

mod graph;

pub use graph::DiGraph;

use std::collections::VecDeque;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::encode::{
    add_cardinality, encode_founded_reachability, minimize_cardinality, Atom,
    CardinalityConstraint, CnfFormula, MinimizeError, MinimizeOptions, OrderLevel,
};
use crate::sat::{ClauseSink, Lit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Variant {
    /// Binary `reaches` closed under composition of two `reaches` facts.
    Join,
    /// Binary `reaches` extended one path edge at a time.
    Linear,
    /// Unary `reachable` from the start node.
    Unary,
    /// Unary `reachable` without the in/out-degree and endpoint constraints.
    Relaxed,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Join, Variant::Linear, Variant::Unary, Variant::Relaxed];

    pub fn id(self) -> u8 {
        match self {
            Variant::Join => 1,
            Variant::Linear => 2,
            Variant::Unary => 3,
            Variant::Relaxed => 4,
        }
    }

    pub fn from_id(id: u8) -> Option<Variant> {
        Variant::ALL.get(usize::from(id).checked_sub(1)?).copied()
    }
}

impl TryFrom<u8> for Variant {
    type Error = String;

    fn try_from(id: u8) -> Result<Variant, String> {
        Variant::from_id(id).ok_or_else(|| format!("no encoding variant {id}"))
    }
}

impl From<Variant> for u8 {
    fn from(v: Variant) -> u8 {
        v.id()
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodingStats {
    pub variant: Variant,
    pub vars: usize,
    pub clauses: usize,
    pub encode_ms: f64,
    pub solve_ms: f64,
}

#[derive(Debug, Clone)]
pub struct Encoding {
    pub formula: CnfFormula,
    /// One `edgeOnPath` literal per graph edge, aligned with `DiGraph::edges`.
    pub objective: Vec<Lit>,
    pub stats: EncodingStats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathResult {
    pub length: usize,
    /// Edges in path order from `from` to `to`.
    pub edges: Vec<(usize, usize)>,
    /// `false` when a deadline stopped the search early.
    pub optimal: bool,
    pub stats: EncodingStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("no path exists")]
    NoPath,
    #[error("time budget exhausted before any path was found")]
    Timeout,
}

struct Builder<'g> {
    g: &'g DiGraph,
    f: CnfFormula,
    on_path: Vec<Lit>,
}

impl<'g> Builder<'g> {
    fn new(g: &'g DiGraph) -> Self {
        let mut f = CnfFormula::new();
        let on_path = g
            .edges()
            .iter()
            .map(|&(x, y)| {
                f.atom(Atom::new("edgeOnPath", [g.name(x), g.name(y)]))
                    .pos()
            })
            .collect();
        Builder { g, f, on_path }
    }

    fn edge_lits(&self) -> impl Iterator<Item = (usize, usize, Lit)> + '_ {
        self.g
            .edges()
            .iter()
            .zip(&self.on_path)
            .map(|(&(x, y), &l)| (x, y, l))
    }

    /// `reaches(x,y)` atoms and a level in `0..=depth` per pair, with the
    /// base rule `edgeOnPath(x,y) → reaches(x,y)` in place.
    fn pair_relation(&mut self, depth: usize) -> (Vec<Vec<Lit>>, Vec<Vec<OrderLevel>>) {
        let n = self.g.num_nodes();
        let mut reaches = vec![Vec::with_capacity(n); n];
        for (x, row) in reaches.iter_mut().enumerate() {
            for y in 0..n {
                let a = Atom::new("reaches", [self.g.name(x), self.g.name(y)]);
                row.push(self.f.atom(a).pos());
            }
        }
        // grounding bound: no pair beyond the graph's own closure
        let closure = transitive_closure(self.g);
        for x in 0..n {
            for y in 0..n {
                if !closure[x][y] {
                    self.f.emit(&[!reaches[x][y]]);
                }
            }
        }
        let levels = (0..n)
            .map(|_| (0..n).map(|_| OrderLevel::new(&mut self.f, depth)).collect())
            .collect();
        for (x, y, e) in self.edge_lits().collect::<Vec<_>>() {
            self.f.emit(&[!e, reaches[x][y]]);
        }
        (reaches, levels)
    }

    /// Completion for `reaches(x,y)`: the direct edge or one of `supports`.
    fn close_pair(&mut self, reaches: &[Vec<Lit>], supports: Vec<Vec<Vec<Lit>>>) {
        let n = self.g.num_nodes();
        let mut direct = vec![vec![None; n]; n];
        for (x, y, e) in self.edge_lits() {
            direct[x][y] = Some(e);
        }
        for (x, row) in supports.into_iter().enumerate() {
            for (y, sup) in row.into_iter().enumerate() {
                let mut clause = vec![!reaches[x][y]];
                clause.extend(direct[x][y]);
                clause.extend(sup);
                self.f.emit(&clause);
            }
        }
    }

    /// The join rule as written, over all node triples. Its least fixpoint
    /// is the same as that of the edge-by-edge rule, so true `reaches`
    /// atoms are justified through edge-by-edge derivations.
    fn join(&mut self) -> Vec<Vec<Lit>> {
        let n = self.g.num_nodes();
        let r = self.linear();
        for x in 0..n {
            for z in 0..n {
                for y in 0..n {
                    // trivially satisfied instances
                    if z == x || z == y {
                        continue;
                    }
                    self.f.emit(&[!r[x][z], !r[z][y], r[x][y]]);
                }
            }
        }
        r
    }

    fn linear(&mut self) -> Vec<Vec<Lit>> {
        let n = self.g.num_nodes();
        let (r, lv) = self.pair_relation(n);
        let mut supports = vec![vec![Vec::new(); n]; n];
        for (x, z, e) in self.edge_lits().collect::<Vec<_>>() {
            for y in 0..n {
                self.f.emit(&[!e, !r[z][y], r[x][y]]);
                if z == x {
                    continue;
                }
                let s = self.f.fresh_var().pos();
                self.f.emit(&[!s, e]);
                self.f.emit(&[!s, r[z][y]]);
                OrderLevel::require_less(&mut self.f, s, &lv[z][y], &lv[x][y]);
                supports[x][y].push(s);
            }
        }
        self.close_pair(&r, supports);
        r
    }

    fn unary(&mut self) -> Vec<Lit> {
        let edges: Vec<_> = self.edge_lits().collect();
        let reach = encode_founded_reachability(&mut self.f, self.g.num_nodes(), &edges, self.g.from());
        let bound = reached_from(self.g.num_nodes(), self.g.edges(), self.g.from());
        // give the anonymous reachability variables their names
        for (x, &l) in reach.iter().enumerate() {
            if !bound[x] {
                self.f.emit(&[!l]);
            }
            let named = self.f.atom(Atom::new("reachable", [self.g.name(x)])).pos();
            self.f.emit(&[!named, l]);
            self.f.emit(&[named, !l]);
        }
        reach
    }

    /// Endpoint, degree and reach-from-start constraints shared by the
    /// first three variants; `from_reach[y]` means "y is reachable from `from`".
    fn path_shape(&mut self, from_reach: &[Lit]) {
        let (from, to) = (self.g.from(), self.g.to());
        let n = self.g.num_nodes();
        let mut into = vec![Vec::new(); n];
        let mut out = vec![Vec::new(); n];
        for (x, y, e) in self.edge_lits().collect::<Vec<_>>() {
            if y == from || x == to {
                self.f.emit(&[!e]);
            }
            out[x].push(e);
            into[y].push(e);
            self.f.emit(&[!e, from_reach[y]]);
        }
        for lits in into.into_iter().chain(out) {
            add_cardinality(&mut self.f, &CardinalityConstraint::at_most(lits, 1));
        }
    }
}

/// Builds the CNF for one variant. Edge-on-path atoms exist only for graph
/// edges, so "path edges are graph edges" holds by construction.
pub fn encode_variant(g: &DiGraph, variant: Variant) -> Encoding {
    let start = Instant::now();
    let mut b = Builder::new(g);
    let from_reach = match variant {
        Variant::Join => b.join()[g.from()].clone(),
        Variant::Linear => b.linear()[g.from()].clone(),
        Variant::Unary | Variant::Relaxed => b.unary(),
    };
    b.f.emit(&[from_reach[g.to()]]);
    if variant != Variant::Relaxed {
        b.path_shape(&from_reach);
    }
    let stats = EncodingStats {
        variant,
        vars: b.f.num_vars(),
        clauses: b.f.num_clauses(),
        encode_ms: start.elapsed().as_secs_f64() * 1e3,
        solve_ms: 0.0,
    };
    Encoding {
        formula: b.f,
        objective: b.on_path,
        stats,
    }
}

pub fn solve_shortest_path(
    g: &DiGraph,
    variant: Variant,
    options: &MinimizeOptions,
) -> Result<PathResult, PathError> {
    if g.from() == g.to() {
        return Ok(PathResult {
            length: 0,
            edges: Vec::new(),
            optimal: true,
            stats: EncodingStats {
                variant,
                vars: 0,
                clauses: 0,
                encode_ms: 0.0,
                solve_ms: 0.0,
            },
        });
    }
    let mut enc = encode_variant(g, variant);
    let start = Instant::now();
    let min = minimize_cardinality(&enc.formula, &enc.objective, options).map_err(|e| match e {
        MinimizeError::NoModel => PathError::NoPath,
        MinimizeError::Timeout => PathError::Timeout,
    })?;
    enc.stats.solve_ms = start.elapsed().as_secs_f64() * 1e3;
    let chosen: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .zip(&enc.objective)
        .filter(|(_, &l)| min.model.lit(l))
        .map(|(&e, _)| e)
        .collect();
    Ok(PathResult {
        length: min.cost,
        edges: path_order(&chosen, g.from()).unwrap_or(chosen),
        optimal: min.optimal,
        stats: enc.stats,
    })
}

/// Orders an edge set as a walk from `start`, if it is one.
fn path_order(edges: &[(usize, usize)], start: usize) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(edges.len());
    let mut at = start;
    let mut left = edges.to_vec();
    while !left.is_empty() {
        let i = left.iter().position(|&(x, _)| x == at)?;
        let e = left.swap_remove(i);
        out.push(e);
        at = e.1;
    }
    Some(out)
}

/// Seed used by the benchmark when none is given.
pub const DEFAULT_BENCH_SEED: u64 = 1;

/// The benchmark graph for size `n`: a random graph of the given edge
/// density, reproducible from `(n, density, seed)` alone.
pub fn benchmark_graph(n: usize, density: f64, seed: u64) -> DiGraph {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    DiGraph::random(n, density, &mut rng)
}

pub fn bfs_oracle(g: &DiGraph) -> Option<usize> {
    let n = g.num_nodes();
    let mut succ = vec![Vec::new(); n];
    for &(x, y) in g.edges() {
        succ[x].push(y);
    }
    let mut dist = vec![usize::MAX; n];
    dist[g.from()] = 0;
    let mut queue = VecDeque::from([g.from()]);
    while let Some(x) = queue.pop_front() {
        for &y in &succ[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    (dist[g.to()] != usize::MAX).then_some(dist[g.to()])
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathViolation {
    #[error("({0},{1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("the target is not reached from the start")]
    TargetUnreached,
    #[error("({0},{1}) enters the start or leaves the target")]
    Endpoint(usize, usize),
    #[error("node {0} has more than one incoming or outgoing path edge")]
    Branching(usize),
    #[error("({0},{1}) ends at a node not reached from the start")]
    Detached(usize, usize),
}

/// Evaluates the path constraints directly on an edge set: path edges are
/// graph edges, `to` is reached, nothing enters `from` or leaves `to`,
/// degrees are at most one, and every edge ends at a node reached from `from`.
pub fn check_path_constraints(g: &DiGraph, edges: &[(usize, usize)]) -> Result<(), PathViolation> {
    let n = g.num_nodes();
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for &(x, y) in edges {
        if x >= n || y >= n || !g.has_edge(x, y) {
            return Err(PathViolation::NotAnEdge(x, y));
        }
        if y == g.from() || x == g.to() {
            return Err(PathViolation::Endpoint(x, y));
        }
        outdeg[x] += 1;
        indeg[y] += 1;
    }
    if let Some(x) = (0..n).find(|&x| indeg[x] > 1 || outdeg[x] > 1) {
        return Err(PathViolation::Branching(x));
    }
    let reached = reached_from(n, edges, g.from());
    if !reached[g.to()] {
        return Err(PathViolation::TargetUnreached);
    }
    if let Some(&(x, y)) = edges.iter().find(|&&(_, y)| !reached[y]) {
        return Err(PathViolation::Detached(x, y));
    }
    Ok(())
}

/// `closure[x][y]` iff a path of one or more edges leads from `x` to `y`.
fn transitive_closure(g: &DiGraph) -> Vec<Vec<bool>> {
    let n = g.num_nodes();
    (0..n)
        .map(|x| {
            let succ: Vec<(usize, usize)> = g.edges().iter().filter(|e| e.0 == x).copied().collect();
            let mut row = vec![false; n];
            for &(_, y) in &succ {
                for (z, hit) in reached_from(n, g.edges(), y).into_iter().enumerate() {
                    row[z] |= hit;
                }
            }
            row
        })
        .collect()
}

/// Nodes reachable from `start` over `edges`, including `start`.
pub fn reached_from(n: usize, edges: &[(usize, usize)], start: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            if a == x && !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen
}
