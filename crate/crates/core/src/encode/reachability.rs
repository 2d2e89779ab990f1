use crate::sat::{Assignment, ClauseSink, Lit};

/// Bits needed to represent the levels `0..=max_level`, at least one.
pub fn level_width(max_level: usize) -> usize {
    let mut width = 1;
    while (1usize << width) <= max_level {
        width += 1;
    }
    width
}

/// An unsigned integer in binary, most significant bit first.
#[derive(Debug, Clone)]
pub struct Level {
    bits: Vec<Lit>,
}

impl Level {
    pub fn new<S: ClauseSink>(sink: &mut S, width: usize) -> Level {
        assert!(width >= 1);
        Level {
            bits: (0..width).map(|_| sink.fresh_var().pos()).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[Lit] {
        &self.bits
    }

    pub fn value(&self, model: &Assignment) -> usize {
        self.bits
            .iter()
            .fold(0, |acc, &b| (acc << 1) | model.lit(b) as usize)
    }
}

/// Emits `guard → a < b`.
///
/// Walks from the most significant bit with a chain of "still tied above"
/// literals: while tied, `a`'s bit may not exceed `b`'s; a tie on the last
/// bit is forbidden.
pub fn require_less<S: ClauseSink>(sink: &mut S, guard: Lit, a: &Level, b: &Level) {
    assert_eq!(a.width(), b.width());
    let w = a.width();
    let mut tied = guard;
    for k in 0..w {
        let (x, y) = (a.bits[k], b.bits[k]);
        if k + 1 == w {
            sink.emit(&[!tied, !x]);
            sink.emit(&[!tied, y]);
        } else {
            sink.emit(&[!tied, !x, y]);
            let next = sink.fresh_var().pos();
            sink.emit(&[!tied, !x, !y, next]);
            sink.emit(&[!tied, x, y, next]);
            tied = next;
        }
    }
}

/// An integer in `0..=max` in order encoding: `ge[k - 1]` is "value >= k".
#[derive(Debug, Clone)]
pub struct OrderLevel {
    ge: Vec<Lit>,
}

impl OrderLevel {
    pub fn new<S: ClauseSink>(sink: &mut S, max: usize) -> OrderLevel {
        assert!(max >= 1);
        let ge: Vec<Lit> = (0..max).map(|_| sink.fresh_var().pos()).collect();
        for k in 1..max {
            sink.emit(&[!ge[k], ge[k - 1]]);
        }
        OrderLevel { ge }
    }

    pub fn max(&self) -> usize {
        self.ge.len()
    }

    pub fn value(&self, model: &Assignment) -> usize {
        self.ge.iter().take_while(|&&l| model.lit(l)).count()
    }

    /// Emits `guard → a < b`; one clause per level.
    pub fn require_less<S: ClauseSink>(sink: &mut S, guard: Lit, a: &OrderLevel, b: &OrderLevel) {
        assert_eq!(a.max(), b.max());
        let m = a.max();
        sink.emit(&[!guard, b.ge[0]]);
        for k in 1..m {
            sink.emit(&[!guard, !a.ge[k - 1], b.ge[k]]);
        }
        sink.emit(&[!guard, !a.ge[m - 1]]);
    }
}

/// Encodes `reachable(root)` and `reachable(y) <- edge(x,y) & reachable(x)`
/// under least-fixpoint semantics over `num_nodes` nodes. Each edge carries
/// the literal that selects it.
///
/// Besides the rule itself, every reachable non-root node must have a
/// selected incoming edge from a reachable node on a strictly lower level,
/// so self-supporting cycles cannot be true. Levels are binary of width
/// `level_width(num_nodes)`; breadth-first distances always fit.
pub fn encode_founded_reachability<S: ClauseSink>(
    sink: &mut S,
    num_nodes: usize,
    edges: &[(usize, usize, Lit)],
    root: usize,
) -> Vec<Lit> {
    assert!(root < num_nodes);
    let reach: Vec<Lit> = (0..num_nodes).map(|_| sink.fresh_var().pos()).collect();
    sink.emit(&[reach[root]]);
    let width = level_width(num_nodes);
    let levels: Vec<Level> = (0..num_nodes).map(|_| Level::new(sink, width)).collect();
    let mut supports: Vec<Vec<Lit>> = vec![Vec::new(); num_nodes];
    for &(x, y, selected) in edges {
        sink.emit(&[!selected, !reach[x], reach[y]]);
        if y == root || x == y {
            continue;
        }
        let s = sink.fresh_var().pos();
        sink.emit(&[!s, selected]);
        sink.emit(&[!s, reach[x]]);
        require_less(sink, s, &levels[x], &levels[y]);
        supports[y].push(s);
    }
    for y in (0..num_nodes).filter(|&y| y != root) {
        let mut clause = vec![!reach[y]];
        clause.extend_from_slice(&supports[y]);
        sink.emit(&clause);
    }
    reach
}
