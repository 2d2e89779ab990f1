//! Stemma consistency: can a partial assignment of variant readings to
//! manuscripts be completed so that every reading spreads from a single
//! source through copying?

mod io;
mod reduction;

pub use io::{parse_dot, parse_features};
pub use reduction::{reduce_sat_to_color_connected, Reduction};

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::encode::{
    add_cardinality, exactly_one, minimize_cardinality, tseitin_and, Atom, CardinalityConstraint,
    CnfFormula, FormulaSize, MinimizeOptions,
};
use crate::sat::{ClauseSink, Lit, SolveResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StemmaError {
    #[error("stemma has no manuscripts")]
    Empty,
    #[error("copying relation has a cycle through {0}")]
    Cycle(String),
    #[error("stemma must have exactly one root, found {0:?}")]
    Roots(Vec<String>),
    #[error("stemma is not connected: {0} cannot be reached from the root")]
    Disconnected(String),
    #[error("unknown manuscript {0}")]
    UnknownManuscript(String),
    #[error("feature assigns no readings")]
    EmptyFeature,
}

/// A connected DAG with a single root; edges are (parent, child) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stemma {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl Stemma {
    pub fn new(names: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Stemma, StemmaError> {
        let n = names.len();
        if n == 0 {
            return Err(StemmaError::Empty);
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut parents = vec![Vec::new(); n];
        let mut children = vec![Vec::new(); n];
        for &(p, c) in &edges {
            assert!(p < n && c < n, "edge endpoint out of range");
            parents[c].push(p);
            children[p].push(c);
        }
        let order = topological_order(&children, &parents)
            .map_err(|x| StemmaError::Cycle(names[x].clone()))?;
        let roots: Vec<usize> = (0..n).filter(|&x| parents[x].is_empty()).collect();
        if roots.len() != 1 {
            return Err(StemmaError::Roots(roots.iter().map(|&r| names[r].clone()).collect()));
        }
        let root = roots[0];
        debug_assert_eq!(order[0], root);
        // in a DAG with one root every node descends from it
        let seen = descendants_or_self(&children, root);
        if let Some(x) = (0..n).find(|&x| !seen[x]) {
            return Err(StemmaError::Disconnected(names[x].clone()));
        }
        Ok(Stemma {
            names,
            edges,
            parents,
            children,
            root,
        })
    }

    /// A random stemma over `n` manuscripts named `m0..`: each non-root
    /// node copies from one to three earlier nodes.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Stemma {
        assert!(n >= 1);
        let mut edges = Vec::new();
        for child in 1..n {
            let k = rng.gen_range(1..=child.min(3));
            for p in sample(rng, child, k) {
                edges.push((p, child));
            }
        }
        let names = (0..n).map(|i| format!("m{i}")).collect();
        Stemma::new(names, edges).expect("generated stemmata are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn parents(&self, x: usize) -> &[usize] {
        &self.parents[x]
    }

    pub fn children(&self, x: usize) -> &[usize] {
        &self.children[x]
    }

    pub fn root(&self) -> usize {
        self.root
    }
}

/// Kahn's algorithm; on a cycle returns a node on it.
fn topological_order(children: &[Vec<usize>], parents: &[Vec<usize>]) -> Result<Vec<usize>, usize> {
    let n = children.len();
    let mut indeg: Vec<usize> = parents.iter().map(Vec::len).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    ready.reverse();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop() {
        order.push(x);
        for &c in &children[x] {
            indeg[c] -= 1;
            if indeg[c] == 0 {
                ready.push(c);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).find(|&x| indeg[x] > 0).expect("some node is left on a cycle"))
    }
}

fn descendants_or_self(children: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; children.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &c in &children[x] {
            if !seen[c] {
                seen[c] = true;
                stack.push(c);
            }
        }
    }
    seen
}

/// Known readings of some manuscripts. `variants` lists the distinct
/// readings in sorted order; `readings` index into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feature {
    pub readings: Vec<Option<usize>>,
    pub variants: Vec<String>,
}

impl Feature {
    pub fn from_map(stemma: &Stemma, map: &BTreeMap<String, String>) -> Result<Feature, StemmaError> {
        let variants: Vec<String> = map.values().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let mut readings = vec![None; stemma.len()];
        for (m, v) in map {
            let x = stemma
                .index(m)
                .ok_or_else(|| StemmaError::UnknownManuscript(m.clone()))?;
            readings[x] = Some(variants.binary_search(v).expect("collected above"));
        }
        Ok(Feature { readings, variants })
    }

    /// Readings given as numbers; reading `i` is named `v{i}`. Numbers
    /// that never occur are dropped from the variant list.
    pub fn from_indices(readings: Vec<Option<usize>>) -> Feature {
        let used: Vec<usize> = readings.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
        Feature {
            readings: readings
                .iter()
                .map(|r| r.map(|i| used.binary_search(&i).expect("collected above")))
                .collect(),
            variants: used.iter().map(|i| format!("v{i}")).collect(),
        }
    }

    /// A random feature on `stemma`: each manuscript is extant with
    /// probability one half (at least one is), with one of `k` readings.
    pub fn random<R: Rng>(stemma: &Stemma, k: usize, rng: &mut R) -> Feature {
        let n = stemma.len();
        let forced = rng.gen_range(0..n);
        let readings = (0..n)
            .map(|x| (x == forced || rng.gen_bool(0.5)).then(|| rng.gen_range(0..k)))
            .collect();
        Feature::from_indices(readings)
    }

    /// Distinct readings actually assigned.
    pub fn used_variants(&self) -> usize {
        self.readings.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn to_map(&self, stemma: &Stemma) -> BTreeMap<String, String> {
        self.readings
            .iter()
            .enumerate()
            .filter_map(|(x, r)| r.map(|v| (stemma.name(x).to_string(), self.variants[v].clone())))
            .collect()
    }
}

/// A completed coloring plus the source manuscript of every variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Variant index per manuscript.
    pub coloring: Vec<usize>,
    /// Source manuscript per variant.
    pub sources: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Consistency {
    Consistent(Witness),
    Inconsistent,
}

impl Consistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Consistency::Consistent(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceMinimum {
    pub k_min: usize,
    pub size: FormulaSize,
    pub coloring: Vec<usize>,
    /// Manuscripts without a parent sharing their reading, ascending.
    pub sources: Vec<usize>,
}

fn check_feature(stemma: &Stemma, feature: &Feature) -> Result<(), StemmaError> {
    assert_eq!(feature.readings.len(), stemma.len(), "feature built for another stemma");
    if feature.readings.iter().all(Option::is_none) {
        return Err(StemmaError::EmptyFeature);
    }
    Ok(())
}

/// One-hot `reading(x,v)` variables, fixed where the feature is known.
fn reading_vars(f: &mut CnfFormula, stemma: &Stemma, feature: &Feature) -> Vec<Vec<Lit>> {
    let vars: Vec<Vec<Lit>> = (0..stemma.len())
        .map(|x| {
            feature
                .variants
                .iter()
                .map(|v| f.atom(Atom::new("reading", [stemma.name(x), v.as_str()])).pos())
                .collect()
        })
        .collect();
    for (x, row) in vars.iter().enumerate() {
        match feature.readings[x] {
            Some(v) => {
                for (w, &l) in row.iter().enumerate() {
                    f.emit(&[if w == v { l } else { !l }]);
                }
            }
            None => exactly_one(f, row),
        }
    }
    vars
}

fn decode_coloring(model: &crate::sat::Assignment, reading: &[Vec<Lit>]) -> Vec<usize> {
    reading
        .iter()
        .map(|row| row.iter().position(|&l| model.lit(l)).expect("one-hot"))
        .collect()
}

/// Every manuscript that is not the source of its reading must have a
/// parent with the same reading.
pub fn check_consistency(
    stemma: &Stemma,
    feature: &Feature,
    seed: u64,
) -> Result<Consistency, StemmaError> {
    check_consistency_sized(stemma, feature, seed).map(|(c, _)| c)
}

/// As [`check_consistency`], also reporting the size of the formula.
pub fn check_consistency_sized(
    stemma: &Stemma,
    feature: &Feature,
    seed: u64,
) -> Result<(Consistency, FormulaSize), StemmaError> {
    check_feature(stemma, feature)?;
    let mut f = CnfFormula::new();
    let reading = reading_vars(&mut f, stemma, feature);
    let n = stemma.len();
    let source: Vec<Vec<Lit>> = feature
        .variants
        .iter()
        .map(|v| {
            (0..n)
                .map(|x| f.atom(Atom::new("sourceOf", [v.as_str(), stemma.name(x)])).pos())
                .collect()
        })
        .collect();
    for (v, row) in source.iter().enumerate() {
        exactly_one(&mut f, row);
        for (x, &s) in row.iter().enumerate() {
            f.emit(&[!s, reading[x][v]]);
        }
    }
    for x in 0..n {
        for v in 0..feature.variants.len() {
            let mut clause = vec![!reading[x][v], source[v][x]];
            clause.extend(stemma.parents(x).iter().map(|&p| reading[p][v]));
            f.emit(&clause);
        }
    }
    let mut solver = f.solver(seed);
    let verdict = match solver.solve(&[]).expect("all literals allocated") {
        SolveResult::Sat(model) => {
            let coloring = decode_coloring(&model, &reading);
            let sources = source
                .iter()
                .map(|row| row.iter().position(|&l| model.lit(l)).expect("one-hot"))
                .collect();
            Consistency::Consistent(Witness { coloring, sources })
        }
        SolveResult::Unsat => Consistency::Inconsistent,
        SolveResult::Unknown => unreachable!("no deadline was set"),
    };
    Ok((verdict, f.size()))
}

/// Manuscripts whose reading no parent shares.
pub fn sources_of(stemma: &Stemma, coloring: &[usize]) -> Vec<usize> {
    (0..stemma.len())
        .filter(|&x| stemma.parents(x).iter().all(|&p| coloring[p] != coloring[x]))
        .collect()
}

/// Fewest sources over all completions of the feature.
pub fn minimize_sources(
    stemma: &Stemma,
    feature: &Feature,
    options: &MinimizeOptions,
) -> Result<SourceMinimum, StemmaError> {
    check_feature(stemma, feature)?;
    let mut f = CnfFormula::new();
    let reading = reading_vars(&mut f, stemma, feature);
    let n = stemma.len();
    let mut is_source = Vec::with_capacity(n);
    for x in 0..n {
        let shared: Vec<Lit> = stemma
            .parents(x)
            .iter()
            .flat_map(|&p| (0..feature.variants.len()).map(move |v| (p, v)))
            .map(|(p, v)| tseitin_and(&mut f, &[reading[x][v], reading[p][v]]).expect("two operands"))
            .collect();
        // IsSource(x) <-> no parent shares x's reading
        let s = f.atom(Atom::new("isSource", [stemma.name(x)])).pos();
        let mut clause = vec![s];
        clause.extend(&shared);
        f.emit(&clause);
        for &t in &shared {
            f.emit(&[!s, !t]);
        }
        is_source.push(s);
    }
    // every used variant has a topmost manuscript, hence a source
    add_cardinality(
        &mut f,
        &CardinalityConstraint::at_least(is_source.clone(), feature.used_variants()),
    );
    let min = minimize_cardinality(&f, &is_source, options)
        .expect("a completion always exists and no deadline cuts the first call");
    let coloring = decode_coloring(&min.model, &reading);
    let sources = sources_of(stemma, &coloring);
    debug_assert_eq!(sources.len(), min.cost);
    Ok(SourceMinimum {
        k_min: min.cost,
        size: f.size(),
        coloring,
        sources,
    })
}

/// Color-connectedness of a total coloring: every two nodes of one color
/// share a node from which monochrome paths reach both.
pub fn check_coloring(stemma: &Stemma, coloring: &[usize]) -> bool {
    let n = stemma.len();
    assert_eq!(coloring.len(), n);
    // monochrome ancestors of each node, itself included
    let ancestors: Vec<Vec<bool>> = (0..n)
        .map(|x| {
            let mut seen = vec![false; n];
            seen[x] = true;
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &p in stemma.parents(y) {
                    if coloring[p] == coloring[x] && !seen[p] {
                        seen[p] = true;
                        stack.push(p);
                    }
                }
            }
            seen
        })
        .collect();
    (0..n).all(|x| {
        (x + 1..n)
            .filter(|&y| coloring[x] == coloring[y])
            .all(|y| (0..n).any(|z| ancestors[x][z] && ancestors[y][z]))
    })
}

/// Pairs `(x, y)` joined by a copying path of two or more edges.
pub fn indirect_ancestors(stemma: &Stemma) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for x in 0..stemma.len() {
        for &c in stemma.children(x) {
            for &g in stemma.children(c) {
                for (y, hit) in descendants_or_self(&stemma.children, g).into_iter().enumerate() {
                    if hit {
                        out.insert((x, y));
                    }
                }
            }
        }
    }
    out
}
