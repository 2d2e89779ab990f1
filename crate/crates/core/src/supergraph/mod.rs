//! Minimum common supergraphs of partially labeled graphs: every graph has
//! `n` vertices, some carrying one of `n` global names; completing each
//! labeling to a bijection maps all edges onto name pairs, and the union of
//! those pairs should be as small as possible.

mod io;

pub use io::{parse_instance, write_instance};

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::encode::{
    add_cardinality, exactly_one, minimize_cardinality, Atom, CardinalityConstraint, CnfFormula,
    FormulaSize, MinimizeError, MinimizeOptions,
};
use crate::sat::{ClauseSink, Lit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McsError {
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("time budget exhausted before any supergraph was found")]
    Timeout,
    #[error("too many unlabeled vertices for enumeration ({0} in one graph, at most 6)")]
    TooLarge(usize),
}

/// Edges are stored as `(u, v)` with `u < v`; `labels[v]` is a name index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialGraph {
    pub edges: Vec<(usize, usize)>,
    pub labels: Vec<Option<usize>>,
}

impl PartialGraph {
    pub fn new(n: usize, edges: &[(usize, usize)], labels: Vec<Option<usize>>) -> Result<PartialGraph, McsError> {
        if labels.len() != n {
            return Err(McsError::Invalid(format!("{} labels for {n} vertices", labels.len())));
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(McsError::Invalid(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(McsError::Invalid(format!("self-loop on vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut seen = vec![false; n];
        for l in labels.iter().flatten() {
            if *l >= n {
                return Err(McsError::Invalid(format!("name index {l} out of range")));
            }
            if std::mem::replace(&mut seen[*l], true) {
                return Err(McsError::Invalid(format!("name index {l} used twice in one graph")));
            }
        }
        Ok(PartialGraph {
            edges: set.into_iter().collect(),
            labels,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// A graph over names with every vertex labeled by itself.
    pub fn from_supergraph(sg: &Supergraph, n: usize) -> PartialGraph {
        PartialGraph {
            edges: sg.arcs.iter().copied().collect(),
            labels: (0..n).map(Some).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub names: Vec<String>,
    pub graphs: Vec<PartialGraph>,
}

impl Instance {
    pub fn new(names: Vec<String>, graphs: Vec<PartialGraph>) -> Result<Instance, McsError> {
        let n = names.len();
        if names.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(McsError::Invalid("duplicate names".into()));
        }
        if let Some(g) = graphs.iter().find(|g| g.num_vertices() != n) {
            return Err(McsError::Invalid(format!(
                "graph has {} vertices but there are {n} names",
                g.num_vertices()
            )));
        }
        Ok(Instance { names, graphs })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    /// The two seven-vertex trees of the running example: a path
    /// 1-p-q-3 with a branch 4-r-2 hanging from p in one tree and from q
    /// in the other. Vertices 0..=3 carry names 1..=4; p, q, r are 4, 5, 6.
    pub fn example() -> Instance {
        let names = ["1", "2", "3", "4", "5", "6", "7"].iter().map(|s| s.to_string()).collect();
        let labels = || vec![Some(0), Some(1), Some(2), Some(3), None, None, None];
        let (p, q, r) = (4, 5, 6);
        let t1 = [(0, p), (p, q), (q, 2), (p, 3), (3, r), (r, 1)];
        let t2 = [(0, p), (p, q), (q, 2), (q, 3), (3, r), (r, 1)];
        let graphs = vec![
            PartialGraph::new(7, &t1, labels()).unwrap(),
            PartialGraph::new(7, &t2, labels()).unwrap(),
        ];
        Instance::new(names, graphs).unwrap()
    }

    /// `trees` random trees on `n` vertices; names `0..labeled` are placed
    /// on random vertices of each tree.
    pub fn random_trees<R: Rng>(trees: usize, n: usize, labeled: usize, rng: &mut R) -> Instance {
        assert!(labeled <= n && n >= 1);
        let graphs = (0..trees)
            .map(|_| {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(rng);
                let edges: Vec<(usize, usize)> = (1..n)
                    .map(|i| (order[rng.gen_range(0..i)], order[i]))
                    .collect();
                order.shuffle(rng);
                let mut labels = vec![None; n];
                for (name, &v) in order.iter().take(labeled).enumerate() {
                    labels[v] = Some(name);
                }
                PartialGraph::new(n, &edges, labels).expect("generated graphs are valid")
            })
            .collect();
        Instance::new((0..n).map(|i| format!("n{i}")).collect(), graphs).expect("valid")
    }
}

/// Arcs over name indices, each stored once as `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Supergraph {
    pub arcs: BTreeSet<(usize, usize)>,
}

impl Supergraph {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Union of the edge images under `family`.
    pub fn induced(graphs: &[PartialGraph], family: &[Vec<usize>]) -> Supergraph {
        let mut arcs = BTreeSet::new();
        for (g, lab) in graphs.iter().zip(family) {
            for &(u, v) in &g.edges {
                let (a, b) = (lab[u], lab[v]);
                arcs.insert((a.min(b), a.max(b)));
            }
        }
        Supergraph { arcs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McsResult {
    pub supergraph: Supergraph,
    /// Per graph, the name of every vertex.
    pub family: Vec<Vec<usize>>,
    /// `false` when a time budget cut the search short.
    pub optimal: bool,
    /// Summed over every formula solved.
    pub size: FormulaSize,
}

/// Arcs equal the induced union and every labeling is a bijection that
/// extends the given partial labels.
pub fn verify_supergraph(graphs: &[PartialGraph], family: &[Vec<usize>], sg: &Supergraph) -> bool {
    if graphs.len() != family.len() {
        return false;
    }
    for (g, lab) in graphs.iter().zip(family) {
        let n = g.num_vertices();
        if lab.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &a in lab {
            if a >= n || std::mem::replace(&mut seen[a], true) {
                return false;
            }
        }
        if g.labels.iter().zip(lab).any(|(l, &a)| l.is_some_and(|l| l != a)) {
            return false;
        }
    }
    Supergraph::induced(graphs, family) == *sg
}

/// Exact minimum over all labeling families, by cardinality minimization
/// over the arc atoms.
pub fn exact_mcs(inst: &Instance, options: &MinimizeOptions) -> Result<McsResult, McsError> {
    let (formula, labels, arcs) = encode_mcs(inst);
    let objective: Vec<Lit> = arcs.iter().map(|&(_, _, l)| l).collect();
    let min = match minimize_cardinality(&formula, &objective, options) {
        Ok(m) => m,
        Err(MinimizeError::Timeout) => return Err(McsError::Timeout),
        Err(MinimizeError::NoModel) => unreachable!("identity completions always exist"),
    };
    let family: Vec<Vec<usize>> = labels
        .iter()
        .map(|per_vertex| {
            per_vertex
                .iter()
                .map(|row| row.iter().position(|&l| min.model.lit(l)).expect("one name per vertex"))
                .collect()
        })
        .collect();
    let supergraph = Supergraph::induced(&inst.graphs, &family);
    debug_assert_eq!(supergraph.len(), min.cost);
    Ok(McsResult {
        supergraph,
        family,
        optimal: min.optimal,
        size: formula.size(),
    })
}

type LabelVars = Vec<Vec<Vec<Lit>>>;

/// Label variables `label(t,x,a)` with both bijection directions as
/// exactly-one constraints, and `arc(a,b)` for `a < b` defined by the
/// flattened rule: `label(t,x)=a & label(t,y)=b & edge(t,x,y) -> arc(a,b)`
/// in both edge orientations, plus the converse through one support atom
/// per rule instance.
pub fn encode_mcs(inst: &Instance) -> (CnfFormula, LabelVars, Vec<(usize, usize, Lit)>) {
    let n = inst.n();
    let mut f = CnfFormula::new();
    let labels: LabelVars = inst
        .graphs
        .iter()
        .enumerate()
        .map(|(t, _)| {
            (0..n)
                .map(|x| {
                    (0..n)
                        .map(|a| f.atom(Atom::new("label", [t.to_string(), x.to_string(), inst.names[a].clone()])).pos())
                        .collect()
                })
                .collect()
        })
        .collect();
    for (t, g) in inst.graphs.iter().enumerate() {
        let lab = &labels[t];
        for x in 0..n {
            match g.labels[x] {
                Some(a) => f.emit(&[lab[x][a]]),
                None => exactly_one(&mut f, &lab[x]),
            }
        }
        for a in 0..n {
            let column: Vec<Lit> = (0..n).map(|x| lab[x][a]).collect();
            exactly_one(&mut f, &column);
        }
    }
    let mut arcs = Vec::new();
    let mut arc_of = vec![vec![None; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let l = f.atom(Atom::new("arc", [inst.names[a].as_str(), inst.names[b].as_str()])).pos();
            arc_of[a][b] = Some(l);
            arcs.push((a, b, l));
        }
    }
    let mut supports: Vec<Vec<Vec<Lit>>> = vec![vec![Vec::new(); n]; n];
    for (t, g) in inst.graphs.iter().enumerate() {
        let lab = &labels[t];
        for &(u, v) in &g.edges {
            for (x, y) in [(u, v), (v, u)] {
                for a in 0..n {
                    for b in a + 1..n {
                        let arc = arc_of[a][b].expect("a < b");
                        f.emit(&[!lab[x][a], !lab[y][b], arc]);
                        let s = f.new_var().pos();
                        f.emit(&[!s, lab[x][a]]);
                        f.emit(&[!s, lab[y][b]]);
                        supports[a][b].push(s);
                    }
                }
            }
        }
    }
    for &(a, b, arc) in &arcs {
        let mut clause = vec![!arc];
        clause.extend(&supports[a][b]);
        f.emit(&clause);
    }
    // every labeling maps E_i injectively into the arcs
    let lower = inst.graphs.iter().map(|g| g.edges.len()).max().unwrap_or(0);
    let objective: Vec<Lit> = arcs.iter().map(|&(_, _, l)| l).collect();
    add_cardinality(&mut f, &CardinalityConstraint::at_least(objective, lower));
    (f, labels, arcs)
}

/// Pairwise merging: solve every pair exactly, keep the smallest result,
/// then fold in the remaining graph whose merge is smallest until none is
/// left. Ties go to the lowest indices.
pub fn greedy_mcs(inst: &Instance, options: &MinimizeOptions) -> Result<McsResult, McsError> {
    let t = inst.graphs.len();
    if t < 2 {
        return exact_mcs(inst, options);
    }
    let n = inst.n();
    let sub = |graphs: Vec<PartialGraph>| {
        exact_mcs(&Instance { names: inst.names.clone(), graphs }, options)
    };
    let mut optimal = true;
    let mut size = FormulaSize::default();
    let mut best: Option<(usize, usize, McsResult)> = None;
    for i in 0..t {
        for j in i + 1..t {
            let r = sub(vec![inst.graphs[i].clone(), inst.graphs[j].clone()])?;
            size += r.size;
            if best.as_ref().map_or(true, |(_, _, b)| r.supergraph.len() < b.supergraph.len()) {
                best = Some((i, j, r));
            }
        }
    }
    let (i, j, first) = best.expect("at least one pair");
    optimal &= first.optimal;
    let mut family: Vec<Option<Vec<usize>>> = vec![None; t];
    family[i] = Some(first.family[0].clone());
    family[j] = Some(first.family[1].clone());
    let mut current = first.supergraph;
    let mut remaining: Vec<usize> = (0..t).filter(|&k| k != i && k != j).collect();
    while !remaining.is_empty() {
        let base = PartialGraph::from_supergraph(&current, n);
        let mut pick: Option<(usize, McsResult)> = None;
        for (pos, &k) in remaining.iter().enumerate() {
            let r = sub(vec![base.clone(), inst.graphs[k].clone()])?;
            size += r.size;
            if pick.as_ref().map_or(true, |(_, b)| r.supergraph.len() < b.supergraph.len()) {
                pick = Some((pos, r));
            }
        }
        let (pos, r) = pick.expect("remaining is not empty");
        let k = remaining.remove(pos);
        optimal &= r.optimal;
        family[k] = Some(r.family[1].clone());
        current = r.supergraph;
    }
    let family: Vec<Vec<usize>> = family.into_iter().map(|f| f.expect("every graph merged")).collect();
    debug_assert!(verify_supergraph(&inst.graphs, &family, &current));
    // the greedy result is never claimed optimal for three or more graphs
    Ok(McsResult {
        supergraph: current,
        family,
        optimal: optimal && t == 2,
        size,
    })
}

/// Branch and bound over all completions of the labelings, graph by graph.
pub fn brute_force_mcs(inst: &Instance) -> Result<usize, McsError> {
    brute_force_mcs_until(inst, None)
}

pub fn brute_force_mcs_until(inst: &Instance, deadline: Option<Instant>) -> Result<usize, McsError> {
    let n = inst.n();
    for g in &inst.graphs {
        let open = g.labels.iter().filter(|l| l.is_none()).count();
        if open > 6 {
            return Err(McsError::TooLarge(open));
        }
    }
    let completions: Vec<Vec<Vec<usize>>> = inst.graphs.iter().map(|g| completions(g, n)).collect();
    let mut best = usize::MAX;
    let mut arcs = BTreeSet::new();
    let mut timed_out = false;
    search(inst, &completions, 0, &mut arcs, &mut best, deadline, &mut timed_out);
    if timed_out {
        return Err(McsError::Timeout);
    }
    Ok(if inst.graphs.is_empty() { 0 } else { best })
}

fn completions(g: &PartialGraph, n: usize) -> Vec<Vec<usize>> {
    let used: BTreeSet<usize> = g.labels.iter().flatten().copied().collect();
    let free_names: Vec<usize> = (0..n).filter(|a| !used.contains(a)).collect();
    let open: Vec<usize> = (0..n).filter(|&v| g.labels[v].is_none()).collect();
    let mut out = Vec::new();
    let mut perm = free_names.clone();
    permute(&mut perm, 0, &mut |p| {
        let mut lab: Vec<usize> = g.labels.iter().map(|l| l.unwrap_or(usize::MAX)).collect();
        for (&v, &a) in open.iter().zip(p) {
            lab[v] = a;
        }
        out.push(lab);
    });
    out
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn search(
    inst: &Instance,
    completions: &[Vec<Vec<usize>>],
    depth: usize,
    arcs: &mut BTreeSet<(usize, usize)>,
    best: &mut usize,
    deadline: Option<Instant>,
    timed_out: &mut bool,
) {
    if depth == inst.graphs.len() {
        *best = (*best).min(arcs.len());
        return;
    }
    if deadline.is_some_and(|d| Instant::now() >= d) {
        *timed_out = true;
        return;
    }
    let g = &inst.graphs[depth];
    for lab in &completions[depth] {
        let mut added = Vec::new();
        for &(u, v) in &g.edges {
            let arc = (lab[u].min(lab[v]), lab[u].max(lab[v]));
            if arcs.insert(arc) {
                added.push(arc);
            }
        }
        if arcs.len() < *best {
            search(inst, completions, depth + 1, arcs, best, deadline, timed_out);
        }
        for a in added {
            arcs.remove(&a);
        }
        if *timed_out {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> MinimizeOptions {
        MinimizeOptions::default()
    }

    #[test]
    fn example_has_seven_arcs() {
        let inst = Instance::example();
        let r = exact_mcs(&inst, &opts()).unwrap();
        assert_eq!(r.supergraph.len(), 7);
        assert!(r.optimal);
        assert!(verify_supergraph(&inst.graphs, &r.family, &r.supergraph));
        assert_eq!(brute_force_mcs(&inst).unwrap(), 7);
        let (f, _, _) = encode_mcs(&inst);
        assert!(f.num_clauses() < 20_000, "{} clauses", f.num_clauses());
    }

    #[test]
    fn fully_labeled_graph_is_its_own_image() {
        let g = PartialGraph::new(4, &[(0, 1), (1, 2), (1, 3)], (0..4).map(Some).collect()).unwrap();
        let inst = Instance::new((0..4).map(|i| i.to_string()).collect(), vec![g.clone()]).unwrap();
        let r = exact_mcs(&inst, &opts()).unwrap();
        assert_eq!(r.supergraph.arcs, g.edges.iter().copied().collect());
        assert_eq!(brute_force_mcs(&inst).unwrap(), 3);
    }

    #[test]
    fn verifier_rejects_extra_arcs_and_bad_labelings() {
        let inst = Instance::example();
        let r = exact_mcs(&inst, &opts()).unwrap();
        let mut extra = r.supergraph.clone();
        let missing = (0..7)
            .flat_map(|a| (a + 1..7).map(move |b| (a, b)))
            .find(|p| !extra.arcs.contains(p))
            .unwrap();
        extra.arcs.insert(missing);
        assert!(!verify_supergraph(&inst.graphs, &r.family, &extra));
        let mut relabeled = r.family.clone();
        relabeled[0].swap(0, 4);
        assert!(!verify_supergraph(&inst.graphs, &relabeled, &r.supergraph));
        // swapping two unlabeled vertices with different neighborhoods
        let mut swapped = r.family.clone();
        swapped[0].swap(4, 6);
        let induced = Supergraph::induced(&inst.graphs, &swapped);
        assert_eq!(verify_supergraph(&inst.graphs, &swapped, &r.supergraph), induced == r.supergraph);
    }

    #[test]
    fn greedy_on_two_graphs_equals_exact() {
        let inst = Instance::example();
        let g = greedy_mcs(&inst, &opts()).unwrap();
        let e = exact_mcs(&inst, &opts()).unwrap();
        assert_eq!(g.supergraph.len(), e.supergraph.len());
        assert!(g.optimal);
    }

    #[test]
    fn greedy_on_copies_of_one_tree() {
        let g = PartialGraph::new(5, &[(0, 1), (1, 2), (2, 3), (2, 4)], (0..5).map(Some).collect()).unwrap();
        let inst = Instance::new((0..5).map(|i| i.to_string()).collect(), vec![g.clone(), g.clone(), g]).unwrap();
        let r = greedy_mcs(&inst, &opts()).unwrap();
        assert_eq!(r.supergraph.len(), 4);
        assert!(verify_supergraph(&inst.graphs, &r.family, &r.supergraph));
    }

    #[test]
    fn single_graph_with_two_open_vertices() {
        // path 0-1-2 with names fixed on 0 and 1; the other two vertices
        // are isolated or at the end, so both completions give 2 arcs
        let g = PartialGraph::new(4, &[(0, 1), (1, 2)], vec![Some(0), Some(1), None, None]).unwrap();
        let inst = Instance::new((0..4).map(|i| i.to_string()).collect(), vec![g]).unwrap();
        assert_eq!(brute_force_mcs(&inst).unwrap(), 2);
        assert_eq!(exact_mcs(&inst, &opts()).unwrap().supergraph.len(), 2);
    }

    #[test]
    fn invalid_graphs() {
        assert!(PartialGraph::new(3, &[(0, 0)], vec![None; 3]).is_err());
        assert!(PartialGraph::new(3, &[(0, 5)], vec![None; 3]).is_err());
        assert!(PartialGraph::new(3, &[], vec![Some(1), Some(1), None]).is_err());
        let g = PartialGraph::new(2, &[], vec![None; 2]).unwrap();
        assert!(Instance::new(vec!["a".into()], vec![g]).is_err());
    }

    #[test]
    fn too_large_for_enumeration() {
        let g = PartialGraph::new(7, &[], vec![None; 7]).unwrap();
        let inst = Instance::new((0..7).map(|i| i.to_string()).collect(), vec![g]).unwrap();
        assert_eq!(brute_force_mcs(&inst), Err(McsError::TooLarge(7)));
    }
}
