use std::collections::BTreeMap;

use crate::sat::Cnf;

use super::{Feature, Stemma};

/// A partially colored stemma built from a CNF. Variant 0 is `black`
/// (true), variant 1 is `white` (false).
#[derive(Debug, Clone)]
pub struct Reduction {
    pub stemma: Stemma,
    pub feature: Feature,
    /// Node of each original variable, indexed by variable number minus one.
    pub var_nodes: Vec<usize>,
}

impl Reduction {
    /// Reads the truth assignment of the original variables off a coloring.
    pub fn assignment(&self, coloring: &[usize]) -> Vec<bool> {
        self.var_nodes.iter().map(|&x| coloring[x] == 0).collect()
    }
}

const BLACK: usize = 0;
const WHITE: usize = 1;

/// Builds a color-connectedness instance that is completable exactly when
/// `cnf` is satisfiable.
///
/// Mixed clauses first lose their negative literals: `¬x` becomes a fresh
/// `notx`, tied to `x` by `x ∨ notx` and `¬x ∨ ¬notx`. Then every positive
/// clause gets a black node `a_i` below its variables and every negative
/// clause a white node `b_i`; `r → a`, `r → b` and `a`, `b` feed every
/// variable node. An empty clause becomes a black node below `b` only,
/// which no completion can connect.
pub fn reduce_sat_to_color_connected(cnf: &Cnf) -> Reduction {
    let n = cnf.num_vars() as usize;
    let mut names: Vec<String> = vec!["r".into(), "a".into(), "b".into()];
    let var_nodes: Vec<usize> = (1..=n)
        .map(|v| {
            names.push(format!("x{v}"));
            names.len() - 1
        })
        .collect();
    let mut negations: BTreeMap<usize, usize> = BTreeMap::new();
    let mut positive: Vec<Vec<usize>> = Vec::new();
    let mut negative: Vec<Vec<usize>> = Vec::new();

    for clause in cnf.clauses() {
        let node = |l: &crate::sat::Lit| var_nodes[l.var().get() as usize - 1];
        if clause.iter().all(|l| l.is_positive()) {
            positive.push(clause.iter().map(node).collect());
        } else if clause.iter().all(|l| !l.is_positive()) {
            negative.push(clause.iter().map(node).collect());
        } else {
            let mut lifted = Vec::with_capacity(clause.len());
            for l in clause {
                let x = node(l);
                if l.is_positive() {
                    lifted.push(x);
                    continue;
                }
                let nx = *negations.entry(x).or_insert_with(|| {
                    names.push(format!("not{}", names[x]));
                    let nx = names.len() - 1;
                    positive.push(vec![x, nx]);
                    negative.push(vec![x, nx]);
                    nx
                });
                lifted.push(nx);
            }
            positive.push(lifted);
        }
    }

    let num_vars = names.len() - 3;
    let mut edges = vec![(0, 1), (0, 2)];
    for x in 3..3 + num_vars {
        edges.push((1, x));
        edges.push((2, x));
    }
    let mut colors: Vec<Option<usize>> = vec![Some(BLACK), Some(BLACK), Some(WHITE)];
    colors.resize(names.len(), None);
    for (i, clause) in positive.iter().enumerate() {
        names.push(format!("a{}", i + 1));
        colors.push(Some(BLACK));
        let ai = names.len() - 1;
        if clause.is_empty() {
            edges.push((2, ai));
        }
        edges.extend(clause.iter().map(|&x| (x, ai)));
    }
    for (i, clause) in negative.iter().enumerate() {
        names.push(format!("b{}", i + 1));
        colors.push(Some(WHITE));
        let bi = names.len() - 1;
        edges.extend(clause.iter().map(|&x| (x, bi)));
    }

    let stemma = Stemma::new(names, edges).expect("reduction output is a rooted DAG");
    let feature = Feature {
        readings: colors,
        variants: vec!["black".into(), "white".into()],
    };
    Reduction {
        stemma,
        feature,
        var_nodes,
    }
}
