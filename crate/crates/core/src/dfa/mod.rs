//! Minimal DFA identification by coloring the states of the augmented
//! prefix tree acceptor (APTA) of a labeled sample.

mod io;

pub use io::{parse_abbadingo, to_dot, SampleFile};

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::encode::{exactly_one, minimize_cardinality, Atom, CnfFormula, MinimizeOptions};
use crate::sat::{Assignment, ClauseSink, Lit, SolveResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DfaError {
    #[error("string {0} is both positive and negative")]
    Overlap(String),
    #[error("symbol {0} is not in the alphabet")]
    UnknownSymbol(usize),
    #[error("no transition from state {state} on symbol {symbol}")]
    Incomplete { state: usize, symbol: usize },
    #[error("{0} colors cannot hold a clique of {1} pairwise conflicting states")]
    CliqueTooLarge(usize, usize),
    #[error("enumeration limited to 4 states over at most 2 symbols")]
    TooLarge,
    #[error("no consistent DFA with at most {0} states")]
    NotFoundWithin(usize),
    #[error("fixed colors admit no consistent coloring")]
    Infeasible,
    #[error("time budget exhausted")]
    Timeout,
}

/// Strings are sequences of symbol indices into `alphabet`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub alphabet: Vec<String>,
    pub positives: Vec<Vec<usize>>,
    pub negatives: Vec<Vec<usize>>,
}

impl Sample {
    pub fn new(alphabet: Vec<String>, positives: Vec<Vec<usize>>, negatives: Vec<Vec<usize>>) -> Result<Sample, DfaError> {
        let m = alphabet.len();
        if let Some(&s) = positives.iter().chain(&negatives).flatten().find(|&&s| s >= m) {
            return Err(DfaError::UnknownSymbol(s));
        }
        let pos: BTreeSet<&Vec<usize>> = positives.iter().collect();
        if let Some(w) = negatives.iter().find(|w| pos.contains(w)) {
            return Err(DfaError::Overlap(render(&alphabet, w)));
        }
        Ok(Sample {
            alphabet,
            positives,
            negatives,
        })
    }

    /// Character strings; the alphabet is the sorted set of characters used.
    pub fn from_strs(positives: &[&str], negatives: &[&str]) -> Result<Sample, DfaError> {
        let chars: BTreeSet<char> = positives.iter().chain(negatives).flat_map(|w| w.chars()).collect();
        let alphabet: Vec<char> = chars.into_iter().collect();
        let conv = |ws: &[&str]| -> Vec<Vec<usize>> {
            ws.iter()
                .map(|w| w.chars().map(|c| alphabet.binary_search(&c).expect("collected")).collect())
                .collect()
        };
        Sample::new(alphabet.iter().map(|c| c.to_string()).collect(), conv(positives), conv(negatives))
    }

    /// The small two-letter sample `a, abaa, bb` against `abb, b`.
    pub fn example() -> Sample {
        Sample::from_strs(&["a", "abaa", "bb"], &["abb", "b"]).expect("disjoint")
    }

    /// Up to `max_strings` distinct random strings over `symbols` symbols of
    /// length at most `max_len`, each labeled by a coin flip.
    pub fn random<R: rand::Rng>(symbols: usize, max_strings: usize, max_len: usize, rng: &mut R) -> Sample {
        let count = rng.gen_range(1..=max_strings);
        let mut seen = BTreeMap::new();
        for _ in 0..count {
            let len = rng.gen_range(0..=max_len);
            let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..symbols)).collect();
            let label = rng.gen_bool(0.5);
            seen.entry(w).or_insert(label);
        }
        let (pos, neg): (Vec<_>, Vec<_>) = seen.into_iter().partition(|(_, l)| *l);
        Sample::new(
            (0..symbols).map(|s| s.to_string()).collect(),
            pos.into_iter().map(|(w, _)| w).collect(),
            neg.into_iter().map(|(w, _)| w).collect(),
        )
        .expect("labels are unique per string")
    }

    pub fn render(&self, w: &[usize]) -> String {
        render(&self.alphabet, w)
    }
}

fn render(alphabet: &[String], w: &[usize]) -> String {
    if w.is_empty() {
        return "ε".to_string();
    }
    let sep = if alphabet.iter().all(|a| a.chars().count() == 1) { "" } else { " " };
    w.iter().map(|&s| alphabet[s].as_str()).collect::<Vec<_>>().join(sep)
}

/// The prefix tree of a sample; states are numbered breadth first, root 0,
/// children in symbol order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Apta {
    pub num_symbols: usize,
    pub trans: Vec<Vec<Option<usize>>>,
    pub parent: Vec<Option<(usize, usize)>>,
    pub accepting: Vec<bool>,
    pub rejecting: Vec<bool>,
    pub prefixes: Vec<Vec<usize>>,
}

impl Apta {
    pub fn len(&self) -> usize {
        self.trans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trans.is_empty()
    }

    pub fn state_of(&self, w: &[usize]) -> Option<usize> {
        w.iter().try_fold(0, |s, &l| self.trans[s].get(l).copied().flatten())
    }

    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.trans
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().enumerate().filter_map(move |(l, t)| t.map(|z| (x, l, z))))
    }
}

pub fn build_apta(sample: &Sample) -> Apta {
    let m = sample.alphabet.len();
    // insertion trie first, then breadth-first renumbering
    let mut trie: Vec<Vec<Option<usize>>> = vec![vec![None; m]];
    let mut end = vec![None::<bool>];
    for (w, label) in sample
        .positives
        .iter()
        .map(|w| (w, true))
        .chain(sample.negatives.iter().map(|w| (w, false)))
    {
        let mut s = 0;
        for &l in w {
            s = match trie[s][l] {
                Some(t) => t,
                None => {
                    trie.push(vec![None; m]);
                    end.push(None);
                    let t = trie.len() - 1;
                    trie[s][l] = Some(t);
                    t
                }
            };
        }
        end[s] = Some(label);
    }
    let mut order = Vec::with_capacity(trie.len());
    let mut rank = vec![0; trie.len()];
    let mut queue = VecDeque::from([0]);
    while let Some(s) = queue.pop_front() {
        rank[s] = order.len();
        order.push(s);
        queue.extend(trie[s].iter().flatten());
    }
    let n = order.len();
    let mut apta = Apta {
        num_symbols: m,
        trans: vec![vec![None; m]; n],
        parent: vec![None; n],
        accepting: vec![false; n],
        rejecting: vec![false; n],
        prefixes: vec![Vec::new(); n],
    };
    for (new, &old) in order.iter().enumerate() {
        apta.accepting[new] = end[old] == Some(true);
        apta.rejecting[new] = end[old] == Some(false);
        for l in 0..m {
            if let Some(t) = trie[old][l] {
                let t = rank[t];
                apta.trans[new][l] = Some(t);
                apta.parent[t] = Some((new, l));
                let mut p = apta.prefixes[new].clone();
                p.push(l);
                apta.prefixes[t] = p;
            }
        }
    }
    apta
}

/// Symmetric conflict matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflicts {
    matrix: Vec<Vec<bool>>,
}

impl Conflicts {
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.matrix[x][y]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.matrix.len();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.matrix[x][y])
            .collect()
    }

    pub fn len(&self) -> usize {
        self.pairs().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Accepting/rejecting pairs, propagated backwards: parents reached by
/// the same symbol inherit a conflict of their children.
pub fn compute_conflicts(apta: &Apta) -> Conflicts {
    let n = apta.len();
    let mut matrix = vec![vec![false; n]; n];
    let mut work = Vec::new();
    for x in (0..n).filter(|&x| apta.accepting[x]) {
        for y in (0..n).filter(|&y| apta.rejecting[y]) {
            work.push((x, y));
        }
    }
    while let Some((x, y)) = work.pop() {
        if matrix[x][y] {
            continue;
        }
        matrix[x][y] = true;
        matrix[y][x] = true;
        if let (Some((px, lx)), Some((py, ly))) = (apta.parent[x], apta.parent[y]) {
            if lx == ly && !matrix[px][py] {
                work.push((px, py));
            }
        }
    }
    Conflicts { matrix }
}

/// States in breadth-first order, each kept if it conflicts with all
/// states kept before it. States without any conflict are skipped.
pub fn greedy_clique(conflicts: &Conflicts, apta: &Apta) -> Vec<usize> {
    let n = apta.len();
    let mut clique: Vec<usize> = Vec::new();
    for x in (0..n).filter(|&x| (0..n).any(|y| conflicts.contains(x, y))) {
        if clique.iter().all(|&y| conflicts.contains(x, y)) {
            clique.push(x);
        }
    }
    clique
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    #[default]
    States,
    Transitions,
}

#[derive(Debug, Clone)]
pub struct ColoringEncoding {
    pub formula: CnfFormula,
    /// `color_of[x][i]`
    pub color_of: Vec<Vec<Lit>>,
    pub acc_color: Vec<Lit>,
    /// `color_trans[i][l][j]`
    pub color_trans: Vec<Vec<Vec<Lit>>>,
}

impl ColoringEncoding {
    pub fn transition_lits(&self) -> Vec<Lit> {
        self.color_trans.iter().flatten().flatten().copied().collect()
    }
}

/// Colorings of the APTA with `k` colors. `fixed` pins states to colors
/// (the clique gets colors `0..` in order).
pub fn encode_coloring(apta: &Apta, k: usize, fixed: &[(usize, usize)], redundant: bool) -> Result<ColoringEncoding, DfaError> {
    if let Some(&(_, c)) = fixed.iter().find(|&&(_, c)| c >= k) {
        return Err(DfaError::CliqueTooLarge(k, c + 1));
    }
    let n = apta.len();
    let m = apta.num_symbols;
    let mut f = CnfFormula::new();
    let color_of: Vec<Vec<Lit>> = (0..n)
        .map(|x| (0..k).map(|i| f.atom(Atom::new("colorOf", [x, i])).pos()).collect())
        .collect();
    let acc_color: Vec<Lit> = (0..k).map(|i| f.atom(Atom::new("accColor", [i])).pos()).collect();
    let color_trans: Vec<Vec<Vec<Lit>>> = (0..k)
        .map(|i| {
            (0..m)
                .map(|l| (0..k).map(|j| f.atom(Atom::new("colorTrans", [i, l, j])).pos()).collect())
                .collect()
        })
        .collect();
    for row in &color_of {
        exactly_one(&mut f, row);
    }
    for &(x, c) in fixed {
        f.emit(&[color_of[x][c]]);
    }
    // colorTrans is a partial function
    for targets in color_trans.iter().flatten() {
        for a in 0..k {
            for b in a + 1..k {
                f.emit(&[!targets[a], !targets[b]]);
            }
        }
    }
    for x in 0..n {
        for i in 0..k {
            if apta.accepting[x] {
                f.emit(&[!color_of[x][i], acc_color[i]]);
            }
            if apta.rejecting[x] {
                f.emit(&[!color_of[x][i], !acc_color[i]]);
            }
        }
    }
    for (x, l, z) in apta.transitions() {
        for i in 0..k {
            for j in 0..k {
                f.emit(&[!color_of[x][i], !color_of[z][j], color_trans[i][l][j]]);
                if redundant {
                    f.emit(&[!color_of[x][i], !color_trans[i][l][j], color_of[z][j]]);
                }
            }
        }
    }
    Ok(ColoringEncoding {
        formula: f,
        color_of,
        acc_color,
        color_trans,
    })
}

/// A DFA over colors; `trans[i][l]` may be missing until completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfa {
    pub alphabet: Vec<String>,
    pub start: usize,
    pub trans: Vec<Vec<Option<usize>>>,
    pub accepting: Vec<bool>,
}

impl Dfa {
    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.trans.iter().flatten().flatten().count()
    }

    pub fn is_complete(&self) -> bool {
        self.trans.iter().flatten().all(Option::is_some)
    }
}

/// Missing transitions go to a rejecting sink that loops on every symbol;
/// the sink is only added when something is missing.
pub fn complete_dfa(d: &Dfa) -> Dfa {
    if d.is_complete() {
        return d.clone();
    }
    let mut out = d.clone();
    let m = d.alphabet.len();
    let sink = d.num_states();
    for row in &mut out.trans {
        for t in row.iter_mut() {
            t.get_or_insert(sink);
        }
    }
    out.trans.push(vec![Some(sink); m]);
    out.accepting.push(false);
    out
}

pub fn run_dfa(d: &Dfa, w: &[usize]) -> Result<bool, DfaError> {
    let mut s = d.start;
    for &l in w {
        if l >= d.alphabet.len() {
            return Err(DfaError::UnknownSymbol(l));
        }
        s = d.trans[s][l].ok_or(DfaError::Incomplete { state: s, symbol: l })?;
    }
    Ok(d.accepting[s])
}

#[derive(Debug, Clone, Default)]
pub struct DfaOptions {
    pub redundant: bool,
    pub objective: Objective,
    pub seed: u64,
    pub deadline: Option<std::time::Instant>,
    /// Extra state/color pins; when given, clique pre-coloring is skipped.
    pub fixed: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KAttempt {
    pub k: usize,
    pub vars: usize,
    pub clauses: usize,
    pub sat: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LearnedDfa {
    pub dfa: Dfa,
    /// APTA state to DFA state.
    pub coloring: Vec<usize>,
    pub clique: Vec<usize>,
    pub attempts: Vec<KAttempt>,
}

fn decode(apta: &Apta, alphabet: &[String], enc: &ColoringEncoding, model: &Assignment) -> (Dfa, Vec<usize>) {
    let k = enc.acc_color.len();
    let coloring: Vec<usize> = enc
        .color_of
        .iter()
        .map(|row| row.iter().position(|&l| model.lit(l)).expect("one-hot"))
        .collect();
    let mut trans = vec![vec![None; apta.num_symbols]; k];
    for (x, l, z) in apta.transitions() {
        trans[coloring[x]][l] = Some(coloring[z]);
    }
    let dfa = Dfa {
        alphabet: alphabet.to_vec(),
        start: coloring[0],
        trans,
        accepting: enc.acc_color.iter().map(|&l| model.lit(l)).collect(),
    };
    (dfa, coloring)
}

/// Tries `k = |clique|, |clique| + 1, ...` until a coloring exists. Under
/// the transition objective the number of induced transitions is then
/// minimized at that `k`.
pub fn find_min_dfa(sample: &Sample, options: &DfaOptions) -> Result<LearnedDfa, DfaError> {
    let apta = build_apta(sample);
    let conflicts = compute_conflicts(&apta);
    let (clique, fixed) = if options.fixed.is_empty() {
        let clique = greedy_clique(&conflicts, &apta);
        let fixed: Vec<(usize, usize)> = clique.iter().enumerate().map(|(c, &x)| (x, c)).collect();
        (clique, fixed)
    } else {
        (Vec::new(), options.fixed.clone())
    };
    let start_k = clique.len().max(1).max(fixed.iter().map(|&(_, c)| c + 1).max().unwrap_or(1));
    let mut attempts = Vec::new();
    for k in start_k..=apta.len().max(start_k) {
        let enc = encode_coloring(&apta, k, &fixed, options.redundant)?;
        let mut solver = enc.formula.solver(options.seed);
        solver.set_deadline(options.deadline);
        let result = solver.solve(&[]).expect("allocated");
        attempts.push(KAttempt {
            k,
            vars: enc.formula.num_vars(),
            clauses: enc.formula.num_clauses(),
            sat: result.is_sat(),
        });
        let model = match result {
            SolveResult::Sat(m) => m,
            SolveResult::Unsat => continue,
            SolveResult::Unknown => return Err(DfaError::Timeout),
        };
        let model = match options.objective {
            Objective::States => model,
            Objective::Transitions => {
                let min = minimize_cardinality(
                    &enc.formula,
                    &enc.transition_lits(),
                    &MinimizeOptions {
                        seed: options.seed,
                        deadline: options.deadline,
                    },
                )
                .map_err(|_| DfaError::Timeout)?;
                min.model
            }
        };
        let (dfa, coloring) = decode(&apta, &sample.alphabet, &enc, &model);
        debug_assert!(consistent(&complete_dfa(&dfa), sample));
        return Ok(LearnedDfa {
            dfa,
            coloring,
            clique,
            attempts,
        });
    }
    Err(DfaError::Infeasible)
}

/// Every positive accepted and every negative rejected.
pub fn consistent(d: &Dfa, sample: &Sample) -> bool {
    sample.positives.iter().all(|w| run_dfa(d, w) == Ok(true))
        && sample.negatives.iter().all(|w| run_dfa(d, w) == Ok(false))
}

/// Smallest consistent DFA by enumerating transition functions with start
/// state 0 for `k = 1..=k_max`; a state set works iff no positive and
/// negative string end in the same state.
pub fn brute_force_min_dfa(sample: &Sample, k_max: usize) -> Result<usize, DfaError> {
    let m = sample.alphabet.len();
    if k_max > 4 || m > 2 {
        return Err(DfaError::TooLarge);
    }
    for k in 1..=k_max {
        let cells = k * m;
        let total = k.pow(cells as u32);
        let mut table = vec![0usize; cells];
        for mut code in 0..total {
            for cell in table.iter_mut() {
                *cell = code % k;
                code /= k;
            }
            let end = |w: &[usize]| w.iter().fold(0, |s, &l| table[s * m + l]);
            let mut accepting = vec![false; k];
            for w in &sample.positives {
                accepting[end(w)] = true;
            }
            if sample.negatives.iter().all(|w| !accepting[end(w)]) {
                return Ok(k);
            }
        }
    }
    Err(DfaError::NotFoundWithin(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn learn(s: &Sample, redundant: bool) -> LearnedDfa {
        find_min_dfa(
            s,
            &DfaOptions {
                redundant,
                ..DfaOptions::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn example_apta() {
        let s = Sample::example();
        let a = build_apta(&s);
        assert_eq!(a.len(), 8);
        let named = |w: &str| a.state_of(&w.chars().map(|c| (c as u8 - b'a') as usize).collect::<Vec<_>>()).unwrap();
        for w in ["a", "abaa", "bb"] {
            assert!(a.accepting[named(w)]);
        }
        for w in ["abb", "b"] {
            assert!(a.rejecting[named(w)]);
        }
        assert_eq!(a.accepting.iter().filter(|&&b| b).count(), 3);
        assert_eq!(a.rejecting.iter().filter(|&&b| b).count(), 2);
        // breadth-first numbering: ε, a, b, ab, bb, aba, abb, abaa
        assert_eq!(named(""), 0);
        assert_eq!(named("a"), 1);
        assert_eq!(named("b"), 2);
        assert_eq!(named("abaa"), 7);
    }

    #[test]
    fn tiny_aptas() {
        let eps = build_apta(&Sample::from_strs(&[""], &[]).unwrap());
        assert_eq!(eps.len(), 1);
        assert!(eps.accepting[0]);
        let chain = build_apta(&Sample::from_strs(&["aa"], &["a"]).unwrap());
        assert_eq!(chain.len(), 3);
        assert!(chain.rejecting[1] && chain.accepting[2] && !chain.accepting[0] && !chain.rejecting[0]);
        assert!(Sample::from_strs(&["a"], &["a"]).is_err());
    }

    #[test]
    fn conflicts_propagate_backwards() {
        let s = Sample::example();
        let a = build_apta(&s);
        let c = compute_conflicts(&a);
        let st = |w: &[usize]| a.state_of(w).unwrap();
        // ab and b: their b-successors abb (rejecting) and bb (accepting)
        assert!(c.contains(st(&[0, 1]), st(&[1])));
        assert!(c.contains(st(&[0]), st(&[1])));
        for x in 0..a.len() {
            assert!(!c.contains(x, x));
        }
        let none = build_apta(&Sample::from_strs(&["a", "ab"], &[]).unwrap());
        assert!(compute_conflicts(&none).is_empty());
    }

    #[test]
    fn clique_examples() {
        let a = build_apta(&Sample::example());
        let c = compute_conflicts(&a);
        let q = greedy_clique(&c, &a);
        assert!(q.len() >= 2);
        for (i, &x) in q.iter().enumerate() {
            for &y in &q[i + 1..] {
                assert!(c.contains(x, y));
            }
        }
        let none = build_apta(&Sample::from_strs(&["a"], &[]).unwrap());
        assert!(greedy_clique(&compute_conflicts(&none), &none).is_empty());
        let pair = build_apta(&Sample::from_strs(&["a"], &[""]).unwrap());
        assert_eq!(greedy_clique(&compute_conflicts(&pair), &pair).len(), 2);
    }

    #[test]
    fn one_color_cannot_split_verdicts() {
        let a = build_apta(&Sample::from_strs(&["a"], &[""]).unwrap());
        let enc = encode_coloring(&a, 1, &[], false).unwrap();
        assert!(!enc.formula.solver(0).solve(&[]).unwrap().is_sat());
        let single = build_apta(&Sample::from_strs(&[""], &[]).unwrap());
        let enc = encode_coloring(&single, 1, &[], true).unwrap();
        assert!(enc.formula.solver(0).solve(&[]).unwrap().is_sat());
        assert_eq!(encode_coloring(&a, 1, &[(0, 0), (1, 1)], false).unwrap_err(), DfaError::CliqueTooLarge(1, 2));
    }

    #[test]
    fn small_learning_examples() {
        let d = learn(&Sample::from_strs(&[""], &[]).unwrap(), false);
        assert_eq!(d.dfa.num_states(), 1);
        assert!(d.dfa.accepting[0]);
        let d = learn(&Sample::from_strs(&["a"], &[""]).unwrap(), true);
        assert_eq!(d.dfa.num_states(), 2);
    }

    #[test]
    fn example_matches_enumeration() {
        let s = Sample::example();
        let expected = brute_force_min_dfa(&s, 4).unwrap();
        for redundant in [false, true] {
            let d = learn(&s, redundant);
            assert_eq!(d.dfa.num_states(), expected);
            let full = complete_dfa(&d.dfa);
            assert!(consistent(&full, &s));
        }
    }

    #[test]
    fn completion() {
        let total = Dfa {
            alphabet: vec!["a".into()],
            start: 0,
            trans: vec![vec![Some(0)]],
            accepting: vec![true],
        };
        assert_eq!(complete_dfa(&total), total);
        let partial = Dfa {
            alphabet: vec!["a".into(), "b".into()],
            start: 0,
            trans: vec![vec![Some(0), None]],
            accepting: vec![true],
        };
        let full = complete_dfa(&partial);
        assert_eq!(full.num_states(), 2);
        assert_eq!(full.trans[0][1], Some(1));
        assert!(!full.accepting[1]);
        assert_eq!(run_dfa(&full, &[0, 0]), Ok(true));
        assert_eq!(run_dfa(&full, &[1, 0]), Ok(false));
        assert_eq!(run_dfa(&partial, &[1]), Err(DfaError::Incomplete { state: 0, symbol: 1 }));
        assert_eq!(run_dfa(&full, &[2]), Err(DfaError::UnknownSymbol(2)));
        assert_eq!(run_dfa(&full, &[]), Ok(true));
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(brute_force_min_dfa(&Sample::from_strs(&[""], &[]).unwrap(), 4), Ok(1));
        assert_eq!(brute_force_min_dfa(&Sample::from_strs(&["a"], &[""]).unwrap(), 4), Ok(2));
        assert_eq!(brute_force_min_dfa(&Sample::from_strs(&["a"], &[""]).unwrap(), 1), Err(DfaError::NotFoundWithin(1)));
    }
}
