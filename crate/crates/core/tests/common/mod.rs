//! Brute-force oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls the SAT solver.
#![allow(dead_code)]

use modex::sat::{Cnf, Lit, Var};
use modex::stemma::{Feature, Stemma};
use rand::Rng;

/// A random CNF with clauses of width 1..=3 over `vars` variables.
pub fn random_cnf<R: Rng>(rng: &mut R, vars: u32, clauses: usize) -> Cnf {
    let mut cnf = Cnf::with_vars(vars);
    for _ in 0..clauses {
        let width = rng.gen_range(1..=3.min(vars as usize));
        let lits: Vec<Lit> = (0..width)
            .map(|_| Lit::new(Var::new(rng.gen_range(1..=vars)), rng.gen_bool(0.5)))
            .collect();
        cnf.add_clause(&lits).unwrap();
    }
    cnf
}

pub fn truth_table_sat(cnf: &Cnf) -> bool {
    let n = cnf.num_vars();
    (0u64..1 << n).any(|bits| {
        cnf.clauses().iter().all(|c| {
            c.iter()
                .any(|l| (bits >> (l.var().get() - 1) & 1 == 1) == l.is_positive())
        })
    })
}

/// Calls `visit` on every total coloring over `k` colors that extends the
/// partial `readings`; stops early when `visit` returns true.
pub fn any_completion(readings: &[Option<usize>], k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let open: Vec<usize> = (0..readings.len()).filter(|&x| readings[x].is_none()).collect();
    let mut coloring: Vec<usize> = readings.iter().map(|r| r.unwrap_or(0)).collect();
    let total = k.pow(open.len() as u32);
    for mut code in 0..total {
        for &x in &open {
            coloring[x] = code % k;
            code /= k;
        }
        if visit(&coloring) {
            return true;
        }
    }
    false
}

/// Reachability through nodes of one color, by Floyd–Warshall over the
/// monochrome edges.
fn monochrome_reach(s: &Stemma, coloring: &[usize]) -> Vec<Vec<bool>> {
    let n = s.len();
    let mut r = vec![vec![false; n]; n];
    for x in 0..n {
        r[x][x] = true;
    }
    for &(p, c) in s.edges() {
        if coloring[p] == coloring[c] {
            r[p][c] = true;
        }
    }
    for z in 0..n {
        for x in 0..n {
            if r[x][z] {
                for y in 0..n {
                    if r[z][y] {
                        r[x][y] = true;
                    }
                }
            }
        }
    }
    r
}

/// The definition taken literally: every same-colored pair has a common
/// node with monochrome paths to both.
pub fn color_connected(s: &Stemma, coloring: &[usize]) -> bool {
    let n = s.len();
    let r = monochrome_reach(s, coloring);
    (0..n).all(|x| {
        (0..n)
            .filter(|&y| coloring[x] == coloring[y])
            .all(|y| (0..n).any(|z| r[z][x] && r[z][y]))
    })
}

/// Nodes without a parent of their own color.
pub fn count_sources(s: &Stemma, coloring: &[usize]) -> usize {
    (0..s.len())
        .filter(|&x| !s.edges().iter().any(|&(p, c)| c == x && coloring[p] == coloring[x]))
        .count()
}

/// Every color has exactly one node without a same-colored parent.
pub fn single_source_per_color(s: &Stemma, coloring: &[usize], k: usize) -> bool {
    (0..k).all(|v| {
        (0..s.len())
            .filter(|&x| coloring[x] == v)
            .filter(|&x| !s.edges().iter().any(|&(p, c)| c == x && coloring[p] == v))
            .count()
            == 1
    })
}

pub fn brute_force_consistent(s: &Stemma, f: &Feature) -> bool {
    let k = f.variants.len();
    any_completion(&f.readings, k, |c| single_source_per_color(s, c, k))
}

pub fn brute_force_color_connected(s: &Stemma, f: &Feature) -> bool {
    any_completion(&f.readings, f.variants.len(), |c| color_connected(s, c))
}

pub fn brute_force_min_sources(s: &Stemma, f: &Feature) -> usize {
    let mut best = usize::MAX;
    any_completion(&f.readings, f.variants.len(), |c| {
        best = best.min(count_sources(s, c));
        false
    });
    best
}

/// Pairs joined by a path of length at least two, from boolean matrix
/// powers A², A³, ... A^(n-1).
pub fn indirect_by_matrix_powers(s: &Stemma) -> Vec<(usize, usize)> {
    let n = s.len();
    let mut a = vec![vec![false; n]; n];
    for &(p, c) in s.edges() {
        a[p][c] = true;
    }
    let mul = |x: &Vec<Vec<bool>>, y: &Vec<Vec<bool>>| -> Vec<Vec<bool>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).any(|k| x[i][k] && y[k][j])).collect())
            .collect()
    };
    let mut power = a.clone();
    let mut acc = vec![vec![false; n]; n];
    for _ in 2..n.max(2) {
        power = mul(&power, &a);
        for i in 0..n {
            for j in 0..n {
                acc[i][j] |= power[i][j];
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if acc[i][j] {
                out.push((i, j));
            }
        }
    }
    out
}

/// Fewest transitions used by the sample strings over all consistent
/// DFAs with exactly `k` states (start 0), by enumerating total tables.
pub fn brute_force_min_transitions(sample: &modex::dfa::Sample, k: usize) -> Option<usize> {
    let m = sample.alphabet.len();
    let cells = k * m;
    let mut table = vec![0usize; cells];
    let mut best: Option<usize> = None;
    for mut code in 0..k.pow(cells as u32) {
        for cell in table.iter_mut() {
            *cell = code % k;
            code /= k;
        }
        let mut used = vec![false; cells];
        let mut end = |w: &[usize]| {
            w.iter().fold(0, |s, &l| {
                used[s * m + l] = true;
                table[s * m + l]
            })
        };
        let pos: Vec<usize> = sample.positives.iter().map(|w| end(w)).collect();
        let neg: Vec<usize> = sample.negatives.iter().map(|w| end(w)).collect();
        if neg.iter().any(|q| pos.contains(q)) {
            continue;
        }
        let count = used.iter().filter(|&&u| u).count();
        best = Some(best.map_or(count, |b: usize| b.min(count)));
    }
    best
}

/// Clauses of exactly three distinct variables.
pub fn random_3cnf<R: Rng>(rng: &mut R, vars: u32, clauses: usize) -> Cnf {
    assert!(vars >= 3);
    let mut cnf = Cnf::with_vars(vars);
    for _ in 0..clauses {
        let picked = rand::seq::index::sample(rng, vars as usize, 3);
        let lits: Vec<Lit> = picked
            .iter()
            .map(|v| Lit::new(Var::new(v as u32 + 1), rng.gen_bool(0.5)))
            .collect();
        cnf.add_clause(&lits).unwrap();
    }
    cnf
}

/// Plain recursive DPLL with unit propagation; `values[v]` for v in 1..=n.
pub fn dpll(cnf: &Cnf) -> bool {
    fn go(clauses: &[Vec<Lit>], values: &mut Vec<Option<bool>>) -> bool {
        let mut trail = Vec::new();
        loop {
            let mut unit = None;
            for c in clauses {
                let mut open = None;
                let mut count = 0;
                let mut sat = false;
                for &l in c {
                    match values[l.var().get() as usize] {
                        Some(b) if b == l.is_positive() => {
                            sat = true;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            count += 1;
                            open = Some(l);
                        }
                    }
                }
                if sat {
                    continue;
                }
                if count == 0 {
                    for v in trail {
                        values[v] = None;
                    }
                    return false;
                }
                if count == 1 {
                    unit = open;
                    break;
                }
            }
            match unit {
                Some(l) => {
                    let v = l.var().get() as usize;
                    values[v] = Some(l.is_positive());
                    trail.push(v);
                }
                None => break,
            }
        }
        let Some(v) = (1..values.len()).find(|&v| values[v].is_none()) else {
            return true;
        };
        for b in [true, false] {
            values[v] = Some(b);
            if go(clauses, values) {
                return true;
            }
        }
        values[v] = None;
        for v in trail {
            values[v] = None;
        }
        false
    }
    let mut values = vec![None; cnf.num_vars() as usize + 1];
    go(cnf.clauses(), &mut values)
}
