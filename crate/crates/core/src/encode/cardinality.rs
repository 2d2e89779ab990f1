use crate::sat::{ClauseSink, Lit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    AtMost,
    AtLeast,
    Exactly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalityConstraint {
    pub lits: Vec<Lit>,
    pub bound: usize,
    pub sense: Sense,
}

impl CardinalityConstraint {
    pub fn at_most(lits: Vec<Lit>, bound: usize) -> Self {
        CardinalityConstraint {
            lits,
            bound,
            sense: Sense::AtMost,
        }
    }

    pub fn at_least(lits: Vec<Lit>, bound: usize) -> Self {
        CardinalityConstraint {
            lits,
            bound,
            sense: Sense::AtLeast,
        }
    }

    pub fn exactly(lits: Vec<Lit>, bound: usize) -> Self {
        CardinalityConstraint {
            lits,
            bound,
            sense: Sense::Exactly,
        }
    }

    /// Semantic check against the number of true literals.
    pub fn holds_for(&self, true_count: usize) -> bool {
        match self.sense {
            Sense::AtMost => true_count <= self.bound,
            Sense::AtLeast => true_count >= self.bound,
            Sense::Exactly => true_count == self.bound,
        }
    }
}

/// Unary counter over `lits`: register `(i, j)` is forced true whenever at
/// least `j + 1` of the first `i + 1` literals are true. Only the upward
/// direction is encoded, which is enough to bound the count from above and
/// keeps every solution of the inputs extendable.
#[derive(Debug, Clone)]
pub struct SequentialCounter {
    outputs: Vec<Lit>,
}

impl SequentialCounter {
    pub fn new<S: ClauseSink>(sink: &mut S, lits: &[Lit], width: usize) -> SequentialCounter {
        let mut prev: Vec<Lit> = Vec::new();
        for (i, &x) in lits.iter().enumerate() {
            let len = (i + 1).min(width);
            let mut cur = Vec::with_capacity(len);
            for j in 0..len {
                let r = sink.fresh_var().pos();
                if j == 0 {
                    sink.emit(&[!x, r]);
                } else {
                    sink.emit(&[!x, !prev[j - 1], r]);
                }
                if j < prev.len() {
                    sink.emit(&[!prev[j], r]);
                }
                cur.push(r);
            }
            prev = cur;
        }
        SequentialCounter { outputs: prev }
    }

    pub fn width(&self) -> usize {
        self.outputs.len()
    }

    /// Literal implied by "at least `k` inputs are true", for `1 <= k <= width`.
    pub fn at_least(&self, k: usize) -> Option<Lit> {
        k.checked_sub(1).and_then(|i| self.outputs.get(i)).copied()
    }
}

fn at_most<S: ClauseSink>(sink: &mut S, lits: &[Lit], k: usize) {
    let n = lits.len();
    if k >= n {
        return;
    }
    if k == 0 {
        for &l in lits {
            sink.emit(&[!l]);
        }
        return;
    }
    if k == 1 && n <= 5 {
        for a in 0..n {
            for b in a + 1..n {
                sink.emit(&[!lits[a], !lits[b]]);
            }
        }
        return;
    }
    let counter = SequentialCounter::new(sink, lits, k + 1);
    let over = counter.at_least(k + 1).expect("counter wide enough");
    sink.emit(&[!over]);
}

pub fn add_cardinality<S: ClauseSink>(sink: &mut S, c: &CardinalityConstraint) {
    let n = c.lits.len();
    let negated: Vec<Lit> = c.lits.iter().map(|&l| !l).collect();
    let at_least = |sink: &mut S| {
        if c.bound > n {
            sink.emit(&[]);
        } else if c.bound == 1 {
            sink.emit(&c.lits);
        } else if c.bound > 0 {
            at_most(sink, &negated, n - c.bound);
        }
    };
    match c.sense {
        Sense::AtMost => at_most(sink, &c.lits, c.bound),
        Sense::AtLeast => at_least(sink),
        Sense::Exactly => {
            at_most(sink, &c.lits, c.bound);
            at_least(sink);
        }
    }
}

pub fn exactly_one<S: ClauseSink>(sink: &mut S, lits: &[Lit]) {
    add_cardinality(sink, &CardinalityConstraint::exactly(lits.to_vec(), 1));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{Solver, Var};

    /// Number of assignments to `vars` that extend to a model of the solver.
    fn projected_count(s: &mut Solver, vars: &[Var]) -> usize {
        let n = vars.len();
        (0..1u32 << n)
            .filter(|mask| {
                let assume: Vec<Lit> = (0..n)
                    .map(|i| Lit::new(vars[i], mask >> i & 1 == 1))
                    .collect();
                s.solve(&assume).unwrap().is_sat()
            })
            .count()
    }

    fn semantic_count(n: usize, c: &CardinalityConstraint, polarity: &[bool]) -> usize {
        (0..1u32 << n)
            .filter(|mask| {
                let count = (0..n)
                    .filter(|&i| (mask >> i & 1 == 1) == polarity[i])
                    .count();
                c.holds_for(count)
            })
            .count()
    }

    fn check(n: usize, bound: usize, sense: Sense, polarity: &[bool]) {
        let mut s = Solver::default();
        let vars: Vec<Var> = (0..n).map(|_| s.new_var()).collect();
        let lits: Vec<Lit> = vars
            .iter()
            .zip(polarity)
            .map(|(&v, &p)| Lit::new(v, p))
            .collect();
        let c = CardinalityConstraint {
            lits,
            bound,
            sense,
        };
        add_cardinality(&mut s, &c);
        assert_eq!(
            projected_count(&mut s, &vars),
            semantic_count(n, &c, polarity),
            "n={n} bound={bound} {sense:?} polarity={polarity:?}"
        );
    }

    #[test]
    fn at_most_zero_forces_all_false() {
        let mut s = Solver::default();
        let vars: Vec<Var> = (0..2).map(|_| s.new_var()).collect();
        let lits: Vec<Lit> = vars.iter().map(|v| v.pos()).collect();
        add_cardinality(&mut s, &CardinalityConstraint::at_most(lits, 0));
        assert_eq!(projected_count(&mut s, &vars), 1);
        assert!(!s.solve(&[vars[0].pos()]).unwrap().is_sat());
    }

    #[test]
    fn exactly_one_of_three_is_one_hot() {
        let mut s = Solver::default();
        let vars: Vec<Var> = (0..3).map(|_| s.new_var()).collect();
        let lits: Vec<Lit> = vars.iter().map(|v| v.pos()).collect();
        exactly_one(&mut s, &lits);
        assert_eq!(projected_count(&mut s, &vars), 3);
    }

    #[test]
    fn at_most_two_of_four_has_eleven_models() {
        // 1 + 4 + 6 assignments with at most two true literals
        let mut s = Solver::default();
        let vars: Vec<Var> = (0..4).map(|_| s.new_var()).collect();
        let lits: Vec<Lit> = vars.iter().map(|v| v.pos()).collect();
        add_cardinality(&mut s, &CardinalityConstraint::at_most(lits, 2));
        assert_eq!(projected_count(&mut s, &vars), 11);
    }

    #[test]
    fn projection_preserving_for_all_small_cases() {
        for n in 0..=5 {
            for bound in 0..=n + 1 {
                for sense in [Sense::AtMost, Sense::AtLeast, Sense::Exactly] {
                    check(n, bound, sense, &vec![true; n]);
                    let mixed: Vec<bool> = (0..n).map(|i| i % 2 == 0).collect();
                    check(n, bound, sense, &mixed);
                }
            }
        }
    }

    #[test]
    fn counter_outputs_bound_the_count() {
        let mut s = Solver::default();
        let vars: Vec<Var> = (0..6).map(|_| s.new_var()).collect();
        let lits: Vec<Lit> = vars.iter().map(|v| v.pos()).collect();
        let counter = SequentialCounter::new(&mut s, &lits, 4);
        assert_eq!(counter.width(), 4);
        assert!(counter.at_least(0).is_none());
        assert!(counter.at_least(5).is_none());
        // forbidding "at least 3" leaves exactly the assignments with <= 2 true
        let over = counter.at_least(3).unwrap();
        s.add_clause(&[!over]).unwrap();
        assert_eq!(projected_count(&mut s, &vars), 1 + 6 + 15);
    }
}
