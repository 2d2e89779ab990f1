//! Conflict-driven clause learning solver.
//!
//! Two watched literals with blockers, first-UIP learning with basic clause
//! minimization, VSIDS branching over a binary heap, phase saving, Luby
//! restarts and activity-based deletion of learnt clauses. Assumptions are
//! decided first, one per decision level, so the solver can be re-queried
//! with different assumptions after any call.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lit::{normalize_clause, Assignment, Lit, Var};
use super::SatError;

const NO_REASON: u32 = u32::MAX;
const NOT_IN_HEAP: u32 = u32::MAX;

const L_TRUE: i8 = 1;
const L_FALSE: i8 = -1;
const L_UNDEF: i8 = 0;

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Seeds the initial variable activities. Same seed and same clause
    /// insertion order give the same verdicts and models.
    pub seed: u64,
    pub restart_base: u64,
    pub var_decay: f64,
    pub clause_decay: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            seed: 0,
            restart_base: 100,
            var_decay: 0.95,
            clause_decay: 0.999,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Sat(Assignment),
    Unsat,
    /// The deadline expired before a verdict was reached.
    Unknown,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Sat(_))
    }

    pub fn model(&self) -> Option<&Assignment> {
        match self {
            SolveResult::Sat(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub solves: u64,
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub restarts: u64,
}

// Clause arena layout: [header, activity bits, lbd, lits...].
const HEADER_WORDS: usize = 3;
const LEARNT: u32 = 1 << 30;
const DELETED: u32 = 1 << 31;
const LEN_MASK: u32 = LEARNT - 1;

/// Watcher on a binary clause; `blocker` is then the other literal.
const BINARY: u32 = 1 << 31;

#[derive(Clone, Copy)]
struct Watcher {
    cref: u32,
    blocker: Lit,
}

enum SearchOutcome {
    Sat,
    Unsat,
    Restart,
    Timeout,
}

pub struct Solver {
    config: SolverConfig,
    rng: ChaCha8Rng,
    arena: Vec<u32>,
    wasted: usize,
    learnts: Vec<u32>,
    num_problem_clauses: usize,
    watches: Vec<Vec<Watcher>>,
    /// Indexed by literal code.
    values: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    cla_inc: f32,
    heap: Vec<u32>,
    heap_pos: Vec<u32>,
    phase: Vec<bool>,
    seen: Vec<bool>,
    to_clear: Vec<Lit>,
    level_stamp: Vec<u64>,
    stamp: u64,
    ok: bool,
    max_learnts: f64,
    deadline: Option<Instant>,
    stats: SolverStats,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new(SolverConfig::default())
    }
}

impl Solver {
    pub fn new(config: SolverConfig) -> Solver {
        let rng = ChaCha8Rng::seed_from_u64(config.seed);
        Solver {
            config,
            rng,
            arena: Vec::new(),
            wasted: 0,
            learnts: Vec::new(),
            num_problem_clauses: 0,
            watches: Vec::new(),
            values: Vec::new(),
            level: Vec::new(),
            reason: Vec::new(),
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: Vec::new(),
            var_inc: 1.0,
            cla_inc: 1.0,
            heap: Vec::new(),
            heap_pos: Vec::new(),
            phase: Vec::new(),
            seen: Vec::new(),
            to_clear: Vec::new(),
            level_stamp: vec![0],
            stamp: 0,
            ok: true,
            max_learnts: 0.0,
            deadline: None,
            stats: SolverStats::default(),
        }
    }

    pub fn with_seed(seed: u64) -> Solver {
        Solver::new(SolverConfig {
            seed,
            ..SolverConfig::default()
        })
    }

    pub fn num_vars(&self) -> usize {
        self.level.len()
    }

    /// Number of stored problem clauses (units and satisfied clauses are not stored).
    pub fn num_clauses(&self) -> usize {
        self.num_problem_clauses
    }

    pub fn num_learnts(&self) -> usize {
        self.learnts.len()
    }

    pub fn stats(&self) -> SolverStats {
        self.stats
    }

    /// `false` once the clause set is known to be unsatisfiable regardless
    /// of assumptions.
    pub fn is_ok(&self) -> bool {
        self.ok
    }

    pub fn set_deadline(&mut self, deadline: Option<Instant>) {
        self.deadline = deadline;
    }

    pub fn new_var(&mut self) -> Var {
        let var = Var::new(self.level.len() as u32 + 1);
        self.values.push(L_UNDEF);
        self.values.push(L_UNDEF);
        self.level.push(0);
        self.reason.push(NO_REASON);
        self.activity.push(self.rng.gen::<f64>() * 1e-5);
        self.phase.push(false);
        self.seen.push(false);
        self.level_stamp.push(0);
        self.heap_pos.push(NOT_IN_HEAP);
        self.watches.push(Vec::new());
        self.watches.push(Vec::new());
        self.heap_insert(var.idx() as u32);
        var
    }

    fn check_allocated(&self, lits: &[Lit]) -> Result<(), SatError> {
        match lits.iter().find(|l| l.var().idx() >= self.num_vars()) {
            Some(l) => Err(SatError::UnallocatedVariable(l.var().get())),
            None => Ok(()),
        }
    }

    pub fn add_clause(&mut self, lits: &[Lit]) -> Result<(), SatError> {
        self.check_allocated(lits)?;
        if !self.ok {
            return Ok(());
        }
        self.cancel_until(0);
        let mut c = lits.to_vec();
        if !normalize_clause(&mut c) {
            return Ok(());
        }
        if c.iter().any(|&l| self.lit_value(l) == L_TRUE) {
            return Ok(());
        }
        c.retain(|&l| self.lit_value(l) != L_FALSE);
        match c.len() {
            0 => self.ok = false,
            1 => {
                self.enqueue(c[0], NO_REASON);
                if self.propagate().is_some() {
                    self.ok = false;
                }
            }
            _ => {
                self.attach(&c, false, 0);
                self.num_problem_clauses += 1;
            }
        }
        Ok(())
    }

    pub fn solve(&mut self, assumptions: &[Lit]) -> Result<SolveResult, SatError> {
        self.check_allocated(assumptions)?;
        self.stats.solves += 1;
        if !self.ok {
            return Ok(SolveResult::Unsat);
        }
        self.cancel_until(0);
        if self.propagate().is_some() {
            self.ok = false;
            return Ok(SolveResult::Unsat);
        }
        self.max_learnts = (self.num_problem_clauses as f64 / 3.0)
            .max(2000.0)
            .max(self.learnts.len() as f64 * 1.1);
        let mut restarts = 0u64;
        let result = loop {
            let budget = luby(2.0, restarts) * self.config.restart_base as f64;
            match self.search(budget as u64, assumptions) {
                SearchOutcome::Sat => {
                    let model = (0..self.num_vars())
                        .map(|v| self.values[2 * v] == L_TRUE)
                        .collect();
                    break SolveResult::Sat(Assignment::new(model));
                }
                SearchOutcome::Unsat => break SolveResult::Unsat,
                SearchOutcome::Timeout => break SolveResult::Unknown,
                SearchOutcome::Restart => {
                    restarts += 1;
                    self.stats.restarts += 1;
                    self.max_learnts *= 1.05;
                }
            }
        };
        self.cancel_until(0);
        Ok(result)
    }

    fn search(&mut self, max_conflicts: u64, assumptions: &[Lit]) -> SearchOutcome {
        let mut conflicts = 0u64;
        let mut learnt = Vec::new();
        loop {
            if let Some(confl) = self.propagate() {
                self.stats.conflicts += 1;
                conflicts += 1;
                if self.decision_level() == 0 {
                    self.ok = false;
                    return SearchOutcome::Unsat;
                }
                let (backtrack, lbd) = self.analyze(confl, &mut learnt);
                self.cancel_until(backtrack);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    let cref = self.attach(&learnt, true, lbd);
                    self.bump_clause(cref);
                    self.learnts.push(cref);
                    self.enqueue(learnt[0], cref);
                }
                self.var_inc /= self.config.var_decay;
                self.cla_inc /= self.config.clause_decay as f32;
                if conflicts % 256 == 0 && self.timed_out() {
                    return SearchOutcome::Timeout;
                }
            } else {
                if conflicts >= max_conflicts {
                    self.cancel_until(0);
                    return SearchOutcome::Restart;
                }
                if self.learnts.len() as f64 - self.trail.len() as f64 >= self.max_learnts {
                    self.reduce_db();
                }
                let mut next = None;
                while self.decision_level() < assumptions.len() {
                    let p = assumptions[self.decision_level()];
                    match self.lit_value(p) {
                        L_TRUE => self.trail_lim.push(self.trail.len()),
                        L_FALSE => return SearchOutcome::Unsat,
                        _ => {
                            next = Some(p);
                            break;
                        }
                    }
                }
                let next = match next {
                    Some(p) => p,
                    None => {
                        self.stats.decisions += 1;
                        if self.stats.decisions % 1024 == 0 && self.timed_out() {
                            return SearchOutcome::Timeout;
                        }
                        match self.pick_branch() {
                            Some(p) => p,
                            None => return SearchOutcome::Sat,
                        }
                    }
                };
                self.trail_lim.push(self.trail.len());
                self.enqueue(next, NO_REASON);
            }
        }
    }

    fn timed_out(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    #[inline]
    fn decision_level(&self) -> usize {
        self.trail_lim.len()
    }

    #[inline]
    fn lit_value(&self, lit: Lit) -> i8 {
        self.values[lit.code()]
    }

    #[inline]
    fn enqueue(&mut self, lit: Lit, reason: u32) {
        let v = lit.var().idx();
        debug_assert_eq!(self.values[lit.code()], L_UNDEF);
        self.values[lit.code()] = L_TRUE;
        self.values[(!lit).code()] = L_FALSE;
        self.level[v] = self.decision_level() as u32;
        self.reason[v] = reason;
        self.trail.push(lit);
    }

    #[inline]
    fn clause_len(&self, cref: u32) -> usize {
        (self.arena[cref as usize] & LEN_MASK) as usize
    }

    #[inline]
    fn clause_lit(&self, cref: u32, k: usize) -> Lit {
        Lit::from_code(self.arena[cref as usize + HEADER_WORDS + k])
    }

    fn is_learnt(&self, cref: u32) -> bool {
        self.arena[cref as usize] & LEARNT != 0
    }

    fn clause_activity(&self, cref: u32) -> f32 {
        f32::from_bits(self.arena[cref as usize + 1])
    }

    fn clause_lbd(&self, cref: u32) -> u32 {
        self.arena[cref as usize + 2]
    }

    fn attach(&mut self, lits: &[Lit], learnt: bool, lbd: u32) -> u32 {
        debug_assert!(lits.len() >= 2);
        let cref = self.arena.len() as u32;
        assert!(cref < BINARY, "clause arena exhausted");
        self.arena
            .push(lits.len() as u32 | if learnt { LEARNT } else { 0 });
        self.arena.push(0f32.to_bits());
        self.arena.push(lbd);
        self.arena.extend(lits.iter().map(|l| l.code() as u32));
        let tag = if lits.len() == 2 { BINARY } else { 0 };
        self.watches[(!lits[0]).code()].push(Watcher {
            cref: cref | tag,
            blocker: lits[1],
        });
        self.watches[(!lits[1]).code()].push(Watcher {
            cref: cref | tag,
            blocker: lits[0],
        });
        cref
    }

    /// Returns the conflicting clause, if any.
    fn propagate(&mut self) -> Option<u32> {
        let mut conflict = None;
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let false_code = (!p).code() as u32;
            let mut ws = std::mem::take(&mut self.watches[p.code()]);
            let mut i = 0;
            let mut j = 0;
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                let bv = self.values[w.blocker.code()];
                if bv == L_TRUE {
                    ws[j] = w;
                    j += 1;
                    continue;
                }
                if w.cref & BINARY != 0 {
                    ws[j] = w;
                    j += 1;
                    if bv == L_FALSE {
                        conflict = Some(w.cref & !BINARY);
                        break;
                    }
                    self.enqueue(w.blocker, w.cref & !BINARY);
                    continue;
                }
                let base = w.cref as usize;
                let header = self.arena[base];
                if header & DELETED != 0 {
                    continue;
                }
                let len = (header & LEN_MASK) as usize;
                let lits = base + HEADER_WORDS;
                if self.arena[lits] == false_code {
                    self.arena.swap(lits, lits + 1);
                }
                let first = Lit::from_code(self.arena[lits]);
                let kept = Watcher {
                    cref: w.cref,
                    blocker: first,
                };
                let first_value = self.values[first.code()];
                if first != w.blocker && first_value == L_TRUE {
                    ws[j] = kept;
                    j += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..len {
                    let code = self.arena[lits + k];
                    if self.values[code as usize] != L_FALSE {
                        self.arena.swap(lits + 1, lits + k);
                        self.watches[(code ^ 1) as usize].push(kept);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = kept;
                j += 1;
                if first_value == L_FALSE {
                    conflict = Some(w.cref);
                    break;
                }
                self.enqueue(first, w.cref);
            }
            while i < ws.len() {
                ws[j] = ws[i];
                i += 1;
                j += 1;
            }
            ws.truncate(j);
            self.watches[p.code()] = ws;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                break;
            }
        }
        conflict
    }

    /// First-UIP learning into `learnt` (asserting literal first). Returns
    /// the backtrack level and the clause's literal block distance.
    fn analyze(&mut self, mut confl: u32, learnt: &mut Vec<Lit>) -> (usize, u32) {
        learnt.clear();
        learnt.push(Var::new(1).pos());
        let mut pending = 0usize;
        let mut p: Option<Lit> = None;
        let mut index = self.trail.len();
        let current = self.decision_level() as u32;
        loop {
            if self.is_learnt(confl) {
                self.bump_clause(confl);
            }
            for k in 0..self.clause_len(confl) {
                let q = self.clause_lit(confl, k);
                let v = q.var().idx();
                if Some(q) == p || self.seen[v] || self.level[v] == 0 {
                    continue;
                }
                self.bump_var(v);
                self.seen[v] = true;
                if self.level[v] >= current {
                    pending += 1;
                } else {
                    learnt.push(q);
                }
            }
            loop {
                index -= 1;
                if self.seen[self.trail[index].var().idx()] {
                    break;
                }
            }
            let lit = self.trail[index];
            p = Some(lit);
            confl = self.reason[lit.var().idx()];
            self.seen[lit.var().idx()] = false;
            pending -= 1;
            if pending == 0 {
                break;
            }
        }
        learnt[0] = !p.expect("conflict analysis visits at least one literal");

        // drop literals whose reason is covered by the rest of the clause
        self.to_clear.clear();
        self.to_clear.extend_from_slice(&learnt[1..]);
        let mut kept = 1;
        for k in 1..learnt.len() {
            let lit = learnt[k];
            let r = self.reason[lit.var().idx()];
            let redundant = r != NO_REASON
                && (0..self.clause_len(r)).all(|i| {
                    let q = self.clause_lit(r, i);
                    let u = q.var().idx();
                    q == !lit || self.seen[u] || self.level[u] == 0
                });
            if !redundant {
                learnt[kept] = lit;
                kept += 1;
            }
        }
        learnt.truncate(kept);
        for &l in &self.to_clear {
            self.seen[l.var().idx()] = false;
        }

        self.stamp += 1;
        let mut lbd = 0;
        for &l in learnt.iter() {
            let lv = self.level[l.var().idx()] as usize;
            if self.level_stamp[lv] != self.stamp {
                self.level_stamp[lv] = self.stamp;
                lbd += 1;
            }
        }

        let backtrack = if learnt.len() == 1 {
            0
        } else {
            let mut max_i = 1;
            for k in 2..learnt.len() {
                if self.level[learnt[k].var().idx()] > self.level[learnt[max_i].var().idx()] {
                    max_i = k;
                }
            }
            learnt.swap(1, max_i);
            self.level[learnt[1].var().idx()] as usize
        };
        (backtrack, lbd)
    }

    fn cancel_until(&mut self, level: usize) {
        if self.decision_level() <= level {
            return;
        }
        let stop = self.trail_lim[level];
        for k in (stop..self.trail.len()).rev() {
            let lit = self.trail[k];
            let v = lit.var().idx();
            self.values[lit.code()] = L_UNDEF;
            self.values[(!lit).code()] = L_UNDEF;
            self.reason[v] = NO_REASON;
            self.phase[v] = lit.is_positive();
            if self.heap_pos[v] == NOT_IN_HEAP {
                self.heap_insert(v as u32);
            }
        }
        self.trail.truncate(stop);
        self.trail_lim.truncate(level);
        self.qhead = self.trail.len();
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        while let Some(v) = self.heap_pop() {
            if self.values[2 * v as usize] == L_UNDEF {
                let var = Var::new(v + 1);
                return Some(Lit::new(var, self.phase[v as usize]));
            }
        }
        None
    }

    fn bump_var(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in self.activity.iter_mut() {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        if self.heap_pos[v] != NOT_IN_HEAP {
            self.heap_up(self.heap_pos[v] as usize);
        }
    }

    fn bump_clause(&mut self, cref: u32) {
        let slot = cref as usize + 1;
        let act = f32::from_bits(self.arena[slot]) + self.cla_inc;
        self.arena[slot] = act.to_bits();
        if act > 1e20 {
            for &l in &self.learnts {
                let s = l as usize + 1;
                self.arena[s] = (f32::from_bits(self.arena[s]) * 1e-20).to_bits();
            }
            self.cla_inc *= 1e-20;
        }
    }

    fn locked(&self, cref: u32) -> bool {
        (0..2).any(|k| {
            let l = self.clause_lit(cref, k);
            self.reason[l.var().idx()] == cref && self.lit_value(l) == L_TRUE
        })
    }

    /// Deletes the less useful half of the learnt clauses: high literal
    /// block distance first, then low activity. Glue clauses stay.
    fn reduce_db(&mut self) {
        let mut learnts = std::mem::take(&mut self.learnts);
        learnts.sort_by(|&a, &b| {
            self.clause_lbd(b)
                .cmp(&self.clause_lbd(a))
                .then(self.clause_activity(a).total_cmp(&self.clause_activity(b)))
                .then(a.cmp(&b))
        });
        let half = learnts.len() / 2;
        let mut kept = Vec::with_capacity(learnts.len());
        for (k, &cref) in learnts.iter().enumerate() {
            if k < half && self.clause_len(cref) > 2 && self.clause_lbd(cref) > 2 && !self.locked(cref) {
                self.arena[cref as usize] |= DELETED;
                self.wasted += HEADER_WORDS + self.clause_len(cref);
            } else {
                kept.push(cref);
            }
        }
        self.learnts = kept;
        if self.wasted * 2 > self.arena.len() {
            self.compact();
        } else {
            let arena = &self.arena;
            for ws in self.watches.iter_mut() {
                ws.retain(|w| w.cref & BINARY != 0 || arena[w.cref as usize] & DELETED == 0);
            }
        }
    }

    /// Moves live clauses to a fresh arena and rewrites every reference.
    fn compact(&mut self) {
        let mut fresh = Vec::with_capacity(self.arena.len() - self.wasted);
        let mut moved = vec![NO_REASON; self.arena.len()];
        let mut at = 0;
        while at < self.arena.len() {
            let size = HEADER_WORDS + (self.arena[at] & LEN_MASK) as usize;
            if self.arena[at] & DELETED == 0 {
                moved[at] = fresh.len() as u32;
                fresh.extend_from_slice(&self.arena[at..at + size]);
            }
            at += size;
        }
        for ws in self.watches.iter_mut() {
            ws.retain_mut(|w| {
                let tag = w.cref & BINARY;
                let to = moved[(w.cref & !BINARY) as usize];
                w.cref = to | tag;
                to != NO_REASON
            });
        }
        for r in self.reason.iter_mut() {
            if *r != NO_REASON {
                *r = moved[*r as usize];
            }
        }
        for c in self.learnts.iter_mut() {
            *c = moved[*c as usize];
        }
        self.arena = fresh;
        self.wasted = 0;
    }

    // Max-heap over activity; ties go to the lower variable index.

    #[inline]
    fn heap_before(&self, a: u32, b: u32) -> bool {
        let (x, y) = (self.activity[a as usize], self.activity[b as usize]);
        x > y || (x == y && a < b)
    }

    fn heap_insert(&mut self, v: u32) {
        self.heap_pos[v as usize] = self.heap.len() as u32;
        self.heap.push(v);
        self.heap_up(self.heap.len() - 1);
    }

    fn heap_pop(&mut self) -> Option<u32> {
        if self.heap.is_empty() {
            return None;
        }
        let top = self.heap.swap_remove(0);
        self.heap_pos[top as usize] = NOT_IN_HEAP;
        if !self.heap.is_empty() {
            self.heap_pos[self.heap[0] as usize] = 0;
            self.heap_down(0);
        }
        Some(top)
    }

    fn heap_up(&mut self, mut i: usize) {
        let v = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            let pv = self.heap[parent];
            if !self.heap_before(v, pv) {
                break;
            }
            self.heap[i] = pv;
            self.heap_pos[pv as usize] = i as u32;
            i = parent;
        }
        self.heap[i] = v;
        self.heap_pos[v as usize] = i as u32;
    }

    fn heap_down(&mut self, mut i: usize) {
        let v = self.heap[i];
        let n = self.heap.len();
        loop {
            let left = 2 * i + 1;
            if left >= n {
                break;
            }
            let right = left + 1;
            let child = if right < n && self.heap_before(self.heap[right], self.heap[left]) {
                right
            } else {
                left
            };
            let cv = self.heap[child];
            if !self.heap_before(cv, v) {
                break;
            }
            self.heap[i] = cv;
            self.heap_pos[cv as usize] = i as u32;
            i = child;
        }
        self.heap[i] = v;
        self.heap_pos[v as usize] = i as u32;
    }
}

/// The Luby sequence scaled by powers of `y`.
fn luby(y: f64, mut x: u64) -> f64 {
    let mut size = 1u64;
    let mut seq = 0i32;
    while size < x + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != x {
        size = (size - 1) >> 1;
        seq -= 1;
        x %= size;
    }
    y.powi(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lits(s: &mut Solver, n: usize) -> Vec<Var> {
        (0..n).map(|_| s.new_var()).collect()
    }

    #[test]
    fn variables_are_dense() {
        let mut s = Solver::default();
        assert_eq!(s.new_var().get(), 1);
        s.new_var();
        assert_eq!(s.new_var().get(), 3);
        for _ in 0..7 {
            s.new_var();
        }
        assert_eq!(s.new_var().get(), 11);
    }

    #[test]
    fn contradiction_is_unsat() {
        let mut s = Solver::default();
        let x = s.new_var();
        s.add_clause(&[x.pos()]).unwrap();
        s.add_clause(&[x.neg()]).unwrap();
        assert_eq!(s.solve(&[]).unwrap(), SolveResult::Unsat);
    }

    #[test]
    fn empty_clause_is_unsat() {
        let mut s = Solver::default();
        s.new_var();
        s.add_clause(&[]).unwrap();
        assert!(!s.is_ok());
        assert_eq!(s.solve(&[]).unwrap(), SolveResult::Unsat);
    }

    #[test]
    fn tautology_is_ignored() {
        let mut s = Solver::default();
        let x = s.new_var();
        s.add_clause(&[x.pos(), x.neg()]).unwrap();
        assert_eq!(s.num_clauses(), 0);
        assert!(s.solve(&[x.neg()]).unwrap().is_sat());
        assert!(s.solve(&[x.pos()]).unwrap().is_sat());
    }

    #[test]
    fn unit_propagation_example() {
        let mut s = Solver::default();
        let v = lits(&mut s, 2);
        s.add_clause(&[v[0].pos(), v[1].pos()]).unwrap();
        s.add_clause(&[v[0].neg()]).unwrap();
        let r = s.solve(&[]).unwrap();
        assert!(r.model().unwrap().value(v[1]));
    }

    #[test]
    fn assumptions_make_unsat_then_solver_is_reusable() {
        let mut s = Solver::default();
        let v = lits(&mut s, 2);
        s.add_clause(&[v[0].pos(), v[1].pos()]).unwrap();
        assert_eq!(s.solve(&[v[0].neg(), v[1].neg()]).unwrap(), SolveResult::Unsat);
        assert!(s.is_ok());
        let r = s.solve(&[v[0].neg()]).unwrap();
        assert!(r.model().unwrap().value(v[1]));
    }

    #[test]
    fn pigeonhole_two_into_one() {
        let mut s = Solver::default();
        let v = lits(&mut s, 2);
        s.add_clause(&[v[0].pos()]).unwrap();
        s.add_clause(&[v[1].pos()]).unwrap();
        s.add_clause(&[v[0].neg(), v[1].neg()]).unwrap();
        assert_eq!(s.solve(&[]).unwrap(), SolveResult::Unsat);
    }

    #[test]
    fn unallocated_variable_is_rejected() {
        let mut s = Solver::default();
        s.new_var();
        let err = s.add_clause(&[Var::new(5).pos()]).unwrap_err();
        assert_eq!(err, SatError::UnallocatedVariable(5));
        assert!(s.solve(&[Var::new(2).neg()]).is_err());
    }

    #[test]
    fn pigeonhole_five_into_four_needs_learning() {
        let mut s = Solver::default();
        let (p, h) = (5, 4);
        let x: Vec<Vec<Var>> = (0..p).map(|_| lits(&mut s, h)).collect();
        for row in &x {
            let c: Vec<Lit> = row.iter().map(|v| v.pos()).collect();
            s.add_clause(&c).unwrap();
        }
        for j in 0..h {
            for a in 0..p {
                for b in a + 1..p {
                    s.add_clause(&[x[a][j].neg(), x[b][j].neg()]).unwrap();
                }
            }
        }
        assert_eq!(s.solve(&[]).unwrap(), SolveResult::Unsat);
        assert!(s.stats().conflicts > 0);
    }

    #[test]
    fn luby_prefix() {
        let seq: Vec<f64> = (0..9).map(|i| luby(2.0, i)).collect();
        assert_eq!(seq, vec![1.0, 1.0, 2.0, 1.0, 1.0, 2.0, 4.0, 1.0, 1.0]);
    }

    #[test]
    fn expired_deadline_reports_unknown() {
        let mut s = Solver::default();
        let (p, h) = (9, 8);
        let x: Vec<Vec<Var>> = (0..p).map(|_| lits(&mut s, h)).collect();
        for row in &x {
            let c: Vec<Lit> = row.iter().map(|v| v.pos()).collect();
            s.add_clause(&c).unwrap();
        }
        for j in 0..h {
            for a in 0..p {
                for b in a + 1..p {
                    s.add_clause(&[x[a][j].neg(), x[b][j].neg()]).unwrap();
                }
            }
        }
        s.set_deadline(Some(Instant::now()));
        assert_eq!(s.solve(&[]).unwrap(), SolveResult::Unknown);
    }
}
