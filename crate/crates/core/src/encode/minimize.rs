use std::time::Instant;

use thiserror::Error;

use crate::sat::{Assignment, ClauseSink, Lit, SolveResult, Solver};

use super::cardinality::SequentialCounter;
use super::formula::CnfFormula;

#[derive(Debug, Clone, Default)]
pub struct MinimizeOptions {
    pub seed: u64,
    /// On expiry the best model found so far is returned with `optimal == false`.
    pub deadline: Option<Instant>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimum {
    /// Number of true objective literals in `model`.
    pub cost: usize,
    pub model: Assignment,
    /// `false` when the deadline cut the descent short.
    pub optimal: bool,
    pub solver_calls: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimizeError {
    #[error("No models exist.")]
    NoModel,
    #[error("time budget exhausted before any model was found")]
    Timeout,
}

/// Minimum number of true `objective` literals over all models of `formula`.
pub fn minimize_cardinality(
    formula: &CnfFormula,
    objective: &[Lit],
    options: &MinimizeOptions,
) -> Result<Minimum, MinimizeError> {
    let mut solver = formula.solver(options.seed);
    minimize_in_solver(&mut solver, objective, options.deadline)
}

/// Linear descent: after each model of cost `k`, forbid "at least `k` true"
/// through a counter built over the objective and solve again until UNSAT.
/// The solver keeps the added bound afterwards.
pub fn minimize_in_solver(
    solver: &mut Solver,
    objective: &[Lit],
    deadline: Option<Instant>,
) -> Result<Minimum, MinimizeError> {
    solver.set_deadline(deadline);
    let result = descend(solver, objective);
    solver.set_deadline(None);
    result
}

fn descend(solver: &mut Solver, objective: &[Lit]) -> Result<Minimum, MinimizeError> {
    let mut calls = 1;
    let mut best = match solver.solve(&[]).expect("objective literals are allocated") {
        SolveResult::Sat(model) => model,
        SolveResult::Unsat => return Err(MinimizeError::NoModel),
        SolveResult::Unknown => return Err(MinimizeError::Timeout),
    };
    let mut cost = best.count_true(objective);
    let counter = SequentialCounter::new(solver, objective, cost);
    loop {
        if cost == 0 {
            return Ok(Minimum {
                cost,
                model: best,
                optimal: true,
                solver_calls: calls,
            });
        }
        let bound = counter.at_least(cost).expect("cost never exceeds the counter width");
        solver.emit(&[!bound]);
        calls += 1;
        match solver.solve(&[]).expect("counter literals are allocated") {
            SolveResult::Sat(model) => {
                let next = model.count_true(objective);
                debug_assert!(next < cost);
                cost = next;
                best = model;
            }
            SolveResult::Unsat => {
                return Ok(Minimum {
                    cost,
                    model: best,
                    optimal: true,
                    solver_calls: calls,
                })
            }
            SolveResult::Unknown => {
                return Ok(Minimum {
                    cost,
                    model: best,
                    optimal: false,
                    solver_calls: calls,
                })
            }
        }
    }
}
