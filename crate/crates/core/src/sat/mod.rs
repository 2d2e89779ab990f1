//! Propositional backend: literals, a CDCL solver and DIMACS I/O.

mod dimacs;
mod lit;
mod solver;

pub use dimacs::{parse_dimacs, write_dimacs, Cnf, DimacsError};
pub use lit::{normalize_clause, Assignment, Lit, Var};
pub use solver::{SolveResult, Solver, SolverConfig, SolverStats};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("variable {0} was never allocated")]
    UnallocatedVariable(u32),
}

/// Anything encoders can allocate variables in and emit clauses to.
pub trait ClauseSink {
    fn fresh_var(&mut self) -> Var;

    /// Encoders only reference variables they allocated through this sink,
    /// so a failure here is a bug in the encoder.
    fn emit(&mut self, clause: &[Lit]);
}

impl ClauseSink for Solver {
    fn fresh_var(&mut self) -> Var {
        self.new_var()
    }

    fn emit(&mut self, clause: &[Lit]) {
        self.add_clause(clause)
            .expect("encoder emitted a clause over an unallocated variable");
    }
}

impl ClauseSink for Cnf {
    fn fresh_var(&mut self) -> Var {
        self.new_var()
    }

    fn emit(&mut self, clause: &[Lit]) {
        self.add_clause(clause)
            .expect("encoder emitted a clause over an unallocated variable");
    }
}
