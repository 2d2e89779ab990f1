use std::io::{self, Write};

use crate::sat::{write_dimacs, Assignment, ClauseSink, Cnf, Lit, SatError, Solver, SolverConfig, Var};

use super::symbols::{Atom, SymbolTable};

/// Variable and clause counts of a grounded formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub struct FormulaSize {
    pub vars: usize,
    pub clauses: usize,
}

impl std::ops::AddAssign for FormulaSize {
    fn add_assign(&mut self, other: FormulaSize) {
        self.vars += other.vars;
        self.clauses += other.clauses;
    }
}

/// A clause set together with the names of its problem-level atoms.
#[derive(Debug, Clone, Default)]
pub struct CnfFormula {
    cnf: Cnf,
    symbols: SymbolTable,
}

impl CnfFormula {
    pub fn new() -> CnfFormula {
        CnfFormula::default()
    }

    pub fn new_var(&mut self) -> Var {
        self.cnf.new_var()
    }

    /// The variable bound to `atom`, allocating and registering it on first use.
    pub fn atom(&mut self, atom: Atom) -> Var {
        if let Some(v) = self.symbols.var(&atom) {
            return v;
        }
        let v = self.cnf.new_var();
        self.symbols
            .insert(atom, v)
            .expect("fresh variable and unseen atom");
        v
    }

    pub fn lookup(&self, atom: &Atom) -> Option<Var> {
        self.symbols.var(atom)
    }

    pub fn add_clause(&mut self, lits: &[Lit]) -> Result<(), SatError> {
        self.cnf.add_clause(lits)
    }

    pub fn cnf(&self) -> &Cnf {
        &self.cnf
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    pub fn num_vars(&self) -> usize {
        self.cnf.num_vars() as usize
    }

    pub fn num_clauses(&self) -> usize {
        self.cnf.num_clauses()
    }

    pub fn size(&self) -> FormulaSize {
        FormulaSize {
            vars: self.num_vars(),
            clauses: self.num_clauses(),
        }
    }

    pub fn is_satisfied_by(&self, model: &Assignment) -> bool {
        self.cnf.is_satisfied_by(model)
    }

    /// A fresh solver holding this formula.
    pub fn solver(&self, seed: u64) -> Solver {
        let mut solver = Solver::new(SolverConfig {
            seed,
            ..SolverConfig::default()
        });
        self.cnf.load_into(&mut solver);
        solver
    }

    pub fn write_dimacs<W: Write>(&self, out: W) -> io::Result<()> {
        write_dimacs(&self.cnf, out)
    }

    pub fn write_symbols<W: Write>(&self, out: W) -> io::Result<()> {
        self.symbols.write_dump(out)
    }
}

impl ClauseSink for CnfFormula {
    fn fresh_var(&mut self) -> Var {
        self.cnf.new_var()
    }

    fn emit(&mut self, clause: &[Lit]) {
        self.cnf.emit(clause)
    }
}
