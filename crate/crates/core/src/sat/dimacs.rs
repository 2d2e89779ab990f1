use std::io::{self, BufRead, Write};

use thiserror::Error;

use super::lit::{normalize_clause, Assignment, Lit, Var};
use super::{SatError, Solver};

/// A plain clause store. Clauses are normalized on insertion and
/// tautologies are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Cnf {
    num_vars: u32,
    clauses: Vec<Vec<Lit>>,
}

impl Cnf {
    pub fn new() -> Cnf {
        Cnf::default()
    }

    pub fn with_vars(num_vars: u32) -> Cnf {
        Cnf {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn new_var(&mut self) -> Var {
        self.num_vars += 1;
        Var::new(self.num_vars)
    }

    pub fn add_clause(&mut self, lits: &[Lit]) -> Result<(), SatError> {
        if let Some(l) = lits.iter().find(|l| l.var().get() > self.num_vars) {
            return Err(SatError::UnallocatedVariable(l.var().get()));
        }
        let mut c = lits.to_vec();
        if normalize_clause(&mut c) {
            self.clauses.push(c);
        }
        Ok(())
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, model: &Assignment) -> bool {
        self.clauses.iter().all(|c| model.satisfies(c))
    }

    /// Allocates the formula's variables in `solver` (which must be fresh)
    /// and adds every clause.
    pub fn load_into(&self, solver: &mut Solver) {
        debug_assert_eq!(solver.num_vars(), 0);
        for _ in 0..self.num_vars {
            solver.new_var();
        }
        for c in &self.clauses {
            solver.add_clause(c).expect("clauses only reference allocated variables");
        }
    }
}

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn write_dimacs<W: Write>(cnf: &Cnf, mut out: W) -> io::Result<()> {
    writeln!(out, "p cnf {} {}", cnf.num_vars(), cnf.num_clauses())?;
    for clause in cnf.clauses() {
        for lit in clause {
            write!(out, "{} ", lit.to_dimacs())?;
        }
        writeln!(out, "0")?;
    }
    Ok(())
}

/// Reads a DIMACS CNF file. Comment lines (`c ...`) are skipped; clauses may
/// span lines and are terminated by `0`.
pub fn parse_dimacs<R: BufRead>(input: R) -> Result<Cnf, DimacsError> {
    let mut cnf: Option<Cnf> = None;
    let mut current: Vec<Lit> = Vec::new();
    let mut last_line = 0;
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        last_line = lineno;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
            continue;
        }
        let syntax = |message: String| DimacsError::Syntax {
            line: lineno,
            message,
        };
        if trimmed.starts_with('p') {
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(syntax(format!("malformed header `{trimmed}`")));
            }
            let vars: u32 = parts[2]
                .parse()
                .map_err(|_| syntax(format!("bad variable count `{}`", parts[2])))?;
            let _declared: usize = parts[3]
                .parse()
                .map_err(|_| syntax(format!("bad clause count `{}`", parts[3])))?;
            if cnf.is_some() {
                return Err(syntax("duplicate header".into()));
            }
            cnf = Some(Cnf::with_vars(vars));
            continue;
        }
        let formula = cnf.as_mut().ok_or(DimacsError::MissingHeader)?;
        for tok in trimmed.split_whitespace() {
            let value: i64 = tok
                .parse()
                .map_err(|_| syntax(format!("bad literal `{tok}`")))?;
            if value == 0 {
                formula
                    .add_clause(&current)
                    .map_err(|e| syntax(e.to_string()))?;
                current.clear();
            } else {
                let lit = Lit::from_dimacs(value)
                    .ok_or_else(|| syntax(format!("literal `{tok}` out of range")))?;
                current.push(lit);
            }
        }
    }
    let mut formula = cnf.ok_or(DimacsError::MissingHeader)?;
    if !current.is_empty() {
        formula
            .add_clause(&current)
            .map_err(|e| DimacsError::Syntax {
                line: last_line,
                message: e.to_string(),
            })?;
    }
    Ok(formula)
}
