use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{self, Write};

use crate::sat::Var;

use super::EncodeError;

/// A ground atom: predicate name applied to a tuple of domain elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<String>,
}

impl Atom {
    pub fn new<I, S>(predicate: &str, args: I) -> Atom
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        Atom {
            predicate: predicate.to_string(),
            args: args.into_iter().map(|a| a.to_string()).collect(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "({})", self.args.join(","))?;
        }
        Ok(())
    }
}

/// Bidirectional atom/variable map.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    by_atom: HashMap<Atom, Var>,
    by_var: BTreeMap<Var, Atom>,
}

impl SymbolTable {
    pub fn new() -> SymbolTable {
        SymbolTable::default()
    }

    pub fn insert(&mut self, atom: Atom, var: Var) -> Result<(), EncodeError> {
        if self.by_atom.contains_key(&atom) {
            return Err(EncodeError::DuplicateSymbol(atom.to_string()));
        }
        if self.by_var.contains_key(&var) {
            return Err(EncodeError::VariableTaken(var.get()));
        }
        self.by_atom.insert(atom.clone(), var);
        self.by_var.insert(var, atom);
        Ok(())
    }

    pub fn var(&self, atom: &Atom) -> Option<Var> {
        self.by_atom.get(atom).copied()
    }

    pub fn atom(&self, var: Var) -> Option<&Atom> {
        self.by_var.get(&var)
    }

    pub fn len(&self) -> usize {
        self.by_var.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_var.is_empty()
    }

    /// Entries in variable order.
    pub fn iter(&self) -> impl Iterator<Item = (Var, &Atom)> {
        self.by_var.iter().map(|(v, a)| (*v, a))
    }

    /// One `name ↦ variable` line per atom, in variable order.
    pub fn write_dump<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (var, atom) in self.iter() {
            writeln!(out, "{atom} ↦ {}", var.get())?;
        }
        Ok(())
    }
}
