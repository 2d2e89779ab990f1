//! Encoding layer shared by all problem packs: a named symbol table,
//! Tseitin gates, sequential-counter cardinality constraints, cardinality
//! minimization by linear descent, and founded reachability via level
//! variables.

mod cardinality;
mod formula;
mod minimize;
mod reachability;
mod symbols;
mod tseitin;

pub use cardinality::{add_cardinality, exactly_one, CardinalityConstraint, SequentialCounter, Sense};
pub use formula::{CnfFormula, FormulaSize};
pub use minimize::{minimize_cardinality, minimize_in_solver, MinimizeError, MinimizeOptions, Minimum};
pub use reachability::{encode_founded_reachability, level_width, require_less, Level, OrderLevel};
pub use symbols::{Atom, SymbolTable};
pub use tseitin::{tseitin_and, tseitin_implies, tseitin_or};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("connective needs at least one operand")]
    EmptyOperands,
    #[error("atom {0} is already bound to a variable")]
    DuplicateSymbol(String),
    #[error("variable {0} already names another atom")]
    VariableTaken(u32),
}
