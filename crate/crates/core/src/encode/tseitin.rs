use crate::sat::{ClauseSink, Lit};

use super::EncodeError;

/// A literal equivalent to the conjunction of `operands`.
pub fn tseitin_and<S: ClauseSink>(sink: &mut S, operands: &[Lit]) -> Result<Lit, EncodeError> {
    match operands {
        [] => Err(EncodeError::EmptyOperands),
        [single] => Ok(*single),
        _ => {
            let out = sink.fresh_var().pos();
            let mut back = Vec::with_capacity(operands.len() + 1);
            back.push(out);
            for &op in operands {
                sink.emit(&[!out, op]);
                back.push(!op);
            }
            sink.emit(&back);
            Ok(out)
        }
    }
}

/// A literal equivalent to the disjunction of `operands`.
pub fn tseitin_or<S: ClauseSink>(sink: &mut S, operands: &[Lit]) -> Result<Lit, EncodeError> {
    match operands {
        [] => Err(EncodeError::EmptyOperands),
        [single] => Ok(*single),
        _ => {
            let out = sink.fresh_var().pos();
            let mut forth = Vec::with_capacity(operands.len() + 1);
            forth.push(!out);
            for &op in operands {
                sink.emit(&[out, !op]);
                forth.push(op);
            }
            sink.emit(&forth);
            Ok(out)
        }
    }
}

/// A literal equivalent to `premise → conclusion`.
pub fn tseitin_implies<S: ClauseSink>(sink: &mut S, premise: Lit, conclusion: Lit) -> Lit {
    tseitin_or(sink, &[!premise, conclusion]).expect("two operands")
}
