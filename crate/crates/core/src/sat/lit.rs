use std::fmt;
use std::ops::Not;

/// A propositional variable. Indices are 1-based and dense.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    /// Panics on 0, which is not a valid variable index.
    pub fn new(index: u32) -> Var {
        assert!(index >= 1, "variable indices start at 1");
        Var(index)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based position used for internal tables.
    #[inline]
    pub(crate) fn idx(self) -> usize {
        (self.0 - 1) as usize
    }

    pub fn pos(self) -> Lit {
        Lit::new(self, true)
    }

    pub fn neg(self) -> Lit {
        Lit::new(self, false)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A variable together with a polarity, packed as `2 * (var - 1) + negated`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    #[inline]
    pub fn new(var: Var, positive: bool) -> Lit {
        Lit(((var.0 - 1) << 1) | (!positive as u32))
    }

    #[inline]
    pub fn var(self) -> Var {
        Var((self.0 >> 1) + 1)
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    #[inline]
    pub(crate) fn code(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub(crate) fn from_code(code: u32) -> Lit {
        Lit(code)
    }

    /// Signed DIMACS integer: `+v` or `-v`.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var().0 as i64;
        if self.is_positive() {
            v
        } else {
            -v
        }
    }

    /// Inverse of [`Lit::to_dimacs`]; `None` for 0 or out-of-range values.
    pub fn from_dimacs(value: i64) -> Option<Lit> {
        if value == 0 || value.unsigned_abs() > u32::MAX as u64 / 2 {
            return None;
        }
        Some(Lit::new(Var(value.unsigned_abs() as u32), value > 0))
    }
}

impl Not for Lit {
    type Output = Lit;
    #[inline]
    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "{}", self.var())
        } else {
            write!(f, "¬{}", self.var())
        }
    }
}

/// Sorts and deduplicates `lits`. Returns `false` if the clause is a tautology.
pub fn normalize_clause(lits: &mut Vec<Lit>) -> bool {
    lits.sort_unstable();
    lits.dedup();
    // complementary literals are adjacent after sorting
    !lits.windows(2).any(|w| w[0].var() == w[1].var())
}

/// A total assignment over the variables `1..=len`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Assignment {
        Assignment { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, var: Var) -> bool {
        self.values[var.idx()]
    }

    pub fn lit(&self, lit: Lit) -> bool {
        self.value(lit.var()) == lit.is_positive()
    }

    pub fn satisfies(&self, clause: &[Lit]) -> bool {
        clause.iter().any(|&l| self.lit(l))
    }

    pub fn count_true(&self, lits: &[Lit]) -> usize {
        lits.iter().filter(|&&l| self.lit(l)).count()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.values
    }
}
