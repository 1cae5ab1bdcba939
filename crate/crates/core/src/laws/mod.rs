//! Executable algebraic laws for soft sets and the machinery that checks them.
//!
//! A [`Law`] is an identity over a fixed number of soft-set arguments. The
//! catalog in [`law_catalog`] covers the identity, domination, idempotent,
//! commutative, associative, distributive and De Morgan laws together with the
//! subset, complement and difference characterizations. Laws are checked
//! either over every argument tuple of a small context ([`check_exhaustive`])
//! or over seeded random tuples ([`check_random`]); violations are shrunk to a
//! locally minimal counterexample before being reported.

mod catalog;
mod check;
mod generate;
mod mutants;
mod shrink;

use std::fmt;

use thiserror::Error;

use crate::model::{ContextRef, ModelError, SoftSet};

pub use catalog::{law_catalog, lookup};
pub use check::{
    check_exhaustive, check_exhaustive_with_cap, check_random, exhaustive_case_count, CheckMode,
    CheckReport, Counterexample, Outcome,
};
pub use generate::{
    enumerate_soft_sets, enumerate_soft_sets_with_cap, enumeration_count, random_soft_set,
    random_soft_set_with, DEFAULT_CAP,
};
pub use mutants::mutant_catalog;
pub use shrink::shrink;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    /// Case counts are always powers of two, so only the exponent is kept.
    #[error("enumeration of 2^{log2_count} cases exceeds the cap of {cap}")]
    EnumerationTooLarge { log2_count: u64, cap: u64 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Result of evaluating a law on one argument tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// A conditional law whose hypothesis does not apply to the tuple.
    Vacuous,
    Violated(String),
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }
}

pub type LawCheck = fn(&ContextRef, &[SoftSet]) -> Result<Verdict, ModelError>;

/// A named identity over `arity` soft sets.
#[derive(Clone, Copy)]
pub struct Law {
    pub id: &'static str,
    pub arity: usize,
    pub statement: &'static str,
    check: LawCheck,
}

impl Law {
    pub const fn new(
        id: &'static str,
        arity: usize,
        statement: &'static str,
        check: LawCheck,
    ) -> Law {
        Law {
            id,
            arity,
            statement,
            check,
        }
    }

    /// Evaluates the law on one tuple. Panics if the tuple length differs
    /// from the arity.
    pub fn check(&self, ctx: &ContextRef, args: &[SoftSet]) -> Result<Verdict, ModelError> {
        assert_eq!(
            args.len(),
            self.arity,
            "law `{}` takes {} arguments",
            self.id,
            self.arity
        );
        (self.check)(ctx, args)
    }

    /// Names used for the arguments when a counterexample is rendered.
    pub fn argument_names(&self) -> &'static [&'static str] {
        match self.arity {
            4 => &["F1", "G1", "F2", "G2"],
            n => &["F", "G", "H"][..n.min(3)],
        }
    }
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("statement", &self.statement)
            .finish()
    }
}

/// `Holds` when both sides agree, otherwise a violation naming both sides.
pub(crate) fn same(lhs: &SoftSet, rhs: &SoftSet) -> Verdict {
    if lhs == rhs {
        Verdict::Holds
    } else {
        Verdict::Violated(format!("lhs = {lhs}, rhs = {rhs}"))
    }
}
