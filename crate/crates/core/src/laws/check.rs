use std::fmt;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::generate::{enumeration_count, random_soft_set_with, within_cap, DEFAULT_CAP};
use super::{enumerate_soft_sets_with_cap, shrink, Law, LawError, Verdict};
use crate::io::{render_workspace, Workspace};
use crate::model::{ContextRef, SoftSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Random,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Exhaustive => "exhaustive",
            CheckMode::Random => "random",
        })
    }
}

/// A violating argument tuple after shrinking. The context may be smaller
/// than the one the check started from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub context: ContextRef,
    pub args: Vec<SoftSet>,
    pub detail: String,
}

impl Counterexample {
    /// The tuple as a workspace, arguments bound to the law's argument names.
    pub fn to_workspace(&self, law: &Law) -> Workspace {
        let mut ws = Workspace::new(self.context.clone());
        for (name, arg) in law.argument_names().iter().zip(&self.args) {
            ws.bind(*name, arg.clone())
                .expect("argument names are valid and distinct");
        }
        ws
    }

    pub fn render(&self, law: &Law) -> String {
        render_workspace(&self.to_workspace(law))
    }

    /// Re-runs the law on the stored tuple.
    pub fn replay(&self, law: &Law) -> Result<Verdict, LawError> {
        Ok(law.check(&self.context, &self.args)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Locally minimal counterexample.
    Counterexample(Counterexample),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub law_id: &'static str,
    pub mode: CheckMode,
    /// Tuples evaluated, including vacuous ones.
    pub cases: u64,
    /// Tuples on which a conditional law's hypothesis did not apply.
    pub vacuous: u64,
    pub outcome: Outcome,
    pub seed: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }
}

/// Number of argument tuples an exhaustive check of `law` visits over `ctx`,
/// or the cap error.
pub fn exhaustive_case_count(law: &Law, ctx: &ContextRef, cap: u64) -> Result<u64, LawError> {
    within_cap(enumeration_count(ctx).saturating_mul(law.arity as u64), cap)
}

pub fn check_exhaustive(law: &Law, ctx: &ContextRef) -> Result<CheckReport, LawError> {
    check_exhaustive_with_cap(law, ctx, DEFAULT_CAP)
}

/// Evaluates `law` on every tuple of soft sets over `ctx`, stopping at the
/// first violation. Tuples are visited in enumeration order with the first
/// argument varying fastest.
pub fn check_exhaustive_with_cap(
    law: &Law,
    ctx: &ContextRef,
    cap: u64,
) -> Result<CheckReport, LawError> {
    exhaustive_case_count(law, ctx, cap)?;
    let sets = enumerate_soft_sets_with_cap(ctx, cap)?;
    let mut report = CheckReport {
        law_id: law.id,
        mode: CheckMode::Exhaustive,
        cases: 0,
        vacuous: 0,
        outcome: Outcome::Pass,
        seed: None,
    };
    let mut digits = vec![0usize; law.arity];
    let mut args: Vec<SoftSet> = digits.iter().map(|&i| sets[i].clone()).collect();
    loop {
        report.cases += 1;
        match law.check(ctx, &args)? {
            Verdict::Holds => {}
            Verdict::Vacuous => report.vacuous += 1,
            Verdict::Violated(_) => {
                report.outcome = Outcome::Counterexample(shrunk(law, ctx, args)?);
                return Ok(report);
            }
        }
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return Ok(report);
            }
            digits[pos] += 1;
            if digits[pos] < sets.len() {
                args[pos] = sets[digits[pos]].clone();
                break;
            }
            digits[pos] = 0;
            args[pos] = sets[0].clone();
            pos += 1;
        }
    }
}

const DENSITIES: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

/// Evaluates `law` on `trials` seeded random tuples and shrinks the first
/// violation found. Each soft set draws its densities from a small fixed menu
/// so that empty, full and partial images all occur.
///
/// # Panics
///
/// If `trials` is zero.
pub fn check_random(
    law: &Law,
    ctx: &ContextRef,
    trials: u64,
    seed: u64,
) -> Result<CheckReport, LawError> {
    assert!(trials >= 1, "at least one trial is required");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport {
        law_id: law.id,
        mode: CheckMode::Random,
        cases: 0,
        vacuous: 0,
        outcome: Outcome::Pass,
        seed: Some(seed),
    };
    for _ in 0..trials {
        let args: Vec<SoftSet> = (0..law.arity)
            .map(|_| {
                let defined = *DENSITIES.choose(&mut rng).expect("nonempty");
                let member = *DENSITIES.choose(&mut rng).expect("nonempty");
                random_soft_set_with(&mut rng, ctx, defined, member)
            })
            .collect();
        report.cases += 1;
        match law.check(ctx, &args)? {
            Verdict::Holds => {}
            Verdict::Vacuous => report.vacuous += 1,
            Verdict::Violated(_) => {
                report.outcome = Outcome::Counterexample(shrunk(law, ctx, args)?);
                break;
            }
        }
    }
    Ok(report)
}

fn shrunk(law: &Law, ctx: &ContextRef, args: Vec<SoftSet>) -> Result<Counterexample, LawError> {
    let (context, args) = shrink(law, ctx, args)?;
    let detail = match law.check(&context, &args)? {
        Verdict::Violated(detail) => detail,
        other => unreachable!("shrink returned a non-violating tuple: {other:?}"),
    };
    Ok(Counterexample {
        context,
        args,
        detail,
    })
}
