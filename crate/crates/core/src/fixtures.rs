//! The bundled houses workspace and the expected results of the four
//! operations on its two soft sets `F` and `G`.

use std::io::{self, Write};

use crate::expr::eval_str;
use crate::io::{load_workspace, render_soft_set, Workspace};
use crate::model::SoftSet;

pub const HOUSES: &str = include_str!("../examples/houses.sset");

pub fn houses() -> Workspace {
    load_workspace(HOUSES)
        .expect("bundled workspace is well formed")
        .0
}

/// A known discrepancy between the published worked example and the
/// operation's definition. The fixture asserts the definition's value.
#[derive(Debug, Clone, Copy)]
pub struct Erratum {
    pub parameter: &'static str,
    pub printed: &'static [&'static str],
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub label: &'static str,
    pub expression: &'static str,
    pub expected: &'static [(&'static str, &'static [&'static str])],
    pub erratum: Option<Erratum>,
}

const U: &[&str] = &["h1", "h2", "h3", "h4", "h5"];

pub const FIXTURES: [Fixture; 4] = [
    Fixture {
        label: "intersection",
        expression: "F & G",
        expected: &[
            ("e3", &["h2", "h4"]),
            ("e4", &["h1"]),
            ("e5", &["h2", "h3", "h4", "h5"]),
            ("e7", &["h3"]),
        ],
        erratum: None,
    },
    Fixture {
        label: "union",
        expression: "F | G",
        expected: &[
            ("e1", &["h3", "h5"]),
            ("e2", &["h2", "h3", "h4", "h5"]),
            ("e3", &["h2", "h4"]),
            ("e4", &["h1"]),
            ("e5", U),
            ("e6", &["h3"]),
            ("e7", &["h3", "h5"]),
        ],
        erratum: None,
    },
    Fixture {
        label: "complement",
        expression: "F^c",
        expected: &[
            ("e1", U),
            ("e2", &["h1", "h4"]),
            ("e3", &["h1", "h3", "h5"]),
            ("e4", &["h2", "h3", "h4", "h5"]),
            ("e6", U),
            ("e7", &["h1", "h2", "h4"]),
            ("e8", U),
        ],
        erratum: None,
    },
    Fixture {
        label: "difference",
        expression: "F - G",
        expected: &[
            ("e2", &["h2", "h3", "h5"]),
            ("e5", &["h1"]),
            ("e7", &["h5"]),
        ],
        erratum: Some(Erratum {
            parameter: "e2",
            printed: &["h2"],
        }),
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub label: &'static str,
    pub expected: String,
    pub actual: String,
}

impl FixtureOutcome {
    pub fn matched(&self) -> bool {
        self.expected == self.actual
    }
}

/// Evaluates every fixture against the bundled workspace and compares the
/// canonical renderings.
pub fn check_fixtures() -> Vec<FixtureOutcome> {
    let ws = houses();
    let ctx = ws.context();
    FIXTURES
        .iter()
        .map(|fx| {
            let expected = SoftSet::new(ctx, fx.expected.iter().map(|(p, o)| (*p, o.iter())))
                .expect("fixture names exist in the houses context");
            let actual =
                eval_str(fx.expression, ws.bindings(), ctx).expect("fixture expressions evaluate");
            FixtureOutcome {
                label: fx.label,
                expected: render_soft_set("result", &expected),
                actual: render_soft_set("result", &actual),
            }
        })
        .collect()
}

/// Writes a diff-style report of all fixtures. Returns true when every
/// fixture matches.
pub fn write_report(out: &mut dyn Write) -> io::Result<bool> {
    let outcomes = check_fixtures();
    for (fx, outcome) in FIXTURES.iter().zip(&outcomes) {
        writeln!(out, "== {} ({}) ==", fx.label, fx.expression)?;
        let expected: Vec<&str> = outcome.expected.lines().skip(1).collect();
        let actual: Vec<&str> = outcome.actual.lines().skip(1).collect();
        for line in &expected {
            let mark = if actual.contains(line) { ' ' } else { '-' };
            writeln!(out, "{mark} {}", line.trim_start())?;
        }
        for line in actual.iter().filter(|l| !expected.contains(l)) {
            writeln!(out, "+ {}", line.trim_start())?;
        }
        if let Some(erratum) = fx.erratum {
            let derived = fx
                .expected
                .iter()
                .find(|(p, _)| *p == erratum.parameter)
                .map(|(_, objs)| objs.join(", "))
                .unwrap_or_default();
            writeln!(
                out,
                "ERRATUM {}: the published worked example prints {{{}}}; the definition yields {{{}}}",
                erratum.parameter,
                erratum.printed.join(", "),
                derived
            )?;
        }
        writeln!(
            out,
            "{}",
            if outcome.matched() {
                "match"
            } else {
                "MISMATCH"
            }
        )?;
    }
    let matched = outcomes.iter().filter(|o| o.matched()).count();
    writeln!(out, "{matched}/{} fixtures match", outcomes.len())?;
    Ok(matched == outcomes.len())
}
