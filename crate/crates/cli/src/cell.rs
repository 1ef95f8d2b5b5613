//! Evaluation of one pretzel parameter cell, shared by `pretzel` and `scan`.

use std::collections::BTreeMap;
use std::time::Instant;

use charring::pretzel::{
    closed_form_generator, expected_leading_term, pretzel_words, q_at_z0_closed_form, q_poly, word_generator,
    LeadingTerm, PretzelParams,
};
use charring::reducedness::{check_reduced, ReducednessReport};
use charring::{Degree, Strategy, TraceEngine, TracePolynomial, Var};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Check {
    ClosedFormVsWord,
    Z0,
    LeadingTerm,
    Reduced,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::ClosedFormVsWord, Check::Z0, Check::LeadingTerm, Check::Reduced];

    pub fn name(self) -> &'static str {
        match self {
            Check::ClosedFormVsWord => "closed_form_vs_word",
            Check::Z0 => "z0",
            Check::LeadingTerm => "leading_term",
            Check::Reduced => "reduced",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Degrees {
    pub total: Option<u32>,
    pub x: Option<u32>,
    pub y: Option<u32>,
    pub z: Option<u32>,
}

impl Degrees {
    fn of(f: &TracePolynomial) -> Degrees {
        Degrees {
            total: f.total_degree().finite(),
            x: f.degree_in(Var::X).finite(),
            y: f.degree_in(Var::Y).finite(),
            z: f.degree_in(Var::Z).finite(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub params: PretzelParams,
    pub generator: TracePolynomial,
    pub q: TracePolynomial,
    pub degrees: Degrees,
    pub leading_term: LeadingTerm,
    pub report: Option<ReducednessReport>,
    pub checks: BTreeMap<Check, bool>,
    pub errors: Vec<String>,
    pub timings_ms: BTreeMap<&'static str, f64>,
}

impl Cell {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.checks.values().all(|&ok| ok)
    }

    pub fn y_degree_text(&self) -> String {
        match self.leading_term.y_degree {
            Degree::Finite(d) => d.to_string(),
            Degree::MinusInfinity => "-inf".into(),
        }
    }
}

fn timed<T>(timings: &mut BTreeMap<&'static str, f64>, key: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(key, start.elapsed().as_secs_f64() * 1e3);
    out
}

/// Computes `κ·Q` and `Q` at `p` and runs the requested checks. Library
/// errors are recorded on the cell rather than aborting the caller.
pub fn evaluate(p: PretzelParams, checks: &[Check], strategy: Strategy) -> Result<Cell, charring::Error> {
    let mut timings = BTreeMap::new();
    let q = timed(&mut timings, "q", || q_poly(p))?;
    let generator = closed_form_generator(p)?;
    let mut cell = Cell {
        params: p,
        degrees: Degrees::of(&q),
        leading_term: LeadingTerm::of(&q),
        generator,
        q,
        report: None,
        checks: BTreeMap::new(),
        errors: Vec::new(),
        timings_ms: BTreeMap::new(),
    };
    for &check in checks {
        let outcome: Result<bool, charring::Error> = match check {
            Check::ClosedFormVsWord => timed(&mut timings, "closed_form_vs_word", || {
                pretzel_words(p)?;
                let mut engine = TraceEngine::with_strategy(strategy);
                Ok(word_generator(p, &mut engine)? == cell.generator)
            }),
            Check::Z0 => timed(&mut timings, "z0", || Ok(cell.q.substitute_zero(Var::Z) == q_at_z0_closed_form(p)?)),
            Check::LeadingTerm => {
                timed(&mut timings, "leading_term", || Ok(cell.leading_term == expected_leading_term(p)))
            }
            Check::Reduced => timed(&mut timings, "reduced", || {
                let report = check_reduced(p)?;
                let ok = report.verdict.is_reduced();
                cell.report = Some(report);
                Ok(ok)
            }),
        };
        match outcome {
            Ok(ok) => {
                cell.checks.insert(check, ok);
            }
            Err(e) => {
                cell.checks.insert(check, false);
                cell.errors.push(format!("{}: {e}", check.name()));
            }
        }
    }
    cell.timings_ms = timings;
    Ok(cell)
}
