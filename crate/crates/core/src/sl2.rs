//! Floating-point SL2(ℂ) matrices used as a numeric ground truth for
//! trace polynomials.

use std::ops::Mul;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::TracePolynomial;
use crate::word::{Generator, Word};

const MAX_SAMPLING_ATTEMPTS: usize = 100;

/// `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Mat2 {
        let (o, l) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        Mat2::new(l, o, o, l)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    pub fn inverse(&self) -> Mat2 {
        let det = self.det();
        Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    pub fn max_entry_norm(&self) -> f64 {
        [self.a, self.b, self.c, self.d].iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

fn random_sl2_from(rng: &mut impl Rng) -> Result<Mat2> {
    let mut entry = || Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
    for _ in 0..MAX_SAMPLING_ATTEMPTS {
        let m = Mat2::new(entry(), entry(), entry(), entry());
        let det = m.det();
        if det.norm() < 1e-6 {
            continue;
        }
        let s = det.sqrt();
        return Ok(Mat2::new(m.a / s, m.b / s, m.c / s, m.d / s));
    }
    Err(Error::SamplingFailed(MAX_SAMPLING_ATTEMPTS))
}

/// Deterministic random element of SL2(ℂ): entries with real and imaginary
/// parts uniform in [-1, 1], rescaled by `det^{-1/2}`.
pub fn random_sl2(seed: u64) -> Result<Mat2> {
    random_sl2_from(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Trace of the matrix obtained by substituting `a ↦ a_mat`, `w ↦ w_mat`.
pub fn word_trace_numeric(u: &Word, a_mat: &Mat2, w_mat: &Mat2) -> Complex64 {
    word_matrix(u, a_mat, w_mat).trace()
}

pub fn word_matrix(u: &Word, a_mat: &Mat2, w_mat: &Mat2) -> Mat2 {
    let (a_inv, w_inv) = (a_mat.inverse(), w_mat.inverse());
    u.letters().iter().fold(Mat2::identity(), |acc, l| {
        let m = match (l.generator, l.inverted) {
            (Generator::A, false) => *a_mat,
            (Generator::A, true) => a_inv,
            (Generator::W, false) => *w_mat,
            (Generator::W, true) => w_inv,
        };
        acc * m
    })
}

/// `|numeric - symbolic| / max(1, |numeric|)` with the polynomial evaluated
/// at `(tr A, tr W, tr AW)`.
pub fn relative_error(u: &Word, p: &TracePolynomial, a_mat: &Mat2, w_mat: &Mat2) -> f64 {
    let numeric = word_trace_numeric(u, a_mat, w_mat);
    let symbolic = p.evaluate(a_mat.trace(), w_mat.trace(), (*a_mat * *w_mat).trace());
    (numeric - symbolic).norm() / numeric.norm().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    pub trials: usize,
    pub max_len: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { trials: 1000, max_len: 12, seed: 42, tol: 1e-8 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleFailure {
    pub trial: usize,
    pub word: String,
    pub rel_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub config: OracleConfig,
    pub max_rel_error: f64,
    pub failures: Vec<OracleFailure>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random word of length at most `max_len` (freely reduced, so possibly
/// shorter than the sampled letter count).
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| match rng.gen_range(0..4) {
        0 => crate::word::Letter::A,
        1 => crate::word::Letter::A_INV,
        2 => crate::word::Letter::W,
        _ => crate::word::Letter::W_INV,
    }))
}

/// Inputs of trial `i`: the word and matrix pair, derived from `seed + i`.
pub fn trial_inputs(cfg: &OracleConfig, trial: usize) -> Result<(Word, Mat2, Mat2)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(trial as u64));
    let u = random_word(&mut rng, cfg.max_len);
    let a_mat = random_sl2(rng.gen())?;
    let w_mat = random_sl2(rng.gen())?;
    Ok((u, a_mat, w_mat))
}

/// Compares `trace_of(u)` with the numeric trace on `cfg.trials` seeded
/// random inputs.
pub fn verify_with<F>(cfg: &OracleConfig, mut trace_of: F) -> Result<OracleReport>
where
    F: FnMut(&Word) -> TracePolynomial,
{
    let mut report = OracleReport { config: *cfg, max_rel_error: 0.0, failures: Vec::new() };
    for trial in 0..cfg.trials {
        let (u, a_mat, w_mat) = trial_inputs(cfg, trial)?;
        let err = relative_error(&u, &trace_of(&u), &a_mat, &w_mat);
        // NaN must count as a failure.
        if err.is_nan() || err > report.max_rel_error {
            report.max_rel_error = err;
        }
        if err.is_nan() || err >= cfg.tol {
            report.failures.push(OracleFailure { trial, word: u.to_string(), rel_error: err });
        }
    }
    Ok(report)
}
