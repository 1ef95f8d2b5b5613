//! The (−2, 2m+1, 2n)-pretzel link: its two-generator relator, the closed
//! forms of `α`, `β`, `δ` and `Q`, and the table of leading `y`-terms of `Q`.
//!
//! The link group is `⟨a, w | r = ←r⟩` with `u = (awaw⁻¹)^{1-m} w` and
//! `r = u^{n-1} awaw⁻¹a⁻¹`, and the character ring generator is `κ · Q`
//! with `κ = xyz + 4 - x² - y² - z²`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chebyshev::cheb_s;
use crate::error::{Error, Result};
use crate::poly::{Degree, Monomial, TracePolynomial, Var};
use crate::trace::TraceEngine;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PretzelParams {
    pub m: i64,
    pub n: i64,
}

impl PretzelParams {
    pub fn new(m: i64, n: i64) -> Self {
        PretzelParams { m, n }
    }

    /// Index `2mn - 2m - n - 2` of the Chebyshev polynomial giving `Q(x, y, 0)`.
    pub fn z0_index(&self) -> i64 {
        2 * self.m * self.n - 2 * self.m - self.n - 2
    }

    /// `(-1)^{(m-1)(n-1)}`.
    pub fn sign(&self) -> i64 {
        parity_sign((self.m - 1) * (self.n - 1))
    }
}

impl fmt::Display for PretzelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={})", self.m, self.n)
    }
}

fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn poly(s: &str) -> TracePolynomial {
    s.parse().expect("valid literal")
}

/// `(awaw⁻¹)^{1-m} w`, a palindrome for every `m`.
pub fn u_word(m: i64) -> Word {
    "awaW".parse::<Word>().expect("valid literal").power(1 - m).multiply(&Word::w())
}

/// `(u, r)`. Fails if `←r` differs from `a⁻¹w⁻¹awa · u^{n-1}`.
pub fn pretzel_words(p: PretzelParams) -> Result<(Word, Word)> {
    let u = u_word(p.m);
    let un = u.power(p.n - 1);
    let r = un.multiply(&"awaWA".parse().expect("valid literal"));
    let expected_rev = "AWawa".parse::<Word>().expect("valid literal").multiply(&un);
    if r.reverse() != expected_rev {
        return Err(Error::Inconsistent(format!("reverse of r is not a⁻¹w⁻¹awa·u^(n-1) at {p}")));
    }
    Ok((u, r))
}

/// `xyz + 2 - y² - z²`, the trace of `awaw⁻¹`.
pub fn beta() -> TracePolynomial {
    poly("x*y*z + 2 - y^2 - z^2")
}

/// `xyz + 4 - x² - y² - z²`.
pub fn kappa() -> TracePolynomial {
    poly("x*y*z + 4 - x^2 - y^2 - z^2")
}

/// `xz - y`, the trace of `awa`.
fn awa_trace() -> TracePolynomial {
    poly("x*z - y")
}

/// `α = y S_{m-1}(β) - (xz - y) S_{m-2}(β)`, the trace of `u`.
pub fn alpha(m: i64) -> Result<TracePolynomial> {
    let b = beta();
    Ok(&TracePolynomial::y() * &cheb_s(m - 1, &b)? - &awa_trace() * &cheb_s(m - 2, &b)?)
}

/// `Q = (xz - y) S_{n-1}(α) - (S_m(β) - S_{m-1}(β)) S_{n-2}(α)`.
pub fn q_poly(p: PretzelParams) -> Result<TracePolynomial> {
    let a = alpha(p.m)?;
    let b = beta();
    let diff = &cheb_s(p.m, &b)? - &cheb_s(p.m - 1, &b)?;
    Ok(&awa_trace() * &cheb_s(p.n - 1, &a)? - &diff * &cheb_s(p.n - 2, &a)?)
}

/// `κ · Q` from the closed form alone.
pub fn closed_form_generator(p: PretzelParams) -> Result<TracePolynomial> {
    Ok(&kappa() * &q_poly(p)?)
}

/// `P_{raw} - P_{←r aw}` computed from the words.
pub fn word_generator(p: PretzelParams, engine: &mut TraceEngine) -> Result<TracePolynomial> {
    let (_, r) = pretzel_words(p)?;
    let aw: Word = "aw".parse().expect("valid literal");
    Ok(engine.trace_diff(&r.multiply(&aw), &r.reverse().multiply(&aw)))
}

/// `κ · Q`, checked against the trace difference of the relator words.
pub fn character_ring_generator(p: PretzelParams, engine: &mut TraceEngine) -> Result<TracePolynomial> {
    let closed = closed_form_generator(p)?;
    let from_words = word_generator(p, engine)?;
    if closed != from_words {
        return Err(Error::Inconsistent(format!("closed form and word trace difference disagree at {p}")));
    }
    Ok(closed)
}

/// `(-1)^{(m-1)(n-1)} S_{2mn-2m-n-2}(y)`.
pub fn q_at_z0_closed_form(p: PretzelParams) -> Result<TracePolynomial> {
    Ok(cheb_s(p.z0_index(), &TracePolynomial::y())?.scale(&p.sign().into()))
}

/// Highest power of `y` and its coefficient (a polynomial in `x`, `z`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    #[serde(serialize_with = "serialize_degree")]
    pub y_degree: Degree,
    pub coeff: TracePolynomial,
}

fn serialize_degree<S: serde::Serializer>(d: &Degree, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Degree::Finite(k) => s.serialize_some(k),
        Degree::MinusInfinity => s.serialize_none(),
    }
}

impl LeadingTerm {
    pub fn zero() -> LeadingTerm {
        LeadingTerm { y_degree: Degree::MinusInfinity, coeff: TracePolynomial::zero() }
    }

    pub fn of(f: &TracePolynomial) -> LeadingTerm {
        LeadingTerm { y_degree: f.degree_in(Var::Y), coeff: f.leading_coeff_in(Var::Y) }
    }

    fn new(y_degree: i64, coeff: TracePolynomial) -> LeadingTerm {
        let d = u32::try_from(y_degree).expect("table degrees are non-negative");
        LeadingTerm { y_degree: Degree::Finite(d), coeff }
    }

    fn signed(y_degree: i64, sign: i64) -> LeadingTerm {
        LeadingTerm::new(y_degree, TracePolynomial::constant(sign))
    }
}

impl fmt::Display for LeadingTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.y_degree {
            Degree::MinusInfinity => f.write_str("0"),
            Degree::Finite(0) => write!(f, "{}", self.coeff),
            Degree::Finite(1) => write!(f, "({})*y", self.coeff),
            Degree::Finite(d) => write!(f, "({})*y^{}", self.coeff, d),
        }
    }
}

/// Leading `y`-term of `Q` predicted by the ten-case degree table.
pub fn expected_leading_term(p: PretzelParams) -> LeadingTerm {
    let (m, n) = (p.m, p.n);
    let s = p.sign();
    let z2 = TracePolynomial::term(1, Monomial::new(0, 0, 2));
    match (m, n) {
        (m, n) if m >= 2 && n >= 2 => LeadingTerm::new(2 * m * n - 2 * m - n, z2.scale(&s.into())),
        (m, _) if m >= 2 => LeadingTerm::signed(-2 * m * n + 2 * m + n, -s),
        (1, n) if n >= 3 => LeadingTerm::new(n - 2, z2),
        (1, 2) => LeadingTerm::new(0, poly("z^2 - 1")),
        (1, n) => LeadingTerm::signed(2 - n, -1),
        (0, n) if n >= 0 => LeadingTerm::signed(n, parity_sign(n)),
        (0, -1) => LeadingTerm::zero(),
        (0, n) => LeadingTerm::signed(-(n + 2), parity_sign(n - 1)),
        (_, n) if n >= 1 => LeadingTerm::signed(-2 * m * n + 2 * m + n, -s),
        _ => LeadingTerm::signed(2 * m * n - 2 * m - n - 2, s),
    }
}

/// Leading `y`-term of `α`: `(-1)^{m-1} y^{|2m-1|}`.
pub fn expected_alpha_leading_term(m: i64) -> LeadingTerm {
    LeadingTerm::signed((2 * m - 1).abs(), parity_sign(m - 1))
}

/// Leading `y`-term of `S_m(β) - S_{m-1}(β)`.
pub fn expected_beta_difference_leading_term(m: i64) -> LeadingTerm {
    if m >= 0 {
        LeadingTerm::signed(2 * m, parity_sign(m))
    } else {
        LeadingTerm::signed(-2 * (m + 1), parity_sign(m - 1))
    }
}

/// `δ = z² S_{m-1}(β) + (xyz - x²z² + z² - 1) S_{m-2}(β) + S_{m-3}(β)`,
/// defined here for `m ≥ 1`.
pub fn delta(m: i64) -> Result<TracePolynomial> {
    if m < 1 {
        return Err(Error::Domain(format!("delta is only used for m >= 1, got m = {m}")));
    }
    let b = beta();
    let mid = poly("x*y*z - x^2*z^2 + z^2 - 1");
    let mut out = &poly("z^2") * &cheb_s(m - 1, &b)?;
    out += &(&mid * &cheb_s(m - 2, &b)?);
    out += &cheb_s(m - 3, &b)?;
    Ok(out)
}

/// Leading `y`-term of `δ`: `(-1)^{m-1} z² y^{2m-2}` for `m ≥ 2`, `z² - 1`
/// for `m = 1`.
pub fn expected_delta_leading_term(m: i64) -> Result<LeadingTerm> {
    match m {
        1 => Ok(LeadingTerm::new(0, poly("z^2 - 1"))),
        m if m >= 2 => Ok(LeadingTerm::new(2 * m - 2, poly("z^2").scale(&parity_sign(m - 1).into()))),
        _ => Err(Error::Domain(format!("delta is only used for m >= 1, got m = {m}"))),
    }
}

/// `Q` rebuilt as `δ S_{n-2}(α) - (xz - y) S_{n-3}(α)`, valid for `m ≥ 1`.
pub fn q_via_delta(p: PretzelParams) -> Result<TracePolynomial> {
    let a = alpha(p.m)?;
    Ok(&delta(p.m)? * &cheb_s(p.n - 2, &a)? - &awa_trace() * &cheb_s(p.n - 3, &a)?)
}

/// Every `(m, n)` with both coordinates in the inclusive ranges, ordered
/// by `m` then `n`.
pub fn grid(m_range: (i64, i64), n_range: (i64, i64)) -> Vec<PretzelParams> {
    (m_range.0..=m_range.1).flat_map(|m| (n_range.0..=n_range.1).map(move |n| PretzelParams::new(m, n))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::{frame_trace, Strategy};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn words() {
        let (u, _) = pretzel_words(PretzelParams::new(1, 5)).unwrap();
        assert_eq!(u, Word::w());
        let (u, r) = pretzel_words(PretzelParams::new(0, 0)).unwrap();
        assert_eq!(u, w("awa"));
        assert_eq!(r, u.inverse().multiply(&w("awaWA")));
        for m in -3..=4 {
            assert!(u_word(m).is_palindrome());
            for n in -3..=4 {
                pretzel_words(PretzelParams::new(m, n)).unwrap();
            }
        }
    }

    #[test]
    fn alpha_and_beta() {
        assert_eq!(beta(), frame_trace(&w("awaW")));
        assert_eq!(alpha(1).unwrap(), TracePolynomial::y());
        assert_eq!(alpha(0).unwrap(), poly("x*z - y"));
        for m in -3..=4 {
            assert_eq!(alpha(m).unwrap(), frame_trace(&u_word(m)), "m={m}");
        }
    }

    #[test]
    fn alpha_leading_terms() {
        for m in -4..=5 {
            assert_eq!(LeadingTerm::of(&alpha(m).unwrap()), expected_alpha_leading_term(m), "m={m}");
        }
    }

    #[test]
    fn beta_difference_leading_terms() {
        let b = beta();
        for m in -4..=5 {
            let d = &cheb_s(m, &b).unwrap() - &cheb_s(m - 1, &b).unwrap();
            assert_eq!(LeadingTerm::of(&d), expected_beta_difference_leading_term(m), "m={m}");
        }
    }

    #[test]
    fn q_special_cases() {
        assert_eq!(q_poly(PretzelParams::new(1, 3)).unwrap(), poly("z^2*y - x*z"));
        assert!(q_poly(PretzelParams::new(0, -1)).unwrap().is_zero());
        for n in -3..=4 {
            assert_eq!(q_poly(PretzelParams::new(0, n)).unwrap(), cheb_s(n, &poly("x*z - y")).unwrap());
        }
        let q22 = q_poly(PretzelParams::new(2, 2)).unwrap();
        assert_eq!(q22.degree_in(Var::Y), Degree::Finite(2));
        assert_eq!(q22.leading_coeff_in(Var::Y), poly("-z^2"));
    }

    #[test]
    fn generator_small_cases() {
        let mut e = TraceEngine::with_strategy(Strategy::Frame);
        let g = character_ring_generator(PretzelParams::new(1, 3), &mut e).unwrap();
        assert_eq!(g, &kappa() * &poly("z*(z*y - x)"));
        assert!(character_ring_generator(PretzelParams::new(0, -1), &mut e).unwrap().is_zero());
        let g = character_ring_generator(PretzelParams::new(2, 2), &mut e).unwrap();
        assert_eq!(LeadingTerm::of(&g.exact_div(&kappa()).unwrap()).coeff, poly("-z^2"));
    }

    #[test]
    fn z0_closed_form() {
        assert!(q_at_z0_closed_form(PretzelParams::new(1, 3)).unwrap().is_zero());
        assert_eq!(q_at_z0_closed_form(PretzelParams::new(0, 1)).unwrap(), poly("-y"));
        for p in grid((-3, 4), (-3, 4)) {
            let q = q_poly(p).unwrap();
            assert_eq!(q.substitute_zero(Var::Z), q_at_z0_closed_form(p).unwrap(), "{p}");
        }
    }

    #[test]
    fn leading_term_table() {
        assert_eq!(expected_leading_term(PretzelParams::new(2, 2)), LeadingTerm::new(2, poly("-z^2")));
        assert_eq!(expected_leading_term(PretzelParams::new(1, 2)), LeadingTerm::new(0, poly("z^2 - 1")));
        assert_eq!(expected_leading_term(PretzelParams::new(0, 3)), LeadingTerm::signed(3, -1));
        assert_eq!(expected_leading_term(PretzelParams::new(0, -1)), LeadingTerm::zero());
        for p in grid((-3, 4), (-3, 4)) {
            assert_eq!(LeadingTerm::of(&q_poly(p).unwrap()), expected_leading_term(p), "{p}");
        }
    }

    #[test]
    fn delta_forms() {
        assert_eq!(delta(1).unwrap(), poly("z^2 - 1"));
        assert!(delta(0).is_err());
        for m in 1..=4 {
            assert_eq!(LeadingTerm::of(&delta(m).unwrap()), expected_delta_leading_term(m).unwrap(), "m={m}");
            for n in -2..=4 {
                let p = PretzelParams::new(m, n);
                assert_eq!(q_via_delta(p).unwrap(), q_poly(p).unwrap(), "{p}");
            }
        }
        assert_eq!(LeadingTerm::of(&delta(2).unwrap()), LeadingTerm::new(2, poly("-z^2")));
    }

    #[test]
    fn q_at_x0_has_only_even_powers_of_z() {
        for p in grid((-3, 4), (-3, 4)) {
            let q0 = q_poly(p).unwrap().substitute_zero(Var::X);
            assert!(q0.terms().all(|(m, _)| m.exp(Var::Z) % 2 == 0), "{p}");
        }
    }
}
