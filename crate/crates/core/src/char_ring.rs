//! Generators of the universal character ring of a one-relator group
//! `⟨a, w | u = v⟩`.
//!
//! The ideal of trace relations is generated by `P_{us} - P_{vs}` for the
//! five suffixes `s ∈ {1, a, w, aw, wa}`. When the relator has the form
//! `r = ←r`, four of these collapse and the ideal is principal.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::TracePolynomial;
use crate::trace::TraceEngine;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub relator_lhs: Word,
    pub relator_rhs: Word,
}

impl Presentation {
    pub fn new(relator_lhs: Word, relator_rhs: Word) -> Self {
        Presentation { relator_lhs, relator_rhs }
    }

    /// `⟨a, w | r = ←r⟩`.
    pub fn palindromic(r: &Word) -> Self {
        Presentation::new(r.clone(), r.reverse())
    }

    pub fn swapped(&self) -> Self {
        Presentation::new(self.relator_rhs.clone(), self.relator_lhs.clone())
    }

    /// True when the right side is the reversal of the left side.
    pub fn is_palindromic(&self) -> bool {
        self.relator_lhs.reverse() == self.relator_rhs
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<a, w | {} = {}>", self.relator_lhs, self.relator_rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suffix {
    R,
    Ra,
    Rw,
    Raw,
    Rwa,
}

impl Suffix {
    pub const ALL: [Suffix; 5] = [Suffix::R, Suffix::Ra, Suffix::Rw, Suffix::Raw, Suffix::Rwa];

    pub fn word(self) -> Word {
        let s = match self {
            Suffix::R => "",
            Suffix::Ra => "a",
            Suffix::Rw => "w",
            Suffix::Raw => "aw",
            Suffix::Rwa => "wa",
        };
        s.parse().expect("valid literal")
    }

    pub fn tag(self) -> &'static str {
        match self {
            Suffix::R => "r",
            Suffix::Ra => "ra",
            Suffix::Rw => "rw",
            Suffix::Raw => "raw",
            Suffix::Rwa => "rwa",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorBundle {
    pub five: [(Suffix, TracePolynomial); 5],
    pub principal: Option<TracePolynomial>,
    pub palindromic: bool,
}

impl GeneratorBundle {
    pub fn get(&self, s: Suffix) -> &TracePolynomial {
        &self.five[s as usize].1
    }

    /// The three leading entries vanish and the last is minus the fourth.
    pub fn collapses(&self) -> bool {
        self.five[..3].iter().all(|(_, f)| f.is_zero()) && *self.get(Suffix::Rwa) == -self.get(Suffix::Raw).clone()
    }
}

/// The five trace differences for the suffixes `1, a, w, aw, wa`. The
/// principal generator is filled in when the presentation is palindromic
/// and the collapse actually occurs.
pub fn five_generators_with(p: &Presentation, engine: &mut TraceEngine) -> GeneratorBundle {
    let five = Suffix::ALL.map(|s| {
        let t = s.word();
        (s, engine.trace_diff(&p.relator_lhs.multiply(&t), &p.relator_rhs.multiply(&t)))
    });
    let palindromic = p.is_palindromic();
    let mut bundle = GeneratorBundle { five, principal: None, palindromic };
    if palindromic && bundle.collapses() {
        bundle.principal = Some(bundle.get(Suffix::Raw).clone());
    }
    bundle
}

pub fn five_generators(p: &Presentation) -> GeneratorBundle {
    five_generators_with(p, &mut TraceEngine::new())
}

/// `P_{raw} - P_{←r aw}`, after confirming that the other four generators
/// of the palindromic presentation vanish as they must.
pub fn principal_generator_with(r: &Word, engine: &mut TraceEngine) -> Result<TracePolynomial> {
    let bundle = five_generators_with(&Presentation::palindromic(r), engine);
    bundle.principal.ok_or_else(|| Error::Inconsistent(format!("generators of {r} = reverse({r}) do not collapse")))
}

pub fn principal_generator(r: &Word) -> Result<TracePolynomial> {
    principal_generator_with(r, &mut TraceEngine::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pretzel::{kappa, pretzel_words, PretzelParams};
    use crate::sl2::random_word;
    use crate::trace::Strategy;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_presentation() {
        let b = five_generators(&Presentation::new(w("awAW"), w("awAW")));
        assert!(b.five.iter().all(|(_, f)| f.is_zero()));
        assert_eq!(principal_generator(&Word::identity()).unwrap(), TracePolynomial::zero());
    }

    #[test]
    fn non_palindromic_has_no_principal() {
        let b = five_generators(&Presentation::new(w("aaw"), w("awa")));
        assert!(!b.palindromic);
        assert!(b.principal.is_none());
        let b = five_generators(&Presentation::new(w("awAW"), Word::identity()));
        assert!(!b.get(Suffix::R).is_zero());
    }

    #[test]
    fn random_relators_collapse() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut e = TraceEngine::with_strategy(Strategy::Frame);
        for i in 0..100 {
            let s = random_word(&mut rng, 9);
            let r = match i % 3 {
                0 => s.clone(),
                1 => s.multiply(&s.reverse()),
                _ => s.multiply(&Word::a()).multiply(&s.reverse()),
            };
            let b = five_generators_with(&Presentation::palindromic(&r), &mut e);
            assert!(b.palindromic);
            assert!(b.collapses(), "r = {r}");
            let swapped = five_generators_with(&Presentation::palindromic(&r).swapped(), &mut e);
            assert_eq!(swapped.principal.unwrap(), -b.principal.unwrap(), "r = {r}");
        }
    }

    #[test]
    fn pretzel_relators() {
        let (_, r) = pretzel_words(PretzelParams::new(1, 3)).unwrap();
        let z_zy_x: TracePolynomial = "z*(z*y - x)".parse().unwrap();
        assert_eq!(principal_generator(&r).unwrap(), &kappa() * &z_zy_x);
        let b = five_generators(&Presentation::palindromic(&r));
        assert_eq!(*b.get(Suffix::Rwa), -(&kappa() * &z_zy_x));

        let (_, r) = pretzel_words(PretzelParams::new(0, -1)).unwrap();
        assert!(principal_generator(&r).unwrap().is_zero());
    }
}
