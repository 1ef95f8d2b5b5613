//! Words in the free group on two letters `a` and `w`.
//!
//! A [`Word`] is always freely reduced. The textual syntax uses lowercase
//! letters for the generators and uppercase letters for their inverses, so
//! `awAW` is the commutator `a w a⁻¹ w⁻¹`. Parenthesised groups and single
//! letters may carry an integer exponent: `(awaW)^-1`, `a^3`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Upper bound on the number of letters a parsed or powered word may hold.
pub const MAX_WORD_LEN: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    W,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::A => Generator::W,
            Generator::W => Generator::A,
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverted: bool,
}

impl Letter {
    pub const A: Letter = Letter { generator: Generator::A, inverted: false };
    pub const A_INV: Letter = Letter { generator: Generator::A, inverted: true };
    pub const W: Letter = Letter { generator: Generator::W, inverted: false };
    pub const W_INV: Letter = Letter { generator: Generator::W, inverted: true };

    pub fn inverse(self) -> Letter {
        Letter { generator: self.generator, inverted: !self.inverted }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::A_INV),
            'w' => Some(Letter::W),
            'W' => Some(Letter::W_INV),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match (self.generator, self.inverted) {
            (Generator::A, false) => 'a',
            (Generator::A, true) => 'A',
            (Generator::W, false) => 'w',
            (Generator::W, true) => 'W',
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Appends `l` to `buf`, cancelling against the last letter if possible.
fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn a() -> Word {
        Word::letter(Letter::A)
    }

    pub fn w() -> Word {
        Word::letter(Letter::W)
    }

    /// Builds a word from arbitrary letters, freely reducing them.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut buf = Vec::new();
        for l in letters {
            push_reduced(&mut buf, l);
        }
        Word { letters: buf }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut buf = self.letters.clone();
        buf.reserve(other.len());
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        Word { letters: buf }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `k`-th power; `k` may be zero or negative.
    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let times = k.unsigned_abs();
        let mut buf = Vec::new();
        for _ in 0..times {
            for &l in &base.letters {
                push_reduced(&mut buf, l);
            }
        }
        Word { letters: buf }
    }

    /// Letters in reversed order with signs unchanged.
    pub fn reverse(&self) -> Word {
        // A reduced word stays reduced under reversal.
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }

    /// Strips matching inverse letters from both ends; the result is
    /// conjugate to `self`.
    pub fn cyclically_reduced(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i] == l[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(f), Some(l)) => self.letters.len() < 2 || *f != l.inverse(),
            _ => true,
        }
    }

    /// Cyclic shift by `k` letters to the left. Only meaningful for
    /// cyclically reduced words; other inputs are reduced after the shift.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::identity();
        }
        let k = k % self.len();
        let mut v = self.letters[k..].to_vec();
        v.extend_from_slice(&self.letters[..k]);
        Word::from_letters(v)
    }

    /// Key shared by every word whose trace is forced equal by conjugation,
    /// inversion or reversal.
    pub fn canonical_trace_key(&self) -> TraceKey {
        TraceKey(canonical_representative(&self.cyclically_reduced()))
    }

    /// Maximal runs of a single generator, as `(generator, exponent)`.
    pub fn syllables(&self) -> Vec<(Generator, i64)> {
        let mut out: Vec<(Generator, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((g, e)) if *g == l.generator => *e += l.sign(),
                _ => out.push((l.generator, l.sign())),
            }
        }
        out
    }

    /// Inverse of [`Word::syllables`]; zero exponents are dropped and the
    /// result is freely reduced.
    pub fn from_syllables(syl: &[(Generator, i64)]) -> Word {
        let mut buf = Vec::new();
        for &(g, e) in syl {
            let l = Letter { generator: g, inverted: e < 0 };
            for _ in 0..e.unsigned_abs() {
                push_reduced(&mut buf, l);
            }
        }
        Word { letters: buf }
    }
}

/// Lexicographically least word among all rotations of `c`, its inverse,
/// its reversal and its reversed inverse. `c` must be cyclically reduced.
fn canonical_representative(c: &Word) -> Vec<Letter> {
    let n = c.len();
    if n == 0 {
        return Vec::new();
    }
    let inv = c.inverse();
    let rev = c.reverse();
    let rev_inv = inv.reverse();
    let mut best: Option<Vec<Letter>> = None;
    for cand in [c, &inv, &rev, &rev_inv] {
        let s = &cand.letters;
        for k in 0..n {
            let better = match &best {
                None => true,
                Some(b) => s[k..].iter().chain(&s[..k]).lt(b.iter()),
            };
            if better {
                let mut v = s[k..].to_vec();
                v.extend_from_slice(&s[..k]);
                best = Some(v);
            }
        }
    }
    best.unwrap_or_default()
}

/// Memoisation key for traces; see [`Word::canonical_trace_key`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceKey(Vec<Letter>);

impl TraceKey {
    /// The representative word of the orbit. It is cyclically reduced.
    pub fn word(&self) -> Word {
        Word { letters: self.0.clone() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let s = <std::borrow::Cow<'de, str>>::deserialize(d)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses the word syntax described in the module docs.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut p = WordParser { src: text, pos: 0 };
    let w = p.sequence()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected character {c:?}")));
    }
    Ok(w)
}

struct WordParser<'a> {
    src: &'a str,
    pos: usize,
}

impl WordParser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax { offset: self.pos, message }
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut acc = Word::identity();
        loop {
            self.skip_ws();
            let atom = match self.peek() {
                Some('(') => {
                    self.bump();
                    let inner = self.sequence()?;
                    self.skip_ws();
                    if self.peek() != Some(')') {
                        return Err(self.error("expected ')'".into()));
                    }
                    self.bump();
                    inner
                }
                Some(c) => match Letter::from_char(c) {
                    Some(l) => {
                        self.bump();
                        Word::letter(l)
                    }
                    None => return Ok(acc),
                },
                None => return Ok(acc),
            };
            let atom = self.exponent(atom)?;
            if acc.len() + atom.len() > MAX_WORD_LEN {
                return Err(self.error("word too long".into()));
            }
            acc = acc.multiply(&atom);
        }
    }

    fn exponent(&mut self, atom: Word) -> Result<Word> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.bump();
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.bump();
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        let digits = &self.src[start..self.pos];
        let k: i64 = digits
            .parse()
            .map_err(|e| Error::Syntax { offset: start, message: format!("bad exponent {digits:?}: {e}") })?;
        let len = (atom.len() as u128) * u128::from(k.unsigned_abs());
        if len > MAX_WORD_LEN as u128 {
            return Err(Error::Syntax { offset: start, message: "word too long".into() });
        }
        Ok(atom.power(k))
    }
}
