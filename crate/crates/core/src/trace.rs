//! Trace polynomials `P_u(x, y, z)` of words in the free group on `a, w`,
//! where `x = tr a`, `y = tr w`, `z = tr aw`.
//!
//! Two independent routes are provided, both driven only by the identity
//! `P_{BAC} + P_{BA⁻¹C} = P_A P_{BC}`:
//!
//! * [`Strategy::Reduction`] rewrites the word itself. Exponents of
//!   syllables are walked towards 1, and words made of unit syllables are
//!   split as `b·c·d` around the shortest segment `c` between two syllables
//!   of the same generator. Results are memoised under
//!   [`Word::canonical_trace_key`].
//! * [`Strategy::Frame`] scans the word once from the left, carrying the
//!   four traces `(P_p, P_{pa}, P_{pw}, P_{paw})` of the prefix `p`. Each
//!   letter acts on this frame by a fixed linear map over ℤ[x, y, z].
//!
//! The reduction route can take time exponential in the number of
//! syllables with exponent other than 1; the frame route is linear in the
//! word length.

use std::collections::HashMap;

use crate::poly::{Monomial, TracePolynomial, Var};
use crate::word::{Generator, TraceKey, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Reduction,
    Frame,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
}

/// Computes trace polynomials. Not `Sync`: give each thread its own engine.
#[derive(Debug, Clone, Default)]
pub struct TraceEngine {
    strategy: Strategy,
    cache: Option<HashMap<TraceKey, TracePolynomial>>,
    stats: CacheStats,
}

impl TraceEngine {
    /// Reduction strategy with memoisation.
    pub fn new() -> Self {
        TraceEngine::with_strategy(Strategy::Reduction)
    }

    pub fn with_strategy(strategy: Strategy) -> Self {
        TraceEngine { strategy, cache: Some(HashMap::new()), stats: CacheStats::default() }
    }

    pub fn without_cache(mut self) -> Self {
        self.cache = None;
        self
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, HashMap::len)
    }

    pub fn clear_cache(&mut self) {
        if let Some(c) = self.cache.as_mut() {
            c.clear();
        }
    }

    pub fn trace_poly(&mut self, u: &Word) -> TracePolynomial {
        match self.strategy {
            Strategy::Reduction => self.reduce(u),
            Strategy::Frame => self.frame(u),
        }
    }

    /// `P_u - P_v`.
    pub fn trace_diff(&mut self, u: &Word, v: &Word) -> TracePolynomial {
        let pu = self.trace_poly(u);
        let pv = self.trace_poly(v);
        &pu - &pv
    }

    fn lookup(&mut self, key: &TraceKey) -> Option<TracePolynomial> {
        let hit = self.cache.as_ref()?.get(key).cloned();
        match hit {
            Some(_) => self.stats.hits += 1,
            None => self.stats.misses += 1,
        }
        hit
    }

    fn store(&mut self, key: TraceKey, p: &TracePolynomial) {
        if let Some(c) = self.cache.as_mut() {
            c.insert(key, p.clone());
        }
    }

    fn frame(&mut self, u: &Word) -> TracePolynomial {
        let key = u.canonical_trace_key();
        if let Some(p) = self.lookup(&key) {
            return p;
        }
        let p = frame_trace(&key.word());
        self.store(key, &p);
        p
    }

    fn reduce(&mut self, u: &Word) -> TracePolynomial {
        let key = u.canonical_trace_key();
        if let Some(p) = self.lookup(&key) {
            return p;
        }
        let p = self.reduce_cyclic(&key.word());
        self.store(key, &p);
        p
    }

    /// `c` is cyclically reduced.
    fn reduce_cyclic(&mut self, c: &Word) -> TracePolynomial {
        if c.is_empty() {
            return TracePolynomial::constant(2);
        }
        let syl = cyclic_syllables(c);
        if let Some(i) = syl.iter().position(|&(_, e)| e != 1) {
            return self.exponent_step(&rotate(&syl, i));
        }
        match syl.len() {
            1 => generator_trace(syl[0].0),
            2 => TracePolynomial::z(),
            _ => self.split_step(&syl),
        }
    }

    /// `g^e C` with `e ∉ {0, 1}`: moves `e` one or two steps towards 1.
    fn exponent_step(&mut self, syl: &[(Generator, i64)]) -> TracePolynomial {
        let (g, e) = syl[0];
        let with_exp = |k: i64| {
            let mut s = syl.to_vec();
            s[0].1 = k;
            Word::from_syllables(&s)
        };
        let (near, far) = if e > 1 { (e - 1, e - 2) } else { (e + 1, e + 2) };
        let p_near = self.reduce(&with_exp(near));
        let p_far = self.reduce(&with_exp(far));
        &(&generator_trace(g) * &p_near) - &p_far
    }

    /// All exponents are 1 and at least three syllables: pick `k < l` with
    /// the same generator and `l - k` minimal, then
    /// `P_{bcd} = P_{bd} P_c - P_{bc⁻¹d}`.
    fn split_step(&mut self, syl: &[(Generator, i64)]) -> TracePolynomial {
        let (k, l) = shortest_repeat(syl);
        let b = Word::from_syllables(&syl[..=k]);
        let c = Word::from_syllables(&syl[k + 1..=l]);
        let d = Word::from_syllables(&syl[l + 1..]);
        let bd = b.multiply(&d);
        let bcd_inv = b.multiply(&c.inverse()).multiply(&d);
        let p_c = self.reduce(&c);
        let p_bd = self.reduce(&bd);
        let p_inv = self.reduce(&bcd_inv);
        &(&p_bd * &p_c) - &p_inv
    }
}

fn generator_trace(g: Generator) -> TracePolynomial {
    match g {
        Generator::A => TracePolynomial::x(),
        Generator::W => TracePolynomial::y(),
    }
}

/// Syllables of a cyclically reduced word read cyclically, so the first and
/// last syllable never share a generator unless there is only one.
fn cyclic_syllables(c: &Word) -> Vec<(Generator, i64)> {
    let letters = c.letters();
    let n = letters.len();
    match (1..n).find(|&i| letters[i].generator != letters[i - 1].generator) {
        None => c.syllables(),
        Some(_) => {
            // Rotate so the word starts where a syllable starts.
            let start = (0..n).find(|&i| letters[i].generator != letters[(i + n - 1) % n].generator).unwrap_or(0);
            c.rotate(start).syllables()
        }
    }
}

fn rotate<T: Clone>(v: &[T], i: usize) -> Vec<T> {
    let mut out = v[i..].to_vec();
    out.extend_from_slice(&v[..i]);
    out
}

fn shortest_repeat(syl: &[(Generator, i64)]) -> (usize, usize) {
    let mut best = (0, syl.len());
    for k in 0..syl.len() {
        if let Some(off) = syl[k + 1..].iter().position(|s| s.0 == syl[k].0) {
            let l = k + 1 + off;
            if l - k < best.1 - best.0 {
                best = (k, l);
            }
        }
    }
    best
}

/// Traces `(P_p, P_{pa}, P_{pw}, P_{paw})` of a prefix `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub unit: TracePolynomial,
    pub a: TracePolynomial,
    pub w: TracePolynomial,
    pub aw: TracePolynomial,
}

fn shifted(p: &TracePolynomial, m: Monomial) -> TracePolynomial {
    p.shift(&m).expect("exponent overflow")
}

fn times(p: &TracePolynomial, vars: &[Var]) -> TracePolynomial {
    let mut m = Monomial::ONE;
    for v in vars {
        m.exps[v.index()] += 1;
    }
    shifted(p, m)
}

impl Frame {
    /// Frame of the empty prefix: `(2, x, y, z)`.
    pub fn identity() -> Frame {
        Frame {
            unit: TracePolynomial::constant(2),
            a: TracePolynomial::x(),
            w: TracePolynomial::y(),
            aw: TracePolynomial::z(),
        }
    }

    /// `P_{pwa} = (z - xy) P_p + x P_{pw} + y P_{pa} - P_{paw}`.
    pub fn wa(&self) -> TracePolynomial {
        let mut out = times(&self.unit, &[Var::Z]);
        out -= &times(&self.unit, &[Var::X, Var::Y]);
        out += &times(&self.w, &[Var::X]);
        out += &times(&self.a, &[Var::Y]);
        out -= &self.aw;
        out
    }

    /// Appends `a`.
    pub fn push_a(self) -> Frame {
        // P_{paa} = x P_{pa} - P_p,  P_{paaw} = x P_{paw} - P_{pw}
        let aa = &times(&self.a, &[Var::X]) - &self.unit;
        let aaw = &times(&self.aw, &[Var::X]) - &self.w;
        Frame { unit: self.a, a: aa, w: self.aw, aw: aaw }
    }

    /// Appends `a⁻¹`.
    pub fn push_a_inv(self) -> Frame {
        // P_{pA} = x P_p - P_{pa},  P_{pAw} = x P_{pw} - P_{paw}
        let unit = &times(&self.unit, &[Var::X]) - &self.a;
        let w = &times(&self.w, &[Var::X]) - &self.aw;
        Frame { unit, a: self.unit, aw: self.w, w }
    }

    /// Appends `w`.
    pub fn push_w(self) -> Frame {
        // P_{pww} = y P_{pw} - P_p,  P_{pwaw} = z P_{pw} - x P_p + P_{pa}
        let wa = self.wa();
        let ww = &times(&self.w, &[Var::Y]) - &self.unit;
        let mut waw = times(&self.w, &[Var::Z]);
        waw -= &times(&self.unit, &[Var::X]);
        waw += &self.a;
        Frame { unit: self.w, a: wa, w: ww, aw: waw }
    }

    /// Appends `w⁻¹`.
    pub fn push_w_inv(self) -> Frame {
        // P_{pW} = y P_p - P_{pw},  P_{pWa} = y P_{pa} - P_{pwa},
        // P_{pWaw} = y P_{paw} - P_{pwaw}
        let wa = self.wa();
        let unit = &times(&self.unit, &[Var::Y]) - &self.w;
        let big_wa = &times(&self.a, &[Var::Y]) - &wa;
        let mut waw = times(&self.w, &[Var::Z]);
        waw -= &times(&self.unit, &[Var::X]);
        waw += &self.a;
        let big_waw = &times(&self.aw, &[Var::Y]) - &waw;
        Frame { w: self.unit, unit, a: big_wa, aw: big_waw }
    }

    pub fn push(self, l: crate::word::Letter) -> Frame {
        match (l.generator, l.inverted) {
            (Generator::A, false) => self.push_a(),
            (Generator::A, true) => self.push_a_inv(),
            (Generator::W, false) => self.push_w(),
            (Generator::W, true) => self.push_w_inv(),
        }
    }

    pub fn of_word(u: &Word) -> Frame {
        u.letters().iter().fold(Frame::identity(), |f, &l| f.push(l))
    }
}

/// `P_u` by a single left-to-right scan.
pub fn frame_trace(u: &Word) -> TracePolynomial {
    Frame::of_word(u).unit
}

/// `P_u` with a fresh memoising reduction engine.
pub fn trace_poly(u: &Word) -> TracePolynomial {
    TraceEngine::new().trace_poly(u)
}
