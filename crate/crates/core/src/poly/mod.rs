//! Sparse polynomials in ℤ[x, y, z] with arbitrary-precision coefficients.
//!
//! Terms are kept in a map ordered by graded lexicographic order with
//! `x > y > z`; zero coefficients are never stored. The plaintext form
//! lists terms from the largest monomial down, e.g.
//! `x*y*z - x^2 - y^2 - z^2 + 4`.

mod gcd;
mod heuristic;
mod modular;
mod parse;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use gcd::{is_squarefree, multivariate_gcd, pseudo_divides, squarefree_witness};
pub use parse::parse_poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }
}

impl std::str::FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "x" => Ok(Var::X),
            "y" => Ok(Var::Y),
            "z" => Ok(Var::Z),
            _ => Err(Error::Syntax { offset: 0, message: format!("unknown variable {s:?}") }),
        }
    }
}

/// `x^e[0] y^e[1] z^e[2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(ex: u32, ey: u32, ez: u32) -> Monomial {
        Monomial { exps: [ex, ey, ez] }
    }

    pub fn var(v: Var) -> Monomial {
        let mut exps = [0; 3];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = [0; 3];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_add(other.exps[i]).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { exps })
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0; 3];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(Monomial { exps })
    }

    fn with_exp(mut self, v: Var, e: u32) -> Monomial {
        self.exps[v.index()] = e;
        self
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Degree of a polynomial in one variable; the zero polynomial has degree
/// [`Degree::MinusInfinity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::MinusInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An element of ℤ[x, y, z].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TracePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TracePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term<T: Into<BigInt>>(c: T, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TracePolynomial { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut p = TracePolynomial::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms from the largest monomial to the smallest.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms.keys().map(|m| m.total_degree()).max().map_or(Degree::MinusInfinity, |d| Degree::Finite(d as u32))
    }

    pub fn degree_in(&self, v: Var) -> Degree {
        self.terms.keys().map(|m| m.exp(v)).max().map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Degree in `v`, with the zero polynomial mapped to `None`.
    fn deg(&self, v: Var) -> Option<u32> {
        self.degree_in(v).finite()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Coefficient of the highest power of `v`, a polynomial in the other
    /// two variables. Zero for the zero polynomial.
    pub fn leading_coeff_in(&self, v: Var) -> TracePolynomial {
        match self.deg(v) {
            None => TracePolynomial::zero(),
            Some(d) => self.coeff_in(v, d),
        }
    }

    /// Coefficient of `v^k`.
    pub fn coeff_in(&self, v: Var, k: u32) -> TracePolynomial {
        TracePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// All coefficients with respect to `v`, indexed by power.
    pub fn coefficients_in(&self, v: Var) -> Vec<TracePolynomial> {
        let Some(d) = self.deg(v) else {
            return Vec::new();
        };
        let mut out = vec![TracePolynomial::zero(); d as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].terms.insert(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// `Σ coeffs[k] · v^k`. The coefficients must not involve `v`.
    pub fn from_coefficients(v: Var, coeffs: &[TracePolynomial]) -> TracePolynomial {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                debug_assert_eq!(m.exp(v), 0);
                terms.insert(m.with_exp(v, k as u32), a.clone());
            }
        }
        TracePolynomial { terms }
    }

    pub fn partial_derivative(&self, v: Var) -> TracePolynomial {
        TracePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) > 0)
                .map(|(m, c)| {
                    let e = m.exp(v);
                    (m.with_exp(v, e - 1), c * BigInt::from(e))
                })
                .collect(),
        }
    }

    /// Sets `v = 0`.
    pub fn substitute_zero(&self, v: Var) -> TracePolynomial {
        TracePolynomial {
            terms: self.terms.iter().filter(|(m, _)| m.exp(v) == 0).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Replaces `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &TracePolynomial) -> TracePolynomial {
        let coeffs = self.coefficients_in(v);
        let mut acc = TracePolynomial::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn map_coefficients<F: FnMut(&BigInt) -> BigInt>(&self, mut f: F) -> TracePolynomial {
        TracePolynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn scale(&self, k: &BigInt) -> TracePolynomial {
        if k.is_zero() {
            return TracePolynomial::zero();
        }
        TracePolynomial { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, by: &Monomial) -> Result<TracePolynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.checked_mul(by)?, c.clone());
        }
        Ok(TracePolynomial { terms })
    }

    pub fn try_mul(&self, other: &TracePolynomial) -> Result<TracePolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(TracePolynomial::zero());
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let prod = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                }
            }
        }
        Ok(TracePolynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn pow(&self, k: u32) -> TracePolynomial {
        let mut acc = TracePolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the integer content and makes the leading coefficient
    /// positive. Zero stays zero.
    pub fn primitive(&self) -> TracePolynomial {
        let g = self.integer_content();
        if g.is_zero() {
            return TracePolynomial::zero();
        }
        let g = if self.leading_term().is_some_and(|(_, c)| c.is_negative()) { -g } else { g };
        if g.is_one() {
            return self.clone();
        }
        TracePolynomial { terms: self.terms.iter().map(|(m, c)| (*m, c / &g)).collect() }
    }

    /// Negates if needed so that the leading coefficient is positive.
    pub fn normalize_sign(self) -> TracePolynomial {
        if self.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            -self
        } else {
            self
        }
    }

    pub fn evaluate(&self, x: Complex64, y: Complex64, z: Complex64) -> Complex64 {
        // Horner in x over coefficients in y, z, each evaluated by Horner in y then z.
        let mut acc = Complex64::new(0.0, 0.0);
        let by_x = self.coefficients_in(Var::X);
        for cx in by_x.iter().rev() {
            let mut inner = Complex64::new(0.0, 0.0);
            for cy in cx.coefficients_in(Var::Y).iter().rev() {
                let mut zz = Complex64::new(0.0, 0.0);
                for cz in cy.coefficients_in(Var::Z).iter().rev() {
                    let c = cz.terms.get(&Monomial::ONE).and_then(|c| c.to_f64()).unwrap_or(0.0);
                    zz = zz * z + c;
                }
                inner = inner * y + zz;
            }
            acc = acc * x + inner;
        }
        acc
    }

    pub fn evaluate_integer(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> BigInt {
        let point = [x, y, z];
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate() {
                t *= num_traits::pow::pow((*p).clone(), m.exps[i] as usize);
            }
            acc += t;
        }
        acc
    }
}

impl Zero for TracePolynomial {
    fn zero() -> Self {
        TracePolynomial::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TracePolynomial {
    fn one() -> Self {
        TracePolynomial::one()
    }
}

impl From<i64> for TracePolynomial {
    fn from(c: i64) -> Self {
        TracePolynomial::constant(c)
    }
}

impl From<BigInt> for TracePolynomial {
    fn from(c: BigInt) -> Self {
        TracePolynomial::constant(c)
    }
}

impl AddAssign<&TracePolynomial> for TracePolynomial {
    fn add_assign(&mut self, rhs: &TracePolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&TracePolynomial> for TracePolynomial {
    fn sub_assign(&mut self, rhs: &TracePolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for TracePolynomial {
    type Output = TracePolynomial;

    fn neg(mut self) -> TracePolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &TracePolynomial {
    type Output = TracePolynomial;

    fn neg(self) -> TracePolynomial {
        -self.clone()
    }
}

impl Add<&TracePolynomial> for &TracePolynomial {
    type Output = TracePolynomial;

    fn add(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&TracePolynomial> for &TracePolynomial {
    type Output = TracePolynomial;

    fn sub(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&TracePolynomial> for &TracePolynomial {
    type Output = TracePolynomial;

    /// Panics on exponent overflow; see [`TracePolynomial::try_mul`].
    fn mul(self, rhs: &TracePolynomial) -> TracePolynomial {
        self.try_mul(rhs).expect("monomial exponent overflow")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<TracePolynomial> for TracePolynomial {
            type Output = TracePolynomial;
            fn $method(self, rhs: TracePolynomial) -> TracePolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&TracePolynomial> for TracePolynomial {
            type Output = TracePolynomial;
            fn $method(self, rhs: &TracePolynomial) -> TracePolynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<TracePolynomial> for &TracePolynomial {
            type Output = TracePolynomial;
            fn $method(self, rhs: TracePolynomial) -> TracePolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for TracePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<TracePolynomial> {
        parse_poly(s)
    }
}

/// JSON form: `[[coeff, ex, ey, ez], ...]` with decimal-string coefficients
/// in canonical (descending) term order.
impl Serialize for TracePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&(c.to_string(), m.exps[0], m.exps[1], m.exps[2]))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TracePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(String, u32, u32, u32)> = Vec::deserialize(d)?;
        let mut p = TracePolynomial::zero();
        for (c, ex, ey, ez) in raw {
            let c: BigInt = c.parse().map_err(|e| D::Error::custom(format!("bad coefficient {c:?}: {e}")))?;
            p.add_term(Monomial::new(ex, ey, ez), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn p(s: &str) -> TracePolynomial {
        s.parse().unwrap()
    }

    pub(crate) fn kappa() -> TracePolynomial {
        p("x*y*z + 4 - x^2 - y^2 - z^2")
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(TracePolynomial::x() * TracePolynomial::y(), p("x*y"));
        let (x, y, z) = (TracePolynomial::x(), TracePolynomial::y(), TracePolynomial::z());
        let two = TracePolynomial::constant(2);
        let expr = (&z * &x - &y) * &y - (&z * &z - &two);
        assert_eq!(expr, p("x*y*z + 2 - y^2 - z^2"));
        let f = kappa();
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("x*y*z + 2 - y^2 - z^2").to_string(), "x*y*z - y^2 - z^2 + 2");
        assert_eq!(kappa().to_string(), "x*y*z - x^2 - y^2 - z^2 + 4");
        assert_eq!(p("-3*x^2*z + y").to_string(), "-3*x^2*z + y");
        assert_eq!(TracePolynomial::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn evaluation() {
        let f = p("x*y*z + 2 - y^2 - z^2");
        let two = Complex64::new(2.0, 0.0);
        assert_eq!(f.evaluate(two, two, two), Complex64::new(2.0, 0.0));
        assert_eq!(f.evaluate_integer(&2.into(), &2.into(), &2.into()), BigInt::from(2));
        let zero = TracePolynomial::zero();
        assert_eq!(zero.evaluate(two, two, two), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x*y*z + 2 - y^2 - z^2").partial_derivative(Var::Y), p("x*z - 2*y"));
        assert!(p("y^3").partial_derivative(Var::X).is_zero());
        assert_eq!(kappa().partial_derivative(Var::Z), p("x*y - 2*z"));
    }

    #[test]
    fn substitution() {
        assert_eq!(p("x*y*z + 2 - y^2 - z^2").substitute_zero(Var::Z), p("2 - y^2"));
        assert!(p("x").substitute_zero(Var::X).is_zero());
        assert_eq!(p("x^2 + y").substitute(Var::X, &p("y - 1")), p("y^2 - y + 1"));
    }

    #[test]
    fn degrees() {
        let f = p("x*y*z + 2 - y^2 - z^2");
        assert_eq!(f.degree_in(Var::Y), Degree::Finite(2));
        assert_eq!(f.leading_coeff_in(Var::Y), p("-1"));
        assert_eq!(f.leading_coeff_in(Var::X), p("y*z"));
        assert_eq!(TracePolynomial::zero().degree_in(Var::Y), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
    }

    #[test]
    fn coefficient_split_roundtrip() {
        let f = kappa() * p("x - z^3 + 7");
        for v in Var::ALL {
            assert_eq!(TracePolynomial::from_coefficients(v, &f.coefficients_in(v)), f);
        }
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let big = TracePolynomial::term(1, Monomial::new(u32::MAX, 0, 0));
        assert_eq!(big.try_mul(&TracePolynomial::x()), Err(Error::ExponentOverflow));
    }

    #[test]
    fn json_form() {
        let f = p("x*y*z + 4 - x^2 - y^2 - z^2");
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"[["1",1,1,1],["-1",2,0,0],["-1",0,2,0],["-1",0,0,2],["4",0,0,0]]"#);
        let back: TracePolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let huge = p("123456789012345678901234567890*x - 1");
        let back: TracePolynomial = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }

    pub(crate) fn arb_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = TracePolynomial> {
        prop::collection::vec(((0..=max_deg), (0..=max_deg), (0..=max_deg), -20i64..=20), 0..=max_terms).prop_map(
            move |ts| {
                TracePolynomial::from_terms(
                    ts.into_iter()
                        .filter(|(a, b, c, _)| a + b + c <= max_deg)
                        .map(|(a, b, c, k)| (Monomial::new(a, b, c), BigInt::from(k))),
                )
            },
        )
    }

    fn arb_point() -> impl Strategy<Value = (Complex64, Complex64, Complex64)> {
        let c = || (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| Complex64::new(a, b));
        (c(), c(), c())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(f in arb_poly(8, 6), g in arb_poly(8, 6), h in arb_poly(8, 6)) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f - &g) + &g, f.clone());
        }

        #[test]
        fn evaluation_is_a_homomorphism(f in arb_poly(6, 6), g in arb_poly(6, 6), (x, y, z) in arb_point()) {
            let lhs = (&f * &g).evaluate(x, y, z);
            let rhs = f.evaluate(x, y, z) * g.evaluate(x, y, z);
            prop_assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0));
            let lhs = (&f + &g).evaluate(x, y, z);
            let rhs = f.evaluate(x, y, z) + g.evaluate(x, y, z);
            prop_assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0));
        }

        #[test]
        fn plaintext_roundtrip(f in arb_poly(8, 10)) {
            prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }

        #[test]
        fn json_roundtrip(f in arb_poly(8, 10)) {
            let s = serde_json::to_string(&f).unwrap();
            let back: TracePolynomial = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
            prop_assert_eq!(back, f);
        }
    }
}
