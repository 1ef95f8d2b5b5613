//! Divisibility, gcd and squarefreeness over ℚ for polynomials in ℤ[x, y, z].
//!
//! Everything works on primitive integer polynomials (Gauss's lemma turns
//! questions over ℚ into questions over ℤ). The gcd recurses on the number
//! of variables: split off the content with respect to a main variable,
//! then run a primitive pseudo-remainder sequence on the primitive parts.
//! Before that, modular images bound the gcd's degree in each variable;
//! when the bounds are all zero, or a heuristic common divisor attains
//! them, the answer is certified without running any sequence.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::heuristic::heuristic_gcd;
use super::modular::gcd_degree_bound;
use super::{Degree, Monomial, TracePolynomial, Var};
use crate::error::{Error, Result};

impl TracePolynomial {
    /// `self / d` if `d` divides `self` in ℤ[x, y, z].
    pub fn exact_div(&self, d: &TracePolynomial) -> Option<TracePolynomial> {
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        if d.num_terms() == 1 {
            let mut q = TracePolynomial::zero();
            for (m, c) in &self.terms {
                let (qc, rem) = c.div_rem(&lc);
                if !rem.is_zero() {
                    return None;
                }
                q.terms.insert(m.checked_div(&lm)?, qc);
            }
            return Some(q);
        }
        let mut r = self.clone();
        let mut q = TracePolynomial::zero();
        while let Some((m, c)) = r.leading_term() {
            let mq = m.checked_div(&lm)?;
            let (cq, rem) = c.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (dm, dc) in &d.terms {
                let mm = dm.checked_mul(&mq).ok()?;
                r.add_term(mm, -(dc * &cq));
            }
            q.add_term(mq, cq);
        }
        Some(q)
    }

    /// Pseudo-remainder of `self` by `g` with respect to `v`: a multiple
    /// `lc_v(g)^k · self - q · g` whose `v`-degree is below that of `g`.
    /// The power `k` is not normalised.
    pub fn pseudo_remainder(&self, g: &TracePolynomial, v: Var) -> TracePolynomial {
        let Some(m) = g.degree_in(v).finite() else {
            panic!("pseudo-remainder by zero");
        };
        let lc = g.leading_coeff_in(v);
        let lc_unit = lc.is_constant();
        let mut r = self.clone();
        while let Some(d) = r.degree_in(v).finite() {
            if d < m {
                break;
            }
            let lr = r.coeff_in(v, d);
            let shift = Monomial::var(v).pow_of(d - m);
            match lc_unit.then(|| lr.exact_div(&lc)).flatten() {
                Some(q) => {
                    r -= &(&q * g).shift(&shift).expect("exponent overflow");
                }
                None => {
                    r = &(&lc * &r) - &(&lr * g).shift(&shift).expect("exponent overflow");
                }
            }
        }
        r
    }

    /// Content with respect to `v`: the gcd over ℚ of the coefficients of
    /// the powers of `v`, as a primitive integer polynomial.
    pub fn content_in(&self, v: Var) -> TracePolynomial {
        self.content_in_by(v, Route::Certified)
    }

    fn content_in_by(&self, v: Var, route: Route) -> TracePolynomial {
        let mut coeffs: Vec<TracePolynomial> =
            self.coefficients_in(v).into_iter().filter(|c| !c.is_zero()).map(|c| c.primitive()).collect();
        coeffs.sort_by_key(|c| c.num_terms());
        let mut it = coeffs.into_iter();
        let Some(mut acc) = it.next() else {
            return TracePolynomial::zero();
        };
        for c in it {
            if acc.is_constant() {
                break;
            }
            acc = gcd_by(&acc, &c, route);
        }
        if acc.is_constant() {
            TracePolynomial::one()
        } else {
            acc
        }
    }

    /// Primitive with respect to `v` and to the integers, positive leading
    /// coefficient.
    fn primitive_in(&self, v: Var, route: Route) -> TracePolynomial {
        let p = self.primitive();
        let c = p.content_in_by(v, route);
        if c.is_one() {
            return p;
        }
        p.exact_div(&c).expect("content divides").primitive()
    }
}

impl Monomial {
    fn pow_of(self, k: u32) -> Monomial {
        Monomial { exps: self.exps.map(|e| e * k) }
    }
}

/// Gcd over ℚ, returned primitive with positive leading coefficient.
/// `gcd(f, 0)` is the primitive part of `f`; `gcd(0, 0)` is zero.
pub fn multivariate_gcd(f: &TracePolynomial, g: &TracePolynomial) -> TracePolynomial {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => TracePolynomial::zero(),
        (true, false) => g.primitive(),
        (false, true) => f.primitive(),
        (false, false) => gcd_primitive(&f.primitive(), &g.primitive()),
    }
}

/// Variable to split on: one that only one side involves if there is such,
/// else the shared variable of lowest degree.
fn main_variable(f: &TracePolynomial, g: &TracePolynomial) -> Option<Var> {
    let present: Vec<Var> = Var::ALL.into_iter().filter(|&v| f.involves(v) || g.involves(v)).collect();
    if let Some(&v) = present.iter().find(|&&v| f.involves(v) != g.involves(v)) {
        return Some(v);
    }
    present.into_iter().min_by_key(|&v| {
        let df = f.degree_in(v).finite().unwrap_or(0);
        let dg = g.degree_in(v).finite().unwrap_or(0);
        df.max(dg)
    })
}

/// How much of the gcd machinery to use. Tests compare the two routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    Certified,
    #[cfg_attr(not(test), allow(dead_code))]
    PseudoRemainderOnly,
}

/// Both inputs nonzero and primitive.
fn gcd_primitive(f: &TracePolynomial, g: &TracePolynomial) -> TracePolynomial {
    gcd_by(f, g, Route::Certified)
}

fn gcd_by(f: &TracePolynomial, g: &TracePolynomial, route: Route) -> TracePolynomial {
    if f.is_constant() || g.is_constant() {
        return TracePolynomial::one();
    }
    if f == g {
        return f.clone();
    }
    if route == Route::Certified {
        if let Some(h) = certified_gcd(f, g) {
            return h;
        }
    }
    let v = main_variable(f, g).expect("nonconstant input involves a variable");
    let cf = f.content_in_by(v, route);
    let cg = g.content_in_by(v, route);
    let c = gcd_by(&cf, &cg, route);
    let pf = f.exact_div(&cf).expect("content divides").primitive();
    let pg = g.exact_div(&cg).expect("content divides").primitive();
    let h = if pf.involves(v) && pg.involves(v) {
        gcd_univariate_primitive(pf, pg, v, route)
    } else {
        TracePolynomial::one()
    };
    (&c * &h).primitive()
}

/// The gcd when it can be certified cheaply: modular images bound its
/// degree in every variable, and a heuristic common divisor that meets all
/// the bounds must be the gcd itself.
fn certified_gcd(f: &TracePolynomial, g: &TracePolynomial) -> Option<TracePolynomial> {
    let mut bounds = Vec::new();
    for v in Var::ALL {
        if f.involves(v) && g.involves(v) {
            bounds.push((v, gcd_degree_bound(f, g, v)?));
        }
    }
    if bounds.iter().all(|&(_, b)| b == 0) {
        return Some(TracePolynomial::one());
    }
    let h = heuristic_gcd(f, g)?.primitive();
    bounds.iter().all(|&(v, b)| h.degree_in(v) == Degree::Finite(b)).then_some(h)
}

/// Gcd of two polynomials that are primitive in `v` and have positive
/// `v`-degree.
fn gcd_univariate_primitive(mut a: TracePolynomial, mut b: TracePolynomial, v: Var, route: Route) -> TracePolynomial {
    let bound = if route == Route::Certified { gcd_degree_bound(&a, &b, v) } else { None };
    if bound == Some(0) {
        return TracePolynomial::one();
    }
    let deg = |p: &TracePolynomial| p.degree_in(v).finite().unwrap_or(0);
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    if bound == Some(deg(&b)) && a.exact_div(&b).is_some() {
        return b;
    }
    loop {
        let r = a.pseudo_remainder(&b, v);
        if r.is_zero() {
            return b.primitive();
        }
        if deg(&r) == 0 {
            return TracePolynomial::one();
        }
        a = b;
        b = r.primitive_in(v, route);
    }
}

/// `None` if `f` is squarefree over ℚ, otherwise the nonconstant
/// `gcd(f, ∂f/∂x, ∂f/∂y, ∂f/∂z)`.
pub fn squarefree_witness(f: &TracePolynomial) -> Result<Option<TracePolynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("squarefreeness test"));
    }
    let mut g = f.primitive();
    if g.is_constant() {
        return Ok(None);
    }
    let mut vars: Vec<Var> = Var::ALL.into_iter().filter(|&v| f.involves(v)).collect();
    vars.sort_by_key(|&v| f.degree_in(v));
    for v in vars {
        g = multivariate_gcd(&g, &f.partial_derivative(v));
        if g.is_constant() {
            return Ok(None);
        }
    }
    Ok(Some(g))
}

/// Whether `f` has no repeated irreducible factor of positive degree.
pub fn is_squarefree(f: &TracePolynomial) -> Result<bool> {
    Ok(squarefree_witness(f)?.is_none())
}

/// Whether `d` divides `f` in ℚ[x, y, z]. The zero polynomial divides only
/// itself.
pub fn pseudo_divides(d: &TracePolynomial, f: &TracePolynomial) -> bool {
    if f.is_zero() {
        return true;
    }
    if d.is_zero() {
        return false;
    }
    divides_primitive(&d.primitive(), f)
}

fn divides_primitive(d: &TracePolynomial, f: &TracePolynomial) -> bool {
    if f.is_zero() || d.is_constant() {
        return true;
    }
    let candidates = Var::ALL.into_iter().filter(|&v| d.involves(v));
    let v = candidates
        .min_by_key(|&v| (!d.leading_coeff_in(v).is_constant(), d.degree_in(v)))
        .expect("nonconstant divisor involves a variable");
    let c = d.content_in(v);
    let p = d.exact_div(&c).expect("content divides");
    if p.involves(v) {
        if f.degree_in(v) < p.degree_in(v) {
            return false;
        }
        if !f.pseudo_remainder(&p, v).is_zero() {
            return false;
        }
    }
    c.is_constant() || f.coefficients_in(v).iter().all(|coeff| divides_primitive(&c, coeff))
}
