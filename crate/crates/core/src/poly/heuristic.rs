//! Heuristic gcd by evaluation at large integers and `ξ`-adic
//! reconstruction, after Char, Geddes and Gonnet.
//!
//! Each variable is replaced by a large integer `ξ` in turn until only
//! integers remain; the integer gcd is then lifted back one variable at a
//! time by reading off its balanced base-`ξ` digits. A candidate is only
//! returned after trial division of both inputs, so any answer is a common
//! divisor; callers certify that it is the greatest one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{TracePolynomial, Var};

const ATTEMPTS: usize = 6;

fn max_norm(f: &TracePolynomial) -> BigInt {
    f.terms.values().map(|c| c.abs()).max().unwrap_or_default()
}

/// `f` with `v` replaced by the integer `xi`.
fn eval_at(f: &TracePolynomial, v: Var, xi: &BigInt) -> TracePolynomial {
    let deg = f.degree_in(v).finite().unwrap_or(0) as usize;
    let mut powers = Vec::with_capacity(deg + 1);
    powers.push(BigInt::one());
    for i in 0..deg {
        let next = &powers[i] * xi;
        powers.push(next);
    }
    let mut out = TracePolynomial::zero();
    for (m, c) in &f.terms {
        let k = m.exp(v) as usize;
        out.add_term(m.with_exp(v, 0), c * &powers[k]);
    }
    out
}

/// Balanced residue of `c` modulo `xi`, in `(-xi/2, xi/2]`.
fn balanced_rem(c: &BigInt, xi: &BigInt) -> BigInt {
    let r = c.mod_floor(xi);
    if &r * 2 > *xi {
        r - xi
    } else {
        r
    }
}

/// Inverse of [`eval_at`] for polynomials whose coefficients are below
/// `xi / 2` in absolute value.
fn lift(h: &TracePolynomial, v: Var, xi: &BigInt) -> TracePolynomial {
    let mut out = TracePolynomial::zero();
    for (m, c) in &h.terms {
        let mut c = c.clone();
        let mut k = 0u32;
        while !c.is_zero() {
            let d = balanced_rem(&c, xi);
            c = (&c - &d) / xi;
            if !d.is_zero() {
                out.add_term(m.with_exp(v, k), d);
            }
            k += 1;
        }
    }
    out
}

fn divides(h: &TracePolynomial, f: &TracePolynomial) -> bool {
    f.exact_div(h).is_some()
}

/// A common divisor in ℤ[x, y, z] of the nonzero `f` and `g`, with the
/// integer contents' gcd included, or `None` if every attempt failed.
pub(super) fn heuristic_gcd(f: &TracePolynomial, g: &TracePolynomial) -> Option<TracePolynomial> {
    let (cf, cg) = (f.integer_content(), g.integer_content());
    let c = cf.gcd(&cg);
    let Some(v) = Var::ALL.into_iter().find(|&v| f.involves(v) || g.involves(v)) else {
        return Some(TracePolynomial::constant(c));
    };
    let (f, g) = (f.primitive(), g.primitive());
    let bound = max_norm(&f).min(max_norm(&g));
    let mut xi = bound * 2 + 29;
    for _ in 0..ATTEMPTS {
        let (fi, gi) = (eval_at(&f, v, &xi), eval_at(&g, v, &xi));
        if !fi.is_zero() && !gi.is_zero() {
            if let Some(hi) = heuristic_gcd(&fi, &gi) {
                let h = lift(&hi, v, &xi).primitive();
                if !h.is_zero() && divides(&h, &f) && divides(&h, &g) {
                    return Some(h.scale(&c));
                }
            }
        }
        // Grow by an irrational-looking factor so that successive points
        // do not share structure.
        xi = &xi * 73794 / 27011 + 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::p;

    #[test]
    fn lift_inverts_evaluation() {
        let f = p("3*x^2*y - 7*x + y^3 - 11");
        let xi = BigInt::from(1000);
        assert_eq!(lift(&eval_at(&f, Var::X, &xi), Var::X, &xi), f);
    }

    #[test]
    fn finds_common_factors() {
        let common = p("x*y*z + 4 - x^2 - y^2 - z^2");
        let f = &common * &p("x - 2*y + 1");
        let g = &common * &p("z^3 + x");
        assert_eq!(heuristic_gcd(&f, &g).unwrap().normalize_sign(), common.normalize_sign());
        assert_eq!(heuristic_gcd(&p("6"), &p("4")).unwrap(), p("2"));
        assert!(heuristic_gcd(&p("x + 1"), &p("x - 1")).unwrap().is_constant());
    }
}
