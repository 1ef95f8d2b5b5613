//! Reducedness of `ℂ[x, y, z] / (f)` for the pretzel generator `f = κ·Q`.
//!
//! A principal ideal is radical exactly when its generator is zero or
//! squarefree, and squarefreeness over ℚ is decided by the gradient gcd.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{is_squarefree, multivariate_gcd, pseudo_divides, squarefree_witness, TracePolynomial};
use crate::pretzel::{kappa, q_poly, PretzelParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ReducedZeroIdeal,
    Reduced,
    NotSquarefree,
}

impl Verdict {
    pub fn is_reduced(self) -> bool {
        self != Verdict::NotSquarefree
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducednessReport {
    pub params: PretzelParams,
    pub generator_zero: bool,
    pub q_squarefree: bool,
    pub kappa_squarefree: bool,
    pub kappa_divides_q: bool,
    pub gcd_kappa_q_constant: bool,
    pub verdict: Verdict,
    /// A nonconstant repeated factor of the generator, when there is one.
    pub witness: Option<TracePolynomial>,
}

/// Squarefree verdict of a nonzero `f`, with the nonconstant gradient gcd
/// as witness when it fails.
pub fn check_generic_squarefree(f: &TracePolynomial) -> Result<(bool, Option<TracePolynomial>)> {
    let w = squarefree_witness(f)?;
    Ok((w.is_none(), w))
}

/// Verdict for the ideal generated by an arbitrary `f`.
pub fn generator_verdict(f: &TracePolynomial) -> Verdict {
    if f.is_zero() {
        Verdict::ReducedZeroIdeal
    } else if is_squarefree(f).expect("nonzero") {
        Verdict::Reduced
    } else {
        Verdict::NotSquarefree
    }
}

/// Decides reducedness at `p` from the closed form `κ·Q`, with each factor
/// condition computed separately and cross-checked against the verdict on
/// the whole generator.
pub fn check_reduced(p: PretzelParams) -> Result<ReducednessReport> {
    let q = q_poly(p)?;
    let k = kappa();
    let g = &k * &q;
    let kappa_squarefree = is_squarefree(&k)?;
    let kappa_divides_q = pseudo_divides(&k, &q);
    let gcd_kappa_q_constant = multivariate_gcd(&k, &q).is_constant();

    if g.is_zero() {
        return Ok(ReducednessReport {
            params: p,
            generator_zero: true,
            q_squarefree: false,
            kappa_squarefree,
            kappa_divides_q,
            gcd_kappa_q_constant,
            verdict: Verdict::ReducedZeroIdeal,
            witness: None,
        });
    }

    let (q_squarefree, _) = check_generic_squarefree(&q)?;
    let (whole, witness) = check_generic_squarefree(&g)?;
    let parts = q_squarefree && kappa_squarefree && gcd_kappa_q_constant;
    if whole != parts || (kappa_divides_q && gcd_kappa_q_constant) {
        return Err(Error::Inconsistent(format!(
            "reducedness flags disagree at {p}: whole={whole}, q={q_squarefree}, kappa={kappa_squarefree}, \
             divides={kappa_divides_q}, gcd_constant={gcd_kappa_q_constant}"
        )));
    }
    Ok(ReducednessReport {
        params: p,
        generator_zero: false,
        q_squarefree,
        kappa_squarefree,
        kappa_divides_q,
        gcd_kappa_q_constant,
        verdict: if whole { Verdict::Reduced } else { Verdict::NotSquarefree },
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_s;
    use crate::poly::multivariate_gcd;

    fn p(s: &str) -> TracePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn generic_squarefree() {
        let k = kappa();
        let (ok, w) = check_generic_squarefree(&k.pow(2)).unwrap();
        assert!(!ok);
        assert_eq!(w.unwrap().normalize_sign(), k.clone().normalize_sign());
        assert_eq!(check_generic_squarefree(&k).unwrap(), (true, None));
        assert_eq!(check_generic_squarefree(&cheb_s(10, &TracePolynomial::y()).unwrap()).unwrap(), (true, None));
        assert!(check_generic_squarefree(&TracePolynomial::zero()).is_err());
    }

    #[test]
    fn named_cells() {
        let r = check_reduced(PretzelParams::new(0, -1)).unwrap();
        assert_eq!(r.verdict, Verdict::ReducedZeroIdeal);
        assert!(r.generator_zero);

        let r = check_reduced(PretzelParams::new(1, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Reduced);
        assert!(r.q_squarefree && !r.kappa_divides_q && r.gcd_kappa_q_constant && r.kappa_squarefree);
        assert_eq!(q_poly(PretzelParams::new(1, 3)).unwrap(), p("z*(z*y - x)"));
    }

    #[test]
    fn verdict_depends_on_squarefree_part() {
        let q = q_poly(PretzelParams::new(2, 1)).unwrap();
        let g = &kappa() * &q;
        assert_eq!(generator_verdict(&g), Verdict::Reduced);
        assert_eq!(generator_verdict(&g.scale(&(-6).into())), Verdict::Reduced);
        for sq in [p("x - 1"), p("y*z + 3"), kappa()] {
            assert_eq!(generator_verdict(&(&g * &sq.pow(2))), Verdict::NotSquarefree, "{sq}");
        }
        assert_eq!(generator_verdict(&TracePolynomial::zero()), Verdict::ReducedZeroIdeal);
    }

    #[test]
    fn common_factor_breaks_reducedness() {
        // κ·(κ·y) has the repeated factor κ, found through the gcd flag.
        let q = &kappa() * &TracePolynomial::y();
        assert!(!multivariate_gcd(&kappa(), &q).is_constant());
        assert_eq!(generator_verdict(&(&kappa() * &q)), Verdict::NotSquarefree);
    }

    #[test]
    fn small_grid_is_reduced() {
        for m in -1..=2 {
            for n in -1..=2 {
                let r = check_reduced(PretzelParams::new(m, n)).unwrap();
                assert!(r.verdict.is_reduced(), "{r:?}");
                assert_eq!(r.generator_zero, (m, n) == (0, -1));
            }
        }
    }
}
