//! Images of integer polynomials in 𝔽_p[v] used to bound gcd degrees.
//!
//! If `h = gcd(f, g)` in ℤ[x, y, z] and the leading coefficients of `f`
//! and `g` in `v` survive evaluation at a point mod `p`, the image of `h`
//! keeps its `v`-degree and divides both images. The degree of the image
//! gcd is therefore an upper bound for `deg_v h`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{TracePolynomial, Var};

/// 2^61 - 1.
pub(super) const PRIME: u64 = (1 << 61) - 1;

fn reduce_big(c: &BigInt) -> u64 {
    let r = c % BigInt::from(PRIME);
    let r = if r.sign() == num_bigint::Sign::Minus { r + BigInt::from(PRIME) } else { r };
    r.to_u64().expect("residue fits in u64")
}

fn mul(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(PRIME)) as u64
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, PRIME - 2)
}

/// Image of `f` in 𝔽_p[main] after evaluating the other variables at
/// `point` (the entry for `main` is ignored). Index = power of `main`.
fn image(f: &TracePolynomial, main: Var, point: &[u64; 3]) -> Vec<u64> {
    let deg = f.degree_in(main).finite().map_or(0, |d| d as usize + 1);
    let mut out = vec![0u64; deg];
    for (m, c) in f.terms() {
        let mut t = reduce_big(c);
        for v in Var::ALL {
            if v != main {
                t = mul(t, pow(point[v.index()], u64::from(m.exp(v))));
            }
        }
        let k = m.exp(main) as usize;
        out[k] = add(out[k], t);
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of the monic gcd of two nonzero univariate polynomials mod p.
fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a <- a mod b
        let lead_inv = inv(*b.last().unwrap());
        while a.len() >= b.len() {
            let q = mul(*a.last().unwrap(), lead_inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = sub(a[shift + i], mul(q, bc));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Deterministic stream of evaluation points.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        (z ^ (z >> 31)) % PRIME
    }
}

/// Upper bound on `deg_main gcd(f, g)` from two good evaluation points, or
/// `None` if no point keeping both leading coefficients was found.
pub(super) fn gcd_degree_bound(f: &TracePolynomial, g: &TracePolynomial, main: Var) -> Option<u32> {
    let mut rng = SplitMix(0x005E_ED0F_C4A2_u64 ^ (f.num_terms() as u64).rotate_left(17) ^ g.num_terms() as u64);
    let df = f.degree_in(main).finite()? as usize;
    let dg = g.degree_in(main).finite()? as usize;
    let mut best: Option<u32> = None;
    let mut good = 0;
    for _ in 0..16 {
        let point = [rng.next(), rng.next(), rng.next()];
        let fi = image(f, main, &point);
        let gi = image(g, main, &point);
        if fi[df] == 0 || gi[dg] == 0 {
            continue;
        }
        let d = gcd_degree(fi, gi) as u32;
        best = Some(best.map_or(d, |b| b.min(d)));
        good += 1;
        if good == 2 || d == 0 {
            break;
        }
    }
    best
}
