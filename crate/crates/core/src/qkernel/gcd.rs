//! Multivariate gcd over the rationals by content extraction and a
//! recursive primitive polynomial remainder sequence.
//!
//! The main variable is a shared one of least degree. Powers of q are
//! units in the Laurent ring and never contribute to a gcd.

use std::collections::BTreeMap;

use num_traits::One;

use super::monomial::{Monomial, Var};
use super::poly::MPoly;
use super::{KernelError, Rational};

const VAR_ORDER: [Var; 5] = [Var::Q, Var::Z, Var::S, Var::X, Var::U];

/// Greatest common divisor, normalized to coprime integer coefficients
/// with a positive trailing coefficient and no power of q as a factor.
pub fn poly_gcd(a: &MPoly, b: &MPoly) -> Result<MPoly, KernelError> {
    if a.is_zero() && b.is_zero() {
        return Err(KernelError::GcdOfZeros);
    }
    Ok(gcd_inner(a, b))
}

/// Strips q-powers (units) and returns the nonnegative-exponent part.
fn strip_q(p: &MPoly) -> MPoly {
    match p.min_degree(Var::Q) {
        Some(e) if e != 0 => p.mul_monomial(&Monomial::q(-e)),
        _ => p.clone(),
    }
}

fn normalize(p: &MPoly) -> MPoly {
    strip_q(&p.primitive().1)
}

fn gcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let a = strip_q(a);
    let b = strip_q(b);
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    // Monomial content in the non-q variables.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = ma.gcd(&mb);
    let a = a.mul_monomial(&ma.inv());
    let b = b.mul_monomial(&mb.inv());
    let mono_poly = MPoly::monomial(Rational::one(), mono);

    // Prefer a shared variable of least degree: shorter remainder sequences.
    let shared = VAR_ORDER
        .into_iter()
        .filter(|v| a.contains_var(*v) && b.contains_var(*v))
        .min_by_key(|v| a.degree_in(*v).max(b.degree_in(*v)));
    let main = shared.or_else(|| VAR_ORDER.into_iter().find(|v| a.contains_var(*v) || b.contains_var(*v)));
    let Some(v) = main else {
        return mono_poly;
    };
    let g = match (a.contains_var(v), b.contains_var(v)) {
        (true, true) => gcd_in_var(&a, &b, v),
        (true, false) => gcd_inner(&content_in(&a, v), &b),
        (false, true) => gcd_inner(&a, &content_in(&b, v)),
        (false, false) => unreachable!(),
    };
    normalize(&(&g * &mono_poly))
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &MPoly, v: Var) -> MPoly {
    let coeffs = p.coefficients_in(v);
    let mut it = coeffs.values();
    let first = it.next().cloned().unwrap_or_else(MPoly::zero);
    let mut g = normalize(&first);
    for c in it {
        if g.is_one() {
            break;
        }
        g = gcd_inner(&g, c);
    }
    g
}

/// Content in `v` and the primitive part, which also drops its numeric
/// content so remainder sequences keep small integers.
fn primitive_in(p: &MPoly, v: Var) -> (MPoly, MPoly) {
    let c = content_in(p, v);
    let pp = p.div_exact(&c).expect("content divides");
    (c, pp.primitive().1)
}

fn gcd_in_var(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let (ca, pa) = primitive_in(a, v);
    let (cb, pb) = primitive_in(b, v);
    let c = gcd_inner(&ca, &cb);
    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        if r1.is_zero() {
            break;
        }
        if r1.degree_in(v) == 0 {
            // r1 is a nonzero polynomial free of v; as both are primitive in
            // v the gcd is trivial in v.
            r0 = MPoly::one();
            break;
        }
        let r = pseudo_remainder(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_zero() { r } else { primitive_in(&r, v).1 };
    }
    let g = if r0.is_one() { r0 } else { primitive_in(&r0, v).1 };
    &c * &g
}

/// Pseudo-remainder of `a` by `b` as polynomials in `v`.
fn pseudo_remainder(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let bc: BTreeMap<i32, MPoly> = b.coefficients_in(v);
    let (&db, lcb) = bc.iter().next_back().expect("nonzero");
    let lcb = lcb.clone();
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let rc = r.coefficients_in(v);
        let (&dr, lcr) = rc.iter().next_back().expect("nonzero");
        if dr < db {
            return r;
        }
        let shift = MPoly::monomial(Rational::one(), Monomial::var_pow(v, dr - db));
        let t = &(&shift * lcr) * b;
        r = &(&lcb * &r) - &t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }
    fn one() -> MPoly {
        MPoly::one()
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = MPoly::int(-2).mul_monomial(&Monomial::q(1));
        let p = &p + &MPoly::int(-4);
        let g = poly_gcd(&p, &MPoly::zero()).unwrap();
        assert_eq!(g, &MPoly::int(2) + &q());
        assert!(poly_gcd(&MPoly::zero(), &MPoly::zero()).is_err());
    }

    #[test]
    fn cyclotomic_gcds() {
        let a = &one() - &q().pow(2);
        let b = &one() - &q().pow(3);
        assert_eq!(poly_gcd(&a, &b).unwrap(), &one() - &q());
        let c = &one() + &q();
        let d = &one() + &q().pow(2);
        assert_eq!(poly_gcd(&c, &d).unwrap(), one());
    }

    #[test]
    fn multivariate_gcd() {
        let z = MPoly::var(Var::Z);
        let f = &one() - &(&q() * &z);
        let g1 = &f * &(&one() + &z);
        let g2 = &f * &(&one() - &q().pow(2));
        assert_eq!(poly_gcd(&g1, &g2).unwrap(), f);
        // Laurent q-powers are units.
        let h = g1.mul_monomial(&Monomial::q(-3));
        assert_eq!(poly_gcd(&h, &g1).unwrap(), poly_gcd(&g1, &g1).unwrap());
    }
}
