//! Denominator factors.
//!
//! Every denominator in this domain is a product of binomials `1 ± c·M`
//! (q-Pochhammer factors and their specializations). Such binomials split
//! over the rationals into cyclotomic polynomials evaluated at primitive
//! monomials, `Φ_d(B)`, each of which is irreducible. Keeping denominators
//! as products of these atoms turns reduction into trial division by small
//! known factors instead of large multivariate gcds. Anything that does not
//! fit this shape becomes a generic atom handled by [`poly_gcd`].
//!
//! [`poly_gcd`]: super::gcd::poly_gcd

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use super::poly::{rat_pow, MPoly};
use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomKind {
    /// A bare variable other than q (which is a unit).
    Var(Var),
    /// `Φ_order(base)` with `base` a primitive, lexicographically positive
    /// Laurent monomial.
    Cyclo { order: u32, base: Monomial },
    /// Anything else. `irreducible` records whether irreducibility was
    /// certified; uncertified atoms are reduced by gcd.
    Generic { irreducible: bool },
}

/// An irreducible (or, for uncertified generic atoms, merely opaque)
/// denominator factor. Identity is the normalized polynomial.
#[derive(Clone, Debug)]
pub struct Atom {
    kind: AtomKind,
    poly: Arc<MPoly>,
}

impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.poly, &other.poly) || self.poly == other.poly
    }
}
impl Eq for Atom {}

impl Hash for Atom {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poly.hash(state);
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        let rank = |a: &Atom| match a.kind {
            AtomKind::Var(_) => 0,
            AtomKind::Cyclo { .. } => 1,
            AtomKind::Generic { .. } => 2,
        };
        rank(self)
            .cmp(&rank(other))
            .then_with(|| self.poly.cmp(&other.poly))
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Atom {
    pub fn kind(&self) -> &AtomKind {
        &self.kind
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self.kind, AtomKind::Generic { irreducible: false })
    }

    pub fn var(v: Var) -> Atom {
        debug_assert!(v != Var::Q);
        Atom {
            kind: AtomKind::Var(v),
            poly: Arc::new(MPoly::var(v)),
        }
    }

    /// `Φ_order(base)` for a primitive base; normalizes the base's sign.
    pub fn cyclo(order: u32, base: Monomial) -> Atom {
        debug_assert_eq!(base.exponent_gcd(), 1);
        let base = if base.lex_sign() < 0 { base.inv() } else { base };
        let poly = normalize_atom_poly(&cyclo_in_monomial(order, &base));
        Atom {
            kind: AtomKind::Cyclo { order, base },
            poly: Arc::new(poly),
        }
    }

    fn generic(p: MPoly, irreducible: bool) -> Atom {
        Atom {
            kind: AtomKind::Generic { irreducible },
            poly: Arc::new(normalize_atom_poly(&p)),
        }
    }
}

/// Makes a polynomial primitive with positive trailing coefficient and no
/// monomial content.
fn normalize_atom_poly(p: &MPoly) -> MPoly {
    let (_, pp) = p.primitive();
    let mc = pp.monomial_content();
    if mc.is_one() {
        pp
    } else {
        pp.mul_monomial(&mc.inv())
    }
}

/// Coefficients of the cyclotomic polynomial `Φ_d(t)`, lowest degree first.
pub fn cyclotomic(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    // Φ_d(t) = Π_{e | d} (t^e - 1)^{μ(d/e)}
    let divisors: Vec<u32> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    let mut poly: Vec<i64> = vec![1];
    let mut denominators = Vec::new();
    for &e in &divisors {
        match mobius(d / e) {
            1 => poly = mul_binomial(&poly, e as usize),
            -1 => denominators.push(e as usize),
            _ => {}
        }
    }
    for e in denominators {
        poly = div_binomial(&poly, e);
    }
    // The product above is Φ_d up to sign; make it monic-positive.
    if poly.last().copied().unwrap_or(1) < 0 {
        poly.iter_mut().for_each(|c| *c = -*c);
    }
    poly
}

fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `poly * (t^e - 1)`
fn mul_binomial(poly: &[i64], e: usize) -> Vec<i64> {
    let mut out = vec![0i64; poly.len() + e];
    for (i, &c) in poly.iter().enumerate() {
        out[i + e] += c;
        out[i] -= c;
    }
    out
}

/// `poly / (t^e - 1)`, exact.
fn div_binomial(poly: &[i64], e: usize) -> Vec<i64> {
    // Solve q*(t^e - 1) = poly from the top down.
    let n = poly.len() - e;
    let mut rem = poly.to_vec();
    let mut quot = vec![0i64; n];
    for i in (0..n).rev() {
        let c = rem[i + e];
        quot[i] = c;
        rem[i + e] -= c;
        rem[i] += c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// `Φ_d(B)` as a Laurent polynomial (not yet normalized).
fn cyclo_in_monomial(d: u32, base: &Monomial) -> MPoly {
    let coeffs = cyclotomic(d);
    MPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (base.pow(j as i32), Rational::from_integer(c.into()))),
    )
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Orders `d'` with `Φ_d(t^g) = Π Φ_{d'}(t)`.
fn cyclo_of_power(d: u32, g: u32) -> Vec<u32> {
    let mut list = vec![d];
    for p in prime_factors(g) {
        let mut next = Vec::with_capacity(list.len() * 2);
        for e in list {
            next.push(e * p);
            if e % p != 0 {
                next.push(e);
            }
        }
        list = next;
    }
    list
}

/// Order `d'` with `Φ_d(-t) = ±Φ_{d'}(t)`.
fn cyclo_of_neg(d: u32) -> u32 {
    if d % 2 == 1 {
        2 * d
    } else if d % 4 == 2 {
        d / 2
    } else {
        d
    }
}

/// Atoms of `Φ_d(sign * M)` for a Laurent monomial `M != 1`.
fn cyclo_image(d: u32, negative: bool, m: &Monomial) -> Vec<Atom> {
    let d = if negative { cyclo_of_neg(d) } else { d };
    let g = m.exponent_gcd();
    let prim = Monomial(m.0.map(|e| e / g as i32));
    cyclo_of_power(d, g)
        .into_iter()
        .map(|e| Atom::cyclo(e, prim))
        .collect()
}

/// Whether `t^g - c` is irreducible over the rationals (Capelli).
fn binomial_irreducible(g: u32, c: &Rational) -> bool {
    if c.is_zero() {
        return g == 1;
    }
    for p in prime_factors(g) {
        if is_rational_power(c, p) {
            return false;
        }
    }
    if g.is_multiple_of(4) {
        // c = -4 y^4  <=>  -c/4 is a fourth power
        let t = -c / Rational::from_integer(4.into());
        if t.is_positive() && is_rational_power(&t, 4) {
            return false;
        }
    }
    true
}

fn is_rational_power(c: &Rational, p: u32) -> bool {
    if c.is_negative() && p.is_multiple_of(2) {
        return false;
    }
    let n = c.numer().abs();
    let d = c.denom().clone();
    let is_pow = |x: &BigInt| {
        let r = x.nth_root(p);
        num_traits::pow(r, p as usize) == *x
    };
    is_pow(&n) && is_pow(&d)
}

/// Factorization of a nonzero polynomial into a unit `c * q^k` and atoms.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub unit: (Rational, i32),
    pub atoms: Vec<(Atom, u32)>,
}

/// Splits `p` into a unit and atoms with `p = unit * Π atom^e`.
pub fn decompose(p: &MPoly) -> Decomposition {
    assert!(!p.is_zero(), "cannot decompose zero");
    let mut atoms: Vec<Atom> = Vec::new();
    let mc = p.monomial_content();
    for v in mc.support() {
        if v != Var::Q {
            for _ in 0..mc.exp(v) {
                atoms.push(Atom::var(v));
            }
        }
    }
    let rest = p.mul_monomial(&mc.inv());
    split_rest(&rest, &mut atoms);
    finish(p, atoms)
}

/// Collects atoms and computes the unit by exact division.
fn finish(p: &MPoly, atoms: Vec<Atom>) -> Decomposition {
    let mut product = MPoly::one();
    for a in &atoms {
        product = &product * a.poly();
    }
    let unit = p
        .div_exact(&product)
        .expect("atoms divide the decomposed polynomial");
    let (c, m) = unit.as_monomial().expect("cofactor of a decomposition is a unit");
    debug_assert!(m.support().all(|v| v == Var::Q));
    let unit = (c.clone(), m.exp(Var::Q));
    Decomposition { unit, atoms: group(atoms) }
}

fn group(mut atoms: Vec<Atom>) -> Vec<(Atom, u32)> {
    atoms.sort();
    let mut out: Vec<(Atom, u32)> = Vec::new();
    for a in atoms {
        match out.last_mut() {
            Some((b, e)) if *b == a => *e += 1,
            _ => out.push((a, 1)),
        }
    }
    out
}

/// Factors a polynomial without monomial content.
fn split_rest(rest: &MPoly, atoms: &mut Vec<Atom>) {
    if rest.is_constant() {
        return;
    }
    if rest.len() == 2 {
        split_binomial(rest, atoms);
        return;
    }
    let vars = rest.vars();
    if vars == [Var::Q] {
        split_univariate_q(rest, atoms);
        return;
    }
    if vars.len() == 1 && rest.degree_in(vars[0]) == 1 {
        atoms.push(Atom::generic(rest.clone(), true));
        return;
    }
    atoms.push(Atom::generic(rest.clone(), false));
}

fn split_binomial(rest: &MPoly, atoms: &mut Vec<Atom>) {
    let t = rest.terms();
    let (m1, c1) = &t[0];
    let (m2, c2) = &t[1];
    let ratio = c2 / c1;
    let n = m2.div(m1);
    if ratio.is_one() || (-&ratio).is_one() {
        atoms.extend(binomial_atoms(ratio.is_one(), &n));
        return;
    }
    // 1 + r N^g is irreducible iff t^g + 1/r is.
    let g = n.exponent_gcd();
    let c = -ratio.recip();
    atoms.push(Atom::generic(rest.clone(), binomial_irreducible(g, &c)));
}

/// Atoms of `1 - N` (`plus == false`) or `1 + N` (`plus == true`).
fn binomial_atoms(plus: bool, n: &Monomial) -> Vec<Atom> {
    let g = n.exponent_gcd();
    let prim = Monomial(n.0.map(|e| e / g as i32));
    let orders: Vec<u32> = if plus {
        (1..=2 * g).filter(|d| (2 * g).is_multiple_of(*d) && !g.is_multiple_of(*d)).collect()
    } else {
        (1..=g).filter(|d| g.is_multiple_of(*d)).collect()
    };
    orders.into_iter().map(|d| Atom::cyclo(d, prim)).collect()
}

fn split_univariate_q(rest: &MPoly, atoms: &mut Vec<Atom>) {
    let mut cur = rest.clone();
    let span = |p: &MPoly| p.degree_in(Var::Q) - p.min_degree(Var::Q).unwrap_or(0);
    let mut deg = span(&cur) as u32;
    // phi(d) >= sqrt(d/2), so larger orders cannot fit.
    let mut d = 1u32;
    while deg > 0 && d <= 2 * deg * deg + 2 {
        if phi(d) <= deg {
            let atom = q_cyclo(d);
            while let Some(qt) = cur.div_exact(atom.poly()) {
                cur = qt;
                atoms.push(atom.clone());
            }
            deg = span(&cur) as u32;
        }
        d += 1;
    }
    let mc = cur.monomial_content();
    let cur = cur.mul_monomial(&mc.inv());
    if cur.is_constant() {
        return;
    }
    if cur.len() == 2 {
        split_binomial(&cur, atoms);
    } else {
        let irreducible = cur.degree_in(Var::Q) == 1;
        atoms.push(Atom::generic(cur, irreducible));
    }
}

/// `Φ_d(q)`, memoized per thread.
fn q_cyclo(d: u32) -> Atom {
    thread_local! {
        static CACHE: std::cell::RefCell<std::collections::HashMap<u32, Atom>> =
            Default::default();
    }
    CACHE.with(|c| {
        c.borrow_mut()
            .entry(d)
            .or_insert_with(|| Atom::cyclo(d, Monomial::q(1)))
            .clone()
    })
}

/// Euler's totient.
fn phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Image of an atom under `v := c * m`: a unit and new atoms, or `None` if
/// the atom vanishes identically.
pub fn substitute_atom(atom: &Atom, v: Var, c: &Rational, m: &Monomial) -> Option<Decomposition> {
    match &atom.kind {
        AtomKind::Var(w) => {
            if *w != v {
                return Some(Decomposition {
                    unit: (Rational::one(), 0),
                    atoms: vec![(atom.clone(), 1)],
                });
            }
            if c.is_zero() {
                return None;
            }
            let image = MPoly::monomial(c.clone(), *m);
            Some(decompose(&image))
        }
        AtomKind::Cyclo { order, base } => {
            let e = base.exp(v);
            if e == 0 {
                return Some(Decomposition {
                    unit: (Rational::one(), 0),
                    atoms: vec![(atom.clone(), 1)],
                });
            }
            let image = atom.poly().subst_monomial(v, c, m);
            if image.is_zero() {
                return None;
            }
            if c.is_zero() {
                return Some(decompose(&image));
            }
            let kappa = rat_pow(c, e);
            let mut nb = *base;
            nb.set_exp(v, 0);
            let nb = nb.mul(&m.pow(e));
            if nb.is_one() {
                return Some(decompose(&image));
            }
            if kappa.is_one() || (-&kappa).is_one() {
                let atoms = cyclo_image(*order, !kappa.is_one(), &nb);
                return Some(finish(&image, atoms));
            }
            Some(decompose(&image))
        }
        AtomKind::Generic { .. } => {
            let image = atom.poly().subst_monomial(v, c, m);
            if image.is_zero() {
                None
            } else {
                Some(decompose(&image))
            }
        }
    }
}

/// Whether the atom vanishes identically at `q = 1`.
pub fn vanishes_at_q1(atom: &Atom) -> bool {
    match &atom.kind {
        AtomKind::Var(_) => false,
        AtomKind::Cyclo { order, base } => {
            *order == 1 && base.support().all(|v| v == Var::Q)
        }
        AtomKind::Generic { .. } => atom
            .poly()
            .eval_var(Var::Q, &Rational::one())
            .map(|p| p.is_zero())
            .unwrap_or(false),
    }
}

#[cfg(test)]
fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_coefficients() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic(105).iter().any(|&c| c.abs() == 2));
    }

    #[test]
    fn product_of_cyclotomics_is_binomial() {
        // t^12 - 1 = Π_{d | 12} Φ_d(t)
        let mut prod = MPoly::one();
        for d in [1, 2, 3, 4, 6, 12] {
            prod = &prod * &cyclo_in_monomial(d, &Monomial::q(1));
        }
        assert_eq!(prod, &MPoly::q_pow(12) - &MPoly::one());
    }

    #[test]
    fn decompose_pochhammer_factor() {
        let p = &MPoly::one() - &MPoly::q_pow(6);
        let d = decompose(&p);
        assert_eq!(d.atoms.len(), 4);
        let one_plus = &MPoly::one() + &MPoly::q_pow(3);
        let d = decompose(&one_plus);
        // 1 + q^3 = Φ_2(q) Φ_6(q)
        assert_eq!(d.atoms.len(), 2);
    }

    #[test]
    fn decompose_bivariate() {
        let z = MPoly::var(Var::Z);
        // 1 - q^2 z^2 = (1 - qz)(1 + qz)
        let p = &MPoly::one() - &(&MPoly::q_pow(2) * &z.pow(2));
        let d = decompose(&p);
        assert_eq!(d.atoms.len(), 2);
        assert!(d.atoms.iter().all(|(a, _)| matches!(a.kind(), AtomKind::Cyclo { .. })));
    }

    #[test]
    fn univariate_extraction() {
        // [4]_q = (1+q)(1+q^2)
        let p = MPoly::from_terms((0..4).map(|e| (Monomial::q(e), Rational::one())));
        let d = decompose(&p);
        assert_eq!(d.atoms.len(), 2);
        assert_eq!(d.unit, (Rational::one(), 0));
    }

    #[test]
    fn capelli() {
        assert!(binomial_irreducible(3, &integer(2)));
        assert!(!binomial_irreducible(2, &integer(4)));
        assert!(!binomial_irreducible(4, &integer(-4)));
        assert!(binomial_irreducible(2, &integer(-1)));
    }

    #[test]
    fn substitution_rules() {
        // Φ_1(z) under z := -q gives 1 + q = Φ_2(q)
        let a = Atom::cyclo(1, Monomial::var(Var::Z));
        let img = substitute_atom(&a, Var::Z, &integer(-1), &Monomial::q(1)).unwrap();
        assert_eq!(img.atoms.len(), 1);
        assert_eq!(img.atoms[0].0.poly(), &(&MPoly::one() + &MPoly::var(Var::Q)));
        // Φ_3(q) under q := q^2 splits as Φ_3 Φ_6
        let b = Atom::cyclo(3, Monomial::q(1));
        let img = substitute_atom(&b, Var::Q, &Rational::one(), &Monomial::q(2)).unwrap();
        assert_eq!(img.atoms.len(), 2);
    }
}
