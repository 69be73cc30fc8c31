use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use super::Rational;

/// Sparse multivariate Laurent polynomial over the rationals.
///
/// Terms are kept sorted ascending in [`Monomial`] order with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> MPoly {
        MPoly::monomial(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> MPoly {
        MPoly::constant(Rational::from_integer(n.into()))
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::monomial(Rational::one(), Monomial::var(v))
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> MPoly {
        MPoly::monomial(Rational::one(), Monomial::q(e))
    }

    pub fn monomial(c: Rational, m: Monomial) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted,
    /// zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> MPoly {
        let mut v: Vec<(Monomial, Rational)> = it.into_iter().collect();
        v.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        MPoly { terms: out }
    }

    /// Builds from terms already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Rational)>) -> MPoly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        MPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn as_monomial(&self) -> Option<(&Rational, &Monomial)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((c, m)),
            _ => None,
        }
    }

    /// Largest term in the graded order.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    /// Smallest term in the graded order; this is the first term printed.
    pub fn trailing(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|t| t.0.exp(v)).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|t| t.0.exp(v)).min()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) != 0)
    }

    /// Variables occurring in the polynomial.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.contains_var(*v))
            .collect()
    }

    /// Componentwise minimum of all exponents (the monomial content).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(first.0, |g, t| g.gcd(&t.0)),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MPoly { terms: out }
    }

    fn product(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if let Some((c, m)) = other.as_monomial() {
            return self.mul_term(c, m);
        }
        if let Some((c, m)) = self.as_monomial() {
            return other.mul_term(c, m);
        }
        // Accumulate into a map keyed by monomial; for the sizes seen here
        // this beats sort-and-merge on the full cross product.
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += p;
                    }
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Substitutes `v := c * m` where `m` is a monomial. Negative powers of
    /// `v` are only allowed when `c` is nonzero.
    pub fn subst_monomial(&self, v: Var, c: &Rational, m: &Monomial) -> MPoly {
        let mut pow_cache: BTreeMap<i32, Rational> = BTreeMap::new();
        let terms = self.terms.iter().map(|(t, a)| {
            let e = t.exp(v);
            if e == 0 {
                return (*t, a.clone());
            }
            let ce = pow_cache
                .entry(e)
                .or_insert_with(|| rat_pow(c, e))
                .clone();
            let mut nt = *t;
            nt.set_exp(v, 0);
            (nt.mul(&m.pow(e)), a * ce)
        });
        MPoly::from_terms(terms)
    }

    /// Substitutes `v := value`. Returns `None` when `value` is zero and
    /// `v` occurs with a negative exponent.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Option<MPoly> {
        if value.is_zero() {
            if self.terms.iter().any(|t| t.0.exp(v) < 0) {
                return None;
            }
            return Some(MPoly::from_terms(
                self.terms.iter().filter(|t| t.0.exp(v) == 0).cloned(),
            ));
        }
        Some(self.subst_monomial(v, value, &Monomial::ONE))
    }

    /// General substitution `v := p`. Negative powers of `v` require `p`
    /// to be a monomial.
    pub fn substitute(&self, v: Var, p: &MPoly) -> Option<MPoly> {
        if let Some((c, m)) = p.as_monomial() {
            return Some(self.subst_monomial(v, c, m));
        }
        if p.is_zero() {
            return self.eval_var(v, &Rational::zero());
        }
        let by_power = self.coefficients_in(v);
        if by_power.keys().any(|&e| e < 0) {
            return None;
        }
        // Horner in descending powers.
        let mut acc = MPoly::zero();
        let mut prev: Option<i32> = None;
        for (&e, c) in by_power.iter().rev() {
            if let Some(pe) = prev {
                acc = &acc * &p.pow((pe - e) as u32);
            }
            acc = &acc + c;
            prev = Some(e);
        }
        if let Some(pe) = prev {
            acc = &acc * &p.pow(pe as u32);
        }
        Some(acc)
    }

    /// Groups the terms by the exponent of `v`; the coefficients no longer
    /// contain `v`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, MPoly> {
        let mut buckets: BTreeMap<i32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut r = *m;
            r.set_exp(v, 0);
            buckets.entry(e).or_default().push((r, c.clone()));
        }
        buckets
            .into_iter()
            .map(|(e, ts)| (e, MPoly::from_terms(ts)))
            .collect()
    }

    /// Rebuilds a polynomial from coefficients of powers of `v`.
    pub fn from_coefficients_in(v: Var, coeffs: &BTreeMap<i32, MPoly>) -> MPoly {
        let terms = coeffs.iter().flat_map(|(&e, p)| {
            let mv = Monomial::var_pow(v, e);
            p.terms.iter().map(move |(m, c)| (m.mul(&mv), c.clone()))
        });
        MPoly::from_terms(terms)
    }

    /// Splits off the rational content: returns `(c, p)` with `self = c * p`,
    /// `p` having coprime integer coefficients and a positive trailing
    /// (first printed) coefficient.
    pub fn primitive(&self) -> (Rational, MPoly) {
        if self.is_zero() {
            return (Rational::one(), MPoly::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Exact division. Returns `None` if `d` does not divide `self` in the
    /// Laurent-in-q polynomial ring.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some((c, m)) = d.as_monomial() {
            let inv = m.inv();
            let r = self.mul_term(&c.recip(), &inv);
            // Only q may go negative.
            if r.terms.iter().any(|t| t.0.support().any(|v| v != Var::Q && t.0.exp(v) < 0)) {
                return None;
            }
            return Some(r);
        }
        // Normalize q-exponents to start at zero on both sides.
        let sa = self.min_degree(Var::Q).unwrap_or(0);
        let sd = d.min_degree(Var::Q).unwrap_or(0);
        let a = if sa != 0 { self.mul_monomial(&Monomial::q(-sa)) } else { self.clone() };
        let b = if sd != 0 { d.mul_monomial(&Monomial::q(-sd)) } else { d.clone() };
        // Cheap degree screening.
        for v in Var::ALL {
            let da = a.max_degree(v).unwrap_or(0);
            let db = b.max_degree(v).unwrap_or(0);
            if db > da {
                return None;
            }
        }
        let quot = poly_divide_exact(&a, &b)?;
        Some(if sa - sd != 0 {
            quot.mul_monomial(&Monomial::q(sa - sd))
        } else {
            quot
        })
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.max_degree(v).unwrap_or(0)
    }

    /// Evaluates all variables at rational values (missing variables must
    /// not occur).
    pub fn eval_all(&self, values: &[(Var, Rational)]) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.support() {
                let val = values.iter().find(|(w, _)| *w == v)?.1.clone();
                let e = m.exp(v);
                if val.is_zero() && e < 0 {
                    return None;
                }
                t *= rat_pow(&val, e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Maps each coefficient through `f`, dropping zeros.
    pub fn map_coeffs<F: FnMut(&Rational) -> Rational>(&self, mut f: F) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let n = f(c);
                    (!n.is_zero()).then_some((*m, n))
                })
                .collect(),
        }
    }
}

/// `c^e` for possibly negative `e`.
pub fn rat_pow(c: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(c.clone(), e as usize)
    } else {
        num_traits::pow(c.recip(), (-e) as usize)
    }
}

/// Polynomial division in the graded order on nonnegative exponents;
/// `None` as soon as a remainder term is not divisible by the leading term.
fn poly_divide_exact(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let (lm, lc) = b.leading().expect("nonzero divisor").clone();
    let lc_inv = lc.recip();
    let mut rem: BTreeMap<Monomial, Rational> = a.terms.iter().cloned().collect();
    let mut quot: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = rem.pop_last() {
        if !m.divisible_by(&lm) {
            return None;
        }
        let qm = m.div(&lm);
        let qc = c * &lc_inv;
        // Subtract qc*qm*b, skipping the leading term we just removed.
        for (bm, bc) in b.terms.iter().rev().skip(1) {
            let key = bm.mul(&qm);
            let delta = &qc * bc;
            match rem.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        quot.push((qm, qc));
    }
    quot.reverse();
    Some(MPoly::from_sorted_unchecked(quot))
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.product(rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Ord for MPoly {
    /// Compares leading terms first, then the remaining terms from the top.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.terms.iter().rev();
        let b = other.terms.iter().rev();
        for (x, y) in a.zip(b) {
            let o = x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for MPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }

    #[test]
    fn cancellation_and_expansion() {
        let a = &MPoly::one() + &q();
        let b = &MPoly::one() - &q();
        assert_eq!(&a + &b, MPoly::int(2));
        let c = &MPoly::one() + &q().pow(2);
        let prod = &a * &c;
        let expect = MPoly::from_terms((0..4).map(|e| (Monomial::q(e), Rational::one())));
        assert_eq!(prod, expect);
    }

    #[test]
    fn laurent_identity() {
        assert_eq!(&MPoly::q_pow(-1) * &q(), MPoly::one());
        for k in 0..=64 {
            let p = &(&MPoly::one() + &q()) * &MPoly::q_pow(-k);
            assert_eq!(&p * &MPoly::q_pow(k), &MPoly::one() + &q());
        }
    }

    #[test]
    fn exact_division() {
        let one = MPoly::one();
        let a = &one - &q().pow(3);
        let b = &one - &q();
        let quot = a.div_exact(&b).unwrap();
        assert_eq!(quot, &(&one + &q()) + &q().pow(2));
        assert!(b.div_exact(&(&one + &q())).is_none());
        // Laurent quotient
        let c = &MPoly::q_pow(-2) - &MPoly::q_pow(1);
        let d = &one - &q().pow(3);
        assert_eq!(c.div_exact(&d).unwrap(), MPoly::q_pow(-2));
    }

    #[test]
    fn substitution() {
        let z = MPoly::var(Var::Z);
        let p = &MPoly::one() - &(&q() * &z);
        let r = p.subst_monomial(Var::Z, &Rational::from_integer((-1).into()), &Monomial::q(1));
        assert_eq!(r, &MPoly::one() + &q().pow(2));
        let sq = (&MPoly::one() + &q()).pow(2);
        let v = sq.eval_var(Var::Q, &Rational::from_integer(2.into())).unwrap();
        assert_eq!(v, MPoly::int(9));
    }

    #[test]
    fn primitive_part() {
        let p = MPoly::from_terms([
            (Monomial::ONE, Rational::new((-2).into(), 3.into())),
            (Monomial::q(1), Rational::new(4.into(), 3.into())),
        ]);
        let (c, pp) = p.primitive();
        assert_eq!(c, Rational::new((-2).into(), 3.into()));
        assert_eq!(pp, &MPoly::one() - &MPoly::int(2).mul_monomial(&Monomial::q(1)));
    }
}
