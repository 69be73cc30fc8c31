use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::atom::{decompose, substitute_atom, vanishes_at_q1, Atom, AtomKind, Decomposition};
use super::gcd::poly_gcd;
use super::monomial::{Monomial, Var};
use super::poly::{rat_pow, MPoly};
use super::{KernelError, Rational};

type Factors = Vec<(Atom, u32)>;

/// A reduced rational function `num / Π atom^e`.
///
/// Units (constants and powers of q) live in the numerator, and the
/// numerator shares no factor with any certified denominator atom. For
/// rational functions whose atoms are all certified the representation is
/// canonical, so `==` is structural; otherwise equality falls back to an
/// exact zero test.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: Factors,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: MPoly::zero(), den: Vec::new() }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(MPoly::one())
    }

    pub fn from_poly(p: MPoly) -> RatFunc {
        RatFunc { num: p, den: Vec::new() }
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub fn int(n: i64) -> RatFunc {
        RatFunc::from_poly(MPoly::int(n))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(MPoly::var(v))
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> RatFunc {
        RatFunc::from_poly(MPoly::q_pow(e))
    }

    /// `num / den`, reduced.
    pub fn new(num: MPoly, den: &MPoly) -> Result<RatFunc, KernelError> {
        RatFunc::from_poly(num).checked_div(&RatFunc::from_poly(den.clone()))
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom_factors(&self) -> &[(Atom, u32)] {
        &self.den
    }

    /// The expanded denominator.
    pub fn denom(&self) -> MPoly {
        expand(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn as_poly(&self) -> Option<&MPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.iter().any(|(a, _)| a.poly().contains_var(v))
    }

    fn is_certified(&self) -> bool {
        self.den.iter().all(|(a, _)| a.is_certified())
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplies by a Laurent monomial in q (a unit).
    pub fn mul_q_pow(&self, e: i32) -> RatFunc {
        RatFunc { num: self.num.mul_monomial(&Monomial::q(e)), den: self.den.clone() }
    }

    /// Multiplies by a monomial with nonnegative exponents outside q.
    pub fn mul_monomial(&self, c: &Rational, m: &Monomial) -> RatFunc {
        self * &RatFunc::from_poly(MPoly::monomial(c.clone(), *m))
    }

    pub fn inv(&self) -> Result<RatFunc, KernelError> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        let Decomposition { unit, atoms } = decompose(&self.num);
        let (c, e) = unit;
        let num = expand(&self.den).mul_term(&c.recip(), &Monomial::q(-e));
        Ok(RatFunc { num, den: atoms })
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, KernelError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<RatFunc, KernelError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u32;
        Ok(RatFunc {
            num: self.num.pow(k),
            den: self.den.iter().map(|(a, e)| (a.clone(), e * k)).collect(),
        })
    }

    /// Substitutes `v := c * m` for a Laurent monomial `m` (negative
    /// exponents only in q).
    pub fn subst_monomial(&self, v: Var, c: &Rational, m: &Monomial) -> Result<RatFunc, KernelError> {
        let num = self.num.subst_monomial(v, c, m);
        if self.den.is_empty() {
            return Ok(RatFunc::from_poly(num));
        }
        let mut unit_c = Rational::one();
        let mut unit_q = 0i32;
        let mut atoms: Vec<Atom> = Vec::new();
        for (atom, e) in &self.den {
            let image = substitute_atom(atom, v, c, m).ok_or_else(|| {
                KernelError::VanishingDenominator(format!("{v} := {}", describe(c, m)))
            })?;
            unit_c *= rat_pow(&image.unit.0, *e as i32);
            unit_q += image.unit.1 * *e as i32;
            for (a, k) in image.atoms {
                for _ in 0..k * e {
                    atoms.push(a.clone());
                }
            }
        }
        let num = num.mul_term(&unit_c.recip(), &Monomial::q(-unit_q));
        let (num, den) = cancel(num, group(atoms), None);
        Ok(RatFunc { num, den })
    }

    /// Substitutes a rational value for one variable.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Result<RatFunc, KernelError> {
        self.subst_monomial(v, value, &Monomial::ONE)
    }

    pub fn eval_partial(&self, values: &[(Var, Rational)]) -> Result<RatFunc, KernelError> {
        let mut r = self.clone();
        for (v, c) in values {
            r = r.eval_var(*v, c)?;
        }
        Ok(r)
    }

    /// Full evaluation to a rational number.
    pub fn eval_all(&self, values: &[(Var, Rational)]) -> Result<Rational, KernelError> {
        let r = self.eval_partial(values)?;
        r.as_constant().ok_or_else(|| {
            KernelError::VanishingDenominator("incomplete assignment".to_string())
        })
    }

    /// The value at `q = 1`, as a rational function of the other variables.
    pub fn limit_q1(&self) -> Result<RatFunc, KernelError> {
        if self.den.iter().any(|(a, _)| vanishes_at_q1(a)) {
            return Err(KernelError::PoleAtQ1);
        }
        self.eval_var(Var::Q, &Rational::one())
    }

    /// Substitutes `v := p` for an arbitrary polynomial `p`.
    pub fn substitute(&self, v: Var, p: &RatFunc) -> Result<RatFunc, KernelError> {
        if let Some(poly) = p.as_poly() {
            if let Some((c, m)) = poly.as_monomial() {
                if !m.support().any(|w| w != Var::Q && m.exp(w) < 0) {
                    return self.subst_monomial(v, c, m);
                }
            }
        }
        let num = subst_poly(&self.num, v, p)?;
        let mut den = RatFunc::one();
        for (a, e) in &self.den {
            let image = subst_poly(a.poly(), v, p)?;
            if image.is_zero() {
                return Err(KernelError::VanishingDenominator(format!("{v} := {p}")));
            }
            den = &den * &image.pow(*e as i32)?;
        }
        num.checked_div(&den)
    }

    fn add_impl(&self, other: &RatFunc, negate: bool) -> RatFunc {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let other_num = if negate { -&other.num } else { other.num.clone() };
        if self.den == other.den {
            let num = &self.num + &other_num;
            if num.is_zero() {
                return RatFunc::zero();
            }
            let (num, den) = cancel(num, self.den.clone(), None);
            return RatFunc { num, den };
        }
        // lcm by maximum exponent; only atoms with equal exponents on both
        // sides (or uncertified ones) can divide the new numerator.
        let mut lcm: Factors = Vec::new();
        let mut fa: Factors = Vec::new();
        let mut fb: Factors = Vec::new();
        let mut candidates: Vec<Atom> = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.den, &other.den);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                std::cmp::Ordering::Less => {
                    let (x, e) = &a[i];
                    lcm.push((x.clone(), *e));
                    fb.push((x.clone(), *e));
                    if !x.is_certified() {
                        candidates.push(x.clone());
                    }
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let (y, e) = &b[j];
                    lcm.push((y.clone(), *e));
                    fa.push((y.clone(), *e));
                    if !y.is_certified() {
                        candidates.push(y.clone());
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (x, ea) = &a[i];
                    let eb = b[j].1;
                    let m = (*ea).max(eb);
                    lcm.push((x.clone(), m));
                    if m > *ea {
                        fa.push((x.clone(), m - ea));
                    }
                    if m > eb {
                        fb.push((x.clone(), m - eb));
                    }
                    if *ea == eb || !x.is_certified() {
                        candidates.push(x.clone());
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        let num = &(&self.num * &expand(&fa)) + &(&other_num * &expand(&fb));
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = cancel(num, lcm, Some(&candidates));
        RatFunc { num, den }
    }

    fn mul_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_empty() && other.den.is_empty() {
            return RatFunc::from_poly(&self.num * &other.num);
        }
        let (na, db) = cancel(self.num.clone(), other.den.clone(), None);
        let (nb, da) = cancel(other.num.clone(), self.den.clone(), None);
        RatFunc { num: &na * &nb, den: merge_add(&da, &db) }
    }

    fn render_den(&self) -> Option<String> {
        super::format::render_factors(&self.den)
    }
}

fn describe(c: &Rational, m: &Monomial) -> String {
    RatFunc::from_poly(MPoly::monomial(c.clone(), *m)).to_string()
}

fn subst_poly(p: &MPoly, v: Var, value: &RatFunc) -> Result<RatFunc, KernelError> {
    let coeffs = p.coefficients_in(v);
    let mut out = RatFunc::zero();
    for (k, c) in coeffs {
        let term = &RatFunc::from_poly(c) * &value.pow(k)?;
        out = &out + &term;
    }
    Ok(out)
}

fn expand(f: &[(Atom, u32)]) -> MPoly {
    let mut p = MPoly::one();
    for (a, e) in f {
        p = &p * &a.poly().pow(*e);
    }
    p
}

fn group(mut atoms: Vec<Atom>) -> Factors {
    atoms.sort();
    let mut out: Factors = Vec::new();
    for a in atoms {
        match out.last_mut() {
            Some((b, e)) if *b == a => *e += 1,
            _ => out.push((a, 1)),
        }
    }
    out
}

fn merge_add(a: &[(Atom, u32)], b: &[(Atom, u32)]) -> Factors {
    let mut out: Factors = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0.clone(), a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Removes common factors of `num` and the factored denominator. When
/// `only` is given, just those atoms are tried.
fn cancel(mut num: MPoly, den: Factors, only: Option<&[Atom]>) -> (MPoly, Factors) {
    if num.is_zero() {
        return (num, Vec::new());
    }
    let mut out: Factors = Vec::with_capacity(den.len());
    let mut extra: Vec<Atom> = Vec::new();
    for (atom, mut e) in den {
        let try_it = only.map(|o| o.contains(&atom)).unwrap_or(true);
        if !try_it {
            out.push((atom, e));
            continue;
        }
        match atom.kind() {
            AtomKind::Var(v) => {
                let k = (num.min_degree(*v).unwrap_or(0).max(0) as u32).min(e);
                if k > 0 {
                    num = num.mul_monomial(&Monomial::var_pow(*v, -(k as i32)));
                    e -= k;
                }
            }
            AtomKind::Cyclo { .. } | AtomKind::Generic { irreducible: true } => {
                while e > 0 && may_divide(&num, atom.poly()) {
                    match num.div_exact(atom.poly()) {
                        Some(qt) => {
                            num = qt;
                            e -= 1;
                        }
                        None => break,
                    }
                }
            }
            AtomKind::Generic { irreducible: false } => {
                let full = atom.poly().pow(e);
                let g = poly_gcd(&num, &full).expect("numerator is nonzero");
                if !g.is_one() {
                    num = num.div_exact(&g).expect("gcd divides");
                    let rest = full.div_exact(&g).expect("gcd divides");
                    let Decomposition { unit, atoms } = decompose(&rest);
                    num = num.mul_term(&unit.0.recip(), &Monomial::q(-unit.1));
                    for (a, k) in atoms {
                        for _ in 0..k {
                            extra.push(a.clone());
                        }
                    }
                    e = 0;
                }
            }
        }
        if e > 0 {
            out.push((atom, e));
        }
    }
    if !extra.is_empty() {
        out = merge_add(&out, &group(extra));
    }
    (num, out)
}

/// Cheap necessary condition for `d | n`: every variable's degree span of
/// `d` fits inside that of `n`.
fn may_divide(n: &MPoly, d: &MPoly) -> bool {
    for v in Var::ALL {
        let span = |p: &MPoly| p.max_degree(v).unwrap_or(0) - p.min_degree(v).unwrap_or(0);
        if span(d) > span(n) {
            return false;
        }
    }
    true
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.is_certified() && other.is_certified() {
            self.num == other.num && self.den == other.den
        } else {
            (self - other).is_zero()
        }
    }
}

impl Eq for RatFunc {}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::int(n)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render_den() {
            None => write!(f, "{}", self.num),
            Some(den) => {
                if self.num.len() > 1 {
                    write!(f, "({})/{}", self.num, den)
                } else {
                    write!(f, "{}/{}", self.num, den)
                }
            }
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_impl(&rhs, false)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.add_impl(&rhs, true)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_impl(&rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::{frac, rat};

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }
    fn one() -> RatFunc {
        RatFunc::one()
    }
    fn inv(p: RatFunc) -> RatFunc {
        p.inv().unwrap()
    }

    #[test]
    fn partial_fractions_recombine() {
        // 1/(1-q) - 1/(1+q) = 2q/(1-q^2)
        let a = inv(&one() - &q());
        let b = inv(&one() + &q());
        let lhs = &a - &b;
        let rhs = RatFunc::new(MPoly::int(2).mul_monomial(&Monomial::q(1)), &(&MPoly::one() - &MPoly::q_pow(2))).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "2q/((1-q)(1+q))");
    }

    #[test]
    fn cancellation_to_polynomial() {
        // (1-q^3)/(1-q) = 1+q+q^2
        let r = RatFunc::new(&MPoly::one() - &MPoly::q_pow(3), &(&MPoly::one() - &MPoly::var(Var::Q))).unwrap();
        assert_eq!(r.to_string(), "1+q+q^2");
        assert!(r.as_poly().is_some());
    }

    #[test]
    fn inverse_and_zero() {
        assert_eq!(RatFunc::zero().inv(), Err(KernelError::DivisionByZero));
        let x = &q() + &RatFunc::int(2);
        assert_eq!(&x * &inv(x.clone()), one());
    }

    #[test]
    fn limit_and_poles() {
        let r = inv(&one() - &q());
        assert_eq!(r.limit_q1(), Err(KernelError::PoleAtQ1));
        let s = inv(&one() + &q());
        assert_eq!(s.limit_q1().unwrap(), RatFunc::constant(frac(1, 2)));
    }

    #[test]
    fn substitution_vanishing_denominator() {
        let z = RatFunc::var(Var::Z);
        let r = inv(&one() - &(&q() * &z));
        let e = r.subst_monomial(Var::Z, &rat(1), &Monomial::q(-1));
        assert!(matches!(e, Err(KernelError::VanishingDenominator(_))));
        let ok = r.subst_monomial(Var::Z, &rat(-1), &Monomial::q(0)).unwrap();
        assert_eq!(ok, inv(&one() + &q()));
    }

    #[test]
    fn generic_atoms_reduce_by_gcd() {
        // (1 + q + 2q^2) is not a product of cyclotomics.
        let p = MPoly::from_terms([
            (Monomial::ONE, rat(1)),
            (Monomial::q(1), rat(1)),
            (Monomial::q(2), rat(2)),
        ]);
        let r = inv(RatFunc::from_poly(p.clone()));
        let back = &r * &RatFunc::from_poly(&p * &p);
        assert_eq!(back, RatFunc::from_poly(p));
    }
}
