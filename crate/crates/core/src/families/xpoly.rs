use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::qkernel::{parse_ratfunc, KernelError, RatFunc, Rational, Var};
use crate::qseries::q_int;

/// A polynomial in `x` with rational-function coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPoly {
    coeffs: BTreeMap<u32, RatFunc>,
}

impl XPoly {
    pub fn zero() -> XPoly {
        XPoly::default()
    }

    pub fn one() -> XPoly {
        XPoly::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> XPoly {
        XPoly::monomial(c, 0)
    }

    /// `x^n`
    pub fn x_pow(n: u32) -> XPoly {
        XPoly::monomial(RatFunc::one(), n)
    }

    pub fn monomial(c: RatFunc, n: u32) -> XPoly {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(n, c);
        }
        XPoly { coeffs }
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, RatFunc)>>(it: I) -> XPoly {
        let mut p = XPoly::zero();
        for (d, c) in it {
            p.add_term(d, &c);
        }
        p
    }

    pub fn add_term(&mut self, d: u32, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&d) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, d: u32) -> RatFunc {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&RatFunc> {
        self.coeffs.values().next_back()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &RatFunc)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn scale(&self, c: &RatFunc) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly { coeffs: self.coeffs.iter().map(|(d, a)| (*d, a * c)).collect() }
    }

    /// `x^k * self`
    pub fn mul_x(&self, k: u32) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|(d, a)| (d + k, a.clone())).collect() }
    }

    pub fn try_map<F>(&self, mut f: F) -> Result<XPoly, KernelError>
    where
        F: FnMut(&RatFunc) -> Result<RatFunc, KernelError>,
    {
        let mut out = XPoly::zero();
        for (d, c) in &self.coeffs {
            out.add_term(*d, &f(c)?);
        }
        Ok(out)
    }

    pub fn eval_var(&self, v: Var, value: &Rational) -> Result<XPoly, KernelError> {
        self.try_map(|c| c.eval_var(v, value))
    }

    pub fn limit_q1(&self) -> Result<XPoly, KernelError> {
        self.try_map(RatFunc::limit_q1)
    }

    /// Value at a rational-function point `x := a`.
    pub fn eval_x(&self, a: &RatFunc) -> RatFunc {
        let mut out = RatFunc::zero();
        for (d, c) in &self.coeffs {
            out = &out + &(c * &a.pow(*d as i32).expect("nonnegative power"));
        }
        out
    }

    /// Folds `x` into the coefficient ring.
    pub fn to_ratfunc(&self) -> RatFunc {
        self.eval_x(&RatFunc::var(Var::X))
    }

    /// Splits a rational function whose denominator is free of `x`.
    pub fn from_ratfunc(r: &RatFunc) -> Result<XPoly, KernelError> {
        if r.denom_factors().iter().any(|(a, _)| a.poly().contains_var(Var::X)) {
            return Err(KernelError::Parse {
                input: r.to_string(),
                reason: "x occurs in a denominator".to_string(),
            });
        }
        let den = RatFunc::from_poly(r.denom());
        let mut out = XPoly::zero();
        for (d, c) in r.numer().coefficients_in(Var::X) {
            let coeff = RatFunc::from_poly(c).checked_div(&den)?;
            out.add_term(d as u32, &coeff);
        }
        Ok(out)
    }

    pub fn parse(s: &str) -> Result<XPoly, KernelError> {
        XPoly::from_ratfunc(&parse_ratfunc(s)?)
    }

    fn combine(&self, other: &XPoly, negate: bool) -> XPoly {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            if negate {
                out.add_term(*d, &-c);
            } else {
                out.add_term(*d, c);
            }
        }
        out
    }

    fn product(&self, other: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (da, a) in &self.coeffs {
            for (db, b) in &other.coeffs {
                out.add_term(da + db, &(a * b));
            }
        }
        out
    }
}

/// `D_q p = (p(x) - p(qx)) / (x - qx)`, computed termwise as `[n] x^(n-1)`.
pub fn dq(p: &XPoly) -> XPoly {
    let mut out = XPoly::zero();
    for (d, c) in p.terms() {
        if d > 0 {
            out.add_term(d - 1, &(c * &RatFunc::from_poly(q_int(d))));
        }
    }
    out
}

/// `A p = x p + (1 - q) D_q p`
pub fn operator_a_apply(p: &XPoly) -> XPoly {
    let one_minus_q = RatFunc::from_poly(crate::qkernel::parse_poly("1-q").expect("literal"));
    &p.mul_x(1) + &dq(p).scale(&one_minus_q)
}

fn is_neg_monomial(c: &RatFunc) -> bool {
    let n = c.numer();
    n.len() == 1 && n.terms()[0].1.is_negative()
}

fn render_coeff(c: &RatFunc, degree: u32, first: bool, out: &mut String) {
    let xs = match degree {
        0 => String::new(),
        1 => "x".to_string(),
        d => format!("x^{d}"),
    };
    if degree == 0 {
        if first || c.numer().len() == 1 || !c.denom_factors().is_empty() {
            out.push_str(&c.to_string());
        } else {
            out.push('(');
            out.push_str(&c.to_string());
            out.push(')');
        }
        return;
    }
    if c.is_one() {
        out.push_str(&xs);
        return;
    }
    let simple = c.denom_factors().is_empty() && c.numer().len() == 1;
    if simple {
        out.push_str(&c.to_string());
    } else {
        out.push('(');
        out.push_str(&c.to_string());
        out.push(')');
    }
    out.push_str(&xs);
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = is_neg_monomial(c);
            let body = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            render_coeff(&body, *d, i == 0, &mut s);
        }
        f.write_str(&s)
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.combine(rhs, true)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.product(rhs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_derivative() {
        assert!(dq(&XPoly::constant(RatFunc::int(7))).is_zero());
        let d = dq(&XPoly::x_pow(4));
        assert_eq!(d, XPoly::monomial(RatFunc::from_poly(q_int(4)), 3));
        let p = &XPoly::x_pow(2) + &XPoly::x_pow(1);
        assert_eq!(dq(&p).to_string(), "(1+q)x + 1");
    }

    #[test]
    fn operator_a() {
        assert_eq!(operator_a_apply(&XPoly::one()), XPoly::x_pow(1));
        assert_eq!(operator_a_apply(&XPoly::x_pow(1)).to_string(), "x^2 + (1-q)");
    }

    #[test]
    fn display_and_parse() {
        let p = XPoly::parse("x^2 - q/((1+q)(1+q^2))").unwrap();
        assert_eq!(p.to_string(), "x^2 - q/((1+q)(1+q^2))");
        let r = XPoly::parse("-x^3 + 2qx - 1/2").unwrap();
        assert_eq!(r.to_string(), "-x^3 + 2qx - 1/2");
        assert_eq!(XPoly::parse(&r.to_string()).unwrap(), r);
    }
}
