use std::fmt;
use std::str::FromStr;

use crate::qkernel::{parse_ratfunc, KernelError, RatFunc, Rational, Var};

use super::{binom2, inv_pochhammer, inv_q_factorial, pochhammer_base, TruncSeries};

pub const DEFAULT_ORDER: usize = 12;

/// A parameter that is either kept as its variable or fixed to a value.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum ZParam {
    #[default]
    Symbolic,
    Value(Rational),
}

impl ZParam {
    /// The parameter as a rational function, using `v` when symbolic.
    pub fn as_ratfunc(&self, v: Var) -> RatFunc {
        match self {
            ZParam::Symbolic => RatFunc::var(v),
            ZParam::Value(c) => RatFunc::constant(c.clone()),
        }
    }
}

impl fmt::Display for ZParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZParam::Symbolic => f.write_str("sym"),
            ZParam::Value(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for ZParam {
    type Err = KernelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "sym" {
            return Ok(ZParam::Symbolic);
        }
        let r = parse_ratfunc(s)?;
        r.as_constant().map(ZParam::Value).ok_or_else(|| KernelError::Parse {
            input: s.to_string(),
            reason: "expected a rational number or `sym`".to_string(),
        })
    }
}

/// `E^(m)(u) = Σ q^(m·binom(n,2)) u^n / (q;q)_n`
pub fn series_e(m: u32, order: usize) -> TruncSeries {
    TruncSeries::from_fn(order, |n| {
        inv_q_factorial(n as u32).mul_q_pow((m as i64 * binom2(n as i64)) as i32)
    })
}

/// `G(c·u, w, q) = Σ q^(n²-n) (c·u)^n / ((w;q)_n (q;q)_n)`
pub fn series_g(uscale: &RatFunc, w: &RatFunc, order: usize) -> Result<TruncSeries, KernelError> {
    let base = TruncSeries::try_from_fn(order, |n| {
        let d = &inv_pochhammer(w, n as u32)? * &inv_q_factorial(n as u32);
        Ok(d.mul_q_pow((n * n - n) as i32))
    })?;
    Ok(base.scale_u_by(uscale))
}

/// `F(c·u, w, q) = Σ (c·u)^n / ((w;q)_n (q;q)_n)`
pub fn series_f(uscale: &RatFunc, w: &RatFunc, order: usize) -> Result<TruncSeries, KernelError> {
    let base = TruncSeries::try_from_fn(order, |n| {
        Ok(&inv_pochhammer(w, n as u32)? * &inv_q_factorial(n as u32))
    })?;
    Ok(base.scale_u_by(uscale))
}

/// `G(c·u, q) = Σ q^(k²-k) (-c·u)^k / (q²;q²)_k`, the series of `(c·u; q²)_∞`.
pub fn series_g_q(uscale: &RatFunc, order: usize) -> TruncSeries {
    let base = TruncSeries::from_fn(order, |k| {
        let den = pochhammer_base(&RatFunc::q_pow(2), 2, k as u32);
        let c = den.inv().expect("(q²;q²)_k is nonzero").mul_q_pow((k * k - k) as i32);
        if k % 2 == 1 {
            -c
        } else {
            c
        }
    });
    base.scale_u_by(uscale)
}

/// The series `h(u) = (u;q²)_∞ / (qu;q²)_∞` and `g(u) = G(qu,q) / G(u,q)`.
pub fn series_h_g(order: usize) -> (TruncSeries, TruncSeries) {
    let h = TruncSeries::from_fn(order, |n| {
        let num = pochhammer_base(&RatFunc::q_pow(-1), 2, n as u32);
        let den = pochhammer_base(&RatFunc::q_pow(2), 2, n as u32);
        (&num * &den.inv().expect("nonzero")).mul_q_pow(n as i32)
    });
    let g = series_g_q(&RatFunc::q_pow(1), order)
        .checked_div(&series_g_q(&RatFunc::one(), order))
        .expect("G(u,q) has constant term 1");
    (h, g)
}

/// `Σ q^(k·binom(n,2)) (sign·u)^n / (q;q)_n` for an arbitrary exponent
/// multiplier, the common shape of the exponential-type series and `E^(m)`.
pub fn series_theta(k: i64, negate: bool, order: usize) -> TruncSeries {
    TruncSeries::from_fn(order, |n| {
        let c = inv_q_factorial(n as u32).mul_q_pow((k * binom2(n as i64)) as i32);
        if negate && n % 2 == 1 {
            -c
        } else {
            c
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::parse_ratfunc;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn e_series_low_coefficients() {
        let e = series_e(2, 4);
        assert_eq!(e.coeff(0), &RatFunc::one());
        assert_eq!(e.coeff(1), &rf("1/(1-q)"));
    }

    #[test]
    fn e_functional_equation() {
        for m in 1..=3 {
            let e = series_e(m, 8);
            let lhs = &e - &e.scale_u(1);
            let rhs = e.scale_u(m as i32).shift(1);
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn g_low_coefficients() {
        let z = RatFunc::var(Var::Z);
        let g = series_g(&RatFunc::one(), &z, 3).unwrap();
        assert_eq!(g.coeff(0), &RatFunc::one());
        assert_eq!(g.coeff(1), &rf("1/((1-q)(1-z))"));
    }

    #[test]
    fn f_times_g_at_minus_q() {
        let mq = RatFunc::q_pow(1).scale(&Rational::from_integer((-1).into()));
        let f = series_f(&RatFunc::one(), &mq, 8).unwrap();
        let g = series_g(&RatFunc::int(-1), &mq, 8).unwrap();
        assert_eq!(&f * &g, TruncSeries::one(8));
    }

    #[test]
    fn vanishing_pochhammer_is_an_error() {
        let w = RatFunc::q_pow(-2);
        assert!(series_g(&RatFunc::one(), &w, 4).is_err());
    }

    #[test]
    fn h_and_g() {
        let (h, g) = series_h_g(10);
        assert_eq!(h.coeff(0), &RatFunc::one());
        let one_minus_u = &TruncSeries::one(10) - &TruncSeries::u(10);
        assert_eq!(&h * &h.scale_u(1), one_minus_u);
        assert_eq!(&g * &g.scale_u(1), one_minus_u.inverse().unwrap());
    }
}
