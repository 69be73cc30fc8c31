//! q-integers, Gaussian binomials, q-Pochhammer symbols and truncated
//! power series in `u`, including the named series used throughout.

mod named;
mod series;

use std::cell::RefCell;

use crate::qkernel::{KernelError, MPoly, Monomial, RatFunc, Rational, Var};

pub use named::{
    series_e, series_f, series_g, series_g_q, series_h_g, series_theta, ZParam, DEFAULT_ORDER,
};
pub use series::TruncSeries;

/// `[n] = 1 + q + ... + q^(n-1)`
pub fn q_int(n: u32) -> MPoly {
    MPoly::from_terms((0..n as i32).map(|e| (Monomial::q(e), Rational::from_integer(1.into()))))
}

thread_local! {
    static PASCAL: RefCell<Vec<Vec<MPoly>>> = RefCell::new(vec![vec![MPoly::one()]]);
}

/// Gaussian binomial `[n, k]` by the Pascal rule `[n,k] = q^k [n-1,k] + [n-1,k-1]`.
/// Zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> MPoly {
    if n < 0 || k < 0 || k > n {
        return MPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    PASCAL.with(|cell| {
        let mut rows = cell.borrow_mut();
        while rows.len() <= n {
            let prev = rows.last().expect("row 0 exists");
            let len = prev.len() + 1;
            let row: Vec<MPoly> = (0..len)
                .map(|j| {
                    let left = if j < prev.len() {
                        prev[j].mul_monomial(&Monomial::q(j as i32))
                    } else {
                        MPoly::zero()
                    };
                    let right = if j > 0 { prev[j - 1].clone() } else { MPoly::zero() };
                    &left + &right
                })
                .collect();
            rows.push(row);
        }
        rows[n][k].clone()
    })
}

/// The base a Gaussian binomial is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QBase {
    Q,
    Q2,
    QInv,
}

/// `[n, k]` with `q` replaced by `q^2` or `q^-1`.
pub fn q_binomial_base(n: i64, k: i64, base: QBase) -> MPoly {
    let b = q_binomial(n, k);
    let one = Rational::from_integer(1.into());
    match base {
        QBase::Q => b,
        QBase::Q2 => b.subst_monomial(Var::Q, &one, &Monomial::q(2)),
        QBase::QInv => b.subst_monomial(Var::Q, &one, &Monomial::q(-1)),
    }
}

/// `(arg; q)_n = (1 - arg)(1 - q arg)...(1 - q^(n-1) arg)`
pub fn pochhammer(arg: &MPoly, n: u32) -> MPoly {
    let mut acc = MPoly::one();
    for j in 0..n as i32 {
        acc = &acc * &(&MPoly::one() - &arg.mul_monomial(&Monomial::q(j)));
    }
    acc
}

/// `(arg; q)_n` for a rational-function argument, kept factored.
pub fn pochhammer_rf(arg: &RatFunc, n: u32) -> RatFunc {
    pochhammer_base(arg, 1, n)
}

/// `(arg; q^step)_n`
pub fn pochhammer_base(arg: &RatFunc, step: i32, n: u32) -> RatFunc {
    let mut acc = RatFunc::one();
    for j in 0..n as i32 {
        let f = &RatFunc::one() - &arg.mul_q_pow(step * j);
        acc = &acc * &f;
    }
    acc
}

/// `1 / (arg; q)_n`; fails if a factor vanishes.
pub fn inv_pochhammer(arg: &RatFunc, n: u32) -> Result<RatFunc, KernelError> {
    let mut acc = RatFunc::one();
    for j in 0..n as i32 {
        let f = &RatFunc::one() - &arg.mul_q_pow(j);
        acc = &acc * &f.inv()?;
    }
    Ok(acc)
}

/// `(q; q)_n` as a rational function (a polynomial, kept factored when
/// inverted).
pub fn q_factorial(n: u32) -> RatFunc {
    pochhammer_rf(&RatFunc::q_pow(1), n)
}

/// `1 / (q; q)_n`
pub fn inv_q_factorial(n: u32) -> RatFunc {
    inv_pochhammer(&RatFunc::q_pow(1), n).expect("(q;q)_n is nonzero")
}

/// `binom(n, 2)` for possibly negative `n`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::parse_poly;

    #[test]
    fn q_integers() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), MPoly::one());
        assert_eq!(q_int(3).to_string(), "1+q+q^2");
    }

    #[test]
    fn gaussian_binomials() {
        for n in 0..=20 {
            assert_eq!(q_binomial(n, 0), MPoly::one());
        }
        assert_eq!(q_binomial(2, 1).to_string(), "1+q");
        assert_eq!(q_binomial(4, 2).to_string(), "1+q+2q^2+q^3+q^4");
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(-1, -1).is_zero());
    }

    #[test]
    fn binomials_in_other_bases() {
        assert_eq!(q_binomial_base(2, 1, QBase::Q2).to_string(), "1+q^2");
        assert_eq!(q_binomial_base(2, 1, QBase::QInv), parse_poly("1+q^-1").unwrap());
        for base in [QBase::Q, QBase::Q2, QBase::QInv] {
            assert_eq!(q_binomial_base(5, 5, base), MPoly::one());
        }
    }

    #[test]
    fn pochhammer_products() {
        let x = MPoly::var(Var::X);
        assert_eq!(pochhammer(&x, 0), MPoly::one());
        let mq = -MPoly::q_pow(1);
        assert_eq!(pochhammer(&mq, 2), parse_poly("(1+q)(1+q^2)").unwrap());
        let z = MPoly::var(Var::Z);
        let at_q = pochhammer(&z, 2).subst_monomial(Var::Z, &Rational::from_integer(1.into()), &Monomial::q(1));
        assert_eq!(at_q, parse_poly("(1-q)(1-q^2)").unwrap());
    }
}
