use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::Error;
use crate::families::{FamilyId, FamilyName};
use crate::qkernel::{frac, KernelError, RatFunc, Rational, Var};
use crate::qseries::{inv_pochhammer, inv_q_factorial, q_binomial, q_int, series_e, series_f, TruncSeries};

use super::MomentVector;

/// `C^(m)_n(q)` from `C(u) = 1 + u C(u) C(qu) ... C(q^(m-1) u)`, one
/// coefficient at a time.
pub fn qcatalan_convolution(big_n: usize, m: u32) -> Vec<RatFunc> {
    let mut c = vec![RatFunc::one()];
    for n in 1..=big_n {
        // [u^(n-1)] of the product only needs c_0 .. c_(n-1).
        let known = TruncSeries::from_coeffs(c.clone()).truncate(n - 1);
        let mut prod = TruncSeries::one(n - 1);
        for i in 0..m as i32 {
            prod = &prod * &known.scale_u(i);
        }
        c.push(prod.coeff(n - 1).clone());
    }
    c
}

/// `C^(m)_n(q)` as coefficients of `E^(m)(-qu) / E^(m)(-u)`.
pub fn qcatalan_quotient(big_n: usize, m: u32) -> Result<Vec<RatFunc>, Error> {
    let e = series_e(m, big_n);
    let num = e.scale_u_by(&RatFunc::q_pow(1).scale(&frac(-1, 1)));
    let den = e.scale_u_by(&RatFunc::int(-1));
    Ok(num.checked_div(&den)?.into_coeffs())
}

fn compare(what: &str, left: &[RatFunc], right: &[RatFunc]) -> Result<(), Error> {
    match left.iter().zip(right).position(|(a, b)| a != b) {
        None => Ok(()),
        Some(n) => Err(Error::RouteDisagreement {
            what: what.to_string(),
            n,
            left: left[n].to_string(),
            right: right[n].to_string(),
        }),
    }
}

/// The Carlitz q-Catalan numbers by two routes, which must agree.
pub fn qcatalan_carlitz(big_n: usize, m: u32) -> Result<MomentVector, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter { family: "fq".into(), reason: "m must be at least 1".into() });
    }
    let conv = qcatalan_convolution(big_n, m);
    let quot = qcatalan_quotient(big_n, m)?;
    compare("q-Catalan convolution vs quotient", &conv, &quot)?;
    Ok(MomentVector { family: FamilyId::new(FamilyName::FibQ).with_m(m)?, values: conv })
}

/// Andrews' `𝐂_n(q) = [2n,n]/[n+1] · q^n / ((-q;q)_n (-q^2;q)_n)`.
pub fn andrews_catalan(big_n: usize) -> Result<Vec<RatFunc>, Error> {
    let mq = RatFunc::q_pow(1).scale(&frac(-1, 1));
    (0..=big_n)
        .map(|n| {
            let b = RatFunc::from_poly(q_binomial(2 * n as i64, n as i64));
            let r = b.checked_div(&RatFunc::from_poly(q_int(n as u32 + 1)))?.mul_q_pow(n as i32);
            let d = &inv_pochhammer(&mq, n as u32)? * &inv_pochhammer(&mq.mul_q_pow(1), n as u32)?;
            Ok(&r * &d)
        })
        .collect()
}

fn choose(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalanVariant {
    Classical,
    Fuss,
    Carlitz,
    Andrews,
}

impl CatalanVariant {
    pub const ALL: [CatalanVariant; 4] =
        [CatalanVariant::Classical, CatalanVariant::Fuss, CatalanVariant::Carlitz, CatalanVariant::Andrews];

    pub fn name(self) -> &'static str {
        match self {
            CatalanVariant::Classical => "classical",
            CatalanVariant::Fuss => "fuss",
            CatalanVariant::Carlitz => "carlitz",
            CatalanVariant::Andrews => "andrews",
        }
    }
}

impl fmt::Display for CatalanVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalanVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CatalanVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variant `{s}`; expected classical, fuss, carlitz or andrews"))
    }
}

/// The first `big_n + 1` numbers of a Catalan variant; `m` applies to the
/// Fuss and Carlitz variants.
pub fn catalan(variant: CatalanVariant, m: u32, big_n: usize) -> Result<Vec<RatFunc>, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter { family: variant.name().into(), reason: "m must be at least 1".into() });
    }
    match variant {
        CatalanVariant::Classical => Ok((0..=big_n as u64)
            .map(|n| RatFunc::constant(choose(2 * n, n) / Rational::from_integer((n + 1).into())))
            .collect()),
        CatalanVariant::Fuss => {
            let m = m as u64;
            Ok((0..=big_n as u64)
                .map(|n| RatFunc::constant(choose(m * n, n) / Rational::from_integer(((m - 1) * n + 1).into())))
                .collect())
        }
        CatalanVariant::Carlitz => Ok(qcatalan_carlitz(big_n, m)?.values),
        CatalanVariant::Andrews => andrews_catalan(big_n),
    }
}

/// `1 / ((q;q)_j (z;q)_j)`
fn weight(z: &RatFunc, j: usize) -> Result<RatFunc, KernelError> {
    Ok(&inv_q_factorial(j as u32) * &inv_pochhammer(z, j as u32)?)
}

/// `a_n(z,q)` of `Σ_j a_(n-j) / ((q;q)_j (z;q)_j) = q^n / ((q;q)_n (z;q)_n)`
/// by forward substitution, checked against `F(qu,z,q) / F(u,z,q)`.
pub fn cantero_iserles(big_n: usize) -> Result<Vec<RatFunc>, Error> {
    cantero_iserles_at(&RatFunc::var(Var::Z), big_n)
}

/// As [`cantero_iserles`] with `z` replaced by `z`, which may be a value.
pub fn cantero_iserles_at(z: &RatFunc, big_n: usize) -> Result<Vec<RatFunc>, Error> {
    let w: Vec<RatFunc> = (0..=big_n).map(|j| weight(z, j)).collect::<Result<_, _>>()?;
    let mut a = vec![RatFunc::one()];
    for n in 1..=big_n {
        let mut acc = w[n].mul_q_pow(n as i32);
        for j in 1..=n {
            acc = &acc - &(&a[n - j] * &w[j]);
        }
        a.push(acc);
    }
    compare("Cantero-Iserles forward vs series", &a, &cantero_iserles_series_at(z, big_n)?)?;
    Ok(a)
}

/// Coefficients of `F(qu,z,q) / F(u,z,q)`.
pub fn cantero_iserles_series(big_n: usize) -> Result<Vec<RatFunc>, Error> {
    cantero_iserles_series_at(&RatFunc::var(Var::Z), big_n)
}

pub fn cantero_iserles_series_at(z: &RatFunc, big_n: usize) -> Result<Vec<RatFunc>, Error> {
    let num = series_f(&RatFunc::q_pow(1), z, big_n)?;
    let den = series_f(&RatFunc::one(), z, big_n)?;
    Ok(num.checked_div(&den)?.into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::parse_ratfunc;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn carlitz_examples() {
        let c = qcatalan_carlitz(3, 2).unwrap().values;
        assert_eq!(c[0], RatFunc::one());
        assert_eq!(c[2], rf("1+q"));
        assert_eq!(c[3], rf("1+2q+q^2+q^3"));
        for m in 1..=4 {
            qcatalan_carlitz(5, m).unwrap();
        }
    }

    #[test]
    fn classical_variants() {
        let c: Vec<String> = catalan(CatalanVariant::Classical, 2, 5).unwrap().iter().map(|r| r.to_string()).collect();
        assert_eq!(c, ["1", "1", "2", "5", "14", "42"]);
        let f: Vec<String> = catalan(CatalanVariant::Fuss, 3, 4).unwrap().iter().map(|r| r.to_string()).collect();
        assert_eq!(f, ["1", "1", "3", "12", "55"]);
        let a = catalan(CatalanVariant::Andrews, 2, 3).unwrap();
        for (n, v) in a.iter().enumerate() {
            let classical = Rational::new(choose(2 * n as u64, n as u64).numer().clone(), BigInt::from((n + 1) as u64 * 4u64.pow(n as u32)));
            assert_eq!(v.limit_q1().unwrap(), RatFunc::constant(classical));
        }
    }

    #[test]
    fn cantero_iserles_examples() {
        let a = cantero_iserles(3).unwrap();
        assert_eq!(a[0], RatFunc::one());
        assert_eq!(a[1], rf("-1/(1-z)"));
        assert_eq!(a[2].limit_q1().unwrap(), rf("z/(1-z)^3"));
    }
}
