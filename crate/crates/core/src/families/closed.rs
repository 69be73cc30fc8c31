use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::Error;
use crate::qkernel::{frac, KernelError, Monomial, RatFunc, Rational, Var};
use crate::qseries::{binom2, inv_pochhammer, pochhammer_rf, q_binomial, q_int};

use super::{rogers_szego, FamilyId, FamilyName, XPoly};

fn choose(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return frac(0, 1);
    }
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn qb(n: i64, k: i64) -> RatFunc {
    RatFunc::from_poly(q_binomial(n, k))
}

/// `[a] / [b]`
fn q_ratio(a: i64, b: i64) -> Result<RatFunc, KernelError> {
    RatFunc::from_poly(q_int(a as u32)).checked_div(&RatFunc::from_poly(q_int(b as u32)))
}

fn sign(k: i64) -> Rational {
    if k % 2 == 0 {
        frac(1, 1)
    } else {
        frac(-1, 1)
    }
}

/// `(-q^a; q)_k`
fn neg_poch(a: i64, k: i64) -> RatFunc {
    pochhammer_rf(&RatFunc::q_pow(a as i32).scale(&frac(-1, 1)), k as u32)
}

/// `1 / ((-q; q)_k (-q^a; q)_k)`, inverted factor by factor so the
/// denominator stays factored.
fn inv_neg_poch2(a: i64, k: i64) -> Result<RatFunc, KernelError> {
    let mq = RatFunc::q_pow(1).scale(&frac(-1, 1));
    Ok(&inv_pochhammer(&mq, k as u32)? * &inv_pochhammer(&mq.mul_q_pow(a as i32 - 1), k as u32)?)
}

/// `1 / ((z; q)_k (q^a z; q)_k)`
fn inv_z_poch2(a: i64, k: i64) -> Result<RatFunc, KernelError> {
    let z = RatFunc::var(Var::Z);
    Ok(&inv_pochhammer(&z, k as u32)? * &inv_pochhammer(&z.mul_q_pow(a as i32), k as u32)?)
}

fn s_pow(k: i64) -> Monomial {
    Monomial::var_pow(Var::S, k as i32)
}

/// The coefficient of `x^(n - m k)` in the closed form, before parameters.
fn coefficient(name: FamilyName, m: i64, n: i64, k: i64) -> Result<RatFunc, KernelError> {
    use FamilyName::*;
    let nn = n - (m - 1) * k;
    let c = match name {
        Fib | FibM => RatFunc::constant(sign(k) * choose(nn, k)),
        Lucas | LucasM => RatFunc::constant(sign(k) * choose(nn, k) * frac(n, nn)),
        LucasBigM => RatFunc::constant(sign(k) * choose(nn, k) * frac(n - (m - 2) * k, nn)),
        ChebT => {
            let quarter = Rational::new((-1).into(), 4.into());
            RatFunc::constant(choose(n - k, k) * frac(n, n - k) * num_traits::Pow::pow(&quarter, k as u32))
        }
        ChebU => {
            let quarter = Rational::new((-1).into(), 4.into());
            RatFunc::constant(choose(n - k, k) * num_traits::Pow::pow(&quarter, k as u32))
        }
        FibQ => qb(nn, k).scale(&sign(k)).mul_q_pow((m * binom2(k)) as i32),
        CurFib => qb(nn, k).scale(&sign(k)).mul_q_pow(binom2(k + 1) as i32),
        CurLucas => {
            let r = q_ratio(n - (m - 2) * k, nn)?;
            &qb(nn, k).scale(&sign(k)).mul_q_pow(binom2(k) as i32) * &r
        }
        QChebU => {
            &qb(n - k, k).scale(&sign(k)).mul_q_pow((k * k) as i32) * &inv_neg_poch2(n + 1 - k, k)?
        }
        QChebT => {
            let num = &qb(n - k, k).scale(&sign(k)).mul_q_pow((k * k) as i32) * &q_ratio(n, n - k)?;
            &num * &inv_neg_poch2(n - k, k)?
        }
        BiT => {
            let num = &(&qb(n - k, k).mul_q_pow((k * k) as i32) * &q_ratio(n, n - k)?) * &neg_poch(1, n - 1);
            (&num * &inv_neg_poch2(n - k, k)?).mul_monomial(&frac(1, 1), &s_pow(k))
        }
        BiU => {
            let num = &qb(n - k, k).mul_q_pow((k * k) as i32) * &neg_poch(1, n);
            (&num * &inv_neg_poch2(n + 1 - k, k)?).mul_monomial(&frac(1, 1), &s_pow(k))
        }
        FibZ => {
            &qb(n - k, k).scale(&sign(k)).mul_q_pow((k * k) as i32) * &inv_z_poch2(n - k, k)?
        }
        LucasZ => {
            let shifted = qb(n - k - 1, k - 1)
                .mul_q_pow((n - k - 1) as i32)
                .mul_monomial(&frac(1, 1), &Monomial::var(Var::Z));
            let num = (&qb(n - k, k) - &shifted).scale(&sign(k)).mul_q_pow((k * k) as i32);
            &num * &inv_z_poch2(n - 1 - k, k)?
        }
        FibS => qb(nn, k)
            .mul_q_pow((m * binom2(k)) as i32)
            .mul_monomial(&sign(k), &s_pow(k)),
        LucasS => {
            let r = q_ratio(n - (m - 2) * k, nn)?;
            (&qb(nn, k).mul_q_pow((m * binom2(k)) as i32) * &r).mul_monomial(&sign(k), &s_pow(k))
        }
        RogersSzego => unreachable!("handled separately"),
    };
    Ok(c)
}

/// The family value from its closed coefficient sum.
pub fn family_closed(id: &FamilyId, n: u32) -> Result<XPoly, Error> {
    use FamilyName::*;
    let name = id.name;
    if name == RogersSzego {
        return Ok(id.apply_params_x(&rogers_szego(n))?);
    }
    // Lucas-type sums are only valid for n > 0.
    let special_zero = matches!(
        name,
        Lucas | LucasM | LucasBigM | ChebT | CurLucas | QChebT | BiT | LucasS
    );
    if n == 0 && special_zero {
        return Ok(XPoly::one());
    }
    let m = id.m as i64;
    let n = n as i64;
    let mut p = XPoly::zero();
    for k in 0..=n / m {
        let c = coefficient(name, m, n, k)?;
        p.add_term((n - m * k) as u32, &c);
    }
    Ok(id.apply_params_x(&p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::parse_ratfunc;

    fn fam(name: &str) -> FamilyId {
        FamilyId::parse(name).unwrap()
    }

    #[test]
    fn classical_examples() {
        assert_eq!(family_closed(&fam("f"), 2).unwrap().to_string(), "x^2 - 1");
        assert_eq!(family_closed(&fam("l"), 0).unwrap(), XPoly::one());
        assert_eq!(family_closed(&fam("l"), 4).unwrap().to_string(), "x^4 - 4x^2 + 2");
        assert_eq!(family_closed(&fam("uc"), 2).unwrap().to_string(), "x^2 - 1/4");
        assert_eq!(family_closed(&fam("tc"), 2).unwrap().to_string(), "x^2 - 1/2");
    }

    #[test]
    fn u_two() {
        assert_eq!(family_closed(&fam("u"), 2).unwrap().to_string(), "x^2 - q/((1+q)(1+q^2))");
    }

    #[test]
    fn product_form_m1() {
        let id = fam("F").with_m(1).unwrap();
        let got = family_closed(&id, 3).unwrap();
        let want = XPoly::parse("(x-q)(x-q^2)(x-q^3)").unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn z_value() {
        let id = fam("fz").with_z("0".parse().unwrap()).unwrap();
        let p = family_closed(&id, 2).unwrap();
        assert_eq!(p.coeff(0), parse_ratfunc("-q").unwrap());
        let bad = fam("fz").with_z("1".parse().unwrap()).unwrap();
        assert!(family_closed(&bad, 2).is_err());
    }
}
