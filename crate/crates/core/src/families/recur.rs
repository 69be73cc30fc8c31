use crate::error::Error;
use crate::qkernel::{frac, parse_ratfunc, Monomial, RatFunc, Var};

use super::lambda::LambdaSeq;
use super::xpoly::{dq, XPoly};
use super::{FamilyId, FamilyName};

fn one_minus_q() -> RatFunc {
    parse_ratfunc("1-q").expect("literal")
}

/// `x - c`
fn x_minus(c: &RatFunc) -> XPoly {
    let mut p = XPoly::x_pow(1);
    p.add_term(0, &-c);
    p
}

/// `p_n = x p_(n-1) - λ_(n-m) p_(n-m)` with `p_n = x^n` for `n < m`.
fn three_term(lambda: &LambdaSeq, n: usize) -> Result<Vec<XPoly>, Error> {
    let m = lambda.m as usize;
    let mut out: Vec<XPoly> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let p = if j < m {
            XPoly::x_pow(j as u32)
        } else {
            let w = lambda.weight(j - m)?;
            &out[j - 1].mul_x(1) - &out[j - m].scale(&w)
        };
        out.push(p);
    }
    Ok(out)
}

/// `p_n = x p_(n-1) + (1-q) D_q p_(n-m+1) - λ_(n-m) p_(n-m)`, the operator
/// recurrence shared by `F^(m)` and `L^(m)` for `m >= 2`.
fn operator_recurrence(m: usize, lambda0: i64, n: usize) -> Vec<XPoly> {
    let c = one_minus_q();
    let mut out: Vec<XPoly> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let p = if j < m {
            XPoly::x_pow(j as u32)
        } else {
            let w = if j == m { RatFunc::int(lambda0) } else { RatFunc::one() };
            let mut p = out[j - 1].mul_x(1);
            p = &p + &dq(&out[j - m + 1]).scale(&c);
            &p - &out[j - m].scale(&w)
        };
        out.push(p);
    }
    out
}

/// `F^(1)_n = (x - q^n) F^(1)_(n-1)`
fn product_f1(n: usize) -> Vec<XPoly> {
    let mut out = vec![XPoly::one()];
    for j in 1..=n {
        let next = &out[j - 1] * &x_minus(&RatFunc::q_pow(j as i32));
        out.push(next);
    }
    out
}

/// `L^(1)_n = (x - 1 - q^n) (x - q)...(x - q^(n-1))` for `n >= 1`.
fn product_l1(n: usize) -> Vec<XPoly> {
    let f = product_f1(n);
    let mut out = vec![XPoly::one()];
    for j in 1..=n {
        let c = &RatFunc::one() + &RatFunc::q_pow(j as i32);
        out.push(&f[j - 1] * &x_minus(&c));
    }
    out
}

/// `T_n = (1 + q^(n-1)) x T_(n-1) + q^(n-1) s T_(n-2)`, or the `U_n`
/// recurrence with `(1 + q^n)` when `second_kind`.
fn bivariate(second_kind: bool, n: usize) -> Vec<XPoly> {
    let s = RatFunc::var(Var::S);
    let mut out: Vec<XPoly> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let shift = if second_kind { j as i32 } else { j as i32 - 1 };
        let a = &RatFunc::one() + &RatFunc::q_pow(shift);
        let p = match j {
            0 => XPoly::one(),
            1 if second_kind => XPoly::monomial(a, 1),
            1 => XPoly::x_pow(1),
            _ => {
                let b = s.mul_q_pow(j as i32 - 1);
                &out[j - 1].mul_x(1).scale(&a) + &out[j - 2].scale(&b)
            }
        };
        out.push(p);
    }
    out
}

/// `r_(n+1) = (x + s) r_n + (q^n - 1) x s r_(n-1)`
fn rogers_szego_recur(n: usize) -> Vec<XPoly> {
    let s = RatFunc::var(Var::S);
    let x_plus_s = &XPoly::x_pow(1) + &XPoly::constant(s.clone());
    let mut out = vec![XPoly::one()];
    for j in 0..n {
        let mut next = &out[j] * &x_plus_s;
        if j >= 1 {
            let c = &(&RatFunc::q_pow(j as i32) - &RatFunc::one()) * &s;
            next = &next + &out[j - 1].mul_x(1).scale(&c);
        }
        out.push(next);
    }
    out
}

/// `l_n(x,q,s) = f_n(x,q,s) - q^(n-m+1) s f_(n-m)(x,q,qs)`.
fn lucas_s(m: usize, n: usize) -> Result<Vec<XPoly>, Error> {
    let f = three_term(&LambdaSeq::for_family(&FamilyId::new(FamilyName::FibS).with_m(m as u32)?)?, n)?;
    let s = RatFunc::var(Var::S);
    let shift_s = |p: &XPoly| {
        p.try_map(|c| c.subst_monomial(Var::S, &frac(1, 1), &Monomial::q(1).mul(&Monomial::var(Var::S))))
    };
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        if j == 0 {
            out.push(XPoly::one());
        } else if j < m {
            out.push(f[j].clone());
        } else {
            let tail = shift_s(&f[j - m])?.scale(&s.mul_q_pow((j - m + 1) as i32));
            out.push(&f[j] - &tail);
        }
    }
    Ok(out)
}

/// Values `p_0 ..= p_n` generated by the family's recurrence.
pub fn family_recur_all(id: &FamilyId, n: u32) -> Result<Vec<XPoly>, Error> {
    use FamilyName::*;
    let n = n as usize;
    let m = id.m as usize;
    let raw = match id.name {
        CurFib if m == 1 => product_f1(n),
        CurFib => operator_recurrence(m, 1, n),
        CurLucas if m == 1 => product_l1(n),
        CurLucas => operator_recurrence(m, 2, n),
        BiT => bivariate(false, n),
        BiU => bivariate(true, n),
        RogersSzego => rogers_szego_recur(n),
        LucasS => lucas_s(m, n)?,
        // Parameters enter through the weights.
        _ => return three_term(&LambdaSeq::for_family(id)?, n),
    };
    raw.iter().map(|p| Ok(id.apply_params_x(p)?)).collect()
}

/// The family value from its recurrence.
pub fn family_recur(id: &FamilyId, n: u32) -> Result<XPoly, Error> {
    Ok(family_recur_all(id, n)?.pop().expect("n + 1 values"))
}

/// `F_n = x F_(n-1) - q^(n-1) x F_(n-3) + q^(n-1) F_(n-4)` for `n >= 4`,
/// seeded with `F_0 ..= F_3` from the operator recurrence.
pub fn family_recur_alt(n: u32) -> Vec<XPoly> {
    let n = n as usize;
    let mut out = operator_recurrence(2, 1, n.min(3));
    for j in 4..=n {
        let qn = RatFunc::q_pow(j as i32 - 1);
        let mut p = out[j - 1].mul_x(1);
        p = &p - &out[j - 3].mul_x(1).scale(&qn);
        p = &p + &out[j - 4].scale(&qn);
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_closed;

    fn routes_agree(id: &FamilyId, n: u32) {
        let all = family_recur_all(id, n).unwrap();
        for (j, p) in all.iter().enumerate() {
            assert_eq!(p, &family_closed(id, j as u32).unwrap(), "{id} at n = {j}");
        }
    }

    #[test]
    fn every_family_two_routes() {
        for name in FamilyName::ALL {
            let mut ids = vec![FamilyId::new(name)];
            if name.takes_m() {
                for m in [1, 3] {
                    ids.push(FamilyId::new(name).with_m(m).unwrap());
                }
            }
            for id in ids {
                let n = if id.m >= 3 { 8 } else { 7 };
                routes_agree(&id, n);
            }
        }
    }

    #[test]
    fn alternative_f_recurrence() {
        let id = FamilyId::new(FamilyName::CurFib);
        let alt = family_recur_alt(8);
        for (j, p) in alt.iter().enumerate() {
            assert_eq!(p, &family_closed(&id, j as u32).unwrap());
        }
    }
}
