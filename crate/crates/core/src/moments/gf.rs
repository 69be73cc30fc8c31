use crate::error::Error;
use crate::families::{FamilyId, FamilyName};
use crate::qkernel::{frac, RatFunc, Var};
use crate::qseries::{series_e, series_g, series_g_q, TruncSeries};

/// Solves `y = f(y)` by iteration from `y = 1`; each pass fixes one more
/// coefficient when `f` raises the order in `u`.
fn fixed_point<F>(order: usize, f: F) -> TruncSeries
where
    F: Fn(&TruncSeries) -> TruncSeries,
{
    let mut y = TruncSeries::one(order);
    for _ in 0..=order {
        y = f(&y);
    }
    y
}

/// `Φ_m(u) = 1 + u Φ_m(u)^m`, the Fuss–Catalan series.
pub(crate) fn fuss_series(m: u32, order: usize) -> TruncSeries {
    let u = TruncSeries::u(order);
    fixed_point(order, |y| &TruncSeries::one(order) + &(&u * &y.pow(m)))
}

/// `1 / (1 - c u Φ_m(u)^(m-1))`
fn lucas_type(c: RatFunc, m: u32, order: usize) -> Result<TruncSeries, Error> {
    let phi = fuss_series(m, order);
    let inner = TruncSeries::u(order).scale(&c);
    let d = &TruncSeries::one(order) - &(&inner * &phi.pow(m - 1));
    Ok(d.inverse()?)
}

/// `E^(m)(-q u) / E^(m)(-u)` with `u` scaled by `c`.
fn carlitz(m: u32, c: &RatFunc, order: usize) -> Result<TruncSeries, Error> {
    let e = series_e(m, order);
    let num = e.scale_u_by(&c.mul_q_pow(1).scale(&frac(-1, 1)));
    let den = e.scale_u_by(&c.scale(&frac(-1, 1)));
    Ok(num.checked_div(&den)?)
}

/// `G(a u, w_1, q) / G(b u, w_0, q)`
fn g_quotient(a: RatFunc, w1: &RatFunc, b: RatFunc, w0: &RatFunc, order: usize) -> Result<TruncSeries, Error> {
    let num = series_g(&a, w1, order)?;
    let den = series_g(&b, w0, order)?;
    Ok(num.checked_div(&den)?)
}

fn neg_q(e: i32) -> RatFunc {
    RatFunc::q_pow(e).scale(&frac(-1, 1))
}

pub fn has_series_route(name: FamilyName) -> bool {
    use FamilyName::*;
    !matches!(name, CurFib | CurLucas | BiT | BiU | LucasS | RogersSzego)
}

/// The moment generating function `Σ Λ(x^(mn)) u^n` from its closed
/// series representation.
pub fn gf_moments(id: &FamilyId, order: usize) -> Result<TruncSeries, Error> {
    use FamilyName::*;
    let m = id.m;
    let quarter = RatFunc::constant(frac(1, 4));
    let series = match id.name {
        Fib => fuss_series(2, order),
        FibM => fuss_series(m, order),
        Lucas => lucas_type(RatFunc::int(2), 2, order)?,
        LucasM => lucas_type(RatFunc::int(m as i64), m, order)?,
        LucasBigM => lucas_type(RatFunc::int(2), m, order)?,
        ChebU => fuss_series(2, order).scale_u_by(&quarter),
        ChebT => {
            let c = fuss_series(2, order).scale_u_by(&quarter);
            let half_u = TruncSeries::u(order).scale(&RatFunc::constant(frac(1, 2)));
            (&TruncSeries::one(order) - &(&half_u * &c)).inverse()?
        }
        FibQ => carlitz(m, &RatFunc::one(), order)?,
        FibS => carlitz(m, &id.s.as_ratfunc(Var::S), order)?,
        QChebU => g_quotient(neg_q(2), &neg_q(2), neg_q(1), &neg_q(1), order)?,
        QChebT => {
            let num = series_g_q(&RatFunc::q_pow(2), order);
            let den = series_g_q(&RatFunc::q_pow(1), order);
            num.checked_div(&den)?
        }
        FibZ => {
            let z = id.z.as_ratfunc(Var::Z);
            g_quotient(neg_q(2), &z.mul_q_pow(1), neg_q(1), &z, order)?
        }
        LucasZ => {
            let z = id.z.as_ratfunc(Var::Z);
            g_quotient(neg_q(2), &z, neg_q(1), &z, order)?
        }
        CurFib | CurLucas | BiT | BiU | LucasS | RogersSzego => {
            return Err(Error::NoSeriesRoute(id.name.id().to_string()))
        }
    };
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::{moment_vector, MomentRoute};
    use crate::qkernel::parse_ratfunc;

    #[test]
    fn classical_coefficients() {
        let c: Vec<String> = gf_moments(&FamilyId::parse("f").unwrap(), 6).unwrap().render();
        assert_eq!(c, ["1", "1", "2", "5", "14", "42", "132"]);
        let b = gf_moments(&FamilyId::parse("l").unwrap(), 4).unwrap().render();
        assert_eq!(b, ["1", "2", "6", "20", "70"]);
        let f3 = gf_moments(&FamilyId::parse("fm").unwrap().with_m(3).unwrap(), 4).unwrap().render();
        assert_eq!(f3, ["1", "1", "3", "12", "55"]);
    }

    #[test]
    fn series_matches_triangle() {
        for id in ["f", "l", "tc", "uc", "fq", "u", "t", "fz", "lz", "fs"] {
            let id = FamilyId::parse(id).unwrap();
            let s = moment_vector(&id, 4, MomentRoute::Series).unwrap();
            let t = moment_vector(&id, 4, MomentRoute::Triangle).unwrap();
            assert_eq!(s, t, "{id}");
        }
    }

    #[test]
    fn andrews_first_terms() {
        let s = gf_moments(&FamilyId::parse("u").unwrap(), 2).unwrap();
        assert_eq!(s.coeff(1), &parse_ratfunc("q/((1+q)(1+q^2))").unwrap());
    }
}
