use crate::families::{dq, rogers_szego, FamilyId, FamilyName};
use crate::moments::{has_series_route, moment_vector, MomentRoute};
use crate::qkernel::{frac, RatFunc, Var};
use crate::qseries::ZParam;

use crate::verify::util::*;
use crate::verify::Ctx;

pub fn route_equality(ctx: &Ctx) -> Outcome {
    for name in FamilyName::ALL {
        let ms: Vec<u32> = if name.takes_m() { vec![1, 2, 3, 4] } else { vec![name.fixed_m()] };
        for m in ms {
            let id = FamilyId::new(name).with_m(m)?;
            let b = if m >= 3 { ctx.bound.min(8) } else { ctx.bound };
            routes_agree(&id, b)?;
        }
    }
    Ok(None)
}

fn routes_match(id: &FamilyId, b: usize) -> Step {
    let tri = moment_vector(id, b, MomentRoute::Triangle)?;
    let exp = moment_vector(id, b, MomentRoute::Expand)?;
    for n in 0..=b {
        same(|| format!("{id} n={n} triangle vs expand"), &tri.values[n], &exp.values[n])?;
    }
    if has_series_route(id.name) {
        let ser = moment_vector(id, b, MomentRoute::Series)?;
        for n in 0..=b {
            same(|| format!("{id} n={n} triangle vs series"), &tri.values[n], &ser.values[n])?;
        }
    }
    Ok(())
}

pub fn triple_route(ctx: &Ctx) -> Outcome {
    for id in ["f", "l", "fq", "u", "t", "fz", "lz"] {
        routes_match(&fam(id), ctx.bound)?;
    }
    for id in ["fm", "fq"] {
        for m in [3, 4] {
            routes_match(&fam_m(id, m), ctx.bound.min(5))?;
        }
    }
    Ok(None)
}

pub fn qbinomial_symmetry(ctx: &Ctx) -> Outcome {
    for n in 0..=ctx.bound as i64 {
        for k in 0..=n {
            same(|| format!("[{n},{k}]"), &qb(n, k), &qb(n, n - k))?;
        }
    }
    Ok(None)
}

/// `[n,k] = q^k [n-1,k] + [n-1,k-1] = [n-1,k] + q^(n-k) [n-1,k-1]`
pub fn qbinomial_pascal(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.bound as i64 {
        for k in 0..=n {
            let first = &qb(n - 1, k).mul_q_pow(k as i32) + &qb(n - 1, k - 1);
            let second = &qb(n - 1, k) + &qb(n - 1, k - 1).mul_q_pow((n - k) as i32);
            same(|| format!("[{n},{k}] first rule"), &qb(n, k), &first)?;
            same(|| format!("[{n},{k}] second rule"), &qb(n, k), &second)?;
        }
    }
    Ok(None)
}

pub fn rogers_szego_dq(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.bound as u32 {
        let rhs = rogers_szego(n - 1).scale(&qint(n as i64));
        same(|| format!("n={n}"), &dq(&rogers_szego(n)), &rhs)?;
    }
    Ok(None)
}

fn limit_is(id: &FamilyId, classical: &FamilyId, b: usize, z_is_minus_q: bool) -> Step {
    let p = closed_upto(id, b)?;
    let want = closed_upto(classical, b)?;
    for n in 0..=b {
        let mut v = p[n].clone();
        if z_is_minus_q {
            v = v.try_map(|c| c.substitute(Var::Z, &neg_q(1)))?;
        }
        same(|| format!("{id} n={n}"), &v.limit_q1()?, &want[n])?;
    }
    Ok(())
}

pub fn classical_limit(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for m in 1..=4 {
        let fm = fam_m("fm", m);
        limit_is(&fam_m("fq", m), &fm, b, false)?;
        limit_is(&fam_m("F", m), &fm, b, false)?;
        limit_is(&fam_m("lq", m), &fam_m("Lm", m), b, false)?;
        let s_one = fam_m("fs", m).with_s(ZParam::Value(frac(1, 1)))?;
        limit_is(&s_one, &fm, b, false)?;
    }
    limit_is(&fam("u"), &fam("uc"), b, false)?;
    limit_is(&fam("t"), &fam("tc"), b, false)?;
    limit_is(&fam("fz"), &fam("uc"), b, true)?;
    limit_is(&fam("lz"), &fam("tc"), b, true)?;
    // The Rogers-Szego polynomials tend to (x + s)^n.
    let s = RatFunc::var(Var::S);
    let lin = &crate::families::XPoly::x_pow(1) + &crate::families::XPoly::constant(s);
    let mut pow = crate::families::XPoly::one();
    for n in 0..=b as u32 {
        same(|| format!("r_{n}"), &rogers_szego(n).limit_q1()?, &pow)?;
        pow = &pow * &lin;
    }
    Ok(None)
}
