use crate::families::{family_closed, family_recur_alt, operator_a_apply, phi_substitute, FamilyName, XPoly};
use crate::qkernel::RatFunc;
use crate::qseries::{binom2, TruncSeries};

use crate::verify::util::*;
use crate::verify::Ctx;

pub fn eq_3_1(ctx: &Ctx) -> Outcome {
    routes_agree(&fam("F"), ctx.bound)?;
    Ok(None)
}

pub fn witness(_: &Ctx) -> Outcome {
    let id = fam("F");
    let lam = Functional::new(&id, 4)?;
    let v = lam.apply(&family_closed(&id, 3)?.mul_x(1));
    let want = &RatFunc::q_pow(4) - &RatFunc::q_pow(3);
    same(|| "Λ_F(x F_3)".to_string(), &v, &want)?;
    Ok(Some(v.to_string()))
}

fn substitution_matches(classical: FamilyName, id: &str, b: usize) -> Step {
    let values = closed_upto(&fam(id), b)?;
    for (n, p) in values.iter().enumerate() {
        same(|| format!("n={n}"), &phi_substitute(classical, n as u32)?, p)?;
    }
    Ok(())
}

pub fn eq_3_2(ctx: &Ctx) -> Outcome {
    substitution_matches(FamilyName::Fib, "F", ctx.bound)?;
    Ok(None)
}

pub fn eq_3_3(ctx: &Ctx) -> Outcome {
    let f = closed_upto(&fam("F"), ctx.bound)?;
    for n in 2..f.len() {
        let rhs = &operator_a_apply(&f[n - 1]) - &f[n - 2];
        same(|| format!("n={n}"), &f[n], &rhs)?;
    }
    Ok(None)
}

pub fn eq_3_4(ctx: &Ctx) -> Outcome {
    let f = closed_upto(&fam("F"), ctx.bound)?;
    for (n, p) in family_recur_alt(ctx.bound as u32).iter().enumerate() {
        same(|| format!("n={n}"), &f[n], p)?;
    }
    Ok(None)
}

pub fn eq_3_5(ctx: &Ctx) -> Outcome {
    expansion_holds(&fam("F"), ctx.bound, |n, k| Ok(&qb(n, k) - &qb(n, k - 1)))?;
    Ok(None)
}

pub fn eq_3_6(ctx: &Ctx) -> Outcome {
    let mu = moments(&fam("F"), ctx.bound)?;
    for (n, v) in mu.iter().enumerate() {
        let n = n as i64;
        let diff = &qb(2 * n, n) - &qb(2 * n, n - 1);
        same(|| format!("n={n} difference"), v, &diff)?;
        let catalan = qb(2 * n, n).checked_div(&qint(n + 1))?.mul_q_pow(n as i32);
        same(|| format!("n={n} q^n c_q(n)"), v, &catalan)?;
    }
    Ok(None)
}

pub fn eq_3_7(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let c: Vec<RatFunc> = moments(&fam("F"), b)?.iter().enumerate().map(|(n, v)| v.mul_q_pow(-(n as i32))).collect();
    let lhs = inverse_sum(&c, b, |n| -binom2(n), |n| -n, 1, |n| (2 * n + 1) as usize)?;
    series_same("Σ c_n q^-binom(n,2) u^n/(-q^-n u;q)_(2n+1)", &lhs, &TruncSeries::one(b))?;
    Ok(None)
}

pub fn eq_3_8(ctx: &Ctx) -> Outcome {
    let l = closed_upto(&fam("lq"), ctx.bound)?;
    let f = closed_upto(&fam("F"), ctx.bound)?;
    for n in 2..l.len() {
        same(|| format!("n={n}"), &l[n], &(&f[n] - &f[n - 2]))?;
    }
    Ok(None)
}

pub fn eq_3_10(ctx: &Ctx) -> Outcome {
    routes_agree(&fam("lq"), ctx.bound)?;
    Ok(None)
}

pub fn eq_3_11(ctx: &Ctx) -> Outcome {
    substitution_matches(FamilyName::Lucas, "lq", ctx.bound)?;
    Ok(None)
}

pub fn eq_3_12(ctx: &Ctx) -> Outcome {
    expansion_holds(&fam("lq"), ctx.bound, |n, k| Ok(qb(n, k)))?;
    Ok(None)
}

pub fn eq_3_13(ctx: &Ctx) -> Outcome {
    moments_match(&fam("lq"), ctx.bound, |n| Ok(qb(2 * n, n)))?;
    Ok(None)
}

fn lucas_inverse_series(m: u32, b: usize) -> Step {
    let mu = moments(&fam_m("lq", m), b)?;
    let mm = m as i64;
    let lhs = inverse_sum(&mu, b, |n| -binom2(n + 1), |n| -n, 1, |n| (mm * n + 1) as usize)?;
    let rhs = TruncSeries::from_fn(b, |n| RatFunc::q_pow(-binom2(n as i64 + 1) as i32));
    series_same(&format!("m={m}"), &lhs, &rhs)
}

pub fn eq_3_14(ctx: &Ctx) -> Outcome {
    lucas_inverse_series(2, ctx.bound)?;
    Ok(None)
}

/// The moments of `id` define its functional: `Λ(p_n) = [n = 0]` and
/// `Λ(x^j) = 0` unless `m | j`.
fn defines_functional(id: &str, b: usize) -> Step {
    for m in 1..=4u32 {
        let id = fam_m(id, m);
        let deg = if m >= 3 { b.min(8) } else { b };
        let lam = Functional::new(&id, deg)?;
        let p = closed_upto(&id, deg)?;
        for (n, pn) in p.iter().enumerate() {
            let want = if n == 0 { RatFunc::one() } else { RatFunc::zero() };
            same(|| format!("{id} Λ(p_{n})"), &lam.apply(pn), &want)?;
            if n % m as usize != 0 {
                same(|| format!("{id} Λ(x^{n})"), &lam.apply(&XPoly::x_pow(n as u32)), &RatFunc::zero())?;
            }
        }
    }
    Ok(())
}

pub fn eq_3_17(ctx: &Ctx) -> Outcome {
    defines_functional("F", ctx.bound)?;
    Ok(None)
}

pub fn eq_3_22(ctx: &Ctx) -> Outcome {
    defines_functional("lq", ctx.bound)?;
    Ok(None)
}

pub fn eq_3_16(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        routes_agree(&fam_m("F", m), ctx.bound)?;
    }
    let f1 = closed_upto(&fam_m("F", 1), ctx.bound)?;
    let mut prod = XPoly::one();
    for (n, p) in f1.iter().enumerate() {
        if n > 0 {
            prod = &prod * &XPoly::from_coeffs([(1, RatFunc::one()), (0, -&RatFunc::q_pow(n as i32))]);
        }
        same(|| format!("m=1 n={n} product"), p, &prod)?;
    }
    Ok(None)
}

/// `Σ_k (-1)^k q^e(k) [mn-(m-1)k, k] w(n,k) μ_(n-k) = 0` for `n >= 1`.
fn annihilates(
    id: &str,
    b: usize,
    e: impl Fn(i64) -> i64,
    w: impl Fn(i64, i64, i64) -> Result<RatFunc, Failure>,
) -> Step {
    for m in 1..=3i64 {
        let mu = moments(&fam_m(id, m as u32), b)?;
        for n in 1..=b as i64 {
            let mut sum = RatFunc::zero();
            for k in 0..=n {
                let c = &qb(m * n - (m - 1) * k, k).scale(&sign(k)).mul_q_pow(e(k) as i32) * &w(m, n, k)?;
                sum = &sum + &(&c * &mu[(n - k) as usize]);
            }
            same(|| format!("m={m} n={n}"), &sum, &RatFunc::zero())?;
        }
    }
    Ok(())
}

pub fn eq_3_18(ctx: &Ctx) -> Outcome {
    annihilates("F", ctx.bound.min(8), |k| binom2(k + 1), |_, _, _| Ok(RatFunc::one()))?;
    Ok(None)
}

pub fn eq_3_19(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for m in 1..=4u32 {
        let mu = moments(&fam_m("F", m), b)?;
        let mm = m as i64;
        let lhs = inverse_sum(&mu, b, |n| -binom2(n + 1), |n| -n, 1, |n| (mm * n + 1) as usize)?;
        series_same(&format!("m={m}"), &lhs, &TruncSeries::one(b))?;
    }
    Ok(None)
}

pub fn eq_3_20(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        routes_agree(&fam_m("lq", m), ctx.bound)?;
    }
    // m = 1: (x - 1 - q^n)(x - q)...(x - q^(n-1))
    let l1 = closed_upto(&fam_m("lq", 1), ctx.bound)?;
    let mut prod = XPoly::one();
    for (n, p) in l1.iter().enumerate().skip(1) {
        let head = &XPoly::x_pow(1) - &XPoly::constant(&RatFunc::one() + &RatFunc::q_pow(n as i32));
        same(|| format!("m=1 n={n} product"), p, &(&head * &prod))?;
        prod = &prod * &(&XPoly::x_pow(1) - &XPoly::constant(RatFunc::q_pow(n as i32)));
    }
    Ok(None)
}

pub fn eq_3_21(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        let l = closed_upto(&fam_m("lq", m as u32), ctx.bound)?;
        let f = closed_upto(&fam_m("F", m as u32), ctx.bound)?;
        for n in 1..=ctx.bound as i64 {
            same(|| format!("m={m} n={n}"), &l[n as usize], &(&f[n as usize] - &at(&f, n - m)))?;
        }
    }
    Ok(None)
}

pub fn eq_3_23(ctx: &Ctx) -> Outcome {
    annihilates("lq", ctx.bound.min(8), binom2, |m, n, k| {
        Ok(qint(m * n - (m - 2) * k).checked_div(&qint(m * n - (m - 1) * k))?)
    })?;
    Ok(None)
}

pub fn eq_3_24(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        lucas_inverse_series(m, ctx.bound)?;
    }
    Ok(None)
}
