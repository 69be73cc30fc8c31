use crate::families::{family_recur_all, rogers_szego, LambdaSeq, XPoly};
use crate::moments::{expand_against, triangle};
use crate::qkernel::{frac, RatFunc, Var};
use crate::qseries::{series_theta, TruncSeries};

use crate::verify::util::*;
use crate::verify::Ctx;

pub fn eq_1_3(ctx: &Ctx) -> Outcome {
    gram(&fam("f"), ctx.bound.min(6), |_| Ok(RatFunc::one()))?;
    Ok(None)
}

pub fn eq_1_4(ctx: &Ctx) -> Outcome {
    expansion_holds(&fam("f"), ctx.bound, |n, k| Ok(RatFunc::constant(choose(n, k) - choose(n, k - 1))))?;
    Ok(None)
}

pub fn eq_1_5(ctx: &Ctx) -> Outcome {
    moments_match(&fam("f"), ctx.bound, |n| Ok(RatFunc::constant(choose(2 * n, n) / frac(n + 1, 1))))?;
    Ok(None)
}

pub fn eq_1_13(ctx: &Ctx) -> Outcome {
    gram(&fam("l"), ctx.bound.min(6), |n| Ok(RatFunc::int(if n == 0 { 1 } else { 2 })))?;
    Ok(None)
}

pub fn eq_1_14(ctx: &Ctx) -> Outcome {
    expansion_holds(&fam("l"), ctx.bound, |n, k| Ok(choose_rf(n, k)))?;
    Ok(None)
}

pub fn eq_1_15(ctx: &Ctx) -> Outcome {
    moments_match(&fam("l"), ctx.bound, |n| Ok(choose_rf(2 * n, n)))?;
    Ok(None)
}

pub fn eq_1_17(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let w = one_plus_u(&RatFunc::one(), b).inverse()?;
    let w2 = &w * &w;
    let mut pw = w.clone();
    let mut lhs = TruncSeries::zero(b);
    for n in 0..=b {
        lhs = &lhs + &pw.shift(n).scale(&choose_rf(2 * n as i64, n as i64));
        pw = &pw * &w2;
    }
    let rhs = one_plus_u(&RatFunc::int(-1), b).inverse()?;
    series_same("Σ B_n u^n/(1+u)^(2n+1)", &lhs, &rhs)?;
    Ok(None)
}

pub fn eq_1_20(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        let c = (m - 1) as i64;
        expansion_holds(&fam_m("fm", m), ctx.bound, |n, k| {
            Ok(RatFunc::constant(choose(n, k) - choose(n, k - 1) * frac(c, 1)))
        })?;
    }
    Ok(None)
}

pub fn eq_1_21(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        moments_match(&fam_m("fm", m as u32), ctx.bound, |n| {
            let fuss = choose(m * n, n) / frac((m - 1) * n + 1, 1);
            let diff = choose(m * n, n) - choose(m * n, n - 1) * frac(m - 1, 1);
            same(|| format!("m={m} n={n} closed forms"), &RatFunc::constant(fuss.clone()), &RatFunc::constant(diff))?;
            Ok(RatFunc::constant(fuss))
        })?;
    }
    Ok(None)
}

pub fn eq_1_23(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        let l = closed_upto(&fam_m("lm", m as u32), ctx.bound)?;
        let f = closed_upto(&fam_m("fm", m as u32), ctx.bound)?;
        for n in 1..=ctx.bound as i64 {
            let rhs = &f[n as usize] - &at(&f, n - m).scale(&RatFunc::int(m - 1));
            same(|| format!("m={m} n={n}"), &l[n as usize], &rhs)?;
        }
    }
    Ok(None)
}

pub fn eq_1_24(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        expansion_holds(&fam_m("lm", m), ctx.bound, |n, k| Ok(choose_rf(n, k)))?;
    }
    Ok(None)
}

pub fn eq_1_25(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        moments_match(&fam_m("lm", m as u32), ctx.bound, |n| Ok(choose_rf(m * n, n)))?;
    }
    Ok(None)
}

pub fn eq_1_27(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        let l = closed_upto(&fam_m("Lm", m as u32), ctx.bound)?;
        let f = closed_upto(&fam_m("fm", m as u32), ctx.bound)?;
        for n in 1..=ctx.bound as i64 {
            let rhs = &f[n as usize] - &at(&f, n - m);
            same(|| format!("m={m} n={n}"), &l[n as usize], &rhs)?;
        }
    }
    Ok(None)
}

pub fn eq_1_28(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        expansion_holds(&fam_m("Lm", m as u32), ctx.bound, |n, k| {
            let tail = (0..k).fold(frac(0, 1), |acc, j| acc + choose(n, j));
            Ok(RatFunc::constant(choose(n, k) - tail * frac(m - 2, 1)))
        })?;
    }
    Ok(None)
}

pub fn eq_1_29(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        moments_match(&fam_m("Lm", m as u32), ctx.bound, |n| {
            let tail = (0..n).fold(frac(0, 1), |acc, j| acc + choose(m * n, j));
            Ok(RatFunc::constant(choose(m * n, n) - tail * frac(m - 2, 1)))
        })?;
    }
    Ok(None)
}

pub fn eq_1_30(ctx: &Ctx) -> Outcome {
    let s = RatFunc::var(Var::S);
    let x_plus_s = &XPoly::x_pow(1) + &XPoly::constant(s.clone());
    for n in 0..ctx.bound as u32 {
        let mut rhs = &x_plus_s * &rogers_szego(n);
        if n >= 1 {
            let c = &(&RatFunc::q_pow(n as i32) - &RatFunc::one()) * &s;
            rhs = &rhs + &rogers_szego(n - 1).mul_x(1).scale(&c);
        }
        same(|| format!("r_{}", n + 1), &rogers_szego(n + 1), &rhs)?;
    }
    Ok(None)
}

/// `(1 - u) φ(u) = (1 - a u) φ(qu)` pins down `(au;q)_∞ / (u;q)_∞`.
pub fn eq_1_31(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let a = RatFunc::var(Var::S);
    let phi = TruncSeries::try_from_fn(b, |k| {
        let num = crate::qseries::pochhammer_rf(&a, k as u32);
        Ok(&num * &crate::qseries::inv_q_factorial(k as u32))
    })?;
    let lhs = &one_plus_u(&RatFunc::int(-1), b) * &phi;
    let rhs = &one_plus_u(&-&a, b) * &phi.scale_u(1);
    series_same("(1-u)φ(u) vs (1-au)φ(qu)", &lhs, &rhs)?;
    Ok(None)
}

/// `e(u) = 1/(u;q)_∞` is fixed by `(1 - u) e(u) = e(qu)`.
pub fn eq_1_32(ctx: &Ctx) -> Outcome {
    let e = series_theta(0, false, ctx.bound);
    let lhs = &one_plus_u(&RatFunc::int(-1), ctx.bound) * &e;
    series_same("(1-u)e(u) vs e(qu)", &lhs, &e.scale_u(1))?;
    Ok(None)
}

/// `E(u) = (u;q)_∞` is fixed by `E(u) = (1 - u) E(qu)`, and `e E = 1`.
pub fn eq_1_33(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let big_e = series_theta(1, true, b);
    let rhs = &one_plus_u(&RatFunc::int(-1), b) * &big_e.scale_u(1);
    series_same("E(u) vs (1-u)E(qu)", &big_e, &rhs)?;
    let prod = &series_theta(0, false, b) * &big_e;
    series_same("e(u)E(u)", &prod, &TruncSeries::one(b))?;
    Ok(None)
}

pub fn eq_1_34(ctx: &Ctx) -> Outcome {
    for n in 0..=ctx.bound as i64 {
        let lhs = XPoly::from_coeffs((0..=n).map(|k| {
            let c = qb(n, k).scale(&sign(k)).mul_q_pow(crate::qseries::binom2(k) as i32);
            (k as u32, c)
        }));
        let mut rhs = XPoly::one();
        for j in 0..n as i32 {
            let f = XPoly::from_coeffs([(0, RatFunc::one()), (1, -&RatFunc::q_pow(j))]);
            rhs = &rhs * &f;
        }
        same(|| format!("n={n}"), &lhs, &rhs)?;
    }
    Ok(None)
}

pub fn eq_1_35(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for n in 1..=b as i64 {
        let sum = TruncSeries::from_fn(b, |k| qb(n + k as i64 - 1, k as i64));
        let mut poch = TruncSeries::one(b);
        for j in 0..n as i32 {
            poch = &poch * &one_plus_u(&-&RatFunc::q_pow(j), b);
        }
        series_same(&format!("n={n} (u;q)_n Σ"), &(&sum * &poch), &TruncSeries::one(b))?;
    }
    Ok(None)
}

fn limit_matches(q_family: &str, classical: &str, b: usize) -> Step {
    let q_values = closed_upto(&fam(q_family), b)?;
    let c_values = closed_upto(&fam(classical), b)?;
    for n in 0..=b {
        same(|| format!("{q_family} n={n}"), &q_values[n].limit_q1()?, &c_values[n])?;
    }
    Ok(())
}

pub fn eq_1_36(ctx: &Ctx) -> Outcome {
    limit_matches("t", "tc", ctx.bound)?;
    Ok(None)
}

pub fn eq_1_37(ctx: &Ctx) -> Outcome {
    limit_matches("u", "uc", ctx.bound)?;
    Ok(None)
}

/// The triangle entries are the coefficients of `x^n` in the basis.
pub fn eq_1_40(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for id in [fam("f"), fam("l"), fam("u"), fam("t"), fam_m("fq", 3)] {
        let t = triangle(&LambdaSeq::for_family(&id)?, b)?;
        let values = family_recur_all(&id, b as u32)?;
        for n in 0..=b {
            let e = expand_against(&values, n)?;
            for k in 0..=n {
                let want = e.get(&(k as u32)).cloned().unwrap_or_default();
                same(|| format!("{id} c({n},{k})"), t.get(n, k), &want)?;
            }
        }
    }
    Ok(None)
}

pub fn eq_1_42(ctx: &Ctx) -> Outcome {
    for id in [fam_m("fm", 3), fam_m("fq", 3), fam_m("fq", 4), fam("u")] {
        let m = id.m as usize;
        let size = m * ctx.bound;
        let t = triangle(&LambdaSeq::for_family(&id)?, size)?;
        for n in 0..=size {
            for k in 0..=n {
                if (n - k) % m != 0 {
                    same(|| format!("{id} c({n},{k})"), t.get(n, k), &RatFunc::zero())?;
                }
            }
        }
    }
    Ok(None)
}

fn decomposition_lambdas() -> Vec<(String, LambdaSeq)> {
    let mut out = Vec::new();
    for (id, m) in [("fm", 1), ("fm", 3), ("lm", 3), ("fq", 1), ("fq", 2), ("fq", 3), ("u", 2), ("t", 2), ("tc", 2)] {
        let id = if id == "fm" || id == "lm" || id == "fq" { fam_m(id, m) } else { fam(id) };
        out.push((id.to_string(), LambdaSeq::for_family(&id).expect("three-term")));
    }
    out
}

pub fn eq_1_43(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for (name, lambda) in decomposition_lambdas() {
        let phi = triangle_series(&lambda, b)?;
        let mut rhs = phi.shift(1).scale(&lambda.weight(0)?);
        for i in 1..lambda.m as usize {
            rhs = &rhs * &triangle_series(&shifted(&lambda, i), b)?;
        }
        rhs = &TruncSeries::one(b) + &rhs;
        series_same(&name, &phi, &rhs)?;
    }
    Ok(None)
}

fn two_step_lambdas() -> Vec<(String, LambdaSeq)> {
    ["f", "l", "u", "t", "fq", "uc", "tc"]
        .into_iter()
        .map(|id| (id.to_string(), LambdaSeq::for_family(&fam(id)).expect("three-term")))
        .collect()
}

pub fn eq_1_44(ctx: &Ctx) -> Outcome {
    for (name, lambda) in two_step_lambdas() {
        let c = triangle_series(&lambda, ctx.bound)?;
        let bb = triangle_series(&shifted(&lambda, 1), ctx.bound)?;
        let l0 = lambda.weight(0)?;
        for n in 1..=ctx.bound {
            let mut sum = RatFunc::zero();
            for k in 0..n {
                sum = &sum + &(bb.coeff(k) * c.coeff(n - 1 - k));
            }
            same(|| format!("{name} c({},0)", 2 * n), c.coeff(n), &(&l0 * &sum))?;
        }
    }
    Ok(None)
}

pub fn eq_1_45(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for (name, lambda) in two_step_lambdas() {
        let phi = triangle_series(&lambda, b)?;
        let psi = triangle_series(&shifted(&lambda, 1), b)?;
        let rhs = &TruncSeries::one(b) + &(&phi * &psi).shift(1).scale(&lambda.weight(0)?);
        series_same(&name, &phi, &rhs)?;
    }
    Ok(None)
}

/// `Σ binom(mn,n) u^n = 1 / (1 - m u Φ_m^(m-1))`
pub fn psi_m(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for m in 1..=4i64 {
        let phi = triangle_series(&LambdaSeq::for_family(&fam_m("fm", m as u32))?, b)?;
        let psi = TruncSeries::from_fn(b, |n| choose_rf(m * n as i64, n as i64));
        let d = &TruncSeries::one(b) - &phi.pow(m as u32 - 1).shift(1).scale(&RatFunc::int(m));
        series_same(&format!("m={m}"), &psi, &d.inverse()?)?;
    }
    Ok(None)
}
