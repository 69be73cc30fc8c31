use crate::families::{family_closed, XPoly};
use crate::moments::qcatalan_quotient;
use crate::qkernel::RatFunc;
use crate::qseries::{binom2, series_e, TruncSeries};

use crate::verify::util::*;
use crate::verify::Ctx;

pub fn eq_2_1(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        routes_agree(&fam_m("fq", m), ctx.bound)?;
    }
    Ok(None)
}

pub fn eq_2_2(ctx: &Ctx) -> Outcome {
    for m in 1..=4i64 {
        let id = fam_m("fq", m as u32);
        let f = closed_upto(&id, ctx.bound)?;
        for n in 1..=ctx.bound as i64 {
            let rhs = &f[n as usize - 1].mul_x(1) - &at(&f, n - m).scale(&RatFunc::q_pow((n - m) as i32));
            same(|| format!("{id} n={n}"), &f[n as usize], &rhs)?;
        }
    }
    Ok(None)
}

pub fn eq_2_3(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    for m in 1..=4 {
        let c = series(moments(&fam_m("fq", m), b)?);
        let mut prod = TruncSeries::one(b);
        for i in 0..m as i32 {
            prod = &prod * &c.scale_u(i);
        }
        let rhs = &TruncSeries::one(b) + &prod.shift(1);
        series_same(&format!("m={m}"), &c, &rhs)?;
    }
    Ok(None)
}

pub fn eq_2_4(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        let c = series(moments(&fam_m("fq", m), ctx.bound)?);
        let quotient = series(qcatalan_quotient(ctx.bound, m)?);
        series_same(&format!("m={m}"), &c, &quotient)?;
    }
    Ok(None)
}

/// Holds with the exponent `m binom(n,2)`; it fails for every `m != 1`
/// with plain `binom(n,2)`.
pub fn eq_2_5(ctx: &Ctx) -> Outcome {
    for m in 1..=4u32 {
        let e = series_e(m, ctx.bound);
        let lhs = &e - &e.scale_u(1);
        series_same(&format!("m={m}"), &lhs, &e.scale_u(m as i32).shift(1))?;
    }
    Ok(None)
}

pub fn eq_2_6(ctx: &Ctx) -> Outcome {
    let c = moments(&fam_m("fq", 2), ctx.bound)?;
    for n in 1..c.len() {
        let mut sum = RatFunc::zero();
        for k in 0..n {
            sum = &sum + &(&c[k] * &c[n - 1 - k]).mul_q_pow(k as i32);
        }
        same(|| format!("C_{n}"), &c[n], &sum)?;
    }
    Ok(None)
}

/// `Σ_k (-1)^k q^(m binom(k,2)) [top(n,k), k] C_(n-k)` for `n >= 1`.
fn annihilates(m: u32, b: usize, top: impl Fn(i64, i64) -> i64) -> Step {
    let c = moments(&fam_m("fq", m), b)?;
    for n in 1..=b as i64 {
        let mut sum = RatFunc::zero();
        for k in 0..=n {
            let w = qb(top(n, k), k).scale(&sign(k)).mul_q_pow((m as i64 * binom2(k)) as i32);
            sum = &sum + &(&w * &c[(n - k) as usize]);
        }
        same(|| format!("m={m} n={n}"), &sum, &RatFunc::zero())?;
    }
    Ok(())
}

pub fn eq_2_7(ctx: &Ctx) -> Outcome {
    annihilates(2, ctx.bound, |n, k| n + 1 - k)?;
    // The same sum as Λ(x^(n-1) f_(n+1)).
    let lam = Functional::new(&fam_m("fq", 2), 2 * ctx.bound)?;
    for n in 1..=ctx.bound as u32 {
        let p = &XPoly::x_pow(n - 1) * &family_closed(&fam_m("fq", 2), n + 1)?;
        same(|| format!("Λ(x^{} f_{})", n - 1, n + 1), &lam.apply(&p), &RatFunc::zero())?;
    }
    Ok(None)
}

pub fn eq_2_8(ctx: &Ctx) -> Outcome {
    for m in 1..=3u32 {
        let mm = m as i64;
        annihilates(m, ctx.bound.min(8), |n, k| 1 + (mm - 1) * (n - k))?;
    }
    Ok(None)
}

fn inverse_series(m: u32, b: usize) -> Step {
    let c = moments(&fam_m("fq", m), b)?;
    let mm = m as i64;
    let lhs = inverse_sum(&c, b, |n| -mm * binom2(n), |_| 0, -1, |n| (mm * n + 1) as usize)?;
    series_same(&format!("m={m}"), &lhs, &TruncSeries::one(b))
}

pub fn eq_2_9(ctx: &Ctx) -> Outcome {
    inverse_series(2, ctx.bound)?;
    Ok(None)
}

pub fn eq_2_10(ctx: &Ctx) -> Outcome {
    for m in 1..=4 {
        inverse_series(m, ctx.bound)?;
    }
    Ok(None)
}
