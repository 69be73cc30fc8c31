use crate::moments::andrews_catalan;
use crate::qkernel::{frac, RatFunc};
use crate::qseries::{binom2, series_g_q, series_h_g, TruncSeries, ZParam};

use crate::verify::util::*;
use crate::verify::Ctx;

/// `p_n = x p_(n-1) - w(n) p_(n-2)` against the closed form.
fn recurrence(id: &str, b: usize, w: impl Fn(i64) -> Result<RatFunc, Failure>) -> Step {
    let p = closed_upto(&fam(id), b)?;
    for n in 2..=b as i64 {
        let rhs = &p[n as usize - 1].mul_x(1) - &p[n as usize - 2].scale(&w(n)?);
        same(|| format!("{id} n={n}"), &p[n as usize], &rhs)?;
    }
    Ok(())
}

/// `1 + q^e`
fn one_plus_q(e: i64) -> RatFunc {
    &RatFunc::one() + &RatFunc::q_pow(e as i32)
}

pub fn eq_4_2(ctx: &Ctx) -> Outcome {
    recurrence("u", ctx.bound, |n| Ok(over(RatFunc::q_pow(n as i32 - 1), &[one_plus_q(n - 1), one_plus_q(n)])?))?;
    Ok(None)
}

pub fn eq_4_4(ctx: &Ctx) -> Outcome {
    gram(&fam("u"), ctx.bound, |n| {
        let num = RatFunc::q_pow(binom2(n + 1) as i32);
        Ok(&(&num * &inv_neg_poch(1, n)?) * &inv_neg_poch(2, n)?)
    })?;
    Ok(None)
}

pub fn eq_4_5(ctx: &Ctx) -> Outcome {
    expansion_holds(&fam("u"), ctx.bound, |n, k| {
        let d = &qb(n, k) - &qb(n, k - 1);
        Ok(&(&d * &inv_neg_poch(1, k)?) * &inv_neg_poch((n + 2 - 2 * k) as i32, k)?)
    })?;
    Ok(None)
}

/// `(-1)^n q^(n^2+n) (1+q) [1/2, n+1]_(q^2)` with
/// `[1/2, n+1]_(q^2) = Π_(j<=n) (1 - q^(1-2j)) / (1 - q^(2j+2))`.
/// With `q^(n^2)` alone the two sides differ by `q^n` from `n = 1` on.
fn half_binomial_form(n: i64) -> Result<RatFunc, Failure> {
    let mut acc = one_plus_q(1).scale(&sign(n)).mul_q_pow((n * n + n) as i32);
    for j in 0..=n {
        let f = one_minus(&RatFunc::q_pow((1 - 2 * j) as i32));
        acc = (&acc * &f).checked_div(&one_minus(&RatFunc::q_pow((2 * j + 2) as i32)))?;
    }
    Ok(acc)
}

pub fn eq_4_6(ctx: &Ctx) -> Outcome {
    let mu = moments(&fam("u"), ctx.bound)?;
    let andrews = andrews_catalan(ctx.bound)?;
    for (n, v) in mu.iter().enumerate() {
        same(|| format!("n={n} closed"), v, &andrews[n])?;
        same(|| format!("n={n} [1/2,n+1]"), v, &half_binomial_form(n as i64)?)?;
    }
    Ok(None)
}

pub fn eq_4_7(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let c = series(andrews_catalan(b)?);
    let cq = c.scale_u(1);
    let one_q = one_plus_q(1);
    let lhs = (&c + &cq.scale(&RatFunc::q_pow(1))).try_map(|r| r.checked_div(&one_q))?;
    let w = over(RatFunc::q_pow(1), &[one_q.clone(), one_q])?;
    let rhs = &TruncSeries::one(b) + &(&c * &cq).shift(1).scale(&w);
    series_same("(C(u)+qC(qu))/(1+q)", &lhs, &rhs)?;
    Ok(None)
}

pub fn eq_4_8(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let (h, _) = series_h_g(b + 1);
    let one_minus_u = &TruncSeries::one(b + 1) - &TruncSeries::u(b + 1);
    series_same("h(u)h(qu)", &(&h * &h.scale_u(1)), &one_minus_u)?;
    let c = andrews_catalan(b)?;
    let from_h = TruncSeries::from_fn(b, |n| -&(&one_plus_q(1) * h.coeff(n + 1)));
    series_same("(1+q)(1-h(u))/u", &series(c), &from_h)?;
    Ok(None)
}

pub fn eq_4_10(ctx: &Ctx) -> Outcome {
    recurrence("t", ctx.bound, |n| {
        let k = n - 2;
        if k == 0 {
            Ok(RatFunc::q_pow(1).checked_div(&one_plus_q(1))?)
        } else {
            Ok(over(RatFunc::q_pow(k as i32 + 1), &[one_plus_q(k), one_plus_q(k + 1)])?)
        }
    })?;
    Ok(None)
}

pub fn eq_4_11(ctx: &Ctx) -> Outcome {
    let t = closed_upto(&fam("t"), ctx.bound)?;
    let u = closed_upto(&fam("u"), ctx.bound)?;
    for n in 2..=ctx.bound as i64 {
        let w = over(RatFunc::q_pow((2 * n - 1) as i32), &[one_plus_q(n - 1), one_plus_q(n)])?;
        let rhs = &u[n as usize] - &u[n as usize - 2].scale(&w);
        same(|| format!("n={n}"), &t[n as usize], &rhs)?;
    }
    Ok(None)
}

pub fn eq_4_13(ctx: &Ctx) -> Outcome {
    gram(&fam("t"), ctx.bound, |n| {
        if n == 0 {
            return Ok(RatFunc::one());
        }
        let num = RatFunc::q_pow(binom2(n + 1) as i32);
        Ok(&(&num * &inv_neg_poch(1, n - 1)?) * &inv_neg_poch(1, n)?)
    })?;
    Ok(None)
}

pub fn eq_4_14(ctx: &Ctx) -> Outcome {
    expansion_holds(&fam("t"), ctx.bound, |n, k| {
        let c = qb(n, k).mul_q_pow(k as i32);
        Ok(&(&c * &inv_neg_poch(1, k)?) * &inv_neg_poch((n - 2 * k + 1) as i32, k)?)
    })?;
    Ok(None)
}

/// `[2n,n] q^s / (-q;q)_n^2`
fn central_over_square(n: i64, s: i64) -> Result<RatFunc, Failure> {
    let d = inv_neg_poch(1, n)?;
    Ok(&(&qb(2 * n, n).mul_q_pow(s as i32) * &d) * &d)
}

pub fn eq_4_15(ctx: &Ctx) -> Outcome {
    moments_match(&fam("t"), ctx.bound, |n| central_over_square(n, n))?;
    Ok(None)
}

pub fn eq_4_16(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let g = series_g_q(&RatFunc::one(), b);
    let rhs = &one_plus_u(&RatFunc::int(-1), b) * &g.scale_u(2);
    series_same("G(u) vs (1-u)G(q^2 u)", &g, &rhs)?;
    Ok(None)
}

pub fn eq_4_17(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let g = series_g_q(&RatFunc::q_pow(1), b).checked_div(&series_g_q(&RatFunc::one(), b))?;
    let want = series((0..=b as i64).map(|n| central_over_square(n, 0)).collect::<Result<_, _>>()?);
    series_same("G(qu)/G(u)", &g, &want)?;
    let inv = one_plus_u(&RatFunc::int(-1), b).inverse()?;
    series_same("g(u)g(qu)", &(&g * &g.scale_u(1)), &inv)?;
    Ok(None)
}

pub fn eq_4_18(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let g = series_g_q(&RatFunc::q_pow(2), b).checked_div(&series_g_q(&RatFunc::q_pow(1), b))?;
    series_same("Σ Λ_t(x^(2n)) u^n", &series(moments(&fam("t"), b)?), &g)?;
    Ok(None)
}

fn at_minus_one(id: &str) -> crate::families::FamilyId {
    fam(id).with_s(ZParam::Value(frac(-1, 1))).expect("takes s")
}

pub fn eq_4_19(ctx: &Ctx) -> Outcome {
    let t = closed_upto(&fam("t"), ctx.bound)?;
    let big = closed_upto(&at_minus_one("T"), ctx.bound)?;
    for n in 1..=ctx.bound {
        let rhs = big[n].scale(&inv_neg_poch(1, n as i64 - 1)?);
        same(|| format!("n={n}"), &t[n], &rhs)?;
    }
    Ok(None)
}

pub fn eq_4_20(ctx: &Ctx) -> Outcome {
    let u = closed_upto(&fam("u"), ctx.bound)?;
    let big = closed_upto(&at_minus_one("U"), ctx.bound)?;
    for n in 0..=ctx.bound {
        let rhs = big[n].scale(&inv_neg_poch(1, n as i64)?);
        same(|| format!("n={n}"), &u[n], &rhs)?;
    }
    Ok(None)
}

pub fn eq_4_21(ctx: &Ctx) -> Outcome {
    for n in 0..=ctx.bound as i64 {
        let mut sum = RatFunc::zero();
        for j in 0..=n {
            let b = qb(n, j);
            sum = &sum + &(&b * &b).mul_q_pow((j * j) as i32);
        }
        same(|| format!("n={n}"), &sum, &qb(2 * n, n))?;
    }
    Ok(None)
}
