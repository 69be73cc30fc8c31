use crate::families::{FamilyId, LambdaSeq, XPoly};
use crate::moments::{andrews_catalan, cantero_iserles, cantero_iserles_at};
use crate::qkernel::{frac, RatFunc, Var};
use crate::qseries::{
    binom2, inv_pochhammer, inv_q_factorial, pochhammer_base, pochhammer_rf, q_binomial_base, series_f, series_g, QBase,
    TruncSeries, ZParam,
};

use crate::verify::util::*;
use crate::verify::Ctx;

fn z_family(ctx: &Ctx, id: &str) -> FamilyId {
    match ctx.z.as_constant() {
        Some(c) => fam(id).with_z(ZParam::Value(c)).expect("takes z"),
        None => fam(id),
    }
}

/// `c / ((1 - z)(1 - qz))`
fn over_z_pair(c: RatFunc, z: &RatFunc) -> Result<RatFunc, Failure> {
    Ok(over(c, &[one_minus(z), one_minus(&z.mul_q_pow(1))])?)
}

/// `G(a u, w) / G(b u, v)`
fn g_ratio(a: &RatFunc, w: &RatFunc, b: &RatFunc, v: &RatFunc, order: usize) -> Result<TruncSeries, Failure> {
    Ok(series_g(a, w, order)?.checked_div(&series_g(b, v, order)?)?)
}

/// `F(a u, w) / F(b u, v)`
fn f_ratio(a: &RatFunc, w: &RatFunc, b: &RatFunc, v: &RatFunc, order: usize) -> Result<TruncSeries, Failure> {
    Ok(series_f(a, w, order)?.checked_div(&series_f(b, v, order)?)?)
}

fn q(e: i32) -> RatFunc {
    RatFunc::q_pow(e)
}

/// `1 + c u x y`
fn one_plus_uxy(c: &RatFunc, x: &TruncSeries, y: &TruncSeries) -> TruncSeries {
    &TruncSeries::one(x.order()) + &(x * y).shift(1).scale(c)
}

pub fn eq_5_1(ctx: &Ctx) -> Outcome {
    routes_agree(&z_family(ctx, "fz"), ctx.bound)?;
    Ok(None)
}

pub fn eq_5_2(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let phi = triangle_series(&LambdaSeq::fib_z(z.clone()), b)?;
    let phi_qz = triangle_series(&LambdaSeq::fib_z(z.mul_q_pow(1)), b)?;
    let rhs = one_plus_uxy(&over_z_pair(q(1), z)?, &phi, &phi_qz.scale_u(1));
    series_same("Φ_f", &phi, &rhs)?;
    Ok(None)
}

pub fn eq_5_3(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let phi = triangle_series(&LambdaSeq::fib_z(z.clone()), b)?.limit_q1()?;
    let w = one_minus(z).inv()?;
    let want = TruncSeries::try_from_fn(b, |n| {
        let c = choose_rf(2 * n as i64, n as i64).scale(&frac(1, n as i64 + 1));
        Ok(&c * &w.pow(2 * n as i32)?)
    })?;
    series_same("Φ_f(u,z,1)", &phi, &want)?;
    Ok(None)
}

/// `ψ(c u, z) = G(c q u, qz) / G(c u, z)`
fn psi(c: &RatFunc, z: &RatFunc, b: usize) -> Result<TruncSeries, Failure> {
    g_ratio(&c.mul_q_pow(1), &z.mul_q_pow(1), c, z, b)
}

pub fn eq_5_6(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let lhs = psi(&RatFunc::one(), z, b)?;
    let shifted = psi(&q(1), &z.mul_q_pow(1), b)?;
    let rhs = one_plus_uxy(&-&over_z_pair(RatFunc::one(), z)?, &lhs, &shifted);
    series_same("ψ", &lhs, &rhs)?;
    Ok(None)
}

pub fn eq_5_7(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let phi = triangle_series(&LambdaSeq::fib_z(z.clone()), b)?;
    series_same("Φ_f vs ψ(-qu,z)", &phi, &psi(&neg_q(1), z, b)?)?;
    Ok(None)
}

/// `ψ(uz, z) = G(quz, qz) / G(uz, z)`
fn psi_tilde(z: &RatFunc, b: usize) -> Result<TruncSeries, Failure> {
    psi(z, z, b)
}

pub fn eq_5_8(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let lhs = psi_tilde(z, b)?;
    let rhs = one_plus_uxy(&-&over_z_pair(z.clone(), z)?, &lhs, &psi_tilde(&z.mul_q_pow(1), b)?);
    series_same("ψ~", &lhs, &rhs)?;
    Ok(None)
}

/// Solves the eq-5.8 relation coefficient by coefficient on the grid `z, qz, q^2 z, ...`
/// and compares with the closed quotient.
pub fn eq_5_9(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    // a[i][n] = [u^n] ψ~(u, q^i z)
    let mut a: Vec<Vec<RatFunc>> = vec![vec![RatFunc::one()]; b + 1];
    for n in 1..=b {
        for i in 0..=b - n {
            let zi = z.mul_q_pow(i as i32);
            let w = -&over_z_pair(zi.clone(), &zi)?;
            let mut sum = RatFunc::zero();
            for j in 0..n {
                sum = &sum + &(&a[i][j] * &a[i + 1][n - 1 - j]);
            }
            a[i].push(&w * &sum);
        }
    }
    let grid = series(a.swap_remove(0));
    series_same("ψ~ from eq-5.8", &grid, &psi_tilde(z, b)?)?;
    Ok(None)
}

pub fn eq_5_11(ctx: &Ctx) -> Outcome {
    routes_agree(&z_family(ctx, "lz"), ctx.bound)?;
    Ok(None)
}

fn lucas_phi(z: &RatFunc, b: usize) -> Result<TruncSeries, Failure> {
    triangle_series(&LambdaSeq::lucas_z(z.clone()), b)
}

fn lucas_psi(z: &RatFunc, b: usize) -> Result<TruncSeries, Failure> {
    triangle_series(&shifted(&LambdaSeq::lucas_z(z.clone()), 1), b)
}

pub fn eq_5_12(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let phi = lucas_phi(z, b)?;
    let c = q(1).checked_div(&one_minus(z))?;
    series_same("Φ_l", &phi, &one_plus_uxy(&c, &phi, &lucas_psi(z, b)?))?;
    Ok(None)
}

pub fn eq_5_13(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let psi = lucas_psi(z, b)?;
    let next = lucas_psi(&z.mul_q_pow(1), b)?.scale_u(1);
    series_same("Ψ_l", &psi, &one_plus_uxy(&over_z_pair(q(2), z)?, &psi, &next))?;
    Ok(None)
}

pub fn eq_5_14(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let want = g_ratio(&neg_q(3), &z.mul_q_pow(1), &neg_q(2), z, b)?;
    series_same("Ψ_l", &lucas_psi(z, b)?, &want)?;
    Ok(None)
}

pub fn eq_5_15(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let want = g_ratio(&neg_q(2), z, &neg_q(1), z, b)?;
    series_same("Φ_l", &lucas_phi(z, b)?, &want)?;
    Ok(None)
}

/// `φ(u, z) = F(u, qz) / F(u, z)`
fn phi(z: &RatFunc, b: usize) -> Result<TruncSeries, Failure> {
    let one = RatFunc::one();
    f_ratio(&one, &z.mul_q_pow(1), &one, z, b)
}

pub fn eq_5_18(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let lhs = phi(z, b)?;
    let rhs = one_plus_uxy(&-&over_z_pair(z.clone(), z)?, &lhs, &phi(&z.mul_q_pow(1), b)?);
    series_same("φ", &lhs, &rhs)?;
    Ok(None)
}

pub fn eq_5_19(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    series_same("F(u,qz)/F(u,z)", &phi(z, b)?, &psi_tilde(z, b)?)?;
    Ok(None)
}

pub fn eq_5_20(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let one = RatFunc::one();
    let zq = z.mul_q_pow(1);
    let left = &series_f(&one, &zq, b)? * &series_g(z, z, b)?;
    let right = &series_f(&one, z, b)? * &series_g(&zq, &zq, b)?;
    series_same("F(u,qz)G(uz,z) vs F(u,z)G(quz,qz)", &left, &right)?;
    let z2 = z * z;
    let closed = TruncSeries::try_from_fn(b, |n| {
        let num = pochhammer_rf(&z2.mul_q_pow(n as i32), n as u32);
        Ok(&(&num * &inv_q_factorial(n as u32)) * &(&inv_pochhammer(z, n as u32)? * &inv_pochhammer(&zq, n as u32)?))
    })?;
    series_same("Σ (q^n z^2;q)_n u^n / ...", &left, &closed)?;
    Ok(None)
}

pub fn eq_5_21(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let phi_f = triangle_series(&LambdaSeq::fib_z(z.clone()), b)?;
    let c = -&q(1).checked_div(z)?;
    series_same("Φ_f via F", &phi_f, &f_ratio(&c, &z.mul_q_pow(1), &c, z, b)?)?;
    series_same("Φ_f via G", &phi_f, &g_ratio(&neg_q(2), &z.mul_q_pow(1), &neg_q(1), z, b)?)?;
    Ok(None)
}

pub fn eq_5_22(ctx: &Ctx) -> Outcome {
    let b = ctx.bound;
    let one = RatFunc::one();
    let c = series(andrews_catalan(b)?);
    let phi_f = triangle_series(&LambdaSeq::fib_z(neg_q(1)), b)?;
    series_same("Φ_f(u,-q,q)", &c, &phi_f)?;
    series_same("F(u,-q^2)/F(u,-q)", &c, &f_ratio(&one, &neg_q(2), &one, &neg_q(1), b)?)?;
    series_same("G(-q^2u,-q^2)/G(-qu,-q)", &c, &g_ratio(&neg_q(2), &neg_q(2), &neg_q(1), &neg_q(1), b)?)?;
    let prod = &series_f(&one, &neg_q(1), b)? * &series_g(&RatFunc::int(-1), &neg_q(1), b)?;
    series_same("F(u,-q)G(-u,-q)", &prod, &TruncSeries::one(b))?;
    Ok(None)
}

fn qb2(n: i64, k: i64) -> RatFunc {
    RatFunc::from_poly(q_binomial_base(n, k, QBase::Q2))
}

pub fn eq_5_23(ctx: &Ctx) -> Outcome {
    let c = andrews_catalan(ctx.bound)?;
    let one_q = &RatFunc::one() + &q(1);
    for n in 0..=ctx.bound as i64 {
        let q2 = pochhammer_base(&q(2), 2, n as u32);
        let mut first = RatFunc::zero();
        let mut second = RatFunc::zero();
        for k in 0..=n {
            let d = &RatFunc::one() + &q(k as i32 + 1);
            let t1 = qb2(n, k).scale(&sign(n - k)).mul_q_pow((2 * binom2(n - k)) as i32);
            first = &first + &t1.checked_div(&d)?;
            let t2 = qb2(n, k).scale(&sign(k)).mul_q_pow((k * k) as i32);
            second = &second + &t2.checked_div(&d)?;
        }
        let first = (&one_q * &first).checked_div(&q2)?;
        let second = (&one_q * &second).mul_q_pow(n as i32).checked_div(&q2)?;
        same(|| format!("n={n} first sum"), &first, &c[n as usize])?;
        same(|| format!("n={n} second sum"), &second, &c[n as usize])?;
    }
    Ok(None)
}

pub fn eq_5_24(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let a = series(cantero_iserles_at(z, b)?);
    let lhs = &a * &series_f(&RatFunc::one(), z, b)?;
    series_same("A(u) F(u,z) vs F(qu,z)", &lhs, &series_f(&q(1), z, b)?)?;
    Ok(None)
}

pub fn eq_5_25(ctx: &Ctx) -> Outcome {
    let a = cantero_iserles(ctx.bound)?;
    let z = RatFunc::var(Var::Z);
    let w = one_minus(&z).inv()?;
    for (n, v) in a.iter().enumerate().skip(1) {
        let n = n as i64;
        let catalan = choose(2 * n - 2, n - 1) / frac(n, 1) * sign(n);
        let want = &(&RatFunc::constant(catalan) * &z.pow(n as i32 - 1)?) * &w.pow(2 * n as i32 - 1)?;
        same(|| format!("lim a_{n}"), &v.limit_q1()?, &want)?;
    }
    Ok(None)
}

pub fn eq_5_27(ctx: &Ctx) -> Outcome {
    let (b, z) = (ctx.bound, &ctx.z);
    let one = RatFunc::one();
    let lhs = f_ratio(&q(1), z, &one, z, b)?;
    let c = one_minus(z).inv()?;
    let rhs = &TruncSeries::one(b) - &phi(z, b)?.shift(1).scale(&c);
    series_same("F(qu,z)/F(u,z)", &lhs, &rhs)?;
    Ok(None)
}

fn at_minus_q(id: &str, target: &str, b: usize) -> Step {
    let p = closed_upto(&fam(id), b)?;
    let want = closed_upto(&fam(target), b)?;
    for n in 0..=b {
        let sub: XPoly = p[n].try_map(|c| c.substitute(Var::Z, &neg_q(1)))?;
        same(|| format!("n={n}"), &sub, &want[n])?;
    }
    Ok(())
}

pub fn note_5_1(ctx: &Ctx) -> Outcome {
    at_minus_q("fz", "u", ctx.bound)?;
    Ok(None)
}

pub fn note_5_2(ctx: &Ctx) -> Outcome {
    at_minus_q("lz", "t", ctx.bound)?;
    Ok(None)
}
