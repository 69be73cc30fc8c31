use crate::families::XPoly;
use crate::qkernel::{frac, Monomial, RatFunc, Var};
use crate::qseries::{binom2, ZParam};

use crate::verify::util::*;
use crate::verify::Ctx;

pub fn fs_routes(ctx: &Ctx) -> Outcome {
    for m in 1..=3 {
        routes_agree(&fam_m("fs", m), ctx.bound)?;
    }
    Ok(None)
}

pub fn fs_product(ctx: &Ctx) -> Outcome {
    let s = RatFunc::var(Var::S);
    let mut prod = XPoly::one();
    for (n, p) in closed_upto(&fam_m("fs", 1), ctx.bound)?.iter().enumerate() {
        same(|| format!("n={n}"), p, &prod)?;
        prod = &prod * &(&XPoly::x_pow(1) - &XPoly::constant(s.mul_q_pow(n as i32)));
    }
    Ok(None)
}

pub fn ls_routes(ctx: &Ctx) -> Outcome {
    for m in 1..=3 {
        routes_agree(&fam_m("ls", m), ctx.bound)?;
    }
    Ok(None)
}

/// `Σ q^(2 binom(k,2)) [n]/[n-k] [n-k,k] (-s)^k x^(n-2k)`
pub fn ls_carlitz(ctx: &Ctx) -> Outcome {
    let l = closed_upto(&fam_m("ls", 2), ctx.bound)?;
    for n in 1..=ctx.bound as i64 {
        let mut want = XPoly::zero();
        for k in 0..=n / 2 {
            let c = (&qb(n - k, k) * &qint(n).checked_div(&qint(n - k))?)
                .mul_q_pow((2 * binom2(k)) as i32)
                .mul_monomial(&sign(k), &Monomial::var_pow(Var::S, k as i32));
            want.add_term((n - 2 * k) as u32, &c);
        }
        same(|| format!("n={n}"), &l[n as usize], &want)?;
    }
    Ok(None)
}

pub fn fz_at_zero(ctx: &Ctx) -> Outcome {
    let at_zero = fam("fz").with_z(ZParam::Value(frac(0, 1))).expect("takes z");
    let fz = closed_upto(&at_zero, ctx.bound)?;
    let fs = closed_upto(&fam_m("fs", 2), ctx.bound)?;
    for n in 0..=ctx.bound {
        let s_is_q = fs[n].try_map(|c| c.substitute(Var::S, &RatFunc::q_pow(1)))?;
        same(|| format!("n={n}"), &fz[n], &s_is_q)?;
    }
    Ok(None)
}
