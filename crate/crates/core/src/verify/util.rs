//! Comparison and construction helpers shared by the check bodies.

use std::fmt::Display;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::Error;
use crate::families::{family_closed, FamilyId, LambdaSeq, XPoly};
use crate::moments::{moment_vector, moments_upto, triangle, MomentRoute};
use crate::qkernel::{frac, KernelError, RatFunc, Rational};
use crate::qseries::{inv_pochhammer, q_binomial, q_int, TruncSeries};

/// Why a check did not pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// The first place where the two sides differ.
    Mismatch { at: String, left: String, right: String },
    /// The computation itself failed.
    Error(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Error(e.to_string())
    }
}

impl From<KernelError> for Failure {
    fn from(e: KernelError) -> Failure {
        Failure::Error(e.to_string())
    }
}

/// `Ok(Some(w))` passes with a witness value worth reporting.
pub type Outcome = Result<Option<String>, Failure>;
pub type Step = Result<(), Failure>;

pub fn same<T: PartialEq + Display>(at: impl FnOnce() -> String, left: &T, right: &T) -> Step {
    if left == right {
        Ok(())
    } else {
        Err(Failure::Mismatch { at: at(), left: left.to_string(), right: right.to_string() })
    }
}

pub fn series_same(what: &str, left: &TruncSeries, right: &TruncSeries) -> Step {
    match left.first_difference(right) {
        None => Ok(()),
        Some(n) => Err(Failure::Mismatch {
            at: format!("{what}[u^{n}]"),
            left: left.coeff(n).to_string(),
            right: right.coeff(n).to_string(),
        }),
    }
}

pub fn fam(id: &str) -> FamilyId {
    FamilyId::parse(id).expect("catalog id")
}

pub fn fam_m(id: &str, m: u32) -> FamilyId {
    fam(id).with_m(m).expect("m >= 1")
}

/// `p_0 ..= p_n` by the closed form.
pub fn closed_upto(id: &FamilyId, n: usize) -> Result<Vec<XPoly>, Failure> {
    (0..=n).map(|j| Ok(family_closed(id, j as u32)?)).collect()
}

/// `p_j`, or zero for a negative index.
pub fn at(values: &[XPoly], j: i64) -> XPoly {
    if j < 0 {
        XPoly::zero()
    } else {
        values[j as usize].clone()
    }
}

pub fn choose(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return frac(0, 1);
    }
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

pub fn choose_rf(n: i64, k: i64) -> RatFunc {
    RatFunc::constant(choose(n, k))
}

pub fn qb(n: i64, k: i64) -> RatFunc {
    RatFunc::from_poly(q_binomial(n, k))
}

pub fn qint(n: i64) -> RatFunc {
    RatFunc::from_poly(q_int(n as u32))
}

pub fn sign(k: i64) -> Rational {
    if k % 2 == 0 {
        frac(1, 1)
    } else {
        frac(-1, 1)
    }
}

pub fn neg_q(e: i32) -> RatFunc {
    RatFunc::q_pow(e).scale(&frac(-1, 1))
}

/// `1 / (-q^a; q)_k`
pub fn inv_neg_poch(a: i32, k: i64) -> Result<RatFunc, KernelError> {
    inv_pochhammer(&neg_q(a), k as u32)
}

/// `num / (d_1 d_2 ...)`, one factor at a time so the denominator stays
/// factored.
pub fn over(num: RatFunc, dens: &[RatFunc]) -> Result<RatFunc, KernelError> {
    dens.iter().try_fold(num, |acc, d| acc.checked_div(d))
}

/// `1 - c`
pub fn one_minus(c: &RatFunc) -> RatFunc {
    &RatFunc::one() - c
}

/// `1 / Π_(j < len) (1 + c q^(step j) u)` for `step = ±1`; `c = 1,
/// step = -1` gives `1 / (-u; q^-1)_len`.
///
/// The coefficient of `u^k` is `(-c)^k h_k(1, q^step, ..)`, and the
/// complete symmetric function of a geometric progression is
/// `[len+k-1, k]` in base `q^step`.
pub fn inv_neg_poch_series(c: &RatFunc, step: i32, len: usize, order: usize) -> Result<TruncSeries, KernelError> {
    assert!(step == 1 || step == -1, "step must be 1 or -1");
    let mut pow = RatFunc::one();
    let mc = -c;
    Ok(TruncSeries::from_fn(order, |k| {
        let mut h = qb(len as i64 + k as i64 - 1, k as i64);
        if step < 0 {
            h = h.mul_q_pow(-((k * (len.max(1) - 1)) as i32));
        }
        if len == 0 {
            h = if k == 0 { RatFunc::one() } else { RatFunc::zero() };
        }
        let out = &h * &pow;
        pow = &pow * &mc;
        out
    }))
}

/// `Λ(x^(mn))` for `n = 0 ..= big_n`, by the triangle where it exists and
/// by basis expansion otherwise.
pub fn moments(id: &FamilyId, big_n: usize) -> Result<Vec<RatFunc>, Failure> {
    let route = if id.name.is_three_term() { MomentRoute::Triangle } else { MomentRoute::Expand };
    Ok(moment_vector(id, big_n, route)?.values)
}

/// `Σ c(mn, 0) u^n` from the triangle of `λ`.
pub fn triangle_series(lambda: &LambdaSeq, order: usize) -> Result<TruncSeries, Failure> {
    let m = lambda.m as usize;
    let t = triangle(lambda, m * order)?;
    Ok(TruncSeries::from_fn(order, |n| t.get(m * n, 0).clone()))
}

/// `λ` with every index shifted by `by`.
pub fn shifted(lambda: &LambdaSeq, by: usize) -> LambdaSeq {
    let inner = lambda.clone();
    LambdaSeq::new(lambda.m, move |k| inner.weight(k + by))
}

/// The functional `Λ` of a family, as a closure over its moments.
pub struct Functional {
    mu: Vec<RatFunc>,
}

impl Functional {
    pub fn new(id: &FamilyId, degree: usize) -> Result<Functional, Failure> {
        Ok(Functional { mu: moments_upto(id, degree as u32)? })
    }

    pub fn apply(&self, p: &XPoly) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (d, c) in p.terms() {
            acc = &acc + &(c * &self.mu[d as usize]);
        }
        acc
    }
}

/// `Σ_k c_k p_(n - m k)`
pub fn combination(values: &[XPoly], n: i64, m: i64, coeff: impl Fn(i64) -> Result<RatFunc, Failure>) -> Result<XPoly, Failure> {
    let mut acc = XPoly::zero();
    for k in 0..=n / m {
        acc = &acc + &at(values, n - m * k).scale(&coeff(k)?);
    }
    Ok(acc)
}

/// `x^n = Σ_k c(n,k) p_(n - m k)` for `n <= b`.
pub fn expansion_holds(id: &FamilyId, b: usize, coeff: impl Fn(i64, i64) -> Result<RatFunc, Failure>) -> Step {
    let values = closed_upto(id, b)?;
    let m = id.m as i64;
    for n in 0..=b as i64 {
        let lhs = combination(&values, n, m, |k| coeff(n, k))?;
        same(|| format!("{id} n={n}"), &lhs, &XPoly::x_pow(n as u32))?;
    }
    Ok(())
}

/// `Λ(x^(mn)) = want(n)` for `n <= b`.
pub fn moments_match(id: &FamilyId, b: usize, want: impl Fn(i64) -> Result<RatFunc, Failure>) -> Step {
    let mu = moments(id, b)?;
    for (n, v) in mu.iter().enumerate() {
        same(|| format!("{id} Λ(x^{}) ", id.m as usize * n), v, &want(n as i64)?)?;
    }
    Ok(())
}

/// Closed form and recurrence agree for `n <= b`.
pub fn routes_agree(id: &FamilyId, b: usize) -> Step {
    let recur = crate::families::family_recur_all(id, b as u32)?;
    for (n, p) in recur.iter().enumerate() {
        same(|| format!("{id} n={n}"), &family_closed(id, n as u32)?, p)?;
    }
    Ok(())
}

/// `Λ(p_i p_j) = [i = j] norm(i)` for `i, j <= b`.
pub fn gram(id: &FamilyId, b: usize, norm: impl Fn(i64) -> Result<RatFunc, Failure>) -> Step {
    let p = closed_upto(id, b)?;
    let lam = Functional::new(id, 2 * b)?;
    for i in 0..=b {
        for j in 0..=b {
            let v = lam.apply(&(&p[i] * &p[j]));
            let want = if i == j { norm(i as i64)? } else { RatFunc::zero() };
            same(|| format!("{id} Λ(p_{i} p_{j})"), &v, &want)?;
        }
    }
    Ok(())
}

/// `Σ_n c_n q^(e(n)) u^n / Π_(j < len(n)) (1 + q^(s(n) + step j) u)`
pub fn inverse_sum(
    c: &[RatFunc],
    order: usize,
    e: impl Fn(i64) -> i64,
    start: impl Fn(i64) -> i64,
    step: i32,
    len: impl Fn(i64) -> usize,
) -> Result<TruncSeries, Failure> {
    let mut acc = TruncSeries::zero(order);
    for (n, cn) in c.iter().enumerate().take(order + 1) {
        let ni = n as i64;
        let w = inv_neg_poch_series(&RatFunc::q_pow(start(ni) as i32), step, len(ni), order)?;
        acc = &acc + &w.shift(n).scale(&cn.mul_q_pow(e(ni) as i32));
    }
    Ok(acc)
}

pub fn series(coeffs: Vec<RatFunc>) -> TruncSeries {
    TruncSeries::from_coeffs(coeffs)
}

/// `1 + a u`
pub fn one_plus_u(a: &RatFunc, order: usize) -> TruncSeries {
    TruncSeries::from_fn(order, |n| match n {
        0 => RatFunc::one(),
        1 => a.clone(),
        _ => RatFunc::zero(),
    })
}
