use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::qkernel::{frac, KernelError, RatFunc, Var};

use super::{FamilyId, FamilyName};

type Weight = dyn Fn(usize) -> Result<RatFunc, KernelError> + Send + Sync;

/// Down-step weights `λ_k` of `p_n = x p_(n-1) - λ_(n-m) p_(n-m)`.
#[derive(Clone)]
pub struct LambdaSeq {
    pub m: u32,
    weight: Arc<Weight>,
}

impl fmt::Debug for LambdaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LambdaSeq").field("m", &self.m).finish_non_exhaustive()
    }
}

fn one_minus(r: &RatFunc) -> RatFunc {
    &RatFunc::one() - r
}

fn one_plus(r: &RatFunc) -> RatFunc {
    &RatFunc::one() + r
}

/// `num / (d_1 d_2 ...)`, dividing one factor at a time.
fn over(num: RatFunc, dens: &[RatFunc]) -> Result<RatFunc, KernelError> {
    dens.iter().try_fold(num, |acc, d| acc.checked_div(d))
}

impl LambdaSeq {
    pub fn new<F>(m: u32, weight: F) -> LambdaSeq
    where
        F: Fn(usize) -> Result<RatFunc, KernelError> + Send + Sync + 'static,
    {
        LambdaSeq { m, weight: Arc::new(weight) }
    }

    /// `λ_0 = first`, `λ_k = rest` for `k > 0`.
    pub fn two_valued(m: u32, first: RatFunc, rest: RatFunc) -> LambdaSeq {
        LambdaSeq::new(m, move |k| Ok(if k == 0 { first.clone() } else { rest.clone() }))
    }

    /// `λ_k = q^(k+1) / ((1 - q^k z)(1 - q^(k+1) z))` for any `z`.
    pub fn fib_z(z: RatFunc) -> LambdaSeq {
        LambdaSeq::new(2, move |k| {
            let a = one_minus(&z.mul_q_pow(k as i32));
            let b = one_minus(&z.mul_q_pow(k as i32 + 1));
            over(RatFunc::q_pow(k as i32 + 1), &[a, b])
        })
    }

    /// `λ_0 = q / (1 - z)`, `λ_k = q^(k+1) / ((1 - q^(k-1) z)(1 - q^k z))`.
    pub fn lucas_z(z: RatFunc) -> LambdaSeq {
        LambdaSeq::new(2, move |k| {
            if k == 0 {
                return RatFunc::q_pow(1).checked_div(&one_minus(&z));
            }
            let a = one_minus(&z.mul_q_pow(k as i32 - 1));
            let b = one_minus(&z.mul_q_pow(k as i32));
            over(RatFunc::q_pow(k as i32 + 1), &[a, b])
        })
    }

    pub fn weight(&self, k: usize) -> Result<RatFunc, KernelError> {
        (self.weight)(k)
    }

    /// The weights of a three-term family, with its parameters applied.
    pub fn for_family(id: &FamilyId) -> Result<LambdaSeq, Error> {
        use FamilyName::*;
        let m = id.m;
        let q = |e: usize| RatFunc::q_pow(e as i32);
        let symbolic = match id.name {
            Fib | FibM => LambdaSeq::two_valued(m, RatFunc::one(), RatFunc::one()),
            Lucas | LucasBigM => LambdaSeq::two_valued(m, RatFunc::int(2), RatFunc::one()),
            LucasM => LambdaSeq::two_valued(m, RatFunc::int(m as i64), RatFunc::one()),
            ChebT => LambdaSeq::two_valued(
                m,
                RatFunc::constant(frac(1, 2)),
                RatFunc::constant(frac(1, 4)),
            ),
            ChebU => LambdaSeq::two_valued(m, RatFunc::constant(frac(1, 4)), RatFunc::constant(frac(1, 4))),
            FibQ => LambdaSeq::new(m, move |k| Ok(q(k))),
            FibS => LambdaSeq::new(m, move |k| Ok(&q(k) * &RatFunc::var(Var::S))),
            QChebU => LambdaSeq::new(m, move |k| {
                over(q(k + 1), &[one_plus(&q(k + 1)), one_plus(&q(k + 2))])
            }),
            QChebT => LambdaSeq::new(m, move |k| {
                if k == 0 {
                    q(1).checked_div(&one_plus(&q(1)))
                } else {
                    over(q(k + 1), &[one_plus(&q(k)), one_plus(&q(k + 1))])
                }
            }),
            FibZ => LambdaSeq::fib_z(RatFunc::var(Var::Z)),
            LucasZ => LambdaSeq::lucas_z(RatFunc::var(Var::Z)),
            _ => return Err(Error::NotThreeTerm(id.name.id().to_string())),
        };
        if matches!(id.name, FibZ | LucasZ | FibS) {
            let fixed = id.clone();
            let inner = symbolic.weight;
            return Ok(LambdaSeq::new(m, move |k| fixed.apply_params(&inner(k)?)));
        }
        Ok(symbolic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::parse_ratfunc;

    #[test]
    fn q_chebyshev_weights() {
        let t = LambdaSeq::for_family(&FamilyId::new(FamilyName::QChebT)).unwrap();
        assert_eq!(t.weight(0).unwrap(), parse_ratfunc("q/(1+q)").unwrap());
        let u = LambdaSeq::for_family(&FamilyId::new(FamilyName::QChebU)).unwrap();
        assert_eq!(u.weight(0).unwrap(), parse_ratfunc("q/((1+q)(1+q^2))").unwrap());
    }

    #[test]
    fn z_weights_and_vanishing() {
        let id = FamilyId::new(FamilyName::LucasZ);
        let l = LambdaSeq::for_family(&id).unwrap();
        assert_eq!(l.weight(0).unwrap(), parse_ratfunc("q/(1-z)").unwrap());
        let at_one = id.with_z(crate::qseries::ZParam::Value(frac(1, 1))).unwrap();
        assert!(LambdaSeq::for_family(&at_one).unwrap().weight(0).is_err());
    }

    #[test]
    fn non_three_term() {
        assert!(LambdaSeq::for_family(&FamilyId::new(FamilyName::CurFib)).is_err());
    }
}
