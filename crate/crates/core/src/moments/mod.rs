//! Moment functionals `Λ` with `Λ(p_n) = [n = 0]`, computed along three
//! independent routes: the weighted path triangle, triangular basis
//! expansion and generating-function series.

mod catalan;
mod gf;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::families::{family_recur_all, FamilyId, XPoly};
use crate::qkernel::RatFunc;

pub use crate::families::LambdaSeq;
pub use catalan::{
    andrews_catalan, cantero_iserles, cantero_iserles_at, cantero_iserles_series,
    cantero_iserles_series_at, catalan, qcatalan_carlitz,
    qcatalan_convolution, qcatalan_quotient, CatalanVariant,
};
pub use gf::{gf_moments, has_series_route};

/// `c(n, k)` for `0 <= k <= n <= N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTriangle {
    pub m: u32,
    rows: Vec<Vec<RatFunc>>,
}

impl CoeffTriangle {
    pub fn get(&self, n: usize, k: usize) -> &RatFunc {
        &self.rows[n][k]
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }
}

/// `c(n,k) = c(n-1,k-1) + λ_k c(n-1,k+m-1)` with `c(0,k) = [k=0]`.
pub fn triangle(lambda: &LambdaSeq, big_n: usize) -> Result<CoeffTriangle, Error> {
    let m = lambda.m as usize;
    let weights: Vec<RatFunc> = (0..=big_n).map(|k| lambda.weight(k)).collect::<Result<_, _>>()?;
    let mut rows = vec![vec![RatFunc::one()]];
    for n in 1..=big_n {
        let prev = &rows[n - 1];
        let row: Vec<RatFunc> = (0..=n)
            .map(|k| {
                let up = if k >= 1 && k - 1 < prev.len() { prev[k - 1].clone() } else { RatFunc::zero() };
                let j = k + m - 1;
                if j < prev.len() && !prev[j].is_zero() {
                    &up + &(&weights[k] * &prev[j])
                } else {
                    up
                }
            })
            .collect();
        rows.push(row);
    }
    Ok(CoeffTriangle { m: lambda.m, rows })
}

/// Coefficients `a_k` with `x^n = Σ a_k p_k`, by back-substitution against
/// the triangular family `p_0 ..= p_n`.
pub fn expand_against(values: &[XPoly], n: usize) -> Result<BTreeMap<u32, RatFunc>, Error> {
    let mut rest = XPoly::x_pow(n as u32);
    let mut out = BTreeMap::new();
    for d in (0..=n).rev() {
        let c = rest.coeff(d as u32);
        if c.is_zero() {
            continue;
        }
        let lead = values[d].coeff(d as u32);
        let a = c.checked_div(&lead)?;
        rest = &rest - &values[d].scale(&a);
        out.insert(d as u32, a);
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

pub fn expand_monomial(id: &FamilyId, n: u32) -> Result<BTreeMap<u32, RatFunc>, Error> {
    let values = family_recur_all(id, n)?;
    expand_against(&values, n as usize)
}

/// `Λ(x^n)`, the `p_0`-coefficient of the expansion of `x^n`.
pub fn moment(id: &FamilyId, n: u32) -> Result<RatFunc, Error> {
    Ok(expand_monomial(id, n)?.remove(&0).unwrap_or_default())
}

/// `Λ(x^j)` for `j = 0 ..= n`, solving `Λ(p_j) = [j=0]` row by row.
pub fn moments_upto(id: &FamilyId, n: u32) -> Result<Vec<RatFunc>, Error> {
    let values = family_recur_all(id, n)?;
    let mut mu: Vec<RatFunc> = Vec::with_capacity(n as usize + 1);
    for (j, p) in values.iter().enumerate() {
        let mut acc = if j == 0 { RatFunc::one() } else { RatFunc::zero() };
        for (d, c) in p.terms() {
            if (d as usize) < j && !mu[d as usize].is_zero() {
                acc = &acc - &(c * &mu[d as usize]);
            }
        }
        mu.push(acc.checked_div(&p.coeff(j as u32))?);
    }
    Ok(mu)
}

/// `Λ(p)` extended linearly over the coefficients of `p`.
pub fn functional_on_poly(id: &FamilyId, p: &XPoly) -> Result<RatFunc, Error> {
    let Some(deg) = p.degree() else {
        return Ok(RatFunc::zero());
    };
    let mu = moments_upto(id, deg)?;
    let mut acc = RatFunc::zero();
    for (d, c) in p.terms() {
        acc = &acc + &(c * &mu[d as usize]);
    }
    Ok(acc)
}

/// Which computation produces a moment vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentRoute {
    Triangle,
    Expand,
    Series,
}

impl MomentRoute {
    pub const ALL: [MomentRoute; 3] = [MomentRoute::Triangle, MomentRoute::Expand, MomentRoute::Series];

    pub fn name(self) -> &'static str {
        match self {
            MomentRoute::Triangle => "triangle",
            MomentRoute::Expand => "expand",
            MomentRoute::Series => "series",
        }
    }
}

impl fmt::Display for MomentRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MomentRoute {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        MomentRoute::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown route `{s}`; expected triangle, expand or series"))
    }
}

/// Entry `n` is `Λ(x^(mn))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentVector {
    pub family: FamilyId,
    pub values: Vec<RatFunc>,
}

impl MomentVector {
    pub fn render(&self) -> Vec<String> {
        self.values.iter().map(|v| v.to_string()).collect()
    }
}

/// `Λ(x^(mn))` for `n = 0 ..= big_n` along one route.
pub fn moment_vector(id: &FamilyId, big_n: usize, route: MomentRoute) -> Result<MomentVector, Error> {
    let m = id.m as usize;
    let values = match route {
        MomentRoute::Triangle => {
            if !id.name.is_three_term() {
                return Err(Error::NotThreeTerm(id.name.id().to_string()));
            }
            let t = triangle(&LambdaSeq::for_family(id)?, m * big_n)?;
            (0..=big_n).map(|n| t.get(m * n, 0).clone()).collect()
        }
        MomentRoute::Expand => {
            let values = family_recur_all(id, (m * big_n) as u32)?;
            (0..=big_n)
                .map(|n| Ok(expand_against(&values, m * n)?.remove(&0).unwrap_or_default()))
                .collect::<Result<_, Error>>()?
        }
        MomentRoute::Series => gf_moments(id, big_n)?.into_coeffs(),
    };
    Ok(MomentVector { family: id.clone(), values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyName;
    use crate::qkernel::{parse_ratfunc, rat};

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    fn fam(s: &str) -> FamilyId {
        FamilyId::parse(s).unwrap()
    }

    #[test]
    fn catalan_and_central_triangles() {
        let ones = LambdaSeq::two_valued(2, RatFunc::one(), RatFunc::one());
        let t = triangle(&ones, 9).unwrap();
        assert_eq!(t.get(4, 0), &RatFunc::int(2));
        for n in 0..4 {
            assert!(t.get(2 * n + 1, 0).is_zero());
        }
        let lucas = LambdaSeq::two_valued(2, RatFunc::int(2), RatFunc::one());
        assert_eq!(triangle(&lucas, 4).unwrap().get(4, 0), &RatFunc::int(6));
    }

    #[test]
    fn triangle_zero_pattern() {
        let w = LambdaSeq::for_family(&fam("fm").with_m(3).unwrap()).unwrap();
        let t = triangle(&w, 12).unwrap();
        for n in 0..=12usize {
            for k in 0..=n {
                if (n - k) % 3 != 0 {
                    assert!(t.get(n, k).is_zero(), "c({n},{k})");
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let e = expand_monomial(&fam("lq"), 4).unwrap();
        assert_eq!(e[&0], RatFunc::from_poly(crate::qseries::q_binomial(4, 2)));
        let u = expand_monomial(&fam("u"), 2).unwrap();
        assert_eq!(u[&0], rf("q/((1+q)(1+q^2))"));
        let one = expand_monomial(&fam("f"), 0).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[&0], RatFunc::one());
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(&fam("f"), 4).unwrap(), RatFunc::int(2));
        assert_eq!(moment(&fam("F"), 2).unwrap(), rf("q"));
        assert_eq!(moment(&fam("t"), 2).unwrap(), rf("q/(1+q)"));
    }

    #[test]
    fn functional_examples() {
        let big_f = fam("F");
        let f3 = crate::families::family_closed(&big_f, 3).unwrap();
        assert_eq!(functional_on_poly(&big_f, &f3.mul_x(1)).unwrap(), rf("(q-1)q^3"));
        let u = fam("u");
        let u2 = crate::families::family_closed(&u, 2).unwrap();
        let u3 = crate::families::family_closed(&u, 3).unwrap();
        assert!(functional_on_poly(&u, &(&u3 * &u2)).unwrap().is_zero());
        assert_eq!(
            functional_on_poly(&u, &(&u2 * &u2)).unwrap(),
            rf("q^3/((1+q)(1+q^2)(1+q^2)(1+q^3))")
        );
    }

    #[test]
    fn two_moment_solvers_agree() {
        for name in [FamilyName::CurFib, FamilyName::QChebT, FamilyName::RogersSzego] {
            let id = FamilyId::new(name);
            let mu = moments_upto(&id, 8).unwrap();
            for (j, v) in mu.iter().enumerate() {
                assert_eq!(v, &moment(&id, j as u32).unwrap(), "{id} x^{j}");
            }
        }
        assert_eq!(moments_upto(&fam("l"), 4).unwrap()[4], RatFunc::constant(rat(6)));
    }
}
