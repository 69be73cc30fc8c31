//! Polynomial families, each available as a closed coefficient sum and as
//! a recurrence.

mod closed;
mod lambda;
mod recur;
mod xpoly;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::qkernel::{KernelError, RatFunc, Var};
use crate::qseries::{q_binomial, ZParam};

pub use closed::family_closed;
pub use lambda::LambdaSeq;
pub use recur::{family_recur, family_recur_all, family_recur_alt};
pub use xpoly::{dq, operator_a_apply, XPoly};

/// Every family in the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyName {
    /// Fibonacci `f_n(x)`
    Fib,
    /// Lucas `l_n(x)`
    Lucas,
    /// `f_n^(m)(x)`
    FibM,
    /// `l_n^(m)(x)`, `λ_0 = m`
    LucasM,
    /// `L_n^(m)(x)`, `λ_0 = 2`
    LucasBigM,
    /// monic Chebyshev of the first kind
    ChebT,
    /// monic Chebyshev of the second kind
    ChebU,
    /// Carlitz `f_n^(m)(x,q)`
    FibQ,
    /// `F_n^(m)(x,q)`
    CurFib,
    /// `L_n^(m)(x,q)`
    CurLucas,
    /// `u_n(x,q)`
    QChebU,
    /// `t_n(x,q)`
    QChebT,
    /// bivariate `T_n(x,s,q)`
    BiT,
    /// bivariate `U_n(x,s,q)`
    BiU,
    /// `f_n(x,z,q)`
    FibZ,
    /// `l_n(x,z,q)`
    LucasZ,
    /// `f_n^(m)(x,q,s)`
    FibS,
    /// `l_n^(m)(x,q,s)`
    LucasS,
    /// Rogers–Szegö `r_n(x,s)`
    RogersSzego,
}

struct Meta {
    id: &'static str,
    takes_m: bool,
    takes_z: bool,
    takes_s: bool,
    about: &'static str,
}

impl FamilyName {
    pub const ALL: [FamilyName; 19] = [
        FamilyName::Fib,
        FamilyName::Lucas,
        FamilyName::FibM,
        FamilyName::LucasM,
        FamilyName::LucasBigM,
        FamilyName::ChebT,
        FamilyName::ChebU,
        FamilyName::FibQ,
        FamilyName::CurFib,
        FamilyName::CurLucas,
        FamilyName::QChebU,
        FamilyName::QChebT,
        FamilyName::BiT,
        FamilyName::BiU,
        FamilyName::FibZ,
        FamilyName::LucasZ,
        FamilyName::FibS,
        FamilyName::LucasS,
        FamilyName::RogersSzego,
    ];

    fn meta(self) -> Meta {
        use FamilyName::*;
        let (id, takes_m, takes_z, takes_s, about) = match self {
            Fib => ("f", false, false, false, "Fibonacci polynomials f_n(x)"),
            Lucas => ("l", false, false, false, "Lucas polynomials l_n(x)"),
            FibM => ("fm", true, false, false, "f_n^(m)(x)"),
            LucasM => ("lm", true, false, false, "l_n^(m)(x)"),
            LucasBigM => ("Lm", true, false, false, "L_n^(m)(x)"),
            ChebT => ("tc", false, false, false, "monic Chebyshev polynomials t_n(x)"),
            ChebU => ("uc", false, false, false, "monic Chebyshev polynomials u_n(x)"),
            FibQ => ("fq", true, false, false, "Carlitz q-Fibonacci f_n^(m)(x,q)"),
            CurFib => ("F", true, false, false, "F_n^(m)(x,q)"),
            CurLucas => ("lq", true, false, false, "L_n^(m)(x,q); l_n(x,q) for m = 2"),
            QChebU => ("u", false, false, false, "q-Chebyshev u_n(x,q)"),
            QChebT => ("t", false, false, false, "q-Chebyshev t_n(x,q)"),
            BiT => ("T", false, false, true, "bivariate T_n(x,s,q)"),
            BiU => ("U", false, false, true, "bivariate U_n(x,s,q)"),
            FibZ => ("fz", false, true, false, "f_n(x,z,q)"),
            LucasZ => ("lz", false, true, false, "l_n(x,z,q)"),
            FibS => ("fs", true, false, true, "f_n^(m)(x,q,s)"),
            LucasS => ("ls", true, false, true, "l_n^(m)(x,q,s)"),
            RogersSzego => ("rs", false, false, true, "Rogers-Szego r_n(x,s)"),
        };
        Meta { id, takes_m, takes_z, takes_s, about }
    }

    pub fn id(self) -> &'static str {
        self.meta().id
    }

    pub fn about(self) -> &'static str {
        self.meta().about
    }

    pub fn takes_m(self) -> bool {
        self.meta().takes_m
    }

    pub fn takes_z(self) -> bool {
        self.meta().takes_z
    }

    pub fn takes_s(self) -> bool {
        self.meta().takes_s
    }

    /// Step width used when `m` is not a parameter.
    pub fn fixed_m(self) -> u32 {
        match self {
            FamilyName::RogersSzego => 1,
            _ => 2,
        }
    }

    /// Whether the family obeys `p_n = x p_(n-1) - λ_(n-m) p_(n-m)`.
    pub fn is_three_term(self) -> bool {
        use FamilyName::*;
        !matches!(self, CurFib | CurLucas | BiT | BiU | LucasS | RogersSzego)
    }

    pub fn known_ids() -> String {
        FamilyName::ALL.iter().map(|f| f.id()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FamilyName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFamily { name: s.to_string(), known: FamilyName::known_ids() })
    }
}

/// A family together with its step width and parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyId {
    pub name: FamilyName,
    pub m: u32,
    pub z: ZParam,
    pub s: ZParam,
}

impl FamilyId {
    pub fn new(name: FamilyName) -> FamilyId {
        FamilyId { name, m: name.fixed_m(), z: ZParam::Symbolic, s: ZParam::Symbolic }
    }

    pub fn parse(name: &str) -> Result<FamilyId, Error> {
        Ok(FamilyId::new(name.parse()?))
    }

    fn invalid(&self, reason: &str) -> Error {
        Error::InvalidParameter { family: self.name.id().to_string(), reason: reason.to_string() }
    }

    pub fn with_m(mut self, m: u32) -> Result<FamilyId, Error> {
        if m == 0 {
            return Err(self.invalid("m must be at least 1"));
        }
        if !self.name.takes_m() && m != self.name.fixed_m() {
            return Err(self.invalid("this family has no m parameter"));
        }
        self.m = m;
        Ok(self)
    }

    pub fn with_z(mut self, z: ZParam) -> Result<FamilyId, Error> {
        if !self.name.takes_z() && z != ZParam::Symbolic {
            return Err(self.invalid("this family has no z parameter"));
        }
        self.z = z;
        Ok(self)
    }

    pub fn with_s(mut self, s: ZParam) -> Result<FamilyId, Error> {
        if !self.name.takes_s() && s != ZParam::Symbolic {
            return Err(self.invalid("this family has no s parameter"));
        }
        self.s = s;
        Ok(self)
    }

    /// Replaces symbolic `z` and `s` by their fixed values, if any.
    pub fn apply_params(&self, r: &RatFunc) -> Result<RatFunc, KernelError> {
        let mut out = r.clone();
        if let ZParam::Value(c) = &self.z {
            out = out.eval_var(Var::Z, c)?;
        }
        if let ZParam::Value(c) = &self.s {
            out = out.eval_var(Var::S, c)?;
        }
        Ok(out)
    }

    pub fn apply_params_x(&self, p: &XPoly) -> Result<XPoly, KernelError> {
        p.try_map(|c| self.apply_params(c))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name.id())?;
        if self.name.takes_m() {
            write!(f, "[m={}]", self.m)?;
        }
        if self.name.takes_z() {
            write!(f, "[z={}]", self.z)?;
        }
        if self.name.takes_s() {
            write!(f, "[s={}]", self.s)?;
        }
        Ok(())
    }
}

/// `l_n(x,q) = l_n(x + (1-q)D_q) 1` and `F_n(x,q) = f_n(x + (1-q)D_q) 1`:
/// rewrites the classical polynomial with `x^k` read as `A^k 1`.
pub fn phi_substitute(classical: FamilyName, n: u32) -> Result<XPoly, Error> {
    if !matches!(classical, FamilyName::Fib | FamilyName::Lucas) {
        return Err(Error::InvalidParameter {
            family: classical.id().to_string(),
            reason: "operator substitution is defined for f and l".to_string(),
        });
    }
    let p = family_closed(&FamilyId::new(classical), n)?;
    // Horner: p = c_d + x(c_(d-1) + ...), with each x replaced by A.
    let degree = p.degree().unwrap_or(0);
    let mut acc = XPoly::zero();
    for d in (0..=degree).rev() {
        acc = &operator_a_apply(&acc) + &XPoly::constant(p.coeff(d));
    }
    Ok(acc)
}

/// `r_n(x,s) = Σ [n,k] x^k s^(n-k)`
pub fn rogers_szego(n: u32) -> XPoly {
    XPoly::from_coeffs((0..=n).map(|k| {
        let c = RatFunc::from_poly(q_binomial(n as i64, k as i64));
        (k, c.mul_monomial(&crate::qkernel::rat(1), &crate::Monomial::var_pow(Var::S, (n - k) as i32)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_substitution_matches_closed_forms() {
        let big_f = FamilyId::new(FamilyName::CurFib);
        let lq = FamilyId::new(FamilyName::CurLucas);
        for n in 0..=6 {
            assert_eq!(phi_substitute(FamilyName::Fib, n).unwrap(), family_closed(&big_f, n).unwrap());
            assert_eq!(phi_substitute(FamilyName::Lucas, n).unwrap(), family_closed(&lq, n).unwrap());
        }
        assert_eq!(phi_substitute(FamilyName::Fib, 1).unwrap(), XPoly::x_pow(1));
        assert!(phi_substitute(FamilyName::QChebU, 2).is_err());
    }

    #[test]
    fn rogers_szego_low_degrees() {
        assert_eq!(rogers_szego(1).to_string(), "x + s");
        assert_eq!(rogers_szego(2).to_string(), "x^2 + (s+qs)x + s^2");
        let lhs = dq(&rogers_szego(3));
        let rhs = rogers_szego(2).scale(&RatFunc::from_poly(crate::qseries::q_int(3)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parameter_rules() {
        let f = FamilyId::parse("f").unwrap();
        assert!(f.clone().with_m(3).is_err());
        assert!(f.clone().with_z(ZParam::Value(crate::qkernel::rat(0))).is_err());
        assert!(FamilyId::parse("fm").unwrap().with_m(0).is_err());
        assert!(matches!(FamilyId::parse("nope"), Err(Error::UnknownFamily { .. })));
        assert_eq!(FamilyId::parse("fz").unwrap().to_string(), "fz[z=sym]");
    }
}
