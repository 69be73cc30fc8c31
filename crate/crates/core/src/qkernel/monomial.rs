use std::cmp::Ordering;
use std::fmt;

/// The five indeterminates of the kernel. Only `Q` may carry a negative
/// exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    X = 1,
    Z = 2,
    S = 3,
    U = 4,
}

pub const NVARS: usize = 5;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::X, Var::Z, Var::S, Var::U];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::Q => 'q',
            Var::X => 'x',
            Var::Z => 'z',
            Var::S => 's',
            Var::U => 'u',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'q' => Some(Var::Q),
            'x' => Some(Var::X),
            'z' => Some(Var::Z),
            's' => Some(Var::S),
            'u' => Some(Var::U),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector over `(q, x, z, s, u)`.
///
/// Ordered by total degree, ties broken lexicographically on the exponent
/// vector. This is the order terms are printed in, and (restricted to
/// nonnegative exponents) a monomial order usable for division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Monomial {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    /// `q^e`
    pub fn q(e: i32) -> Monomial {
        Monomial::var_pow(Var::Q, e)
    }

    #[inline]
    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    #[inline]
    pub fn set_exp(&mut self, v: Var, e: i32) {
        self.0[v.index()] = e;
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = self.0;
        for (a, b) in r.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(r)
    }

    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut r = self.0;
        for (a, b) in r.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        Monomial(r)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.map(|e| e * k))
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Whether `other` divides `self` in the polynomial sense (every
    /// exponent of `self` at least that of `other`).
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = self.0;
        for (a, b) in r.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(r)
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        Var::ALL.into_iter().filter(move |v| self.exp(*v) != 0)
    }

    /// Greatest common divisor of the exponents (0 for the unit monomial).
    pub fn exponent_gcd(&self) -> u32 {
        self.0
            .iter()
            .fold(0u32, |g, &e| num_integer::gcd(g, e.unsigned_abs()))
    }

    /// Lexicographic sign: the sign of the first nonzero exponent.
    pub fn lex_sign(&self) -> i32 {
        self.0
            .iter()
            .find(|&&e| e != 0)
            .map(|e| e.signum())
            .unwrap_or(0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let one = Monomial::ONE;
        let q = Monomial::var(Var::Q);
        let q2 = Monomial::q(2);
        let x = Monomial::var(Var::X);
        assert!(one < q);
        assert!(q < q2);
        assert!(x < q);
        assert!(Monomial::q(-1) < one);
    }

    #[test]
    fn exponent_gcd_and_sign() {
        let m = Monomial([4, 0, 6, 0, 0]);
        assert_eq!(m.exponent_gcd(), 2);
        assert_eq!(Monomial([-1, 0, 2, 0, 0]).lex_sign(), -1);
        assert_eq!(Monomial::ONE.exponent_gcd(), 0);
    }
}
