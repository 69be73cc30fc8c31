use std::ops::{Add, Mul, Neg, Sub};

use crate::qkernel::{KernelError, RatFunc, Var};

/// A power series in `u` truncated after `u^order`, with rational-function
/// coefficients. Binary operations truncate to the smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<RatFunc>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> TruncSeries {
        TruncSeries { coeffs: vec![RatFunc::zero(); order + 1] }
    }

    pub fn one(order: usize) -> TruncSeries {
        TruncSeries::constant(RatFunc::one(), order)
    }

    pub fn constant(c: RatFunc, order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `u` itself.
    pub fn u(order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = RatFunc::one();
        }
        s
    }

    /// Panics on an empty coefficient list.
    pub fn from_coeffs(coeffs: Vec<RatFunc>) -> TruncSeries {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        TruncSeries { coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> RatFunc>(order: usize, f: F) -> TruncSeries {
        TruncSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn try_from_fn<F>(order: usize, f: F) -> Result<TruncSeries, KernelError>
    where
        F: FnMut(usize) -> Result<RatFunc, KernelError>,
    {
        Ok(TruncSeries { coeffs: (0..=order).map(f).collect::<Result<_, _>>()? })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &RatFunc {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RatFunc> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn scale(&self, c: &RatFunc) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `u^k * self`, keeping the order.
    pub fn shift(&self, k: usize) -> TruncSeries {
        let n = self.order();
        TruncSeries::from_fn(n, |i| if i < k { RatFunc::zero() } else { self.coeffs[i - k].clone() })
    }

    /// The substitution `u -> q^a u`.
    pub fn scale_u(&self, a: i32) -> TruncSeries {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.mul_q_pow(a * n as i32))
                .collect(),
        }
    }

    /// The substitution `u -> c u`.
    pub fn scale_u_by(&self, c: &RatFunc) -> TruncSeries {
        let mut pow = RatFunc::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pow);
            pow = &pow * c;
        }
        TruncSeries { coeffs }
    }

    pub fn inverse(&self) -> Result<TruncSeries, KernelError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        let inv0 = a0.inv()?;
        let n = self.order();
        let mut b: Vec<RatFunc> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for i in 1..=n {
            let mut acc = RatFunc::zero();
            for k in 1..=i {
                if !self.coeffs[k].is_zero() && !b[i - k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &b[i - k]);
                }
            }
            b.push(-&(&acc * &inv0));
        }
        Ok(TruncSeries { coeffs: b })
    }

    pub fn checked_div(&self, other: &TruncSeries) -> Result<TruncSeries, KernelError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, k: u32) -> TruncSeries {
        let mut acc = TruncSeries::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self(b(u))` for a series `b` without constant term.
    pub fn compose(&self, b: &TruncSeries) -> Result<TruncSeries, KernelError> {
        if !b.coeffs[0].is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        let order = self.order().min(b.order());
        let b = b.truncate(order);
        // Horner from the top coefficient.
        let mut acc = TruncSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &b;
            acc.coeffs[0] = &acc.coeffs[0] + c;
        }
        Ok(acc)
    }

    /// Applies a fallible map to every coefficient.
    pub fn try_map<F>(&self, f: F) -> Result<TruncSeries, KernelError>
    where
        F: FnMut(&RatFunc) -> Result<RatFunc, KernelError>,
    {
        Ok(TruncSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_, _>>()? })
    }

    pub fn eval_var(&self, v: Var, value: &crate::qkernel::Rational) -> Result<TruncSeries, KernelError> {
        self.try_map(|c| c.eval_var(v, value))
    }

    pub fn limit_q1(&self) -> Result<TruncSeries, KernelError> {
        self.try_map(RatFunc::limit_q1)
    }

    /// Index of the first coefficient where the two series differ, up to
    /// the smaller order.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// Canonical strings of the coefficients.
    pub fn render(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    fn combine(&self, other: &TruncSeries, negate: bool) -> TruncSeries {
        let n = self.order().min(other.order());
        TruncSeries::from_fn(n, |i| {
            if negate {
                &self.coeffs[i] - &other.coeffs[i]
            } else {
                &self.coeffs[i] + &other.coeffs[i]
            }
        })
    }

    fn product(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order().min(other.order());
        TruncSeries::from_fn(n, |i| {
            let mut acc = RatFunc::zero();
            for k in 0..=i {
                let (a, b) = (&self.coeffs[k], &other.coeffs[i - k]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.combine(rhs, false)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.combine(rhs, true)
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.product(rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(order: usize) -> TruncSeries {
        TruncSeries::from_fn(order, |_| RatFunc::one())
    }

    #[test]
    fn one_minus_u_times_geometric() {
        let one_minus_u = &TruncSeries::one(8) - &TruncSeries::u(8);
        assert_eq!(&one_minus_u * &geometric(8), TruncSeries::one(8));
        assert!((&geometric(8) * &TruncSeries::zero(8)).is_zero());
    }

    #[test]
    fn inverse_of_one_minus_u() {
        let one_minus_u = &TruncSeries::one(8) - &TruncSeries::u(8);
        assert_eq!(one_minus_u.inverse().unwrap(), geometric(8));
        assert_eq!(TruncSeries::one(5).inverse().unwrap(), TruncSeries::one(5));
        assert!(TruncSeries::u(3).inverse().is_err());
    }

    #[test]
    fn order_is_min() {
        let a = geometric(3);
        let b = geometric(6);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
    }

    #[test]
    fn scale_u_round_trip() {
        let g = geometric(6);
        let s = g.scale_u(1);
        assert_eq!(s.coeff(3), &RatFunc::q_pow(3));
        assert_eq!(g.scale_u(0), g);
        assert_eq!(g.scale_u(-1).scale_u(1), g);
    }

    #[test]
    fn catalan_convolution() {
        let cat = [1i64, 1, 2, 5, 14, 42, 132];
        let c = TruncSeries::from_fn(6, |n| RatFunc::int(cat[n]));
        let sq = &c * &c;
        for n in 0..=6 {
            let brute: i64 = (0..=n).map(|k| cat[k] * cat[n - k]).sum();
            assert_eq!(sq.coeff(n), &RatFunc::int(brute));
        }
    }
}
