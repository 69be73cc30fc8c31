//! Canonical text form and its parser.
//!
//! Polynomials print their terms in ascending monomial order with the
//! coefficient juxtaposed: `1+2q+q^2`, `-3/2q^-1z`. Rational functions print
//! as `num/den` with the numerator parenthesized when it has several terms
//! and the denominator as a product of its factors, e.g. `q/((1+q)(1+q^2))`.

use std::fmt;

use num_traits::{One, Signed};

use super::atom::{Atom, AtomKind};
use super::monomial::{Monomial, Var};
use super::poly::MPoly;
use super::ratfunc::RatFunc;
use super::{KernelError, Rational};

fn write_monomial(out: &mut String, m: &Monomial) {
    for v in Var::ALL {
        let e = m.exp(v);
        match e {
            0 => {}
            1 => out.push(v.name()),
            _ => {
                out.push(v.name());
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

fn write_term(out: &mut String, c: &Rational, m: &Monomial, first: bool) {
    if !first && !c.is_negative() {
        out.push('+');
    }
    if m.is_one() {
        out.push_str(&c.to_string());
        return;
    }
    if (-c).is_one() {
        out.push('-');
    } else if !c.is_one() {
        out.push_str(&c.to_string());
    }
    write_monomial(out, m);
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            write_term(&mut s, c, m, i == 0);
        }
        f.write_str(&s)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut s = String::new();
        write_monomial(&mut s, self);
        f.write_str(&s)
    }
}

/// Renders a factored denominator, or `None` if it is empty.
pub(super) fn render_factors(den: &[(Atom, u32)]) -> Option<String> {
    if den.is_empty() {
        return None;
    }
    let mut parts = Vec::with_capacity(den.len());
    for (a, e) in den {
        let base = match a.kind() {
            AtomKind::Var(v) => v.name().to_string(),
            _ => format!("({})", a.poly()),
        };
        if *e == 1 {
            parts.push(base);
        } else {
            parts.push(format!("{base}^{e}"));
        }
    }
    let joined = parts.concat();
    if den.len() == 1 {
        Some(joined)
    } else {
        Some(format!("({joined})"))
    }
}

/// Parses any expression in `q, x, z, s, u` built from rationals, `+ - * /`,
/// juxtaposition, parentheses and integer powers.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc, KernelError> {
    let mut p = Parser {
        src: input,
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let r = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(product(r))
}

/// Parses a polynomial; fails if the expression has a denominator.
pub fn parse_poly(input: &str) -> Result<MPoly, KernelError> {
    let r = parse_ratfunc(input)?;
    r.as_poly().cloned().ok_or_else(|| KernelError::Parse {
        input: input.to_string(),
        reason: "not a polynomial".to_string(),
    })
}

/// Products stay unexpanded while parsing so that each factor of a
/// denominator is inverted on its own and keeps its factored form.
type Factors = Vec<RatFunc>;

fn product(f: Factors) -> RatFunc {
    f.iter().fold(RatFunc::one(), |acc, x| &acc * x)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> KernelError {
        KernelError::Parse {
            input: self.src.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Factors, KernelError> {
        let negate = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut first = self.term()?;
        if negate {
            first.push(RatFunc::int(-1));
        }
        if !matches!(self.peek(), Some('+') | Some('-')) {
            return Ok(first);
        }
        let mut acc = product(first);
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &product(self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &product(self.term()?);
                }
                _ => break,
            }
        }
        Ok(vec![acc])
    }

    fn term(&mut self) -> Result<Factors, KernelError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc.extend(self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    for d in self.power()? {
                        acc.push(d.inv().map_err(|_| self.error("division by zero"))?);
                    }
                }
                Some(c) if c == '(' || c.is_ascii_digit() || Var::from_name(c).is_some() => {
                    acc.extend(self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Factors, KernelError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.integer()?;
        let e: i32 = e.parse().map_err(|_| self.error("exponent out of range"))?;
        let e = if neg { -e } else { e };
        base.iter()
            .map(|f| f.pow(e).map_err(|_| self.error("zero to a negative power")))
            .collect()
    }

    fn integer(&mut self) -> Result<String, KernelError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<Factors, KernelError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let r = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer()?;
                let n: num_bigint::BigInt =
                    digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(vec![RatFunc::constant(Rational::from_integer(n))])
            }
            Some(c) => match Var::from_name(c) {
                Some(v) => {
                    self.pos += 1;
                    Ok(vec![RatFunc::var(v)])
                }
                None => Err(self.error("unexpected character")),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in [
            "1+2q+q^2",
            "0",
            "-3/2q^-1z",
            "q/((1+q)(1+q^2))",
            "1/(1-q)^2",
            "(1-z)/z",
            "1/z^2",
            "(x+q^2s)/((1-qz)(1-q^2z))",
        ] {
            let r = parse_ratfunc(s).unwrap();
            assert_eq!(r.to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_ratfunc("1+").is_err());
        assert!(parse_ratfunc("(1+q").is_err());
        assert!(parse_ratfunc("1/0").is_err());
        assert!(parse_ratfunc("w").is_err());
        assert!(parse_poly("1/q").is_ok());
        assert!(parse_poly("1/(1+q)").is_err());
    }
}
