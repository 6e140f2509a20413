//! Integer polynomials in one variable, used for coefficients in ℤ[δ] and
//! for the Chebyshev polynomials behind the decoration algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial with integer coefficients, stored sparsely as
/// exponent → coefficient with no zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: BTreeMap<u32, i64>,
}

/// Coefficients of the TL algebra: polynomials in the loop value δ.
pub type DeltaPoly = Poly;

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::monomial(1, 0)
    }

    /// c·x^e.
    pub fn monomial(c: i64, e: u32) -> Poly {
        let mut p = Poly::zero();
        p.add_term(c, e);
        p
    }

    /// 2^two_exp · x^x_exp.
    pub fn scalar_term(two_exp: u32, x_exp: u32) -> Poly {
        Poly::monomial(1i64 << two_exp, x_exp)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: u32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, c: i64, e: u32) {
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    /// Renders with the given variable name, highest degree first:
    /// `3d^2+1`, `x^2-1`, `-d`, `0`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            if c < 0 {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let a = c.unsigned_abs();
            if a != 1 || e == 0 {
                out.push_str(&a.to_string());
            }
            match e {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{e}")),
            }
        }
        out
    }

    /// Parses the output of [`Poly::render`] for the given variable name.
    pub fn parse_with(text: &str, var: &str) -> Result<Poly> {
        let bad = || Error::Parse(format!("polynomial '{text}'"));
        let text = text.trim();
        if text.is_empty() {
            return Err(bad());
        }
        let mut p = Poly::zero();
        let mut rest = text;
        let mut first = true;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' if !first => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if first => (1, rest),
                _ => return Err(bad()),
            };
            first = false;
            let end = body[1.min(body.len())..]
                .find(['+', '-'])
                .map_or(body.len(), |i| i + 1);
            let term = &body[..end];
            rest = &body[end..];
            let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
            let c: i64 = if digits == 0 {
                1
            } else {
                term[..digits].parse().map_err(|_| bad())?
            };
            let tail = &term[digits..];
            let e = if tail.is_empty() {
                if digits == 0 {
                    return Err(bad());
                }
                0
            } else {
                let after = tail.strip_prefix(var).ok_or_else(bad)?;
                if after.is_empty() {
                    1
                } else {
                    after
                        .strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse()
                        .map_err(|_| bad())?
                }
            };
            p.add_term(sign * c, e);
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    /// Displays in the variable `d` (δ).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("d"))
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(text: &str) -> Result<Poly> {
        Poly::parse_with(text, "d")
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

/// Chebyshev polynomial of the second kind: U₀ = 1, U₁ = x,
/// U_{k+1} = x·U_k − U_{k−1}.
pub fn chebyshev_u(k: usize) -> Poly {
    let x = Poly::monomial(1, 1);
    let (mut prev, mut cur) = (Poly::one(), x.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_u(0).render("x"), "1");
        assert_eq!(chebyshev_u(1).render("x"), "x");
        assert_eq!(chebyshev_u(2).render("x"), "x^2-1");
        assert_eq!(chebyshev_u(3).render("x"), "x^3-2x");
    }

    #[test]
    fn render_and_parse() {
        let p = &Poly::monomial(3, 2) + &Poly::one();
        assert_eq!(p.to_string(), "3d^2+1");
        for text in ["3d^2+1", "-d", "0", "d^3-2d", "2", "-4d^2+d-7"] {
            let p: Poly = if text == "0" {
                Poly::zero()
            } else {
                text.parse().unwrap()
            };
            assert_eq!(p.to_string(), text);
        }
        assert!("d+".parse::<Poly>().is_err());
        assert!("x".parse::<Poly>().is_err());
        assert!("".parse::<Poly>().is_err());
    }

    #[test]
    fn arithmetic() {
        let d = Poly::monomial(1, 1);
        let sq = &(&d + &Poly::one()) * &(&d - &Poly::one());
        assert_eq!(sq.to_string(), "d^2-1");
        assert!((&d - &d).is_zero());
        assert_eq!(Poly::scalar_term(2, 1).to_string(), "4d");
    }
}
