//! Exact integer polynomials in the counting variable `q`.
//!
//! Coefficients are arbitrary-precision integers stored in ascending degree
//! order with no trailing zeros (the empty vector is the zero polynomial).
//! Division exists only in exact form: every division the counting engines
//! perform is exact by construction, and a nonzero remainder is a bug, so
//! [`IntPoly::div_exact`] panics rather than returning a remainder.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A univariate polynomial in `q` with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `c·q^degree`; zero `c` gives the zero polynomial.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    /// Builds from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_u64(&self, q: u64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// Exact quotient; panics on a nonzero remainder or zero divisor.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        assert!(
            rem.len() >= divisor.coeffs.len(),
            "inexact division: {self} / {divisor}"
        );
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let (q, r) = num_integer_div_rem(&rem[i + d], lead);
            assert!(r.is_zero(), "inexact division: {self} / {divisor}");
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i + j] -= t;
            }
            quot[i] = q;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact division: {self} / {divisor}"
        );
        IntPoly::from_coeffs(quot)
    }

    /// Space-separated ascending coefficients, e.g. `4 7 5 1`; `0` for zero.
    pub fn ascending_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the output of [`ascending_text`](Self::ascending_text).
    pub fn parse_ascending(text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for token in text.split_whitespace() {
            let c: BigInt = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{token}`")))?;
            coeffs.push(c);
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

impl fmt::Display for IntPoly {
    /// Human form, descending: `q^3+5q^2+7q+4`, `2q^2-1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            match (deg, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{deg}")?,
                (_, false) => write!(f, "{mag}q^{deg}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[4, 7, 5, 1]).to_string(), "q^3+5q^2+7q+4");
        assert_eq!(poly(&[-1, 0, 2]).to_string(), "2q^2-1");
        assert_eq!(poly(&[2, 1]).to_string(), "q+2");
        assert_eq!(poly(&[-2, 4]).to_string(), "4q-2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(poly(&[4, 7, 5, 1]).ascending_text(), "4 7 5 1");
        assert_eq!(IntPoly::zero().ascending_text(), "0");
    }

    #[test]
    fn parse_ascending_roundtrip() {
        let p = IntPoly::parse_ascending("4 7 5 1").unwrap();
        assert_eq!(p, poly(&[4, 7, 5, 1]));
        assert_eq!(IntPoly::parse_ascending("0").unwrap(), IntPoly::zero());
        assert!(IntPoly::parse_ascending("1 x").is_err());
    }

    #[test]
    fn eval_and_degree() {
        let p = poly(&[4, 7, 5, 1]);
        assert_eq!(p.eval_u64(2), BigInt::from(46));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::monomial(1, 4).eval_u64(3), BigInt::from(81));
    }

    #[test]
    fn exact_division() {
        let num = poly(&[0, 0, 0, 1]); // q^3
        let den = poly(&[0, 1]); // q
        assert_eq!(num.div_exact(&den), poly(&[0, 0, 1]));
        let prod = &poly(&[1, 1]) * &poly(&[-1, 1]);
        assert_eq!(prod.div_exact(&poly(&[1, 1])), poly(&[-1, 1]));
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn inexact_division_panics() {
        poly(&[1, 1]).div_exact(&poly(&[0, 1]));
    }

    proptest! {
        #[test]
        fn ring_laws(a in proptest::collection::vec(-5i64..6, 0..5),
                     b in proptest::collection::vec(-5i64..6, 0..5),
                     c in proptest::collection::vec(-5i64..6, 0..5),
                     q in 0u64..20) {
            let (a, b, c) = (poly(&a), poly(&b), poly(&c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // Evaluation is a ring homomorphism.
            let qv = BigInt::from(q);
            prop_assert_eq!((&a * &b).eval(&qv), a.eval(&qv) * b.eval(&qv));
            // Exact division undoes multiplication.
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), a);
            }
        }
    }
}
