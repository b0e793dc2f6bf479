use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Dense polynomial in one indeterminate `x` with arbitrary-precision integer
/// coefficients, lowest degree first.
///
/// The representation is canonical: the last stored coefficient is nonzero
/// and the zero polynomial has no coefficients, so `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Returned by [`IntPoly::div_one_minus_x`] when the coefficients do not sum
/// to zero, i.e. `1 - x` is not a factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDivisible {
    /// Sum of the coefficients (the remainder of division by `1 - x`).
    pub remainder: BigInt,
}

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "polynomial is not divisible by 1-x (coefficient sum {})",
            self.remainder
        )
    }
}

impl core::error::Error for NotDivisible {}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: alloc::vec![BigInt::one()],
        }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly {
            coeffs: alloc::vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1 - x)^m` expanded: alternating binomial coefficients.
    pub fn one_minus_x_pow(m: usize) -> Self {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for s in 0..m {
            c = -(c * (m - s)) / (s + 1);
            coeffs.push(c.clone());
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Multiplication by `x`: every coefficient moves up one place.
    pub fn mul_x(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn mul_one_minus_x(&self) -> IntPoly {
        Self::blend(Some(self), None)
    }

    /// `(1 - x)·stay + x·join`, in one pass over the coefficients.
    ///
    /// This is the forward recursion of the coalition-weight DP: `stay` is the
    /// entry the new player does not join, `join` the one they do.
    pub fn blend(stay: Option<&IntPoly>, join: Option<&IntPoly>) -> IntPoly {
        let empty: &[BigInt] = &[];
        let stay = stay.map_or(empty, |p| p.coeffs.as_slice());
        let join = join.map_or(empty, |p| p.coeffs.as_slice());
        let len = stay.len().max(join.len()) + 1;
        let mut coeffs = Vec::with_capacity(len);
        for s in 0..len {
            let mut c = stay.get(s).cloned().unwrap_or_default();
            if s > 0 {
                if let Some(prev) = stay.get(s - 1) {
                    c -= prev;
                }
                if let Some(j) = join.get(s - 1) {
                    c += j;
                }
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// `(whole - x·join) / (1 - x)`, the inverse of [`IntPoly::blend`]: if
    /// `whole = (1 - x)·stay + x·join` this returns `stay`. One pass of
    /// running sums from the constant term up.
    pub fn unblend(whole: Option<&IntPoly>, join: Option<&IntPoly>) -> Result<IntPoly, NotDivisible> {
        let empty: &[BigInt] = &[];
        let whole = whole.map_or(empty, |p| p.coeffs.as_slice());
        let join = join.map_or(empty, |p| p.coeffs.as_slice());
        let len = whole.len().max(join.len() + 1);
        let mut coeffs = Vec::with_capacity(len - 1);
        let mut running = BigInt::zero();
        for s in 0..len {
            if let Some(c) = whole.get(s) {
                running += c;
            }
            if s > 0 {
                if let Some(j) = join.get(s - 1) {
                    running -= j;
                }
            }
            if s + 1 < len {
                coeffs.push(running.clone());
            }
        }
        if !running.is_zero() {
            return Err(NotDivisible { remainder: running });
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Exact division by `1 - x` via cumulated sums: the quotient's
    /// coefficient `s` is minus the sum of the dividend's coefficients above
    /// `s`. Fails unless the coefficients sum to zero.
    pub fn div_one_minus_x(&self) -> Result<IntPoly, NotDivisible> {
        let Some((constant, upper)) = self.coeffs.split_first() else {
            return Ok(IntPoly::zero());
        };
        let mut quotient = alloc::vec![BigInt::zero(); upper.len()];
        let mut running = BigInt::zero();
        for (s, c) in upper.iter().enumerate().rev() {
            running += c;
            quotient[s] = -running.clone();
        }
        running += constant;
        if !running.is_zero() {
            return Err(NotDivisible { remainder: running });
        }
        Ok(IntPoly::from_coeffs(quotient))
    }

    pub fn scale(&self, factor: &BigInt) -> IntPoly {
        if factor.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `self += factor · other`, without materializing the scaled term.
    pub fn add_scaled(&mut self, other: &IntPoly, factor: &BigInt) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst += src * factor;
        }
        self.trim();
    }

    pub fn add_assign_poly(&mut self, other: &IntPoly) {
        self.add_scaled(other, &BigInt::one());
    }

    /// Integral over `[0, 1]`: the sum of `c_s / (s + 1)`.
    pub fn integrate_unit(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| Rational::new(c.clone(), BigInt::from(s + 1)))
            .sum()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &acc * x + Rational::from_integer(c.clone()))
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_assign_poly(rhs);
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
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

impl fmt::Display for IntPoly {
    /// Highest degree first, e.g. `-x^3+3x^2-3x+1`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (s, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if s == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match s {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{s}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsePolyError;

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("malformed polynomial")
    }
}

impl core::error::Error for ParsePolyError {}

impl FromStr for IntPoly {
    type Err = ParsePolyError;

    /// Parses expanded sums of monomials such as `x^4-4x^3+6x^2-4x+1`.
    /// Whitespace is ignored and terms may repeat or appear in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(ParsePolyError);
        }
        let bytes = text.as_bytes();
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
            }
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let has_digits = i > digits_start;
            let mut magnitude = if has_digits {
                BigInt::from_str(&text[digits_start..i]).map_err(|_| ParsePolyError)?
            } else {
                BigInt::one()
            };
            let mut power = 0usize;
            if i < bytes.len() && bytes[i] == b'x' {
                i += 1;
                power = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let exp_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    power = text[exp_start..i].parse().map_err(|_| ParsePolyError)?;
                }
            } else if !has_digits {
                return Err(ParsePolyError);
            }
            if negative {
                magnitude = -magnitude;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += magnitude;
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                return Err(ParsePolyError);
            }
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}
