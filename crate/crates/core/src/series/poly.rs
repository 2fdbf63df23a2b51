//! Exact univariate polynomials in the indeterminate `x` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{factorial, rat_int, Rational};

/// Dense polynomial with rational coefficients, `coeffs[i]` multiplying `x^i`.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty coefficient vector and has no degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The value of a constant polynomial, `None` if the degree is positive.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// `p(x + c)`, by Horner over the shifted variable.
    pub fn taylor_shift(&self, c: &Rational) -> Self {
        let shifted = Poly::from_coeffs(vec![c.clone(), Rational::one()]);
        let mut acc = Poly::zero();
        for coefficient in self.coeffs.iter().rev() {
            acc = &acc * &shifted + Poly::constant(coefficient.clone());
        }
        acc
    }

    /// Exact division by `x`; `None` when the constant term is nonzero.
    pub fn div_x(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return Some(Poly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(Poly::from_coeffs(self.coeffs[1..].to_vec()))
    }

    /// Binomial coefficient polynomial `C(x + shift, k)`.
    pub fn binomial_in_x(shift: i64, k: usize) -> Self {
        let mut acc = Poly::one();
        for i in 0..k {
            let term = Poly::from_coeffs(vec![rat_int(shift - i as i64), Rational::one()]);
            acc = &acc * &term;
        }
        acc.scale(&Rational::new(1.into(), factorial(k)))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for Poly {
            type Output = Poly;
            fn $op(self, rhs: Poly) -> Poly {
                (&self).$op(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::one()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `x^3 - 3x^2 + 2x`; rationals print as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{magnitude}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{magnitude}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::rat;

    #[test]
    fn canonical_form_trims_zeros() {
        let p = Poly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Poly::from_coeffs(vec![rat_int(0)]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn eval_and_arith() {
        // x^2 - x at 3 is 6
        let p = &(&Poly::x() * &Poly::x()) - &Poly::x();
        assert_eq!(p.eval(&rat_int(3)), rat_int(6));
        let q = &p + &Poly::one();
        assert_eq!(q.eval(&rat_int(3)), rat_int(7));
        assert_eq!((&p - &p), Poly::zero());
    }

    #[test]
    fn taylor_shift_shifts_argument() {
        let p = &(&Poly::x() * &Poly::x()) - &Poly::constant(rat_int(4));
        let q = p.taylor_shift(&rat_int(1)); // (x+1)^2 - 4
        for v in -3..4 {
            assert_eq!(q.eval(&rat_int(v)), p.eval(&rat_int(v + 1)));
        }
    }

    #[test]
    fn binomial_in_x_matches_values() {
        // C(x, 2) at x = 5 is 10
        let p = Poly::binomial_in_x(0, 2);
        assert_eq!(p.eval(&rat_int(5)), rat_int(10));
        // C(x+2, 3) at x = 2 is C(4,3) = 4
        let q = Poly::binomial_in_x(2, 3);
        assert_eq!(q.eval(&rat_int(2)), rat_int(4));
        assert_eq!(Poly::binomial_in_x(-1, 0), Poly::one());
    }

    #[test]
    fn div_x_is_exact() {
        let p = Poly::from_coeffs(vec![rat_int(0), rat_int(2), rat(1, 2)]);
        let q = p.div_x().unwrap();
        assert_eq!(q, Poly::from_coeffs(vec![rat_int(2), rat(1, 2)]));
        assert!(Poly::one().div_x().is_none());
    }

    #[test]
    fn display_style() {
        let p = Poly::from_coeffs(vec![rat_int(0), rat_int(2), rat_int(-3), rat_int(1)]);
        assert_eq!(p.to_string(), "x^3 - 3x^2 + 2x");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::constant(rat(-1, 2)).to_string(), "-1/2");
        let q = Poly::from_coeffs(vec![rat_int(2), rat(1, 2), rat(1, 2)]);
        assert_eq!(q.to_string(), "1/2x^2 + 1/2x + 2");
    }
}
