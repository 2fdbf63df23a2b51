//! Exact coefficient rings and truncated formal power series.
//!
//! A [`Series`] holds coefficients `c_0..c_N` of a formal power series in `t`
//! truncated (inclusively) at order `N`. Binary operations truncate to the
//! smaller order of their operands. Coefficients live in an exact ring
//! implementing [`Coeff`]; the two instantiations used by this crate are
//! [`Rational`] and [`Poly`].

mod poly;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

pub use poly::Poly;
pub use rational::{binomial, factorial, rat, rat_int, Rational};

/// Errors raised by series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not invertible in the coefficient ring")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("series has the wrong constant term (expected {expected})")]
    BadConstantTerm { expected: &'static str },
    #[error("linear coefficient is not invertible; no compositional inverse")]
    ZeroLinearCoefficient,
    #[error("coefficient {index} requested but series is truncated at order {order}")]
    OrderExceeded { index: usize, order: usize },
}

/// An exact commutative ring usable as a series coefficient.
///
/// Beyond the ring structure, the trait provides the embedding of the
/// rationals (every ring here is a Q-algebra, which is what makes the
/// exponential/logarithm recurrences exact) and partial inversion.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat_int(n))
    }

    /// Multiplicative inverse, when this element is a unit.
    fn try_invert(&self) -> Option<Self>;

    /// The distinguished indeterminate, for rings that carry one.
    fn indeterminate() -> Option<Self>;
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn try_invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn indeterminate() -> Option<Self> {
        None
    }
}

impl Coeff for Poly {
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }

    // Only nonzero rational constants are units in Q[x].
    fn try_invert(&self) -> Option<Self> {
        let c = self.constant_value()?;
        c.try_invert().map(Poly::constant)
    }

    fn indeterminate() -> Option<Self> {
        Some(Poly::x())
    }
}

/// Truncated formal power series `c_0 + c_1 t + ... + c_N t^N`.
///
/// ```
/// use umbral::series::{rat_int, Rational, Series};
///
/// // 1/(1 - t) = 1 + t + t^2 + ...
/// let geometric = Series::from_fn(6, |n| {
///     if n == 0 { rat_int(1) } else if n == 1 { rat_int(-1) } else { rat_int(0) }
/// })
/// .recip()
/// .unwrap();
/// assert_eq!(geometric, Series::from_fn(6, |_| rat_int(1)));
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R: Coeff = Rational> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Series<R> {
    /// Builds a series from ascending coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> R) -> Self {
        Series {
            coeffs: (0..=order).map(&mut f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Series::from_fn(order, |n| if n == 0 { c.clone() } else { R::zero() })
    }

    /// The identity series `t`.
    pub fn t(order: usize) -> Self {
        Series::from_fn(order, |n| if n == 1 { R::one() } else { R::zero() })
    }

    /// Inclusive truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> Result<&R, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OrderExceeded {
            index: n,
            order: self.order(),
        })
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    /// Copy truncated to `order` (which must not exceed the current order).
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| f(&self.coeffs[n], &rhs.coeffs[n]))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    pub fn negate(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs }
    }

    /// Multiplicative inverse: `self * recip(self) = 1` up to the order.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .try_invert()
            .ok_or(SeriesError::ZeroConstantTerm)?;
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        out[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out[n] = -(inv0.clone() * acc);
        }
        Ok(Series { coeffs: out })
    }

    /// Substitution `self(g(t))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let order = self.order().min(g.order());
        let g = g.truncated(order);
        let mut acc = Series::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// Exponential of a series with zero constant term.
    ///
    /// Coefficients follow the first-order recurrence obtained from
    /// `b' = a' b`: `n b_n = sum_{k=1..n} k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::BadConstantTerm { expected: "0" });
        }
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        out[0] = R::one();
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc
                    + R::from_int(k as i64) * self.coeffs[k].clone() * out[n - k].clone();
            }
            out[n] = acc * R::from_rational(&rat(1, n as i64));
        }
        Ok(Series { coeffs: out })
    }

    /// Logarithm of a series with constant term one.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm { expected: "1" });
        }
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..n {
                if self.coeffs[n - k].is_zero() || out[k].is_zero() {
                    continue;
                }
                acc = acc + R::from_int(k as i64) * out[k].clone() * self.coeffs[n - k].clone();
            }
            out[n] = self.coeffs[n].clone() - acc * R::from_rational(&rat(1, n as i64));
        }
        Ok(Series { coeffs: out })
    }

    /// Compositional inverse of a series with zero constant term and unit
    /// linear coefficient, by Lagrange inversion:
    /// `[t^n] inverse = (1/n) [t^(n-1)] (t/self)^n`.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::BadConstantTerm { expected: "0" });
        }
        let order = self.order();
        if order == 0 || self.coeffs[1].try_invert().is_none() {
            return Err(SeriesError::ZeroLinearCoefficient);
        }
        // t/self, a unit series of order N-1.
        let quotient = Series {
            coeffs: self.coeffs[1..].to_vec(),
        }
        .recip()?;
        let mut out = vec![R::zero(); order + 1];
        let mut power = Series::one(order - 1);
        for n in 1..=order {
            power = power.mul(&quotient);
            out[n] = power.coeffs[n - 1].clone() * R::from_rational(&rat(1, n as i64));
        }
        Ok(Series { coeffs: out })
    }

    /// Integer power, with negative exponents through [`Series::recip`].
    pub fn pow_i(&self, exp: i64) -> Result<Self, SeriesError> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut acc = Series::one(self.order());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Substitution `t -> c t`: multiplies `c_n` by `c^n`.
    pub fn dilate(&self, c: &R) -> Self {
        let mut power = R::one();
        Series::from_fn(self.order(), |n| {
            if n > 0 {
                power = power.clone() * c.clone();
            }
            self.coeffs[n].clone() * power.clone()
        })
    }

    /// Multiplication by `t` at fixed order (the top coefficient drops off).
    pub fn mul_t(&self) -> Self {
        Series::from_fn(self.order(), |n| {
            if n == 0 {
                R::zero()
            } else {
                self.coeffs[n - 1].clone()
            }
        })
    }
}

impl Series<Rational> {
    /// Embeds rational coefficients as constant polynomials.
    pub fn lift_to_poly(&self) -> Series<Poly> {
        Series {
            coeffs: self.coeffs.iter().map(|c| Poly::constant(c.clone())).collect(),
        }
    }

    /// `self^x = exp(x log self)` with `x` the polynomial indeterminate;
    /// requires constant term one. The coefficient of `t^n` is a polynomial
    /// in `x` of degree at most `n`.
    pub fn pow_x(&self) -> Result<Series<Poly>, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm { expected: "1" });
        }
        let log = self.log()?;
        let x_log = Series {
            coeffs: log.coeffs.into_iter().map(|c| Poly::monomial(c, 1)).collect(),
        };
        x_log.exp()
    }
}

impl Series<Poly> {
    /// Evaluates every polynomial coefficient at `x = at`.
    pub fn eval_at_x(&self, at: &Rational) -> Series<Rational> {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.eval(at)).collect(),
        }
    }
}

impl<R: Coeff> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl<R: Coeff> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        Series::add(self, rhs)
    }
}

impl<R: Coeff> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        Series::sub(self, rhs)
    }
}

impl<R: Coeff> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        Series::mul(self, rhs)
    }
}

impl<R: Coeff> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(order: usize) -> Series<Rational> {
        // 1/(1-t) = 1 + t + t^2 + ...
        Series::from_fn(order, |_| Rational::one())
    }

    fn exp_t(order: usize) -> Series<Rational> {
        Series::from_fn(order, |n| Rational::new(1.into(), factorial(n)))
    }

    #[test]
    fn add_cancellation() {
        let a = Series::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let b = Series::from_coeffs(vec![rat_int(1), rat_int(-1)]);
        assert_eq!(a.add(&b), Series::constant(rat_int(2), 1));
    }

    #[test]
    fn scale_by_zero() {
        let a = geometric(8);
        assert_eq!(a.scale(&Rational::zero()), Series::zero(8));
    }

    #[test]
    fn sub_one_from_geometric() {
        let g = geometric(6);
        let s = g.sub(&Series::one(6));
        for n in 1..=6 {
            assert_eq!(s.coeff(n).unwrap(), &rat_int(1));
        }
        assert!(s.coeff(0).unwrap().is_zero());
    }

    #[test]
    fn mul_basic() {
        let one_plus_t = Series::from_coeffs(vec![rat_int(1), rat_int(1), rat_int(0)]);
        let one_minus_t = Series::from_coeffs(vec![rat_int(1), rat_int(-1), rat_int(0)]);
        let p = one_plus_t.mul(&one_minus_t);
        assert_eq!(p, Series::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(-1)]));

        let q = Series::from_coeffs(vec![rat_int(1), rat_int(1), rat_int(1)]);
        assert_eq!(q.mul(&Series::one(2)), q);
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = geometric(10);
        let b = geometric(4);
        let p = a.mul(&b);
        assert_eq!(p.order(), 4);
        // convolution of all-ones sequences: coefficient n is n+1
        for n in 0..=4 {
            assert_eq!(p.coeff(n).unwrap(), &rat_int(n as i64 + 1));
        }
    }

    #[test]
    fn recip_matches_known_series() {
        assert_eq!(Series::<Rational>::one(5).recip().unwrap(), Series::one(5));

        let one_minus_t =
            Series::from_fn(8, |n| if n == 0 { rat_int(1) } else if n == 1 { rat_int(-1) } else { rat_int(0) });
        assert_eq!(one_minus_t.recip().unwrap(), geometric(8));

        // 1/(1-t-t^2) carries the Fibonacci numbers
        let denom = Series::from_fn(8, |n| match n {
            0 => rat_int(1),
            1 | 2 => rat_int(-1),
            _ => rat_int(0),
        });
        let fib = denom.recip().unwrap();
        let expected = [1, 1, 2, 3, 5, 8, 13, 21, 34];
        for (n, f) in expected.iter().enumerate() {
            assert_eq!(fib.coeff(n).unwrap(), &rat_int(*f));
        }
        assert_eq!(fib.coeff(5).unwrap(), &rat_int(8));
    }

    #[test]
    fn recip_rejects_zero_constant() {
        let t = Series::<Rational>::t(4);
        assert_eq!(t.recip(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn poly_ring_recip_requires_constant_unit() {
        let ok = Series::<Poly>::from_coeffs(vec![Poly::constant(rat_int(2)), Poly::x()]);
        assert!(ok.recip().is_ok());
        let bad = Series::<Poly>::from_coeffs(vec![Poly::x(), Poly::one()]);
        assert_eq!(bad.recip(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn compose_identity() {
        let f = exp_t(9);
        assert_eq!(f.compose(&Series::t(9)).unwrap(), f);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let f = geometric(5);
        assert_eq!(
            f.compose(&Series::one(5)),
            Err(SeriesError::NonzeroInnerConstant)
        );
    }

    #[test]
    fn compose_geometric_with_t_plus_t2() {
        // 1/(1-t) at t+t^2 gives 1/(1-t-t^2)
        let g = Series::from_fn(10, |n| if n == 1 || n == 2 { rat_int(1) } else { rat_int(0) });
        let composed = geometric(10).compose(&g).unwrap();
        let fib = Series::from_fn(10, |n| match n {
            0 => rat_int(1),
            1 | 2 => rat_int(-1),
            _ => rat_int(0),
        })
        .recip()
        .unwrap();
        assert_eq!(composed, fib);
    }

    #[test]
    fn exp_log_basics() {
        assert_eq!(Series::<Rational>::zero(6).exp().unwrap(), Series::one(6));
        assert_eq!(Series::<Rational>::one(6).log().unwrap(), Series::zero(6));
        assert_eq!(Series::<Rational>::t(10).exp().unwrap(), exp_t(10));
        assert_eq!(
            Series::<Rational>::t(4).log(),
            Err(SeriesError::BadConstantTerm { expected: "1" })
        );
        assert_eq!(
            Series::<Rational>::one(4).exp(),
            Err(SeriesError::BadConstantTerm { expected: "0" })
        );
    }

    #[test]
    fn exp_of_exp_minus_one_gives_bell_numbers() {
        let em1 = exp_t(10).sub(&Series::one(10));
        let bell_gf = em1.exp().unwrap();
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, b) in bell.iter().enumerate() {
            let moment = bell_gf.coeff(n).unwrap() * Rational::from_integer(factorial(n));
            assert_eq!(moment, rat_int(*b as i64));
        }
    }

    #[test]
    fn exp_log_roundtrip_of_composite() {
        let f = geometric(12);
        let log = f.log().unwrap();
        assert_eq!(log.exp().unwrap(), f);
        // and exp(log(1+t)) = 1 + t
        let one_plus_t = Series::from_fn(12, |n| if n <= 1 { rat_int(1) } else { rat_int(0) });
        assert_eq!(one_plus_t.log().unwrap().exp().unwrap(), one_plus_t);
    }

    #[test]
    fn compose_exp_with_log_one_plus_t() {
        let one_plus_t = Series::from_fn(12, |n| if n <= 1 { rat_int(1) } else { rat_int(0) });
        let log1p = one_plus_t.log().unwrap();
        assert_eq!(exp_t(12).compose(&log1p).unwrap(), one_plus_t);
    }

    #[test]
    fn comp_inverse_identity_and_known_pairs() {
        let t = Series::<Rational>::t(8);
        assert_eq!(t.comp_inverse().unwrap(), t);

        // inverse of e^t - 1 is log(1+t) = t - t^2/2 + t^3/3 - ...
        let em1 = exp_t(10).sub(&Series::one(10));
        let inv = em1.comp_inverse().unwrap();
        for n in 1..=10 {
            let sign = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(inv.coeff(n).unwrap(), &rat(sign, n as i64));
        }
        assert_eq!(em1.compose(&inv).unwrap(), Series::t(10));
        assert_eq!(inv.compose(&em1).unwrap(), Series::t(10));
    }

    #[test]
    fn comp_inverse_of_t_plus_t2() {
        let f = Series::from_fn(8, |n| if n == 1 || n == 2 { rat_int(1) } else { rat_int(0) });
        let inv = f.comp_inverse().unwrap();
        let expected = [0i64, 1, -1, 2, -5];
        for (n, c) in expected.iter().enumerate() {
            assert_eq!(inv.coeff(n).unwrap(), &rat_int(*c));
        }
        assert_eq!(f.compose(&inv).unwrap(), Series::t(8));
        assert_eq!(inv.compose(&f).unwrap(), Series::t(8));
    }

    #[test]
    fn comp_inverse_requires_unit_linear_term() {
        let t2 = Series::<Rational>::from_fn(6, |n| if n == 2 { rat_int(1) } else { rat_int(0) });
        assert_eq!(t2.comp_inverse(), Err(SeriesError::ZeroLinearCoefficient));
    }

    #[test]
    fn pow_x_falling_and_rising_factorials() {
        // (1+t)^x: n! [t^n] = x(x-1)...(x-n+1)
        let one_plus_t = Series::from_fn(6, |n| if n <= 1 { rat_int(1) } else { rat_int(0) });
        let p = one_plus_t.pow_x().unwrap();
        let n = 4;
        let fall = p.coeff(n).unwrap().scale(&Rational::from_integer(factorial(n)));
        let mut expect = Poly::one();
        for i in 0..n {
            expect = &expect * &Poly::from_coeffs(vec![rat_int(-(i as i64)), rat_int(1)]);
        }
        assert_eq!(fall, expect);

        // (1/(1-t))^x: n! [t^n] = x(x+1)...(x+n-1)
        let p = geometric(6).pow_x().unwrap();
        let rise = p.coeff(n).unwrap().scale(&Rational::from_integer(factorial(n)));
        let mut expect = Poly::one();
        for i in 0..n {
            expect = &expect * &Poly::from_coeffs(vec![rat_int(i as i64), rat_int(1)]);
        }
        assert_eq!(rise, expect);
    }

    #[test]
    fn pow_x_at_zero_is_one() {
        let p = geometric(6).pow_x().unwrap().eval_at_x(&Rational::zero());
        assert_eq!(p, Series::one(6));
    }

    #[test]
    fn pow_x_specializes_to_integer_powers() {
        let base = Series::from_coeffs(vec![rat_int(1), rat(1, 2), rat_int(3), rat(-2, 3), rat_int(0), rat_int(1)]);
        let p = base.pow_x().unwrap();
        for m in [0i64, 1, 2, 3, 5] {
            assert_eq!(p.eval_at_x(&rat_int(m)), base.pow_i(m).unwrap());
        }
    }

    #[test]
    fn coeff_order_exceeded() {
        let a = Series::<Rational>::one(3);
        assert_eq!(
            a.coeff(4),
            Err(SeriesError::OrderExceeded { index: 4, order: 3 })
        );
        let b = Series::from_coeffs(vec![rat_int(1), rat_int(2)]);
        assert_eq!(b.coeff(1).unwrap(), &rat_int(2));
    }

    #[test]
    fn eval_poly_at_point() {
        let p = &(&Poly::x() * &Poly::x()) - &Poly::x();
        assert_eq!(p.eval(&rat_int(3)), rat_int(6));
    }

    #[test]
    fn dilate_flips_signs() {
        let one_plus_t = Series::from_fn(5, |n| if n <= 1 { rat_int(1) } else { rat_int(0) });
        let d = one_plus_t.dilate(&rat_int(-1));
        assert_eq!(d.coeff(0).unwrap(), &rat_int(1));
        assert_eq!(d.coeff(1).unwrap(), &rat_int(-1));
    }

    #[test]
    fn mul_t_shifts() {
        let g = geometric(4);
        let shifted = g.mul_t();
        assert!(shifted.coeff(0).unwrap().is_zero());
        for n in 1..=4 {
            assert_eq!(shifted.coeff(n).unwrap(), &rat_int(1));
        }
    }
}
