//! The umbral alphabet: special umbrae, auxiliary-umbra constructors, and
//! the evaluation functional.
//!
//! An [`Umbra`] represents a unital moment sequence through its exponential
//! generating function, truncated at the session order fixed when the umbra
//! is created. Two umbrae are *similar* when their generating functions agree
//! to the common order; every construction below is defined by what it does
//! to generating functions:
//!
//! * sum of uncorrelated umbrae  — product of generating functions,
//! * `n.a` / `x.a`               — integer and polynomial powers,
//! * `g.a`                       — substitution `f(g, log f(a, t))`,
//! * partition umbra `b.a`       — `exp(f(a, t) - 1)`,
//! * composition umbra `g.b.a`   — `f(g, f(a, t) - 1)`,
//! * compositional inverse, adjoint, derivative umbra.

mod expr;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::bellpoly::{self, MomentSeq};
use crate::series::{factorial, Coeff, Poly, Rational, Series, SeriesError};

pub use expr::UmbralExpr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UmbraError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("unknown umbra name `{0}`")]
    UnknownName(String),
    #[error("umbra is not compositionally invertible (first moment must be a unit)")]
    NonInvertible,
    #[error("expression involves the indeterminate x; scalar evaluation impossible")]
    RequiresPolynomialRing,
}

/// The catalogue of special umbrae.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Special {
    /// `eps`, moments `1, 0, 0, ...`; generating function `1`.
    Augmentation,
    /// `u`, all moments `1`; generating function `e^t`.
    Unity,
    /// `chi`, moments `1, 1, 0, 0, ...`; generating function `1 + t`.
    Singleton,
    /// `bell`, moments the Bell numbers; generating function `exp(e^t - 1)`.
    Bell,
    /// `iota`, moments the Bernoulli numbers; generating function `t/(e^t - 1)`.
    Bernoulli,
    /// `ubar`, moments `n!`; generating function `1/(1 - t)`.
    Factorial,
    /// `delta`, moments `n! F_n`; generating function `1/(1 - t - t^2)`.
    Fibonacci,
}

impl Special {
    pub const ALL: [Special; 7] = [
        Special::Augmentation,
        Special::Unity,
        Special::Singleton,
        Special::Bell,
        Special::Bernoulli,
        Special::Factorial,
        Special::Fibonacci,
    ];

    /// The surface-syntax name.
    pub fn name(self) -> &'static str {
        match self {
            Special::Augmentation => "eps",
            Special::Unity => "u",
            Special::Singleton => "chi",
            Special::Bell => "bell",
            Special::Bernoulli => "iota",
            Special::Factorial => "ubar",
            Special::Fibonacci => "delta",
        }
    }

    pub fn from_name(name: &str) -> Option<Special> {
        Special::ALL.into_iter().find(|s| s.name() == name)
    }

    fn gf(self, order: usize) -> Series<Rational> {
        match self {
            Special::Augmentation => Series::one(order),
            Special::Unity => exp_t(order),
            Special::Singleton => Series::from_fn(order, |n| {
                if n <= 1 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }),
            Special::Bell => exp_t(order)
                .sub(&Series::one(order))
                .exp()
                .expect("e^t - 1 has zero constant term"),
            Special::Bernoulli => {
                Series::from_fn(order, |n| Rational::new(1.into(), factorial(n + 1)))
                    .recip()
                    .expect("(e^t - 1)/t is a unit series")
            }
            Special::Factorial => Series::from_fn(order, |_| Rational::one()),
            Special::Fibonacci => Series::from_fn(order, |n| match n {
                0 => Rational::one(),
                1 | 2 => -Rational::one(),
                _ => Rational::zero(),
            })
            .recip()
            .expect("1 - t - t^2 is a unit series"),
        }
    }
}

/// Exponential series `e^t` to the given order.
fn exp_t(order: usize) -> Series<Rational> {
    Series::from_fn(order, |n| Rational::new(1.into(), factorial(n)))
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// A symbolic handle for a unital moment sequence, held as a truncated
/// exponential generating function with constant term one.
///
/// ```
/// use umbral::{Special, Umbra};
/// use umbral::series::rat_int;
///
/// let u = Umbra::special(Special::Unity, 10);
/// let chi = Umbra::special(Special::Singleton, 10);
/// assert!(u.adjoint().unwrap().is_similar(&chi));
///
/// // E[(x.chi)^3] is the falling factorial x(x-1)(x-2)
/// let falling = chi.dot_x().moment(3).unwrap();
/// assert_eq!(falling.eval(&rat_int(5)), rat_int(60));
/// ```
#[derive(Debug, Clone)]
pub struct Umbra<C: Coeff = Rational> {
    id: u64,
    name: String,
    gf: Series<C>,
}

/// An umbra with rational moments.
pub type ScalarUmbra = Umbra<Rational>;

/// An umbra whose moments are polynomials in `x`.
pub type PolyUmbra = Umbra<Poly>;

impl Umbra<Rational> {
    /// A catalogued special umbra at the given truncation order.
    pub fn special(kind: Special, order: usize) -> Self {
        Umbra::with_name(kind.gf(order), kind.name().to_string())
    }

    pub fn special_by_name(name: &str, order: usize) -> Result<Self, UmbraError> {
        Special::from_name(name)
            .map(|kind| Umbra::special(kind, order))
            .ok_or_else(|| UmbraError::UnknownName(name.to_string()))
    }

    /// The umbra similar to the scalar `c`: moments `c^n`.
    pub fn constant(c: &Rational, order: usize) -> Self {
        Umbra::with_name(exp_t(order).dilate(c), format!("{c}"))
    }

    /// The polynomial umbra `x.self` with generating function `f(self, t)^x`.
    pub fn dot_x(&self) -> Umbra<Poly> {
        let gf = self.gf.pow_x().expect("umbral gf has constant term 1");
        Umbra::with_name(gf, format!("(x.{})", self.name))
    }

    /// Reinterprets rational moments as constant polynomials.
    pub fn lift(&self) -> Umbra<Poly> {
        Umbra::with_name(self.gf.lift_to_poly(), self.name.clone())
    }
}

impl<C: Coeff> Umbra<C> {
    fn with_name(gf: Series<C>, name: String) -> Self {
        debug_assert!(gf.constant_term().is_one());
        Umbra {
            id: fresh_id(),
            name,
            gf,
        }
    }

    /// Wraps a generating function, which must have constant term one.
    pub fn from_gf(gf: Series<C>) -> Result<Self, UmbraError> {
        if !gf.constant_term().is_one() {
            return Err(SeriesError::BadConstantTerm { expected: "1" }.into());
        }
        let id = fresh_id();
        Ok(Umbra {
            id,
            name: format!("umbra#{id}"),
            gf,
        })
    }

    /// The umbra representing a unital moment sequence.
    pub fn from_moments(a: &MomentSeq<C>) -> Self {
        let id = fresh_id();
        Umbra {
            id,
            name: format!("umbra#{id}"),
            gf: bellpoly::gf_from_moments(a),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gf(&self) -> &Series<C> {
        &self.gf
    }

    /// Session truncation order.
    pub fn order(&self) -> usize {
        self.gf.order()
    }

    /// `E[self^n] = n! [t^n] f(self, t)`.
    pub fn moment(&self, n: usize) -> Result<C, UmbraError> {
        let c = self.gf.coeff(n)?;
        Ok(c.clone() * C::from_rational(&Rational::from_integer(factorial(n))))
    }

    /// All moments up to the session order.
    pub fn moments(&self) -> MomentSeq<C> {
        bellpoly::moments_from_gf(&self.gf).expect("umbral gf has constant term 1")
    }

    /// Similarity: equal generating functions to the common order.
    pub fn is_similar(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.gf.truncated(order) == other.gf.truncated(order)
    }

    /// Sum of uncorrelated umbrae: generating functions multiply.
    pub fn add(&self, other: &Self) -> Self {
        Umbra::with_name(
            self.gf.mul(&other.gf),
            format!("({} + {})", self.name, other.name),
        )
    }

    /// The umbra `c * self` with moments `c^n a_n`.
    pub fn scale(&self, c: &Rational) -> Self {
        Umbra::with_name(
            self.gf.dilate(&C::from_rational(c)),
            format!("({c}*{})", self.name),
        )
    }

    /// Integer dot-product `k.self`: generating function `f(self, t)^k`,
    /// with negative `k` through the reciprocal.
    pub fn dot_int(k: i64, alpha: &Self) -> Self {
        let gf = alpha.gf.pow_i(k).expect("umbral gf has constant term 1");
        Umbra::with_name(gf, format!("({k}.{})", alpha.name))
    }

    /// Umbral dot-product `gamma.alpha`: `f(gamma, log f(alpha, t))`.
    pub fn dot(gamma: &Self, alpha: &Self) -> Self {
        let inner = alpha.gf.log().expect("umbral gf has constant term 1");
        let gf = gamma.gf.compose(&inner).expect("log has zero constant term");
        Umbra::with_name(gf, format!("({}.{})", gamma.name, alpha.name))
    }

    /// The partition umbra `b.self`: `exp(f(self, t) - 1)`.
    pub fn partition(&self) -> Self {
        let order = self.order();
        let gf = self
            .gf
            .sub(&Series::one(order))
            .exp()
            .expect("f - 1 has zero constant term");
        Umbra::with_name(gf, format!("(bell.{})", self.name))
    }

    /// The composition umbra `gamma.b.alpha`: `f(gamma, f(alpha, t) - 1)`.
    pub fn compose(gamma: &Self, alpha: &Self) -> Self {
        let order = alpha.order();
        let inner = alpha.gf.sub(&Series::one(order));
        let gf = gamma
            .gf
            .compose(&inner)
            .expect("f - 1 has zero constant term");
        Umbra::with_name(gf, format!("({}.bell.{})", gamma.name, alpha.name))
    }

    /// Compositional inverse: `f(self^<-1>, f(self, t) - 1) = 1 + t`.
    /// Requires an invertible first moment.
    pub fn comp_inverse(&self) -> Result<Self, UmbraError> {
        let order = self.order();
        let inverse = self
            .gf
            .sub(&Series::one(order))
            .comp_inverse()
            .map_err(|e| match e {
                SeriesError::ZeroLinearCoefficient => UmbraError::NonInvertible,
                other => other.into(),
            })?;
        Ok(Umbra::with_name(
            Series::one(order).add(&inverse),
            format!("inv({})", self.name),
        ))
    }

    /// The adjoint umbra `self* = b.self^<-1>`.
    pub fn adjoint(&self) -> Result<Self, UmbraError> {
        let inv = self.comp_inverse()?;
        Ok(inv.partition().named(format!("adj({})", self.name)))
    }

    /// The derivative umbra, with `f(self_D, t) = 1 + t f(self, t)` and
    /// moments `n a_{n-1}`.
    pub fn derivative(&self) -> Self {
        let order = self.order();
        let gf = Series::one(order).add(&self.gf.mul_t());
        Umbra::with_name(gf, format!("D({})", self.name))
    }
}

impl<C: Coeff> fmt::Display for Umbra<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}
