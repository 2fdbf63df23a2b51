//! Exact umbral calculus over the rationals.
//!
//! The crate represents every umbra by its exponential generating function,
//! held as a truncated formal power series with exact rational (or exact
//! polynomial-in-`x`) coefficients. On top of that substrate it provides
//! the classical special umbrae, auxiliary-umbra constructors (dot products,
//! partition, composition, compositional inverse, adjoint, derivative),
//! Sheffer umbrae with executable identity checkers, and symbolic solvers
//! for four linear-recurrence case studies, each cross-checked against an
//! independent brute-force oracle.
//!
//! No floating point is used anywhere: every computation is exact.
//!
//! ```
//! use umbral::{Special, Umbra};
//!
//! // the factorial umbra composed over the derivative of the singleton
//! // carries the Fibonacci numbers: moments n! F_n
//! let ubar = Umbra::special(Special::Factorial, 8);
//! let chi = Umbra::special(Special::Singleton, 8);
//! let chain = Umbra::dot(&ubar, &chi.derivative().partition());
//! assert!(chain.is_similar(&Umbra::special(Special::Fibonacci, 8)));
//! assert_eq!(chain.moment(5).unwrap(), umbral::series::rat_int(120 * 8));
//! ```

pub mod bellpoly;
pub mod dsl;
pub mod oracles;
pub mod recurrences;
pub mod series;
pub mod sheffer;
pub mod umbra;
pub mod verify;

pub use series::{Poly, Rational, Series};
pub use umbra::{ScalarUmbra, Special, Umbra, UmbralExpr};

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 16;
