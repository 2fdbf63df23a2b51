//! Python bindings: umbrae, Sheffer umbrae, the expression DSL, the
//! recurrence solvers, and the brute-force oracles.
//!
//! Exact values cross the boundary as strings (`"p/q"` rationals,
//! `"x^2 - x"` polynomials) or Python ints.

use std::str::FromStr;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use umbral::recurrences::{self, DyckSolver, DyckTable};
use umbral::series::{Poly, Rational};
use umbral::sheffer::{self, ShefferUmbra};
use umbral::umbra::{self, Special};
use umbral::{dsl, oracles, verify, DEFAULT_ORDER};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_rational(s: &str) -> PyResult<Rational> {
    Rational::from_str(s).map_err(|e| value_error(format!("bad rational `{s}`: {e}")))
}

fn poly_string(p: &Poly) -> String {
    match p.constant_value() {
        Some(c) => c.to_string(),
        None => p.to_string(),
    }
}

/// A scalar umbra: a unital moment sequence held as a truncated exponential
/// generating function.
#[pyclass(frozen)]
struct Umbra {
    inner: umbra::ScalarUmbra,
}

impl From<umbra::ScalarUmbra> for Umbra {
    fn from(inner: umbra::ScalarUmbra) -> Self {
        Umbra { inner }
    }
}

#[pymethods]
impl Umbra {
    /// One of eps, u, chi, bell, iota, ubar, delta.
    #[staticmethod]
    #[pyo3(signature = (name, order = DEFAULT_ORDER))]
    fn special(name: &str, order: usize) -> PyResult<Self> {
        umbra::Umbra::special_by_name(name, order)
            .map(Umbra::from)
            .map_err(value_error)
    }

    /// Builds an umbra from moments `["1", "1/2", ...]` (index 0 must be 1).
    #[staticmethod]
    fn from_moments(moments: Vec<String>) -> PyResult<Self> {
        let values = moments
            .iter()
            .map(|s| parse_rational(s))
            .collect::<PyResult<Vec<_>>>()?;
        let seq = umbral::bellpoly::MomentSeq::new(values).map_err(value_error)?;
        Ok(umbra::Umbra::from_moments(&seq).into())
    }

    fn moment(&self, n: usize) -> PyResult<String> {
        self.inner
            .moment(n)
            .map(|m| m.to_string())
            .map_err(value_error)
    }

    fn moments(&self) -> Vec<String> {
        self.inner
            .moments()
            .values()
            .iter()
            .map(|m| m.to_string())
            .collect()
    }

    fn gf_coeffs(&self) -> Vec<String> {
        self.inner.gf().coeffs().iter().map(|c| c.to_string()).collect()
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn is_similar(&self, other: &Umbra) -> bool {
        self.inner.is_similar(&other.inner)
    }

    fn add(&self, other: &Umbra) -> Umbra {
        self.inner.add(&other.inner).into()
    }

    fn scale(&self, c: &str) -> PyResult<Umbra> {
        Ok(self.inner.scale(&parse_rational(c)?).into())
    }

    /// The integer dot-product `k.self`.
    fn dot_int(&self, k: i64) -> Umbra {
        umbra::Umbra::dot_int(k, &self.inner).into()
    }

    /// The umbral dot-product `self.alpha`.
    fn dot(&self, alpha: &Umbra) -> Umbra {
        umbra::Umbra::dot(&self.inner, &alpha.inner).into()
    }

    /// The partition umbra `bell.self`.
    fn partition(&self) -> Umbra {
        self.inner.partition().into()
    }

    /// The composition umbra `self.bell.alpha`.
    fn compose(&self, alpha: &Umbra) -> Umbra {
        umbra::Umbra::compose(&self.inner, &alpha.inner).into()
    }

    fn comp_inverse(&self) -> PyResult<Umbra> {
        self.inner.comp_inverse().map(Umbra::from).map_err(value_error)
    }

    fn adjoint(&self) -> PyResult<Umbra> {
        self.inner.adjoint().map(Umbra::from).map_err(value_error)
    }

    fn derivative(&self) -> Umbra {
        self.inner.derivative().into()
    }

    fn __repr__(&self) -> String {
        format!("Umbra({}, order={})", self.inner.name(), self.inner.order())
    }
}

/// A Sheffer umbra for a pair `(alpha, gamma)`; moments are polynomials
/// in x.
#[pyclass(frozen)]
struct Sheffer {
    inner: ShefferUmbra,
}

#[pymethods]
impl Sheffer {
    #[new]
    fn new(alpha: &Umbra, gamma: &Umbra) -> PyResult<Self> {
        ShefferUmbra::new(&alpha.inner, &gamma.inner)
            .map(|inner| Sheffer { inner })
            .map_err(value_error)
    }

    /// `s_n(x)` as a polynomial string.
    fn moment_poly(&self, n: usize) -> PyResult<String> {
        self.inner
            .moment_poly(n)
            .map(|p| poly_string(&p))
            .map_err(value_error)
    }

    /// The associated polynomial `p_n(x)`.
    fn associated_poly(&self, n: usize) -> PyResult<String> {
        self.inner
            .associated_poly(n)
            .map(|p| poly_string(&p))
            .map_err(value_error)
    }

    fn check_sheffer_identity(&self, n: usize) -> PyResult<bool> {
        self.inner
            .check_sheffer_identity(n)
            .map(|c| c.holds)
            .map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "Sheffer(alpha={}, gamma={})",
            self.inner.alpha().name(),
            self.inner.gamma().name()
        )
    }
}

/// Evaluates `E[expr^n]` for a DSL expression; returns a rational or
/// polynomial string.
#[pyfunction]
#[pyo3(signature = (expr, n, order = DEFAULT_ORDER))]
fn eval_expr(expr: &str, n: usize, order: usize) -> PyResult<String> {
    let parsed = dsl::parse(expr).map_err(value_error)?;
    let value = parsed
        .to_umbral(order)
        .evaluate(n, order)
        .map_err(value_error)?;
    Ok(poly_string(&value))
}

/// Coefficients of the expression's generating function as strings.
#[pyfunction]
#[pyo3(signature = (expr, order = DEFAULT_ORDER))]
fn gf_coeffs(expr: &str, order: usize) -> PyResult<Vec<String>> {
    let parsed = dsl::parse(expr).map_err(value_error)?;
    let lowered = parsed.to_umbral(order);
    if lowered.contains_x() {
        let gf = lowered.gf::<Poly>(order).map_err(value_error)?;
        Ok(gf.coeffs().iter().map(poly_string).collect())
    } else {
        let gf = lowered.gf::<Rational>(order).map_err(value_error)?;
        Ok(gf.coeffs().iter().map(|c| c.to_string()).collect())
    }
}

#[pyfunction]
fn solve_integral(n: usize) -> PyResult<String> {
    recurrences::solve_integral_case(n)
        .map(|p| poly_string(&p))
        .map_err(value_error)
}

#[pyfunction]
fn solve_pascal(n: usize) -> PyResult<String> {
    recurrences::solve_pascal_case(n)
        .map(|p| poly_string(&p))
        .map_err(value_error)
}

#[pyfunction]
fn solve_fibonacci(n: usize) -> PyResult<String> {
    recurrences::solve_fibonacci_case(n)
        .map(|p| poly_string(&p))
        .map_err(value_error)
}

/// The symbolic pattern-avoiding ballot-path count `D(n, m)`.
#[pyfunction]
fn dyck_count(n: usize, m: usize) -> PyResult<u64> {
    recurrences::dyck_count(n, m).map_err(value_error)
}

/// The full table `D(n, m)` for `0 <= n <= m <= max_m`, one row per `m`.
#[pyfunction]
fn dyck_table(max_m: usize) -> PyResult<Vec<Vec<u64>>> {
    let solver = DyckSolver::new(max_m);
    let table = DyckTable::from_solver(&solver, max_m).map_err(value_error)?;
    Ok((0..=max_m)
        .map(|m| (0..=m).map(|n| table.get(n, m).unwrap()).collect())
        .collect())
}

/// Brute-force ballot-path count by path enumeration.
#[pyfunction]
#[pyo3(signature = (n, m, pattern = "urru"))]
fn count_ballot_paths(n: usize, m: usize, pattern: &str) -> PyResult<u64> {
    oracles::count_ballot_paths(&oracles::PathSpec::with_pattern(n, m, pattern))
        .map_err(value_error)
}

/// Fibonacci number with `F_0 = F_1 = 1`.
#[pyfunction]
fn fibonacci(n: usize) -> BigInt {
    oracles::fibonacci(n)
}

#[pyfunction]
fn bell_numbers(n: usize) -> Vec<BigInt> {
    oracles::bell_numbers(n)
}

#[pyfunction]
fn bernoulli_numbers(n: usize) -> Vec<String> {
    oracles::bernoulli_numbers(n)
        .iter()
        .map(|b| b.to_string())
        .collect()
}

#[pyfunction]
fn check_binomial_identity(gamma: &Umbra, n: usize) -> PyResult<bool> {
    sheffer::check_binomial_identity(&gamma.inner, n)
        .map(|c| c.holds)
        .map_err(value_error)
}

#[pyfunction]
fn check_prop_reci(gamma: &Umbra, n: usize) -> PyResult<bool> {
    recurrences::check_prop_reci(&gamma.inner, n)
        .map(|c| c.holds)
        .map_err(value_error)
}

#[pyfunction]
fn check_final_theorem(gamma: &Umbra, c: &str, n: usize) -> PyResult<bool> {
    recurrences::check_final_theorem(&gamma.inner, &parse_rational(c)?, n)
        .map(|c| c.holds)
        .map_err(value_error)
}

/// Runs a verification suite; returns `(suite, name, status, detail)` rows.
#[pyfunction]
#[pyo3(signature = (suite, order = DEFAULT_ORDER))]
fn verify_suite(suite: &str, order: usize) -> PyResult<Vec<(String, String, String, String)>> {
    let checks = verify::run_suite(suite, order)
        .ok_or_else(|| value_error(format!("unknown suite `{suite}`")))?;
    Ok(checks
        .into_iter()
        .map(|c| {
            let status = match c.status {
                verify::CheckStatus::Pass => "pass",
                verify::CheckStatus::Fail => "fail",
                verify::CheckStatus::Reported => "reported",
            };
            (c.suite.to_string(), c.name, status.to_string(), c.detail)
        })
        .collect())
}

#[pymodule]
fn pyumbral(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Umbra>()?;
    m.add_class::<Sheffer>()?;
    m.add_function(wrap_pyfunction!(eval_expr, m)?)?;
    m.add_function(wrap_pyfunction!(gf_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(solve_integral, m)?)?;
    m.add_function(wrap_pyfunction!(solve_pascal, m)?)?;
    m.add_function(wrap_pyfunction!(solve_fibonacci, m)?)?;
    m.add_function(wrap_pyfunction!(dyck_count, m)?)?;
    m.add_function(wrap_pyfunction!(dyck_table, m)?)?;
    m.add_function(wrap_pyfunction!(count_ballot_paths, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci, m)?)?;
    m.add_function(wrap_pyfunction!(bell_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(check_binomial_identity, m)?)?;
    m.add_function(wrap_pyfunction!(check_prop_reci, m)?)?;
    m.add_function(wrap_pyfunction!(check_final_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add("SPECIAL_NAMES", Special::ALL.map(|s| s.name()))?;
    m.add("DEFAULT_ORDER", DEFAULT_ORDER)?;
    Ok(())
}
