//! Symbolic solvers for four linear-recurrence case studies, each with a
//! closed-form route and an umbral-evaluation route that are checked against
//! each other, plus checkers for the reciprocal proposition and the
//! initial-condition theorem.
//!
//! The four cases:
//!
//! * **integral** — `q_n(x+1) = q_n(x) + q_{n-1}(x)` with `int_0^1 q_n = 1`;
//!   solved by `q_n(x) = E[(ubar + (iota + x.u).chi)^n] / n!`.
//! * **pascal** — `q_n(x) = q_n(x-1) + q_{n-1}(x)` with the telescoping
//!   initial condition `q_n(1-n) = sum_{i<n} q_i(n-2i)`; solved by
//!   `q_n(x) = E[(ubar.bell.D(delta) + (x+n-1).chi)^n] / n!`.
//! * **fibonacci** — `F_n(x+n+1) = F_n(x+n) + F_{n-1}(x+n-1)`; solved by
//!   `F_n(x+n) = E[(delta + x.chi)^n] / n! = sum_k C(x+k, n-k)`.
//! * **dyck** — pattern-avoiding ballot paths `D(n, m) = s_n(m)/n!` with
//!   `s_n(x) = E[(ubar + zeta + x.gamma*)^n]`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bellpoly::MomentSeq;
use crate::series::{binomial, factorial, rat_int, Poly, Rational, Series, SeriesError};
use crate::sheffer::IdentityCheck;
use crate::umbra::{ScalarUmbra, Special, Umbra, UmbraError, UmbralExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error(transparent)]
    Umbra(#[from] UmbraError),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("symbolic ballot count is not a nonnegative integer: {0}")]
    NonIntegerCount(String),
}

impl From<SeriesError> for RecurrenceError {
    fn from(e: SeriesError) -> Self {
        RecurrenceError::Umbra(e.into())
    }
}

/// The four case studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseName {
    Integral,
    Pascal,
    Fibonacci,
    Dyck,
}

impl CaseName {
    pub const ALL: [CaseName; 4] = [
        CaseName::Integral,
        CaseName::Pascal,
        CaseName::Fibonacci,
        CaseName::Dyck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseName::Integral => "integral",
            CaseName::Pascal => "pascal",
            CaseName::Fibonacci => "fibonacci",
            CaseName::Dyck => "dyck",
        }
    }

    pub fn from_name(name: &str) -> Option<CaseName> {
        CaseName::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for CaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A solved recurrence: the case, the solution polynomials, and the umbral
/// pair the solution came from.
#[derive(Debug, Clone)]
pub struct RecurrenceSolution {
    pub case: CaseName,
    /// Human-readable `(alpha, gamma*)` provenance.
    pub provenance: (&'static str, &'static str),
}

impl RecurrenceSolution {
    pub fn new(case: CaseName) -> Self {
        let provenance = match case {
            CaseName::Integral => ("ubar + iota.chi", "chi (adjoint of u)"),
            CaseName::Pascal => ("ubar.bell.D(delta)", "ubar (via (x+n-1).chi)"),
            CaseName::Fibonacci => ("delta", "chi (adjoint of u)"),
            CaseName::Dyck => ("ubar + zeta", "gamma* with moments 1, 1, 0, k!"),
        };
        RecurrenceSolution { case, provenance }
    }

    /// The `n`-th solution polynomial (for the dyck case, `s_n(x)/n!`).
    pub fn poly(&self, n: usize) -> Result<Poly, RecurrenceError> {
        match self.case {
            CaseName::Integral => solve_integral_case(n),
            CaseName::Pascal => solve_pascal_case(n),
            CaseName::Fibonacci => solve_fibonacci_case(n),
            CaseName::Dyck => DyckSolver::new(n).q_poly(n),
        }
    }
}

fn unscale(p: &Poly, n: usize) -> Poly {
    p.scale(&Rational::new(1.into(), factorial(n)))
}

/// Solves the difference equation with integral initial condition:
/// `q_n(x) = E[(ubar + (iota + x.u).chi)^n] / n!`, computed from the
/// generating function `(1+t)^x f(iota, log(1+t)) / (1-t)` and checked
/// against the umbral-expression route.
pub fn solve_integral_case(n: usize) -> Result<Poly, RecurrenceError> {
    let order = n;
    let chi_gf: Series<Rational> = Series::one(order).add(&Series::t(order));
    let iota = Umbra::special(Special::Bernoulli, order);
    let ubar = Umbra::special(Special::Factorial, order);
    let sigma = chi_gf
        .pow_x()?
        .mul(&iota.gf().compose(&chi_gf.log()?)?.lift_to_poly())
        .mul(&ubar.gf().lift_to_poly());
    let closed = sigma.coeff(n)?.clone();

    let expr = UmbralExpr::sum(vec![
        UmbralExpr::umbra(ubar),
        UmbralExpr::dot(
            UmbralExpr::sum(vec![
                UmbralExpr::umbra(iota),
                UmbralExpr::dot(UmbralExpr::X, UmbralExpr::umbra(Umbra::special(Special::Unity, order))),
            ]),
            UmbralExpr::umbra(Umbra::special(Special::Singleton, order)),
        ),
    ]);
    let umbral = unscale(&expr.evaluate(n, order)?, n);
    assert_eq!(closed, umbral, "integral case: routes disagree at n = {n}");
    Ok(closed)
}

/// `int_0^1 p(x) dx` through the umbral substitution `x -> -1.iota`
/// (moments `1/(k+1)`), the engine-side counterpart of coefficientwise
/// integration.
pub fn integral01_via_umbra(p: &Poly) -> Result<Rational, RecurrenceError> {
    let degree = p.degree().unwrap_or(0);
    let inverse_bernoulli = Umbra::dot_int(-1, &Umbra::special(Special::Bernoulli, degree));
    let mut acc = Rational::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        acc += c * inverse_bernoulli.moment(k)?;
    }
    Ok(acc)
}

/// The Pascal-case umbra `ubar.bell.D(delta)`, whose generating function is
/// `1/(1 - t f(delta, t))`.
pub fn pascal_alpha(order: usize) -> ScalarUmbra {
    let ubar = Umbra::special(Special::Factorial, order);
    let delta = Umbra::special(Special::Fibonacci, order);
    Umbra::dot(&ubar, &delta.derivative().partition())
}

pub fn pascal_alpha_moments(order: usize) -> MomentSeq {
    pascal_alpha(order).moments()
}

/// Solves Pascal's recursion: `q_n(x) = sum_k (a_k / k!) C(x+n-1, n-k)` with
/// `a_k` the moments of [`pascal_alpha`], checked against the umbral route
/// `E[(alpha + (x+n-1).chi)^n] / n!`.
pub fn solve_pascal_case(n: usize) -> Result<Poly, RecurrenceError> {
    let order = n;
    let alpha = pascal_alpha(order);
    let mut closed = Poly::zero();
    for k in 0..=n {
        let weight = alpha.moment(k)? / Rational::from_integer(factorial(k));
        closed = &closed + &Poly::binomial_in_x(n as i64 - 1, n - k).scale(&weight);
    }

    let expr = UmbralExpr::sum(vec![
        UmbralExpr::umbra(alpha),
        UmbralExpr::dot(
            UmbralExpr::sum(vec![
                UmbralExpr::X,
                UmbralExpr::constant(rat_int(n as i64 - 1)),
            ]),
            UmbralExpr::umbra(Umbra::special(Special::Singleton, order)),
        ),
    ]);
    let umbral = unscale(&expr.evaluate(n, order)?, n);
    assert_eq!(closed, umbral, "pascal case: routes disagree at n = {n}");
    Ok(closed)
}

/// Consistency of the Fibonacci umbra with the Pascal derivation: the chain
/// `ubar.bell.D(chi)` reproduces `1/(1-t-t^2)`, the moments of
/// `alpha = ubar.bell.D(delta)` satisfy `a_n = n (alpha + delta)^(n-1)`, and
/// the finite sum `sum_i E[((n-i).chi)^i]/i!` reproduces `F_n`.
pub fn fibonacci_delta_consistency(order: usize) -> IdentityCheck {
    let ubar = Umbra::special(Special::Factorial, order);
    let chi = Umbra::special(Special::Singleton, order);
    let delta = Umbra::special(Special::Fibonacci, order);

    let chain = Umbra::dot(&ubar, &chi.derivative().partition());
    if !chain.is_similar(&delta) {
        return IdentityCheck::fail("ubar.bell.D(chi) is not the Fibonacci umbra".to_string());
    }

    let alpha = pascal_alpha(order);
    let alpha_plus_delta = alpha.add(&delta);
    for n in 1..=order {
        let lhs = alpha.moment(n).expect("within order");
        let rhs = rat_int(n as i64) * alpha_plus_delta.moment(n - 1).expect("within order");
        if lhs != rhs {
            return IdentityCheck::fail(format!("a_{n} = {lhs} but n(alpha+delta)^(n-1) = {rhs}"));
        }
    }

    for n in 0..=order {
        let mut acc = Rational::zero();
        for i in 0..=n {
            let m = Umbra::dot_int((n - i) as i64, &chi).moment(i).expect("within order");
            acc += m / Rational::from_integer(factorial(i));
        }
        let f_n = Rational::from_integer(crate::oracles::fibonacci(n));
        if acc != f_n {
            return IdentityCheck::fail(format!("delta^{n}/{n}! sums to {acc}, expected F_{n} = {f_n}"));
        }
    }
    IdentityCheck::pass()
}

/// Solves the Fibonacci difference equation: returns the polynomial
/// `F_n(x+n) = sum_k C(x+k, n-k)`, checked against
/// `E[(delta + x.chi)^n] / n!`.
pub fn solve_fibonacci_case(n: usize) -> Result<Poly, RecurrenceError> {
    let order = n;
    let mut closed = Poly::zero();
    for k in 0..=n {
        closed = &closed + &Poly::binomial_in_x(k as i64, n - k);
    }

    let expr = UmbralExpr::sum(vec![
        UmbralExpr::umbra(Umbra::special(Special::Fibonacci, order)),
        UmbralExpr::dot(
            UmbralExpr::X,
            UmbralExpr::umbra(Umbra::special(Special::Singleton, order)),
        ),
    ]);
    let umbral = unscale(&expr.evaluate(n, order)?, n);
    assert_eq!(closed, umbral, "fibonacci case: routes disagree at n = {n}");
    Ok(closed)
}

/// The value `F_n(0)`, i.e. the closed form evaluated at `x = -n`. The
/// difference equation was posed under the initial condition `F_n(0) = 1`,
/// but direct evaluation gives `1, 0, 3, -7, ...` from `n = 1` on, so the
/// verification suite reports these values rather than asserting them.
pub fn fibonacci_f_at_zero(n: usize) -> Result<Rational, RecurrenceError> {
    Ok(solve_fibonacci_case(n)?.eval(&rat_int(-(n as i64))))
}

/// The ballot-path adjoint umbra, with moments `1, 1, 0, 3!, 4!, ...` and
/// generating function `(1 - t^2 + t^3)/(1 - t)`.
pub fn dyck_gamma_star(order: usize) -> ScalarUmbra {
    let numer = Series::from_fn(order, |k| match k {
        0 => Rational::one(),
        2 => -Rational::one(),
        3 => Rational::one(),
        _ => Rational::zero(),
    });
    let denom = Series::one(order).sub(&Series::t(order));
    let gf = numer.mul(&denom.recip().expect("1 - t is a unit series"));
    Umbra::from_gf(gf)
        .expect("constant term 1")
        .named("dyck-gamma*")
}

/// The compositionally recovered `gamma` itself:
/// `f(gamma^<-1>, t) = 1 + log f(gamma*, t)`, inverted back.
pub fn dyck_gamma(order: usize) -> ScalarUmbra {
    let star = dyck_gamma_star(order);
    let inv_part = star.gf().log().expect("constant term 1");
    let gf = Series::one(order).add(&inv_part.comp_inverse().expect("linear term 1"));
    Umbra::from_gf(gf).expect("constant term 1").named("dyck-gamma")
}

/// The correction umbra `zeta` with `zeta^k = -k (gamma^<-1>)^k`.
pub fn dyck_zeta(order: usize) -> MomentSeq {
    let star = dyck_gamma_star(order);
    let ginv_gf = Series::one(order).add(&star.gf().log().expect("constant term 1"));
    let ginv = Umbra::from_gf(ginv_gf).expect("constant term 1");
    MomentSeq::unital(order, |k| {
        rat_int(-(k as i64)) * ginv.moment(k).expect("within order")
    })
}

/// Symbolic ballot-path counter `D(n, m) = s_n(m)/n!` with
/// `s_n(x) = E[(ubar + zeta + x.gamma*)^n]`, cross-checked against the
/// reciprocal-proposition form
/// `s_n(x) = sum_k C(n,k) (n-k)! ((x-k)/x) (x.gamma*)^k`.
#[derive(Debug, Clone)]
pub struct DyckSolver {
    sigma_gf: Series<Poly>,
    star_gf: Series<Poly>,
}

impl DyckSolver {
    pub fn new(order: usize) -> Self {
        let gamma_star = dyck_gamma_star(order);
        let zeta = Umbra::from_moments(&dyck_zeta(order)).named("dyck-zeta");
        let ubar = Umbra::special(Special::Factorial, order);
        let star_gf = gamma_star.gf().pow_x().expect("constant term 1");
        let sigma_gf = ubar
            .gf()
            .lift_to_poly()
            .mul(&zeta.gf().lift_to_poly())
            .mul(&star_gf);
        DyckSolver { sigma_gf, star_gf }
    }

    pub fn order(&self) -> usize {
        self.sigma_gf.order()
    }

    /// `s_n(x)`, with the two computation routes compared exactly.
    pub fn s_poly(&self, n: usize) -> Result<Poly, RecurrenceError> {
        let via_gf = self
            .sigma_gf
            .coeff(n)?
            .scale(&Rational::from_integer(factorial(n)));
        let via_reci = self.s_poly_reciprocal(n)?;
        if via_gf != via_reci {
            return Err(RecurrenceError::NonIntegerCount(format!(
                "s_{n}: generating-function route {via_gf} != reciprocal route {via_reci}"
            )));
        }
        Ok(via_gf)
    }

    /// The alternative form from the reciprocal proposition; the `(x-k)/x`
    /// factor is resolved by exact polynomial division, valid because
    /// `(x.gamma*)^k` vanishes at `x = 0` for `k >= 1`.
    fn s_poly_reciprocal(&self, n: usize) -> Result<Poly, RecurrenceError> {
        let mut acc = Poly::constant(Rational::from_integer(factorial(n)));
        for k in 1..=n {
            let p_k = self
                .star_gf
                .coeff(k)?
                .scale(&Rational::from_integer(factorial(k)));
            let t_k = p_k.div_x().expect("(x.gamma*)^k carries a factor x");
            let shifted = &Poly::from_coeffs(vec![rat_int(-(k as i64)), Rational::one()]) * &t_k;
            let weight = Rational::from_integer(binomial(n, k) * factorial(n - k));
            acc = &acc + &shifted.scale(&weight);
        }
        Ok(acc)
    }

    /// `s_n(x)/n!`, the normalized solution polynomial.
    pub fn q_poly(&self, n: usize) -> Result<Poly, RecurrenceError> {
        Ok(unscale(&self.s_poly(n)?, n))
    }

    /// The ballot-path count `D(n, m)`, asserted to be a nonnegative integer.
    pub fn count(&self, n: usize, m: usize) -> Result<u64, RecurrenceError> {
        let value = self.q_poly(n)?.eval(&rat_int(m as i64));
        if !value.denom().is_one() || value.is_negative() {
            return Err(RecurrenceError::NonIntegerCount(format!(
                "D({n},{m}) evaluated to {value}"
            )));
        }
        u64::try_from(value.numer().clone()).map_err(|_| {
            RecurrenceError::NonIntegerCount(format!("D({n},{m}) = {value} overflows u64"))
        })
    }
}

/// One-shot count at the minimal sufficient order.
pub fn dyck_count(n: usize, m: usize) -> Result<u64, RecurrenceError> {
    DyckSolver::new(n).count(n, m)
}

/// Ballot-path table over `0 <= n <= m <= max_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckTable {
    rows: Vec<Vec<u64>>,
}

impl DyckTable {
    /// Builds the table from the symbolic solver.
    pub fn from_solver(solver: &DyckSolver, max_m: usize) -> Result<Self, RecurrenceError> {
        assert!(solver.order() >= max_m, "solver order too small for the table");
        let polys: Vec<Poly> = (0..=max_m)
            .map(|n| solver.q_poly(n))
            .collect::<Result<_, _>>()?;
        let mut rows = Vec::with_capacity(max_m + 1);
        for m in 0..=max_m {
            let mut row = Vec::with_capacity(m + 1);
            for (n, q) in polys.iter().enumerate().take(m + 1) {
                let value = q.eval(&rat_int(m as i64));
                if !value.denom().is_one() || value.is_negative() {
                    return Err(RecurrenceError::NonIntegerCount(format!(
                        "D({n},{m}) evaluated to {value}"
                    )));
                }
                row.push(u64::try_from(value.numer().clone()).map_err(|_| {
                    RecurrenceError::NonIntegerCount(format!("D({n},{m}) = {value} overflows u64"))
                })?);
            }
            rows.push(row);
        }
        Ok(DyckTable { rows })
    }

    /// Builds the table from the difference equation and the diagonal
    /// initial condition `D(n,n) = D(n-1,n)`, with `D = 0` outside the
    /// ballot region.
    pub fn from_recurrence(max_m: usize) -> Self {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(max_m + 1);
        for m in 0..=max_m {
            let mut row = vec![1u64];
            for n in 1..=m {
                let value = if n == m {
                    row[n - 1] as i64
                } else {
                    let d = |nn: i64, mm: i64| -> i64 {
                        if nn < 0 || mm < 0 || nn > mm {
                            0
                        } else {
                            rows.get(mm as usize)
                                .map(|r: &Vec<u64>| r[nn as usize] as i64)
                                .unwrap_or_else(|| row[nn as usize] as i64)
                        }
                    };
                    let n = n as i64;
                    let m = m as i64;
                    d(n - 1, m) + d(n, m - 1) - d(n - 2, m - 1) + d(n - 3, m - 1)
                };
                row.push(u64::try_from(value).expect("ballot counts are nonnegative"));
            }
            rows.push(row);
        }
        DyckTable { rows }
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, m: usize) -> Option<u64> {
        self.rows.get(m).and_then(|row| row.get(n)).copied()
    }

    /// Checks `D(0,m) = 1`, the diagonal rule, and the difference equation
    /// off the diagonal.
    pub fn check_invariants(&self) -> IdentityCheck {
        let d = |n: i64, m: i64| -> i64 {
            if n < 0 || m < 0 || n > m {
                0
            } else {
                self.get(n as usize, m as usize).unwrap() as i64
            }
        };
        for m in 0..=self.max_m() as i64 {
            if d(0, m) != 1 {
                return IdentityCheck::fail(format!("D(0,{m}) != 1"));
            }
            for n in 1..=m {
                if n == m {
                    if d(n, m) != d(n - 1, m) {
                        return IdentityCheck::fail(format!("D({n},{n}) != D({},{n})", n - 1));
                    }
                } else {
                    let rhs = d(n - 1, m) + d(n, m - 1) - d(n - 2, m - 1) + d(n - 3, m - 1);
                    if d(n, m) != rhs {
                        return IdentityCheck::fail(format!(
                            "difference equation fails at ({n},{m}): {} != {rhs}",
                            d(n, m)
                        ));
                    }
                }
            }
        }
        IdentityCheck::pass()
    }
}

fn eta_umbra(gamma: &ScalarUmbra, order: usize) -> Result<ScalarUmbra, RecurrenceError> {
    let ginv = gamma.comp_inverse()?;
    let mut values = vec![Rational::one()];
    for k in 1..=order {
        values.push(ginv.moment(k + 1)?);
    }
    Ok(Umbra::from_moments(&MomentSeq::new(values).expect("unital by construction"))
        .named(format!("eta({})", gamma.name())))
}

fn require_unit_mean(gamma: &ScalarUmbra) -> Result<(), RecurrenceError> {
    let mean = gamma.moment(1)?;
    if !mean.is_one() {
        return Err(RecurrenceError::PreconditionFailed(format!(
            "E[gamma] = {mean}, expected 1"
        )));
    }
    Ok(())
}

/// Checks `(x.gamma*)^n = x (eta + x.gamma*)^(n-1)` with
/// `eta^k = (gamma^<-1>)^(k+1)`, for an umbra with `E[gamma] = 1`.
/// Needs `gamma` carried to order at least `n`.
pub fn check_prop_reci(gamma: &ScalarUmbra, n: usize) -> Result<IdentityCheck, RecurrenceError> {
    assert!(n >= 1, "the proposition concerns n >= 1");
    require_unit_mean(gamma)?;
    let star = gamma.adjoint()?;
    let star_gf = star.gf().pow_x()?;
    let lhs = star_gf
        .coeff(n)?
        .scale(&Rational::from_integer(factorial(n)));

    let eta = eta_umbra(gamma, n.saturating_sub(1))?;
    let mixed = eta.gf().lift_to_poly().mul(&star_gf);
    let rhs = &Poly::x()
        * &mixed
            .coeff(n - 1)?
            .scale(&Rational::from_integer(factorial(n - 1)));
    if lhs == rhs {
        Ok(IdentityCheck::pass())
    } else {
        Ok(IdentityCheck::fail(format!(
            "n = {n}: (x.gamma*)^n = {lhs} but x(eta + x.gamma*)^(n-1) = {rhs}"
        )))
    }
}

/// Checks the initial-condition theorem
/// `x (chi.c.bell.eta_D + x.gamma*)^n = (x + c n) (x.gamma*)^n`
/// for an umbra with `E[gamma] = 1`. Needs `gamma` carried to order at
/// least `n + 1` (the moments of `eta` reach one step deeper).
pub fn check_final_theorem(
    gamma: &ScalarUmbra,
    c: &Rational,
    n: usize,
) -> Result<IdentityCheck, RecurrenceError> {
    assert!(n >= 1, "the theorem concerns n >= 1");
    require_unit_mean(gamma)?;
    let order = gamma.order();
    let star = gamma.adjoint()?;
    let star_gf = star.gf().pow_x()?;

    let eta = eta_umbra(gamma, order.saturating_sub(1))?;
    let chi = Umbra::special(Special::Singleton, order);
    let bell = Umbra::special(Special::Bell, order);
    let c_umbra = Umbra::constant(c, order);
    let chain = Umbra::dot(
        &Umbra::dot(&Umbra::dot(&chi, &c_umbra), &bell),
        &eta.derivative(),
    );

    let lhs_series = chain.gf().lift_to_poly().mul(&star_gf);
    let lhs = &Poly::x()
        * &lhs_series
            .coeff(n)?
            .scale(&Rational::from_integer(factorial(n)));

    let p_n = star_gf
        .coeff(n)?
        .scale(&Rational::from_integer(factorial(n)));
    let shift = Poly::from_coeffs(vec![c * rat_int(n as i64), Rational::one()]);
    let rhs = &shift * &p_n;

    if lhs == rhs {
        Ok(IdentityCheck::pass())
    } else {
        Ok(IdentityCheck::fail(format!(
            "n = {n}, c = {c}: lhs {lhs} != rhs {rhs}"
        )))
    }
}
