//! Sheffer umbrae and executable checkers for the Sheffer, binomial, and
//! generalized Sheffer identities.
//!
//! A Sheffer umbra for a pair `(alpha, gamma)` — `gamma` with invertible
//! first moment — is `sigma_x = alpha + x.gamma*`, where `gamma*` is the
//! adjoint of `gamma`. Its moments `s_n(x)` form a Sheffer sequence whose
//! associated sequence `p_n(x)` comes from the degenerate pair
//! `(augmentation, gamma)`.
//!
//! Two-variable identities are verified on an integer evaluation grid: both
//! sides of an identity in `x` and `y` of degree at most `n` in each variable
//! are compared at the `(n+1)^2` points `{0..n} x {0..n}`, which can only
//! agree everywhere if the polynomials are equal.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{binomial, factorial, rat_int, Poly, Rational, Series};
use crate::umbra::{ScalarUmbra, Umbra, UmbraError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShefferError {
    #[error("gamma must have an invertible first moment")]
    NonInvertibleGamma,
    #[error(transparent)]
    Umbra(#[from] UmbraError),
}

/// Outcome of an identity check, with a witness for the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

impl IdentityCheck {
    pub fn pass() -> Self {
        IdentityCheck {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: String) -> Self {
        IdentityCheck {
            holds: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.holds, &self.witness) {
            (true, _) => write!(f, "holds"),
            (false, Some(w)) => write!(f, "fails at {w}"),
            (false, None) => write!(f, "fails"),
        }
    }
}

/// The Sheffer umbra `sigma_x = alpha + x.gamma*` for a pair `(alpha, gamma)`.
#[derive(Debug, Clone)]
pub struct ShefferUmbra {
    alpha: ScalarUmbra,
    gamma: ScalarUmbra,
    gamma_star: ScalarUmbra,
    /// `f(alpha, t) exp(x [f^<-1>(gamma, t) - 1])`, cached at the session order.
    sigma_gf: Series<Poly>,
    /// `f(gamma*, t)^x`, the generating function of the associated umbra.
    star_gf: Series<Poly>,
}

impl ShefferUmbra {
    pub fn new(alpha: &ScalarUmbra, gamma: &ScalarUmbra) -> Result<Self, ShefferError> {
        let order = alpha.order().min(gamma.order());
        let gamma = Umbra::from_gf(gamma.gf().truncated(order))
            .expect("umbral gf has constant term 1")
            .named(gamma.name().to_string());
        let gamma_star = gamma.adjoint().map_err(|e| match e {
            UmbraError::NonInvertible => ShefferError::NonInvertibleGamma,
            other => ShefferError::Umbra(other),
        })?;
        let star_gf = gamma_star
            .gf()
            .pow_x()
            .expect("umbral gf has constant term 1");
        let sigma_gf = alpha.gf().truncated(order).lift_to_poly().mul(&star_gf);
        Ok(ShefferUmbra {
            alpha: Umbra::from_gf(alpha.gf().truncated(order))
                .expect("umbral gf has constant term 1")
                .named(alpha.name().to_string()),
            gamma,
            gamma_star,
            sigma_gf,
            star_gf,
        })
    }

    /// The associated umbra `x.gamma*` of `gamma` (the Sheffer umbra for the
    /// pair with augmentation `alpha`).
    pub fn associated(gamma: &ScalarUmbra) -> Result<Self, ShefferError> {
        let eps = Umbra::special(crate::umbra::Special::Augmentation, gamma.order());
        ShefferUmbra::new(&eps, gamma)
    }

    pub fn alpha(&self) -> &ScalarUmbra {
        &self.alpha
    }

    pub fn gamma(&self) -> &ScalarUmbra {
        &self.gamma
    }

    pub fn gamma_star(&self) -> &ScalarUmbra {
        &self.gamma_star
    }

    pub fn order(&self) -> usize {
        self.sigma_gf.order()
    }

    pub fn sigma_gf(&self) -> &Series<Poly> {
        &self.sigma_gf
    }

    /// The Sheffer moment `s_n(x) = E[sigma_x^n]`, read off the generating
    /// function; in debug builds the binomial-expansion route
    /// `sum_k C(n,k) a_k p_{n-k}(x)` is recomputed and must agree.
    pub fn moment_poly(&self, n: usize) -> Result<Poly, ShefferError> {
        let s = self
            .sigma_gf
            .coeff(n)
            .map_err(UmbraError::from)?
            .scale(&Rational::from_integer(factorial(n)));
        debug_assert_eq!(s, self.moment_poly_binomial(n).unwrap());
        Ok(s)
    }

    /// `s_n(x)` by binomial expansion of `(alpha + x.gamma*)^n` over the
    /// uncorrelated pair.
    pub fn moment_poly_binomial(&self, n: usize) -> Result<Poly, ShefferError> {
        let mut acc = Poly::zero();
        for k in 0..=n {
            let a_k = self.alpha.moment(k)?;
            let p = self.associated_poly(n - k)?;
            let weight = Rational::from_integer(binomial(n, k)) * a_k;
            acc = &acc + &p.scale(&weight);
        }
        Ok(acc)
    }

    /// The associated polynomial `p_n(x) = E[(x.gamma*)^n]`.
    pub fn associated_poly(&self, n: usize) -> Result<Poly, ShefferError> {
        Ok(self
            .star_gf
            .coeff(n)
            .map_err(UmbraError::from)?
            .scale(&Rational::from_integer(factorial(n))))
    }

    /// Checks the Sheffer identity
    /// `s_n(x+y) = sum_k C(n,k) s_k(x) p_{n-k}(y)` on the evaluation grid.
    pub fn check_sheffer_identity(&self, n: usize) -> Result<IdentityCheck, ShefferError> {
        let s: Vec<Poly> = (0..=n)
            .map(|k| self.moment_poly(k))
            .collect::<Result<_, _>>()?;
        let p: Vec<Poly> = (0..=n)
            .map(|k| self.associated_poly(k))
            .collect::<Result<_, _>>()?;
        Ok(sheffer_identity_on_grid(&s, &p, n))
    }

    /// Checks the generalized Sheffer identity
    /// `sigma_(eta+zeta) = sigma_eta + zeta.gamma*` at power `n`, comparing
    /// the substituted generating function against the binomial expansion of
    /// the right-hand side.
    pub fn check_generalized_sheffer(
        &self,
        eta: &ScalarUmbra,
        zeta: &ScalarUmbra,
        n: usize,
    ) -> Result<IdentityCheck, ShefferError> {
        let lhs_umbra = self
            .alpha
            .add(&Umbra::dot(&eta.add(zeta), &self.gamma_star));
        let sigma_eta = self.alpha.add(&Umbra::dot(eta, &self.gamma_star));
        let zeta_star = Umbra::dot(zeta, &self.gamma_star);

        let lhs = lhs_umbra.moment(n)?;
        let mut rhs = Rational::zero();
        for k in 0..=n {
            rhs += Rational::from_integer(binomial(n, k))
                * sigma_eta.moment(k)?
                * zeta_star.moment(n - k)?;
        }
        if lhs == rhs {
            Ok(IdentityCheck::pass())
        } else {
            Ok(IdentityCheck::fail(format!(
                "n = {n}: E[sigma_(eta+zeta)^n] = {lhs} but expansion gives {rhs}"
            )))
        }
    }
}

/// Grid check of `s_n(x+y) = sum_k C(n,k) s_k(x) p_{n-k}(y)` given the two
/// sequences explicitly.
pub fn sheffer_identity_on_grid(s: &[Poly], p: &[Poly], n: usize) -> IdentityCheck {
    for i in 0..=n as i64 {
        for j in 0..=n as i64 {
            let x = rat_int(i);
            let y = rat_int(j);
            let lhs = s[n].eval(&(&x + &y));
            let mut rhs = Rational::zero();
            for k in 0..=n {
                rhs += Rational::from_integer(binomial(n, k)) * s[k].eval(&x) * p[n - k].eval(&y);
            }
            if lhs != rhs {
                return IdentityCheck::fail(format!("(x, y) = ({i}, {j}): {lhs} != {rhs}"));
            }
        }
    }
    IdentityCheck::pass()
}

/// Checks the binomial identity `p_n(x+y) = sum_k C(n,k) p_k(x) p_{n-k}(y)`
/// for the sequence associated to `gamma`.
pub fn check_binomial_identity(
    gamma: &ScalarUmbra,
    n: usize,
) -> Result<IdentityCheck, ShefferError> {
    let associated = ShefferUmbra::associated(gamma)?;
    let p: Vec<Poly> = (0..=n)
        .map(|k| associated.associated_poly(k))
        .collect::<Result<_, _>>()?;
    Ok(sheffer_identity_on_grid(&p, &p, n))
}

/// Deterministic pseudo-random umbra for the property suites: small rational
/// moments with nonzero first moment.
pub fn random_umbra(rng: &mut impl rand::Rng, order: usize) -> ScalarUmbra {
    use crate::bellpoly::MomentSeq;
    let seq = MomentSeq::unital(order, |n| {
        let numer = rng.random_range(-6i64..=6);
        let denom = rng.random_range(1i64..=4);
        if n == 1 && numer == 0 {
            Rational::one()
        } else {
            crate::series::rat(numer, denom)
        }
    });
    Umbra::from_moments(&seq)
}
