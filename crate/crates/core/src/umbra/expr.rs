//! Umbral expressions and the evaluation functional `E`.
//!
//! An [`UmbralExpr`] is a tree over umbra leaves, the indeterminate `x`, and
//! rational constants. Distinct leaf occurrences are uncorrelated, so the
//! generating function of a top-level sum is the product of the summands'
//! generating functions. `E[expr^n]` is computed two ways: reading `n! [t^n]`
//! off the expression's generating function, and expanding the top-level sum
//! by the multinomial theorem over the summands' moments. The two routes are
//! checked against each other in debug builds.

use crate::series::{binomial, factorial, Coeff, Poly, Rational, Series, SeriesError};

use super::{Umbra, UmbraError};

/// Symbolic umbral expression.
#[derive(Debug, Clone)]
pub enum UmbralExpr {
    /// A scalar umbra leaf.
    Umbra(Umbra<Rational>),
    /// The indeterminate `x`, as the polynomial umbra with moments `x^n`.
    X,
    /// A scalar constant `c`, with moments `c^n`.
    Const(Rational),
    /// Sum of uncorrelated subexpressions.
    Sum(Vec<UmbralExpr>),
    /// Dilation `c * e`.
    Scale(Rational, Box<UmbralExpr>),
    /// Dot-product `l.r`.
    Dot(Box<UmbralExpr>, Box<UmbralExpr>),
    /// Adjoint `r*`.
    Adjoint(Box<UmbralExpr>),
    /// Compositional inverse `r^<-1>`.
    CompInverse(Box<UmbralExpr>),
    /// Derivative umbra `r_D`.
    Derivative(Box<UmbralExpr>),
}

impl UmbralExpr {
    pub fn umbra(u: Umbra<Rational>) -> Self {
        UmbralExpr::Umbra(u)
    }

    pub fn constant(c: Rational) -> Self {
        UmbralExpr::Const(c)
    }

    pub fn sum(terms: Vec<UmbralExpr>) -> Self {
        UmbralExpr::Sum(terms)
    }

    pub fn dot(l: UmbralExpr, r: UmbralExpr) -> Self {
        UmbralExpr::Dot(Box::new(l), Box::new(r))
    }

    pub fn scale(c: Rational, e: UmbralExpr) -> Self {
        UmbralExpr::Scale(c, Box::new(e))
    }

    pub fn contains_x(&self) -> bool {
        match self {
            UmbralExpr::X => true,
            UmbralExpr::Umbra(_) | UmbralExpr::Const(_) => false,
            UmbralExpr::Sum(terms) => terms.iter().any(UmbralExpr::contains_x),
            UmbralExpr::Dot(l, r) => l.contains_x() || r.contains_x(),
            UmbralExpr::Scale(_, e)
            | UmbralExpr::Adjoint(e)
            | UmbralExpr::CompInverse(e)
            | UmbralExpr::Derivative(e) => e.contains_x(),
        }
    }

    /// The expression's generating function over the coefficient ring `C`,
    /// truncated at `order`. Umbra leaves must carry at least that order.
    pub fn gf<C: Coeff>(&self, order: usize) -> Result<Series<C>, UmbraError> {
        match self {
            UmbralExpr::Umbra(u) => {
                if u.order() < order {
                    return Err(SeriesError::OrderExceeded {
                        index: order,
                        order: u.order(),
                    }
                    .into());
                }
                let gf = u.gf().truncated(order);
                Ok(Series::from_fn(order, |n| {
                    C::from_rational(gf.coeffs().get(n).unwrap())
                }))
            }
            UmbralExpr::X => {
                let x = C::indeterminate().ok_or(UmbraError::RequiresPolynomialRing)?;
                let mut power = C::one();
                Ok(Series::from_fn(order, |n| {
                    if n > 0 {
                        power = power.clone() * x.clone();
                    }
                    power.clone() * C::from_rational(&Rational::new(1.into(), factorial(n)))
                }))
            }
            UmbralExpr::Const(c) => {
                let c = C::from_rational(c);
                let mut power = C::one();
                Ok(Series::from_fn(order, |n| {
                    if n > 0 {
                        power = power.clone() * c.clone();
                    }
                    power.clone() * C::from_rational(&Rational::new(1.into(), factorial(n)))
                }))
            }
            UmbralExpr::Sum(terms) => {
                let mut acc = Series::one(order);
                for term in terms {
                    acc = acc.mul(&term.gf(order)?);
                }
                Ok(acc)
            }
            UmbralExpr::Scale(c, e) => Ok(e.gf(order)?.dilate(&C::from_rational(c))),
            UmbralExpr::Dot(l, r) => {
                let inner = r.gf::<C>(order)?.log()?;
                Ok(l.gf(order)?.compose(&inner)?)
            }
            UmbralExpr::Adjoint(e) => {
                let inv = Self::inverse_gf(&e.gf::<C>(order)?)?;
                Ok(inv.exp()?)
            }
            UmbralExpr::CompInverse(e) => {
                let inv = Self::inverse_gf(&e.gf::<C>(order)?)?;
                Ok(Series::one(order).add(&inv))
            }
            UmbralExpr::Derivative(e) => {
                let gf = e.gf::<C>(order)?;
                Ok(Series::one(order).add(&gf.mul_t()))
            }
        }
    }

    /// `f^<-1>(e, t) - 1`, the compositional inverse of `f(e, t) - 1`.
    fn inverse_gf<C: Coeff>(gf: &Series<C>) -> Result<Series<C>, UmbraError> {
        gf.sub(&Series::one(gf.order()))
            .comp_inverse()
            .map_err(|e| match e {
                SeriesError::ZeroLinearCoefficient => UmbraError::NonInvertible,
                other => other.into(),
            })
    }

    /// `E[self^n]`, computed from the generating function; in debug builds
    /// the multinomial route is recomputed and must agree.
    pub fn evaluate(&self, n: usize, order: usize) -> Result<Poly, UmbraError> {
        if n > order {
            return Err(SeriesError::OrderExceeded { index: n, order }.into());
        }
        let gf: Series<Poly> = self.gf(order)?;
        let result = gf.coeff(n)?.scale(&Rational::from_integer(factorial(n)));
        #[cfg(debug_assertions)]
        {
            let multinomial = self.evaluate_multinomial(n, order)?;
            debug_assert_eq!(
                result, multinomial,
                "generating-function and multinomial routes disagree"
            );
        }
        Ok(result)
    }

    /// `E[self^n]` by expanding the top-level sum over uncorrelated summands:
    /// the moments of a sum are the binomial convolution of the summands'
    /// moments.
    pub fn evaluate_multinomial(&self, n: usize, order: usize) -> Result<Poly, UmbraError> {
        if n > order {
            return Err(SeriesError::OrderExceeded { index: n, order }.into());
        }
        let terms: &[UmbralExpr] = match self {
            UmbralExpr::Sum(terms) => terms,
            other => std::slice::from_ref(other),
        };
        let mut acc: Vec<Poly> = vec![Poly::one()];
        acc.extend((1..=n).map(|_| Poly::zero()));
        for term in terms {
            let gf: Series<Poly> = term.gf(order)?;
            let moments: Vec<Poly> = (0..=n)
                .map(|i| {
                    gf.coeffs()[i].scale(&Rational::from_integer(factorial(i)))
                })
                .collect();
            let mut next = vec![Poly::zero(); n + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut sum = Poly::zero();
                for (j, prev) in acc.iter().enumerate().take(i + 1) {
                    let weight = Rational::from_integer(binomial(i, j));
                    sum = &sum + &(prev * &moments[i - j]).scale(&weight);
                }
                *slot = sum;
            }
            acc = next;
        }
        Ok(acc[n].clone())
    }

    /// Scalar evaluation for expressions not involving `x`.
    pub fn evaluate_scalar(&self, n: usize, order: usize) -> Result<Rational, UmbraError> {
        if n > order {
            return Err(SeriesError::OrderExceeded { index: n, order }.into());
        }
        let gf: Series<Rational> = self.gf(order)?;
        Ok(gf.coeff(n)? * Rational::from_integer(factorial(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bellpoly::MomentSeq;
    use crate::series::{rat, rat_int};
    use crate::umbra::Special;

    const N: usize = 10;

    fn leaf(kind: Special) -> UmbralExpr {
        UmbralExpr::umbra(Umbra::special(kind, N))
    }

    #[test]
    fn second_moment_of_sum_expands_binomially() {
        let alpha = Umbra::from_moments(&MomentSeq::unital(N, |n| rat(n as i64 + 1, 2)));
        let gamma = Umbra::from_moments(&MomentSeq::unital(N, |n| rat(3 - n as i64, 4)));
        let expr = UmbralExpr::sum(vec![
            UmbralExpr::umbra(alpha.clone()),
            UmbralExpr::umbra(gamma.clone()),
        ]);
        let a1 = alpha.moment(1).unwrap();
        let a2 = alpha.moment(2).unwrap();
        let g1 = gamma.moment(1).unwrap();
        let g2 = gamma.moment(2).unwrap();
        let expected = a2 + rat_int(2) * a1 * g1 + g2;
        assert_eq!(expr.evaluate(2, N).unwrap(), Poly::constant(expected));
    }

    #[test]
    fn singleton_powers_vanish() {
        let chi = leaf(Special::Singleton);
        assert_eq!(chi.evaluate_scalar(1, N).unwrap(), rat_int(1));
        for n in 2..=6 {
            assert_eq!(chi.evaluate_scalar(n, N).unwrap(), rat_int(0), "n = {n}");
        }
    }

    #[test]
    fn x_dot_singleton_gives_falling_factorials() {
        let expr = UmbralExpr::dot(UmbralExpr::X, leaf(Special::Singleton));
        // E[(x.chi)^3] = x(x-1)(x-2) = x^3 - 3x^2 + 2x
        let expected = Poly::from_coeffs(vec![rat_int(0), rat_int(2), rat_int(-3), rat_int(1)]);
        assert_eq!(expr.evaluate(3, N).unwrap(), expected);
    }

    #[test]
    fn routes_agree_on_composite_expressions() {
        // (iota + x.u).chi + ubar, the shape used by the integral case
        let inner = UmbralExpr::sum(vec![
            leaf(Special::Bernoulli),
            UmbralExpr::dot(UmbralExpr::X, leaf(Special::Unity)),
        ]);
        let expr = UmbralExpr::sum(vec![
            leaf(Special::Factorial),
            UmbralExpr::dot(inner, leaf(Special::Singleton)),
        ]);
        for n in 0..=6 {
            let gf_route = expr.evaluate(n, N).unwrap();
            let multi_route = expr.evaluate_multinomial(n, N).unwrap();
            assert_eq!(gf_route, multi_route, "n = {n}");
        }
    }

    #[test]
    fn scalar_evaluation_rejects_x() {
        let expr = UmbralExpr::dot(UmbralExpr::X, leaf(Special::Singleton));
        assert!(matches!(
            expr.evaluate_scalar(2, N),
            Err(UmbraError::RequiresPolynomialRing)
        ));
        assert!(expr.contains_x());
    }

    #[test]
    fn const_dot_equals_dot_int() {
        let delta = Umbra::special(Special::Fibonacci, N);
        let via_const = UmbralExpr::dot(
            UmbralExpr::constant(rat_int(-2)),
            UmbralExpr::umbra(delta.clone()),
        );
        let direct = Umbra::dot_int(-2, &delta);
        for n in 0..=N {
            assert_eq!(
                via_const.evaluate_scalar(n, N).unwrap(),
                direct.moment(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn scale_matches_dilation() {
        let expr = UmbralExpr::scale(rat_int(-1), leaf(Special::Singleton));
        let gf: Series<Rational> = expr.gf(N).unwrap();
        assert_eq!(gf.coeff(1).unwrap(), &rat_int(-1));
        assert_eq!(gf.coeff(0).unwrap(), &rat_int(1));
    }

    #[test]
    fn adjoint_and_inverse_nodes() {
        let adj_u = UmbralExpr::Adjoint(Box::new(leaf(Special::Unity)));
        let chi = Umbra::special(Special::Singleton, N);
        assert_eq!(&adj_u.gf::<Rational>(N).unwrap(), chi.gf());

        let inv_chi = UmbralExpr::CompInverse(Box::new(leaf(Special::Singleton)));
        assert_eq!(&inv_chi.gf::<Rational>(N).unwrap(), chi.gf());

        let inv_eps = UmbralExpr::CompInverse(Box::new(leaf(Special::Augmentation)));
        assert!(matches!(
            inv_eps.gf::<Rational>(N),
            Err(UmbraError::NonInvertible)
        ));
    }

    #[test]
    fn evaluate_past_order_errors() {
        let expr = leaf(Special::Unity);
        assert!(matches!(
            expr.evaluate(N + 1, N),
            Err(UmbraError::Series(SeriesError::OrderExceeded { .. }))
        ));
        // and a leaf stored at a lower order cannot serve a deeper request
        let short = UmbralExpr::umbra(Umbra::special(Special::Unity, 3));
        assert!(matches!(
            short.evaluate(2, 5),
            Err(UmbraError::Series(SeriesError::OrderExceeded { .. }))
        ));
    }
}
