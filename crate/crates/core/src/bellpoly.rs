//! Partial Bell exponential polynomials and the moment/generating-function
//! bridge.
//!
//! A unital moment sequence `1, a_1, a_2, ...` and the exponential series
//! `1 + sum a_n t^n / n!` carry the same data; [`moments_from_gf`] and
//! [`gf_from_moments`] convert between them. [`partial_bell`] computes
//! `B_{i,j}(a_1, ..., a_{i-j+1})` by the convolution recurrence, and
//! [`partition_poly`] assembles the moment polynomials
//! `sum_j x^j B_{i,j}` of a polynomial partition umbra.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{binomial, factorial, Coeff, Poly, Rational, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BellError {
    #[error("moment sequences start with a_0 = 1")]
    NonUnitalSequence,
    #[error("B({i},{j}) needs moments a_1..a_{needed} but only {available} are available")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        needed: usize,
        available: usize,
    },
    #[error("generating function of a moment sequence must have constant term 1")]
    BadConstantTerm,
}

/// A unital moment sequence `a_0 = 1, a_1, ..., a_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSeq<C: Coeff = Rational> {
    values: Vec<C>,
}

impl<C: Coeff> MomentSeq<C> {
    pub fn new(values: Vec<C>) -> Result<Self, BellError> {
        if values.first().map(One::is_one) != Some(true) {
            return Err(BellError::NonUnitalSequence);
        }
        Ok(MomentSeq { values })
    }

    /// Builds `1, f(1), f(2), ..., f(order)`.
    pub fn unital(order: usize, mut f: impl FnMut(usize) -> C) -> Self {
        let mut values = vec![C::one()];
        values.extend((1..=order).map(&mut f));
        MomentSeq { values }
    }

    /// Highest moment index `N`.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&C> {
        self.values.get(n)
    }
}

/// Partial Bell polynomial `B_{i,j}(a_1, ..., a_{i-j+1})` by the recurrence
/// `B_{i,j} = sum_m C(i-1, m-1) a_m B_{i-m, j-1}`.
pub fn partial_bell<C: Coeff>(i: usize, j: usize, a: &MomentSeq<C>) -> Result<C, BellError> {
    assert!(j >= 1 && j <= i, "need 1 <= j <= i");
    let needed = i - j + 1;
    if a.order() < needed {
        return Err(BellError::IndexOutOfRange {
            i,
            j,
            needed,
            available: a.order(),
        });
    }
    // table[k][l] = B_{k,l}, built bottom up
    let mut table = vec![vec![C::zero(); j + 1]; i + 1];
    table[0][0] = C::one();
    for k in 1..=i {
        for l in 1..=j.min(k) {
            let mut acc = C::zero();
            for m in 1..=(k - l + 1) {
                let c = C::from_rational(&Rational::from_integer(binomial(k - 1, m - 1)));
                acc = acc + c * a.values[m].clone() * table[k - m][l - 1].clone();
            }
            table[k][l] = acc;
        }
    }
    Ok(table[i][j].clone())
}

/// Reads moments off an exponential generating function: `a_n = n! [t^n] f`.
pub fn moments_from_gf<C: Coeff>(f: &Series<C>) -> Result<MomentSeq<C>, BellError> {
    if !f.constant_term().is_one() {
        return Err(BellError::BadConstantTerm);
    }
    let values = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.clone() * C::from_rational(&Rational::from_integer(factorial(n))))
        .collect();
    Ok(MomentSeq { values })
}

/// The exponential generating function of a moment sequence.
pub fn gf_from_moments<C: Coeff>(a: &MomentSeq<C>) -> Series<C> {
    Series::from_fn(a.order(), |n| {
        a.values[n].clone() * C::from_rational(&Rational::new(1.into(), factorial(n)))
    })
}

/// Moment polynomial of the polynomial partition umbra:
/// `sum_{j=1..i} x^j B_{i,j}(a_1, ...)`; the empty case `i = 0` is `1`.
pub fn partition_poly(i: usize, a: &MomentSeq<Rational>) -> Result<Poly, BellError> {
    if i == 0 {
        return Ok(Poly::one());
    }
    let mut coeffs = vec![Rational::zero(); i + 1];
    for (j, slot) in coeffs.iter_mut().enumerate().skip(1) {
        *slot = partial_bell(i, j, a)?;
    }
    Ok(Poly::from_coeffs(coeffs))
}
