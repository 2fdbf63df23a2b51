//! Independent brute-force ground truth.
//!
//! Everything in this module is computed by enumeration or elementary
//! recurrences, never through the power-series engine, so it can serve as an
//! oracle for the symbolic machinery. Only the coefficient types from
//! [`crate::series`] are used here; the umbral modules are off limits.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{binomial, Poly, Rational};

/// Total-step guard for exhaustive path enumeration.
pub const MAX_ENUMERATION_STEPS: usize = 26;

/// Size guard for set-partition enumeration.
pub const MAX_PARTITION_SET: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for exhaustive enumeration ({size} > {max})")]
    TooLarge { size: usize, max: usize },
}

/// A lattice-path counting instance: paths of `u`/`r` steps from the origin
/// to `(n, m)` (n right-steps, m up-steps) staying weakly above the diagonal
/// and avoiding `forbidden_pattern` as a substring.
#[derive(Debug, Clone)]
pub struct PathSpec {
    pub target: (usize, usize),
    pub forbidden_pattern: String,
}

impl PathSpec {
    /// The default instance: forbidden pattern `urru`.
    pub fn new(n: usize, m: usize) -> Self {
        Self::with_pattern(n, m, "urru")
    }

    pub fn with_pattern(n: usize, m: usize, pattern: &str) -> Self {
        assert!(!pattern.is_empty(), "forbidden pattern must be nonempty");
        PathSpec {
            target: (n, m),
            forbidden_pattern: pattern.to_string(),
        }
    }
}

/// Counts ballot paths by depth-first enumeration of step strings.
pub fn count_ballot_paths(spec: &PathSpec) -> Result<u64, OracleError> {
    let (n, m) = spec.target;
    let steps = n + m;
    if steps > MAX_ENUMERATION_STEPS {
        return Err(OracleError::TooLarge {
            size: steps,
            max: MAX_ENUMERATION_STEPS,
        });
    }
    if n > m {
        return Ok(0);
    }
    let pattern = spec.forbidden_pattern.as_bytes();
    let mut path = Vec::with_capacity(steps);
    Ok(extend(&mut path, 0, 0, n, m, pattern))
}

fn extend(path: &mut Vec<u8>, ups: usize, rights: usize, n: usize, m: usize, pattern: &[u8]) -> u64 {
    if path.ends_with(pattern) {
        return 0;
    }
    if ups == m && rights == n {
        return 1;
    }
    let mut count = 0;
    if ups < m {
        path.push(b'u');
        count += extend(path, ups + 1, rights, n, m, pattern);
        path.pop();
    }
    // staying weakly above the diagonal: never more rights than ups
    if rights < n && rights < ups {
        path.push(b'r');
        count += extend(path, ups, rights + 1, n, m, pattern);
        path.pop();
    }
    count
}

/// Fibonacci numbers with `F_0 = F_1 = 1`, by the additive recurrence.
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Bernoulli numbers `B_0..B_n` by the binomial-triangle recurrence
/// `sum_{k=0..n} C(n+1, k) B_k = 0` (so `B_1 = -1/2`).
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for i in 1..=n {
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            acc += Rational::from_integer(binomial(i + 1, k)) * b;
        }
        out.push(-acc / Rational::from_integer(BigInt::from(i + 1)));
    }
    out
}

/// Bell numbers `B_0..B_n` by the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for value in &row {
            let last = next.last().unwrap().clone();
            next.push(last + value);
        }
        out.push(next[0].clone());
        row = next;
    }
    out.truncate(n + 1);
    out
}

/// Partial Bell polynomial `B_{i,j}` evaluated by summing over all set
/// partitions of `{1..i}` into exactly `j` blocks; `moments[s-1]` is the
/// value substituted for a block of size `s`.
pub fn partial_bell_by_partitions(
    i: usize,
    j: usize,
    moments: &[Rational],
) -> Result<Rational, OracleError> {
    if i > MAX_PARTITION_SET {
        return Err(OracleError::TooLarge {
            size: i,
            max: MAX_PARTITION_SET,
        });
    }
    assert!(j >= 1 && j <= i, "need 1 <= j <= i");
    assert!(moments.len() > i - j, "need moments a_1..a_{{i-j+1}}");
    let mut block_sizes: Vec<usize> = Vec::new();
    let mut acc = Rational::zero();
    assign(i, j, 0, &mut block_sizes, moments, &mut acc);
    Ok(acc)
}

fn assign(
    i: usize,
    j: usize,
    element: usize,
    block_sizes: &mut Vec<usize>,
    moments: &[Rational],
    acc: &mut Rational,
) {
    if element == i {
        if block_sizes.len() == j {
            let mut product = Rational::one();
            for &s in block_sizes.iter() {
                product *= &moments[s - 1];
            }
            *acc += product;
        }
        return;
    }
    // elements still to place must be able to open the remaining blocks
    let remaining = i - element;
    if block_sizes.len() + remaining < j {
        return;
    }
    for b in 0..block_sizes.len() {
        block_sizes[b] += 1;
        assign(i, j, element + 1, block_sizes, moments, acc);
        block_sizes[b] -= 1;
    }
    if block_sizes.len() < j {
        block_sizes.push(1);
        assign(i, j, element + 1, block_sizes, moments, acc);
        block_sizes.pop();
    }
}

/// `\int_0^1 p(x) dx`, coefficientwise.
pub fn integrate01(p: &Poly) -> Rational {
    let mut acc = Rational::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        acc += c / Rational::from_integer(BigInt::from(k + 1));
    }
    acc
}

/// Frozen reference counts for the pattern-avoiding ballot-path table:
/// `cell.0 = n`, `cell.1 = m`, `cell.2 = D(n, m)`, covering rows `m <= 6`.
pub fn reference_table_cells() -> Vec<(usize, usize, u64)> {
    let rows: [(usize, &[u64]); 7] = [
        (0, &[1]),
        (1, &[1, 1]),
        (2, &[1, 2, 2]),
        (3, &[1, 3, 4, 4]),
        (4, &[1, 4, 7, 9, 9]),
        (5, &[1, 5, 11, 17, 23, 23]),
        (6, &[1, 6, 16, 29, 46, 63]),
    ];
    let mut cells = Vec::new();
    for (m, values) in rows {
        for (n, &v) in values.iter().enumerate() {
            cells.push((n, m, v));
        }
    }
    cells
}
