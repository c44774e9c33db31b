//! Exact binomial coefficients and the two counting lemmas that build the
//! coefficients of the rectangulation recurrence.
//!
//! All binomials follow one convention: `C(n, k) = 0` whenever `k < 0`,
//! `k > n` or `n < 0`. The recurrence relies on this to drop vanishing terms
//! without special cases.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact `C(n, k)` with the zero convention for out-of-range arguments.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    // acc * (n - i) is always divisible by (i + 1) after the multiplication.
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of subsets of `{1, ..., r_bar + 1}` of total size `ell` that split
/// into exactly `c` maximal runs of consecutive integers.
pub fn component_subset_count(r_bar: u64, ell: u64, c: u64) -> BigUint {
    let (r_bar, ell, c) = (r_bar as i64, ell as i64, c as i64);
    binomial(ell - 1, c - 1) * binomial(r_bar + 2 - ell, c)
}

/// Number of nonnegative integer solutions of `x_1 + ... + x_n = m`.
pub fn composition_count(m: u64, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "composition_count needs at least one part".into(),
        ));
    }
    Ok(binomial((m + n - 1) as i64, (n - 1) as i64))
}

/// Pascal's triangle up to a fixed row, for repeated lookups in hot loops.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)` under the zero convention. Panics if `n` is beyond the
    /// table.
    pub fn get(&self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 || k > n {
            return BigUint::zero();
        }
        assert!(
            (n as usize) <= self.max_n(),
            "binomial row {} beyond table size {}",
            n,
            self.max_n()
        );
        self.rows[n as usize][k as usize].clone()
    }
}
