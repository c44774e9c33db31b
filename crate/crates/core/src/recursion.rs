//! The memoized inclusion–exclusion recurrence for `t(m, r, s)`: the number
//! of rectangulations with `m` tiles, `r` edges meeting the interior of the
//! right side of the square, and `s` singular vertices.
//!
//! Every value of layer `m` depends only on layers `< m`, so the table is
//! filled one layer at a time; cells inside a layer are independent and are
//! computed in parallel.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::BinomialTable;
use crate::error::{Error, Result};

/// Exact counts `t(m, r, s)` for `1 <= m <= max_m`, `0 <= r, s <= m - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    /// `layers[m - 1]` is an `m x m` row-major matrix indexed by `(r, s)`.
    layers: Vec<Vec<BigUint>>,
}

impl CountTable {
    /// A table with no layers.
    pub fn empty() -> Self {
        CountTable { layers: Vec::new() }
    }

    /// Number of filled layers.
    pub fn max_m(&self) -> usize {
        self.layers.len()
    }

    fn cell(&self, m: usize, r: usize, s: usize) -> &BigUint {
        &self.layers[m - 1][r * m + s]
    }

    fn check_filled(&self, m: usize) -> Result<()> {
        if m == 0 {
            return Err(Error::IndexOutOfRange { m: 0, r: 0, s: 0 });
        }
        if m > self.max_m() {
            return Err(Error::TableTooSmall {
                requested: m,
                filled: self.max_m(),
            });
        }
        Ok(())
    }

    /// `t(m, r, s)`. Values with `s >= m` are zero; `r >= m` is rejected.
    pub fn t_of_mrs(&self, m: usize, r: usize, s: usize) -> Result<BigUint> {
        if m == 0 || r >= m {
            return Err(Error::IndexOutOfRange {
                m: m as i64,
                r: r as i64,
                s: s as i64,
            });
        }
        self.check_filled(m)?;
        if s >= m {
            return Ok(BigUint::zero());
        }
        Ok(self.cell(m, r, s).clone())
    }

    /// `t(m, s)`, summed over the right-side count.
    pub fn t_of_ms(&self, m: usize, s: usize) -> Result<BigUint> {
        self.check_filled(m)?;
        if s >= m {
            return Ok(BigUint::zero());
        }
        Ok((0..m).map(|r| self.cell(m, r, s)).sum())
    }

    /// Total number of rectangulations with `m` tiles.
    pub fn t_total(&self, m: usize) -> Result<BigUint> {
        self.check_filled(m)?;
        Ok(self.layers[m - 1].iter().sum())
    }

    /// All stored entries as `(m, r, s, t)`, ordered by `m`, then `r`, then `s`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &BigUint)> + '_ {
        self.layers.iter().enumerate().flat_map(|(i, layer)| {
            let m = i + 1;
            layer
                .iter()
                .enumerate()
                .map(move |(idx, t)| (m, idx / m, idx % m, t))
        })
    }

    /// Builds a table from explicit layers, checking shapes and the base
    /// family. Used by the cache reader.
    pub(crate) fn from_layers(layers: Vec<Vec<BigUint>>) -> Result<Self> {
        for (i, layer) in layers.iter().enumerate() {
            let m = i + 1;
            if layer.len() != m * m {
                return Err(Error::InvalidArgument(format!(
                    "layer m={m} has {} entries, expected {}",
                    layer.len(),
                    m * m
                )));
            }
        }
        Ok(CountTable { layers })
    }

    /// Appends layers until the table is filled through `max_m`.
    ///
    /// `threads` selects a dedicated pool size; `None` uses the global pool.
    /// The result never depends on the thread count.
    pub fn extend_to(&mut self, max_m: usize, threads: Option<usize>) -> Result<()> {
        if max_m <= self.max_m() {
            return Ok(());
        }
        let recurrence = Recurrence::new(max_m);
        match threads {
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                pool.install(|| self.fill_layers(&recurrence, max_m))
            }
            None => self.fill_layers(&recurrence, max_m),
        }
    }

    fn fill_layers(&mut self, recurrence: &Recurrence, max_m: usize) -> Result<()> {
        for m in self.max_m() + 1..=max_m {
            let layer = (0..m * m)
                .into_par_iter()
                .map(|idx| {
                    let (r, s) = (idx / m, idx % m);
                    if r == m - 1 && s == 0 {
                        return Ok(BigUint::from(1u32));
                    }
                    let value = recurrence.evaluate(self, m, r, s);
                    to_count(value, m, r, s)
                })
                .collect::<Result<Vec<_>>>()?;
            self.layers.push(layer);
        }
        Ok(())
    }

    /// Evaluates the raw recurrence sum at `(m, r, s)` from layers `< m`,
    /// without the base-family override. Requires the table to be filled
    /// through `m - 1`.
    pub fn evaluate_recurrence(&self, m: usize, r: usize, s: usize) -> Result<BigInt> {
        if m == 0 || r >= m {
            return Err(Error::IndexOutOfRange {
                m: m as i64,
                r: r as i64,
                s: s as i64,
            });
        }
        if m - 1 > self.max_m() {
            return Err(Error::TableTooSmall {
                requested: m - 1,
                filled: self.max_m(),
            });
        }
        Ok(Recurrence::new(m).evaluate(self, m, r, s))
    }

    /// Raw recurrence sums for every `(r, s)` of layer `m`, as an `m x m`
    /// row-major matrix. The base-family cell is the raw sum too, not 1.
    pub fn recurrence_layer(&self, m: usize) -> Result<Vec<BigInt>> {
        if m == 0 {
            return Err(Error::IndexOutOfRange { m: 0, r: 0, s: 0 });
        }
        if m - 1 > self.max_m() {
            return Err(Error::TableTooSmall {
                requested: m - 1,
                filled: self.max_m(),
            });
        }
        let recurrence = Recurrence::new(m);
        Ok((0..m * m)
            .into_par_iter()
            .map(|idx| recurrence.evaluate(self, m, idx / m, idx % m))
            .collect())
    }
}

fn to_count(value: BigInt, m: usize, r: usize, s: usize) -> Result<BigUint> {
    match value.sign() {
        Sign::Minus => Err(Error::NegativeCount {
            m,
            r,
            s,
            value: value.to_string(),
        }),
        _ => Ok(value.magnitude().clone()),
    }
}

/// Fills a fresh table through `max_m` on the global thread pool.
pub fn fill_table(max_m: usize) -> Result<CountTable> {
    fill_table_with_threads(max_m, None)
}

pub fn fill_table_with_threads(max_m: usize, threads: Option<usize>) -> Result<CountTable> {
    if max_m == 0 {
        return Err(Error::InvalidArgument("max_m must be at least 1".into()));
    }
    let mut table = CountTable::empty();
    table.extend_to(max_m, threads)?;
    Ok(table)
}

/// Signed recurrence coefficients, precomputed for every argument tuple that
/// can be nonzero up to a given layer.
///
/// For a smaller tiling with `r_bar` right edges, pushing in vertical edges
/// of total length `ell` and adding `delta_s` singular vertices and
/// `delta_m` tiles contributes, summed over the component count `c`,
///
/// ```text
/// sum_c (-1)^(c+1) C(ell-1, c-1) C(r_bar+2-ell, c) C(ell-c, delta_s)
///                  C(delta_m-c-delta_s+ell-1, ell-1)
/// ```
struct Recurrence {
    max_m: usize,
    coefficients: Vec<BigInt>,
}

impl Recurrence {
    fn new(max_m: usize) -> Self {
        let n = max_m.max(1);
        let binomials = BinomialTable::new(3 * n + 2);
        let mut coefficients = vec![BigInt::zero(); n * (n + 1) * n * n];
        for r_bar in 0..n {
            for ell in 1..=(r_bar + 1).min(n) {
                for delta_m in 1..n {
                    // the last factor needs delta_m - c - delta_s >= 0, c >= 1
                    for delta_s in 0..delta_m {
                        let idx = Self::index(n, r_bar, ell, delta_m, delta_s);
                        coefficients[idx] =
                            Self::coefficient(&binomials, r_bar, ell, delta_m, delta_s);
                    }
                }
            }
        }
        Recurrence {
            max_m: n,
            coefficients,
        }
    }

    fn index(n: usize, r_bar: usize, ell: usize, delta_m: usize, delta_s: usize) -> usize {
        ((r_bar * (n + 1) + ell) * n + delta_m) * n + delta_s
    }

    fn coefficient(
        binomials: &BinomialTable,
        r_bar: usize,
        ell: usize,
        delta_m: usize,
        delta_s: usize,
    ) -> BigInt {
        let (r_bar, ell, delta_m, delta_s) =
            (r_bar as i64, ell as i64, delta_m as i64, delta_s as i64);
        let max_c = (r_bar + 2) / 2;
        let mut acc = BigInt::zero();
        for c in 1..=max_c {
            let term = binomials.get(ell - 1, c - 1)
                * binomials.get(r_bar + 2 - ell, c)
                * binomials.get(ell - c, delta_s)
                * binomials.get(delta_m - c - delta_s + ell - 1, ell - 1);
            if term.is_zero() {
                continue;
            }
            if c % 2 == 1 {
                acc += BigInt::from(term);
            } else {
                acc -= BigInt::from(term);
            }
        }
        acc
    }

    /// The recurrence sum at `(m, r, s)` over all smaller tilings in `table`.
    ///
    /// Only `(m_bar, r_bar)` with `1 <= ell <= r_bar + 1` are visited; every
    /// other term has a vanishing subset-count factor.
    fn evaluate(&self, table: &CountTable, m: usize, r: usize, s: usize) -> BigInt {
        debug_assert!(m <= self.max_m || m == 1);
        let mut acc = BigInt::zero();
        for m_bar in 1..m {
            let delta_m = m - m_bar;
            for r_bar in 0..m_bar {
                // ell = delta_m - (r - r_bar)
                let ell = delta_m as i64 - r as i64 + r_bar as i64;
                if ell < 1 || ell > r_bar as i64 + 1 {
                    continue;
                }
                let ell = ell as usize;
                for s_bar in 0..=s.min(m_bar - 1) {
                    let delta_s = s - s_bar;
                    if delta_s >= delta_m {
                        continue;
                    }
                    let t = table.cell(m_bar, r_bar, s_bar);
                    if t.is_zero() {
                        continue;
                    }
                    let coef =
                        &self.coefficients[Self::index(self.max_m, r_bar, ell, delta_m, delta_s)];
                    if coef.is_zero() {
                        continue;
                    }
                    let product = BigInt::from_biguint(coef.sign(), t * coef.magnitude());
                    acc += product;
                }
            }
        }
        acc
    }
}

/// Parity of `t_n` for each `n`, with agreement against the conjectured
/// pattern (odd exactly when `n ≡ 1` or `4 (mod 8)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub entries: Vec<ParityEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityEntry {
    pub n: usize,
    pub parity: u8,
    pub expected: u8,
}

impl ParityEntry {
    pub fn agrees(&self) -> bool {
        self.parity == self.expected
    }
}

impl ParityReport {
    pub fn all_agree(&self) -> bool {
        self.entries.iter().all(ParityEntry::agrees)
    }

    pub fn parities(&self) -> Vec<u8> {
        self.entries.iter().map(|e| e.parity).collect()
    }
}

pub fn conjectured_parity(n: usize) -> u8 {
    matches!(n % 8, 1 | 4) as u8
}

pub fn parity_report(max_m: usize, table: &CountTable) -> Result<ParityReport> {
    let entries = (1..=max_m)
        .map(|n| {
            let t = table.t_total(n)?;
            Ok(ParityEntry {
                n,
                parity: t.bit(0) as u8,
                expected: conjectured_parity(n),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ParityReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use std::collections::HashMap;

    /// Unpruned transcription of the recurrence: every index in the stated
    /// ranges, every binomial through the zero convention.
    fn literal(m: i64, r: i64, s: i64, memo: &mut HashMap<(i64, i64, i64), BigInt>) -> BigInt {
        if r == m - 1 && s == 0 {
            return BigInt::from(1);
        }
        if let Some(v) = memo.get(&(m, r, s)) {
            return v.clone();
        }
        let mut acc = BigInt::zero();
        for m_bar in 1..m {
            for r_bar in 0..m_bar {
                for s_bar in 0..=s {
                    for c in 1..=(r_bar + 2) / 2 {
                        let (dm, dr, ds) = (m - m_bar, r - r_bar, s - s_bar);
                        let ell = dm - dr;
                        let coef = binomial(ell - 1, c - 1)
                            * binomial(r_bar + 2 - ell, c)
                            * binomial(ell - c, ds)
                            * binomial(dm - c - ds + ell - 1, ell - 1);
                        if coef.is_zero() {
                            continue;
                        }
                        let term = BigInt::from(coef) * literal(m_bar, r_bar, s_bar, memo);
                        if c % 2 == 1 {
                            acc += term;
                        } else {
                            acc -= term;
                        }
                    }
                }
            }
        }
        memo.insert((m, r, s), acc.clone());
        acc
    }

    #[test]
    fn pruned_fill_matches_literal_sum() {
        let table = fill_table(10).unwrap();
        let mut memo = HashMap::new();
        for m in 1..=10usize {
            for r in 0..m {
                for s in 0..m {
                    let want = literal(m as i64, r as i64, s as i64, &mut memo);
                    let got = BigInt::from(table.t_of_mrs(m, r, s).unwrap());
                    assert_eq!(got, want, "m={m} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn small_values() {
        let table = fill_table(4).unwrap();
        let t = |m, r, s| table.t_of_mrs(m, r, s).unwrap();
        assert_eq!(t(1, 0, 0), BigUint::from(1u32));
        assert_eq!(t(2, 1, 0), BigUint::from(1u32));
        assert_eq!(t(2, 0, 0), BigUint::from(1u32));
        assert_eq!(t(3, 0, 0), BigUint::from(2u32));
        assert_eq!(t(3, 1, 0), BigUint::from(3u32));
        assert_eq!(t(3, 2, 0), BigUint::from(1u32));
        assert_eq!(table.t_of_ms(4, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(table.t_total(4).unwrap(), BigUint::from(25u32));
        // s beyond the layer is zero, not an error
        assert!(table.t_of_mrs(3, 0, 7).unwrap().is_zero());
    }

    #[test]
    fn single_layer_table() {
        let table = fill_table(1).unwrap();
        let entries: Vec<_> = table.entries().collect();
        assert_eq!(entries, vec![(1, 0, 0, &BigUint::from(1u32))]);
    }

    #[test]
    fn argument_errors() {
        let table = fill_table(3).unwrap();
        assert!(matches!(
            table.t_of_mrs(3, 3, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            table.t_of_mrs(0, 0, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            table.t_of_mrs(4, 0, 0),
            Err(Error::TableTooSmall {
                requested: 4,
                filled: 3
            })
        ));
        assert!(fill_table(0).is_err());
        assert!(table.evaluate_recurrence(5, 0, 0).is_err());
    }

    #[test]
    fn extending_matches_fresh_fill() {
        let mut table = fill_table(5).unwrap();
        table.extend_to(9, Some(1)).unwrap();
        assert_eq!(table, fill_table(9).unwrap());
        // shrinking is a no-op
        table.extend_to(3, None).unwrap();
        assert_eq!(table.max_m(), 9);
    }

    #[test]
    fn negative_sums_are_rejected() {
        assert!(matches!(
            to_count(BigInt::from(-3), 4, 1, 0),
            Err(Error::NegativeCount {
                m: 4,
                r: 1,
                s: 0,
                ..
            })
        ));
    }

    #[test]
    fn parity_small() {
        let table = fill_table(12).unwrap();
        let report = parity_report(12, &table).unwrap();
        assert_eq!(report.parities(), vec![1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1]);
        assert!(report.all_agree());
        assert_eq!(parity_report(1, &table).unwrap().parities(), vec![1]);
    }
}
