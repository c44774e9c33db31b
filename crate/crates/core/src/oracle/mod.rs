//! Brute-force ground truth for small tile counts.
//!
//! Every rectangulation with `m` tiles has a realization on an integer grid
//! of size at most `m x m`, so sweeping all such grids, canonicalizing each
//! partition and deduplicating yields every class exactly once.

mod grid;
mod skeleton;

use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::recursion::CountTable;
use crate::topology::euler_characteristic;

pub use grid::{enumerate_grid_tilings, for_each_grid_tiling, GridTiling, Rect, Symmetry};
use skeleton::Skeleton;
pub use skeleton::{canonical_encoding, SkeletonEncoding};

pub const DEFAULT_ORACLE_BOUND: usize = 6;
/// Largest tile count accepted at all; 7 takes noticeably longer than 6.
pub const EXTENDED_ORACLE_BOUND: usize = 7;

/// Per-class census record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassStats {
    /// Tiles.
    pub m: usize,
    /// Vertices in the open interior of the right side.
    pub r: usize,
    /// Interior vertices where four tiles meet.
    pub s: usize,
    /// Vertices, including the four corners.
    pub k: usize,
    /// Edges of the 1-skeleton.
    pub e: usize,
    /// Fixed by every symmetry of the square.
    pub symmetric: bool,
}

impl ClassStats {
    /// `k = 2m + 2 - s` and `k - e + m = 1`, plus index ranges.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.k + self.s != 2 * self.m + 2 {
            out.push(format!(
                "k={} but 2m+2-s={}",
                self.k,
                2 * self.m + 2 - self.s
            ));
        }
        if self.k + self.m != self.e + 1 {
            out.push(format!(
                "k-e+m={} (k={}, e={}, m={})",
                self.k as i64 - self.e as i64 + self.m as i64,
                self.k,
                self.e,
                self.m
            ));
        }
        if self.r >= self.m {
            out.push(format!("r={} not below m={}", self.r, self.m));
        }
        if self.s >= self.m {
            out.push(format!("s={} not below m={}", self.s, self.m));
        }
        out
    }
}

/// One rectangulation found by the oracle.
#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub stats: ClassStats,
    pub representative: GridTiling,
}

pub type ClassMap = BTreeMap<SkeletonEncoding, ClassEntry>;

fn stats_without_symmetry(tiling: &GridTiling, sk: &Skeleton) -> ClassStats {
    let k = sk.points.len();
    let r = sk
        .points
        .iter()
        .filter(|&&(x, y)| x == sk.width && y > 0 && y < sk.height)
        .count();
    let s = (0..k)
        .filter(|&v| sk.is_interior(v) && sk.degree(v) == 4)
        .count();
    ClassStats {
        m: tiling.tiles().len(),
        r,
        s,
        k,
        e: sk.edge_count(),
        symmetric: false,
    }
}

/// Whether every symmetry of the square maps the class to itself.
pub fn is_totally_symmetric(tiling: &GridTiling) -> bool {
    let base = canonical_encoding(tiling);
    Symmetry::all()
        .iter()
        .all(|&g| canonical_encoding(&tiling.transformed(g)) == base)
}

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl Oracle {
    /// Oracle accepting tile counts up to `bound`, capped at
    /// [`EXTENDED_ORACLE_BOUND`].
    pub fn with_bound(bound: usize) -> Result<Self> {
        if bound > EXTENDED_ORACLE_BOUND {
            return Err(Error::OracleBoundExceeded {
                m: bound,
                bound: EXTENDED_ORACLE_BOUND,
            });
        }
        Ok(Oracle { bound })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, m: usize) -> Result<()> {
        if m == 0 {
            return Err(Error::InvalidArgument("tile count must be positive".into()));
        }
        if m > self.bound {
            return Err(Error::OracleBoundExceeded {
                m,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// All rectangulations with exactly `m` tiles, keyed by canonical form.
    pub fn enumerate_rectangulations(&self, m: usize) -> Result<ClassMap> {
        self.check(m)?;
        let side = m as u32;
        let grids: Vec<(u32, u32)> = (1..=side)
            .flat_map(|p| (1..=side).map(move |q| (p, q)))
            .collect();
        let partial: Vec<ClassMap> = grids
            .into_par_iter()
            .map(|(p, q)| {
                let mut local = ClassMap::new();
                for_each_grid_tiling(p, q, m, |t| {
                    let sk = Skeleton::build(t);
                    let key = sk.encode();
                    local.entry(key).or_insert_with(|| ClassEntry {
                        stats: stats_without_symmetry(t, &sk),
                        representative: t.clone(),
                    });
                });
                local
            })
            .collect();

        let mut classes = ClassMap::new();
        for local in partial {
            for (key, entry) in local {
                classes.entry(key).or_insert(entry);
            }
        }
        classes.par_iter_mut().for_each(|(_, entry)| {
            entry.stats.symmetric = is_totally_symmetric(&entry.representative);
        });
        Ok(classes)
    }

    /// Rectangulations with `m` tiles and exactly `s` singular vertices.
    ///
    /// Such a class has `m - s - 1` walls, and placing them on distinct
    /// integer lines realizes it on a `p x q` grid with `p + q = m - s + 1`,
    /// so only those grids are swept. This reaches far beyond the general
    /// bound when `s` is close to the top of its support, since the grids
    /// then have barely more cells than tiles. Not subject to the oracle
    /// bound; the cost is governed by `p * q - m`.
    pub fn enumerate_with_singular_count(&self, m: usize, s: usize) -> Result<ClassMap> {
        if m == 0 || s >= m {
            return Err(Error::InvalidArgument(format!(
                "no rectangulations with m={m} and s={s}"
            )));
        }
        let lines = (m - s + 1) as u32;
        let grids: Vec<(u32, u32)> = (1..lines)
            .map(|p| (p, lines - p))
            .filter(|&(p, q)| (p * q) as usize >= m)
            .collect();
        let partial: Vec<ClassMap> = grids
            .into_par_iter()
            .map(|(p, q)| {
                let mut local = ClassMap::new();
                for_each_grid_tiling(p, q, m, |t| {
                    let sk = Skeleton::build(t);
                    let stats = stats_without_symmetry(t, &sk);
                    if stats.s == s {
                        local.entry(sk.encode()).or_insert_with(|| ClassEntry {
                            stats,
                            representative: t.clone(),
                        });
                    }
                });
                local
            })
            .collect();
        let mut classes = ClassMap::new();
        for local in partial {
            classes.extend(local);
        }
        classes.par_iter_mut().for_each(|(_, entry)| {
            entry.stats.symmetric = is_totally_symmetric(&entry.representative);
        });
        Ok(classes)
    }

    /// Number of totally symmetric rectangulations with `n` tiles.
    pub fn d8_symmetric_count(&self, n: usize) -> Result<BigUint> {
        let classes = self.enumerate_rectangulations(n)?;
        Ok(BigUint::from(
            classes.values().filter(|c| c.stats.symmetric).count(),
        ))
    }

    /// Compares the brute-force census with the table for every
    /// `m <= max_m`, checks per-class invariants, and compares alternating
    /// cell counts with the Euler characteristic.
    pub fn cross_check(&self, max_m: usize, table: &CountTable) -> Result<VerificationReport> {
        self.check(max_m)?;
        let mut report = VerificationReport::default();
        let mut alternating = BigInt::zero();
        for m in 1..=max_m {
            let classes = self.enumerate_rectangulations(m)?;
            report.classes_per_m.push((m, classes.len()));
            for (key, entry) in &classes {
                for v in entry.stats.invariant_violations() {
                    report
                        .invariant_violations
                        .push(format!("class {}: {v}", key.to_hex()));
                }
                let dim_parity = (entry.stats.m + entry.stats.s + 1) % 2;
                if dim_parity == 0 {
                    alternating += 1;
                } else {
                    alternating -= 1;
                }
            }
            let counts = census(&classes);
            for r in 0..m {
                for s in 0..m {
                    let oracle = counts.get(&(m, r, s)).cloned().unwrap_or_default();
                    let recursion = table.t_of_mrs(m, r, s)?;
                    if oracle != recursion {
                        report.mismatches.push(Mismatch {
                            m,
                            r,
                            s,
                            oracle,
                            recursion,
                        });
                    }
                }
            }
            let chi = euler_characteristic(m, table)?;
            report.euler_checks.push(EulerCheck {
                n: m,
                oracle: alternating.clone(),
                table: chi,
            });
        }
        Ok(report)
    }
}

/// Class counts grouped by `(m, r, s)`.
pub fn census(classes: &ClassMap) -> BTreeMap<(usize, usize, usize), BigUint> {
    let mut out: BTreeMap<(usize, usize, usize), BigUint> = BTreeMap::new();
    for entry in classes.values() {
        let st = entry.stats;
        *out.entry((st.m, st.r, st.s)).or_default() += 1u32;
    }
    out
}

/// Writes `m r s k e symmetric encoding-hex`, one class per line, sorted by
/// encoding.
pub fn write_class_dump<W: Write>(classes: &ClassMap, mut out: W) -> Result<()> {
    for (key, entry) in classes {
        let st = entry.stats;
        writeln!(
            out,
            "{} {} {} {} {} {} {}",
            st.m,
            st.r,
            st.s,
            st.k,
            st.e,
            st.symmetric as u8,
            key.to_hex()
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub m: usize,
    pub r: usize,
    pub s: usize,
    pub oracle: BigUint,
    pub recursion: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCheck {
    pub n: usize,
    pub oracle: BigInt,
    pub table: BigInt,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub classes_per_m: Vec<(usize, usize)>,
    pub mismatches: Vec<Mismatch>,
    pub invariant_violations: Vec<String>,
    pub euler_checks: Vec<EulerCheck>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
            && self.invariant_violations.is_empty()
            && self.euler_checks.iter().all(|c| c.oracle == c.table)
    }

    pub fn total_classes(&self) -> usize {
        self.classes_per_m.iter().map(|&(_, n)| n).sum()
    }
}
