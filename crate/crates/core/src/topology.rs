//! Cell-complex invariants of the space of tilings by at most `n` rectangles.
//!
//! Each rectangulation with `m` tiles and `s` singular vertices is an open
//! cell of dimension `m - s - 1`. The space is homotopy equivalent to a
//! wedge of `k_n` spheres of dimension `n - 1`, so the Euler characteristic
//! determines `k_n`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::recursion::CountTable;

pub fn cell_dimension(m: usize, s: usize) -> Result<usize> {
    if m == 0 || s >= m {
        return Err(Error::InvalidArgument(format!(
            "no cell with m={m} tiles and s={s} singular vertices"
        )));
    }
    Ok(m - s - 1)
}

/// `χ = Σ_{m ≤ n} Σ_s (-1)^(m-s-1) t(m, s)`.
pub fn euler_characteristic(n: usize, table: &CountTable) -> Result<BigInt> {
    let mut chi = BigInt::zero();
    for m in 1..=n {
        for s in 0..m {
            let t = BigInt::from(table.t_of_ms(m, s)?);
            if (m - s - 1) % 2 == 0 {
                chi += t;
            } else {
                chi -= t;
            }
        }
    }
    Ok(chi)
}

/// Number of `(n-1)`-spheres in the wedge: `(-1)^(n-1) (χ - 1)`.
pub fn wedge_count(n: usize, table: &CountTable) -> Result<BigUint> {
    let chi = euler_characteristic(n, table)?;
    wedge_from_euler(n, &chi)
}

fn wedge_from_euler(n: usize, chi: &BigInt) -> Result<BigUint> {
    let mut k = chi - BigInt::one();
    if (n - 1) % 2 == 1 {
        k = -k;
    }
    match k.sign() {
        Sign::Minus => Err(Error::NegativeWedgeCount {
            n,
            value: k.to_string(),
        }),
        _ => Ok(k.magnitude().clone()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeReport {
    pub n: usize,
    pub euler: BigInt,
    pub k: BigUint,
}

impl WedgeReport {
    pub fn compute(n: usize, table: &CountTable) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let euler = euler_characteristic(n, table)?;
        let k = wedge_from_euler(n, &euler)?;
        Ok(WedgeReport { n, euler, k })
    }

    /// Checks `χ = 1 + (-1)^(n-1) k`.
    pub fn is_consistent(&self) -> bool {
        let k = BigInt::from(self.k.clone());
        let signed = if self.n % 2 == 1 { k } else { -k };
        self.euler == BigInt::one() + signed
    }
}
