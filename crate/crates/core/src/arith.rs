//! Elementary arithmetic: 2-adic decomposition and divisor functions.

use crate::error::{Error, Result};

/// `m = 2^valuation * odd_part` with `odd_part` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OddEvenDecomposition {
    pub valuation: u32,
    pub odd_part: u64,
}

impl OddEvenDecomposition {
    /// Rebuilds `2^valuation * odd_part`, failing on overflow.
    pub fn recompose(self) -> Result<u64> {
        pow2_times(self.valuation, self.odd_part)
    }
}

/// `2^k * t` with overflow checking.
pub fn pow2_times(k: u32, t: u64) -> Result<u64> {
    1u64.checked_shl(k)
        .and_then(|p| p.checked_mul(t))
        .ok_or(Error::Overflow("2^k * t"))
}

pub fn decompose_pow2(m: u64) -> Result<OddEvenDecomposition> {
    if m == 0 {
        return Err(Error::Zero("2-adic decomposition"));
    }
    let valuation = m.trailing_zeros();
    Ok(OddEvenDecomposition {
        valuation,
        odd_part: m >> valuation,
    })
}

/// Largest odd divisor of `m`.
pub fn odd_part(m: u64) -> Result<u64> {
    decompose_pow2(m).map(|d| d.odd_part)
}

/// Positive divisors of `n` in ascending order, by trial division.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero("divisors"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `d(n)`.
pub fn divisor_count(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Zero("divisor count"));
    }
    let mut count = 0;
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            count += if d == n / d { 1 } else { 2 };
        }
        d += 1;
    }
    Ok(count)
}

/// `σ₁(n)`.
pub fn divisor_sum(n: u64) -> Result<u64> {
    divisors(n)?
        .into_iter()
        .try_fold(0u64, |acc, d| acc.checked_add(d))
        .ok_or(Error::Overflow("divisor sum"))
}

/// Divisor lists for every integer in `1..=limit`, built by a sieve.
///
/// Used where many divisor lists of small numbers are needed at once.
#[derive(Debug, Clone)]
pub struct DivisorTable {
    lists: Vec<Vec<u64>>,
}

impl DivisorTable {
    pub fn new(limit: u64) -> Self {
        let limit = limit as usize;
        let mut lists = vec![Vec::new(); limit + 1];
        for d in 1..=limit {
            for multiple in (d..=limit).step_by(d) {
                lists[multiple].push(d as u64);
            }
        }
        DivisorTable { lists }
    }

    pub fn limit(&self) -> u64 {
        (self.lists.len() - 1) as u64
    }

    /// Ascending divisors of `n`; empty for `n = 0` or `n` past the limit.
    pub fn divisors(&self, n: u64) -> &[u64] {
        self.lists.get(n as usize).map_or(&[], Vec::as_slice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        let d = |m| decompose_pow2(m).unwrap();
        assert_eq!(
            d(1),
            OddEvenDecomposition {
                valuation: 0,
                odd_part: 1
            }
        );
        assert_eq!(
            d(12),
            OddEvenDecomposition {
                valuation: 2,
                odd_part: 3
            }
        );
        assert_eq!(
            d(6),
            OddEvenDecomposition {
                valuation: 1,
                odd_part: 3
            }
        );
        assert_eq!(d(1 << 63).valuation, 63);
        assert_eq!(decompose_pow2(0), Err(Error::Zero("2-adic decomposition")));
    }

    #[test]
    fn decomposition_reconstructs() {
        for m in 1..=1_000_000u64 {
            let d = decompose_pow2(m).unwrap();
            assert_eq!(d.odd_part % 2, 1);
            assert_eq!(d.recompose().unwrap(), m);
        }
    }

    #[test]
    fn pow2_times_overflow() {
        assert_eq!(pow2_times(3, 5), Ok(40));
        assert!(pow2_times(64, 1).is_err());
        assert!(pow2_times(63, 3).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(14).unwrap(), vec![1, 2, 7, 14]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisor_count(6), Ok(4));
        assert_eq!(divisor_count(1), Ok(1));
        assert_eq!(divisor_count(14), Ok(4));
        assert_eq!(divisor_sum(1), Ok(1));
        assert_eq!(divisor_sum(7), Ok(8));
        assert_eq!(divisor_sum(14), Ok(24));
        assert!(divisors(0).is_err());
        assert!(divisor_count(0).is_err());
        assert!(divisor_sum(0).is_err());
    }

    #[test]
    fn counts_and_sums_agree_with_lists() {
        for n in 1..=10_000u64 {
            let ds = divisors(n).unwrap();
            assert!(ds.windows(2).all(|w| w[0] < w[1]));
            assert_eq!((ds[0], *ds.last().unwrap()), (1, n));
            assert_eq!(divisor_count(n).unwrap(), ds.len() as u64);
            assert_eq!(divisor_sum(n).unwrap(), ds.iter().sum::<u64>());
        }
    }

    #[test]
    fn sieve_matches_trial_division() {
        let table = DivisorTable::new(3000);
        assert_eq!(table.limit(), 3000);
        assert!(table.divisors(0).is_empty());
        assert!(table.divisors(3001).is_empty());
        for n in 1..=3000 {
            assert_eq!(table.divisors(n), divisors(n).unwrap().as_slice());
        }
    }

    #[test]
    fn sixteen_j_plus_fourteen_divisibility() {
        for j in 0..=500u64 {
            let n = 16 * j + 14;
            assert_eq!(divisor_count(n).unwrap() % 4, 0, "d({n})");
            assert_eq!(divisor_sum(n).unwrap() % 8, 0, "sigma({n})");
        }
    }
}
