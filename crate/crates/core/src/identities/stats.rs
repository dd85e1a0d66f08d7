use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_two_size, FrequencyPartition, TwoSizePartition};

/// Dyson's rank: largest part minus number of parts.
pub fn dyson_rank(p: &TwoSizePartition) -> i64 {
    p.large_part() as i64 - (p.large_mult() + p.small_mult()) as i64
}

/// `λ₁ + λ₂ − 2m₁ − m₂`.
pub fn rank2(p: &TwoSizePartition) -> i64 {
    (p.large_part() + p.small_part()) as i64 - (2 * p.large_mult() + p.small_mult()) as i64
}

/// Ordinary-partition crank: the largest part if there are no ones,
/// otherwise (number of parts larger than the count of ones) minus the
/// count of ones.
pub fn crank(p: &FrequencyPartition) -> i64 {
    let ones = p.multiplicity_of(1);
    if ones == 0 {
        return p.largest_part() as i64;
    }
    let above: u64 = p
        .pairs()
        .iter()
        .filter(|&&(size, _)| size > ones)
        .map(|&(_, m)| m)
        .sum();
    above as i64 - ones as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Rank,
    Rank2,
    Crank,
}

impl Statistic {
    pub const ALL: [Statistic; 3] = [Statistic::Rank, Statistic::Rank2, Statistic::Crank];

    pub fn as_str(self) -> &'static str {
        match self {
            Statistic::Rank => "rk",
            Statistic::Rank2 => "rk2",
            Statistic::Crank => "crank",
        }
    }

    pub fn evaluate(self, p: &TwoSizePartition) -> i64 {
        match self {
            Statistic::Rank => dyson_rank(p),
            Statistic::Rank2 => rank2(p),
            Statistic::Crank => crank(&FrequencyPartition::from(*p)),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Counts of `partitions` by statistic value reduced to `0..modulus`.
/// Every residue appears as a key.
pub fn residue_census(
    partitions: &[TwoSizePartition],
    stat: Statistic,
    modulus: u64,
) -> Result<BTreeMap<u64, u64>> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut counts: BTreeMap<u64, u64> = (0..modulus).map(|r| (r, 0)).collect();
    for p in partitions {
        let r = stat.evaluate(p).rem_euclid(modulus as i64) as u64;
        *counts.get_mut(&r).expect("every residue is present") += 1;
    }
    Ok(counts)
}

pub fn rank_class_census(n: u64, stat: Statistic, modulus: u64) -> Result<BTreeMap<u64, u64>> {
    residue_census(&enumerate_two_size(n), stat, modulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(s: &str) -> TwoSizePartition {
        s.parse().unwrap()
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(dyson_rank(&tp("5^1 1^1")), 3);
        assert_eq!(dyson_rank(&tp("2^1 1^4")), -3);
        assert_eq!(dyson_rank(&tp("3^4 2^1")), -2);
        assert_eq!(rank2(&tp("5^1 1^1")), 3);
        assert_eq!(rank2(&tp("4^1 2^1")), 3);
        assert_eq!(rank2(&tp("3^4 2^1")), -4);
        assert_eq!(crank(&"4^1 2^1".parse().unwrap()), 4);
        assert_eq!(crank(&"5^1 1^1".parse().unwrap()), 0);
        assert_eq!(crank(&"2^1 1^4".parse().unwrap()), -4);
        assert_eq!(crank(&"7".parse().unwrap()), 7);
        assert_eq!(crank(&"1^3".parse().unwrap()), -3);
        assert_eq!(Statistic::Crank.evaluate(&tp("3^2 1^1")), 1);
    }

    #[test]
    fn residue_census_examples() {
        // rk₂ of the six partitions of 6 is 3, 3, 1, −1, −3, −3
        let six = rank_class_census(6, Statistic::Rank2, 2).unwrap();
        assert_eq!(six.into_iter().collect::<Vec<_>>(), vec![(0, 0), (1, 6)]);
        let values: Vec<i64> = enumerate_two_size(6).iter().map(rank2).collect();
        assert_eq!(values, [3, 3, 1, -1, -3, -3]);
        for stat in Statistic::ALL {
            let one = rank_class_census(30, stat, 1).unwrap();
            assert_eq!(
                one.into_iter().collect::<Vec<_>>(),
                vec![(0, enumerate_two_size(30).len() as u64)]
            );
        }
        let fourteen = rank_class_census(14, Statistic::Rank2, 2).unwrap();
        assert!(fourteen.values().all(|c| c % 4 == 0), "{fourteen:?}");
        assert_eq!(fourteen.values().sum::<u64>(), 44);
        assert_eq!(
            rank_class_census(6, Statistic::Rank, 0),
            Err(Error::ZeroModulus)
        );
    }

    #[test]
    fn names() {
        for st in Statistic::ALL {
            assert_eq!(st.as_str().parse::<Statistic>().unwrap(), st);
        }
        assert!("dyson".parse::<Statistic>().is_err());
    }
}
