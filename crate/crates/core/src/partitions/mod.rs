//! Partitions in frequency notation, with special support for partitions
//! into exactly two part sizes.

mod enumerate;
mod series;
mod text;

pub use enumerate::{count_k_sizes, enumerate_k_sizes, enumerate_two_size, nu2_closed_form};
pub use series::{nu_k_series, TruncatedSeries};
pub use text::{format_partition, parse_partition};

use std::fmt;

use crate::error::{Error, Result};

/// A partition written as `(part_size, multiplicity)` pairs with strictly
/// decreasing part sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrequencyPartition {
    pairs: Vec<(u64, u64)>,
    weight: u64,
}

impl FrequencyPartition {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        let mut weight = 0u64;
        for (i, &(part, mult)) in pairs.iter().enumerate() {
            if part == 0 || mult == 0 {
                return Err(Error::InvalidPartition(format!(
                    "part {part} with multiplicity {mult}"
                )));
            }
            if i > 0 && pairs[i - 1].0 <= part {
                return Err(Error::InvalidPartition(format!(
                    "part sizes {} then {part} are not strictly decreasing",
                    pairs[i - 1].0
                )));
            }
            weight = part
                .checked_mul(mult)
                .and_then(|w| w.checked_add(weight))
                .ok_or(Error::Overflow("partition weight"))?;
        }
        Ok(FrequencyPartition { pairs, weight })
    }

    /// Builds a partition from its parts listed in any order.
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut pairs: Vec<(u64, u64)> = Vec::new();
        for part in sorted {
            match pairs.last_mut() {
                Some((size, mult)) if *size == part => *mult += 1,
                _ => pairs.push((part, 1)),
            }
        }
        Self::new(pairs)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Number of distinct part sizes.
    pub fn num_sizes(&self) -> usize {
        self.pairs.len()
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn largest_part(&self) -> u64 {
        self.pairs[0].0
    }

    pub fn num_parts(&self) -> u64 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, part: u64) -> u64 {
        self.pairs
            .iter()
            .find(|&&(s, _)| s == part)
            .map_or(0, |&(_, m)| m)
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs
            .iter()
            .flat_map(|&(s, m)| std::iter::repeat_n(s, m as usize))
    }

    /// Reflection of the Ferrers diagram across its main diagonal.
    ///
    /// Size `s_i` with cumulative multiplicity `M_i = m_1 + ... + m_i`
    /// contributes the part `M_i` repeated `s_i - s_{i+1}` times.
    pub fn transpose(&self) -> FrequencyPartition {
        let k = self.pairs.len();
        let mut cumulative = Vec::with_capacity(k);
        let mut running = 0u64;
        for &(_, m) in &self.pairs {
            running += m;
            cumulative.push(running);
        }
        let pairs = (0..k)
            .rev()
            .map(|i| {
                let next = if i + 1 < k { self.pairs[i + 1].0 } else { 0 };
                (cumulative[i], self.pairs[i].0 - next)
            })
            .collect();
        FrequencyPartition {
            pairs,
            weight: self.weight,
        }
    }
}

pub fn weight(p: &FrequencyPartition) -> u64 {
    p.weight()
}

pub fn is_self_conjugate(p: &FrequencyPartition) -> bool {
    p.transpose() == *p
}

/// A partition `λ₁^m₁ λ₂^m₂` with exactly two part sizes, `λ₁ > λ₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSizePartition {
    large_part: u64,
    large_mult: u64,
    small_part: u64,
    small_mult: u64,
}

impl TwoSizePartition {
    pub fn new(large_part: u64, large_mult: u64, small_part: u64, small_mult: u64) -> Result<Self> {
        if small_part == 0 || large_mult == 0 || small_mult == 0 || large_part <= small_part {
            return Err(Error::InvalidPartition(format!(
                "({large_part}, {large_mult}, {small_part}, {small_mult}) needs λ₁ > λ₂ ≥ 1 and m₁, m₂ ≥ 1"
            )));
        }
        let p = TwoSizePartition {
            large_part,
            large_mult,
            small_part,
            small_mult,
        };
        p.checked_weight()?;
        Ok(p)
    }

    /// Builds from two `(part, multiplicity)` pairs in either order.
    pub fn from_pairs(a: (u64, u64), b: (u64, u64)) -> Result<Self> {
        let (first, second) = if a.0 >= b.0 { (a, b) } else { (b, a) };
        if first.0 == second.0 {
            return Err(Error::InvalidPartition(format!(
                "both pairs have part size {}",
                first.0
            )));
        }
        Self::new(first.0, first.1, second.0, second.1)
    }

    fn checked_weight(&self) -> Result<u64> {
        self.large_part
            .checked_mul(self.large_mult)
            .zip(self.small_part.checked_mul(self.small_mult))
            .and_then(|(a, b)| a.checked_add(b))
            .ok_or(Error::Overflow("partition weight"))
    }

    pub fn large_part(&self) -> u64 {
        self.large_part
    }

    pub fn large_mult(&self) -> u64 {
        self.large_mult
    }

    pub fn small_part(&self) -> u64 {
        self.small_part
    }

    pub fn small_mult(&self) -> u64 {
        self.small_mult
    }

    /// `[(λ₁, m₁), (λ₂, m₂)]`.
    pub fn pairs(&self) -> [(u64, u64); 2] {
        [
            (self.large_part, self.large_mult),
            (self.small_part, self.small_mult),
        ]
    }

    /// `[λ₁, m₁, λ₂, m₂]`.
    pub fn quadruple(&self) -> [u64; 4] {
        [
            self.large_part,
            self.large_mult,
            self.small_part,
            self.small_mult,
        ]
    }

    pub fn weight(&self) -> u64 {
        // validated on construction
        self.large_part * self.large_mult + self.small_part * self.small_mult
    }
}

impl From<TwoSizePartition> for FrequencyPartition {
    fn from(p: TwoSizePartition) -> Self {
        FrequencyPartition {
            pairs: p.pairs().to_vec(),
            weight: p.weight(),
        }
    }
}

impl TryFrom<&FrequencyPartition> for TwoSizePartition {
    type Error = Error;

    fn try_from(p: &FrequencyPartition) -> Result<Self> {
        match *p.pairs() {
            [(l1, m1), (l2, m2)] => TwoSizePartition::new(l1, m1, l2, m2),
            _ => Err(Error::InvalidPartition(format!(
                "{p} has {} part sizes, expected 2",
                p.num_sizes()
            ))),
        }
    }
}

impl TryFrom<FrequencyPartition> for TwoSizePartition {
    type Error = Error;

    fn try_from(p: FrequencyPartition) -> Result<Self> {
        TwoSizePartition::try_from(&p)
    }
}

impl fmt::Display for TwoSizePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{} {}^{}",
            self.large_part, self.large_mult, self.small_part, self.small_mult
        )
    }
}
