use std::fmt;
use std::str::FromStr;

use super::report::IdentityReport;
use super::stats::{residue_census, Statistic};
use crate::error::{Error, Result};
use crate::partitions::enumerate_two_size;

/// The progression `{stride·j + offset : j ≥ 0}` together with the modulus a
/// divisibility claim about it refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CongruenceFamily {
    stride: u64,
    offset: u64,
    modulus: u64,
}

impl CongruenceFamily {
    pub fn new(stride: u64, offset: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if stride == 0 || offset >= stride {
            return Err(Error::UnknownName(format!("{stride}n+{offset}")));
        }
        Ok(CongruenceFamily {
            stride,
            offset,
            modulus,
        })
    }

    /// The five progressions on which `ν₂` is known to be ≡ 0 (mod 4).
    pub fn known() -> [CongruenceFamily; 5] {
        [(16, 14), (36, 30), (72, 42), (196, 70), (252, 114)].map(|(a, b)| CongruenceFamily {
            stride: a,
            offset: b,
            modulus: 4,
        })
    }

    pub fn stride(&self) -> u64 {
        self.stride
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn member(&self, j: u64) -> u64 {
        self.stride * j + self.offset
    }

    pub fn contains(&self, n: u64) -> bool {
        n % self.stride == self.offset
    }
}

impl fmt::Display for CongruenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}n+{}", self.stride, self.offset)
    }
}

/// Parses `A,B` or `A,B,m` (modulus defaults to 4).
impl FromStr for CongruenceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let numbers: Vec<u64> = s
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::UnknownName(s.to_string()))?;
        match numbers[..] {
            [a, b] => CongruenceFamily::new(a, b, 4),
            [a, b, m] => CongruenceFamily::new(a, b, m),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// For each member `stride·j + offset` with `j ≤ index_max`, reports whether
/// the numbers of two-size partitions with `stat` even and with `stat` odd
/// are both divisible by the family modulus.
///
/// Each report also carries the residue counts of `stat` modulo the family
/// modulus and an exploratory flag `zero_class_divisible` telling whether
/// the residue-0 count is itself divisible by the modulus. The flag does not
/// affect `holds`.
pub fn check_conjecture(
    family: &CongruenceFamily,
    stat: Statistic,
    index_max: u64,
) -> Result<Vec<IdentityReport>> {
    (0..=index_max)
        .map(|j| check_member(family, stat, j))
        .collect()
}

fn check_member(family: &CongruenceFamily, stat: Statistic, j: u64) -> Result<IdentityReport> {
    let n = family.member(j);
    let m = family.modulus();
    let partitions = enumerate_two_size(n);
    let parity = residue_census(&partitions, stat, 2)?;
    let (even, odd) = (parity[&0], parity[&1]);
    let residues = residue_census(&partitions, stat, m)?;

    let mut values = vec![("j", j as i64), ("even", even as i64), ("odd", odd as i64)];
    let names: Vec<String> = residues.keys().map(|r| format!("res{r}")).collect();
    for (name, &count) in names.iter().zip(residues.values()) {
        values.push((name, count as i64));
    }
    let zero_class_divisible = residues[&0] % m == 0;
    values.push(("zero_class_divisible", zero_class_divisible as i64));

    let holds = even % m == 0 && odd % m == 0;
    Ok(IdentityReport::new(
        format!("conjecture:{stat}:{family}"),
        n,
        values,
        holds,
        || format!("even={even} odd={odd} not both ≡ 0 (mod {m})"),
        Vec::new(),
    ))
}
