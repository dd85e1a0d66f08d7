//! Parity classes of two-size partitions of weights ≡ 2 (mod 4).
//!
//! A partition `λ₁^m₁ λ₂^m₂` belongs to the class spelled by the parities of
//! `(λ₁, m₁, λ₂, m₂)`, e.g. `6^1 4^2` is `EOEE`. Outside `OOOO` exactly one
//! of the products `λᵢmᵢ` is ≡ 2 (mod 4); the mark records which one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::odd_part;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_two_size, TwoSizePartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: u64) -> Parity {
        if x.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn letter(self) -> char {
        match self {
            Parity::Even => 'E',
            Parity::Odd => 'O',
        }
    }
}

/// Parities of `(λ₁, m₁, λ₂, m₂)`. Orders like its four-letter name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityClass([Parity; 4]);

const fn class(name: &[u8; 4]) -> ParityClass {
    let mut letters = [Parity::Even; 4];
    let mut i = 0;
    while i < 4 {
        if name[i] == b'O' {
            letters[i] = Parity::Odd;
        }
        i += 1;
    }
    ParityClass(letters)
}

impl ParityClass {
    pub const OOOO: ParityClass = class(b"OOOO");
    pub const EOOE: ParityClass = class(b"EOOE");
    pub const EEOE: ParityClass = class(b"EEOE");
    pub const EOEO: ParityClass = class(b"EOEO");
    pub const OEEE: ParityClass = class(b"OEEE");
    pub const EEEO: ParityClass = class(b"EEEO");
    pub const EOEE: ParityClass = class(b"EOEE");
    pub const OEOE: ParityClass = class(b"OEOE");
    pub const OEEO: ParityClass = class(b"OEEO");

    /// The nine classes that occur for weights ≡ 2 (mod 4), listed as
    /// conjugate pairs: `EOOE/OOOO`, `EEOE/EOEO`, `OEEE/EEEO`, `EOEE/OEOE`,
    /// then the self-paired `OEEO`.
    pub const ADMISSIBLE: [ParityClass; 9] = [
        Self::EOOE,
        Self::OOOO,
        Self::EEOE,
        Self::EOEO,
        Self::OEEE,
        Self::EEEO,
        Self::EOEE,
        Self::OEOE,
        Self::OEEO,
    ];

    pub fn of(p: &TwoSizePartition) -> ParityClass {
        ParityClass(p.quadruple().map(Parity::of))
    }

    pub fn letters(self) -> [Parity; 4] {
        self.0
    }

    pub fn is_admissible(self) -> bool {
        Self::ADMISSIBLE.contains(&self)
    }

    /// Class of the conjugates of this class's members.
    pub fn conjugate(self) -> Option<ParityClass> {
        let i = Self::ADMISSIBLE.iter().position(|&c| c == self)?;
        Some(match i {
            8 => self,
            _ => Self::ADMISSIBLE[i ^ 1],
        })
    }

    /// Marks a member of this class can carry.
    pub fn possible_marks(self) -> Vec<Option<Pair>> {
        if self == Self::OOOO {
            return vec![None];
        }
        if !self.is_admissible() {
            return Vec::new();
        }
        let [a, b, c, d] = self.0;
        let both_even = |x: Parity, y: Parity| x == Parity::Even && y == Parity::Even;
        if both_even(a, b) {
            vec![Some(Pair::Second)]
        } else if both_even(c, d) {
            vec![Some(Pair::First)]
        } else {
            vec![Some(Pair::First), Some(Pair::Second)]
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|p| write!(f, "{}", p.letter()))
    }
}

impl FromStr for ParityClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes: [u8; 4] = s
            .as_bytes()
            .try_into()
            .map_err(|_| Error::UnknownName(s.to_string()))?;
        if !bytes.iter().all(|&b| b == b'O' || b == b'E') {
            return Err(Error::UnknownName(s.to_string()));
        }
        Ok(class(&bytes))
    }
}

/// One of the two part-multiplicity pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    First,
    Second,
}

impl Pair {
    pub fn index(self) -> usize {
        match self {
            Pair::First => 1,
            Pair::Second => 2,
        }
    }

    pub fn other(self) -> Pair {
        match self {
            Pair::First => Pair::Second,
            Pair::Second => Pair::First,
        }
    }

    /// `(part, multiplicity)` of this pair in `p`.
    pub fn of(self, p: &TwoSizePartition) -> (u64, u64) {
        p.pairs()[self.index() - 1]
    }
}

/// A parity class together with the pair whose product is ≡ 2 (mod 4).
/// `mark` is `None` exactly for `OOOO`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedParityClass {
    pub class: ParityClass,
    pub mark: Option<Pair>,
}

impl MarkedParityClass {
    pub fn new(class: ParityClass, mark: Option<Pair>) -> Result<Self> {
        let marked = MarkedParityClass { class, mark };
        if class.possible_marks().contains(&mark) {
            Ok(marked)
        } else {
            Err(Error::InadmissibleClass(marked.to_string()))
        }
    }

    /// The 13 marked classes that can occur, sorted by name.
    pub fn all_admissible() -> Vec<MarkedParityClass> {
        let mut all: Vec<_> = ParityClass::ADMISSIBLE
            .iter()
            .flat_map(|&class| {
                class
                    .possible_marks()
                    .into_iter()
                    .map(move |mark| MarkedParityClass { class, mark })
            })
            .collect();
        all.sort();
        all
    }
}

impl fmt::Display for MarkedParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mark {
            Some(pair) => write!(f, "{}:{}", self.class, pair.index()),
            None => write!(f, "{}", self.class),
        }
    }
}

impl FromStr for MarkedParityClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, mark) = match s.split_once(':') {
            Some((name, "1")) => (name, Some(Pair::First)),
            Some((name, "2")) => (name, Some(Pair::Second)),
            Some(_) => return Err(Error::UnknownName(s.to_string())),
            None => (s, None),
        };
        MarkedParityClass::new(name.parse()?, mark)
    }
}

pub fn classify(p: &TwoSizePartition) -> Result<MarkedParityClass> {
    let weight = p.weight();
    if weight % 4 != 2 {
        return Err(Error::WeightNotTwoModFour(weight));
    }
    let class = ParityClass::of(p);
    let mark = if class == ParityClass::OOOO {
        None
    } else if (p.large_part() * p.large_mult()) % 4 == 2 {
        Some(Pair::First)
    } else {
        Some(Pair::Second)
    };
    Ok(MarkedParityClass { class, mark })
}

/// Where the conjugates of a marked class's members land.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassImage {
    /// Every conjugate lies in this marked class.
    Exact(MarkedParityClass),
    /// Conjugates lie in this class, with either mark depending on the
    /// member (the parities alone do not decide it).
    Split(ParityClass),
}

impl ClassImage {
    pub fn contains(&self, marked: &MarkedParityClass) -> bool {
        match *self {
            ClassImage::Exact(c) => c == *marked,
            ClassImage::Split(class) => class == marked.class,
        }
    }
}

/// Conjugation sends `λ₁^m₁ λ₂^m₂` to `(m₁+m₂)^λ₂ m₁^(λ₁−λ₂)`, so it swaps the
/// roles of `m₁` and `λ₂`. In `OEEO` that moves the 2 (mod 4) factor to the
/// other pair; when the target class admits a single mark the image is
/// exact; otherwise it splits.
pub fn conjugate_class(c: &MarkedParityClass) -> Result<ClassImage> {
    if !c.class.possible_marks().contains(&c.mark) {
        return Err(Error::InadmissibleClass(c.to_string()));
    }
    let target = c
        .class
        .conjugate()
        .expect("admissible classes have a conjugate class");
    if target == ParityClass::OEEO {
        let mark = c.mark.map(Pair::other);
        return Ok(ClassImage::Exact(MarkedParityClass {
            class: target,
            mark,
        }));
    }
    match target.possible_marks().as_slice() {
        &[mark] => Ok(ClassImage::Exact(MarkedParityClass {
            class: target,
            mark,
        })),
        _ => Ok(ClassImage::Split(target)),
    }
}

/// Counts of the two-size partitions of one weight by marked class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    n: u64,
    counts: BTreeMap<MarkedParityClass, u64>,
}

impl ClassCensus {
    pub fn from_partitions(n: u64, partitions: &[TwoSizePartition]) -> Result<Self> {
        let mut counts: BTreeMap<_, _> = MarkedParityClass::all_admissible()
            .into_iter()
            .map(|c| (c, 0))
            .collect();
        for p in partitions {
            *counts.entry(classify(p)?).or_insert(0) += 1;
        }
        Ok(ClassCensus { n, counts })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn count(&self, marked: &MarkedParityClass) -> u64 {
        self.counts.get(marked).copied().unwrap_or(0)
    }

    /// Count of a class summed over its marks.
    pub fn class_total(&self, class: ParityClass) -> u64 {
        self.counts
            .iter()
            .filter(|(c, _)| c.class == class)
            .map(|(_, &k)| k)
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// All marked classes (including zero counts), sorted by name.
    pub fn iter(&self) -> impl Iterator<Item = (MarkedParityClass, u64)> + '_ {
        self.counts.iter().map(|(&c, &k)| (c, k))
    }
}

pub fn class_census(n: u64) -> Result<ClassCensus> {
    if n % 4 != 2 {
        return Err(Error::WeightNotTwoModFour(n));
    }
    ClassCensus::from_partitions(n, &enumerate_two_size(n))
}

/// Pairs `i` with `ℓ(λᵢ) ≢ ℓ(mᵢ) (mod 8)`.
pub fn odd_pair_indices(p: &TwoSizePartition) -> Vec<Pair> {
    [Pair::First, Pair::Second]
        .into_iter()
        .filter(|pair| {
            let (part, mult) = pair.of(p);
            // both are positive for a valid partition
            odd_part(part).unwrap() % 8 != odd_part(mult).unwrap() % 8
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::conjugate_two_size;

    fn tp(s: &str) -> TwoSizePartition {
        s.parse().unwrap()
    }

    fn mc(s: &str) -> MarkedParityClass {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&tp("6^1 4^2")).unwrap(), mc("EOEE:1"));
        assert_eq!(classify(&tp("6^1 1^8")).unwrap(), mc("EOOE:1"));
        assert_eq!(classify(&tp("4^1 1^2")).unwrap(), mc("EOOE:2"));
        assert_eq!(classify(&tp("5^1 1^1")).unwrap(), mc("OOOO"));
        assert_eq!(classify(&tp("4^1 1^4")), Err(Error::WeightNotTwoModFour(8)));
    }

    #[test]
    fn names_roundtrip() {
        for c in MarkedParityClass::all_admissible() {
            assert_eq!(mc(&c.to_string()), c);
        }
        assert_eq!(MarkedParityClass::all_admissible().len(), 13);
        assert!("EEOE:1".parse::<MarkedParityClass>().is_err());
        assert!("OOOO:1".parse::<MarkedParityClass>().is_err());
        assert!("EOOE".parse::<MarkedParityClass>().is_err());
        assert!("EEEE".parse::<MarkedParityClass>().is_err());
        assert!("EOEE:3".parse::<MarkedParityClass>().is_err());
        assert!("EOXE".parse::<ParityClass>().is_err());
        assert!("EOE".parse::<ParityClass>().is_err());
    }

    #[test]
    fn sixteen_syntactic_classes_nine_admissible() {
        let mut admissible = 0;
        for bits in 0..16u8 {
            let name: String = (0..4)
                .map(|i| if bits >> (3 - i) & 1 == 1 { 'O' } else { 'E' })
                .collect();
            let c: ParityClass = name.parse().unwrap();
            assert_eq!(c.to_string(), name);
            if c.is_admissible() {
                admissible += 1;
                assert_eq!(c.conjugate().unwrap().conjugate(), Some(c));
            } else {
                assert_eq!(c.conjugate(), None);
                assert!(c.possible_marks().is_empty());
            }
        }
        assert_eq!(admissible, 9);
    }

    #[test]
    fn conjugate_class_examples() {
        assert_eq!(
            conjugate_class(&mc("EOEE:1")),
            Ok(ClassImage::Split(ParityClass::OEOE))
        );
        assert_eq!(
            conjugate_class(&mc("OEOE:2")),
            Ok(ClassImage::Exact(mc("EOEE:1")))
        );
        assert_eq!(
            conjugate_class(&mc("OEEO:1")),
            Ok(ClassImage::Exact(mc("OEEO:2")))
        );
        assert_eq!(
            conjugate_class(&mc("OEEO:2")),
            Ok(ClassImage::Exact(mc("OEEO:1")))
        );
        assert_eq!(
            conjugate_class(&mc("OOOO")),
            Ok(ClassImage::Split(ParityClass::EOOE))
        );
        assert_eq!(
            conjugate_class(&mc("EOOE:2")),
            Ok(ClassImage::Exact(mc("OOOO")))
        );
        let bogus = MarkedParityClass {
            class: ParityClass::EEOE,
            mark: Some(Pair::First),
        };
        assert!(conjugate_class(&bogus).is_err());
    }

    #[test]
    fn class_images_match_actual_conjugation() {
        for n in (2..=600).step_by(4) {
            for p in enumerate_two_size(n) {
                let before = classify(&p).unwrap();
                let after = classify(&conjugate_two_size(&p)).unwrap();
                let image = conjugate_class(&before).unwrap();
                assert!(
                    image.contains(&after),
                    "{p}: {before} -> {after}, predicted {image:?}"
                );
            }
        }
    }

    #[test]
    fn census_six_and_fourteen() {
        let six = class_census(6).unwrap();
        let nonzero: Vec<(String, u64)> = six
            .iter()
            .filter(|&(_, k)| k > 0)
            .map(|(c, k)| (c.to_string(), k))
            .collect();
        assert_eq!(
            nonzero,
            [
                ("EEOE:2".to_string(), 1),
                ("EOEO:2".to_string(), 1),
                ("EOOE:1".to_string(), 1),
                ("EOOE:2".to_string(), 1),
                ("OOOO".to_string(), 2),
            ]
        );
        assert_eq!(six.total(), 6);

        let c = class_census(14).unwrap();
        let expected = [
            (ParityClass::OOOO, 10),
            (ParityClass::EOOE, 10),
            (ParityClass::EOEO, 6),
            (ParityClass::EEOE, 6),
            (ParityClass::OEEE, 2),
            (ParityClass::EEEO, 2),
            (ParityClass::OEOE, 3),
            (ParityClass::EOEE, 3),
            (ParityClass::OEEO, 2),
        ];
        for (class, count) in expected {
            assert_eq!(c.class_total(class), count, "{class}");
        }
        assert_eq!(c.total(), 44);
        assert_eq!(c.count(&mc("OEEO:1")), 1);
        assert_eq!(c.count(&mc("OEEO:2")), 1);
        let oeeo: Vec<String> = enumerate_two_size(14)
            .into_iter()
            .filter(|p| ParityClass::of(p) == ParityClass::OEEO)
            .map(|p| format!("{}={}", p, classify(&p).unwrap()))
            .collect();
        assert_eq!(oeeo, ["5^2 4^1=OEEO:1", "3^4 2^1=OEEO:2"]);
        assert_eq!(class_census(8), Err(Error::WeightNotTwoModFour(8)));
    }

    #[test]
    fn odd_pairs_examples() {
        assert_eq!(
            odd_pair_indices(&tp("7^1 1^7")),
            vec![Pair::First, Pair::Second]
        );
        assert!(odd_pair_indices(&tp("9^1 1^1")).is_empty());
        assert_eq!(odd_pair_indices(&tp("6^1 1^8")), vec![Pair::First]);
    }
}
