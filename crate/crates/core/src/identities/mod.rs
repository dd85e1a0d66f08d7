//! Executable checks of the parity-class identities behind
//! `ν₂(16j+14) ≡ 0 (mod 4)`, plus rank statistics and a scanner for the
//! rank-parity conjecture on the known congruence families.

mod conjecture;
mod report;
mod stats;

pub use conjecture::{check_conjecture, CongruenceFamily};
pub use report::IdentityReport;
pub use stats::{crank, dyson_rank, rank2, rank_class_census, residue_census, Statistic};

use std::fmt;
use std::str::FromStr;

use crate::arith::{divisor_count, divisor_sum};
use crate::classes::{odd_pair_indices, ClassCensus, MarkedParityClass, Pair, ParityClass};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_two_size, nu2_closed_form, TwoSizePartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// Only the nine listed classes occur; outside `OOOO` exactly one
    /// product `λᵢmᵢ` is ≡ 2 (mod 4).
    AdmissibleClasses,
    /// `|OEEO|` is even and its two marks are equinumerous.
    OeeoEven,
    /// Some pair has `ℓ(λᵢ) ≢ ℓ(mᵢ) (mod 8)`.
    OddPairs,
    /// `EOOE + EEOE + OEEE + OEEO ≡ 0 (mod 2)`.
    EvenParities,
    /// `EOOE + EEOE + OEEE + OOOO + EOEO + EEEO ≡ 0 (mod 4)`.
    SixGroup,
    /// `EOEE + OEOE + OEEO ≡ 0 (mod 4)`.
    ThreeClass,
    /// `EOEO = OEOE + σ₁(n/2)/2 − d(n)/4`.
    TwiceOeoe,
    /// `EOEE + OEOE ≡ d(n)/2 (mod 4)`.
    TwoGroup,
    /// `OEEO ≡ d(n)/2 (mod 4)`.
    OeeoValue,
    /// `ν₂(n) ≡ 0 (mod 4)`.
    Main,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::AdmissibleClasses,
        IdentityId::OeeoEven,
        IdentityId::OddPairs,
        IdentityId::EvenParities,
        IdentityId::SixGroup,
        IdentityId::ThreeClass,
        IdentityId::TwiceOeoe,
        IdentityId::TwoGroup,
        IdentityId::OeeoValue,
        IdentityId::Main,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::AdmissibleClasses => "admissible-classes",
            IdentityId::OeeoEven => "oeeo-even",
            IdentityId::OddPairs => "odd-pairs",
            IdentityId::EvenParities => "even-parities",
            IdentityId::SixGroup => "sixgroup",
            IdentityId::ThreeClass => "three-class",
            IdentityId::TwiceOeoe => "twiceOEOE",
            IdentityId::TwoGroup => "twogroup",
            IdentityId::OeeoValue => "oeeo-value",
            IdentityId::Main => "main",
        }
    }

    /// `(modulus, residue)` of the weights the identity applies to.
    pub fn residue_class(self) -> (u64, u64) {
        match self {
            IdentityId::AdmissibleClasses | IdentityId::OeeoEven | IdentityId::TwiceOeoe => (4, 2),
            IdentityId::ThreeClass => (8, 6),
            IdentityId::OddPairs
            | IdentityId::EvenParities
            | IdentityId::SixGroup
            | IdentityId::TwoGroup
            | IdentityId::OeeoValue
            | IdentityId::Main => (16, 14),
        }
    }

    pub fn admits(self, n: u64) -> bool {
        let (modulus, residue) = self.residue_class();
        n % modulus == residue
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The two-size partitions of one weight ≡ 2 (mod 4) and their class
/// census, shared by every identity checked at that weight.
#[derive(Debug, Clone)]
pub struct WeightContext {
    n: u64,
    partitions: Vec<TwoSizePartition>,
    census: ClassCensus,
}

fn count(c: u64) -> i64 {
    c as i64
}

impl WeightContext {
    pub fn new(n: u64) -> Result<Self> {
        if n % 4 != 2 {
            return Err(Error::WeightNotTwoModFour(n));
        }
        let partitions = enumerate_two_size(n);
        let census = ClassCensus::from_partitions(n, &partitions)?;
        Ok(WeightContext {
            n,
            partitions,
            census,
        })
    }

    pub fn partitions(&self) -> &[TwoSizePartition] {
        &self.partitions
    }

    pub fn census(&self) -> &ClassCensus {
        &self.census
    }

    fn total(&self, class: ParityClass) -> u64 {
        self.census.class_total(class)
    }

    fn sum_of(&self, classes: &[ParityClass]) -> (Vec<(&'static str, i64)>, u64) {
        let mut values = Vec::new();
        let mut sum = 0;
        for &class in classes {
            let k = self.total(class);
            values.push((class_label(class), count(k)));
            sum += k;
        }
        values.push(("sum", count(sum)));
        (values, sum)
    }

    pub fn check(&self, id: IdentityId) -> Result<IdentityReport> {
        let n = self.n;
        if !id.admits(n) {
            let (modulus, residue) = id.residue_class();
            return Err(Error::Inadmissible {
                id: id.as_str(),
                n,
                residue,
                modulus,
            });
        }
        use ParityClass as C;
        let report = match id {
            IdentityId::AdmissibleClasses => {
                let witnesses: Vec<String> = self
                    .partitions
                    .iter()
                    .filter(|p| !admissible_with_one_mark(p))
                    .map(|p| p.to_string())
                    .collect();
                IdentityReport::new(
                    id.as_str(),
                    n,
                    vec![
                        ("partitions", count(self.partitions.len() as u64)),
                        ("violations", count(witnesses.len() as u64)),
                    ],
                    witnesses.is_empty(),
                    String::new,
                    witnesses,
                )
            }
            IdentityId::OeeoEven => {
                let first = self.census.count(&MarkedParityClass {
                    class: C::OEEO,
                    mark: Some(Pair::First),
                });
                let second = self.census.count(&MarkedParityClass {
                    class: C::OEEO,
                    mark: Some(Pair::Second),
                });
                let total = self.total(C::OEEO);
                IdentityReport::new(
                    id.as_str(),
                    n,
                    vec![
                        ("OEEO", count(total)),
                        ("OEEO:1", count(first)),
                        ("OEEO:2", count(second)),
                    ],
                    total.is_multiple_of(2) && first == second,
                    || {
                        format!(
                            "OEEO={total} (marks {first}/{second}) is not even with equal marks"
                        )
                    },
                    Vec::new(),
                )
            }
            IdentityId::OddPairs => {
                let witnesses: Vec<String> = self
                    .partitions
                    .iter()
                    .filter(|p| odd_pair_indices(p).is_empty())
                    .map(|p| p.to_string())
                    .collect();
                IdentityReport::new(
                    id.as_str(),
                    n,
                    vec![
                        ("partitions", count(self.partitions.len() as u64)),
                        ("violations", count(witnesses.len() as u64)),
                    ],
                    witnesses.is_empty(),
                    String::new,
                    witnesses,
                )
            }
            IdentityId::EvenParities => {
                self.congruence(id, &[C::EOOE, C::EEOE, C::OEEE, C::OEEO], 2)
            }
            IdentityId::SixGroup => self.congruence(
                id,
                &[C::EOOE, C::EEOE, C::OEEE, C::OOOO, C::EOEO, C::EEEO],
                4,
            ),
            IdentityId::ThreeClass => self.congruence(id, &[C::EOEE, C::OEOE, C::OEEO], 4),
            IdentityId::TwiceOeoe => {
                let eoeo = count(self.total(C::EOEO));
                let oeoe = count(self.total(C::OEOE));
                let sigma_half = count(divisor_sum(n / 2)?);
                let d = count(divisor_count(n)?);
                // EOEO = OEOE + σ₁(n/2)/2 − d(n)/4, with denominators cleared
                let lhs = 4 * eoeo;
                let rhs = 4 * oeoe + 2 * sigma_half - d;
                IdentityReport::new(
                    id.as_str(),
                    n,
                    vec![
                        ("EOEO", eoeo),
                        ("OEOE", oeoe),
                        ("sigma1_half", sigma_half),
                        ("d", d),
                        ("4*EOEO", lhs),
                        ("4*OEOE+2*sigma1_half-d", rhs),
                    ],
                    lhs == rhs,
                    || format!("4·{eoeo} ≠ 4·{oeoe} + 2·{sigma_half} − {d}"),
                    Vec::new(),
                )
            }
            IdentityId::TwoGroup => {
                let (values, sum) = self.sum_of(&[C::EOEE, C::OEOE]);
                self.matches_half_divisor_count(id, values, sum)?
            }
            IdentityId::OeeoValue => {
                let (values, sum) = self.sum_of(&[C::OEEO]);
                self.matches_half_divisor_count(id, values, sum)?
            }
            IdentityId::Main => {
                let enumerated = self.partitions.len() as u64;
                let closed = nu2_closed_form(n)?;
                IdentityReport::new(
                    id.as_str(),
                    n,
                    vec![
                        ("nu2", count(enumerated)),
                        ("nu2_closed_form", count(closed)),
                    ],
                    enumerated == closed && enumerated.is_multiple_of(4),
                    || format!("ν₂ = {enumerated} (closed form {closed}) is not ≡ 0 (mod 4)"),
                    Vec::new(),
                )
            }
        };
        Ok(report)
    }

    fn congruence(&self, id: IdentityId, classes: &[ParityClass], modulus: u64) -> IdentityReport {
        let (values, sum) = self.sum_of(classes);
        IdentityReport::new(
            id.as_str(),
            self.n,
            values,
            sum % modulus == 0,
            || format!("sum {sum} ≢ 0 (mod {modulus})"),
            Vec::new(),
        )
    }

    /// `sum ≡ d(n)/2 (mod 4)`, failing if `d(n)` is odd.
    fn matches_half_divisor_count(
        &self,
        id: IdentityId,
        mut values: Vec<(&'static str, i64)>,
        sum: u64,
    ) -> Result<IdentityReport> {
        let d = divisor_count(self.n)?;
        values.push(("d", count(d)));
        let exact = d % 2 == 0;
        let holds = exact && sum % 4 == (d / 2) % 4;
        Ok(IdentityReport::new(
            id.as_str(),
            self.n,
            values,
            holds,
            || {
                if exact {
                    format!("sum {sum} ≢ d(n)/2 = {} (mod 4)", d / 2)
                } else {
                    format!("d(n) = {d} is odd, d(n)/2 is not an integer")
                }
            },
            Vec::new(),
        ))
    }
}

fn class_label(class: ParityClass) -> &'static str {
    match class {
        ParityClass::OOOO => "OOOO",
        ParityClass::EOOE => "EOOE",
        ParityClass::EEOE => "EEOE",
        ParityClass::EOEO => "EOEO",
        ParityClass::OEEE => "OEEE",
        ParityClass::EEEO => "EEEO",
        ParityClass::EOEE => "EOEE",
        ParityClass::OEOE => "OEOE",
        ParityClass::OEEO => "OEEO",
        _ => "inadmissible",
    }
}

/// Checks class admissibility and the single-mark dichotomy directly from
/// the products, without going through `classify`.
fn admissible_with_one_mark(p: &TwoSizePartition) -> bool {
    let class = ParityClass::of(p);
    if !class.is_admissible() {
        return false;
    }
    if class == ParityClass::OOOO {
        return true;
    }
    let [l1, m1, l2, m2] = p.quadruple();
    let mut residues = [(l1 * m1) % 4, (l2 * m2) % 4];
    residues.sort_unstable();
    residues == [0, 2]
}

pub fn verify_identity(id: IdentityId, n: u64) -> Result<IdentityReport> {
    if !id.admits(n) {
        let (modulus, residue) = id.residue_class();
        return Err(Error::Inadmissible {
            id: id.as_str(),
            n,
            residue,
            modulus,
        });
    }
    WeightContext::new(n)?.check(id)
}

/// Checks every id in `ids` at every admissible weight in `from..=to`.
/// Reports come out by ascending weight, then in the order of `ids`.
pub fn verify_range(ids: &[IdentityId], from: u64, to: u64) -> Result<Vec<IdentityReport>> {
    let mut reports = Vec::new();
    let start = from + (2 + 4 - from % 4) % 4;
    for n in (start..=to).step_by(4) {
        let wanted: Vec<IdentityId> = ids.iter().copied().filter(|id| id.admits(n)).collect();
        if wanted.is_empty() {
            continue;
        }
        let context = WeightContext::new(n)?;
        for id in wanted {
            reports.push(context.check(id)?);
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_examples() {
        let main = verify_identity(IdentityId::Main, 14).unwrap();
        assert!(main.holds);
        assert_eq!(main.value("nu2"), Some(44));

        let twice = verify_identity(IdentityId::TwiceOeoe, 6).unwrap();
        assert!(twice.holds);
        assert_eq!(twice.value("EOEO"), Some(1));
        assert_eq!(twice.value("OEOE"), Some(0));
        assert_eq!(twice.value("sigma1_half"), Some(4));
        assert_eq!(twice.value("d"), Some(4));

        let value = verify_identity(IdentityId::OeeoValue, 14).unwrap();
        assert!(value.holds);
        assert_eq!(value.value("OEEO"), Some(2));
        assert_eq!(value.value("d"), Some(4));

        let six = verify_identity(IdentityId::SixGroup, 14).unwrap();
        assert!(six.holds);
        assert_eq!(six.value("sum"), Some(36));
    }

    #[test]
    fn twice_oeoe_at_twice_odd_squares() {
        // d(n)/4 and σ₁(n/2)/2 are not integers here, their difference is
        for n in [2, 18, 50, 98, 162] {
            let r = verify_identity(IdentityId::TwiceOeoe, n).unwrap();
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn rejects_wrong_residue() {
        assert_eq!(
            verify_identity(IdentityId::Main, 22),
            Err(Error::Inadmissible {
                id: "main",
                n: 22,
                residue: 14,
                modulus: 16
            })
        );
        assert!(verify_identity(IdentityId::ThreeClass, 10).is_err());
        assert!(verify_identity(IdentityId::TwiceOeoe, 8).is_err());
        assert!("nonsense".parse::<IdentityId>().is_err());
    }

    #[test]
    fn names_roundtrip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
    }

    #[test]
    fn range_filters_and_orders() {
        let reports = verify_range(&IdentityId::ALL, 1, 30).unwrap();
        let keys: Vec<(u64, &str)> = reports
            .iter()
            .map(|r| (r.n, r.identity_id.as_str()))
            .collect();
        assert_eq!(
            keys,
            [
                (2, "admissible-classes"),
                (2, "oeeo-even"),
                (2, "twiceOEOE"),
                (6, "admissible-classes"),
                (6, "oeeo-even"),
                (6, "three-class"),
                (6, "twiceOEOE"),
                (10, "admissible-classes"),
                (10, "oeeo-even"),
                (10, "twiceOEOE"),
                (14, "admissible-classes"),
                (14, "oeeo-even"),
                (14, "odd-pairs"),
                (14, "even-parities"),
                (14, "sixgroup"),
                (14, "three-class"),
                (14, "twiceOEOE"),
                (14, "twogroup"),
                (14, "oeeo-value"),
                (14, "main"),
                (18, "admissible-classes"),
                (18, "oeeo-even"),
                (18, "twiceOEOE"),
                (22, "admissible-classes"),
                (22, "oeeo-even"),
                (22, "three-class"),
                (22, "twiceOEOE"),
                (26, "admissible-classes"),
                (26, "oeeo-even"),
                (26, "twiceOEOE"),
                (30, "admissible-classes"),
                (30, "oeeo-even"),
                (30, "odd-pairs"),
                (30, "even-parities"),
                (30, "sixgroup"),
                (30, "three-class"),
                (30, "twiceOEOE"),
                (30, "twogroup"),
                (30, "oeeo-value"),
                (30, "main"),
            ]
        );
        assert!(reports.iter().all(|r| r.holds));
        assert!(verify_range(&[IdentityId::Main], 15, 15)
            .unwrap()
            .is_empty());
        assert!(verify_range(&[IdentityId::Main], 20, 10)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn admissibility_helper_flags_bad_products() {
        // weight 8 partitions are outside the classes' scope
        let p: TwoSizePartition = "2^2 1^4".parse().unwrap();
        assert!(!admissible_with_one_mark(&p));
        let q: TwoSizePartition = "6^1 1^8".parse().unwrap();
        assert!(admissible_with_one_mark(&q));
    }
}
