//! Bijections on two-size partitions.
//!
//! Every map rejects inputs outside its domain instead of returning a
//! best-effort value, and every output is put back in canonical order
//! (larger part size first).

use std::fmt;
use std::str::FromStr;

use crate::arith::{decompose_pow2, pow2_times};
use crate::classes::{classify, MarkedParityClass, Pair, ParityClass};
use crate::error::{Error, Result};
use crate::partitions::{FrequencyPartition, TwoSizePartition};

fn out_of_domain(map: &'static str, p: &TwoSizePartition, reason: impl Into<String>) -> Error {
    Error::OutOfDomain {
        map,
        input: p.to_string(),
        reason: reason.into(),
    }
}

/// Ferrers conjugate of any partition.
pub fn conjugate(p: &FrequencyPartition) -> FrequencyPartition {
    p.transpose()
}

/// `Conj(λ₁^m₁ λ₂^m₂) = (m₁+m₂)^λ₂ m₁^(λ₁−λ₂)`.
pub fn conjugate_two_size(p: &TwoSizePartition) -> TwoSizePartition {
    let [l1, m1, l2, m2] = p.quadruple();
    TwoSizePartition::new(m1 + m2, l2, m1, l1 - l2).expect("m₁+m₂ > m₁ and λ₁ > λ₂")
}

/// `(λ, m) ↦ (2^b(λ)·ℓ(m), 2^b(m)·ℓ(λ))`: odd parts trade places.
fn swap_odd_parts((part, mult): (u64, u64)) -> (u64, u64) {
    let a = decompose_pow2(part).expect("positive part");
    let b = decompose_pow2(mult).expect("positive multiplicity");
    // each new factor divides part·mult, which fits
    (
        pow2_times(a.valuation, b.odd_part).unwrap(),
        pow2_times(b.valuation, a.odd_part).unwrap(),
    )
}

/// `(λ, m) ↦ (2^b(m)·ℓ(λ), 2^b(λ)·ℓ(m))`: 2-adic valuations trade places.
fn swap_valuations((part, mult): (u64, u64)) -> (u64, u64) {
    let a = decompose_pow2(part).expect("positive part");
    let b = decompose_pow2(mult).expect("positive multiplicity");
    (
        pow2_times(b.valuation, a.odd_part).unwrap(),
        pow2_times(a.valuation, b.odd_part).unwrap(),
    )
}

fn reassemble(
    map: &'static str,
    input: &TwoSizePartition,
    first: (u64, u64),
    second: (u64, u64),
) -> Result<TwoSizePartition> {
    if first.0 == second.0 {
        return Err(out_of_domain(
            map,
            input,
            format!("both resulting part sizes equal {}", first.0),
        ));
    }
    TwoSizePartition::from_pairs(first, second)
}

/// Swaps the largest odd divisor of each part with that of its
/// multiplicity. Defined when the two resulting part sizes
/// `2^b(λᵢ)·ℓ(mᵢ)` differ; an involution there.
pub fn rho(p: &TwoSizePartition) -> Result<TwoSizePartition> {
    let [a, b] = p.pairs();
    reassemble("rho", p, swap_odd_parts(a), swap_odd_parts(b))
}

/// Swaps the 2-adic valuations of the part and multiplicity in the marked
/// pair (the one whose product is ≡ 2 mod 4), leaving the other pair alone.
pub fn phi_bar(p: &TwoSizePartition) -> Result<TwoSizePartition> {
    let marked = classify(p)?;
    let Some(pair) = marked.mark else {
        return Err(out_of_domain("phibar", p, "OOOO has no marked pair"));
    };
    let moved = swap_valuations(pair.of(p));
    reassemble("phibar", p, moved, pair.other().of(p))
}

/// Swaps the 2-adic valuations within both pairs. Sends `OEOE` into `EOEO`.
pub fn tau(p: &TwoSizePartition) -> Result<TwoSizePartition> {
    let marked = classify(p)?;
    if marked.class != ParityClass::OEOE {
        return Err(out_of_domain(
            "tau",
            p,
            format!("class {} is not OEOE", marked.class),
        ));
    }
    let [a, b] = p.pairs();
    reassemble("tau", p, swap_valuations(a), swap_valuations(b))
}

/// `Conj ∘ ρ ∘ Conj` on `EOOE:1` members with `λ₁ ≠ 2λ₂`, in closed form:
/// `(2m₁+m₂)^λ₂ m₁^(λ₁−2λ₂)` when `λ₁ > 2λ₂`, otherwise
/// `(2m₁+m₂)^(λ₁−λ₂) (m₁+m₂)^(2λ₂−λ₁)`.
pub fn conj_rho_conj(p: &TwoSizePartition) -> Result<TwoSizePartition> {
    let marked = classify(p)?;
    let expected = MarkedParityClass {
        class: ParityClass::EOOE,
        mark: Some(Pair::First),
    };
    if marked != expected {
        return Err(out_of_domain(
            "crc",
            p,
            format!("class {marked} is not EOOE:1"),
        ));
    }
    let [l1, m1, l2, m2] = p.quadruple();
    let twice_small = 2 * l2;
    let big = 2 * m1 + m2;
    let image = if l1 > twice_small {
        TwoSizePartition::new(big, l2, m1, l1 - twice_small)
    } else if l1 < twice_small {
        TwoSizePartition::new(big, l1 - l2, m1 + m2, twice_small - l1)
    } else {
        return Err(out_of_domain("crc", p, "λ₁ = 2λ₂ is excluded"));
    };
    Ok(image.expect("closed form yields distinct positive sizes"))
}

/// Map names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapName {
    Conj,
    Rho,
    PhiBar,
    Tau,
    Crc,
}

impl MapName {
    pub const ALL: [MapName; 5] = [
        MapName::Conj,
        MapName::Rho,
        MapName::PhiBar,
        MapName::Tau,
        MapName::Crc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::Conj => "conj",
            MapName::Rho => "rho",
            MapName::PhiBar => "phibar",
            MapName::Tau => "tau",
            MapName::Crc => "crc",
        }
    }

    /// Applies the map. Conjugation accepts any partition; the others need
    /// exactly two part sizes.
    pub fn apply(self, p: &FrequencyPartition) -> Result<FrequencyPartition> {
        if self == MapName::Conj {
            return Ok(conjugate(p));
        }
        let two = TwoSizePartition::try_from(p)?;
        let image = match self {
            MapName::Rho => rho(&two),
            MapName::PhiBar => phi_bar(&two),
            MapName::Tau => tau(&two),
            MapName::Crc => conj_rho_conj(&two),
            MapName::Conj => unreachable!(),
        }?;
        Ok(image.into())
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}
