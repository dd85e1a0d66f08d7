//! Text form: space-separated tokens `<part>` or `<part>^<mult>`, sizes
//! strictly decreasing. Output always spells out `^<mult>`.

use std::fmt;
use std::str::FromStr;

use super::{FrequencyPartition, TwoSizePartition};
use crate::error::{Error, Result};

fn parse_error(token: &str, reason: &'static str) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason,
    }
}

/// Decimal digits only, no sign, no leading zero (a lone "0" is allowed so
/// the caller can report it as a zero part or multiplicity).
fn parse_number(digits: &str, token: &str) -> Result<u64> {
    let well_formed = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'));
    if !well_formed {
        return Err(parse_error(token, "malformed token"));
    }
    digits
        .parse()
        .map_err(|_| parse_error(token, "malformed token"))
}

fn parse_token(token: &str) -> Result<(u64, u64)> {
    let (part, mult) = match token.split_once('^') {
        Some((part, mult)) => (parse_number(part, token)?, parse_number(mult, token)?),
        None => (parse_number(token, token)?, 1),
    };
    if part == 0 {
        return Err(parse_error(token, "zero part"));
    }
    if mult == 0 {
        return Err(parse_error(token, "zero multiplicity"));
    }
    Ok((part, mult))
}

pub fn parse_partition(text: &str) -> Result<FrequencyPartition> {
    if text.is_empty() {
        return Err(parse_error(text, "empty partition"));
    }
    let mut pairs: Vec<(u64, u64)> = Vec::new();
    for token in text.split(' ') {
        let (part, mult) = parse_token(token)?;
        if let Some(&(previous, _)) = pairs.last() {
            if part >= previous {
                return Err(parse_error(token, "part sizes must strictly decrease"));
            }
        }
        pairs.push((part, mult));
    }
    FrequencyPartition::new(pairs).map_err(|e| match e {
        Error::Overflow(_) => parse_error(text, "weight overflows 64 bits"),
        other => other,
    })
}

pub fn format_partition(p: &FrequencyPartition) -> String {
    p.to_string()
}

impl FromStr for FrequencyPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl FromStr for TwoSizePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TwoSizePartition::try_from(parse_partition(s)?)
    }
}

impl fmt::Display for FrequencyPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (part, mult)) in self.pairs().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{part}^{mult}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn reason(text: &str) -> (String, &'static str) {
        match parse_partition(text) {
            Err(Error::Parse { token, reason }) => (token, reason),
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_partition("4^6 3^2").unwrap().pairs(),
            &[(4, 6), (3, 2)]
        );
        assert_eq!(parse_partition("5 1").unwrap().pairs(), &[(5, 1), (1, 1)]);
        assert_eq!(
            format_partition(&parse_partition("5 1").unwrap()),
            "5^1 1^1"
        );
        assert_eq!(parse_partition("7").unwrap().pairs(), &[(7, 1)]);
        let p: TwoSizePartition = "6^1 1^8".parse().unwrap();
        assert_eq!(p.quadruple(), [6, 1, 1, 8]);
    }

    #[test]
    fn errors_name_the_token() {
        assert_eq!(reason("3^0 1^2"), ("3^0".into(), "zero multiplicity"));
        assert_eq!(reason("3 0"), ("0".into(), "zero part"));
        assert_eq!(reason("0^2"), ("0^2".into(), "zero part"));
        assert_eq!(
            reason("3 3"),
            ("3".into(), "part sizes must strictly decrease")
        );
        assert_eq!(
            reason("2 5^2"),
            ("5^2".into(), "part sizes must strictly decrease")
        );
        assert_eq!(reason("04 1").1, "malformed token");
        assert_eq!(reason("4^01").1, "malformed token");
        assert_eq!(reason("+4").1, "malformed token");
        assert_eq!(reason("4^").1, "malformed token");
        assert_eq!(reason("4^2^1").1, "malformed token");
        assert_eq!(reason("4  1").1, "malformed token");
        assert_eq!(reason(" 4").1, "malformed token");
        assert_eq!(reason("a").1, "malformed token");
        assert_eq!(reason("99999999999999999999").1, "malformed token");
        assert_eq!(reason("").1, "empty partition");
        assert_eq!(
            reason("18446744073709551615^2").1,
            "weight overflows 64 bits"
        );
    }

    #[test]
    fn two_size_parse_requires_two_sizes() {
        assert!("5^2".parse::<TwoSizePartition>().is_err());
        assert!("5 3 1".parse::<TwoSizePartition>().is_err());
    }

    fn arb_partition() -> impl Strategy<Value = FrequencyPartition> {
        prop::collection::btree_map(1u64..10_000, 1u64..10_000, 1..6)
            .prop_map(|m| FrequencyPartition::new(m.into_iter().rev().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn format_then_parse_roundtrips(p in arb_partition()) {
            prop_assert_eq!(parse_partition(&format_partition(&p)).unwrap(), p);
        }

        #[test]
        fn parse_canonicalizes_optional_exponents(
            p in arb_partition(),
            elide in prop::collection::vec(any::<bool>(), 6),
        ) {
            let text = p
                .pairs()
                .iter()
                .zip(&elide)
                .map(|(&(s, m), &e)| if e && m == 1 { s.to_string() } else { format!("{s}^{m}") })
                .collect::<Vec<_>>()
                .join(" ");
            prop_assert_eq!(format_partition(&parse_partition(&text).unwrap()), p.to_string());
        }
    }
}
