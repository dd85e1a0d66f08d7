use super::{FrequencyPartition, TwoSizePartition};
use crate::arith::{divisor_count, divisor_sum, DivisorTable};
use crate::error::{Error, Result};

/// Every partition of `n` into exactly two part sizes, ordered by descending
/// `λ₁`, then descending `m₁`, then descending `λ₂`.
pub fn enumerate_two_size(n: u64) -> Vec<TwoSizePartition> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let table = DivisorTable::new(n);
    for large_part in (2..n).rev() {
        for large_mult in (1..=(n - 1) / large_part).rev() {
            let rest = n - large_part * large_mult;
            for &small_part in table.divisors(rest).iter().rev() {
                if small_part < large_part {
                    out.push(TwoSizePartition {
                        large_part,
                        large_mult,
                        small_part,
                        small_mult: rest / small_part,
                    });
                }
            }
        }
    }
    out
}

const MAX_LISTED_SIZES: usize = 3;

/// Every partition of `n` with exactly `k` part sizes, `k ≤ 3`, in
/// lexicographically descending `(λ₁, m₁, λ₂, m₂, ...)` order.
pub fn enumerate_k_sizes(n: u64, k: usize) -> Result<Vec<FrequencyPartition>> {
    if k == 0 || k > MAX_LISTED_SIZES {
        return Err(Error::UnsupportedK(k));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    if n > 0 {
        collect(n, k, n + 1, &mut current, &mut out);
    }
    Ok(out)
}

fn min_weight(sizes: u64) -> u64 {
    sizes * (sizes + 1) / 2
}

fn collect(
    remaining: u64,
    sizes_left: usize,
    below: u64,
    current: &mut Vec<(u64, u64)>,
    out: &mut Vec<FrequencyPartition>,
) {
    if sizes_left == 0 {
        if remaining == 0 {
            out.push(FrequencyPartition::new(current.clone()).expect("descending positive pairs"));
        }
        return;
    }
    let after = sizes_left as u64 - 1;
    for size in (after + 1..below.min(remaining + 1)).rev() {
        for mult in (1..=remaining / size).rev() {
            let rest = remaining - size * mult;
            if rest < min_weight(after) || (after == 0 && rest != 0) {
                continue;
            }
            current.push((size, mult));
            collect(rest, sizes_left - 1, size, current, out);
            current.pop();
        }
    }
}

/// `ν_k(n)`, counted by walking every choice of `k` distinct sizes and
/// multiplicities. The last size is read off the divisors of what remains.
pub fn count_k_sizes(n: u64, k: usize) -> u64 {
    if n == 0 || k == 0 || min_weight(k as u64) > n {
        return 0;
    }
    let table = DivisorTable::new(n);
    count(&table, n, k as u64, n + 1)
}

fn count(table: &DivisorTable, remaining: u64, sizes_left: u64, below: u64) -> u64 {
    if sizes_left == 1 {
        return table
            .divisors(remaining)
            .iter()
            .take_while(|&&d| d < below)
            .count() as u64;
    }
    let after = sizes_left - 1;
    let mut total = 0;
    for size in after + 1..below.min(remaining) {
        let mut mult = 1;
        while size * mult + min_weight(after) <= remaining {
            total += count(table, remaining - size * mult, after, size);
            mult += 1;
        }
    }
    total
}

/// `ν₂(n) = ½(Σ_{k=1}^{n-1} d(k)d(n-k) − σ₁(n) + d(n))`.
pub fn nu2_closed_form(n: u64) -> Result<u64> {
    let convolution = (1..n).try_fold(0u64, |acc, k| {
        let term = divisor_count(k)?
            .checked_mul(divisor_count(n - k)?)
            .ok_or(Error::Overflow("divisor convolution"))?;
        acc.checked_add(term)
            .ok_or(Error::Overflow("divisor convolution"))
    })?;
    let numerator = (convolution + divisor_count(n)?)
        .checked_sub(divisor_sum(n)?)
        .expect("convolution + d(n) >= σ₁(n)");
    debug_assert_eq!(numerator % 2, 0);
    Ok(numerator / 2)
}
