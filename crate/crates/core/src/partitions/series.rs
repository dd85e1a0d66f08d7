use crate::error::{Error, Result};

/// Power series in `q` truncated after `q^N`, with exact non-negative
/// integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<u64>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = 1;
        s
    }

    /// Highest retained power.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    pub fn add_assign(&mut self, other: &TruncatedSeries) -> Result<()> {
        for (c, &o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c = c
                .checked_add(o)
                .ok_or(Error::Overflow("series coefficient"))?;
        }
        Ok(())
    }

    /// `self · q^a / (1 − q^a)`, i.e. `self · (q^a + q^{2a} + ...)`.
    pub fn times_geometric_tail(&self, a: usize) -> Result<TruncatedSeries> {
        assert!(a > 0, "geometric tail needs a positive step");
        let mut out = Self::zero(self.order());
        for n in a..self.coeffs.len() {
            out.coeffs[n] = self.coeffs[n - a]
                .checked_add(out.coeffs[n - a])
                .ok_or(Error::Overflow("series coefficient"))?;
        }
        Ok(out)
    }
}

/// Coefficients of `q^0 ..= q^N` in `Σ_{a₁<…<a_k} Π q^{aᵢ}/(1 − q^{aᵢ})`,
/// which is the generating function of `ν_k`. Supports `k ∈ {1, 2, 3}`.
pub fn nu_k_series(k: usize, order: usize) -> Result<Vec<u64>> {
    if !(1..=3).contains(&k) {
        return Err(Error::UnsupportedK(k));
    }
    // levels[j] sums over all j-element sets of sizes seen so far
    let mut levels = vec![TruncatedSeries::zero(order); k + 1];
    levels[0] = TruncatedSeries::one(order);
    for a in 1..=order {
        for j in (1..=k).rev() {
            let extended = levels[j - 1].times_geometric_tail(a)?;
            levels[j].add_assign(&extended)?;
        }
    }
    Ok(levels.swap_remove(k).into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_tail() {
        let s = TruncatedSeries::one(7).times_geometric_tail(3).unwrap();
        assert_eq!(s.coeffs(), &[0, 0, 0, 1, 0, 0, 1, 0]);
        let mut t = s.clone();
        t.add_assign(&s).unwrap();
        assert_eq!(t.coeffs()[6], 2);
    }

    #[test]
    fn known_coefficients() {
        assert_eq!(nu_k_series(2, 6).unwrap()[6], 6);
        assert_eq!(nu_k_series(1, 12).unwrap()[12], 6);
        assert_eq!(nu_k_series(2, 2).unwrap(), vec![0, 0, 0]);
        assert_eq!(nu_k_series(3, 6).unwrap(), vec![0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(nu_k_series(2, 14).unwrap()[14], 44);
    }

    #[test]
    fn rejects_unsupported_k() {
        assert_eq!(nu_k_series(0, 5), Err(Error::UnsupportedK(0)));
        assert_eq!(nu_k_series(4, 5), Err(Error::UnsupportedK(4)));
    }
}
