//! Exact O(N) spectrum of the fractal family by spectral decimation.
//!
//! The normalized Laplacian spectrum of generation n+1 is obtained from
//! generation n without any matrix work: 0 and 2 stay simple eigenvalues,
//! the eigenvalue 1 enters with multiplicity m(m+2)^n + 1, and every other
//! eigenvalue v of generation n spawns the pair
//!
//! ```text
//! 1 +- sqrt(1 - v/(m+2))
//! ```
//!
//! with its multiplicity carried over. Completeness follows from the
//! counting identity (total multiplicity (m+2)^n + 1), which is asserted
//! at every step. Distinct parent values produce distinct children, so the
//! multiset holds ~2^n pairs while describing ~(m+2)^n eigenvalues.

use crate::error::{Error, Result};
use crate::fractal;
use crate::indices;
use crate::textfmt::sig_digits;

/// Exact (eigenvalue, multiplicity) multiset for one (m, n) pair.
///
/// Values are floating point, multiplicities exact integers, pairs sorted
/// ascending by value. No epsilon-merging is performed: distinct decimation
/// lineages produce distinct irrational values, and merging would corrupt
/// the multiplicity bookkeeping.
#[derive(Debug, Clone)]
pub struct SpectrumMultiset {
    pairs: Vec<(f64, u64)>,
    m: usize,
    n: usize,
}

impl SpectrumMultiset {
    pub fn pairs(&self) -> &[(f64, u64)] {
        &self.pairs
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.pairs.iter().map(|&(_, c)| c).sum()
    }

    /// Multiplicity recorded for exactly this floating-point value.
    pub fn multiplicity_at(&self, value: f64) -> u64 {
        self.pairs
            .iter()
            .filter(|&&(v, _)| v == value)
            .map(|&(_, c)| c)
            .sum()
    }

    /// Expand to a flat ascending eigenvalue list of length N.
    pub fn flatten_sorted(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.total_multiplicity() as usize);
        for &(v, c) in &self.pairs {
            out.extend(std::iter::repeat_n(v, c as usize));
        }
        out
    }

    /// `value multiplicity` per line, ascending, 15 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &(v, c) in &self.pairs {
            out.push_str(&format!("{} {}\n", sig_digits(v, 15), c));
        }
        out
    }
}

/// Exact normalized Laplacian spectrum of generation n via the decimation
/// recursion; base case n = 0 is {0, 2}.
pub fn decimation_spectrum(m: usize, n: usize) -> Result<SpectrumMultiset> {
    let (expected_total, _) = fractal::fractal_counts(m, n)?;
    if expected_total > fractal::SIZE_CAP {
        return Err(Error::SizeCap {
            order: expected_total,
            cap: fractal::SIZE_CAP,
        });
    }
    let base = m as u64 + 2;
    let mut pairs: Vec<(f64, u64)> = vec![(0.0, 1), (2.0, 1)];
    for step in 0..n {
        let ones = (m as u64)
            .checked_mul(base.pow(step as u32))
            .and_then(|x| x.checked_add(1))
            .expect("within the size cap");
        let mut next = Vec::with_capacity(3 + 2 * (pairs.len() - 2));
        next.push((0.0, 1));
        next.push((2.0, 1));
        next.push((1.0, ones));
        for &(v, c) in &pairs {
            if v == 0.0 || v == 2.0 {
                continue;
            }
            let root = (1.0 - v / (m as f64 + 2.0)).sqrt();
            let low = 1.0 - root;
            let high = 1.0 + root;
            assert!(
                low > 0.0 && high < 2.0,
                "decimation children left (0, 2): parent {v}"
            );
            next.push((low, c));
            next.push((high, c));
        }
        pairs = next;
        let total: u64 = pairs.iter().map(|&(_, c)| c).sum();
        assert_eq!(
            total,
            base.pow(step as u32 + 1) + 1,
            "counting identity broken at step {step}"
        );
    }
    pairs.sort_unstable_by(|a, b| a.0.partial_cmp(&b.0).expect("finite values"));
    Ok(SpectrumMultiset { pairs, m, n })
}

/// NEE of generation n evaluated on the exact multiset.
pub fn decimation_nee(m: usize, n: usize) -> Result<f64> {
    Ok(indices::nee_from_multiset(&decimation_spectrum(m, n)?))
}

/// Multiplicity of eigenvalue 1 at generation n >= 1: m(m+2)^{n-1} + 1.
pub fn multiplicity_of_one(m: usize, n: usize) -> Result<u64> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "branching parameter m must be at least 1".into(),
        ));
    }
    if n < 1 {
        return Err(Error::InvalidParameter(
            "eigenvalue 1 is absent at generation 0".into(),
        ));
    }
    let base = m as u64 + 2;
    let exponent = u32::try_from(n - 1).map_err(|_| Error::CountOverflow {
        base,
        exponent: u32::MAX,
    })?;
    base.checked_pow(exponent)
        .and_then(|x| x.checked_mul(m as u64))
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::CountOverflow { base, exponent })
}

/// Rank of (normalized Laplacian - I) at generation n >= 1: 2(m+2)^{n-1}.
/// Complementary to `multiplicity_of_one`: the two always sum to N.
pub fn predicted_rank(m: usize, n: usize) -> Result<u64> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "branching parameter m must be at least 1".into(),
        ));
    }
    if n < 1 {
        return Err(Error::InvalidParameter(
            "rank identity requires generation >= 1".into(),
        ));
    }
    let base = m as u64 + 2;
    let exponent = u32::try_from(n - 1).map_err(|_| Error::CountOverflow {
        base,
        exponent: u32::MAX,
    })?;
    base.checked_pow(exponent)
        .and_then(|x| x.checked_mul(2))
        .ok_or(Error::CountOverflow { base, exponent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn base_case() {
        let ms = decimation_spectrum(1, 0).unwrap();
        assert_eq!(ms.pairs(), &[(0.0, 1), (2.0, 1)]);
    }

    #[test]
    fn generation_one() {
        let ms = decimation_spectrum(1, 1).unwrap();
        assert_eq!(ms.pairs(), &[(0.0, 1), (1.0, 2), (2.0, 1)]);
        let ms = decimation_spectrum(3, 1).unwrap();
        assert_eq!(ms.multiplicity_at(1.0), 4);
    }

    #[test]
    fn generation_two_exact_values() {
        let ms = decimation_spectrum(1, 2).unwrap();
        let low = 1.0 - (2.0f64 / 3.0).sqrt();
        let high = 1.0 + (2.0f64 / 3.0).sqrt();
        assert_eq!(ms.pairs().len(), 5);
        assert_eq!(
            ms.pairs(),
            &[(0.0, 1), (low, 2), (1.0, 4), (high, 2), (2.0, 1)]
        );
        assert_eq!(ms.total_multiplicity(), 10);
    }

    #[test]
    fn totals_match_counts() {
        for (m, n) in [(5usize, 3usize), (2, 4), (1, 7), (4, 5)] {
            let ms = decimation_spectrum(m, n).unwrap();
            let (nn, _) = fractal::fractal_counts(m, n).unwrap();
            assert_eq!(ms.total_multiplicity(), nn);
        }
    }

    #[test]
    fn multiset_is_symmetric_about_one() {
        let ms = decimation_spectrum(2, 4).unwrap();
        let pairs = ms.pairs();
        let k = pairs.len();
        for i in 0..k {
            let (v, c) = pairs[i];
            let (w, d) = pairs[k - 1 - i];
            assert_eq!(c, d);
            // Children come from an algebraic 1 +- x pair; each side takes
            // one rounding, so the reflection holds to within one ulp of 2.
            assert!((v + w - 2.0).abs() <= 1e-15, "{v} vs {w}");
        }
    }

    #[test]
    fn values_stay_in_range() {
        let ms = decimation_spectrum(5, 6).unwrap();
        for &(v, c) in ms.pairs() {
            assert!((0.0..=2.0).contains(&v));
            assert!(c >= 1);
        }
    }

    #[test]
    fn nee_values() {
        assert_abs_diff_eq!(
            decimation_nee(4, 0).unwrap(),
            3.0861612696304874,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            decimation_nee(1, 1).unwrap(),
            5.086161269630487,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            decimation_nee(1, 2).unwrap(),
            12.495234509782476,
            epsilon = 1e-13
        );
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(multiplicity_of_one(1, 2).unwrap(), 4);
        assert_eq!(multiplicity_of_one(2, 1).unwrap(), 3);
        assert_eq!(multiplicity_of_one(1, 3).unwrap(), 10);
        assert_eq!(predicted_rank(1, 1).unwrap(), 2);
        assert_eq!(predicted_rank(1, 2).unwrap(), 6);
        assert_eq!(predicted_rank(2, 2).unwrap(), 8);
        assert!(multiplicity_of_one(1, 0).is_err());
        assert!(predicted_rank(1, 0).is_err());
    }

    #[test]
    fn rank_and_multiplicity_partition_the_order() {
        for m in 1..=6 {
            for n in 1..=7 {
                let Ok((nn, _)) = fractal::fractal_counts(m, n) else {
                    continue;
                };
                let total = predicted_rank(m, n).unwrap() + multiplicity_of_one(m, n).unwrap();
                assert_eq!(total, nn);
            }
        }
    }

    #[test]
    fn multiset_text_format() {
        let ms = decimation_spectrum(1, 1).unwrap();
        assert_eq!(
            ms.to_text(),
            "0.00000000000000 1\n1.00000000000000 2\n2.00000000000000 1\n"
        );
    }

    #[test]
    fn cap_applies_to_decimation_too() {
        assert!(matches!(
            decimation_spectrum(1, 14),
            Err(Error::SizeCap { .. })
        ));
    }
}
