//! Estrada-type spectral indices: EE over the adjacency spectrum, LEE over
//! the Laplacian spectrum (both literature variants), and NEE over the
//! normalized Laplacian spectrum.
//!
//! All sums use compensated accumulation; the largest targets sum ~8x10^5
//! exponentials, where naive summation visibly erodes the last digits.

use crate::decimation::SpectrumMultiset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kahan::KahanSum;
use crate::spectra;

/// The two Laplacian Estrada index conventions found in the literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeeVariant {
    /// sum of e^{lambda - 2E/N}; the standard definition.
    #[default]
    Shifted,
    /// sum of e^{lambda}; equals the shifted value times e^{2E/N}.
    Plain,
}

/// Estrada index: sum of e^lambda over the adjacency spectrum.
pub fn estrada_index(g: &Graph) -> Result<f64> {
    let s = spectra::adjacency_spectrum(g)?;
    Ok(exp_sum(s.values(), 0.0))
}

/// Laplacian Estrada index in the requested variant.
pub fn laplacian_estrada_index(g: &Graph, variant: LeeVariant) -> Result<f64> {
    let n = g.n_vertices();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let shift = match variant {
        LeeVariant::Shifted => -2.0 * g.n_edges() as f64 / n as f64,
        LeeVariant::Plain => 0.0,
    };
    let s = spectra::laplacian_spectrum(g)?;
    Ok(exp_sum(s.values(), shift))
}

/// Normalized Laplacian Estrada index: sum of e^{lambda - 1} over the
/// normalized Laplacian spectrum.
pub fn normalized_estrada_index(g: &Graph) -> Result<f64> {
    let s = spectra::normalized_laplacian_spectrum(g)?;
    Ok(exp_sum(s.values(), -1.0))
}

/// NEE evaluated directly on an exact (value, multiplicity) multiset; one
/// exponential per distinct value.
pub fn nee_from_multiset(ms: &SpectrumMultiset) -> f64 {
    let mut acc = KahanSum::new();
    for &(value, mult) in ms.pairs() {
        acc.add(mult as f64 * (value - 1.0).exp());
    }
    acc.value()
}

fn exp_sum(values: &[f64], shift: f64) -> f64 {
    let mut acc = KahanSum::new();
    for &v in values {
        acc.add((v + shift).exp());
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimation;
    use approx::assert_abs_diff_eq;

    fn edgeless(n: usize) -> Graph {
        Graph::from_edge_list(n, &[]).unwrap()
    }

    #[test]
    fn estrada_index_examples() {
        assert_abs_diff_eq!(estrada_index(&edgeless(5)).unwrap(), 5.0, epsilon = 1e-12);
        // K_2: adjacency eigenvalues +-1.
        assert_abs_diff_eq!(
            estrada_index(&Graph::complete(2).unwrap()).unwrap(),
            3.0861612696304874,
            epsilon = 1e-12
        );
        // K_3: adjacency eigenvalues {2, -1, -1}.
        assert_abs_diff_eq!(
            estrada_index(&Graph::complete(3).unwrap()).unwrap(),
            8.12481498127353,
            epsilon = 1e-12
        );
    }

    #[test]
    fn laplacian_estrada_examples() {
        // K_2 shifted: Laplacian spectrum {2, 0}, 2E/N = 1.
        assert_abs_diff_eq!(
            laplacian_estrada_index(&Graph::complete(2).unwrap(), LeeVariant::Shifted).unwrap(),
            3.0861612696304874,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            laplacian_estrada_index(&edgeless(4), LeeVariant::Plain).unwrap(),
            4.0,
            epsilon = 1e-12
        );
        // K_3 plain: Laplacian spectrum {3, 3, 0}.
        assert_abs_diff_eq!(
            laplacian_estrada_index(&Graph::complete(3).unwrap(), LeeVariant::Plain).unwrap(),
            41.171073846375336,
            epsilon = 1e-11
        );
        assert!(matches!(
            laplacian_estrada_index(&edgeless(0), LeeVariant::Plain),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn lee_variants_differ_by_exponential_factor() {
        for (n, p, seed) in [(8, 0.4, 2), (12, 0.25, 9), (6, 0.8, 4)] {
            let g = Graph::erdos_renyi(n, p, seed).unwrap();
            let shifted = laplacian_estrada_index(&g, LeeVariant::Shifted).unwrap();
            let plain = laplacian_estrada_index(&g, LeeVariant::Plain).unwrap();
            let factor = (-2.0 * g.n_edges() as f64 / n as f64).exp();
            assert!((shifted - plain * factor).abs() <= 1e-12 * shifted);
        }
    }

    #[test]
    fn normalized_estrada_examples() {
        assert_abs_diff_eq!(
            normalized_estrada_index(&Graph::complete(3).unwrap()).unwrap(),
            3.6653219825716987,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            normalized_estrada_index(&edgeless(5)).unwrap(),
            5.0 * (-1.0f64).exp(),
            epsilon = 1e-12
        );
        // Star K_{1,3}: spectrum {2, 1, 1, 0}.
        assert_abs_diff_eq!(
            normalized_estrada_index(&Graph::complete_bipartite(1, 3).unwrap()).unwrap(),
            5.086161269630487,
            epsilon = 1e-12
        );
    }

    #[test]
    fn multiset_nee_examples() {
        let ms = decimation::decimation_spectrum(1, 1).unwrap();
        assert_abs_diff_eq!(nee_from_multiset(&ms), 5.086161269630487, epsilon = 1e-12);

        let ms = decimation::decimation_spectrum(1, 2).unwrap();
        assert_abs_diff_eq!(nee_from_multiset(&ms), 12.495234509782476, epsilon = 1e-12);
    }

    #[test]
    fn nee_grows_by_exactly_inverse_e_per_isolated_vertex() {
        let g = Graph::erdos_renyi(9, 0.35, 11).unwrap();
        let base = normalized_estrada_index(&g).unwrap();
        let with_isolated =
            Graph::disjoint_union(&[g, Graph::complete(1).unwrap()]);
        let grown = normalized_estrada_index(&with_isolated).unwrap();
        assert_abs_diff_eq!(grown - base, (-1.0f64).exp(), epsilon = 1e-10);
    }
}
