//! Graph matrices (adjacency, Laplacian, normalized Laplacian) and their
//! spectra.
//!
//! The normalized Laplacian is always built in its symmetric form
//! D^{-1/2} (D - A) D^{-1/2}. The similar non-symmetric form I - D^{-1} A
//! has the same eigenvalues but defeats symmetric eigensolvers, so it is
//! deliberately never constructed. Isolated vertices follow the d^{-1} = 0
//! convention and contribute a zero row and column.

use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::{self, SymmetricMatrix};
use crate::textfmt::sig_digits;

/// Which graph matrix a spectrum was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    NormalizedLaplacian,
}

/// Eigenvalues of one graph matrix, sorted descending.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    source: MatrixKind,
    graph_order: usize,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn source(&self) -> MatrixKind {
        self.source
    }

    pub fn graph_order(&self) -> usize {
        self.graph_order
    }

    /// One eigenvalue per line, descending, 15 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.values {
            out.push_str(&sig_digits(*v, 15));
            out.push('\n');
        }
        out
    }
}

/// 0/1 adjacency matrix with zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n_vertices());
    for &(u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// Combinatorial Laplacian D - A.
pub fn laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n_vertices());
    for v in 0..g.n_vertices() {
        m.set(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, -1.0);
    }
    m
}

/// Symmetric normalized Laplacian D^{-1/2} (D - A) D^{-1/2}.
///
/// Entry (i,i) is 1 for non-isolated vertices and 0 for isolated ones;
/// entry (i,j) is -1/sqrt(d_i d_j) on edges.
pub fn normalized_laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n_vertices());
    for v in 0..g.n_vertices() {
        if g.degree(v) > 0 {
            m.set(v, v, 1.0);
        }
    }
    for &(u, v) in g.edges() {
        let w = -1.0 / ((g.degree(u) as f64) * (g.degree(v) as f64)).sqrt();
        m.set(u, v, w);
    }
    m
}

/// Spectrum of the requested matrix, via the dense Jacobi solver.
pub fn spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    let m = match kind {
        MatrixKind::Adjacency => adjacency_matrix(g),
        MatrixKind::Laplacian => laplacian_matrix(g),
        MatrixKind::NormalizedLaplacian => normalized_laplacian_matrix(g),
    };
    let values = linalg::sym_eigenvalues_default(&m)?;
    Ok(Spectrum {
        values,
        source: kind,
        graph_order: g.n_vertices(),
    })
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum(g, MatrixKind::Adjacency)
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum(g, MatrixKind::Laplacian)
}

pub fn normalized_laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum(g, MatrixKind::NormalizedLaplacian)
}

/// Gap threshold for extracting integer multiplicities from floating-point
/// spectra: adjacent sorted values closer than this belong to one cluster.
pub const CLUSTER_GAP: f64 = 1e-6;

/// Collapse a floating-point spectrum into (mean value, multiplicity)
/// clusters, ascending. Two sorted neighbors join the same cluster when
/// they differ by less than `gap`.
pub fn cluster_multiplicities(values: &[f64], gap: f64) -> Vec<(f64, usize)> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    let mut clusters = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] >= gap {
            let chunk = &sorted[start..i];
            let mean = chunk.iter().sum::<f64>() / chunk.len() as f64;
            clusters.push((mean, chunk.len()));
            start = i;
        }
    }
    clusters
}

/// Multiplicity of the cluster nearest `target` (0 when no cluster mean
/// falls within `gap` of it).
pub fn clustered_multiplicity(values: &[f64], target: f64, gap: f64) -> usize {
    cluster_multiplicities(values, gap)
        .into_iter()
        .filter(|(mean, _)| (mean - target).abs() < gap)
        .map(|(_, count)| count)
        .sum()
}

/// One validated property of a normalized Laplacian spectrum.
#[derive(Debug, Clone)]
pub struct SpectrumCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Validation report for a normalized Laplacian spectrum: trace identity,
/// eigenvalue range, and the connected-bipartite top-of-spectrum property.
#[derive(Debug, Clone)]
pub struct NormalizedSpectrumReport {
    pub checks: Vec<SpectrumCheck>,
}

impl NormalizedSpectrumReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}: {} ({})\n",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.detail
            ));
        }
        out
    }
}

/// Check the defining properties of a normalized Laplacian spectrum.
///
/// Validates, with failures reported rather than raised:
/// - eigenvalue sum equals N - r (the number of non-isolated vertices),
///   within `tol * N`;
/// - all values lie in [0, 2] within `tol`, and the smallest is 0 within
///   `tol`;
/// - for connected bipartite graphs of order >= 2: the largest value is 2
///   within `tol` and the second largest is strictly below 2 - tol.
pub fn check_normalized_spectrum(g: &Graph, s: &Spectrum, tol: f64) -> NormalizedSpectrumReport {
    assert_eq!(s.source(), MatrixKind::NormalizedLaplacian);
    assert_eq!(s.graph_order(), g.n_vertices());
    let n = g.n_vertices();
    let values = s.values();
    let mut checks = Vec::new();

    let stats = g.component_stats();
    let expected_sum = (n - stats.isolated) as f64;
    let sum: f64 = values.iter().sum();
    checks.push(SpectrumCheck {
        name: "eigenvalue sum equals non-isolated vertex count",
        pass: (sum - expected_sum).abs() <= tol * n.max(1) as f64,
        detail: format!("sum {sum}, expected {expected_sum}"),
    });

    let max = values.first().copied().unwrap_or(0.0);
    let min = values.last().copied().unwrap_or(0.0);
    checks.push(SpectrumCheck {
        name: "eigenvalues in [0, 2] with smallest at 0",
        pass: n == 0 || (min >= -tol && max <= 2.0 + tol && min.abs() <= tol),
        detail: format!("min {min}, max {max}"),
    });

    if n >= 2 && stats.components == 1 && g.is_bipartite() {
        let second = values[1];
        checks.push(SpectrumCheck {
            name: "connected bipartite: top eigenvalue 2, simple",
            pass: (max - 2.0).abs() <= tol && second < 2.0 - tol,
            detail: format!("largest {max}, second {second}"),
        });
    }

    NormalizedSpectrumReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn adjacency_entries() {
        let k2 = Graph::complete(2).unwrap();
        let a = adjacency_matrix(&k2);
        assert_eq!((a.get(0, 0), a.get(0, 1), a.get(1, 0)), (0.0, 1.0, 1.0));

        let edgeless = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(adjacency_matrix(&edgeless).frobenius_norm(), 0.0);

        let k3 = Graph::complete(3).unwrap();
        let a = adjacency_matrix(&k3);
        assert_eq!(a.get(1, 2), 1.0);
        assert_eq!(a.get(2, 2), 0.0);
    }

    #[test]
    fn laplacian_entries_and_trace() {
        let k2 = Graph::complete(2).unwrap();
        let l = laplacian_matrix(&k2);
        assert_eq!((l.get(0, 0), l.get(0, 1)), (1.0, -1.0));

        // Isolated vertex: all-zero row and column.
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let l = laplacian_matrix(&g);
        assert_eq!((l.get(2, 0), l.get(2, 1), l.get(2, 2)), (0.0, 0.0, 0.0));

        let g = Graph::erdos_renyi(9, 0.4, 5).unwrap();
        assert_eq!(laplacian_matrix(&g).trace(), 2.0 * g.n_edges() as f64);
    }

    #[test]
    fn normalized_laplacian_entries() {
        let k2 = Graph::complete(2).unwrap();
        let l = normalized_laplacian_matrix(&k2);
        assert_eq!((l.get(0, 0), l.get(0, 1)), (1.0, -1.0));

        let k1 = Graph::complete(1).unwrap();
        let l = normalized_laplacian_matrix(&k1);
        assert_eq!(l.get(0, 0), 0.0);

        // Star: center degree 3, leaves degree 1 -> off-diagonal -1/sqrt(3).
        let star = Graph::complete_bipartite(1, 3).unwrap();
        let l = normalized_laplacian_matrix(&star);
        assert_abs_diff_eq!(l.get(0, 1), -1.0 / 3.0f64.sqrt(), epsilon = 1e-15);
        assert_eq!(l.get(1, 2), 0.0);
    }

    #[test]
    fn complete_graph_spectrum() {
        // K_N: N/(N-1) with multiplicity N-1, plus a single 0.
        let s = normalized_laplacian_spectrum(&Graph::complete(4).unwrap()).unwrap();
        for v in &s.values()[..3] {
            assert_abs_diff_eq!(*v, 4.0 / 3.0, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(s.values()[3], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn star_and_k22_spectra() {
        let star = normalized_laplacian_spectrum(&Graph::complete_bipartite(1, 3).unwrap()).unwrap();
        let expect = [2.0, 1.0, 1.0, 0.0];
        for (v, e) in star.values().iter().zip(expect) {
            assert_abs_diff_eq!(*v, e, epsilon = 1e-12);
        }

        let k22 = normalized_laplacian_spectrum(&Graph::complete_bipartite(2, 2).unwrap()).unwrap();
        for (v, e) in k22.values().iter().zip(expect) {
            assert_abs_diff_eq!(*v, e, epsilon = 1e-12);
        }
    }

    #[test]
    fn clustering_extracts_multiplicities() {
        let values = [2.0, 1.0 + 3e-9, 1.0, 1.0 - 2e-9, 1e-12];
        let clusters = cluster_multiplicities(&values, CLUSTER_GAP);
        assert_eq!(clusters.len(), 3);
        assert_eq!(clusters[0].1, 1);
        assert_eq!(clusters[1].1, 3);
        assert_eq!(clusters[2].1, 1);
        assert_eq!(clustered_multiplicity(&values, 1.0, CLUSTER_GAP), 3);
        assert_eq!(clustered_multiplicity(&values, 0.5, CLUSTER_GAP), 0);
    }

    #[test]
    fn normalized_spectrum_report() {
        let k3 = Graph::complete(3).unwrap();
        let s = normalized_laplacian_spectrum(&k3).unwrap();
        let report = check_normalized_spectrum(&k3, &s, 1e-9);
        assert!(report.passed(), "{}", report.to_text());

        // Union with an isolated vertex: sum check uses N - r.
        let g = Graph::disjoint_union(&[
            Graph::complete(3).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::complete(1).unwrap(),
        ]);
        let s = normalized_laplacian_spectrum(&g).unwrap();
        let sum: f64 = s.values().iter().sum();
        assert_abs_diff_eq!(sum, 6.0, epsilon = 1e-9);
        assert!(check_normalized_spectrum(&g, &s, 1e-9).passed());

        // Connected bipartite clause.
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = normalized_laplacian_spectrum(&p4).unwrap();
        let report = check_normalized_spectrum(&p4, &s, 1e-9);
        assert_eq!(report.checks.len(), 3);
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn spectrum_text_is_descending_15_digits() {
        let s = laplacian_spectrum(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(s.to_text(), "2.00000000000000\n0.00000000000000\n");
    }
}
