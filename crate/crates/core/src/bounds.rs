//! Extremal bounds on the normalized Laplacian Estrada index, with
//! equality detection.
//!
//! Three bounds are evaluated:
//! - a lower bound for connected graphs, attained exactly by complete
//!   graphs ("thm1" in reports);
//! - a lower/upper sandwich for connected bipartite graphs in terms of the
//!   maximum and minimum degree, attained exactly by regular complete
//!   bipartite graphs K_{d,d} ("thm2");
//! - a lower bound for arbitrary graphs in terms of the component count c
//!   and the isolated-vertex count r, attained exactly by disjoint unions
//!   of equal-order complete graphs plus isolated vertices ("thm3").
//!
//! The bound evaluators take scalar summaries (N, c, r, max/min degree)
//! rather than graphs so they can be evaluated on hypothetical parameter
//! grids; `evaluate_bounds` is the graph-level wrapper.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices;
use crate::textfmt::sig_digits;

/// Default tolerance for flagging equality between NEE and a bound value.
/// Well above solver error at test-corpus sizes, well below the smallest
/// genuine gap observed on random sweeps.
pub const DEFAULT_EQUALITY_TOL: f64 = 1e-9;

const E: f64 = std::f64::consts::E;
const E_INV: f64 = 1.0 / std::f64::consts::E;

/// Lower bound for connected graphs of order n >= 2:
/// (N-1) e^{1/(N-1)} + e^{-1}, attained exactly by K_N.
pub fn connected_lower_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "connected-graph bound requires order >= 2".into(),
        ));
    }
    let nf = n as f64;
    Ok((nf - 1.0) * (1.0 / (nf - 1.0)).exp() + E_INV)
}

/// Sandwich bounds for connected bipartite graphs of order n with maximum
/// degree `max_deg` and minimum degree `min_deg`:
///
/// lower = e^{-1} + e + sqrt((N-2)^2 + 2(N-2D)/D)
/// upper = e^{-1} + e + (N-3) - sqrt((N-2d)/d) + e^{sqrt((N-2d)/d)}
///
/// Both are attained exactly by K_{d,d}. A negative radicand (possible only
/// for parameter combinations no actual connected bipartite graph realizes)
/// is a domain error, not a clamp.
pub fn bipartite_bounds(n: usize, max_deg: usize, min_deg: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "bipartite bounds require order >= 2".into(),
        ));
    }
    if min_deg < 1 || min_deg > max_deg || max_deg >= n {
        return Err(Error::InvalidParameter(format!(
            "degree bounds must satisfy 1 <= min <= max < N (got min {min_deg}, max {max_deg}, N {n})"
        )));
    }
    let nf = n as f64;
    let dmax = max_deg as f64;
    let dmin = min_deg as f64;

    let lower_radicand = (nf - 2.0) * (nf - 2.0) + 2.0 * (nf - 2.0 * dmax) / dmax;
    if lower_radicand < 0.0 {
        return Err(Error::NegativeRadicand {
            bound: "lower",
            radicand: lower_radicand,
        });
    }
    let upper_radicand = (nf - 2.0 * dmin) / dmin;
    if upper_radicand < 0.0 {
        return Err(Error::NegativeRadicand {
            bound: "upper",
            radicand: upper_radicand,
        });
    }
    let lower = E_INV + E + lower_radicand.sqrt();
    let root = upper_radicand.sqrt();
    let upper = E_INV + E + (nf - 3.0) - root + root.exp();
    Ok((lower, upper))
}

/// Lower bound for arbitrary graphs of order n with c components, r of
/// which are isolated vertices: (N-c) e^{(c-r)/(N-c)} + c e^{-1}.
///
/// When N = c every component is an isolated vertex; the first term is
/// taken as 0 and the bound is N e^{-1}, which such graphs attain exactly.
pub fn component_lower_bound(n: usize, c: usize, r: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "component bound requires order >= 1".into(),
        ));
    }
    if c < 1 || c > n || r > c {
        return Err(Error::InvalidParameter(format!(
            "component counts must satisfy 1 <= c <= N and r <= c (got c {c}, r {r}, N {n})"
        )));
    }
    if n == c {
        return Ok(n as f64 * E_INV);
    }
    let free = (n - c) as f64;
    Ok(free * ((c - r) as f64 / free).exp() + c as f64 * E_INV)
}

/// NEE of a graph together with every applicable bound, equality flags,
/// and soundness tripwires.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub order: usize,
    pub components: usize,
    pub isolated: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub nee: f64,
    /// Connected-graph lower bound; present iff connected with order >= 2.
    pub connected_lower: Option<f64>,
    /// Bipartite sandwich; present iff connected, bipartite, order >= 2 and
    /// no domain error occurred.
    pub bipartite_lower: Option<f64>,
    pub bipartite_upper: Option<f64>,
    /// Reason the bipartite bounds are absent despite applicability.
    pub bipartite_note: Option<String>,
    /// Component-count lower bound; always present.
    pub component_lower: f64,
    pub connected_equality: Option<bool>,
    pub bipartite_lower_equality: Option<bool>,
    pub bipartite_upper_equality: Option<bool>,
    pub component_equality: bool,
    /// Clique order s when the graph is a union of K_s components plus
    /// isolated vertices (the structural equality family of the component
    /// bound).
    pub clique_union_order: Option<usize>,
    pub tol: f64,
    /// Soundness violations: any reported lower above NEE + tol, any upper
    /// below NEE - tol, or an equality flag that contradicts the structural
    /// detector. Non-empty means a numerical or logic defect.
    pub violations: Vec<String>,
}

impl BoundReport {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }

    /// Flat key-value text block (12 significant digits for reals).
    pub fn to_text(&self) -> String {
        fn real(x: f64) -> String {
            sig_digits(x, 12)
        }
        fn opt_real(x: Option<f64>) -> String {
            x.map_or_else(|| "n/a".to_string(), real)
        }
        fn opt_bool(x: Option<bool>) -> String {
            x.map_or_else(|| "n/a".to_string(), |b| b.to_string())
        }
        let mut out = String::new();
        out.push_str(&format!("order = {}\n", self.order));
        out.push_str(&format!("components = {}\n", self.components));
        out.push_str(&format!("isolated = {}\n", self.isolated));
        out.push_str(&format!("connected = {}\n", self.connected));
        out.push_str(&format!("bipartite = {}\n", self.bipartite));
        out.push_str(&format!("nee = {}\n", real(self.nee)));
        out.push_str(&format!("connected_lower = {}\n", opt_real(self.connected_lower)));
        out.push_str(&format!(
            "connected_equality = {}\n",
            opt_bool(self.connected_equality)
        ));
        out.push_str(&format!("bipartite_lower = {}\n", opt_real(self.bipartite_lower)));
        out.push_str(&format!("bipartite_upper = {}\n", opt_real(self.bipartite_upper)));
        out.push_str(&format!(
            "bipartite_lower_equality = {}\n",
            opt_bool(self.bipartite_lower_equality)
        ));
        out.push_str(&format!(
            "bipartite_upper_equality = {}\n",
            opt_bool(self.bipartite_upper_equality)
        ));
        if let Some(note) = &self.bipartite_note {
            out.push_str(&format!("bipartite_note = {note}\n"));
        }
        out.push_str(&format!("component_lower = {}\n", real(self.component_lower)));
        out.push_str(&format!("component_equality = {}\n", self.component_equality));
        out.push_str(&format!(
            "clique_union_order = {}\n",
            self.clique_union_order
                .map_or_else(|| "n/a".to_string(), |s| s.to_string())
        ));
        out.push_str(&format!("equality_tol = {:e}\n", self.tol));
        out.push_str(&format!("sound = {}\n", self.is_sound()));
        for v in &self.violations {
            out.push_str(&format!("violation = {v}\n"));
        }
        out
    }

    pub fn csv_header() -> &'static str {
        "N,c,r,connected,bipartite,nee,connected_lower,bipartite_lower,bipartite_upper,component_lower,component_equality"
    }

    pub fn to_csv_row(&self) -> String {
        fn opt_real(x: Option<f64>) -> String {
            x.map_or_else(|| "n/a".to_string(), |v| sig_digits(v, 12))
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.order,
            self.components,
            self.isolated,
            self.connected,
            self.bipartite,
            sig_digits(self.nee, 12),
            opt_real(self.connected_lower),
            opt_real(self.bipartite_lower),
            opt_real(self.bipartite_upper),
            sig_digits(self.component_lower, 12),
            self.component_equality,
        )
    }
}

/// Compute NEE and evaluate every applicable bound against it.
///
/// Equality is flagged when |NEE - bound| < tol. The component-bound
/// equality flag is cross-checked against the structural clique-union
/// detector (edgeless graphs also belong to the equality family); any
/// disagreement, or a bound on the wrong side of NEE, lands in
/// `violations`.
pub fn evaluate_bounds(g: &Graph, tol: f64) -> Result<BoundReport> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = g.n_vertices();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let stats = g.component_stats();
    let connected = stats.components == 1;
    let bipartite = g.is_bipartite();
    let degrees = g.degree_stats();
    let nee = indices::normalized_estrada_index(g)?;

    let connected_lower = if connected && n >= 2 {
        Some(connected_lower_bound(n)?)
    } else {
        None
    };

    let mut bipartite_note = None;
    let (bipartite_lower, bipartite_upper) = if connected && bipartite && n >= 2 {
        match bipartite_bounds(n, degrees.max_degree, degrees.min_degree) {
            Ok((lo, hi)) => (Some(lo), Some(hi)),
            Err(e @ Error::NegativeRadicand { .. }) => {
                bipartite_note = Some(e.to_string());
                (None, None)
            }
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };

    let component_lower = component_lower_bound(n, stats.components, stats.isolated)?;

    let eq = |bound: f64| (nee - bound).abs() < tol;
    let connected_equality = connected_lower.map(eq);
    let bipartite_lower_equality = bipartite_lower.map(eq);
    let bipartite_upper_equality = bipartite_upper.map(eq);
    let component_equality = eq(component_lower);
    let clique_union_order = g.clique_union_order();

    let mut violations = Vec::new();
    for (name, lower) in [
        ("connected_lower", connected_lower),
        ("bipartite_lower", bipartite_lower),
        ("component_lower", Some(component_lower)),
    ] {
        if let Some(lo) = lower {
            if lo > nee + tol {
                violations.push(format!("{name} {lo} exceeds nee {nee}"));
            }
        }
    }
    if let Some(hi) = bipartite_upper {
        if hi < nee - tol {
            violations.push(format!("bipartite_upper {hi} is below nee {nee}"));
        }
    }
    let structural_equality = clique_union_order.is_some() || g.n_edges() == 0;
    if component_equality != structural_equality {
        violations.push(format!(
            "component equality flag {component_equality} disagrees with structural detector {structural_equality}"
        ));
    }

    Ok(BoundReport {
        order: n,
        components: stats.components,
        isolated: stats.isolated,
        connected,
        bipartite,
        nee,
        connected_lower,
        bipartite_lower,
        bipartite_upper,
        bipartite_note,
        component_lower,
        connected_equality,
        bipartite_lower_equality,
        bipartite_upper_equality,
        component_equality,
        clique_union_order,
        tol,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn connected_lower_bound_values() {
        assert_abs_diff_eq!(
            connected_lower_bound(2).unwrap(),
            3.0861612696304874,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            connected_lower_bound(3).unwrap(),
            3.6653219825716987,
            epsilon = 1e-14
        );
        assert!(connected_lower_bound(1).is_err());

        let nee_k5 = indices::normalized_estrada_index(&Graph::complete(5).unwrap()).unwrap();
        assert!((nee_k5 - connected_lower_bound(5).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn bipartite_bounds_values() {
        // K_{2,2}: both bounds collapse onto NEE.
        let (lo, hi) = bipartite_bounds(4, 2, 2).unwrap();
        assert_abs_diff_eq!(lo, 5.086161269630487, epsilon = 1e-14);
        assert_abs_diff_eq!(hi, 5.086161269630487, epsilon = 1e-14);

        // Star on 4 vertices: max degree 3, min degree 1.
        let (lo, hi) = bipartite_bounds(4, 3, 1).unwrap();
        assert_abs_diff_eq!(lo, 4.71915443148594, epsilon = 1e-12);
        assert_abs_diff_eq!(hi, 6.78519808604032, epsilon = 1e-12);

        // K_2 = K_{1,1} is complete bipartite regular.
        let (lo, hi) = bipartite_bounds(2, 1, 1).unwrap();
        assert_abs_diff_eq!(lo, 3.0861612696304874, epsilon = 1e-14);
        assert_abs_diff_eq!(hi, 3.0861612696304874, epsilon = 1e-14);
    }

    #[test]
    fn bipartite_bounds_domain_errors() {
        assert!(matches!(
            bipartite_bounds(3, 2, 2),
            Err(Error::NegativeRadicand { bound: "upper", .. })
        ));
        assert!(bipartite_bounds(1, 1, 1).is_err());
        assert!(bipartite_bounds(4, 1, 2).is_err());
        assert!(bipartite_bounds(4, 4, 1).is_err());
    }

    #[test]
    fn component_lower_bound_values() {
        assert_abs_diff_eq!(
            component_lower_bound(7, 3, 1).unwrap(),
            7.698523406314839,
            epsilon = 1e-12
        );
        // Degenerate all-isolated case.
        assert_abs_diff_eq!(
            component_lower_bound(4, 4, 4).unwrap(),
            1.4715177646857693,
            epsilon = 1e-14
        );
        assert!(component_lower_bound(0, 1, 0).is_err());
        assert!(component_lower_bound(4, 0, 0).is_err());
        assert!(component_lower_bound(4, 5, 0).is_err());
        assert!(component_lower_bound(4, 2, 3).is_err());
    }

    #[test]
    fn component_bound_reduces_to_connected_bound() {
        for n in 2..=100 {
            let a = component_lower_bound(n, 1, 0).unwrap();
            let b = connected_lower_bound(n).unwrap();
            assert_eq!(a.to_bits(), b.to_bits(), "mismatch at N = {n}");
        }
    }

    #[test]
    fn report_on_clique_union() {
        let g = Graph::disjoint_union(&[
            Graph::complete(3).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::complete(1).unwrap(),
        ]);
        let report = evaluate_bounds(&g, DEFAULT_EQUALITY_TOL).unwrap();
        assert!(report.component_equality);
        assert_eq!(report.clique_union_order, Some(3));
        assert!(report.is_sound(), "{:?}", report.violations);
        assert_abs_diff_eq!(report.nee, 7.698523406314839, epsilon = 1e-10);
        assert!(report.connected_lower.is_none());
    }

    #[test]
    fn report_on_path_is_strict() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let report = evaluate_bounds(&p4, DEFAULT_EQUALITY_TOL).unwrap();
        assert!(!report.component_equality);
        assert_eq!(report.clique_union_order, None);
        assert!(report.is_sound(), "{:?}", report.violations);
        assert_eq!(report.connected_equality, Some(false));
        assert!(report.bipartite_lower.is_some());
    }

    #[test]
    fn report_on_regular_complete_bipartite() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        let report = evaluate_bounds(&g, DEFAULT_EQUALITY_TOL).unwrap();
        assert_eq!(report.bipartite_lower_equality, Some(true));
        assert_eq!(report.bipartite_upper_equality, Some(true));
        assert!(report.is_sound(), "{:?}", report.violations);
    }

    #[test]
    fn report_on_edgeless_graph() {
        let g = Graph::from_edge_list(6, &[]).unwrap();
        let report = evaluate_bounds(&g, DEFAULT_EQUALITY_TOL).unwrap();
        assert!(report.component_equality);
        assert_eq!(report.clique_union_order, None);
        assert!(report.is_sound(), "{:?}", report.violations);
    }

    #[test]
    fn report_text_block_shape() {
        let g = Graph::complete(4).unwrap();
        let report = evaluate_bounds(&g, DEFAULT_EQUALITY_TOL).unwrap();
        let text = report.to_text();
        assert!(text.contains("nee = "));
        assert!(text.contains("connected_equality = true"));
        assert!(text.contains("sound = true"));
        assert!(evaluate_bounds(&Graph::from_edge_list(0, &[]).unwrap(), 1e-9).is_err());
    }
}
