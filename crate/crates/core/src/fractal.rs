//! A family of self-similar trees built by iterated edge subdivision.
//!
//! Generation 0 is a single edge. Each generation replaces every edge
//! (u, v) by a path u - w - v through a fresh middle vertex w and attaches
//! m fresh leaves to w, so order and size grow as N = (m+2)^n + 1,
//! E = (m+2)^n. The m = 1 case is the classical T-fractal and m = 2 the
//! Peano basin fractal. Every generation is a connected bipartite tree
//! with maximum degree m+2 and minimum degree 1.
//!
//! The same graph arises by coalescing m+2 replicas of the previous
//! generation at one designated outmost vertex each; `build_fractal_merged`
//! implements that route, and the two constructions are cross-checked by
//! degree sequence and spectrum in the test suites.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph order the builders will materialize.
pub const SIZE_CAP: u64 = 2_000_000;

/// A built fractal tree plus its structural metadata.
///
/// `inmost` is the center vertex (the midpoint of the unique longest path;
/// present for n >= 1), `outmost` the vertices at maximum distance from it.
/// `birth_generation[v]` records the generation at which vertex v appeared.
#[derive(Debug, Clone)]
pub struct FractalGraph {
    graph: Graph,
    m: usize,
    n: usize,
    inmost: Option<usize>,
    outmost: Vec<usize>,
    birth_generation: Vec<usize>,
}

impl FractalGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inmost(&self) -> Option<usize> {
        self.inmost
    }

    /// Vertices at maximum distance from the inmost vertex, ascending.
    pub fn outmost(&self) -> &[usize] {
        &self.outmost
    }

    pub fn birth_generation(&self) -> &[usize] {
        &self.birth_generation
    }

    /// Edge-list text with header comments recording the parameters.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# fractal m={} n={}\n", self.m, self.n));
        match self.inmost {
            Some(v) => out.push_str(&format!("# inmost {v}\n")),
            None => out.push_str("# inmost none\n"),
        }
        out.push_str("# outmost");
        for v in &self.outmost {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
        out.push_str(&self.graph.to_edge_list());
        out
    }
}

/// (N, E) = ((m+2)^n + 1, (m+2)^n), with checked 64-bit arithmetic.
pub fn fractal_counts(m: usize, n: usize) -> Result<(u64, u64)> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "branching parameter m must be at least 1".into(),
        ));
    }
    let base = m as u64 + 2;
    let exponent = u32::try_from(n).map_err(|_| Error::CountOverflow {
        base,
        exponent: u32::MAX,
    })?;
    let edges = base
        .checked_pow(exponent)
        .ok_or(Error::CountOverflow { base, exponent })?;
    let vertices = edges
        .checked_add(1)
        .ok_or(Error::CountOverflow { base, exponent })?;
    Ok((vertices, edges))
}

fn check_cap(m: usize, n: usize) -> Result<u64> {
    let (vertices, _) = fractal_counts(m, n)?;
    if vertices > SIZE_CAP {
        return Err(Error::SizeCap {
            order: vertices,
            cap: SIZE_CAP,
        });
    }
    Ok(vertices)
}

/// Build generation n by iterated edge subdivision.
///
/// Edges of each generation are processed in ascending (u, v) order and new
/// vertices are appended, so the labeling (and any file output) is fully
/// deterministic, and a vertex keeps its id and its degree in every later
/// generation.
pub fn build_fractal(m: usize, n: usize) -> Result<FractalGraph> {
    let expected = check_cap(m, n)? as usize;
    let mut next_vertex = 2usize;
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut birth = vec![0usize, 0];
    for generation in 1..=n {
        let mut grown = Vec::with_capacity(edges.len() * (m + 2));
        edges.sort_unstable();
        for &(u, v) in &edges {
            let mid = next_vertex;
            next_vertex += 1;
            birth.push(generation);
            grown.push((u, mid));
            grown.push((v, mid));
            for _ in 0..m {
                let leaf = next_vertex;
                next_vertex += 1;
                birth.push(generation);
                grown.push((mid, leaf));
            }
        }
        edges = grown;
    }
    debug_assert_eq!(next_vertex, expected);
    let graph = Graph::from_edge_list(next_vertex, &edges)?;
    let (inmost, outmost) = locate_centers(&graph, n);
    Ok(FractalGraph {
        graph,
        m,
        n,
        inmost,
        outmost,
        birth_generation: birth,
    })
}

/// Build generation n by coalescing m+2 replicas of generation n-1 at one
/// designated outmost vertex each; the merge point becomes the new inmost
/// vertex (vertex 0 under this labeling).
///
/// The designated hook of each replica is its smallest-labeled outmost
/// vertex (for generation 0, vertex 0). Replica i's remaining vertices map
/// to 1 + i*(N' - 1) + rank, with rank the vertex's position among the
/// replica's non-hook ids in ascending order.
pub fn build_fractal_merged(m: usize, n: usize) -> Result<FractalGraph> {
    check_cap(m, n)?;
    let mut order = 2usize;
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut hook = 0usize;
    let mut birth = vec![0usize, 0];
    for generation in 1..=n {
        let prev_order = order;
        let prev_edges = edges;
        let prev_hook = hook;
        let prev_birth = birth;
        let copies = m + 2;
        let stride = prev_order - 1;
        order = copies * stride + 1;
        birth = vec![0; order];
        birth[0] = generation;
        let relabel = |copy: usize, v: usize| -> usize {
            if v == prev_hook {
                0
            } else {
                1 + copy * stride + v - usize::from(v > prev_hook)
            }
        };
        edges = Vec::with_capacity(prev_edges.len() * copies);
        for copy in 0..copies {
            for &(u, v) in &prev_edges {
                let (a, b) = (relabel(copy, u), relabel(copy, v));
                edges.push((a.min(b), a.max(b)));
            }
            for v in 0..prev_order {
                if v != prev_hook {
                    birth[relabel(copy, v)] = prev_birth[v];
                }
            }
        }
        // Next hook: the smallest vertex at maximum distance from the new
        // center.
        let graph = Graph::from_edge_list(order, &edges)?;
        let dist = graph.bfs_distances(0);
        let max = dist.iter().copied().max().unwrap_or(0);
        hook = dist
            .iter()
            .position(|&d| d == max)
            .expect("non-empty graph");
    }
    let graph = Graph::from_edge_list(order, &edges)?;
    let (inmost, outmost) = locate_centers(&graph, n);
    Ok(FractalGraph {
        graph,
        m,
        n,
        inmost,
        outmost,
        birth_generation: birth,
    })
}

/// Find the inmost vertex (tree center) and the outmost set, independent
/// of labeling.
///
/// Double BFS locates a diameter path; its length is 2^n (even), so the
/// tree has a unique center, the vertex equidistant from both endpoints.
/// The outmost set collects every vertex at maximum distance from it.
fn locate_centers(graph: &Graph, n: usize) -> (Option<usize>, Vec<usize>) {
    if n == 0 {
        return (None, vec![0, 1]);
    }
    let probe = graph.bfs_distances(0);
    let far_a = argmax(&probe);
    let from_a = graph.bfs_distances(far_a);
    let far_b = argmax(&from_a);
    let from_b = graph.bfs_distances(far_b);
    let diameter = from_a[far_b];
    debug_assert_eq!(diameter, 1 << n);
    let radius = diameter / 2;
    let inmost = (0..graph.n_vertices())
        .find(|&v| from_a[v] == radius && from_b[v] == radius)
        .expect("even-diameter tree has a center");
    let dist = graph.bfs_distances(inmost);
    let max = dist.iter().copied().max().unwrap_or(0);
    let outmost = (0..graph.n_vertices())
        .filter(|&v| dist[v] == max)
        .collect();
    (Some(inmost), outmost)
}

fn argmax(dist: &[usize]) -> usize {
    let mut best = 0;
    for (v, &d) in dist.iter().enumerate() {
        if d > dist[best] {
            best = v;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_formula() {
        assert_eq!(fractal_counts(1, 7).unwrap(), (2188, 2187));
        assert_eq!(fractal_counts(5, 3).unwrap(), (344, 343));
        assert_eq!(fractal_counts(3, 0).unwrap(), (2, 1));
        assert!(matches!(
            fractal_counts(8, 25),
            Err(Error::CountOverflow { .. })
        ));
        assert!(fractal_counts(0, 2).is_err());
    }

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(
            build_fractal(1, 14),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn generation_zero_is_an_edge() {
        let f = build_fractal(3, 0).unwrap();
        assert_eq!((f.graph().n_vertices(), f.graph().n_edges()), (2, 1));
        assert_eq!(f.inmost(), None);
        assert_eq!(f.outmost(), &[0, 1]);
    }

    #[test]
    fn generation_one_is_a_star() {
        for m in 1..=4 {
            let f = build_fractal(m, 1).unwrap();
            let stats = f.graph().degree_stats();
            assert_eq!(stats.max_degree, m + 2);
            assert_eq!(stats.min_degree, 1);
            assert_eq!(f.graph().n_vertices(), m + 3);
            assert_eq!(f.inmost(), Some(2));
            assert_eq!(f.graph().degree(2), m + 2);
            assert_eq!(f.outmost().len(), m + 2);
        }
    }

    #[test]
    fn generation_two_structure() {
        let f = build_fractal(1, 2).unwrap();
        assert_eq!((f.graph().n_vertices(), f.graph().n_edges()), (10, 9));
        assert_eq!(f.inmost(), Some(2));
        // Original endpoints stay outmost and keep degree 1.
        assert!(f.outmost().contains(&0));
        assert!(f.outmost().contains(&1));
        assert_eq!(f.graph().degree(0), 1);
        assert_eq!(f.graph().degree(1), 1);
        let dist = f.graph().bfs_distances(2);
        assert_eq!(dist.iter().copied().max().unwrap(), 2);
    }

    #[test]
    fn invariants_across_small_grid() {
        for m in 1..=5 {
            for n in 0..=4 {
                let f = build_fractal(m, n).unwrap();
                let g = f.graph();
                let (nn, ee) = fractal_counts(m, n).unwrap();
                assert_eq!(g.n_vertices() as u64, nn);
                assert_eq!(g.n_edges() as u64, ee);
                assert_eq!(g.n_edges(), g.n_vertices() - 1);
                assert!(g.is_connected());
                assert!(g.is_bipartite());
                if n >= 1 {
                    let stats = g.degree_stats();
                    assert_eq!(stats.max_degree, m + 2);
                    assert_eq!(stats.min_degree, 1);
                    assert_eq!(g.degree(f.inmost().unwrap()), m + 2);
                }
                assert_eq!(f.birth_generation().len(), g.n_vertices());
            }
        }
    }

    #[test]
    fn subdivision_preserves_existing_degrees() {
        let big = build_fractal(2, 3).unwrap();
        for k in 0..3 {
            let small = build_fractal(2, k).unwrap();
            for v in 0..small.graph().n_vertices() {
                assert_eq!(small.graph().degree(v), big.graph().degree(v));
                assert_eq!(small.birth_generation()[v], big.birth_generation()[v]);
            }
        }
    }

    #[test]
    fn merged_construction_matches_subdivision() {
        for (m, n) in [(1, 1), (1, 2), (2, 2), (3, 1)] {
            let a = build_fractal(m, n).unwrap();
            let b = build_fractal_merged(m, n).unwrap();
            assert_eq!(a.graph().n_vertices(), b.graph().n_vertices());
            assert_eq!(a.graph().n_edges(), b.graph().n_edges());
            assert_eq!(
                a.graph().degree_stats().degree_sequence,
                b.graph().degree_stats().degree_sequence
            );
            assert_eq!(a.outmost().len(), b.outmost().len());
        }
        let merged = build_fractal_merged(2, 2).unwrap();
        assert_eq!((merged.graph().n_vertices(), merged.graph().n_edges()), (17, 16));
        assert_eq!(merged.inmost(), Some(0));
        assert_eq!(merged.graph().degree(0), 4);
    }

    #[test]
    fn edge_list_header_round_trips() {
        let f = build_fractal(1, 1).unwrap();
        let text = f.to_edge_list();
        assert!(text.starts_with("# fractal m=1 n=1\n# inmost 2\n# outmost 0 1 3\n"));
        let parsed = crate::graph::parse_edge_list(&text).unwrap();
        assert_eq!(parsed, *f.graph());
    }
}
