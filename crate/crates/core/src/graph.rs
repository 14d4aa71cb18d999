//! Simple undirected graphs: construction, generators, and structural
//! analysis (components, degrees, bipartiteness, clique-union detection).
//!
//! Vertices are dense 0-based indices. Every generator documents its
//! labeling so that file outputs are reproducible; spectra do not depend
//! on labels. Graphs are immutable after construction and all operations
//! here are pure functions.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// Simple undirected graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Sorted neighbor list per vertex.
    adjacency: Vec<Vec<usize>>,
    /// Normalized edge pairs (u < v), sorted lexicographically.
    edges: Vec<(usize, usize)>,
}

/// Connected-component summary: `components` counts all components,
/// `isolated` counts those of size one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStats {
    pub components: usize,
    pub isolated: usize,
    /// Component label per vertex, assigned in BFS discovery order.
    pub component_id: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    /// All vertex degrees, sorted descending.
    pub degree_sequence: Vec<usize>,
}

impl Graph {
    /// Build a graph from an explicit edge list.
    ///
    /// Duplicate edges (in either orientation) are rejected rather than
    /// merged: a duplicate in input data is almost always a corpus bug.
    pub fn from_edge_list(n_vertices: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n_vertices,
                    });
                }
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        let mut adjacency = vec![Vec::new(); n_vertices];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { adjacency, edges })
    }

    /// Complete graph K_s on vertices 0..s.
    pub fn complete(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter(
                "complete graph order must be at least 1".into(),
            ));
        }
        let pairs: Vec<_> = (0..s)
            .flat_map(|u| ((u + 1)..s).map(move |v| (u, v)))
            .collect();
        Self::from_edge_list(s, &pairs)
    }

    /// Complete bipartite graph K_{a,b}; parts are {0..a} and {a..a+b}.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(
                "bipartite part sizes must be at least 1".into(),
            ));
        }
        let pairs: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_edge_list(a + b, &pairs)
    }

    /// Disjoint union; part i's vertices are offset by the total order of
    /// parts 0..i.
    pub fn disjoint_union(parts: &[Graph]) -> Self {
        let n: usize = parts.iter().map(|g| g.n_vertices()).sum();
        let mut pairs = Vec::with_capacity(parts.iter().map(|g| g.n_edges()).sum());
        let mut offset = 0;
        for part in parts {
            pairs.extend(part.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += part.n_vertices();
        }
        Self::from_edge_list(n, &pairs).expect("parts are valid graphs")
    }

    /// Erdos-Renyi G(n, p), fully deterministic given `seed`.
    ///
    /// Each of the C(n,2) vertex pairs is visited in lexicographic order and
    /// included with probability p. The Bernoulli draw takes the top 53 bits
    /// of a ChaCha8 output keyed by `seed`, so the same seed reproduces the
    /// same graph on every platform regardless of RNG-library internals.
    pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::BadProbability(p));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                let draw = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                if draw < p {
                    pairs.push((u, v));
                }
            }
        }
        Self::from_edge_list(n, &pairs)
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges (u < v) in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n_vertices() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut pairs = self.edges.clone();
        pairs.push((u, v));
        Self::from_edge_list(self.n_vertices(), &pairs)
    }

    /// Label components by BFS in vertex order.
    pub fn component_stats(&self) -> ComponentStats {
        let n = self.n_vertices();
        let mut component_id = vec![usize::MAX; n];
        let mut components = 0;
        let mut isolated = 0;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if component_id[start] != usize::MAX {
                continue;
            }
            let label = components;
            components += 1;
            let mut size = 0;
            component_id[start] = label;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &w in &self.adjacency[u] {
                    if component_id[w] == usize::MAX {
                        component_id[w] = label;
                        queue.push_back(w);
                    }
                }
            }
            if size == 1 {
                isolated += 1;
            }
        }
        ComponentStats {
            components,
            isolated,
            component_id,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_stats().components == 1
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut degree_sequence: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        DegreeStats {
            max_degree: degree_sequence.first().copied().unwrap_or(0),
            min_degree: degree_sequence.last().copied().unwrap_or(0),
            degree_sequence,
        }
    }

    /// 2-coloring witness if the graph is bipartite (BFS; the root of each
    /// component gets color 0), `None` otherwise.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.n_vertices();
        let mut color = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Detect whether the graph is a disjoint union of complete graphs K_s
    /// (one fixed s >= 2) plus any number of isolated vertices; returns s.
    ///
    /// The check is purely structural (a component of order k is complete
    /// iff it has k(k-1)/2 internal edges), so no spectral tolerance enters.
    /// A graph consisting only of isolated vertices yields `None` (no s >= 2
    /// is determined by it).
    pub fn clique_union_order(&self) -> Option<usize> {
        let stats = self.component_stats();
        let mut sizes = vec![0usize; stats.components];
        for &id in &stats.component_id {
            sizes[id] += 1;
        }
        let mut internal_edges = vec![0usize; stats.components];
        for &(u, _) in &self.edges {
            internal_edges[stats.component_id[u]] += 1;
        }
        let mut s: Option<usize> = None;
        for (&k, &e) in sizes.iter().zip(&internal_edges) {
            if k == 1 {
                continue;
            }
            if e != k * (k - 1) / 2 {
                return None;
            }
            match s {
                None => s = Some(k),
                Some(prev) if prev != k => return None,
                Some(_) => {}
            }
        }
        s
    }

    /// Breadth-first distances from `start` (usize::MAX for unreachable).
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n_vertices()];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Serialize in the shared edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("N {}\n", self.n_vertices()));
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parse the edge-list text format: `#` lines are comments, the first
/// non-comment line is `N <count>`, each following non-comment line is
/// `<u> <v>` with 0-based indices.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n_vertices: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        if n_vertices.is_none() {
            let tag = tokens.next();
            let count = tokens.next();
            match (tag, count, tokens.next()) {
                (Some("N"), Some(c), None) => {
                    n_vertices = Some(c.parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("invalid vertex count {c:?}"),
                    })?);
                }
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: "expected header line `N <count>`".into(),
                    })
                }
            }
            continue;
        }
        let parse = |tok: Option<&str>| -> Result<usize> {
            match tok {
                Some(t) => t.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("invalid vertex index {t:?}"),
                }),
                None => Err(Error::Parse {
                    line: idx + 1,
                    msg: "expected `<u> <v>`".into(),
                }),
            }
        };
        let u = parse(tokens.next())?;
        let v = parse(tokens.next())?;
        if tokens.next().is_some() {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "trailing tokens after edge".into(),
            });
        }
        pairs.push((u, v));
    }
    match n_vertices {
        Some(n) => Graph::from_edge_list(n, &pairs),
        None => Err(Error::Parse {
            line: 0,
            msg: "missing header line `N <count>`".into(),
        }),
    }
}
