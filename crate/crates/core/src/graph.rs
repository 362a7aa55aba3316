//! Simple undirected graphs: power graphs, enhanced power graphs, joins,
//! and exact distance matrices.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("DisconnectedGraph: vertex {unreachable} is unreachable from vertex {from}")]
    DisconnectedGraph { from: usize, unreachable: usize },
    #[error("EmptyGraph: operation needs at least one vertex")]
    EmptyGraph,
    #[error("SizeMismatch: {0}")]
    SizeMismatch(String),
    #[error("InvalidEdge: {0}")]
    InvalidEdge(String),
    #[error("NotABijection: {0}")]
    NotABijection(String),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n], neighbors: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g.finish()
    }

    /// `K_{1,k}` with the centre at vertex 0.
    pub fn star(k: usize) -> Self {
        let mut g = Self::empty(k + 1);
        for v in 1..=k {
            g.insert_edge(0, v);
        }
        g.finish()
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g.finish()
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidEdge(format!("({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(GraphError::InvalidEdge(format!("self-loop at {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g.finish())
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.neighbors[u].push(v);
            self.neighbors[v].push(u);
        }
    }

    fn finish(mut self) -> Self {
        for nb in &mut self.neighbors {
            nb.sort_unstable();
        }
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Neighbours of `u`, ascending.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors[u].iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().iter().all(|&(u, v)| other.has_edge(u, v))
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| BigInt::from(u8::from(self.has_edge(i, j))))
    }

    /// Breadth-first distances from `source`; `None` marks unreachable.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.neighbors[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs shortest-path lengths as plain integers.
    pub fn distances(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        (0..self.n)
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .enumerate()
                    .map(|(v, d)| d.ok_or(GraphError::DisconnectedGraph { from: s, unreachable: v }))
                    .collect()
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Complete graph check, used to validate join parts.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// `K₁ + self`: a new vertex 0 adjacent to everything, all other
    /// vertices shifted up by one.
    pub fn cone(&self) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for v in 0..self.n {
            g.insert_edge(0, v + 1);
        }
        for (u, v) in self.edges() {
            g.insert_edge(u + 1, v + 1);
        }
        g.finish()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({} vertices, edges {:?})", self.n, self.edges())
    }
}

/// `a ~ b` iff one is a power of the other.
pub fn power_graph(g: &FiniteGroup) -> Graph {
    let mut out = Graph::empty(g.order());
    for a in 0..g.order() {
        for b in g.cyclic_subgroup(a) {
            if b != a {
                out.insert_edge(a, b);
            }
        }
    }
    out.finish()
}

/// `a ~ b` iff some cyclic subgroup contains both.
pub fn enhanced_power_graph(g: &FiniteGroup) -> Graph {
    let mut out = Graph::empty(g.order());
    for sub in g.cyclic_subgroups() {
        for (i, &a) in sub.iter().enumerate() {
            for &b in &sub[i + 1..] {
                out.insert_edge(a, b);
            }
        }
    }
    out.finish()
}

/// Power graph with the identity removed; vertex `k` is element `k + 1`.
pub fn proper_power_graph(g: &FiniteGroup) -> Graph {
    let keep: Vec<usize> = (1..g.order()).collect();
    induced_subgraph(&power_graph(g), &keep)
}

/// Subgraph induced on `keep`. New vertex `k` is the `k`-th smallest kept
/// vertex. Duplicates and out-of-range entries are ignored.
pub fn induced_subgraph(g: &Graph, keep: &[usize]) -> Graph {
    let mut kept: Vec<usize> = keep.iter().copied().filter(|&v| v < g.n).collect();
    kept.sort_unstable();
    kept.dedup();
    let mut out = Graph::empty(kept.len());
    for (i, &u) in kept.iter().enumerate() {
        for (j, &v) in kept.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                out.insert_edge(i, j);
            }
        }
    }
    out.finish()
}

/// An outer graph with one part graph per outer vertex.
#[derive(Debug, Clone)]
pub struct JoinSpec {
    outer: Graph,
    parts: Vec<Graph>,
}

impl JoinSpec {
    pub fn new(outer: Graph, parts: Vec<Graph>) -> Result<Self, GraphError> {
        if parts.len() != outer.vertex_count() {
            return Err(GraphError::SizeMismatch(format!(
                "{} parts for an outer graph on {} vertices",
                parts.len(),
                outer.vertex_count()
            )));
        }
        Ok(JoinSpec { outer, parts })
    }

    /// Outer graph with complete parts of the given sizes.
    pub fn complete_parts(outer: Graph, sizes: &[usize]) -> Result<Self, GraphError> {
        Self::new(outer, sizes.iter().map(|&k| Graph::complete(k)).collect())
    }

    pub fn outer(&self) -> &Graph {
        &self.outer
    }

    pub fn parts(&self) -> &[Graph] {
        &self.parts
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Graph::vertex_count).collect()
    }

    pub fn total_vertices(&self) -> usize {
        self.parts.iter().map(Graph::vertex_count).sum()
    }
}

/// `Γ[Γ₁, …, Γ_p]`, vertices blocked consecutively in part order.
pub fn graph_join(spec: &JoinSpec) -> Graph {
    let sizes = spec.part_sizes();
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for s in &sizes {
        offsets.push(acc);
        acc += s;
    }
    let mut out = Graph::empty(acc);
    for (i, part) in spec.parts.iter().enumerate() {
        for (u, v) in part.edges() {
            out.insert_edge(offsets[i] + u, offsets[i] + v);
        }
    }
    for (i, j) in spec.outer.edges() {
        for u in 0..sizes[i] {
            for v in 0..sizes[j] {
                out.insert_edge(offsets[i] + u, offsets[j] + v);
            }
        }
    }
    out.finish()
}

/// Checks that `bijection` (join vertex → vertex of `g`) carries the edge
/// set of `graph_join(spec)` exactly onto the edge set of `g`.
pub fn verify_join_form(g: &Graph, spec: &JoinSpec, bijection: &[usize]) -> Result<bool, GraphError> {
    let total = spec.total_vertices();
    if total != g.vertex_count() || bijection.len() != total {
        return Err(GraphError::SizeMismatch(format!(
            "join has {total} vertices, graph has {}, bijection has {} entries",
            g.vertex_count(),
            bijection.len()
        )));
    }
    let mut hit = vec![false; total];
    for &v in bijection {
        if v >= total || std::mem::replace(&mut hit[v], true) {
            return Err(GraphError::NotABijection(format!("image {v} is out of range or repeated")));
        }
    }
    let joined = graph_join(spec);
    if joined.edge_count() != g.edge_count() {
        return Ok(false);
    }
    Ok(joined.edges().iter().all(|&(u, v)| g.has_edge(bijection[u], bijection[v])))
}

/// Exact distance matrix. Fails on disconnected input.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix, GraphError> {
    let d = g.distances()?;
    Ok(IntMatrix::from_fn(g.n, g.n, |i, j| BigInt::from(d[i][j])))
}

pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    if g.n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(g.distances()?.into_iter().flatten().max().unwrap_or(0))
}

/// The auxiliary bipartite-like graph on `α + αβ + β` vertices: vertex `i`
/// (0-based, `i < α`) is joined to the block of `β` middle vertices
/// `α + iβ .. α + (i+1)β`, and the `j`-th trailing vertex is joined to the
/// middle vertex in position `j` of every block.
pub fn figure1_gamma(alpha: usize, beta: usize) -> Graph {
    let mut g = Graph::empty(alpha + alpha * beta + beta);
    let x0 = alpha + alpha * beta;
    for i in 0..alpha {
        for j in 0..beta {
            let w = alpha + i * beta + j;
            g.insert_edge(i, w);
            g.insert_edge(x0 + j, w);
        }
    }
    g.finish()
}

/// [`figure1_gamma`] plus every edge between the first `α` and the last `β`
/// vertices.
pub fn figure1_gamma_prime(alpha: usize, beta: usize) -> Graph {
    let mut g = figure1_gamma(alpha, beta);
    let x0 = alpha + alpha * beta;
    for i in 0..alpha {
        for j in 0..beta {
            g.insert_edge(i, x0 + j);
        }
    }
    g.finish()
}

/// GraphViz DOT, one node per vertex labelled with `labels[v]`.
pub fn to_dot(g: &Graph, labels: &[String]) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n {
        let label = labels.get(v).cloned().unwrap_or_else(|| v.to_string());
        let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// CSV with a header row of vertex labels followed by one row per vertex.
pub fn matrix_csv_with_labels(m: &IntMatrix, labels: &[String]) -> String {
    let header: Vec<String> = labels.iter().map(|l| csv_field(l)).collect();
    let mut out = header.join(",");
    out.push('\n');
    out.push_str(&m.to_csv());
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphRepr { vertex_count: self.n, edges: self.edges() }).expect("graph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GraphError> {
        let repr: GraphRepr =
            serde_json::from_value(value.clone()).map_err(|e| GraphError::InvalidEdge(e.to_string()))?;
        Self::from_edges(repr.vertex_count, repr.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, GroupFamilySpec};

    fn group(spec: GroupFamilySpec) -> FiniteGroup {
        make_group(&spec).unwrap()
    }

    #[test]
    fn power_graph_of_prime_cyclic_is_complete() {
        let g = power_graph(&group(GroupFamilySpec::Cyclic { n: 7 }));
        assert!(g.is_complete());
    }

    #[test]
    fn d6_power_graph() {
        let g = power_graph(&group(GroupFamilySpec::Dihedral { n: 3 }));
        assert_eq!(g.vertex_count(), 6);
        // rotations e=0, a=1, a^2=2; reflections 3, 4, 5
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]);
    }

    #[test]
    fn el4_enhanced_power_graph_is_star() {
        let g = enhanced_power_graph(&group(GroupFamilySpec::ElementaryAbelian { p: 2, n: 2 }));
        assert_eq!(g, Graph::star(3));
    }

    #[test]
    fn cyclic_enhanced_power_graph_is_complete() {
        let g = enhanced_power_graph(&group(GroupFamilySpec::Cyclic { n: 12 }));
        assert!(g.is_complete());
    }

    #[test]
    fn induced_subgraphs() {
        let g = induced_subgraph(&Graph::complete(4), &[0, 1, 3]);
        assert_eq!(g, Graph::complete(3));
        let z6 = proper_power_graph(&group(GroupFamilySpec::Cyclic { n: 6 }));
        assert_eq!(z6.vertex_count(), 5);
        // generators a = 1 and a^5 = 5 sit at vertices 0 and 4
        assert_eq!(z6.degree(0), 4);
        assert_eq!(z6.degree(4), 4);
        let el9 = proper_power_graph(&group(GroupFamilySpec::ElementaryAbelian { p: 3, n: 2 }));
        assert_eq!(el9.edge_count(), 4);
        assert!((0..8).all(|v| el9.degree(v) == 1));
    }

    #[test]
    fn join_examples() {
        let k2 = graph_join(&JoinSpec::complete_parts(Graph::complete(2), &[1, 1]).unwrap());
        assert_eq!(k2, Graph::complete(2));
        let star = graph_join(&JoinSpec::complete_parts(Graph::star(3), &[1, 1, 1, 1]).unwrap());
        assert_eq!(star, Graph::star(3));
        assert!(JoinSpec::complete_parts(Graph::star(3), &[1, 1]).is_err());
    }

    #[test]
    fn distance_examples() {
        let d = distance_matrix(&Graph::path(3)).unwrap();
        assert_eq!(d, IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]));
        let d = distance_matrix(&Graph::star(3)).unwrap();
        assert_eq!(
            d,
            IntMatrix::from_rows(&[vec![0, 1, 1, 1], vec![1, 0, 2, 2], vec![1, 2, 0, 2], vec![1, 2, 2, 0]])
        );
        assert_eq!(diameter(&Graph::complete(5)).unwrap(), 1);
        assert_eq!(diameter(&Graph::star(3)).unwrap(), 2);
        assert!(matches!(distance_matrix(&Graph::empty(2)), Err(GraphError::DisconnectedGraph { .. })));
        assert_eq!(diameter(&Graph::empty(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn figure1_examples() {
        assert_eq!(figure1_gamma(1, 1), Graph::path(3));
        let g = figure1_gamma(3, 4);
        assert_eq!((g.vertex_count(), g.edge_count()), (19, 24));
        // α=2, β=1: 1 – W₁ – X₁ – W₂ – 2
        let g = figure1_gamma(2, 1);
        assert_eq!(g.edges(), vec![(0, 2), (1, 3), (2, 4), (3, 4)]);
        assert!(figure1_gamma_prime(1, 1).is_complete());
        assert_eq!(figure1_gamma_prime(3, 4).edge_count(), 36);
    }

    #[test]
    fn dot_and_csv_exports() {
        let g = Graph::path(2);
        let dot = to_dot(&g, &["e".into(), "a".into()]);
        assert_eq!(dot, "graph G {\n  0 [label=\"e\"];\n  1 [label=\"a\"];\n  0 -- 1;\n}\n");
        let csv = matrix_csv_with_labels(&g.adjacency_matrix(), &["(0,1)".into(), "b".into()]);
        assert_eq!(csv, "\"(0,1)\",b\n0,1\n1,0\n");
    }

    #[test]
    fn json_round_trip() {
        let g = figure1_gamma(2, 3);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }
}
