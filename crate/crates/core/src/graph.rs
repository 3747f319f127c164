//! Simple undirected graphs over dense vertex ids `0..n`, hop distances and
//! the neighborhood primitives every dimension computation is built from.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {u}) is a self-loop")]
    SelfLoop { u: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed edge list: {0}")]
    Parse(String),
}

/// An immutable simple undirected graph.
///
/// Adjacency lists are sorted and symmetric; there are no loops and no
/// parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, &[])
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Open neighborhood as a vertex set.
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_iter_with(self.order(), self.adj[v].iter().copied())
    }

    fn bfs_from(&self, source: usize, out: &mut [Option<u32>]) {
        out.iter_mut().for_each(|d| *d = None);
        out[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = out[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if out[w].is_none() {
                    out[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut dist = vec![None; self.order()];
        self.bfs_from(0, &mut dist);
        dist.iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    /// True when the graph is the path `P_n` (including `P_1`).
    pub fn is_path(&self) -> bool {
        let n = self.order();
        if n == 1 {
            return true;
        }
        self.is_tree() && self.adj.iter().all(|l| l.len() <= 2)
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        DistanceMatrix::new(self).diameter()
    }

    /// The join `self + other`: disjoint union (ids of `other` shifted by
    /// `self.order()`) plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        let n = n1 + other.order();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + n1, v + n1)));
        for u in 0..n1 {
            edges.extend((n1..n).map(|v| (u, v)));
        }
        Graph::from_edge_list(n, &edges).expect("join of valid graphs is valid")
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edge_list(vertices.len(), &edges).expect("induced subgraph is valid")
    }
}

/// All-pairs hop distances. Unreachable pairs hold `None`, never a large
/// integer, so truncation cannot join components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    /// BFS from every vertex.
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut d = vec![None; n * n];
        for (s, row) in d.chunks_mut(n).enumerate() {
            g.bfs_from(s, row);
        }
        DistanceMatrix { n, d }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> Option<u32> {
        self.d[x * self.n + y]
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        self.d
            .iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            .ok_or(GraphError::Disconnected)
    }

    /// `d_k(x, y) = min(d(x, y), k + 1)`; `None` for unreachable pairs.
    pub fn truncated(&self, k: u32, x: usize, y: usize) -> Option<u32> {
        self.get(x, y).map(|d| d.min(k + 1))
    }

    /// Closed ball `N_k[v]`.
    pub fn ball(&self, k: u32, v: usize) -> VertexSet {
        VertexSet::from_iter_with(
            self.n,
            (0..self.n).filter(|&w| matches!(self.get(v, w), Some(d) if d <= k)),
        )
    }

    /// Exact-distance shell `N_k(v)`; `N_0(v) = {v}`.
    pub fn shell(&self, k: u32, v: usize) -> VertexSet {
        VertexSet::from_iter_with(self.n, (0..self.n).filter(|&w| self.get(v, w) == Some(k)))
    }
}

/// `truncated_distance(D, k, x, y)`; see [`DistanceMatrix::truncated`].
pub fn truncated_distance(d: &DistanceMatrix, k: u32, x: usize, y: usize) -> Option<u32> {
    d.truncated(k, x, y)
}

/// Plain-text edge list: first line `n m`, then `m` lines `u v` (0-based).
pub mod edgelist {
    use super::{Graph, GraphError};
    use std::fmt::Write;

    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let mut next = |what: &str| -> Result<usize, GraphError> {
            let tok = tokens
                .next()
                .ok_or_else(|| GraphError::Parse(format!("missing {what}")))?;
            tok.parse()
                .map_err(|_| GraphError::Parse(format!("bad {what} `{tok}`")))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let u = next(&format!("endpoint of edge {i}"))?;
            let v = next(&format!("endpoint of edge {i}"))?;
            edges.push((u, v));
        }
        if let Some(extra) = tokens.next() {
            return Err(GraphError::Parse(format!(
                "trailing token `{extra}` after {m} edges"
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn write(g: &Graph) -> String {
        let edges = g.edges();
        let mut out = format!("{} {}\n", g.order(), edges.len());
        for (u, v) in edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(p4.is_path());

        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);

        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { u: 0 })
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { u: 0, v: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn distances() {
        let c5 = DistanceMatrix::new(&cycle(5));
        assert_eq!(c5.get(0, 2), Some(2));
        let p4 = DistanceMatrix::new(&path(4));
        assert_eq!(p4.get(0, 3), Some(3));
        assert_eq!(path(7).diameter(), Ok(6));
    }

    #[test]
    fn disconnected_graphs() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), Err(GraphError::Disconnected));
        let d = DistanceMatrix::new(&g);
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.truncated(1, 0, 2), None);
    }

    #[test]
    fn truncation() {
        let d = DistanceMatrix::new(&path(6));
        assert_eq!(truncated_distance(&d, 1, 0, 5), Some(2));
        assert_eq!(truncated_distance(&d, 4, 0, 5), Some(5));
        for x in 0..6 {
            assert_eq!(truncated_distance(&d, 3, x, x), Some(0));
        }
    }

    #[test]
    fn balls_and_shells() {
        let p5 = DistanceMatrix::new(&path(5));
        assert_eq!(p5.ball(1, 2).len(), 3);
        let c6 = DistanceMatrix::new(&cycle(6));
        assert_eq!(c6.shell(3, 0).to_vec(), vec![3]);
        assert_eq!(c6.shell(0, 4).to_vec(), vec![4]);
    }

    #[test]
    fn join_small() {
        let k1 = Graph::empty(1).unwrap();
        let k2 = k1.join(&k1);
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let wheel = cycle(5).join(&k1);
        assert_eq!(wheel.order(), 6);
        assert_eq!(wheel.degree(5), 5);
        assert_eq!(wheel.size(), 10);
        let fan = path(4).join(&k1);
        assert_eq!(fan.size(), 7);
        assert_eq!(fan.diameter(), Ok(2));
    }

    #[test]
    fn edgelist_roundtrip_and_errors() {
        let g = cycle(5);
        let text = edgelist::write(&g);
        assert!(text.starts_with("5 5\n0 1\n0 4\n"));
        assert_eq!(edgelist::parse(&text).unwrap(), g);
        assert_eq!(
            edgelist::parse("3 2\n2 1\n1 0\n").unwrap(),
            path(3)
        );
        assert!(matches!(edgelist::parse("3 2\n0 1\n"), Err(GraphError::Parse(_))));
        assert!(matches!(edgelist::parse("3 1\n0 1\n5"), Err(GraphError::Parse(_))));
        assert!(matches!(edgelist::parse("x 1"), Err(GraphError::Parse(_))));
        assert_eq!(
            edgelist::parse("2 1\n1 1\n"),
            Err(GraphError::SelfLoop { u: 1 })
        );
    }
}
