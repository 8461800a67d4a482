//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Vertex sets are passed around as slices of vertex indices and returned as
//! sorted, duplicate-free `Vec<usize>`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An immutable simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge {v}-{}", w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Builds a graph from edges that are known to be valid. Duplicates are
    /// merged; self-loops are dropped.
    pub(crate) fn from_edges_lossy<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph { adj, m: m / 2 }
    }

    /// The cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges_lossy(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges_lossy(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges_lossy(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges_lossy(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::complete_bipartite(1, leaves)
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Self::from_edges_lossy(self.n() + other.n(), edges)
    }

    /// A copy of this graph with the extra edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges(self.n(), self.edges().chain(extra))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub(crate) fn check_vertices(&self, set: &[Vertex]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n()) {
            Some(&vertex) => Err(Error::VertexOutOfRange {
                vertex,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn mask(&self, set: &[Vertex]) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for &v in set {
            mask[v] = true;
        }
        mask
    }

    /// Multi-source BFS. Entry `v` is the distance from `v` to the nearest
    /// source, or `None` when no source reaches `v`.
    pub fn bfs_distances(&self, sources: &[Vertex]) -> Result<Vec<Option<usize>>> {
        if sources.is_empty() {
            return Err(Error::InvalidArgument(
                "BFS needs at least one source".into(),
            ));
        }
        self.check_vertices(sources)?;
        Ok(self.bfs_unchecked(sources))
    }

    pub(crate) fn bfs_unchecked(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Vertices within distance `radius` of `sources`, sorted.
    pub fn ball(&self, sources: &[Vertex], radius: usize) -> Vec<Vertex> {
        self.bfs_unchecked(sources)
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| d.filter(|&d| d <= radius).map(|_| v))
            .collect()
    }

    /// `N(Y)`: vertices outside `Y` with at least one neighbor in `Y`.
    pub fn neighborhood(&self, set: &[Vertex]) -> Vec<Vertex> {
        let inside = self.mask(set);
        let mut hit = vec![false; self.n()];
        for &y in set {
            for &v in &self.adj[y] {
                if !inside[v] {
                    hit[v] = true;
                }
            }
        }
        collect_mask(&hit)
    }

    /// `N[Y] = Y ∪ N(Y)`.
    pub fn closed_neighborhood(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut mask = self.mask(set);
        for &y in set {
            for &v in &self.adj[y] {
                mask[v] = true;
            }
        }
        collect_mask(&mask)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj: Vec<Vec<Vertex>> = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.next_if(|&&w| w < v).is_some() {}
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// The subgraph induced by `keep` (order and duplicates are ignored).
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<InducedSubgraph> {
        self.check_vertices(keep)?;
        Ok(self.induced_by_mask(&self.mask(keep)))
    }

    /// `G - removed`.
    pub fn without(&self, removed: &[Vertex]) -> Result<InducedSubgraph> {
        self.check_vertices(removed)?;
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v] = false;
        }
        Ok(self.induced_by_mask(&keep))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> InducedSubgraph {
        let mut to_child = vec![None; self.n()];
        let mut to_parent = Vec::new();
        for v in 0..self.n() {
            if keep[v] {
                to_child[v] = Some(to_parent.len());
                to_parent.push(v);
            }
        }
        let mut m = 0;
        let adj: Vec<Vec<Vertex>> = to_parent
            .iter()
            .map(|&v| {
                let list: Vec<Vertex> = self.adj[v].iter().filter_map(|&w| to_child[w]).collect();
                m += list.len();
                list
            })
            .collect();
        InducedSubgraph {
            graph: Graph { adj, m: m / 2 },
            to_parent,
            to_child,
        }
    }
}

/// An induced subgraph together with the vertex correspondence to its parent.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    to_parent: Vec<Vertex>,
    to_child: Vec<Option<Vertex>>,
}

impl InducedSubgraph {
    /// Parent vertex of child vertex `v`.
    #[inline]
    pub fn parent(&self, v: Vertex) -> Vertex {
        self.to_parent[v]
    }

    /// Child vertex of parent vertex `v`, if `v` was kept.
    #[inline]
    pub fn child(&self, v: Vertex) -> Option<Vertex> {
        self.to_child.get(v).copied().flatten()
    }

    /// The kept parent vertices, in increasing order.
    pub fn parent_vertices(&self) -> &[Vertex] {
        &self.to_parent
    }

    /// Maps a set of child vertices to parent vertices (order is preserved,
    /// so sorted input stays sorted).
    pub fn lift(&self, set: &[Vertex]) -> Vec<Vertex> {
        set.iter().map(|&v| self.to_parent[v]).collect()
    }
}

pub(crate) fn collect_mask(mask: &[bool]) -> Vec<Vertex> {
    mask.iter()
        .enumerate()
        .filter_map(|(v, &b)| b.then_some(v))
        .collect()
}
