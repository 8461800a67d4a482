//! Maximum-weight independent sets in bipartite graphs.
//!
//! The complement of a minimum-weight vertex cover is a maximum-weight
//! independent set. The cover comes from a minimum source/sink cut in the
//! network
//!
//! ```text
//! source --w(v)--> v        for v on the left side
//!      v --w(v)--> sink     for v on the right side
//!      u --INF-->  v        for every edge uv, u left, v right
//! ```
//!
//! where `INF = 1 + w(V)` exceeds every finite cut. The maximum flow is
//! computed with Dinic's blocking-flow algorithm.

use std::collections::VecDeque;

use crate::cycles::two_coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::weights::VertexWeights;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
}

/// The source/sink network for one bipartite graph. Node `v < n` is graph
/// vertex `v`; `n` is the source and `n + 1` the sink.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    left: Vec<bool>,
    infinite: u64,
}

impl FlowNetwork {
    /// `left[v]` selects the side of vertex `v`; every edge must join the two
    /// sides.
    pub fn new(g: &Graph, w: &VertexWeights, left: Vec<bool>) -> Result<Self> {
        w.check_len(g.n())?;
        let n = g.n();
        let infinite = 1 + w.total();
        let mut net = FlowNetwork {
            arcs: Vec::with_capacity(2 * (n + g.m())),
            out: vec![Vec::new(); n + 2],
            left,
            infinite,
        };
        for v in 0..n {
            if net.left[v] {
                net.add_arc(n, v, w.get(v));
            } else {
                net.add_arc(v, n + 1, w.get(v));
            }
        }
        for (u, v) in g.edges() {
            if net.left[u] == net.left[v] {
                return Err(Error::InvalidArgument(format!(
                    "edge {u}-{v} does not cross the bipartition"
                )));
            }
            let (a, b) = if net.left[u] { (u, v) } else { (v, u) };
            net.add_arc(a, b, infinite);
        }
        Ok(net)
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn source(&self) -> usize {
        self.left.len()
    }

    fn sink(&self) -> usize {
        self.left.len() + 1
    }

    /// The capacity used for edge arcs.
    pub fn infinite_capacity(&self) -> u64 {
        self.infinite
    }

    /// Number of arcs carrying the infinite capacity, one per graph edge.
    pub fn edge_arc_count(&self) -> usize {
        (0..self.arcs.len())
            .step_by(2)
            .filter(|&a| self.arcs[a].cap + self.arcs[a ^ 1].cap == self.infinite)
            .count()
    }

    fn levels(&self) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::new();
        level[self.source()] = 0;
        queue.push_back(self.source());
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && level[arc.to] == usize::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        (level[self.sink()] != usize::MAX).then_some(level)
    }

    fn push(&mut self, u: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if u == self.sink() {
            return limit;
        }
        while next[u] < self.out[u].len() {
            let a = self.out[u][next[u]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.push(to, limit.min(cap), level, next);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Saturates the network and returns the maximum flow value.
    pub fn max_flow(&mut self) -> u64 {
        let mut total = 0;
        while let Some(level) = self.levels() {
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.push(self.source(), u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from the source in the residual network.
    fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut stack = vec![self.source()];
        seen[self.source()] = true;
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}

/// Result of the exact bipartite solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteSolution {
    /// Maximum-weight independent set, sorted.
    pub independent: Vec<Vertex>,
    /// Minimum-weight vertex cover (the complement of `independent`), sorted.
    pub cover: Vec<Vertex>,
    /// Maximum flow value, equal to the cover weight.
    pub flow: u64,
}

/// Solves maximum-weight independent set exactly on a bipartite graph.
pub fn solve_bipartite(g: &Graph, w: &VertexWeights) -> Result<BipartiteSolution> {
    let sides = two_coloring(g).map_err(|witness| Error::NotBipartite { witness })?;
    let left: Vec<bool> = sides.colors().iter().map(|&c| c == 0).collect();
    let mut net = FlowNetwork::new(g, w, left)?;
    let flow = net.max_flow();
    let reach = net.source_side();
    let (independent, cover): (Vec<Vertex>, Vec<Vertex>) =
        g.vertices().partition(|&v| reach[v] == net.left[v]);
    debug_assert_eq!(w.of(&cover), flow);
    Ok(BipartiteSolution {
        independent,
        cover,
        flow,
    })
}

/// A maximum-weight independent set of a bipartite graph.
pub fn max_weight_independent_set_bipartite(g: &Graph, w: &VertexWeights) -> Result<Vec<Vertex>> {
    solve_bipartite(g, w).map(|s| s.independent)
}
