//! Weighted independent sets in graphs without short odd cycles.
//!
//! If every vertex is close to a shortest odd cycle `C`, deleting a ball
//! around one vertex of `C` leaves a bipartite graph. The solver picks `2b`
//! well-separated vertices `z_i` of `C` and branches on `G - L_i - R_i`,
//! where `R_i` is the ball of radius `4b - 2` around `z_i` and `L_i` the
//! vertices at distance exactly `i` from `C`. Each branch loses an odd cycle
//! from any induced packing, so the recursion depth is bounded by `k`.

use crate::cycles::{odd_girth, shortest_odd_cycle, OddCycle, OddGirth};
use crate::error::{invalid, Error, Result};
use crate::flow::max_weight_independent_set_bipartite;
use crate::graph::{Graph, Vertex};
use crate::weights::VertexWeights;

/// Vertex-disjoint short odd cycles removed greedily from a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingResult {
    /// Cycles in extraction order, each induced at the time it was taken.
    pub cycles: Vec<OddCycle>,
    /// Vertices not covered by any cycle, sorted.
    pub residual: Vec<Vertex>,
}

impl PackingResult {
    /// Every vertex on some packed cycle, sorted.
    pub fn covered(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self
            .cycles
            .iter()
            .flat_map(|c| c.vertices().to_vec())
            .collect();
        all.sort_unstable();
        all
    }
}

/// Repeatedly deletes a shortest odd cycle while it is shorter than
/// `girth`. The residual graph has odd girth at least `girth`.
pub fn maximal_short_odd_packing(g: &Graph, girth: usize) -> Result<PackingResult> {
    if girth < 3 {
        return Err(invalid(format!(
            "packing threshold must be >= 3, got {girth}"
        )));
    }
    let mut cycles = Vec::new();
    let mut rest = g.without(&[])?;
    while let Some(c) = shortest_odd_cycle(&rest.graph) {
        if c.len() >= girth {
            break;
        }
        let local = c.vertices().to_vec();
        cycles.push(c.map(|v| rest.parent(v)));
        let keep: Vec<Vertex> = rest
            .graph
            .vertices()
            .filter(|v| !local.contains(v))
            .map(|v| rest.parent(v))
            .collect();
        rest = g.induced_subgraph(&keep)?;
    }
    Ok(PackingResult {
        cycles,
        residual: rest.parent_vertices().to_vec(),
    })
}

/// `count` vertices of `c` at positions `0, s, 2s, ...` with
/// `s = |C| / count`, pairwise at cyclic distance at least `spacing`.
pub fn select_spaced_cycle_vertices(
    c: &OddCycle,
    count: usize,
    spacing: usize,
) -> Result<Vec<Vertex>> {
    let required = count.saturating_mul(spacing);
    if c.len() < required {
        return Err(Error::CycleTooShort {
            len: c.len(),
            required,
        });
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let step = c.len() / count;
    Ok((0..count).map(|i| c.vertices()[i * step]).collect())
}

/// Smallest odd girth the solver accepts for parameter `b`: `2b(8b - 3)`.
pub fn odd_girth_threshold(b: usize) -> usize {
    2 * b * (8 * b).saturating_sub(3)
}

/// Counters describing one solver run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NoShortStats {
    /// Number of recursive calls, the root included.
    pub calls: usize,
    /// Deepest branching level reached (root is 0).
    pub max_depth: usize,
    /// Branches created at each branching call.
    pub fanouts: Vec<usize>,
    /// Calls that met an odd cycle with no budget left, meaning the packing
    /// bound passed in was wrong.
    pub exhausted: usize,
}

/// An independent set of weight at least `(1 - k/b) α_w(G)` when `G` has no
/// induced packing of `k + 1` odd cycles and odd girth at least
/// `2b(8b - 3)`. The output is independent regardless of the packing bound.
pub fn no_short_odd_solve(g: &Graph, w: &VertexWeights, k: usize, b: usize) -> Result<Vec<Vertex>> {
    no_short_odd_solve_with_stats(g, w, k, b).map(|(set, _)| set)
}

/// [`no_short_odd_solve`] together with recursion counters.
pub fn no_short_odd_solve_with_stats(
    g: &Graph,
    w: &VertexWeights,
    k: usize,
    b: usize,
) -> Result<(Vec<Vertex>, NoShortStats)> {
    if b == 0 {
        return Err(invalid("b must be >= 1"));
    }
    w.check_len(g.n())?;
    let required = odd_girth_threshold(b);
    let measured = odd_girth(g);
    if !measured.at_least(required) {
        return Err(Error::OddGirthTooSmall { measured, required });
    }
    let mut stats = NoShortStats::default();
    let mut set = solve(g, w, k, b, 0, &mut stats)?;
    set.sort_unstable();
    Ok((set, stats))
}

fn solve(
    g: &Graph,
    w: &VertexWeights,
    k: usize,
    b: usize,
    depth: usize,
    stats: &mut NoShortStats,
) -> Result<Vec<Vertex>> {
    stats.calls += 1;
    stats.max_depth = stats.max_depth.max(depth);
    let Some(c) = shortest_odd_cycle(g) else {
        return max_weight_independent_set_bipartite(g, w);
    };
    if k == 0 {
        stats.exhausted += 1;
        return Ok(break_odd_cycles(g, w));
    }

    let anchors = select_spaced_cycle_vertices(&c, 2 * b, 8 * b - 3)?;
    let to_cycle = g.bfs_unchecked(c.vertices());
    let radius = 4 * b - 2;
    let mut layer_hits = vec![0u8; g.n()];
    let mut ball_hits = vec![0u8; g.n()];
    let mut best: Option<(u64, Vec<Vertex>)> = None;
    stats.fanouts.push(anchors.len());

    for (idx, &z) in anchors.iter().enumerate() {
        let layer = idx + 1;
        let ball = g.ball(&[z], radius);
        let mut removed: Vec<Vertex> = g
            .vertices()
            .filter(|&v| to_cycle[v] == Some(layer))
            .collect();
        if cfg!(debug_assertions) {
            for &v in &removed {
                layer_hits[v] += 1;
            }
            for &v in &ball {
                ball_hits[v] += 1;
            }
        }
        removed.extend(ball);
        let sub = g.without(&removed)?;
        let part = solve(&sub.graph, &w.restrict(&sub), k - 1, b, depth + 1, stats)?;
        let lifted = sub.lift(&part);
        let weight = w.of(&lifted);
        if best.as_ref().is_none_or(|(bw, _)| weight > *bw) {
            best = Some((weight, lifted));
        }
    }
    debug_assert!(layer_hits.iter().all(|&h| h <= 1), "layers overlap");
    debug_assert!(ball_hits.iter().all(|&h| h <= 1), "balls overlap");
    Ok(best.map(|(_, s)| s).unwrap_or_default())
}

/// Used only when the packing bound was violated: deletes the lightest
/// vertex of a shortest odd cycle until the graph is bipartite, then solves
/// exactly.
pub(crate) fn break_odd_cycles(g: &Graph, w: &VertexWeights) -> Vec<Vertex> {
    let mut deleted = Vec::new();
    loop {
        let sub = g.without(&deleted).expect("deleted vertices are in range");
        match shortest_odd_cycle(&sub.graph) {
            Some(c) => {
                let v = c
                    .vertices()
                    .iter()
                    .map(|&v| sub.parent(v))
                    .min_by_key(|&v| (w.get(v), v))
                    .expect("cycles are non-empty");
                deleted.push(v);
            }
            None => {
                let part = max_weight_independent_set_bipartite(&sub.graph, &w.restrict(&sub))
                    .expect("graph is bipartite");
                return sub.lift(&part);
            }
        }
    }
}

/// Odd girth of the residual of a packing, for assertions.
pub fn residual_odd_girth(g: &Graph, packing: &PackingResult) -> OddGirth {
    let sub = g
        .induced_subgraph(&packing.residual)
        .expect("residual vertices belong to the graph");
    odd_girth(&sub.graph)
}
