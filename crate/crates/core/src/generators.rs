//! Seeded graph generators, including a dense construction whose complement
//! is free of `K_{3,3}` between disjoint triples.

use rand::Rng;

use crate::cycles::odd_girth;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles::OracleLimits;
use crate::seed::rng_from_seed;

/// `G(n, p)`: every pair is an edge independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Random bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(a + b, edges)
}

fn sorted_intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Two disjoint triples with all nine edges between them. Triples `A1` are
/// scanned in lexicographic order; `A2` is the first three common
/// neighbors of `A1`.
pub fn find_k33(g: &Graph) -> Option<([Vertex; 3], [Vertex; 3])> {
    let n = g.n();
    for a in 0..n {
        if g.degree(a) < 3 {
            continue;
        }
        for b in a + 1..n {
            let ab = sorted_intersection(g.neighbors(a), g.neighbors(b));
            if ab.len() < 3 {
                continue;
            }
            for c in b + 1..n {
                let abc = sorted_intersection(&ab, g.neighbors(c));
                if abc.len() >= 3 {
                    return Some(([a, b, c], [abc[0], abc[1], abc[2]]));
                }
            }
        }
    }
    None
}

/// Output of [`k33_free_complement`].
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub k: usize,
    pub n: usize,
    pub sampled: Graph,
    /// `sampled` with `K_{3,3}` edge sets removed until none is left.
    pub pruned: Graph,
    /// Complement of `pruned`.
    pub result: Graph,
    pub deleted_k33_count: usize,
    /// `α(result)`, when the exact oracle accepts the size.
    pub alpha_h: Option<usize>,
}

/// Samples `G(k²/2, 1/k)`, deletes the nine edges of one `K_{3,3}` at a time
/// until none remains, and complements the result.
///
/// The complement has independence number at most 5 and no two odd cycles
/// without an edge between them. The matching growth of its chromatic
/// number is only asymptotic; small `k` is allowed for testing.
pub fn k33_free_complement(k: usize, seed: u64) -> Result<ConstructionReport> {
    if k < 4 || k % 2 == 1 {
        return Err(invalid(format!("k must be even and >= 4, got {k}")));
    }
    let n = k * k / 2;
    let sampled = gnp(n, 1.0 / k as f64, seed)?;
    let mut edges: Vec<(Vertex, Vertex)> = sampled.edges().collect();
    let mut pruned = sampled.clone();
    let mut deleted = 0;
    while let Some((a1, a2)) = find_k33(&pruned) {
        let block: Vec<(Vertex, Vertex)> = a1
            .iter()
            .flat_map(|&x| a2.iter().map(move |&y| (x.min(y), x.max(y))))
            .collect();
        edges.retain(|e| !block.contains(e));
        pruned = Graph::from_edges(n, edges.iter().copied())?;
        deleted += 1;
    }
    let result = pruned.complement();
    let alpha_h = OracleLimits::default().independence_number(&result).ok();
    Ok(ConstructionReport {
        k,
        n,
        sampled,
        pruned,
        result,
        deleted_k33_count: deleted,
        alpha_h,
    })
}

/// `g` followed by disjoint cycles of the given lengths.
fn append_cycles(g: &Graph, lengths: &[usize]) -> Graph {
    lengths.iter().fold(g.clone(), |acc, &len| {
        acc.disjoint_union(&Graph::cycle(len))
    })
}

/// A random bipartite graph on `n_bipartite` vertices, disjoint odd cycles
/// of the given lengths, and `attach_edges` random edges from the bipartite
/// part to the cycles. An attaching edge is resampled if it would create an
/// odd cycle shorter than the shortest listed cycle.
pub fn gen_high_odd_girth(
    n_bipartite: usize,
    cycle_lengths: &[usize],
    attach_edges: usize,
    seed: u64,
) -> Result<Graph> {
    if let Some(&len) = cycle_lengths.iter().find(|&&l| l < 3 || l % 2 == 0) {
        return Err(invalid(format!(
            "cycle lengths must be odd and >= 3, got {len}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let left = n_bipartite / 2;
    let bip = random_bipartite(left, n_bipartite - left, 0.3, rng.random())?;
    let mut g = append_cycles(&bip, cycle_lengths);
    let cycle_vertices = g.n() - n_bipartite;
    if attach_edges > 0 && (n_bipartite == 0 || cycle_vertices == 0) {
        return Err(Error::Generation(
            "attaching edges needs both a bipartite part and a cycle".into(),
        ));
    }
    let floor = cycle_lengths.iter().copied().min();
    const RETRIES: usize = 1000;
    for _ in 0..attach_edges {
        let mut placed = false;
        for _ in 0..RETRIES {
            let u = rng.random_range(0..n_bipartite);
            let v = n_bipartite + rng.random_range(0..cycle_vertices);
            if g.has_edge(u, v) {
                continue;
            }
            let candidate = g.with_edges([(u, v)])?;
            if floor.is_none_or(|f| odd_girth(&candidate).at_least(f)) {
                g = candidate;
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::Generation(format!(
                "could not place an attaching edge in {RETRIES} attempts"
            )));
        }
    }
    Ok(g)
}

/// Disjoint union of odd cycles; its induced odd cycle packing number is
/// the number of cycles.
pub fn gen_disjoint_odd_cycles(lengths: &[usize]) -> Result<Graph> {
    if let Some(&len) = lengths.iter().find(|&&l| l < 3 || l % 2 == 0) {
        return Err(invalid(format!(
            "cycle lengths must be odd and >= 3, got {len}"
        )));
    }
    Ok(append_cycles(&Graph::new(0), lengths))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges_lossy(10, edges)
}

/// The Mycielskian of `g`: vertices `v`, copies `v' = n + v`, and a hub
/// `2n` adjacent to every copy.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g
        .edges()
        .flat_map(|(u, v)| [(u, v), (u, n + v), (v, n + u)])
        .chain((0..n).map(|v| (n + v, 2 * n)));
    Graph::from_edges_lossy(2 * n + 1, edges)
}

/// The Grötzsch graph: triangle-free with chromatic number 4.
pub fn grotzsch() -> Graph {
    mycielskian(&Graph::cycle(5))
}
