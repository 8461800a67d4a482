//! Odd cycles: bipartition, shortest odd cycles, odd girth and shield sets.

use std::collections::VecDeque;
use std::fmt;

use crate::coloring::Coloring;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex};

/// Length of a shortest odd cycle; `Infinite` for bipartite graphs.
///
/// Ordered so that every finite value is below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OddGirth {
    Finite(usize),
    Infinite,
}

impl OddGirth {
    pub fn finite(self) -> Option<usize> {
        match self {
            OddGirth::Finite(g) => Some(g),
            OddGirth::Infinite => None,
        }
    }

    /// `self >= bound`.
    pub fn at_least(self, bound: usize) -> bool {
        self >= OddGirth::Finite(bound)
    }
}

impl fmt::Display for OddGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddGirth::Finite(g) => write!(f, "{g}"),
            OddGirth::Infinite => f.write_str("inf"),
        }
    }
}

/// A cycle of odd length, stored as its vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OddCycle {
    vertices: Vec<Vertex>,
}

impl OddCycle {
    /// Validates that `vertices` is an odd cycle of `g`: odd length at least
    /// 3, distinct vertices, cyclically consecutive vertices adjacent.
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self> {
        g.check_vertices(&vertices)?;
        let len = vertices.len();
        if len < 3 || len.is_multiple_of(2) {
            return Err(invalid(format!(
                "odd cycle needs odd length >= 3, got {len}"
            )));
        }
        let mut seen = g.mask(&[]);
        for &v in &vertices {
            if std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("vertex {v} repeats on the cycle")));
            }
        }
        for i in 0..len {
            let (u, v) = (vertices[i], vertices[(i + 1) % len]);
            if !g.has_edge(u, v) {
                return Err(invalid(format!("cycle uses non-edge {u}-{v}")));
            }
        }
        Ok(OddCycle { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.len() >= 3 && vertices.len() % 2 == 1);
        OddCycle { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex set in increasing order.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        let mut set = self.vertices.clone();
        set.sort_unstable();
        set
    }

    /// Position of `v` along the cycle.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Distance between positions `i` and `j` measured along the cycle.
    pub fn cyclic_distance(&self, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j) % self.len();
        d.min(self.len() - d)
    }

    /// True when the only edges of `g` among the cycle's vertices are the
    /// cycle edges.
    pub fn is_induced(&self, g: &Graph) -> bool {
        let on = g.mask(&self.vertices);
        let inner: usize = self
            .vertices
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| on[w]).count())
            .sum();
        inner == 2 * self.len()
    }

    /// A maximum independent set of the cycle: the vertices at even
    /// positions, except the last one (which is adjacent to position 0).
    pub fn maximum_independent_set(&self) -> Vec<Vertex> {
        let mut set: Vec<Vertex> = self.vertices[..self.len() - 1]
            .iter()
            .step_by(2)
            .copied()
            .collect();
        set.sort_unstable();
        set
    }

    pub(crate) fn map(&self, f: impl Fn(Vertex) -> Vertex) -> OddCycle {
        OddCycle {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
        }
    }
}

/// A proper coloring with colors `{0, 1}` if `g` is bipartite; otherwise an
/// odd cycle of `g` (a closed walk of odd length whose vertices are distinct)
/// as the witness.
pub fn two_coloring(g: &Graph) -> std::result::Result<Coloring, Vec<Vertex>> {
    let n = g.n();
    let mut side: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(1 - su);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => {
                        return Err(tree_cycle(&parent, &depth, u, v));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Coloring::new(
        side.into_iter().map(|s| s.unwrap() as usize).collect(),
    ))
}

/// Closes the tree paths from `x` and `y` up to their lowest common ancestor
/// with the edge `xy`.
fn tree_cycle(parent: &[usize], depth: &[usize], x: Vertex, y: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.reverse();
    left.extend(right);
    // left now runs lca .. x, then y .. (child of lca on y's side)
    left
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_ok()
}

struct BfsTree {
    dist: Vec<usize>,
    parent: Vec<usize>,
}

fn bfs_tree(g: &Graph, root: Vertex) -> BfsTree {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    BfsTree { dist, parent }
}

/// A shortest odd cycle of `g`, or `None` when `g` is bipartite.
///
/// Runs a BFS from every vertex `v`. An edge `xy` with
/// `dist(v, x) = dist(v, y) = d` closes an odd walk of length `2d + 1`
/// through `v`; the minimum over all roots and edges is the odd girth. At
/// that minimum both tree paths meet only in `v` (otherwise a shorter odd
/// walk would exist), so the reconstruction is a simple cycle. Shortest odd
/// cycles are also induced.
pub fn shortest_odd_cycle(g: &Graph) -> Option<OddCycle> {
    let mut best: Option<Vec<Vertex>> = None;
    for root in g.vertices() {
        let tree = bfs_tree(g, root);
        let limit = best.as_ref().map_or(usize::MAX, Vec::len);
        let mut candidates: Vec<(usize, Vertex, Vertex)> = g
            .edges()
            .filter(|&(x, y)| tree.dist[x] != usize::MAX && tree.dist[x] == tree.dist[y])
            .map(|(x, y)| (2 * tree.dist[x] + 1, x, y))
            .filter(|&(len, _, _)| len < limit)
            .collect();
        candidates.sort_unstable();
        for (_, x, y) in candidates {
            if let Some(cycle) = reconstruct(&tree, root, x, y) {
                best = Some(cycle);
                break;
            }
        }
        if best.as_ref().is_some_and(|c| c.len() == 3) {
            break;
        }
    }
    best.map(|vertices| {
        let cycle = OddCycle::new_unchecked(vertices);
        debug_assert!(cycle.is_induced(g), "shortest odd cycle must be induced");
        cycle
    })
}

fn reconstruct(tree: &BfsTree, root: Vertex, x: Vertex, y: Vertex) -> Option<Vec<Vertex>> {
    let chain = |mut v: Vertex| {
        let mut out = vec![v];
        while v != root {
            v = tree.parent[v];
            out.push(v);
        }
        out
    };
    let mut left = chain(x);
    let right = chain(y);
    // both chains end at root; they must share nothing else
    let on_left: std::collections::HashSet<_> = left[..left.len() - 1].iter().copied().collect();
    if right[..right.len() - 1].iter().any(|v| on_left.contains(v)) {
        return None;
    }
    left.reverse();
    left.extend(&right[..right.len() - 1]);
    Some(left)
}

pub fn odd_girth(g: &Graph) -> OddGirth {
    match shortest_odd_cycle(g) {
        Some(c) => OddGirth::Finite(c.len()),
        None => OddGirth::Infinite,
    }
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best = usize::MAX;
    for root in g.vertices() {
        let tree = bfs_tree(g, root);
        for (x, y) in g.edges() {
            if tree.dist[x] == usize::MAX || tree.parent[x] == y || tree.parent[y] == x {
                continue;
            }
            best = best.min(tree.dist[x] + tree.dist[y] + 1);
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Some triangle of `g` (sorted), or `None` when `g` is triangle-free.
pub fn find_triangle(g: &Graph) -> Option<[Vertex; 3]> {
    for (u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let mut t = [u, v, a[i]];
                    t.sort_unstable();
                    return Some(t);
                }
            }
        }
    }
    None
}

/// Parameters of a shield set: a shortest odd cycle, an anchor vertex on it
/// and a radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShieldSpec {
    pub cycle: OddCycle,
    pub anchor: Vertex,
    pub radius: usize,
}

/// The shield set `R` around an anchor `z` of a shortest odd cycle `C`.
///
/// `A` is the set of cycle vertices within distance `t` of `z` (measured
/// along `C`, which is geodesic), and `R` is the set of vertices of `g`
/// within distance `t` of `A`. When every vertex of `g` is within distance
/// `t` of `C`, `g - R` is bipartite.
pub fn shield_set(g: &Graph, spec: &ShieldSpec) -> Result<Vec<Vertex>> {
    let cycle = OddCycle::new(g, spec.cycle.vertices().to_vec())?;
    match odd_girth(g) {
        OddGirth::Finite(len) if len == cycle.len() => {}
        measured => {
            return Err(Error::NotShortestOddCycle(format!(
                "cycle has length {} but the odd girth is {measured}",
                cycle.len()
            )))
        }
    }
    let max = (cycle.len() - 1) / 2;
    if spec.radius > max {
        return Err(Error::RadiusTooLarge {
            radius: spec.radius,
            max,
        });
    }
    let anchor = cycle
        .position(spec.anchor)
        .ok_or_else(|| invalid(format!("anchor {} is not on the cycle", spec.anchor)))?;
    let arc: Vec<Vertex> = (0..cycle.len())
        .filter(|&i| cycle.cyclic_distance(i, anchor) <= spec.radius)
        .map(|i| cycle.vertices()[i])
        .collect();
    Ok(g.ball(&arc, spec.radius))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_proper_two_coloring(g: &Graph, c: &Coloring) -> bool {
        c.colors().iter().all(|&x| x < 2) && g.edges().all(|(u, v)| c.color(u) != c.color(v))
    }

    #[test]
    fn two_coloring_examples() {
        let c6 = Graph::cycle(6);
        let col = two_coloring(&c6).unwrap();
        assert!(is_proper_two_coloring(&c6, &col));

        let witness = two_coloring(&Graph::cycle(5)).unwrap_err();
        assert_eq!(witness.len(), 5);

        let empty = Graph::new(4);
        assert!(is_proper_two_coloring(
            &empty,
            &two_coloring(&empty).unwrap()
        ));
    }

    #[test]
    fn two_coloring_witness_is_an_odd_cycle() {
        // triangle hanging off a long path
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let w = two_coloring(&g).unwrap_err();
        assert!(OddCycle::new(&g, w).is_ok());
    }

    #[test]
    fn shortest_odd_cycle_examples() {
        assert_eq!(shortest_odd_cycle(&Graph::cycle(5)).unwrap().len(), 5);
        assert!(shortest_odd_cycle(&Graph::complete_bipartite(3, 3)).is_none());
        assert_eq!(odd_girth(&Graph::complete(3)), OddGirth::Finite(3));
        assert_eq!(odd_girth(&Graph::cycle(9)), OddGirth::Finite(9));
        assert_eq!(odd_girth(&Graph::cycle(6)), OddGirth::Infinite);
    }

    #[test]
    fn odd_girth_ordering_and_display() {
        assert!(OddGirth::Finite(1000) < OddGirth::Infinite);
        assert!(OddGirth::Infinite.at_least(52));
        assert!(!OddGirth::Finite(51).at_least(52));
        assert_eq!(OddGirth::Infinite.to_string(), "inf");
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
        assert_eq!(girth(&Graph::complete_bipartite(2, 3)), Some(4));
        assert_eq!(girth(&Graph::path(5)), None);
        assert_eq!(find_triangle(&Graph::cycle(4)), None);
        assert_eq!(find_triangle(&Graph::complete(4)), Some([0, 1, 2]));
    }

    #[test]
    fn maximum_independent_set_of_cycle() {
        let c = OddCycle::new(&Graph::cycle(7), (0..7).collect()).unwrap();
        assert_eq!(c.maximum_independent_set(), vec![0, 2, 4]);
    }

    #[test]
    fn shield_set_on_c5_and_c9() {
        let c5 = Graph::cycle(5);
        let cycle = shortest_odd_cycle(&c5).unwrap();
        let r = shield_set(
            &c5,
            &ShieldSpec {
                cycle,
                anchor: 2,
                radius: 0,
            },
        )
        .unwrap();
        assert_eq!(r, vec![2]);
        assert!(is_bipartite(&c5.without(&r).unwrap().graph));

        let c9 = Graph::cycle(9);
        let cycle = OddCycle::new(&c9, (0..9).collect()).unwrap();
        // t = 2: the arc A has 5 vertices and its radius-2 ball is all of C_9
        let r = shield_set(
            &c9,
            &ShieldSpec {
                cycle: cycle.clone(),
                anchor: 0,
                radius: 2,
            },
        )
        .unwrap();
        assert_eq!(r, (0..9).collect::<Vec<_>>());
        // t = 1: A = {8, 0, 1}, R = the 5 cycle vertices within distance 2 of z
        let r = shield_set(
            &c9,
            &ShieldSpec {
                cycle,
                anchor: 0,
                radius: 1,
            },
        )
        .unwrap();
        assert_eq!(r, vec![0, 1, 2, 7, 8]);
        assert_eq!(c9.without(&r).unwrap().graph, Graph::path(4));
    }

    #[test]
    fn shield_set_with_pendant() {
        // C_9 on 0..9 with pendant 9 attached to z = 0, t = 1.
        let g = Graph::cycle(9)
            .disjoint_union(&Graph::new(1))
            .with_edges([(0, 9)])
            .unwrap();
        let cycle = OddCycle::new(&g, (0..9).collect()).unwrap();
        let r = shield_set(
            &g,
            &ShieldSpec {
                cycle,
                anchor: 0,
                radius: 1,
            },
        )
        .unwrap();
        // A = {8, 0, 1}; everything at distance <= 1 from A
        assert_eq!(r, vec![0, 1, 2, 7, 8, 9]);
    }

    #[test]
    fn shield_set_preconditions() {
        let c9 = Graph::cycle(9);
        let cycle = OddCycle::new(&c9, (0..9).collect()).unwrap();
        assert_eq!(
            shield_set(
                &c9,
                &ShieldSpec {
                    cycle: cycle.clone(),
                    anchor: 0,
                    radius: 5
                }
            ),
            Err(Error::RadiusTooLarge { radius: 5, max: 4 })
        );
        // a 5-cycle that is not shortest once a chord creates a triangle
        let g = Graph::cycle(5).with_edges([(0, 2)]).unwrap();
        let long = OddCycle::new(&g, (0..5).collect()).unwrap();
        assert!(matches!(
            shield_set(
                &g,
                &ShieldSpec {
                    cycle: long,
                    anchor: 0,
                    radius: 0
                }
            ),
            Err(Error::NotShortestOddCycle(_))
        ));
    }
}
