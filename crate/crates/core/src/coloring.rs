//! χ-bounded colorings for graphs of bounded induced odd cycle packing
//! number (iocp).
//!
//! * [`color_triangle_free`] colors a triangle-free graph with at most
//!   `2 + 5k` colors, `2 + 4k` when the odd girth is at least 7 and `3 + k`
//!   when the girth is at least 7, where `k >= iocp(G)`.
//! * [`color_bounded_iocp`] colors any graph with at most `f(k, ω(G))`
//!   colors, [`f_bound`] being the recurrence
//!   `f(0, ω) = 2`, `f(k, ω) = ω + (2 + 5k)·C(ω, 2) + f(k - 1, ω)·C(ω, 3)`.
//!
//! Both run in polynomial time. Neither needs `k`: it only enters the bound.

use std::collections::BTreeMap;

use crate::cycles::{find_triangle, girth, shortest_odd_cycle, two_coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A vertex coloring; `colors()[v]` is the color of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let mut distinct = colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        Coloring {
            count: distinct.len(),
            colors,
        }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    /// Number of distinct colors used.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Renumbers colors to `0..count` in order of first appearance.
    pub fn compacted(&self) -> Coloring {
        let mut map = BTreeMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            count: self.count,
        }
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The χ-bounding function `f(k, ω)`. Saturates at `u128::MAX`.
pub fn f_bound(k: usize, omega: usize) -> u128 {
    let w = omega as u128;
    let (pairs, triples) = (binomial(w, 2), binomial(w, 3));
    let mut f = 2u128;
    for level in 1..=k as u128 {
        f = w
            .saturating_add((2 + 5 * level).saturating_mul(pairs))
            .saturating_add(f.saturating_mul(triples));
    }
    f
}

/// Colors a triangle-free graph.
///
/// Peels off a shortest odd cycle `C`, colors `G - N[V(C)]` recursively and
/// then colors `N[V(C)]` with fresh colors: `N[V(C)]` minus the closed
/// neighborhood of three consecutive cycle vertices is bipartite (two
/// colors), and that closed neighborhood splits into three independent sets
/// (two when the odd girth is at least 7). With girth at least 7, `N(V(C))`
/// is independent and takes a single fresh color while `C` reuses three
/// colors of the recursive palette.
///
/// `k` is the caller's bound on the induced odd cycle packing number; it is
/// not checked.
pub fn color_triangle_free(g: &Graph, k: usize) -> Result<Coloring> {
    let _ = k;
    if let Some(t) = find_triangle(g) {
        return Err(Error::TriangleFound(t));
    }
    let (colors, _) = triangle_free_colors(g);
    Ok(Coloring::new(colors).compacted())
}

/// Color bounds for [`color_triangle_free`] given the measured girth data of
/// the input and `k >= iocp(G)`.
pub fn triangle_free_bound(g: &Graph, k: usize) -> usize {
    if girth(g).is_none_or(|x| x >= 7) {
        3 + k
    } else if crate::cycles::odd_girth(g).at_least(7) {
        2 + 4 * k
    } else {
        2 + 5 * k
    }
}

/// Returns the colors and the palette size (all colors are below it).
fn triangle_free_colors(g: &Graph) -> (Vec<usize>, usize) {
    let Some(cycle) = shortest_odd_cycle(g) else {
        let sides = two_coloring(g).expect("no odd cycle means bipartite");
        let palette = sides.colors().iter().max().map_or(0, |&c| c + 1);
        return (sides.colors().to_vec(), palette);
    };
    let shell = g.closed_neighborhood(cycle.vertices());
    let rest = g.without(&shell).unwrap();
    let (rest_colors, p) = triangle_free_colors(&rest.graph);
    let mut colors = vec![usize::MAX; g.n()];
    for (v, c) in rest_colors.into_iter().enumerate() {
        colors[rest.parent(v)] = c;
    }

    if girth(g).is_none_or(|x| x >= 7) {
        let open = g.neighborhood(cycle.vertices());
        let on = g.mask(&open);
        if open.iter().all(|&v| g.neighbors(v).iter().all(|&w| !on[w])) {
            let fresh = p.max(3);
            for &v in &open {
                colors[v] = fresh;
            }
            let last = cycle.len() - 1;
            for (i, &v) in cycle.vertices().iter().enumerate() {
                colors[v] = if i == last { 2 } else { i % 2 };
            }
            return (colors, fresh + 1);
        }
        debug_assert!(
            false,
            "neighbors of a shortest odd cycle must be independent at girth >= 7"
        );
    }

    let (z1, z2, z3) = (
        cycle.vertices()[0],
        cycle.vertices()[1],
        cycle.vertices()[2],
    );
    let shield = g.closed_neighborhood(&[z1, z2, z3]);
    let in_shield = g.mask(&shield);
    let outer: Vec<Vertex> = shell.iter().copied().filter(|&v| !in_shield[v]).collect();
    let outer_sub = g.induced_subgraph(&outer).unwrap();
    let sides = two_coloring(&outer_sub.graph)
        .expect("closed neighborhood of a shortest odd cycle minus the shield is bipartite");
    for (v, &c) in sides.colors().iter().enumerate() {
        colors[outer_sub.parent(v)] = p + c;
    }

    let classes: Vec<Vec<Vertex>> = if cycle.len() >= 7 {
        vec![g.neighbors(z2).to_vec(), g.neighborhood(&[z1, z3])]
    } else {
        vec![
            g.neighbors(z2).to_vec(),
            g.neighbors(z1).to_vec(),
            g.neighbors(z3).to_vec(),
        ]
    };
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            if colors[v] == usize::MAX {
                colors[v] = p + 2 + i;
            }
        }
    }
    debug_assert!(colors.iter().all(|&c| c != usize::MAX));
    (colors, p + 2 + classes.len())
}

/// A clique, flagged when no swap removing at most two of its vertices and
/// adding at most three outside vertices yields a larger clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCertificate {
    pub vertices: Vec<Vertex>,
    pub locally_maximal: bool,
}

/// For each vertex outside `clique`, the clique members it is not adjacent
/// to (sorted), or `None` for clique members.
fn non_neighbors_in(g: &Graph, clique: &[Vertex]) -> Vec<Option<Vec<Vertex>>> {
    let inside = g.mask(clique);
    g.vertices()
        .map(|v| {
            (!inside[v]).then(|| {
                clique
                    .iter()
                    .copied()
                    .filter(|&x| !g.has_edge(v, x))
                    .collect()
            })
        })
        .collect()
}

/// An improving swap, returned as the new clique.
fn improving_swap(g: &Graph, clique: &[Vertex]) -> Option<Vec<Vertex>> {
    let missing = non_neighbors_in(g, clique);
    let swap = |removed: &[Vertex], added: &[Vertex]| {
        let mut next: Vec<Vertex> = clique
            .iter()
            .copied()
            .filter(|v| !removed.contains(v))
            .chain(added.iter().copied())
            .collect();
        next.sort_unstable();
        next
    };
    // Adding one vertex with no removal.
    if let Some(v) = g
        .vertices()
        .find(|&v| missing[v].as_ref().is_some_and(Vec::is_empty))
    {
        return Some(swap(&[], &[v]));
    }
    // Candidates for removal set R are the outside vertices whose missing
    // set is contained in R; a swap needs |R| + 1 mutually adjacent ones.
    for (i, &x) in clique.iter().enumerate() {
        let cands: Vec<Vertex> = g
            .vertices()
            .filter(|&v| missing[v].as_deref().is_some_and(|m| m == [x]))
            .collect();
        for (a, &u) in cands.iter().enumerate() {
            if let Some(&v) = cands[a + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                return Some(swap(&[x], &[u, v]));
            }
        }
        for &y in &clique[i + 1..] {
            let cands: Vec<Vertex> = g
                .vertices()
                .filter(|&v| {
                    missing[v]
                        .as_deref()
                        .is_some_and(|m| m.iter().all(|&z| z == x || z == y))
                })
                .collect();
            for (a, &u) in cands.iter().enumerate() {
                for (b, &v) in cands.iter().enumerate().skip(a + 1) {
                    if !g.has_edge(u, v) {
                        continue;
                    }
                    if let Some(&w) = cands[b + 1..]
                        .iter()
                        .find(|&&w| g.has_edge(u, w) && g.has_edge(v, w))
                    {
                        return Some(swap(&[x, y], &[u, v, w]));
                    }
                }
            }
        }
    }
    None
}

pub fn is_clique(g: &Graph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Checks that `clique` is a clique admitting no improving swap.
pub fn is_locally_maximal(g: &Graph, clique: &[Vertex]) -> bool {
    is_clique(g, clique) && improving_swap(g, clique).is_none()
}

/// Finds a locally maximal clique: starts from a greedy clique (vertices by
/// decreasing degree) and applies improving swaps until none exists. Each
/// swap grows the clique, so there are at most `n` rounds.
pub fn locally_maximal_clique(g: &Graph) -> Result<CliqueCertificate> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("graph has no vertices".into()));
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<Vertex> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    while let Some(next) = improving_swap(g, &clique) {
        debug_assert!(next.len() > clique.len());
        clique = next;
    }
    let locally_maximal = is_locally_maximal(g, &clique);
    Ok(CliqueCertificate {
        vertices: clique,
        locally_maximal,
    })
}

/// Colors any graph with at most `f(k, ω(G))` colors when `k >= iocp(G)`.
///
/// With `K` a locally maximal clique, every outside vertex `v` misses a
/// nonempty set `A(v)` of clique vertices. Vertices are grouped by `A'(v)`,
/// the (at most three) smallest members of `A(v)`:
/// * `|A'(v)| = 1`: each group is independent and shares the color of its
///   clique vertex;
/// * `|A'(v)| = 2`: each group is triangle-free and is colored by
///   [`color_triangle_free`] with a fresh palette;
/// * `|A'(v)| = 3`: each group is anticomplete to a triangle of `K`, so its
///   iocp is at most `k - 1`; it is colored recursively with a fresh palette.
pub fn color_bounded_iocp(g: &Graph, k: usize) -> Result<Coloring> {
    let (colors, _) = general_colors(g, k);
    Ok(Coloring::new(colors).compacted())
}

fn general_colors(g: &Graph, k: usize) -> (Vec<usize>, usize) {
    if g.n() == 0 {
        return (Vec::new(), 0);
    }
    if let Ok(sides) = two_coloring(g) {
        let palette = sides.colors().iter().max().map_or(0, |&c| c + 1);
        return (sides.colors().to_vec(), palette);
    }
    let clique = locally_maximal_clique(g).unwrap().vertices;
    let mut colors = vec![usize::MAX; g.n()];
    for (i, &x) in clique.iter().enumerate() {
        colors[x] = i;
    }
    let mut groups: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for (v, missing) in non_neighbors_in(g, &clique).into_iter().enumerate() {
        if let Some(mut missing) = missing {
            debug_assert!(!missing.is_empty());
            missing.truncate(3);
            groups.entry(missing).or_default().push(v);
        }
    }
    let mut palette = clique.len();
    for (key, members) in groups {
        if key.len() == 1 {
            let c = colors[key[0]];
            for v in members {
                colors[v] = c;
            }
            continue;
        }
        let sub = g.induced_subgraph(&members).unwrap();
        let (sub_colors, used) = if key.len() == 2 {
            debug_assert!(find_triangle(&sub.graph).is_none());
            triangle_free_colors(&sub.graph)
        } else {
            general_colors(&sub.graph, k.saturating_sub(1))
        };
        for (v, c) in sub_colors.into_iter().enumerate() {
            colors[sub.parent(v)] = palette + c;
        }
        palette += used;
    }
    (colors, palette)
}

/// Vertex-disjoint triangles and the remaining vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePacking {
    pub triangles: Vec<[Vertex; 3]>,
    pub residual: Vec<Vertex>,
}

/// Greedy maximal packing of vertex-disjoint triangles. The residual induces
/// a triangle-free graph.
pub fn maximal_triangle_packing(g: &Graph) -> TrianglePacking {
    let mut used = vec![false; g.n()];
    let mut triangles = Vec::new();
    for u in g.vertices() {
        if used[u] {
            continue;
        }
        let free: Vec<Vertex> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| !used[v])
            .collect();
        let found = free.iter().enumerate().find_map(|(i, &v)| {
            free[i + 1..]
                .iter()
                .find(|&&w| g.has_edge(v, w))
                .map(|&w| [u, v, w])
        });
        if let Some(mut t) = found {
            t.sort_unstable();
            for x in t {
                used[x] = true;
            }
            triangles.push(t);
        }
    }
    let residual: Vec<Vertex> = g.vertices().filter(|&v| !used[v]).collect();
    debug_assert!(find_triangle(&g.induced_subgraph(&residual).unwrap().graph).is_none());
    TrianglePacking {
        triangles,
        residual,
    }
}
