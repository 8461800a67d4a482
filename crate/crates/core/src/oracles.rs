//! Exhaustive ground truth for small graphs.
//!
//! Every oracle refuses inputs above its vertex limit instead of returning
//! an approximation.

use std::fmt;

use crate::coloring::Coloring;
use crate::cycles::{is_bipartite, shortest_odd_cycle};
use crate::error::{invalid, Error, Result};
use crate::flow::solve_bipartite;
use crate::graph::{Graph, Vertex};
use crate::weights::VertexWeights;

/// Environment variable overriding the limits: three comma-separated
/// integers `mis,iocp,chi`.
pub const ORACLE_LIMITS_ENV: &str = "ODDCYCLE_ORACLE_LIMITS";

/// Largest graphs the bitset-based oracles can represent.
const WORD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices_mis: usize,
    pub max_vertices_iocp: usize,
    pub max_vertices_chi: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices_mis: 20,
            max_vertices_iocp: 14,
            max_vertices_chi: 12,
        }
    }
}

impl OracleLimits {
    /// Parses `"mis,iocp,chi"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let nums: Vec<usize> = parts
            .iter()
            .map(|p| p.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| invalid(format!("bad oracle limits {s:?}: {e}")))?;
        match nums[..] {
            [mis, iocp, chi] if mis > 0 && iocp > 0 && chi > 0 => {
                for (name, v) in [("mis", mis), ("iocp", iocp), ("chi", chi)] {
                    if v > WORD {
                        return Err(invalid(format!("{name} limit {v} exceeds {WORD}")));
                    }
                }
                Ok(OracleLimits {
                    max_vertices_mis: mis,
                    max_vertices_iocp: iocp,
                    max_vertices_chi: chi,
                })
            }
            _ => Err(invalid(format!(
                "oracle limits must be three positive integers, got {s:?}"
            ))),
        }
    }

    /// Limits from [`ORACLE_LIMITS_ENV`], or the defaults when it is unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ORACLE_LIMITS_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }

    fn guard(oracle: &'static str, g: &Graph, limit: usize) -> Result<()> {
        if g.n() > limit {
            return Err(Error::OracleLimit {
                oracle,
                n: g.n(),
                limit,
            });
        }
        Ok(())
    }

    /// A maximum-weight independent set (unit weights when `w` is `None`).
    pub fn exact_mis(&self, g: &Graph, w: Option<&VertexWeights>) -> Result<Vec<Vertex>> {
        Self::guard("mis", g, self.max_vertices_mis)?;
        let unit = VertexWeights::unit(g.n());
        let w = w.unwrap_or(&unit);
        w.check_len(g.n())?;
        Ok(max_weight_independent_bits(g, w))
    }

    /// `α(G)`.
    pub fn independence_number(&self, g: &Graph) -> Result<usize> {
        self.exact_mis(g, None).map(|s| s.len())
    }

    /// `α_w(G)`.
    pub fn weighted_independence_number(&self, g: &Graph, w: &VertexWeights) -> Result<u64> {
        self.exact_mis(g, Some(w)).map(|s| w.of(&s))
    }

    /// A maximum clique (shares the MIS limit).
    pub fn exact_clique(&self, g: &Graph) -> Result<Vec<Vertex>> {
        Self::guard("clique", g, self.max_vertices_mis)?;
        Ok(max_weight_independent_bits(
            &g.complement(),
            &VertexWeights::unit(g.n()),
        ))
    }

    /// `ω(G)`.
    pub fn clique_number(&self, g: &Graph) -> Result<usize> {
        self.exact_clique(g).map(|k| k.len())
    }

    /// Induced odd cycle packing number: the largest number of components
    /// of an induced subgraph whose components are all odd cycles.
    pub fn exact_iocp(&self, g: &Graph) -> Result<usize> {
        Self::guard("iocp", g, self.max_vertices_iocp)?;
        let adj = bit_adjacency(g);
        let mut search = IocpSearch {
            adj: &adj,
            n: g.n(),
            best: 0,
        };
        search.run(0, 0, &mut vec![0u8; g.n()]);
        Ok(search.best)
    }

    /// An optimal coloring.
    pub fn exact_coloring(&self, g: &Graph) -> Result<Coloring> {
        Self::guard("chi", g, self.max_vertices_chi)?;
        let n = g.n();
        if n == 0 {
            return Ok(Coloring::new(Vec::new()));
        }
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for k in 1..=n {
            let mut colors = vec![usize::MAX; n];
            if color_search(g, &order, 0, k, 0, &mut colors) {
                return Ok(Coloring::new(colors));
            }
        }
        unreachable!("n colors always suffice")
    }

    /// `χ(G)`.
    pub fn exact_chromatic(&self, g: &Graph) -> Result<usize> {
        self.exact_coloring(g).map(|c| c.count())
    }

    /// Exact `α_w` for graphs that become bipartite after deleting a few
    /// vertices, at any size.
    ///
    /// A transversal `T` (so that `G - T` is bipartite) is collected greedily
    /// from shortest odd cycles; then every independent subset `S` of `T` is
    /// combined with an exact flow solve on `G - T - N(S)`. Fails when the
    /// transversal grows beyond `max_transversal` vertices.
    pub fn exact_mis_by_transversal(
        &self,
        g: &Graph,
        w: &VertexWeights,
        max_transversal: usize,
    ) -> Result<Vec<Vertex>> {
        w.check_len(g.n())?;
        let mut transversal = Vec::new();
        let mut rest = g.without(&[])?;
        while let Some(c) = shortest_odd_cycle(&rest.graph) {
            let pick = *c
                .vertices()
                .iter()
                .max_by_key(|&&v| (rest.graph.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            transversal.push(rest.parent(pick));
            rest = g.without(&transversal)?;
            if transversal.len() > max_transversal.min(WORD) {
                return Err(Error::OracleLimit {
                    oracle: "transversal",
                    n: transversal.len(),
                    limit: max_transversal,
                });
            }
        }
        transversal.sort_unstable();
        let t = transversal.len();
        let mut best: Option<(u64, Vec<Vertex>)> = None;
        for mask in 0u64..(1u64 << t) {
            let chosen: Vec<Vertex> = (0..t)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| transversal[i])
                .collect();
            if check_independent(g, &chosen).is_err() {
                continue;
            }
            let mut removed = transversal.clone();
            removed.extend(g.neighborhood(&chosen));
            let sub = g.without(&removed)?;
            debug_assert!(is_bipartite(&sub.graph));
            let part = solve_bipartite(&sub.graph, &w.restrict(&sub))?;
            let mut set = chosen;
            set.extend(sub.lift(&part.independent));
            set.sort_unstable();
            let weight = w.of(&set);
            if best.as_ref().is_none_or(|(b, _)| weight > *b) {
                best = Some((weight, set));
            }
        }
        Ok(best.map(|(_, s)| s).unwrap_or_default())
    }
}

/// Exact maximum independent set with no size guard (at most 64 vertices).
pub(crate) fn exact_mis_unbounded(g: &Graph) -> Vec<Vertex> {
    max_weight_independent_bits(g, &VertexWeights::unit(g.n()))
}

fn bit_adjacency(g: &Graph) -> Vec<u64> {
    assert!(
        g.n() <= WORD,
        "bitset oracles support at most {WORD} vertices"
    );
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect()
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// Branch and bound on the highest-degree candidate: take it (dropping its
/// neighbors) or discard it. Bound: current weight plus all candidates.
fn max_weight_independent_bits(g: &Graph, w: &VertexWeights) -> Vec<Vertex> {
    let adj = bit_adjacency(g);
    let weights = w.as_slice();
    let all = if g.n() == WORD {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };

    // greedy start: repeatedly take a minimum-degree candidate
    let mut cand = all;
    let mut greedy = 0u64;
    while cand != 0 {
        let v = bits(cand)
            .min_by_key(|&v| ((adj[v] & cand).count_ones(), v))
            .unwrap();
        greedy |= 1 << v;
        cand &= !(adj[v] | 1 << v);
    }
    let weight_of = |m: u64| bits(m).map(|v| weights[v]).sum::<u64>();
    let mut best = (weight_of(greedy), greedy);

    fn go(adj: &[u64], w: &[u64], cand: u64, cur: u64, set: u64, best: &mut (u64, u64)) {
        if cand == 0 {
            if cur > best.0 {
                *best = (cur, set);
            }
            return;
        }
        let rest: u64 = bits(cand).map(|v| w[v]).sum();
        if cur + rest <= best.0 {
            return;
        }
        let (v, deg) = bits(cand)
            .map(|v| (v, (adj[v] & cand).count_ones()))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .unwrap();
        if deg == 0 {
            go(adj, w, 0, cur + rest, set | cand, best);
            return;
        }
        go(
            adj,
            w,
            cand & !(adj[v] | 1 << v),
            cur + w[v],
            set | 1 << v,
            best,
        );
        go(adj, w, cand & !(1 << v), cur, set, best);
    }
    go(&adj, weights, all, 0, 0, &mut best);
    bits(best.1).collect()
}

struct IocpSearch<'a> {
    adj: &'a [u64],
    n: usize,
    best: usize,
}

impl IocpSearch<'_> {
    /// Decides vertex `i`; `chosen` is the set so far and `deg` the degrees
    /// inside it.
    fn run(&mut self, i: usize, chosen: u64, deg: &mut [u8]) {
        // A chosen vertex needs degree exactly 2; later vertices are the only
        // way to raise it.
        let later = if i >= 64 { 0 } else { !((1u64 << i) - 1) };
        for u in bits(chosen) {
            let room = (self.adj[u] & later).count_ones() as u8;
            if deg[u] + room < 2 {
                return;
            }
        }
        if i == self.n {
            if chosen != 0 {
                if let Some(c) = self.odd_components(chosen) {
                    self.best = self.best.max(c);
                }
            }
            return;
        }
        self.run(i + 1, chosen, deg);

        let nb = self.adj[i] & chosen;
        let d = nb.count_ones();
        if d > 2 || bits(nb).any(|u| deg[u] >= 2) {
            return;
        }
        deg[i] = d as u8;
        for u in bits(nb) {
            deg[u] += 1;
        }
        self.run(i + 1, chosen | 1 << i, deg);
        for u in bits(nb) {
            deg[u] -= 1;
        }
        deg[i] = 0;
    }

    /// Number of components of the 2-regular graph on `set` if all are odd.
    fn odd_components(&self, set: u64) -> Option<usize> {
        let mut left = set;
        let mut count = 0;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let next = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & set & !comp;
                comp |= next;
                frontier = next;
            }
            if comp.count_ones().is_multiple_of(2) {
                return None;
            }
            left &= !comp;
            count += 1;
        }
        Some(count)
    }
}

fn color_search(
    g: &Graph,
    order: &[Vertex],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    // a fresh color is only ever the next unused one
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if color_search(g, order, idx + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Why a certificate check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckFailure {
    /// An edge with both ends in the set, or both ends of one color.
    Edge(Vertex, Vertex),
    OutOfRange(Vertex),
    Duplicate(Vertex),
    /// The coloring does not assign a color to every vertex.
    Uncovered {
        vertices: usize,
        colored: usize,
    },
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFailure::Edge(u, v) => write!(f, "violating edge {u}-{v}"),
            CheckFailure::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            CheckFailure::Duplicate(v) => write!(f, "vertex {v} listed twice"),
            CheckFailure::Uncovered { vertices, colored } => {
                write!(f, "coloring covers {colored} of {vertices} vertices")
            }
        }
    }
}

impl std::error::Error for CheckFailure {}

/// Checks that `set` is an independent set of `g`.
pub fn check_independent(g: &Graph, set: &[Vertex]) -> std::result::Result<(), CheckFailure> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return Err(CheckFailure::OutOfRange(v));
        }
        if std::mem::replace(&mut inside[v], true) {
            return Err(CheckFailure::Duplicate(v));
        }
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    for u in sorted {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| v > u && inside[v]) {
            return Err(CheckFailure::Edge(u, v));
        }
    }
    Ok(())
}

/// Checks that `c` is a proper coloring of `g`.
pub fn check_coloring(g: &Graph, c: &Coloring) -> std::result::Result<(), CheckFailure> {
    if c.len() != g.n() {
        return Err(CheckFailure::Uncovered {
            vertices: g.n(),
            colored: c.len(),
        });
    }
    match g.edges().find(|&(u, v)| c.color(u) == c.color(v)) {
        Some((u, v)) => Err(CheckFailure::Edge(u, v)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grotzsch, petersen};

    #[test]
    fn mis_examples() {
        let o = OracleLimits::default();
        assert_eq!(o.independence_number(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(o.independence_number(&Graph::new(7)).unwrap(), 7);
        assert_eq!(o.independence_number(&petersen()).unwrap(), 4);
        let w = VertexWeights::new(vec![1, 5, 1]).unwrap();
        assert_eq!(o.exact_mis(&Graph::path(3), Some(&w)).unwrap(), vec![1]);
    }

    #[test]
    fn iocp_examples() {
        let o = OracleLimits::default();
        assert_eq!(o.exact_iocp(&Graph::complete_bipartite(3, 4)).unwrap(), 0);
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(o.exact_iocp(&two).unwrap(), 2);
        let joined = two.with_edges([(0, 3)]).unwrap();
        assert_eq!(o.exact_iocp(&joined).unwrap(), 1);
        assert_eq!(o.exact_iocp(&Graph::cycle(5)).unwrap(), 1);
    }

    #[test]
    fn chromatic_examples() {
        let o = OracleLimits::default();
        assert_eq!(o.exact_chromatic(&Graph::new(3)).unwrap(), 1);
        assert_eq!(o.exact_chromatic(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(o.exact_chromatic(&grotzsch()).unwrap(), 4);
        assert_eq!(o.exact_chromatic(&Graph::new(0)).unwrap(), 0);
    }

    #[test]
    fn limits_are_enforced() {
        let o = OracleLimits::default();
        assert!(matches!(
            o.exact_mis(&Graph::new(21), None),
            Err(Error::OracleLimit {
                oracle: "mis",
                n: 21,
                limit: 20
            })
        ));
        assert!(o.exact_iocp(&Graph::new(15)).is_err());
        assert!(o.exact_chromatic(&Graph::new(13)).is_err());
    }

    #[test]
    fn parse_limits() {
        assert_eq!(
            OracleLimits::parse("22, 15,10").unwrap(),
            OracleLimits {
                max_vertices_mis: 22,
                max_vertices_iocp: 15,
                max_vertices_chi: 10
            }
        );
        assert!(OracleLimits::parse("1,2").is_err());
        assert!(OracleLimits::parse("0,2,3").is_err());
        assert!(OracleLimits::parse("a,2,3").is_err());
        assert!(OracleLimits::parse("100,2,3").is_err());
    }

    #[test]
    fn transversal_oracle_on_long_odd_cycle() {
        let o = OracleLimits::default();
        let g = Graph::cycle(53);
        let set = o
            .exact_mis_by_transversal(&g, &VertexWeights::unit(53), 4)
            .unwrap();
        assert_eq!(set.len(), 26);
        assert!(check_independent(&g, &set).is_ok());
    }

    #[test]
    fn checkers() {
        let k3 = Graph::complete(3);
        assert!(check_independent(&k3, &[]).is_ok());
        assert_eq!(
            check_independent(&k3, &[2, 0]),
            Err(CheckFailure::Edge(0, 2))
        );
        assert!(check_independent(&Graph::cycle(6), &[0, 2, 4]).is_ok());
        assert_eq!(
            check_independent(&k3, &[5]),
            Err(CheckFailure::OutOfRange(5))
        );

        let c6 = Graph::cycle(6);
        assert!(check_coloring(&c6, &Coloring::new(vec![0, 1, 0, 1, 0, 1])).is_ok());
        assert_eq!(
            check_coloring(&Graph::complete(2), &Coloring::new(vec![0, 0])),
            Err(CheckFailure::Edge(0, 1))
        );
        assert!(matches!(
            check_coloring(&c6, &Coloring::new(vec![0, 1])),
            Err(CheckFailure::Uncovered {
                vertices: 6,
                colored: 2
            })
        ));
    }
}
