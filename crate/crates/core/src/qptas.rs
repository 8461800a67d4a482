//! Multiplicative approximation `(1 - k/p) α(G)` for graphs with bounded
//! induced odd cycle packing number and no assumption on `α(G)`.
//!
//! Each call keeps the largest of: (a) repeated runs of the additive solver
//! from [`crate::eptas`]; (b) for each triangle `T` of a greedy packing, a
//! recursive solution of `G - N[T]` with budget `k - 1` plus one vertex of
//! `T`; (c) for each vertex `v` of degree at least `⌈n/(18p)⌉`, a recursive
//! solution of `G - N(v)`.

use std::collections::HashMap;

use crate::coloring::maximal_triangle_packing;
use crate::eptas::{amplify, Mode, SolveParams};
use crate::error::{invalid, Error, Result};
use crate::flow::max_weight_independent_set_bipartite;
use crate::graph::{Graph, Vertex};
use crate::noshort::break_odd_cycles;
use crate::oracles::{exact_mis_unbounded, OracleLimits};
use crate::seed::{derive_seed, Branch};
use crate::weights::VertexWeights;

/// Default vertex count at or below which a call is solved exactly.
pub const DEFAULT_EXACT_CUTOFF: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QptasParams {
    /// Bound on the induced odd cycle packing number.
    pub k: usize,
    /// Precision: the target is `(1 - k/p) α(G)`.
    pub p: usize,
    pub seed: u64,
    /// Parameters of the additive solver in branch (a).
    pub inner: Mode,
    /// Repetitions of branch (a); `None` means the current vertex count in
    /// paper mode and `min(n, 32)` in practical mode.
    pub repetitions: Option<usize>,
    /// Calls on at most this many vertices are solved exactly.
    pub exact_cutoff: Option<usize>,
}

impl QptasParams {
    pub fn paper(k: usize, p: usize, seed: u64) -> Self {
        QptasParams {
            k,
            p,
            seed,
            inner: Mode::Paper,
            repetitions: None,
            exact_cutoff: Some(DEFAULT_EXACT_CUTOFF),
        }
    }

    pub fn practical(k: usize, p: usize, r: usize, d: usize, seed: u64) -> Self {
        QptasParams {
            inner: Mode::Practical { r, d },
            ..Self::paper(k, p, seed)
        }
    }

    pub fn with_exact_cutoff(mut self, cutoff: Option<usize>) -> Self {
        self.exact_cutoff = cutoff;
        self
    }

    pub fn with_repetitions(mut self, repetitions: usize) -> Self {
        self.repetitions = Some(repetitions);
        self
    }

    /// `t = (4 + 10k) p` for the additive solver at budget `k`.
    pub fn inner_t(&self, k: usize) -> usize {
        (4 + 10 * k) * self.p
    }

    /// `⌈n/(18p)⌉`.
    pub fn degree_threshold(&self, n: usize) -> usize {
        n.div_ceil(18 * self.p)
    }

    fn repetitions_for(&self, n: usize) -> usize {
        let default = match self.inner {
            Mode::Paper => n,
            Mode::Practical { .. } => n.min(32),
        };
        self.repetitions.unwrap_or(default).max(1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p == 0 {
            return Err(invalid("p must be >= 1"));
        }
        if self.repetitions == Some(0) {
            return Err(invalid("repetitions must be >= 1"));
        }
        if let Some(c) = self.exact_cutoff {
            if c > 64 {
                return Err(invalid(format!("exact cutoff {c} exceeds 64")));
            }
        }
        if let Mode::Practical { r, d } = self.inner {
            if r == 0 || d == 0 {
                return Err(invalid("practical mode needs r >= 1 and d >= 1"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QptasStats {
    pub calls: usize,
    pub memo_hits: usize,
    pub exact_calls: usize,
    pub inner_runs: usize,
    pub triangle_recursions: usize,
    pub degree_recursions: usize,
    pub max_depth: usize,
    /// Set if a recursive call neither lowered the budget nor removed at
    /// least `n/(18p)` vertices.
    pub measure_violation: bool,
}

struct Engine<'a> {
    params: &'a QptasParams,
    memo: HashMap<(Vec<Vertex>, usize), Vec<Vertex>>,
    stats: QptasStats,
}

impl Engine<'_> {
    fn run(
        &mut self,
        g: &Graph,
        ids: &[Vertex],
        k: usize,
        seed: u64,
        depth: usize,
    ) -> Result<Vec<Vertex>> {
        self.stats.calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let n = g.n();
        if self.params.exact_cutoff.is_some_and(|c| n <= c) {
            self.stats.exact_calls += 1;
            return Ok(exact_mis_unbounded(g));
        }
        if k == 0 {
            let unit = VertexWeights::unit(n);
            return match max_weight_independent_set_bipartite(g, &unit) {
                Ok(set) => Ok(set),
                Err(Error::NotBipartite { .. }) => Ok(break_odd_cycles(g, &unit)),
                Err(e) => Err(e),
            };
        }
        let key = (ids.to_vec(), k);
        if let Some(hit) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            let local: HashMap<Vertex, Vertex> =
                ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            return Ok(hit.iter().map(|v| local[v]).collect());
        }

        // (a)
        let inner = SolveParams {
            k,
            t: self.params.inner_t(k),
            mode: self.params.inner,
            seed: derive_seed(seed, Branch::Inner, 0),
            repetitions: self.params.repetitions_for(n),
        };
        self.stats.inner_runs += inner.repetitions;
        let mut best = amplify(g, &inner)?.best;

        // (b)
        for (i, t) in maximal_triangle_packing(g).triangles.iter().enumerate() {
            let sub = g.without(&g.closed_neighborhood(t))?;
            let child_ids: Vec<Vertex> = sub.parent_vertices().iter().map(|&v| ids[v]).collect();
            self.stats.triangle_recursions += 1;
            let part = self.run(
                &sub.graph,
                &child_ids,
                k - 1,
                derive_seed(seed, Branch::Triangle, i as u64),
                depth + 1,
            )?;
            let mut cand = sub.lift(&part);
            cand.push(t[0]);
            if cand.len() > best.len() {
                best = cand;
            }
        }

        // (c)
        let threshold = self.params.degree_threshold(n);
        for v in g.vertices().filter(|&v| g.degree(v) >= threshold) {
            let sub = g.without(g.neighbors(v))?;
            if (n - sub.graph.n()) * 18 * self.params.p < n {
                self.stats.measure_violation = true;
            }
            let child_ids: Vec<Vertex> = sub.parent_vertices().iter().map(|&v| ids[v]).collect();
            self.stats.degree_recursions += 1;
            let part = self.run(
                &sub.graph,
                &child_ids,
                k,
                derive_seed(seed, Branch::HighDegree, v as u64),
                depth + 1,
            )?;
            if part.len() > best.len() {
                best = sub.lift(&part);
            }
        }

        best.sort_unstable();
        self.memo
            .insert(key, best.iter().map(|&v| ids[v]).collect());
        Ok(best)
    }
}

/// An independent set of size at least `(1 - k/p) α(G)` with probability at
/// least 1/2 (paper mode), when the induced odd cycle packing number of `g`
/// is at most `k`.
pub fn qptas_solve(g: &Graph, params: &QptasParams) -> Result<Vec<Vertex>> {
    qptas_solve_with_stats(g, params).map(|(set, _)| set)
}

/// [`qptas_solve`] together with recursion counters.
pub fn qptas_solve_with_stats(
    g: &Graph,
    params: &QptasParams,
) -> Result<(Vec<Vertex>, QptasStats)> {
    params.validate()?;
    let mut engine = Engine {
        params,
        memo: HashMap::new(),
        stats: QptasStats::default(),
    };
    let ids: Vec<Vertex> = g.vertices().collect();
    let mut set = engine.run(g, &ids, params.k, params.seed, 0)?;
    set.sort_unstable();
    Ok((set, engine.stats))
}

/// Which of the three structural cases certifies a small graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchWitness {
    /// `α(G) >= n / (4 + 10 iocp(G))`.
    LargeIndependentSet,
    /// A triangle `T` of the greedy packing with
    /// `α(G - N(T)) >= (1 - 1/p) α(G)`.
    GoodTriangle([Vertex; 3]),
    /// A vertex `v` with `deg(v) >= n/(18p)` and `α(G - N(v)) = α(G)`.
    HighDegreeVertex(Vertex),
}

/// Decides by exhaustive computation which case applies to `g`, checking
/// them in order. `None` would mean none applies.
pub fn branch_witness(g: &Graph, p: usize, limits: &OracleLimits) -> Result<Option<BranchWitness>> {
    if p == 0 {
        return Err(invalid("p must be >= 1"));
    }
    let n = g.n();
    let alpha = limits.independence_number(g)?;
    let iocp = limits.exact_iocp(g)?;
    if alpha * (4 + 10 * iocp) >= n {
        return Ok(Some(BranchWitness::LargeIndependentSet));
    }
    for t in maximal_triangle_packing(g).triangles {
        let sub = g.without(&g.neighborhood(&t))?;
        if limits.independence_number(&sub.graph)? * p >= (p - 1) * alpha {
            return Ok(Some(BranchWitness::GoodTriangle(t)));
        }
    }
    for v in g.vertices() {
        if g.degree(v) * 18 * p >= n {
            let sub = g.without(g.neighbors(v))?;
            if limits.independence_number(&sub.graph)? == alpha {
                return Ok(Some(BranchWitness::HighDegreeVertex(v)));
            }
        }
    }
    Ok(None)
}
