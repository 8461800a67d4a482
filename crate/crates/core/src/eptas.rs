//! Randomized approximation of `α(G)` within an additive `n/t` for graphs
//! with bounded induced odd cycle packing number.
//!
//! One step ([`decompose`]) produces a candidate independent set and two
//! families of smaller instances: `H_i = G - N(C_i)` for each packed short
//! odd cycle, and `G_j = G - N(u_j)` for sampled vertices `u_j`. The solver
//! ([`eptas_solve`]) recurses into both families and keeps the largest set.

use std::collections::HashMap;

use rand::seq::index::sample;

use crate::cycles::OddCycle;
use crate::error::{invalid, Error, Result};
use crate::flow::max_weight_independent_set_bipartite;
use crate::graph::{Graph, InducedSubgraph, Vertex};
use crate::noshort::{
    break_odd_cycles, maximal_short_odd_packing, no_short_odd_solve, PackingResult,
};
use crate::seed::{derive_seed, rng_from_seed, Branch};
use crate::weights::VertexWeights;

/// `81920`, the constant in the shrink threshold `1 - 1/(81920 p^6)`.
pub const SHRINK_CONSTANT: u128 = 81920;

fn checked_binomial(n: u64, r: u64) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut c: u128 = 1;
    for i in 0..r {
        // c * (n - i) is divisible by i + 1 at every step
        c = c.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(c)
}

fn check_q_args(n: u64, r: u64, s: f64) -> Result<u64> {
    if n == 0 {
        return Err(invalid("q_bound needs n >= 1"));
    }
    if r > n {
        return Err(invalid(format!(
            "q_bound needs r <= n, got r = {r}, n = {n}"
        )));
    }
    if !(s.is_finite() && (0.0..=n as f64).contains(&s)) {
        return Err(invalid(format!("q_bound needs 0 <= s <= n, got s = {s}")));
    }
    Ok(s.ceil() as u64)
}

/// `C(n - ⌈s⌉, r) / C(n, r)` as an exact fraction, when both binomials fit
/// in 128 bits.
pub fn q_bound_ratio(n: u64, r: u64, s: f64) -> Result<Option<(u128, u128)>> {
    let s = check_q_args(n, r, s)?;
    Ok(checked_binomial(n - s, r).zip(checked_binomial(n, r)))
}

/// Probability that a uniformly random `r`-subset of an `n`-set misses a
/// fixed subset of size `⌈s⌉`: `C(n - ⌈s⌉, r) / C(n, r)`.
pub fn q_bound(n: u64, r: u64, s: f64) -> Result<f64> {
    if let Some((num, den)) = q_bound_ratio(n, r, s)? {
        return Ok(num as f64 / den as f64);
    }
    let s = s.ceil() as u64;
    if n - s < r {
        return Ok(0.0);
    }
    // C(n-s, r) / C(n, r) = prod_{i<r} (n-s-i) / (n-i)
    Ok((0..r).fold(1.0, |acc, i| acc * (n - s - i) as f64 / (n - i) as f64))
}

/// How sample sizes and the shrink test are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Constants from the analysis; the guarantee holds.
    Paper,
    /// Sample `r` vertices per call and recurse into `G_j` when it has fewer
    /// than `(1 - 1/d)` times the current vertex count. No guarantee.
    Practical { r: usize, d: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveParams {
    /// Bound on the induced odd cycle packing number.
    pub k: usize,
    /// Precision divisor: the target is `α(G) - n/t`.
    pub t: usize,
    pub mode: Mode,
    pub seed: u64,
    pub repetitions: usize,
}

impl SolveParams {
    pub fn paper(k: usize, t: usize, seed: u64) -> Self {
        SolveParams {
            k,
            t,
            mode: Mode::Paper,
            seed,
            repetitions: 1,
        }
    }

    pub fn practical(k: usize, t: usize, r: usize, d: usize, seed: u64) -> Self {
        SolveParams {
            k,
            t,
            mode: Mode::Practical { r, d },
            seed,
            repetitions: 1,
        }
    }

    pub fn with_repetitions(mut self, repetitions: usize) -> Self {
        self.repetitions = repetitions;
        self
    }

    /// `p = kt`.
    pub fn p(&self) -> usize {
        self.k * self.t
    }

    pub fn validate(&self) -> Result<()> {
        if self.t == 0 {
            return Err(invalid("t must be >= 1"));
        }
        if self.repetitions == 0 {
            return Err(invalid("repetitions must be >= 1"));
        }
        if let Mode::Practical { r, d } = self.mode {
            if r == 0 || d == 0 {
                return Err(invalid("practical mode needs r >= 1 and d >= 1"));
            }
        }
        Ok(())
    }
}

/// Smallest `d >= 1` with `(1 - 1/(81920 p^6))^d < 1/p`.
pub fn paper_depth(p: usize) -> u64 {
    if p <= 1 {
        return 1;
    }
    let eps = 1.0 / (SHRINK_CONSTANT as f64 * (p as f64).powi(6));
    let log_shrink = (-eps).ln_1p();
    let target = -(p as f64).ln();
    let mut d = (target / log_shrink).floor().max(1.0) as u64;
    while (d as f64) * log_shrink >= target {
        d += 1;
    }
    while d > 1 && ((d - 1) as f64) * log_shrink < target {
        d -= 1;
    }
    d
}

/// Smallest `r` with `q(current, r, max(1, ⌈n/(81920 p^7)⌉)) <= 1/(2d)`,
/// capped at `current`.
pub fn paper_sample_size(n: usize, current: usize, p: usize, d: u64) -> usize {
    if current == 0 {
        return 0;
    }
    let denom = SHRINK_CONSTANT * (p as u128).pow(7);
    let s = (n as u128).div_ceil(denom).max(1).min(current as u128) as f64;
    let goal = 1.0 / (2.0 * d as f64);
    let ok = |r: usize| q_bound(current as u64, r as u64, s).is_ok_and(|q| q <= goal);
    // q is non-increasing in r
    let (mut lo, mut hi) = (0usize, current);
    if !ok(hi) {
        return current;
    }
    while lo < hi {
        let mid = (lo + hi) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// A cycle branch: `H_i = G - N(V(C_i))`, in which `C_i` is a component.
#[derive(Debug, Clone)]
pub struct CycleBranch {
    /// Packed cycle in the vertex ids of the decomposed graph.
    pub cycle: OddCycle,
    pub subgraph: InducedSubgraph,
}

/// A shrink branch: `G_j = G - N(u_j)` for a sampled vertex `u_j`.
#[derive(Debug, Clone)]
pub struct ShrinkBranch {
    pub sample: Vertex,
    pub subgraph: InducedSubgraph,
}

impl ShrinkBranch {
    pub fn vertex_count(&self) -> usize {
        self.subgraph.graph.n()
    }
}

/// Output of one decomposition step.
///
/// When the packing bound is at most `k`, at least one holds: `I` is within
/// a `(1 - k/p)` factor of `α(G)`; some `H_i` keeps a `(1 - 1/p)` fraction
/// of `α(G)`; or, with probability governed by [`q_bound`], some `G_j` keeps
/// `α(G)` and has fewer than `(1 - k/(81920 p^6)) n` vertices. The solver
/// itself uses the weaker shrink test with `1/(81920 p^6)`.
#[derive(Debug, Clone)]
pub struct DecompositionResult {
    pub independent: Vec<Vertex>,
    pub packing: PackingResult,
    pub cycle_branches: Vec<CycleBranch>,
    pub shrink_branches: Vec<ShrinkBranch>,
}

/// `g = 4p(16p - 3)`, the packing threshold used by [`decompose`].
pub fn packing_girth(p: usize) -> usize {
    4 * p * (16 * p - 3)
}

/// One decomposition step. `seed` drives the choice of the `r` sampled
/// vertices.
pub fn decompose(
    g: &Graph,
    k: usize,
    r: usize,
    p: usize,
    seed: u64,
) -> Result<DecompositionResult> {
    if k == 0 || p < k {
        return Err(invalid(format!(
            "decompose needs 1 <= k <= p, got k = {k}, p = {p}"
        )));
    }
    if r > g.n() {
        return Err(Error::SampleTooLarge { r, n: g.n() });
    }
    let packing = maximal_short_odd_packing(g, packing_girth(p))?;
    let rest = g.induced_subgraph(&packing.residual)?;
    let local = no_short_odd_solve(&rest.graph, &VertexWeights::unit(rest.graph.n()), k, 2 * p)?;
    let independent = rest.lift(&local);

    let cycle_branches = packing
        .cycles
        .iter()
        .map(|c| {
            let subgraph = g.without(&g.neighborhood(c.vertices()))?;
            Ok(CycleBranch {
                cycle: c.clone(),
                subgraph,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rng = rng_from_seed(seed);
    let shrink_branches = sample(&mut rng, g.n(), r)
        .into_iter()
        .map(|u| {
            let subgraph = g.without(g.neighbors(u))?;
            Ok(ShrinkBranch {
                sample: u,
                subgraph,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(DecompositionResult {
        independent,
        packing,
        cycle_branches,
        shrink_branches,
    })
}

/// Counters for one solver run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EptasStats {
    pub calls: usize,
    pub memo_hits: usize,
    pub max_depth: usize,
    pub cycle_recursions: usize,
    pub shrink_recursions: usize,
    pub shrink_skipped: usize,
    /// Calls that stopped because the graph was already small enough.
    pub small_stops: usize,
    /// `d` (paper mode) or the configured `d` (practical mode).
    pub d: u64,
    /// Largest sample size used in any call.
    pub max_r: usize,
    /// Set if some call broke the bookkeeping rules (budget increase or a
    /// shrink recursion that did not shrink).
    pub bookkeeping_violation: bool,
}

struct Engine {
    n: usize,
    k: usize,
    p: usize,
    mode: Mode,
    d: u64,
    memo: HashMap<(Vec<Vertex>, usize), Vec<Vertex>>,
    stats: EptasStats,
}

impl Engine {
    fn shrinks_enough(&self, child: usize, current: usize) -> bool {
        let (child, current) = (child as u128, current as u128);
        match self.mode {
            Mode::Paper => {
                let c = SHRINK_CONSTANT * (self.p as u128).pow(6);
                child * c < (c - 1) * current
            }
            Mode::Practical { d, .. } => {
                let d = d as u128;
                child * d < (d - 1) * current
            }
        }
    }

    fn sample_size(&self, current: usize) -> usize {
        match self.mode {
            Mode::Paper => paper_sample_size(self.n, current, self.p, self.d),
            Mode::Practical { r, .. } => r.min(current),
        }
    }

    /// Returns an independent set of `g` in the ids of `g`. `ids` maps `g`
    /// to the root graph and keys the memo table.
    fn run(
        &mut self,
        g: &Graph,
        ids: &[Vertex],
        k1: usize,
        seed: u64,
        depth: usize,
    ) -> Result<Vec<Vertex>> {
        self.stats.calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if k1 > self.k {
            self.stats.bookkeeping_violation = true;
        }
        let current = g.n();
        if k1 == 0 {
            return match max_weight_independent_set_bipartite(g, &VertexWeights::unit(current)) {
                Ok(set) => Ok(set),
                Err(Error::NotBipartite { .. }) => {
                    Ok(break_odd_cycles(g, &VertexWeights::unit(current)))
                }
                Err(e) => Err(e),
            };
        }
        if current as u128 * self.p as u128 <= self.n as u128 * k1 as u128 {
            self.stats.small_stops += 1;
            return Ok(Vec::new());
        }
        let key = (ids.to_vec(), k1);
        if let Some(hit) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            let local: HashMap<Vertex, Vertex> =
                ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            return Ok(hit.iter().map(|v| local[v]).collect());
        }

        let r = self.sample_size(current);
        self.stats.max_r = self.stats.max_r.max(r);
        let dec = decompose(g, k1, r, self.p, derive_seed(seed, Branch::Sample, 0))?;
        let mut best = dec.independent;

        for (i, branch) in dec.cycle_branches.iter().enumerate() {
            let on_cycle = branch.cycle.vertex_set();
            let inner = branch.subgraph.graph.without(
                &on_cycle
                    .iter()
                    .map(|&v| {
                        branch
                            .subgraph
                            .child(v)
                            .expect("cycle survives in its branch")
                    })
                    .collect::<Vec<_>>(),
            )?;
            let child_ids: Vec<Vertex> = inner
                .parent_vertices()
                .iter()
                .map(|&v| ids[branch.subgraph.parent(v)])
                .collect();
            self.stats.cycle_recursions += 1;
            let part = self.run(
                &inner.graph,
                &child_ids,
                k1 - 1,
                derive_seed(seed, Branch::Cycle, i as u64),
                depth + 1,
            )?;
            let mut cand: Vec<Vertex> = part
                .iter()
                .map(|&v| branch.subgraph.parent(inner.parent(v)))
                .collect();
            cand.extend(branch.cycle.maximum_independent_set());
            if cand.len() > best.len() {
                best = cand;
            }
        }

        for (j, branch) in dec.shrink_branches.iter().enumerate() {
            if !self.shrinks_enough(branch.vertex_count(), current) {
                self.stats.shrink_skipped += 1;
                continue;
            }
            if branch.vertex_count() >= current {
                self.stats.bookkeeping_violation = true;
            }
            let child_ids: Vec<Vertex> = branch
                .subgraph
                .parent_vertices()
                .iter()
                .map(|&v| ids[v])
                .collect();
            self.stats.shrink_recursions += 1;
            let part = self.run(
                &branch.subgraph.graph,
                &child_ids,
                k1,
                derive_seed(seed, Branch::Shrink, j as u64),
                depth + 1,
            )?;
            if part.len() > best.len() {
                best = branch.subgraph.lift(&part);
            }
        }

        best.sort_unstable();
        self.memo
            .insert(key, best.iter().map(|&v| ids[v]).collect());
        Ok(best)
    }
}

/// One run of the approximation: an independent set, of size at least
/// `α(G) - n/t` with probability at least 1/2 in paper mode when the induced
/// odd cycle packing number is at most `k`.
pub fn eptas_solve(g: &Graph, params: &SolveParams) -> Result<Vec<Vertex>> {
    eptas_solve_with_stats(g, params).map(|(set, _)| set)
}

/// [`eptas_solve`] together with recursion counters.
pub fn eptas_solve_with_stats(
    g: &Graph,
    params: &SolveParams,
) -> Result<(Vec<Vertex>, EptasStats)> {
    params.validate()?;
    let p = params.p();
    let d = match params.mode {
        Mode::Paper => paper_depth(p),
        Mode::Practical { d, .. } => d as u64,
    };
    let mut engine = Engine {
        n: g.n(),
        k: params.k,
        p,
        mode: params.mode,
        d,
        memo: HashMap::new(),
        stats: EptasStats {
            d,
            ..EptasStats::default()
        },
    };
    let ids: Vec<Vertex> = g.vertices().collect();
    let mut set = engine.run(g, &ids, params.k, params.seed, 0)?;
    set.sort_unstable();
    Ok((set, engine.stats))
}

/// Result of repeated independent runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplifyResult {
    /// Largest set found (earliest repetition wins ties).
    pub best: Vec<Vertex>,
    /// Size returned by each repetition, in order.
    pub sizes: Vec<usize>,
}

/// Seed used by repetition `i` of [`amplify`].
pub fn repetition_seed(seed: u64, i: usize) -> u64 {
    derive_seed(seed, Branch::Repetition, i as u64)
}

/// Runs [`eptas_solve`] `params.repetitions` times with derived seeds and
/// keeps the largest result.
pub fn amplify(g: &Graph, params: &SolveParams) -> Result<AmplifyResult> {
    params.validate()?;
    let mut best = Vec::new();
    let mut sizes = Vec::with_capacity(params.repetitions);
    for i in 0..params.repetitions {
        let run = SolveParams {
            seed: repetition_seed(params.seed, i),
            repetitions: 1,
            ..params.clone()
        };
        let set = eptas_solve(g, &run)?;
        sizes.push(set.len());
        if i == 0 || set.len() > best.len() {
            best = set;
        }
    }
    Ok(AmplifyResult { best, sizes })
}
