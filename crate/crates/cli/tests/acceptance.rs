//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines are
//! always printed.

use std::process::Command;
use std::time::Instant;

use oddcycle::coloring::triangle_free_bound;
use oddcycle::eptas::{decompose, q_bound_ratio};
use oddcycle::generators::{grotzsch, mycielskian, petersen, random_bipartite};
use oddcycle::seed::rng_from_seed;
use oddcycle::{
    amplify, check_coloring, check_independent, color_bounded_iocp, color_triangle_free,
    cycles::find_triangle, f_bound, gen_disjoint_odd_cycles, gen_high_odd_girth, girth, gnp,
    is_bipartite, k33_free_complement, no_short_odd_solve, odd_girth, qptas_solve, shield_set,
    solve_bipartite, Graph, OddCycle, OracleLimits, QptasParams, ShieldSpec, SolveParams, Vertex,
    VertexWeights,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

// Pinned counts and tolerances.
const C1_GRAPHS: usize = 1000;
const C2_GRAPHS: usize = 200;
const C3_GRAPHS: usize = 100;
const C4_GRAPHS: usize = 500;
const C5_GRAPHS: usize = 200;
const C5_SEEDS_PER_GRAPH: u64 = 2;
const C5_MIN_SUCCESS: f64 = 0.90;
const C6_GRAPHS: usize = 500;
const C7_GRAPHS: usize = 200;
const C7_MIN_SUCCESS: f64 = 0.90;
const C7_P: usize = 4;
const C8_SEEDS: u64 = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn oracle() -> OracleLimits {
    OracleLimits::default()
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> VertexWeights {
    VertexWeights::new((0..n).map(|_| rng.random_range(1..=5)).collect()).unwrap()
}

/// Random graphs on at most 12 vertices: sparse and dense G(n,p), odd
/// cycles with noise, and a few named graphs.
fn small_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng_from_seed(seed);
    let mut out = vec![
        petersen(),
        grotzsch(),
        Graph::cycle(5),
        Graph::cycle(7),
        Graph::cycle(11),
        Graph::complete(4),
        gen_disjoint_odd_cycles(&[3, 3, 5]).unwrap(),
        gen_disjoint_odd_cycles(&[5, 7]).unwrap(),
        mycielskian(&Graph::path(3)),
        Graph::complete_bipartite(4, 5),
    ];
    while out.len() < count {
        let n = rng.random_range(3..=12);
        let g = match rng.random_range(0..4) {
            0 => gnp(n, rng.random_range(0.1..0.35), rng.random()).unwrap(),
            1 => gnp(n, rng.random_range(0.35..0.85), rng.random()).unwrap(),
            2 => {
                let lengths: Vec<usize> = match rng.random_range(0..3) {
                    0 => vec![3],
                    1 => vec![5, 3],
                    _ => vec![3, 3, 3],
                };
                let base = gen_disjoint_odd_cycles(&lengths).unwrap();
                let spare = 12 - base.n();
                let g = base.disjoint_union(&Graph::new(rng.random_range(0..=spare)));
                let extra: Vec<(Vertex, Vertex)> = (0..rng.random_range(0..6))
                    .map(|_| (rng.random_range(0..g.n()), rng.random_range(0..g.n())))
                    .filter(|(u, v)| u != v)
                    .collect();
                let mut h = g;
                for (u, v) in extra {
                    if !h.has_edge(u, v) {
                        h = h.with_edges([(u, v)]).unwrap();
                    }
                }
                h
            }
            _ => {
                // triangle-free by rejection
                let mut g = Graph::new(n);
                for _ in 0..3 * n {
                    let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
                    if u != v && !g.has_edge(u, v) {
                        let h = g.with_edges([(u, v)]).unwrap();
                        if find_triangle(&h).is_none() {
                            g = h;
                        }
                    }
                }
                g
            }
        };
        out.push(g);
    }
    out
}

fn criterion_1() -> Outcome {
    let mut rng = rng_from_seed(1);
    let o = oracle();
    for i in 0..C1_GRAPHS {
        let n = rng.random_range(1..=14);
        let a = rng.random_range(0..=n);
        let g = random_bipartite(a, n - a, rng.random_range(0.1..0.9), rng.random()).unwrap();
        let w = random_weights(&mut rng, n);
        let got = solve_bipartite(&g, &w).unwrap();
        let exact = o.weighted_independence_number(&g, &w).unwrap();
        if check_independent(&g, &got.independent).is_err() || w.of(&got.independent) != exact {
            return outcome(
                false,
                format!(
                    "graph {i}: flow weight {} vs exact {exact}",
                    w.of(&got.independent)
                ),
            );
        }
    }
    outcome(
        true,
        format!("{C1_GRAPHS}/{C1_GRAPHS} weights equal the exhaustive optimum"),
    )
}

/// An odd cycle of length `ell` plus shell vertices within distance `t`,
/// with extra edges kept only if they preserve odd girth `ell`.
fn shell_graph(rng: &mut ChaCha8Rng, ell: usize, t: usize, max_n: usize) -> Graph {
    let mut g = Graph::cycle(ell);
    let mut depth: Vec<usize> = vec![0; ell];
    while g.n() < max_n {
        let parents: Vec<Vertex> = (0..g.n()).filter(|&v| depth[v] < t).collect();
        let u = parents[rng.random_range(0..parents.len())];
        let x = g.n();
        g = g
            .disjoint_union(&Graph::new(1))
            .with_edges([(u, x)])
            .unwrap();
        depth.push(depth[u] + 1);
    }
    for _ in 0..g.n() {
        let (u, v) = (rng.random_range(0..g.n()), rng.random_range(0..g.n()));
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let h = g.with_edges([(u, v)]).unwrap();
        if odd_girth(&h).at_least(ell) {
            g = h;
        }
    }
    g
}

fn criterion_2() -> Outcome {
    let mut rng = rng_from_seed(2);
    for i in 0..C2_GRAPHS {
        let ell = 2 * rng.random_range(2..=12) + 1;
        let t = rng.random_range(1..=((ell - 1) / 2).min(4));
        let max_n = rng.random_range(ell..=60.max(ell));
        let g = shell_graph(&mut rng, ell, t, max_n);
        let cycle = OddCycle::new(&g, (0..ell).collect()).unwrap();
        let dist = g.bfs_distances(cycle.vertices()).unwrap();
        assert!(dist.iter().all(|d| d.is_some_and(|d| d <= t)));
        let anchor = rng.random_range(0..ell);
        let r = shield_set(
            &g,
            &ShieldSpec {
                cycle,
                anchor,
                radius: t,
            },
        )
        .unwrap();
        if !is_bipartite(&g.without(&r).unwrap().graph) {
            return outcome(
                false,
                format!("graph {i} (|C| = {ell}, t = {t}): G - R not bipartite"),
            );
        }
    }
    outcome(
        true,
        format!("{C2_GRAPHS}/{C2_GRAPHS} graphs have bipartite G - R"),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = rng_from_seed(3);
    let o = oracle();
    let (k, b) = (1u64, 2u64);
    for i in 0..C3_GRAPHS {
        let g = if i % 4 == 0 {
            let n = rng.random_range(2..=14);
            let a = rng.random_range(1..n);
            let g = random_bipartite(a, n - a, 0.4, rng.random()).unwrap();
            assert_eq!(o.exact_iocp(&g).unwrap(), 0);
            g
        } else {
            let n_bip = rng.random_range(0..=12);
            let attach = if n_bip < 2 {
                0
            } else {
                rng.random_range(0..=3)
            };
            // any two disjoint odd cycles need >= 106 vertices, so iocp <= 1
            // attaching can be infeasible on a tiny bipartite part; reseed
            loop {
                if let Ok(g) = gen_high_odd_girth(n_bip, &[53], attach, rng.random()) {
                    break g;
                }
            }
        };
        assert!(odd_girth(&g).at_least(52));
        let w = random_weights(&mut rng, g.n());
        let set = no_short_odd_solve(&g, &w, k as usize, b as usize).unwrap();
        if check_independent(&g, &set).is_err() {
            return outcome(false, format!("graph {i}: output not independent"));
        }
        let exact = w.of(&o.exact_mis_by_transversal(&g, &w, 16).unwrap());
        let got = w.of(&set);
        if 2 * got < exact {
            return outcome(false, format!("graph {i}: weight {got} < half of {exact}"));
        }
        if 2 * b * exact < (b - k) * w.total() {
            return outcome(
                false,
                format!("graph {i}: alpha_w {exact} below (1-k/b) w(V)/2"),
            );
        }
    }
    outcome(
        true,
        format!("{C3_GRAPHS}/{C3_GRAPHS} meet both weight bounds"),
    )
}

fn criterion_4() -> Outcome {
    let o = oracle();
    let mut tally = [0usize; 3];
    for (i, g) in small_corpus(C4_GRAPHS, 4).iter().enumerate() {
        let n = g.n();
        let alpha = o.independence_number(g).unwrap();
        let k = o.exact_iocp(g).unwrap().max(1);
        for p in [k, k + 1, 2 * k + 1] {
            let dec = decompose(g, k, n, p, i as u64).unwrap();
            assert!(check_independent(g, &dec.independent).is_ok());
            for br in &dec.cycle_branches {
                let h = &br.subgraph;
                let inner: Vec<Vertex> = br
                    .cycle
                    .vertices()
                    .iter()
                    .map(|&v| h.child(v).unwrap())
                    .collect();
                assert!(h.graph.neighborhood(&inner).is_empty());
            }
            let a = dec.independent.len() * p >= (p - k) * alpha;
            let b = dec.cycle_branches.iter().any(|br| {
                o.independence_number(&br.subgraph.graph).unwrap() * p >= (p - 1) * alpha
            });
            let c = g.vertices().any(|v| {
                g.degree(v) as u128 * 81920 * (p as u128).pow(6) >= (k * n) as u128
                    && o.independence_number(&g.without(g.neighbors(v)).unwrap().graph)
                        .unwrap()
                        == alpha
            });
            if a {
                tally[0] += 1;
            } else if b {
                tally[1] += 1;
            } else if c {
                tally[2] += 1;
            } else {
                return outcome(
                    false,
                    format!("graph {i} (p = {p}): none of the three outcomes holds"),
                );
            }
        }
    }
    outcome(
        true,
        format!(
            "{} instances; first outcome holding: (a) {} (b) {} (c*) {}",
            3 * C4_GRAPHS,
            tally[0],
            tally[1],
            tally[2]
        ),
    )
}

fn criterion_5() -> Outcome {
    let o = oracle();
    let mut rng = rng_from_seed(5);
    let mut graphs = Vec::new();
    while graphs.len() < C5_GRAPHS {
        let n = rng.random_range(4..=14);
        let g = if rng.random_bool(0.5) {
            gnp(n, rng.random_range(0.15..0.8), rng.random()).unwrap()
        } else {
            let base = gen_disjoint_odd_cycles(&[3, 5]).unwrap();
            let g = base.disjoint_union(&Graph::new(rng.random_range(0..=6)));
            let extra = rng.random_range(0..8);
            let mut h = g;
            for _ in 0..extra {
                let (u, v) = (rng.random_range(0..h.n()), rng.random_range(0..h.n()));
                if u != v && !h.has_edge(u, v) {
                    h = h.with_edges([(u, v)]).unwrap();
                }
            }
            h
        };
        let kappa = o.exact_iocp(&g).unwrap();
        if kappa <= 2 {
            graphs.push((g, kappa));
        }
    }
    let (mut runs, mut ok) = (0usize, 0usize);
    for (i, (g, kappa)) in graphs.iter().enumerate() {
        let n = g.n();
        let alpha = o.independence_number(g).unwrap();
        for s in 0..C5_SEEDS_PER_GRAPH {
            let params =
                SolveParams::practical(*kappa, 3, n, 20, 1000 * i as u64 + s).with_repetitions(5);
            let res = amplify(g, &params).unwrap();
            if check_independent(g, &res.best).is_err() {
                return outcome(false, format!("graph {i}: dependent output"));
            }
            runs += 1;
            if res.best.len() + n.div_ceil(3) >= alpha {
                ok += 1;
            }
        }
    }
    let rate = ok as f64 / runs as f64;
    outcome(
        rate >= C5_MIN_SUCCESS,
        format!(
            "{ok}/{runs} runs within alpha - ceil(n/3) ({:.1}%, need {:.0}%)",
            100.0 * rate,
            100.0 * C5_MIN_SUCCESS
        ),
    )
}

fn criterion_6() -> Outcome {
    let o = oracle();
    let (mut tf, mut general) = (0usize, 0usize);
    for (i, g) in small_corpus(C6_GRAPHS, 6).iter().enumerate() {
        let kappa = o.exact_iocp(g).unwrap();
        if find_triangle(g).is_none() {
            let c = color_triangle_free(g, kappa).unwrap();
            let limit = if girth(g).is_none_or(|x| x >= 7) {
                3 + kappa
            } else {
                2 + 5 * kappa
            };
            if check_coloring(g, &c).is_err() || c.count() > limit {
                return outcome(
                    false,
                    format!(
                        "graph {i}: triangle-free coloring uses {} > {limit}",
                        c.count()
                    ),
                );
            }
            assert!(c.count() <= triangle_free_bound(g, kappa));
            tf += 1;
        }
        if g.n() == 0 {
            continue;
        }
        let c = color_bounded_iocp(g, kappa).unwrap();
        let omega = o.clique_number(g).unwrap();
        if check_coloring(g, &c).is_err() || c.count() as u128 > f_bound(kappa, omega) {
            return outcome(
                false,
                format!(
                    "graph {i}: general coloring uses {} > f({kappa}, {omega})",
                    c.count()
                ),
            );
        }
        general += 1;
    }
    outcome(
        true,
        format!("{general} general and {tf} triangle-free colorings within bounds"),
    )
}

fn criterion_7() -> Outcome {
    let o = oracle();
    let (mut runs, mut ok) = (0usize, 0usize);
    let mut graphs: Vec<(Graph, usize)> = Vec::new();
    for g in small_corpus(4 * C7_GRAPHS, 7) {
        if graphs.len() == C7_GRAPHS {
            break;
        }
        let kappa = o.exact_iocp(&g).unwrap();
        if kappa <= 2 {
            graphs.push((g, kappa));
        }
    }
    for (i, (g, kappa)) in graphs.iter().enumerate() {
        let alpha = o.independence_number(g).unwrap();
        let params = QptasParams::practical(*kappa, C7_P, g.n().max(1), 20, i as u64)
            .with_exact_cutoff(None);
        let set = qptas_solve(g, &params).unwrap();
        if check_independent(g, &set).is_err() {
            return outcome(false, format!("graph {i}: dependent output"));
        }
        runs += 1;
        // size >= ceil((1 - k/p) alpha)  <=>  size * p >= (p - k) * alpha
        if set.len() * C7_P >= (C7_P - kappa) * alpha {
            ok += 1;
        }
    }
    let rate = ok as f64 / runs as f64;
    outcome(
        runs >= C7_GRAPHS && rate >= C7_MIN_SUCCESS,
        format!(
            "{ok}/{runs} runs reach (1 - k/{C7_P}) alpha with exact fallback disabled ({:.1}%, need {:.0}%)",
            100.0 * rate,
            100.0 * C7_MIN_SUCCESS
        ),
    )
}

fn bit_rows(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Exhaustive: does some triple have at least three common neighbors?
fn has_k33(rows: &[u64]) -> bool {
    let n = rows.len();
    (0..n).any(|a| {
        (a + 1..n).any(|b| (b + 1..n).any(|c| (rows[a] & rows[b] & rows[c]).count_ones() >= 3))
    })
}

/// Exhaustive over cliques: does `rows` contain a clique of size `size`?
fn has_clique(rows: &[u64], cand: u64, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < size {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(rows, rest & rows[v], size - 1) {
            return true;
        }
    }
    false
}

/// Enumerates simple cycles of length at most `max_len` (each listed from
/// its minimum vertex) and calls `f` on the vertex mask.
fn short_cycles(rows: &[u64], max_len: usize, f: &mut dyn FnMut(u64, usize) -> bool) -> bool {
    fn extend(
        rows: &[u64],
        start: usize,
        last: usize,
        used: u64,
        len: usize,
        max_len: usize,
        f: &mut dyn FnMut(u64, usize) -> bool,
    ) -> bool {
        if len >= 3 && rows[last] >> start & 1 == 1 && !f(used, len) {
            return false;
        }
        if len == max_len {
            return true;
        }
        let mut next = rows[last] & !used & !((1u64 << (start + 1)) - 1);
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            if !extend(rows, start, v, used | 1 << v, len + 1, max_len, f) {
                return false;
            }
        }
        true
    }
    (0..rows.len()).all(|s| extend(rows, s, s, 1 << s, 1, max_len, f))
}

fn criterion_8() -> Outcome {
    let mut worst_alpha = 0;
    let mut lines = Vec::new();
    for k in [4usize, 6, 8] {
        let mut deleted = 0;
        for seed in 0..C8_SEEDS {
            let rep = k33_free_complement(k, seed).unwrap();
            let g0 = bit_rows(&rep.pruned);
            if has_k33(&g0) {
                return outcome(
                    false,
                    format!("k = {k}, seed {seed}: pruned graph has a K33"),
                );
            }
            // an independent 6-set of H is a 6-clique of the pruned graph
            let all = if rep.n == 64 {
                u64::MAX
            } else {
                (1u64 << rep.n) - 1
            };
            if has_clique(&g0, all, 6) {
                return outcome(false, format!("k = {k}, seed {seed}: alpha(H) >= 6"));
            }
            let alpha = (1..=5)
                .rev()
                .find(|&s| has_clique(&g0, all, s))
                .unwrap_or(0);
            worst_alpha = worst_alpha.max(alpha);
            // No two cycles of H with total length <= 10 and no edge between
            // them: the second cycle would live in the common pruned-graph
            // neighborhood of the first.
            let h = bit_rows(&rep.result);
            let mut clean = true;
            short_cycles(&h, 5, &mut |mask, len| {
                let mut common = all & !mask;
                let mut m = mask;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    common &= g0[v];
                }
                let sub: Vec<u64> = h.iter().map(|r| r & common).collect();
                let mut inner_found = false;
                let restricted: Vec<u64> = (0..h.len())
                    .map(|v| if common >> v & 1 == 1 { sub[v] } else { 0 })
                    .collect();
                short_cycles(&restricted, 10 - len, &mut |_, _| {
                    inner_found = true;
                    false
                });
                clean &= !inner_found;
                clean
            });
            if !clean {
                return outcome(
                    false,
                    format!("k = {k}, seed {seed}: two anticomplete short cycles in H"),
                );
            }
            deleted += rep.deleted_k33_count;
        }
        let n = k * k / 2;
        lines.push(format!(
            "k={k}: n={n}, chi(H) >= {}, K33 blocks deleted {deleted}",
            n.div_ceil(5)
        ));
    }
    outcome(
        true,
        format!("max alpha(H) = {worst_alpha}; {}", lines.join("; ")),
    )
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for n in 1..=12u64 {
        for r in 0..=n {
            let total = (0u64..1 << n)
                .filter(|m| m.count_ones() as u64 == r)
                .count() as u128;
            for s in 0..=n {
                let fixed = (1u64 << s) - 1;
                let missing = (0u64..1 << n)
                    .filter(|m| m.count_ones() as u64 == r && m & fixed == 0)
                    .count() as u128;
                let (num, den) = q_bound_ratio(n, r, s as f64).unwrap().unwrap();
                let q = oddcycle::q_bound(n, r, s as f64).unwrap();
                if num != missing || den != total || q != missing as f64 / total as f64 {
                    return outcome(
                        false,
                        format!("q({n}, {r}, {s}) = {num}/{den}, counted {missing}/{total}"),
                    );
                }
                checked += 1;
            }
        }
    }
    outcome(
        true,
        format!("{checked} (n, r, s) triples match subset counts exactly"),
    )
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_oddcycle"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

/// Output with every `wall_time_ms` field removed.
fn without_timing(text: &str) -> String {
    text.lines()
        .map(
            |line| match serde_json::from_str::<serde_json::Value>(line) {
                Ok(mut v) => {
                    if let Some(obj) = v.as_object_mut() {
                        obj.remove("wall_time_ms");
                    }
                    v.to_string()
                }
                Err(_) => line.to_string(),
            },
        )
        .collect::<Vec<_>>()
        .join("\n")
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let (code, text) = run_cli(&[
        "gen", "--family", "gnp", "--n", "11", "--prob", "0.4", "--seed", "9",
    ]);
    assert_eq!(code, 0);
    std::fs::write(path("g.graph"), &text).unwrap();
    let text_g = text;
    let (_, text) = run_cli(&[
        "gen",
        "--family",
        "highoddgirth",
        "--n-bipartite",
        "6",
        "--lengths",
        "53",
        "--attach",
        "2",
        "--seed",
        "3",
    ]);
    std::fs::write(path("h.graph"), &text).unwrap();
    std::fs::create_dir(path("bench")).unwrap();
    std::fs::write(path("bench/g.graph"), &text_g).unwrap();
    let bench_dir = path("bench");
    let g = path("g.graph");
    let h = path("h.graph");
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "gen", "--family", "gnp", "--n", "30", "--prob", "0.3", "--seed", "5",
        ],
        vec!["gen", "--family", "thm5", "--k", "6", "--seed", "5"],
        vec![
            "gen",
            "--family",
            "highoddgirth",
            "--n-bipartite",
            "8",
            "--lengths",
            "53",
            "--attach",
            "3",
            "--seed",
            "5",
        ],
        vec![
            "solve",
            "--input",
            &g,
            "--algo",
            "eptas",
            "--k",
            "2",
            "--t",
            "3",
            "--mode",
            "practical",
            "--r-override",
            "4",
            "--d-override",
            "10",
            "--reps",
            "4",
            "--seed",
            "17",
        ],
        vec![
            "solve", "--input", &g, "--algo", "eptas", "--k", "1", "--t", "2", "--seed", "17",
        ],
        vec![
            "solve",
            "--input",
            &g,
            "--algo",
            "qptas",
            "--k",
            "2",
            "--p",
            "4",
            "--mode",
            "practical",
            "--r-override",
            "3",
            "--d-override",
            "20",
            "--no-exact-cutoff",
            "--seed",
            "17",
        ],
        vec![
            "solve", "--input", &h, "--algo", "noshort", "--k", "1", "--b", "2",
        ],
        vec!["color", "--input", &g, "--algo", "general", "--k", "2"],
        vec![
            "bench",
            "--dir",
            &bench_dir,
            "--algo",
            "eptas,qptas,exact",
            "--k",
            "1,2",
            "--r-override",
            "3",
            "--seed",
            "4",
        ],
    ];
    for cmd in &commands {
        let (c1, a) = run_cli(cmd);
        let (c2, b) = run_cli(cmd);
        if c1 != 0 || c1 != c2 || without_timing(&a) != without_timing(&b) || a.is_empty() {
            return outcome(
                false,
                format!("`{}` differs between runs (exit {c1}/{c2})", cmd.join(" ")),
            );
        }
    }
    let g = gnp(12, 0.4, 1).unwrap();
    let p = SolveParams::practical(2, 3, 5, 10, 77).with_repetitions(3);
    if amplify(&g, &p).unwrap() != amplify(&g, &p).unwrap() {
        return outcome(false, "library amplify differs between runs");
    }
    let q = QptasParams::practical(2, 4, 4, 20, 3).with_exact_cutoff(None);
    if qptas_solve(&g, &q).unwrap() != qptas_solve(&g, &q).unwrap() {
        return outcome(false, "library qptas differs between runs");
    }
    outcome(
        true,
        format!("{} commands byte-identical modulo timing", commands.len()),
    )
}

type Criterion = fn() -> Outcome;

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("bipartite solver exactness", criterion_1),
        ("shield set leaves a bipartite graph", criterion_2),
        ("odd-girth solver quality", criterion_3),
        ("decomposition trichotomy", criterion_4),
        ("additive approximation end to end", criterion_5),
        ("coloring bounds", criterion_6),
        ("multiplicative approximation end to end", criterion_7),
        ("K33-free complement construction", criterion_8),
        ("q_bound exactness", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let status = if res.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} [{status}] {name}: {} ({:.1}s)",
            i + 1,
            res.detail,
            start.elapsed().as_secs_f64()
        );
        if !res.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
