//! The (α, β) parameter calculator and falsifiable probes of the structural
//! bounds behind (α,β)-colorability of random hypergraphs.
//!
//! All logarithms are natural.

use alloc::vec::Vec;

use libm::{ceil, exp, floor, log, pow};
use thiserror::Error;

use crate::core_peel::residual_core;
use crate::hypergraph::{binomial, generate_hnm, Hypergraph, HypergraphError};
use crate::independence::{greedy_sequence_in, max_independent_set_exact, Strategy, EXACT_MIS_CAP};
use crate::reconfig::{connect, ReconfigOptions};
use crate::rng;
use crate::sampling::random_proper_coloring;
use crate::{Color, Vertex, VertexSet};

/// Largest `n` for which [`probe_density`] enumerates subsets exactly.
pub const EXACT_DENSITY_CAP: u32 = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("need d > 1, k >= 2 and n >= k (got d={d}, k={k}, n={n})")]
    InvalidInput { d: f64, k: u32, n: u64 },
    #[error(
        "log d - 5(k-1) log log d = {denominator} <= 0: d={d} is too small for the asymptotic formula; supply alpha and beta explicitly"
    )]
    Domain { d: f64, denominator: f64 },
    #[error("edge probability d / C(n-1, k-1) = {p} exceeds 1")]
    DensityTooHigh { p: f64 },
}

/// Every quantity derived from the expected degree `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSet {
    pub d: f64,
    pub k: u32,
    pub n: u64,
    pub alpha_real: f64,
    /// `ceil(alpha_real)`, the sequence length the algorithms use.
    pub alpha: u64,
    pub beta_real: f64,
    pub beta: u64,
    /// `n / alpha_real`.
    pub m0: f64,
    /// `16 * m0 * (log d)^2`.
    pub n0: f64,
    /// `d / C(n-1, k-1)`.
    pub p: f64,
    /// `round(d * n / k)`, halves rounded up.
    pub m: u128,
}

/// `alpha = ((k-1) d / (log d - 5(k-1) log log d))^(1/(k-1))` and
/// `beta = 3 (log d)^(3k)`.
pub fn alpha_beta(d: f64, k: u32) -> Result<(f64, f64), ParamError> {
    if !(d > 1.0) || k < 2 {
        return Err(ParamError::InvalidInput { d, k, n: 0 });
    }
    let km1 = (k - 1) as f64;
    let ld = log(d);
    let denominator = ld - 5.0 * km1 * log(ld);
    if !(denominator > 0.0) {
        return Err(ParamError::Domain { d, denominator });
    }
    let alpha = pow(km1 * d / denominator, 1.0 / km1);
    let beta = 3.0 * pow(ld, 3.0 * k as f64);
    Ok((alpha, beta))
}

/// `C(n, k)` as a float, without overflow for large `n`.
fn binomial_f64(n: u64, k: u64) -> f64 {
    if let Some(b) = binomial(n, k) {
        return b as f64;
    }
    let k = k.min(n - k);
    exp((0..k)
        .map(|i| log((n - i) as f64) - log((i + 1) as f64))
        .sum())
}

pub fn params_from_d(d: f64, k: u32, n: u64) -> Result<ParamSet, ParamError> {
    if !(d > 1.0) || k < 2 || n < k as u64 {
        return Err(ParamError::InvalidInput { d, k, n });
    }
    let (alpha_real, beta_real) = alpha_beta(d, k)?;
    let p = d / binomial_f64(n - 1, (k - 1) as u64);
    if p > 1.0 {
        return Err(ParamError::DensityTooHigh { p });
    }
    let m0 = n as f64 / alpha_real;
    let ld = log(d);
    Ok(ParamSet {
        d,
        k,
        n,
        alpha_real,
        alpha: ceil(alpha_real) as u64,
        beta_real,
        beta: ceil(beta_real) as u64,
        m0,
        n0: 16.0 * m0 * ld * ld,
        p,
        m: floor(d * n as f64 / k as f64 + 0.5) as u128,
    })
}

/// Exhaustive search (certifies both ways) or heuristic search (can only
/// certify a violation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeMode {
    Exact,
    Heuristic { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    BoundRespected,
    BoundViolated,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceProbe {
    /// `(2k log d / ((k-1) d))^(1/(k-1)) * n`.
    pub bound: f64,
    /// Largest independent set found (maximum in exact mode).
    pub best: VertexSet,
    pub verdict: Verdict,
}

/// Compares the largest independent set of `h` against
/// `u = (2k log d / ((k-1) d))^(1/(k-1)) n`; an independent set of size
/// at least `u` violates the bound.
pub fn probe_independent_set_bound(
    h: &Hypergraph,
    d: f64,
    mode: ProbeMode,
) -> Result<IndependenceProbe, crate::IndependenceError> {
    let k = h.k() as f64;
    let bound = pow(2.0 * k * log(d) / ((k - 1.0) * d), 1.0 / (k - 1.0)) * h.n() as f64;
    let (best, exact) = match mode {
        ProbeMode::Exact => (max_independent_set_exact(h)?, true),
        ProbeMode::Heuristic { trials, seed } => {
            let all = h.all_vertices();
            let best = (0..trials.max(1))
                .map(|i| {
                    let mut r = rng::from_seed(rng::derive_seed(seed, i));
                    let strategy = if i == 0 {
                        Strategy::Ascending
                    } else {
                        Strategy::SeededRandom
                    };
                    greedy_sequence_in(h, &all, 1, strategy, &mut r)
                        .sets
                        .pop()
                        .unwrap_or_else(|| VertexSet::empty(h.n()))
                })
                .max_by_key(|s| s.len())
                .unwrap_or_else(|| VertexSet::empty(h.n()));
            (best, false)
        }
    };
    let verdict = if best.len() as f64 >= bound {
        Verdict::BoundViolated
    } else if exact {
        Verdict::BoundRespected
    } else {
        Verdict::Inconclusive
    };
    Ok(IndependenceProbe {
        bound,
        best,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityProbe {
    /// Densest set found among those of size at most `n0`.
    pub densest: VertexSet,
    pub edges: usize,
    /// `edges / |densest|`, 0 when nothing was found.
    pub ratio: f64,
    pub verdict: Verdict,
}

/// Looks for a set `S` with `|S| <= n0` spanning at least `L |S|` edges.
pub fn probe_density(h: &Hypergraph, n0: f64, ratio_bound: f64, mode: ProbeMode) -> DensityProbe {
    let max_size = if n0 >= h.n() as f64 {
        h.n() as usize
    } else if n0 < 1.0 {
        0
    } else {
        floor(n0) as usize
    };
    let (densest, edges, exact) = match mode {
        ProbeMode::Exact if h.n() <= EXACT_DENSITY_CAP => {
            let (s, e) = densest_exact(h, max_size);
            (s, e, true)
        }
        _ => {
            let (s, e) = densest_by_peeling(h, max_size);
            (s, e, false)
        }
    };
    let ratio = if densest.is_empty() {
        0.0
    } else {
        edges as f64 / densest.len() as f64
    };
    let verdict = if !densest.is_empty() && edges as f64 >= ratio_bound * densest.len() as f64 {
        Verdict::BoundViolated
    } else if exact {
        Verdict::BoundRespected
    } else {
        Verdict::Inconclusive
    };
    DensityProbe {
        densest,
        edges,
        ratio,
        verdict,
    }
}

/// Maximum of `edges(S) / |S|` over non-empty `S` with `|S| <= max_size`,
/// by depth-first enumeration adding vertices in increasing order.
fn densest_exact(h: &Hypergraph, max_size: usize) -> (VertexSet, usize) {
    let n = h.n() as usize;
    // Edges whose largest vertex is v: complete once v joins.
    let mut closing: Vec<Vec<u32>> = alloc::vec![Vec::new(); n];
    for e in h.edges() {
        let mask = e[..e.len() - 1].iter().fold(0u32, |a, &u| a | 1 << (u - 1));
        closing[(e[e.len() - 1] - 1) as usize].push(mask);
    }
    let mut best = (0u32, 0usize, 0usize);
    let mut stack: Vec<(u32, usize, usize, usize)> = alloc::vec![(0, 0, 0, 0)];
    while let Some((set, size, edges, next)) = stack.pop() {
        if size > 0 && (best.1 == 0 || edges * best.1 > best.2 * size) {
            best = (set, size, edges);
        }
        if size == max_size {
            continue;
        }
        for v in next..n {
            let gained = closing[v].iter().filter(|&&m| m & set == m).count();
            stack.push((set | 1 << v, size + 1, edges + gained, v + 1));
        }
    }
    let set = VertexSet::from_vertices(
        h.n(),
        (0..n as u32)
            .filter(|&i| best.0 >> i & 1 == 1)
            .map(|i| i + 1),
    );
    (set, best.2)
}

/// Greedy densest-subgraph peeling: repeatedly drop a minimum-degree vertex
/// and keep the best ratio seen among sets of size at most `max_size`.
fn densest_by_peeling(h: &Hypergraph, max_size: usize) -> (VertexSet, usize) {
    let n = h.n();
    let mut alive = VertexSet::full(n);
    let mut edge_alive = alloc::vec![true; h.m()];
    let mut deg: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { h.degree(v) })
        .collect();
    let mut edges = h.m();
    let mut removed: Vec<Vertex> = Vec::new();
    let mut best: Option<(usize, usize, usize)> = None; // (size, edges, removed prefix)
    let mut heap = alloc::collections::BTreeSet::new();
    for v in 1..=n {
        heap.insert((deg[v as usize], v));
    }
    for size in (1..=n as usize).rev() {
        if size <= max_size {
            let better = match best {
                None => true,
                Some((s, e, _)) => edges * s > e * size,
            };
            if better {
                best = Some((size, edges, removed.len()));
            }
        }
        let (_, v) = heap.pop_first().expect("size >= 1 vertices remain");
        alive.remove(v);
        removed.push(v);
        for &e in h.incident(v) {
            let e = e as usize;
            if !edge_alive[e] {
                continue;
            }
            edge_alive[e] = false;
            edges -= 1;
            for &u in h.edge(e) {
                if u != v && alive.contains(u) {
                    heap.remove(&(deg[u as usize], u));
                    deg[u as usize] -= 1;
                    heap.insert((deg[u as usize], u));
                }
            }
        }
    }
    match best {
        None => (VertexSet::empty(n), 0),
        Some((_, e, prefix)) => {
            let mut s = VertexSet::full(n);
            for &v in &removed[..prefix] {
                s.remove(v);
            }
            (s, e)
        }
    }
}

/// Exact maximum independent set refuses beyond this many vertices.
pub const EXACT_INDEPENDENT_SET_CAP: u32 = EXACT_MIS_CAP;

/// Edge count of the sampled hypergraphs: explicit, or `round(d n / k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeSpec {
    Edges(u64),
    Degree(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloConfig {
    pub n: u32,
    pub k: u32,
    pub edges: EdgeSpec,
    /// `None` takes the value from [`params_from_d`] (requires `EdgeSpec::Degree`).
    pub alpha: Option<u64>,
    pub beta: Option<u64>,
    pub trials: u64,
    pub seed: u64,
    /// When the residual is coreless, also connect two random proper
    /// `(alpha+beta+1)`-colorings and record the path length.
    pub path_probe: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MonteCarloError {
    #[error("n={n} must be at least k={k} >= 2")]
    BadShape { n: u32, k: u32 },
    #[error("alpha and beta must be given unless the edge count comes from d")]
    MissingAlphaBeta,
    #[error("edge count m={m} exceeds C(n,k)")]
    TooManyEdges { m: u128 },
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A validated config: concrete `m`, `alpha`, `beta`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloPlan {
    pub n: u32,
    pub k: u32,
    pub m: u64,
    pub alpha: u64,
    pub beta: u64,
    /// `16 (n/alpha) (log d)^2` when `d` is known.
    pub n0: Option<f64>,
    pub trials: u64,
    pub seed: u64,
    pub path_probe: bool,
}

/// One Monte-Carlo trial. Replaying `seed` reproduces it exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub n: u32,
    pub k: u32,
    pub m: u64,
    pub alpha: u64,
    pub beta: u64,
    pub residual_size: usize,
    pub residual_core_size: usize,
    /// The residual kept a non-empty β-core.
    pub witness: bool,
    pub path_len: Option<usize>,
}

pub fn plan_montecarlo(cfg: &MonteCarloConfig) -> Result<MonteCarloPlan, MonteCarloError> {
    if cfg.k < 2 || cfg.n < cfg.k {
        return Err(MonteCarloError::BadShape { n: cfg.n, k: cfg.k });
    }
    let (m, params) = match cfg.edges {
        EdgeSpec::Edges(m) => (m as u128, None),
        EdgeSpec::Degree(d) => {
            if cfg.alpha.is_some() && cfg.beta.is_some() {
                if !(d >= 0.0) {
                    return Err(ParamError::InvalidInput {
                        d,
                        k: cfg.k,
                        n: cfg.n as u64,
                    }
                    .into());
                }
                (floor(d * cfg.n as f64 / cfg.k as f64 + 0.5) as u128, None)
            } else {
                let p = params_from_d(d, cfg.k, cfg.n as u64)?;
                (p.m, Some(p))
            }
        }
    };
    let available = binomial(cfg.n as u64, cfg.k as u64).unwrap_or(u128::MAX);
    if m > available || m > u64::MAX as u128 {
        return Err(MonteCarloError::TooManyEdges { m });
    }
    let (alpha, beta) = match (cfg.alpha, cfg.beta, &params) {
        (Some(a), Some(b), _) => (a, b),
        (a, b, Some(p)) => (a.unwrap_or(p.alpha), b.unwrap_or(p.beta)),
        _ => return Err(MonteCarloError::MissingAlphaBeta),
    };
    let n0 = match (cfg.edges, params) {
        (_, Some(p)) => Some(p.n0),
        (EdgeSpec::Degree(d), None) if d > 1.0 && alpha > 0 => {
            let ld = log(d);
            Some(16.0 * (cfg.n as f64 / alpha as f64) * ld * ld)
        }
        _ => None,
    };
    Ok(MonteCarloPlan {
        n: cfg.n,
        k: cfg.k,
        m: m as u64,
        alpha,
        beta,
        n0,
        trials: cfg.trials,
        seed: cfg.seed,
        path_probe: cfg.path_probe,
    })
}

/// Trial `index` of `plan`: sample `H(n,m;k)`, run a seeded-random greedy
/// sequence of length `alpha`, and peel the residual with `beta`.
pub fn run_trial(plan: &MonteCarloPlan, index: u64) -> Result<TrialRecord, MonteCarloError> {
    let seed = rng::derive_seed(plan.seed, index);
    let h = generate_hnm(plan.n, plan.m, plan.k, rng::derive_seed(seed, 0))?;
    // Sets past the n-th are empty, and a β beyond the maximum degree acts like n.
    let t = plan.alpha.min(plan.n as u64) as usize;
    let beta = plan.beta.min(plan.m + 1) as usize;
    let mut r = rng::from_seed(rng::derive_seed(seed, 1));
    let seq = greedy_sequence_in(&h, &h.all_vertices(), t, Strategy::SeededRandom, &mut r);
    let core = residual_core(&h, beta, &seq.residual);
    let witness = !core.is_empty();
    let path_len = if plan.path_probe && !witness {
        path_probe(&h, t, beta, seed)
    } else {
        None
    };
    Ok(TrialRecord {
        trial: index,
        seed,
        n: plan.n,
        k: plan.k,
        m: plan.m,
        alpha: plan.alpha,
        beta: plan.beta,
        residual_size: seq.residual.len(),
        residual_core_size: core.len(),
        witness,
        path_len,
    })
}

fn path_probe(h: &Hypergraph, alpha: usize, beta: usize, seed: u64) -> Option<usize> {
    let q = Color::try_from(alpha + beta + 1).ok()?;
    let a = random_proper_coloring(h, q, alpha, beta, 5, rng::derive_seed(seed, 2))?;
    let b = random_proper_coloring(h, q, alpha, beta, 5, rng::derive_seed(seed, 3))?;
    connect(h, &a, &b, q, alpha, beta, &ReconfigOptions::default())
        .ok()
        .map(|p| p.len())
}

/// All trials in index order.
pub fn montecarlo_colorability(
    cfg: &MonteCarloConfig,
) -> Result<Vec<TrialRecord>, MonteCarloError> {
    let plan = plan_montecarlo(cfg)?;
    (0..plan.trials).map(|i| run_trial(&plan, i)).collect()
}

/// Fraction of trials whose residual kept a β-core.
pub fn witness_rate(records: &[TrialRecord]) -> f64 {
    if records.is_empty() {
        return 0.0;
    }
    records.iter().filter(|r| r.witness).count() as f64 / records.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_beta_at_e30() {
        let d = exp(30.0);
        let p = params_from_d(d, 2, 100_000_000_000_000).unwrap();
        let expected_alpha = d / (30.0 - 5.0 * log(30.0));
        assert!((p.alpha_real / expected_alpha - 1.0).abs() < 1e-12);
        assert!((p.beta_real / 2.187e9 - 1.0).abs() < 1e-12);
        assert_eq!(p.beta, 2_187_000_000);
    }

    #[test]
    fn small_d_is_a_domain_error() {
        assert!(matches!(
            params_from_d(10.0, 2, 100),
            Err(ParamError::Domain { .. })
        ));
        assert!(matches!(
            params_from_d(1.0, 2, 100),
            Err(ParamError::InvalidInput { .. })
        ));
    }

    #[test]
    fn too_dense_is_rejected() {
        assert!(matches!(
            params_from_d(exp(30.0), 2, 1000),
            Err(ParamError::DensityTooHigh { .. })
        ));
    }

    #[test]
    fn independence_probe_on_edgeless() {
        let h = Hypergraph::build(10, 2, Vec::<Vec<u32>>::new()).unwrap();
        let r = probe_independent_set_bound(&h, 20.0, ProbeMode::Exact).unwrap();
        assert_eq!(r.best.len(), 10);
        assert_eq!(r.verdict, Verdict::BoundViolated);
    }

    #[test]
    fn density_probe_examples() {
        let h = Hypergraph::build(4, 2, Vec::<Vec<u32>>::new()).unwrap();
        let r = probe_density(&h, 4.0, 1.0, ProbeMode::Exact);
        assert_eq!(r.verdict, Verdict::BoundRespected);
        let t = Hypergraph::build(3, 2, [[1, 2], [2, 3], [1, 3]]).unwrap();
        let r = probe_density(&t, 3.0, 1.0, ProbeMode::Exact);
        assert_eq!(r.verdict, Verdict::BoundViolated);
        assert_eq!(r.densest.to_vec(), vec![1, 2, 3]);
        assert_eq!(r.edges, 3);
        let r = probe_density(&t, 3.0, 1.0, ProbeMode::Heuristic { trials: 1, seed: 0 });
        assert_eq!(r.verdict, Verdict::BoundViolated);
    }
}
