//! Maximal independent sets, maximally independent sequences and
//! (α,β)-colorability.
//!
//! A set is independent when no edge lies entirely inside it. A sequence
//! `V_1, …, V_t` is maximally independent when each `V_j` is a maximal
//! independent set of the sub-hypergraph induced by what the earlier sets
//! left over; empty sets are allowed so every sequence has length exactly
//! `t`. A hypergraph is (α,β)-colorable when no maximally independent
//! sequence of length α leaves a residual with a non-empty β-core.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use thiserror::Error;

use crate::core_peel::{residual_core, PeelError};
use crate::hypergraph::{Coloring, Hypergraph};
use crate::rng::{self, Rng};
use crate::{Color, Vertex, VertexSet};

/// Default vertex cap for exhaustive (α,β)-colorability certification.
pub const EXACT_COLORABILITY_CAP: u32 = 12;
/// Vertex cap for the exact maximum independent set search.
pub const EXACT_MIS_CAP: u32 = 30;
/// Bitmask routines cannot go beyond this many vertices.
const MASK_LIMIT: u32 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependenceError {
    #[error("seed set is not independent inside the active set")]
    SeedNotIndependent,
    #[error("seed set is not contained in the active set")]
    SeedOutsideActive,
    #[error("n={n} exceeds the exhaustive search cap of {cap}")]
    TooLarge { n: u32, cap: u32 },
    #[error(transparent)]
    Peel(#[from] PeelError),
}

/// Candidate order used when growing an independent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Increasing vertex id.
    #[default]
    Ascending,
    /// A fresh seeded shuffle at every level.
    SeededRandom,
}

/// `V_1, …, V_t` plus the vertices none of them took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MISequence {
    pub sets: Vec<VertexSet>,
    pub residual: VertexSet,
}

/// A maximally independent sequence whose residual has a non-empty β-core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorabilityWitness {
    pub sequence: MISequence,
    pub core_vertices: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colorability {
    Colorable,
    NotColorable(ColorabilityWitness),
}

impl Colorability {
    pub fn is_colorable(&self) -> bool {
        matches!(self, Colorability::Colorable)
    }
}

/// Grows `seed` to a maximal independent set of `active`, visiting
/// candidates in `order`. `seed` must be independent and inside `active`.
pub(crate) fn extend_with<I: IntoIterator<Item = Vertex>>(
    h: &Hypergraph,
    active: &VertexSet,
    seed: &VertexSet,
    order: I,
) -> VertexSet {
    let k = h.k() as usize;
    let mut set = seed.clone();
    let mut inside = vec![0usize; h.m()];
    for v in seed.iter() {
        for &e in h.incident(v) {
            inside[e as usize] += 1;
        }
    }
    for v in order {
        if set.contains(v) || !active.contains(v) {
            continue;
        }
        // With `set` inside `active`, an edge through v with k-1 members in
        // `set` is exactly an edge that adding v would complete.
        if h.incident(v).iter().any(|&e| inside[e as usize] == k - 1) {
            continue;
        }
        set.insert(v);
        for &e in h.incident(v) {
            inside[e as usize] += 1;
        }
    }
    set
}

fn candidate_order(active: &VertexSet, strategy: Strategy, rng: &mut Rng) -> Vec<Vertex> {
    let mut order = active.to_vec();
    if strategy == Strategy::SeededRandom {
        order.shuffle(rng);
    }
    order
}

/// Maximal independent superset of `seed_set` inside `active`.
pub fn extend_to_mis(
    h: &Hypergraph,
    active: &VertexSet,
    seed_set: &VertexSet,
    strategy: Strategy,
    rng_seed: u64,
) -> Result<VertexSet, IndependenceError> {
    crate::core_peel::check_universe(h, active)?;
    if !seed_set.is_subset(active) {
        return Err(IndependenceError::SeedOutsideActive);
    }
    if !h.is_independent(seed_set) {
        return Err(IndependenceError::SeedNotIndependent);
    }
    let mut rng = rng::from_seed(rng_seed);
    let order = candidate_order(active, strategy, &mut rng);
    Ok(extend_with(h, active, seed_set, order))
}

/// `set` is independent and no vertex of `active \ set` can join it.
pub fn is_maximal_independent_in(h: &Hypergraph, set: &VertexSet, active: &VertexSet) -> bool {
    if !set.is_subset(active) || !h.is_independent(set) {
        return false;
    }
    active.iter().filter(|&v| !set.contains(v)).all(|v| {
        h.incident(v).iter().any(|&e| {
            h.edge(e as usize)
                .iter()
                .all(|&u| u == v || set.contains(u))
        })
    })
}

/// A maximally independent sequence of length `t` inside `active`.
pub fn greedy_sequence_in(
    h: &Hypergraph,
    active: &VertexSet,
    t: usize,
    strategy: Strategy,
    rng: &mut Rng,
) -> MISequence {
    let mut residual = active.clone();
    let mut sets = Vec::with_capacity(t);
    let empty = VertexSet::empty(h.n());
    for _ in 0..t {
        let order = candidate_order(&residual, strategy, rng);
        let s = extend_with(h, &residual, &empty, order);
        residual.difference_with(&s);
        sets.push(s);
    }
    MISequence { sets, residual }
}

/// A maximally independent sequence of length `t` over all of `H`.
pub fn greedy_sequence(h: &Hypergraph, t: usize, strategy: Strategy, rng_seed: u64) -> MISequence {
    let mut rng = rng::from_seed(rng_seed);
    greedy_sequence_in(h, &h.all_vertices(), t, strategy, &mut rng)
}

/// Checks the good-greedy shape on `active` with colors shifted by `base`:
/// classes `base+1 ..= base+alpha` form a maximally independent sequence of
/// `active`, the remaining vertices use colors above `base+alpha`, at most
/// `beta` of them, and have no β-core. Colors outside `active` are ignored.
pub(crate) fn good_greedy_in(
    h: &Hypergraph,
    colors: &Coloring,
    active: &VertexSet,
    base: Color,
    alpha: usize,
    beta: usize,
) -> bool {
    let proper_inside = (0..h.m()).all(|i| {
        let e = h.edge(i);
        !h.edge_inside(i, active) || e.iter().any(|&u| colors.get(u) != colors.get(e[0]))
    });
    if !proper_inside || active.iter().any(|v| colors.get(v) <= base) {
        return false;
    }
    let mut residual = active.clone();
    for j in 1..=alpha as Color {
        let class = VertexSet::from_vertices(
            h.n(),
            residual.iter().filter(|&v| colors.get(v) == base + j),
        );
        if !is_maximal_independent_in(h, &class, &residual) {
            return false;
        }
        residual.difference_with(&class);
    }
    let used: BTreeSet<Color> = residual.iter().map(|v| colors.get(v)).collect();
    if used.len() > beta {
        return false;
    }
    residual_core(h, beta, &residual).is_empty()
}

/// Whether `coloring` is a good greedy coloring for `(alpha, beta)`.
pub fn check_good_greedy(h: &Hypergraph, coloring: &Coloring, alpha: usize, beta: usize) -> bool {
    coloring.len() == h.n() as usize
        && good_greedy_in(h, coloring, &h.all_vertices(), 0, alpha, beta)
}

struct MaskGraph {
    /// Edge masks through each vertex, indexed by `v - 1`.
    by_vertex: Vec<Vec<u64>>,
    edges: Vec<u64>,
}

impl MaskGraph {
    fn new(h: &Hypergraph) -> Self {
        let mut by_vertex = vec![Vec::new(); h.n() as usize];
        let mut edges = Vec::with_capacity(h.m());
        for e in h.edges() {
            let mask = e.iter().fold(0u64, |acc, &u| acc | 1 << (u - 1));
            edges.push(mask);
            for &u in e {
                by_vertex[(u - 1) as usize].push(mask);
            }
        }
        MaskGraph { by_vertex, edges }
    }

    fn core(&self, mut set: u64, beta: usize) -> u64 {
        loop {
            let mut next = set;
            let mut rest = set;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = self.by_vertex[i].iter().filter(|&&e| e & set == e).count();
                if d < beta {
                    next &= !(1 << i);
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    /// All maximal independent sets of the sub-hypergraph induced by
    /// `within`, in increasing mask order.
    fn maximal_independent_sets(&self, within: u64) -> Vec<u64> {
        let verts: Vec<usize> = (0..64).filter(|&i| within >> i & 1 == 1).collect();
        let mut out = Vec::new();
        self.mis_rec(within, &verts, 0, 0, &mut out);
        out.sort_unstable();
        out
    }

    fn mis_rec(&self, within: u64, verts: &[usize], pos: usize, set: u64, out: &mut Vec<u64>) {
        if pos == verts.len() {
            let maximal = verts.iter().all(|&v| {
                set >> v & 1 == 1 || self.by_vertex[v].iter().any(|&e| e & !(set | 1 << v) == 0)
            });
            if maximal {
                out.push(set);
            }
            return;
        }
        let v = verts[pos];
        let with = set | 1 << v;
        if self.by_vertex[v].iter().all(|&e| e & !with != 0) {
            self.mis_rec(within, verts, pos + 1, with, out);
        }
        // Leaving v out is only viable if some edge through v could still
        // end up with all its other vertices chosen.
        let undecided = verts[pos + 1..].iter().fold(0u64, |a, &u| a | 1 << u);
        let reachable = set | undecided | 1 << v;
        if self.by_vertex[v]
            .iter()
            .any(|&e| e & within == e && e & !reachable == 0)
        {
            self.mis_rec(within, verts, pos + 1, set, out);
        }
    }

    fn independent(&self, set: u64) -> bool {
        self.edges.iter().all(|&e| e & set != e)
    }
}

fn mask_of(set: &VertexSet) -> u64 {
    set.iter().fold(0u64, |acc, v| acc | 1 << (v - 1))
}

fn set_of(n: u32, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1))
}

fn check_cap(h: &Hypergraph, cap: u32) -> Result<(), IndependenceError> {
    let cap = cap.min(MASK_LIMIT);
    if h.n() > cap {
        return Err(IndependenceError::TooLarge { n: h.n(), cap });
    }
    Ok(())
}

/// Every maximal independent set of the sub-hypergraph induced by `active`.
pub fn maximal_independent_sets_exact(
    h: &Hypergraph,
    active: &VertexSet,
    cap: u32,
) -> Result<Vec<VertexSet>, IndependenceError> {
    check_cap(h, cap)?;
    let mg = MaskGraph::new(h);
    Ok(mg
        .maximal_independent_sets(mask_of(active))
        .into_iter()
        .map(|m| set_of(h.n(), m))
        .collect())
}

/// Exhaustive (α,β)-colorability of the sub-hypergraph induced by `active`.
pub fn is_alpha_beta_colorable_exact_in(
    h: &Hypergraph,
    active: &VertexSet,
    alpha: usize,
    beta: usize,
    cap: u32,
) -> Result<Colorability, IndependenceError> {
    check_cap(h, cap)?;
    let mg = MaskGraph::new(h);
    let mut failed: BTreeSet<(u64, usize)> = BTreeSet::new();
    let mut stack = Vec::with_capacity(alpha);
    let found = search(&mg, mask_of(active), alpha, beta, &mut failed, &mut stack);
    Ok(match found {
        None => Colorability::Colorable,
        Some((residual, core)) => Colorability::NotColorable(ColorabilityWitness {
            sequence: MISequence {
                sets: stack.iter().map(|&m| set_of(h.n(), m)).collect(),
                residual: set_of(h.n(), residual),
            },
            core_vertices: set_of(h.n(), core),
        }),
    })
}

/// Depth-first search for a sequence leaving a β-core; on success `stack`
/// holds the sequence and the residual and core masks are returned.
fn search(
    mg: &MaskGraph,
    residual: u64,
    remaining: usize,
    beta: usize,
    failed: &mut BTreeSet<(u64, usize)>,
    stack: &mut Vec<u64>,
) -> Option<(u64, u64)> {
    if remaining == 0 {
        let core = mg.core(residual, beta);
        return (core != 0).then_some((residual, core));
    }
    // Shrinking the residual never creates a core, so an empty-core residual
    // is a dead end however many sets remain.
    if mg.core(residual, beta) == 0 || failed.contains(&(residual, remaining)) {
        return None;
    }
    for s in mg.maximal_independent_sets(residual) {
        stack.push(s);
        if let Some(hit) = search(mg, residual & !s, remaining - 1, beta, failed, stack) {
            return Some(hit);
        }
        stack.pop();
    }
    failed.insert((residual, remaining));
    None
}

/// Exhaustive (α,β)-colorability; refuses hypergraphs above `cap` vertices.
pub fn is_alpha_beta_colorable_exact(
    h: &Hypergraph,
    alpha: usize,
    beta: usize,
    cap: u32,
) -> Result<Colorability, IndependenceError> {
    is_alpha_beta_colorable_exact_in(h, &h.all_vertices(), alpha, beta, cap)
}

fn witness_from(h: &Hypergraph, seq: MISequence, beta: usize) -> Option<ColorabilityWitness> {
    let core = residual_core(h, beta, &seq.residual);
    (!core.is_empty()).then_some(ColorabilityWitness {
        sequence: seq,
        core_vertices: core,
    })
}

/// Randomized search for a witness against (α,β)-colorability. Trial `i`
/// uses `derive_seed(rng_seed, i)`. `None` is evidence, not proof.
pub fn falsify_alpha_beta(
    h: &Hypergraph,
    alpha: usize,
    beta: usize,
    trials: u64,
    rng_seed: u64,
) -> Option<ColorabilityWitness> {
    (0..trials).find_map(|i| falsify_trial(h, alpha, beta, rng::derive_seed(rng_seed, i)))
}

/// One seeded-random greedy sequence, kept if it is a witness.
pub fn falsify_trial(
    h: &Hypergraph,
    alpha: usize,
    beta: usize,
    seed: u64,
) -> Option<ColorabilityWitness> {
    let mut rng = rng::from_seed(seed);
    let seq = greedy_sequence_in(
        h,
        &h.all_vertices(),
        alpha,
        Strategy::SeededRandom,
        &mut rng,
    );
    witness_from(h, seq, beta)
}

/// Number of the `trials` seeded-random sequences that are witnesses.
pub fn witness_count(h: &Hypergraph, alpha: usize, beta: usize, trials: u64, rng_seed: u64) -> u64 {
    (0..trials)
        .filter(|&i| falsify_trial(h, alpha, beta, rng::derive_seed(rng_seed, i)).is_some())
        .count() as u64
}

/// A maximum independent set by branch and bound.
pub fn max_independent_set_exact(h: &Hypergraph) -> Result<VertexSet, IndependenceError> {
    check_cap(h, EXACT_MIS_CAP)?;
    let mg = MaskGraph::new(h);
    let all = if h.n() == 64 {
        u64::MAX
    } else {
        (1u64 << h.n()) - 1
    };
    // Warm start from the ascending greedy set.
    let greedy = mask_of(&extend_with(
        h,
        &h.all_vertices(),
        &VertexSet::empty(h.n()),
        1..=h.n(),
    ));
    let mut best = greedy;
    branch(&mg, 0, all, &mut best);
    debug_assert!(mg.independent(best));
    Ok(set_of(h.n(), best))
}

/// Every vertex of `cand` can be added to `set` on its own.
fn branch(mg: &MaskGraph, set: u64, cand: u64, best: &mut u64) {
    if cand == 0 {
        if set.count_ones() > best.count_ones() {
            *best = set;
        }
        return;
    }
    if set.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    let with = set | 1 << v;
    let mut next = rest;
    for &e in &mg.by_vertex[v] {
        let missing = e & !with;
        if missing.count_ones() == 1 {
            next &= !missing;
        }
    }
    branch(mg, with, next, best);
    branch(mg, set, rest, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::build(3, 2, [[1, 2], [2, 3], [1, 3]]).unwrap()
    }

    fn edgeless(n: u32) -> Hypergraph {
        Hypergraph::build(n, 2, Vec::<Vec<u32>>::new()).unwrap()
    }

    fn set(n: u32, v: &[u32]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn extend_examples() {
        let h = edgeless(4);
        let all = h.all_vertices();
        assert_eq!(
            extend_to_mis(&h, &all, &VertexSet::empty(4), Strategy::Ascending, 0).unwrap(),
            all
        );
        let e = Hypergraph::build(3, 3, [[1, 2, 3]]).unwrap();
        assert_eq!(
            extend_to_mis(
                &e,
                &e.all_vertices(),
                &VertexSet::empty(3),
                Strategy::Ascending,
                0
            )
            .unwrap()
            .to_vec(),
            vec![1, 2]
        );
        let p = Hypergraph::build(3, 2, [[1, 2], [2, 3]]).unwrap();
        assert_eq!(
            extend_to_mis(&p, &p.all_vertices(), &set(3, &[2]), Strategy::Ascending, 0)
                .unwrap()
                .to_vec(),
            vec![2]
        );
        assert_eq!(
            extend_to_mis(
                &p,
                &p.all_vertices(),
                &set(3, &[1, 2]),
                Strategy::Ascending,
                0
            ),
            Err(IndependenceError::SeedNotIndependent)
        );
    }

    #[test]
    fn greedy_sequence_examples() {
        let h = edgeless(3);
        let s = greedy_sequence(&h, 2, Strategy::Ascending, 0);
        assert_eq!(s.sets[0].to_vec(), vec![1, 2, 3]);
        assert!(s.sets[1].is_empty());
        assert!(s.residual.is_empty());

        let t = triangle();
        let s = greedy_sequence(&t, 3, Strategy::Ascending, 0);
        let sets: Vec<_> = s.sets.iter().map(|x| x.to_vec()).collect();
        assert_eq!(sets, vec![vec![1], vec![2], vec![3]]);
        assert!(s.residual.is_empty());
        let s = greedy_sequence(&t, 2, Strategy::Ascending, 0);
        assert_eq!(s.residual.to_vec(), vec![3]);
    }

    #[test]
    fn good_greedy_examples() {
        let h = edgeless(3);
        assert!(check_good_greedy(&h, &Coloring::constant(3, 1), 1, 1));
        let t = triangle();
        let c = Coloring::new(vec![1, 2, 3]).unwrap();
        assert!(!check_good_greedy(&t, &c, 1, 1));
        assert!(check_good_greedy(&t, &c, 2, 1));
    }

    #[test]
    fn exact_colorability_examples() {
        let h = edgeless(4);
        assert!(is_alpha_beta_colorable_exact(&h, 1, 1, 12)
            .unwrap()
            .is_colorable());
        let t = triangle();
        match is_alpha_beta_colorable_exact(&t, 1, 1, 12).unwrap() {
            Colorability::NotColorable(w) => {
                assert_eq!(w.sequence.sets[0].to_vec(), vec![1]);
                assert_eq!(w.sequence.residual.to_vec(), vec![2, 3]);
                assert_eq!(w.core_vertices.to_vec(), vec![2, 3]);
            }
            Colorability::Colorable => panic!("K3 is not (1,1)-colorable"),
        }
        assert!(is_alpha_beta_colorable_exact(&t, 2, 1, 12)
            .unwrap()
            .is_colorable());
        let big = edgeless(13);
        assert_eq!(
            is_alpha_beta_colorable_exact(&big, 1, 1, 12),
            Err(IndependenceError::TooLarge { n: 13, cap: 12 })
        );
    }

    #[test]
    fn falsify_examples() {
        assert!(falsify_alpha_beta(&edgeless(5), 1, 1, 10, 3).is_none());
        let w = falsify_alpha_beta(&triangle(), 1, 1, 10, 3).expect("every sequence is a witness");
        assert_eq!(w.core_vertices.len(), 2);
        assert_eq!(witness_count(&triangle(), 1, 1, 10, 3), 10);
    }

    #[test]
    fn max_independent_examples() {
        assert_eq!(max_independent_set_exact(&edgeless(7)).unwrap().len(), 7);
        assert_eq!(max_independent_set_exact(&triangle()).unwrap().len(), 1);
        let e = Hypergraph::build(4, 3, [[1, 2, 3]]).unwrap();
        let s = max_independent_set_exact(&e).unwrap();
        assert_eq!(s.len(), 3);
        assert!(e.is_independent(&s));
        assert!(matches!(
            max_independent_set_exact(&edgeless(31)),
            Err(IndependenceError::TooLarge { .. })
        ));
    }

    #[test]
    fn maximal_sets_of_small_cases() {
        let t = triangle();
        let all = maximal_independent_sets_exact(&t, &t.all_vertices(), 12).unwrap();
        let got: Vec<_> = all.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![1], vec![2], vec![3]]);
        let p = Hypergraph::build(3, 2, [[1, 2], [2, 3]]).unwrap();
        let got: Vec<_> = maximal_independent_sets_exact(&p, &p.all_vertices(), 12)
            .unwrap()
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(got, vec![vec![2], vec![1, 3]]);
    }
}
