//! Brute-force oracles shared by the integration tests. Everything here works
//! on bitmasks (bit `v-1` for vertex `v`) and shares no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use recolor_core::{Coloring, Hypergraph, VertexSet};

pub fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
        .collect()
}

pub fn to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << (v - 1))
}

pub fn to_set(n: u32, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, (1..=n).filter(|v| mask >> (v - 1) & 1 == 1))
}

fn inside_degree(edges: &[u64], set: u64, v: u32) -> usize {
    edges
        .iter()
        .filter(|&&e| e >> (v - 1) & 1 == 1 && e & !set == 0)
        .count()
}

fn min_degree_at_least(edges: &[u64], set: u64, beta: usize) -> bool {
    (0..64).filter(|b| set >> b & 1 == 1).all(|b| inside_degree(edges, set, b + 1) >= beta)
}

/// The largest subset of `within` whose induced minimum degree is at least
/// `beta`, by scanning every subset. Unions of such sets keep the property,
/// so the union of all of them is the answer.
pub fn brute_core(h: &Hypergraph, beta: usize, within: u64) -> u64 {
    let edges = edge_masks(h);
    let bits: Vec<u32> = (0..64).filter(|b| within >> b & 1 == 1).collect();
    let mut core = 0;
    for sub in 1u64..(1 << bits.len()) {
        let set = bits
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .fold(0u64, |m, (_, &b)| m | 1 << b);
        if set & !core != 0 && min_degree_at_least(&edges, set, beta) {
            core |= set;
        }
    }
    core
}

/// Peels low-degree vertices in a random order instead of smallest-first.
pub fn random_peel_core(h: &Hypergraph, beta: usize, within: u64, seed: u64) -> u64 {
    let edges = edge_masks(h);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut set = within;
    loop {
        let mut low: Vec<u32> = (1..=h.n())
            .filter(|&v| set >> (v - 1) & 1 == 1 && inside_degree(&edges, set, v) < beta)
            .collect();
        if low.is_empty() {
            return set;
        }
        low.shuffle(&mut rng);
        set &= !(1 << (low[0] - 1));
    }
}

pub fn is_independent(edges: &[u64], set: u64) -> bool {
    edges.iter().all(|&e| e & !set != 0)
}

/// Every maximal independent subset of `within`.
pub fn brute_mis(h: &Hypergraph, within: u64) -> Vec<u64> {
    let edges: Vec<u64> = edge_masks(h).into_iter().filter(|&e| e & !within == 0).collect();
    let bits: Vec<u64> = (0..64).filter(|b| within >> b & 1 == 1).map(|b| 1u64 << b).collect();
    let mut out = Vec::new();
    for sub in 0u64..(1 << bits.len()) {
        let set = bits
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .fold(0, |m, (_, &b)| m | b);
        if is_independent(&edges, set)
            && bits
                .iter()
                .all(|&b| set & b != 0 || !is_independent(&edges, set | b))
        {
            out.push(set);
        }
    }
    out.sort_unstable();
    out
}

/// (α,β)-colorability of `within` straight from the definition: every
/// sequence of α maximal independent sets leaves a residual with no β-core.
pub fn brute_colorable(h: &Hypergraph, within: u64, alpha: usize, beta: usize) -> bool {
    if alpha == 0 {
        return if beta == 0 { within == 0 } else { brute_core(h, beta, within) == 0 };
    }
    brute_mis(h, within)
        .into_iter()
        .all(|s| brute_colorable(h, within & !s, alpha - 1, beta))
}

/// A maximum independent set size by scanning every subset.
pub fn brute_max_independent(h: &Hypergraph) -> usize {
    let edges = edge_masks(h);
    (0u64..1 << h.n())
        .filter(|&s| is_independent(&edges, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn is_proper(h: &Hypergraph, c: &[u32]) -> bool {
    h.edges().all(|e| e.iter().any(|&v| c[v as usize - 1] != c[e[0] as usize - 1]))
}

/// Every proper coloring, by scanning all `q^n` assignments.
pub fn brute_proper(h: &Hypergraph, q: u32) -> Vec<Vec<u32>> {
    let n = h.n() as usize;
    let mut out = Vec::new();
    let mut c = vec![1u32; n];
    loop {
        if is_proper(h, &c) {
            out.push(c.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < q {
                c[i] += 1;
                break;
            }
            c[i] = 1;
        }
    }
}

fn adjacent(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).filter(|(x, y)| x != y).count() == 1
}

/// Component sizes (largest first) of the Hamming-1 graph on proper
/// colorings, by union-find over all pairs.
pub fn brute_components(h: &Hypergraph, q: u32) -> Vec<usize> {
    let all = brute_proper(h, q);
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if adjacent(&all[i], &all[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..all.len() {
        *sizes.entry(find(&mut parent, i)).or_default() += 1;
    }
    let mut v: Vec<usize> = sizes.into_values().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Shortest Hamming-1 walk through proper colorings, by BFS over all pairs.
pub fn brute_distance(h: &Hypergraph, q: u32, from: &Coloring, to: &Coloring) -> Option<usize> {
    let all = brute_proper(h, q);
    let s = all.iter().position(|c| c == from.as_slice())?;
    let t = all.iter().position(|c| c == to.as_slice())?;
    let mut dist = vec![usize::MAX; all.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(i) = queue.pop_front() {
        if i == t {
            return Some(dist[i]);
        }
        for j in 0..all.len() {
            if dist[j] == usize::MAX && adjacent(&all[i], &all[j]) {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    None
}

/// Product of `q, q-1, ..., q-n+1`.
pub fn falling_factorial(q: u64, n: u64) -> u64 {
    (0..n).map(|i| q.saturating_sub(i)).product()
}
