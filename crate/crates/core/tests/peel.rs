mod common;

use std::collections::BTreeSet;

use common::{brute_core, random_peel_core, to_mask};
use proptest::prelude::*;
use recolor_core::core_peel::order_is_certified;
use recolor_core::{beta_core, color_coreless, generate_hnm, Hypergraph, VertexSet};

fn instance(seed: u64) -> (Hypergraph, usize) {
    let n = 4 + (seed % 7) as u32;
    let k = 2 + (seed % 3) as u32;
    let m = (seed / 3) % (2 * n as u64 + 1);
    let h = generate_hnm(n, m.min(recolor_core::hypergraph::binomial(n as u64, k as u64).unwrap() as u64), k, seed).unwrap();
    (h, 1 + (seed % 4) as usize)
}

#[test]
fn core_matches_exhaustive_subsets() {
    for seed in 0..300 {
        let (h, beta) = instance(seed);
        let all = h.all_vertices();
        let peel = beta_core(&h, beta, &all).unwrap();
        assert_eq!(to_mask(&peel.core), brute_core(&h, beta, to_mask(&all)), "seed {seed}");
        assert!(order_is_certified(&h, beta, &peel));
        let mut covered = peel.core.clone();
        covered.union_with(&VertexSet::from_vertices(h.n(), peel.order.iter().copied()));
        assert_eq!(covered, all);
        assert_eq!(peel.order.len() + peel.core.len(), h.n() as usize);
    }
}

#[test]
fn core_independent_of_tie_breaking() {
    for seed in 0..100 {
        let (h, beta) = instance(seed);
        let core = to_mask(&beta_core(&h, beta, &h.all_vertices()).unwrap().core);
        for t in 0..10 {
            assert_eq!(random_peel_core(&h, beta, to_mask(&h.all_vertices()), t), core);
        }
    }
}

/// Checks the certified-order count directly: each vertex has at most
/// `beta - 1` edges inside the vertices before it plus the core.
fn order_count_ok(h: &Hypergraph, beta: usize, core: &VertexSet, order: &[u32]) -> bool {
    let mut prefix = core.clone();
    order.iter().all(|&v| {
        prefix.insert(v);
        h.degree_inside(v, &prefix) < beta
    })
}

#[test]
fn coreless_instances_color_properly() {
    let mut done = 0;
    let mut seed = 0u64;
    while done < 200 {
        seed += 1;
        let (h, beta) = instance(seed);
        let all = h.all_vertices();
        let peel = beta_core(&h, beta, &all).unwrap();
        if !peel.core.is_empty() {
            continue;
        }
        assert!(order_count_ok(&h, beta, &peel.core, &peel.order));
        let palette: Vec<u32> = (10..10 + beta as u32).collect();
        let c = color_coreless(&h, beta, &all, &palette).unwrap();
        let colors: Vec<u32> = h.vertices().map(|v| c.get(v).unwrap()).collect();
        assert!(common::is_proper(&h, &colors), "seed {seed}");
        let used: BTreeSet<u32> = colors.iter().copied().collect();
        assert!(used.len() <= beta && used.iter().all(|c| palette.contains(c)));
        done += 1;
    }
}

#[test]
fn core_refuses_coreless_coloring() {
    let h = Hypergraph::build(3, 3, [[1, 2, 3]]).unwrap();
    assert!(color_coreless(&h, 1, &h.all_vertices(), &[4]).is_err());
}

proptest! {
    #[test]
    fn core_on_subsets_matches_oracle(seed in any::<u64>(), beta in 1usize..4, keep in any::<u64>()) {
        let (h, _) = instance(seed);
        let active = VertexSet::from_vertices(h.n(), h.vertices().filter(|v| keep >> v & 1 == 1));
        let peel = beta_core(&h, beta, &active).unwrap();
        prop_assert_eq!(to_mask(&peel.core), brute_core(&h, beta, to_mask(&active)));
        prop_assert!(peel.core.is_subset(&active));
        prop_assert!(order_count_ok(&h, beta, &peel.core, &peel.order));
    }

    #[test]
    fn larger_beta_gives_smaller_core(seed in any::<u64>(), beta in 1usize..4) {
        let (h, _) = instance(seed);
        let all = h.all_vertices();
        let a = beta_core(&h, beta, &all).unwrap().core;
        let b = beta_core(&h, beta + 1, &all).unwrap().core;
        prop_assert!(b.is_subset(&a));
    }
}
