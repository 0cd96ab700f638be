//! Random proper colorings for test suites and experiments.

use rand::Rng as _;

use crate::core_peel::{color_coreless, residual_core};
use crate::hypergraph::{Coloring, Hypergraph};
use crate::independence::{greedy_sequence_in, MISequence, Strategy};
use crate::rng;
use crate::Color;

/// A greedy coloring: `alpha` seeded-random maximal independent sets get
/// colors `1..=alpha`, and the residual is first-fit colored from
/// `alpha+1 ..= alpha+beta`. `None` if the residual has a β-core.
pub fn greedy_coloring(h: &Hypergraph, alpha: usize, beta: usize, seed: u64) -> Option<Coloring> {
    let mut r = rng::from_seed(seed);
    let seq = greedy_sequence_in(h, &h.all_vertices(), alpha, Strategy::SeededRandom, &mut r);
    coloring_from_sequence(h, &seq, beta)
}

/// Class `i` of `seq` gets color `i`; the residual is first-fit colored
/// with the next `beta` colors. `None` if the residual has a β-core.
pub fn coloring_from_sequence(h: &Hypergraph, seq: &MISequence, beta: usize) -> Option<Coloring> {
    if !residual_core(h, beta, &seq.residual).is_empty() {
        return None;
    }
    let mut c = Coloring::constant(h.n(), 1);
    for (i, s) in seq.sets.iter().enumerate() {
        for v in s.iter() {
            c.set(v, i as Color + 1);
        }
    }
    if !seq.residual.is_empty() {
        let lo = seq.sets.len() as Color + 1;
        let palette: alloc::vec::Vec<Color> = (lo..lo + beta as Color).collect();
        let partial = color_coreless(h, beta, &seq.residual, &palette).ok()?;
        for (v, col) in partial.assigned() {
            c.set(v, col);
        }
    }
    Some(c)
}

/// Runs `moves` steps of heat-bath Glauber dynamics on proper q-colorings:
/// pick a uniform vertex and a uniform color, keep the change if proper.
pub fn glauber_walk(h: &Hypergraph, start: &Coloring, q: Color, moves: u64, seed: u64) -> Coloring {
    let mut r = rng::from_seed(seed);
    let mut c = start.clone();
    for _ in 0..moves {
        let v = r.random_range(1..=h.n());
        let col = r.random_range(1..=q);
        if col != c.get(v) && h.move_is_proper(c.as_slice(), v, col, None) {
            c.set(v, col);
        }
    }
    c
}

/// A proper q-coloring spread out by `sweeps * n` Glauber moves from a
/// greedy start, or `None` if the greedy start does not exist.
pub fn random_proper_coloring(
    h: &Hypergraph,
    q: Color,
    alpha: usize,
    beta: usize,
    sweeps: u64,
    seed: u64,
) -> Option<Coloring> {
    let start = greedy_coloring(h, alpha, beta, rng::derive_seed(seed, 0))?;
    if start.max_color() > q {
        return None;
    }
    Some(glauber_walk(
        h,
        &start,
        q,
        sweeps * h.n() as u64,
        rng::derive_seed(seed, 1),
    ))
}
