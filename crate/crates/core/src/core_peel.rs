//! β-cores, peeling orders and first-fit coloring of coreless hypergraphs.
//!
//! Degrees are always taken inside a vertex set: an edge counts towards the
//! degree of `v` in `U` only if every one of its vertices lies in `U`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, PartialColoring};
use crate::{Color, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeelError {
    #[error("beta must be at least 1")]
    ZeroBeta,
    #[error("active set ranges over 1..={found}, hypergraph has n={n}")]
    UniverseMismatch { found: u32, n: u32 },
    #[error("vertex {0} is already colored")]
    AlreadyColored(Vertex),
    #[error("palette has {found} colors, need at least beta={beta}")]
    PaletteTooSmall { found: usize, beta: usize },
    #[error("the active set has a non-empty {beta}-core of {} vertices", core.len())]
    NonEmptyCore { beta: usize, core: VertexSet },
    #[error("no free palette color for vertex {0}")]
    PaletteExhausted(Vertex),
}

/// Result of peeling an active set down to its β-core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    /// The β-core (possibly empty).
    pub core: VertexSet,
    /// The peeled vertices, reversed removal order: each vertex lies in at
    /// most `β - 1` edges inside the union of its prefix and the core.
    pub order: Vec<Vertex>,
}

pub(crate) fn check_universe(h: &Hypergraph, set: &VertexSet) -> Result<(), PeelError> {
    if set.universe() != h.n() {
        return Err(PeelError::UniverseMismatch {
            found: set.universe(),
            n: h.n(),
        });
    }
    Ok(())
}

/// Peels `active` down to its β-core, always removing the smallest vertex id
/// whose inside-degree is below `beta`.
pub fn beta_core(h: &Hypergraph, beta: usize, active: &VertexSet) -> Result<PeelResult, PeelError> {
    if beta == 0 {
        return Err(PeelError::ZeroBeta);
    }
    check_universe(h, active)?;

    let mut present = active.clone();
    let mut edge_alive: Vec<bool> = (0..h.m()).map(|i| h.edge_inside(i, active)).collect();
    let mut deg = vec![0usize; h.n() as usize + 1];
    for (i, e) in h.edges().enumerate() {
        if edge_alive[i] {
            for &u in e {
                deg[u as usize] += 1;
            }
        }
    }
    let mut queue: BTreeSet<Vertex> = active.iter().filter(|&v| deg[v as usize] < beta).collect();
    let mut removed = Vec::new();
    while let Some(v) = queue.pop_first() {
        present.remove(v);
        removed.push(v);
        for &e in h.incident(v) {
            let e = e as usize;
            if !edge_alive[e] {
                continue;
            }
            edge_alive[e] = false;
            for &u in h.edge(e) {
                if u == v {
                    continue;
                }
                deg[u as usize] -= 1;
                if deg[u as usize] + 1 == beta && present.contains(u) {
                    queue.insert(u);
                }
            }
        }
    }
    removed.reverse();
    Ok(PeelResult {
        core: present,
        order: removed,
    })
}

/// Colors `c` such that some edge through `v` has all its other vertices
/// colored `c`.
pub fn blocked_colors(
    h: &Hypergraph,
    v: Vertex,
    partial: &PartialColoring,
) -> Result<BTreeSet<Color>, PeelError> {
    if partial.get(v).is_some() {
        return Err(PeelError::AlreadyColored(v));
    }
    Ok(blocked_by(h, v, |u| partial.get(u)))
}

pub(crate) fn blocked_by<F: Fn(Vertex) -> Option<Color>>(
    h: &Hypergraph,
    v: Vertex,
    color_of: F,
) -> BTreeSet<Color> {
    let mut out = BTreeSet::new();
    for &e in h.incident(v) {
        let mut common: Option<Color> = None;
        let mut ok = true;
        for &u in h.edge(e as usize) {
            if u == v {
                continue;
            }
            match (color_of(u), common) {
                (None, _) => {
                    ok = false;
                    break;
                }
                (Some(c), None) => common = Some(c),
                (Some(c), Some(d)) if c != d => {
                    ok = false;
                    break;
                }
                _ => {}
            }
        }
        if ok {
            if let Some(c) = common {
                out.insert(c);
            }
        }
    }
    out
}

/// First-fit coloring of the sub-hypergraph induced by `active` along its
/// peeling order. Requires an empty β-core; uses at most `beta` colors, the
/// earliest ones in `palette`.
pub fn color_coreless(
    h: &Hypergraph,
    beta: usize,
    active: &VertexSet,
    palette: &[Color],
) -> Result<PartialColoring, PeelError> {
    if palette.len() < beta {
        return Err(PeelError::PaletteTooSmall {
            found: palette.len(),
            beta,
        });
    }
    let peel = beta_core(h, beta, active)?;
    if !peel.core.is_empty() {
        return Err(PeelError::NonEmptyCore {
            beta,
            core: peel.core,
        });
    }
    let mut out = PartialColoring::uncolored(h.n());
    for &v in &peel.order {
        let blocked = blocked_by(h, v, |u| out.get(u));
        let c = palette
            .iter()
            .copied()
            .find(|c| !blocked.contains(c))
            .ok_or(PeelError::PaletteExhausted(v))?;
        out.set(v, c);
    }
    Ok(out)
}

/// β-core of `set`; with `beta = 0` every set is its own core.
pub fn residual_core(h: &Hypergraph, beta: usize, set: &VertexSet) -> VertexSet {
    if beta == 0 {
        return set.clone();
    }
    beta_core(h, beta, set)
        .map(|p| p.core)
        .unwrap_or_else(|_| set.clone())
}

/// Checks the peeling-order property by direct count: every `order[i]` lies
/// in at most `beta - 1` edges inside `order[..=i] ∪ core`.
pub fn order_is_certified(h: &Hypergraph, beta: usize, peel: &PeelResult) -> bool {
    let mut prefix = peel.core.clone();
    for &v in &peel.order {
        prefix.insert(v);
        if h.degree_inside(v, &prefix) + 1 > beta {
            return false;
        }
    }
    true
}
