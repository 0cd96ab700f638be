//! Explicit recoloring paths in the reconfiguration graph.
//!
//! A path is a start coloring plus a list of single-vertex recolorings; every
//! intermediate coloring must be proper. The builders below compose three
//! constructions:
//!
//! - [`path_core`] moves between two colorings that agree outside a coreless
//!   set `W`, replaying the path vertex by vertex along a peeling order of
//!   `W` and detouring the newly added vertex to a spare color whenever it
//!   would block a pending move;
//! - [`path_to_good_greedy`] reaches a good greedy coloring by growing each
//!   color class to a maximal independent set, first-fit coloring the
//!   coreless residual and bridging with [`path_core`];
//! - [`path_between_good_greedy`] joins two good greedy colorings by fixing
//!   the first class of the target and recursing on the rest with one color
//!   fewer.
//!
//! [`connect`] chains them between any two proper colorings.
//!
//! Recursion never re-indexes vertices. Instead a *frame* carries the active
//! vertex set and a color `base`: vertices outside the frame hold colors
//! `<= base` that stay fixed, and active vertices only ever use colors above
//! `base`, so no edge leaving the frame can turn monochromatic.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::core_peel::{beta_core, color_coreless, residual_core, PeelError};
use crate::hypergraph::{Coloring, Hypergraph, HypergraphError};
use crate::independence::{extend_with, good_greedy_in, ColorabilityWitness, MISequence};
use crate::{Color, Vertex, VertexSet};

pub const DEFAULT_STEP_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigOptions {
    /// Longest path any single construction may emit.
    pub step_cap: usize,
}

impl Default for ReconfigOptions {
    fn default() -> Self {
        ReconfigOptions {
            step_cap: DEFAULT_STEP_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReconfigError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("q={q} is below alpha+beta+1={needed}")]
    TooFewColors { q: Color, needed: u64 },
    #[error("{which} coloring is not proper")]
    Improper { which: &'static str },
    #[error("{which} coloring gives vertex {vertex} color {color} outside 1..={q}")]
    ColorOutOfRange {
        which: &'static str,
        vertex: Vertex,
        color: Color,
        q: Color,
    },
    #[error("colorings disagree at vertex {0} outside W")]
    DisagreeOutsideW(Vertex),
    #[error("vertex {vertex} outside W has color {color}, expected one of the first alpha colors")]
    OutsideAlphaPalette { vertex: Vertex, color: Color },
    #[error("W is not a subset of the active vertices")]
    WOutsideActive,
    #[error("W has a non-empty {beta}-core of {} vertices", core.len())]
    ResidualCore { beta: usize, core: VertexSet },
    #[error("{which} coloring is not good greedy")]
    NotGoodGreedy { which: &'static str },
    #[error("hypergraph is not (alpha,beta)-colorable along the constructed sequence")]
    NotColorableEvidence(ColorabilityWitness),
    #[error("no spare color for vertex {0}")]
    SpareColorExhausted(Vertex),
    #[error("no color unused by the source coloring")]
    NoUnusedColor,
    #[error("path exceeded the cap of {0} steps")]
    StepCapExceeded(usize),
    #[error(transparent)]
    Peel(#[from] PeelError),
}

/// Recolor `vertex` to `new_color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecolorStep {
    pub vertex: Vertex,
    pub new_color: Color,
}

/// Per-phase accounting for a constructed path.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathStats {
    /// Moves that grow color classes into maximal independent sets.
    pub inter_moves: usize,
    /// Moves emitted by the coreless-set bridge.
    pub core_moves: usize,
    /// Spare-color detours inserted by the bridge, summed over all calls.
    pub core_detours: usize,
    /// Detours by peeling level (index `i` is the `i+1`-th vertex of `W`),
    /// summed over all calls.
    pub detours_per_level: Vec<usize>,
    /// Moves that swap the first class while joining good greedy colorings.
    pub final_moves: usize,
    /// Deepest recursion level reached while joining good greedy colorings.
    pub final_depth: usize,
    /// Most times any single vertex was recolored by a class-growing phase.
    pub max_inter_recolors: u32,
}

impl PathStats {
    fn absorb(&mut self, other: &PathStats) {
        self.inter_moves += other.inter_moves;
        self.core_moves += other.core_moves;
        self.core_detours += other.core_detours;
        if self.detours_per_level.len() < other.detours_per_level.len() {
            self.detours_per_level
                .resize(other.detours_per_level.len(), 0);
        }
        for (a, b) in self
            .detours_per_level
            .iter_mut()
            .zip(&other.detours_per_level)
        {
            *a += b;
        }
        self.final_moves += other.final_moves;
        self.final_depth = self.final_depth.max(other.final_depth);
        self.max_inter_recolors = self.max_inter_recolors.max(other.max_inter_recolors);
    }
}

/// A walk in the reconfiguration graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecolorPath {
    pub start: Coloring,
    pub steps: Vec<RecolorStep>,
    pub stats: PathStats,
}

impl RecolorPath {
    pub fn empty(start: Coloring) -> Self {
        RecolorPath {
            start,
            steps: Vec::new(),
            stats: PathStats::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays every step from `start`.
    pub fn end(&self) -> Coloring {
        let mut c = self.start.clone();
        for s in &self.steps {
            c.set(s.vertex, s.new_color);
        }
        c
    }

    /// Every coloring along the path, `start` first.
    pub fn colorings(&self) -> impl Iterator<Item = Coloring> + '_ {
        let mut cur = self.start.clone();
        core::iter::once(cur.clone()).chain(self.steps.iter().map(move |s| {
            cur.set(s.vertex, s.new_color);
            cur.clone()
        }))
    }

    /// The same walk traversed from its end back to `start`.
    pub fn reversed(&self) -> RecolorPath {
        let mut cur = self.start.clone();
        let mut back = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            back.push(RecolorStep {
                vertex: s.vertex,
                new_color: cur.get(s.vertex),
            });
            cur.set(s.vertex, s.new_color);
        }
        back.reverse();
        RecolorPath {
            start: cur,
            steps: back,
            stats: self.stats.clone(),
        }
    }
}

/// What went wrong while replaying a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    StartLength {
        found: usize,
        n: usize,
    },
    StartColorOutOfRange {
        vertex: Vertex,
        color: Color,
    },
    StartImproper {
        edge: usize,
    },
    VertexOutOfRange {
        vertex: Vertex,
    },
    ColorOutOfRange {
        vertex: Vertex,
        color: Color,
    },
    /// The step does not change the coloring, so consecutive colorings are
    /// not at Hamming distance 1.
    NoOpStep {
        vertex: Vertex,
    },
    Improper {
        vertex: Vertex,
        edge: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathVerdict {
    Valid {
        end: Coloring,
        steps: usize,
    },
    /// `index` is the offending step, or `None` for the start coloring.
    Invalid {
        index: Option<usize>,
        violation: Violation,
    },
}

impl PathVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, PathVerdict::Valid { .. })
    }
}

/// Replays `path` and reports the first violation.
pub fn verify_path(h: &Hypergraph, path: &RecolorPath, q: Color) -> PathVerdict {
    let invalid = |index, violation| PathVerdict::Invalid { index, violation };
    let n = h.n() as usize;
    if path.start.len() != n {
        return invalid(
            None,
            Violation::StartLength {
                found: path.start.len(),
                n,
            },
        );
    }
    if let Some(v) = h.vertices().find(|&v| path.start.get(v) > q) {
        return invalid(
            None,
            Violation::StartColorOutOfRange {
                vertex: v,
                color: path.start.get(v),
            },
        );
    }
    if let Some(edge) = h.first_monochromatic(&path.start) {
        return invalid(None, Violation::StartImproper { edge });
    }
    let mut cur = path.start.clone();
    for (i, s) in path.steps.iter().enumerate() {
        let v = s.vertex;
        if v == 0 || v > h.n() {
            return invalid(Some(i), Violation::VertexOutOfRange { vertex: v });
        }
        if s.new_color == 0 || s.new_color > q {
            return invalid(
                Some(i),
                Violation::ColorOutOfRange {
                    vertex: v,
                    color: s.new_color,
                },
            );
        }
        if cur.get(v) == s.new_color {
            return invalid(Some(i), Violation::NoOpStep { vertex: v });
        }
        cur.set(v, s.new_color);
        if let Some(&e) = h.incident(v).iter().find(|&&e| {
            h.edge(e as usize)
                .iter()
                .all(|&u| cur.get(u) == s.new_color)
        }) {
            return invalid(
                Some(i),
                Violation::Improper {
                    vertex: v,
                    edge: e as usize,
                },
            );
        }
    }
    PathVerdict::Valid {
        end: cur,
        steps: path.steps.len(),
    }
}

/// Vertices of `active` hold colors in `base+1 ..= q`; the rest are frozen
/// at colors `<= base`.
#[derive(Clone, Copy)]
struct Frame<'a> {
    h: &'a Hypergraph,
    active: &'a VertexSet,
    base: Color,
    q: Color,
    opts: &'a ReconfigOptions,
}

fn check_colors(
    h: &Hypergraph,
    c: &Coloring,
    q: Color,
    which: &'static str,
) -> Result<(), ReconfigError> {
    h.check_len(c.len())?;
    if let Some(v) = h.vertices().find(|&v| c.get(v) > q) {
        return Err(ReconfigError::ColorOutOfRange {
            which,
            vertex: v,
            color: c.get(v),
            q,
        });
    }
    if !h.is_proper(c)? {
        return Err(ReconfigError::Improper { which });
    }
    Ok(())
}

fn check_q(q: Color, alpha: usize, beta: usize) -> Result<(), ReconfigError> {
    let needed = alpha as u64 + beta as u64 + 1;
    if (q as u64) < needed {
        return Err(ReconfigError::TooFewColors { q, needed });
    }
    Ok(())
}

/// Applies `step` to `cur`, appending it to `out`.
#[inline]
fn push(out: &mut Vec<RecolorStep>, cur: &mut Coloring, vertex: Vertex, new_color: Color) {
    debug_assert_ne!(cur.get(vertex), new_color);
    cur.set(vertex, new_color);
    out.push(RecolorStep { vertex, new_color });
}

/// Whether giving `v` the color `c` keeps every edge through `v` that avoids
/// `pending` non-monochromatic.
fn free_for(h: &Hypergraph, cur: &Coloring, pending: &VertexSet, v: Vertex, c: Color) -> bool {
    h.incident(v).iter().all(|&e| {
        let e = h.edge(e as usize);
        e.iter().any(|&u| pending.contains(u)) || e.iter().any(|&u| u != v && cur.get(u) != c)
    })
}

/// The bridge between `chi` and `tau` inside a frame. Preconditions are
/// checked by the caller except those that only depend on `w`.
fn core_bridge(
    f: Frame<'_>,
    w: &VertexSet,
    chi: &Coloring,
    tau: &Coloring,
    alpha: usize,
    beta: usize,
    stats: &mut PathStats,
) -> Result<Vec<RecolorStep>, ReconfigError> {
    if !w.is_subset(f.active) {
        return Err(ReconfigError::WOutsideActive);
    }
    for v in f.active.iter().filter(|&v| !w.contains(v)) {
        if chi.get(v) != tau.get(v) {
            return Err(ReconfigError::DisagreeOutsideW(v));
        }
        let c = chi.get(v);
        if c <= f.base || c > f.base + alpha as Color {
            return Err(ReconfigError::OutsideAlphaPalette {
                vertex: v,
                color: c,
            });
        }
    }
    let core = residual_core(f.h, beta, w);
    if !core.is_empty() {
        return Err(ReconfigError::ResidualCore { beta, core });
    }
    if w.is_empty() {
        return Ok(Vec::new());
    }
    let order = beta_core(f.h, beta, w)?.order;
    let spare_lo = f.base + alpha as Color + 1;
    let spare_hi = f.base + alpha as Color + beta as Color + 1;

    // `pending` holds v_{i+1}, …, v_r: vertices still at their `chi` color
    // whose edges the current level ignores.
    let mut pending = w.clone();
    let mut steps: Vec<RecolorStep> = Vec::new();
    if stats.detours_per_level.len() < order.len() {
        stats.detours_per_level.resize(order.len(), 0);
    }
    for (level, &v) in order.iter().enumerate() {
        pending.remove(v);
        let mut cur = chi.clone();
        let mut next = Vec::with_capacity(steps.len() + 1);
        let mut detours = 0usize;
        for s in &steps {
            if !free_for(f.h, &cur, &pending, s.vertex, s.new_color) {
                let held = cur.get(v);
                let spare = (spare_lo..=spare_hi)
                    .find(|&c| c != s.new_color && c != held && free_for(f.h, &cur, &pending, v, c))
                    .ok_or(ReconfigError::SpareColorExhausted(v))?;
                push(&mut next, &mut cur, v, spare);
                detours += 1;
                debug_assert!(free_for(f.h, &cur, &pending, s.vertex, s.new_color));
            }
            push(&mut next, &mut cur, s.vertex, s.new_color);
            if next.len() > f.opts.step_cap {
                return Err(ReconfigError::StepCapExceeded(f.opts.step_cap));
            }
        }
        if cur.get(v) != tau.get(v) {
            push(&mut next, &mut cur, v, tau.get(v));
        }
        if next.len() > f.opts.step_cap {
            return Err(ReconfigError::StepCapExceeded(f.opts.step_cap));
        }
        stats.detours_per_level[level] += detours;
        stats.core_detours += detours;
        steps = next;
    }
    stats.core_moves += steps.len();
    Ok(steps)
}

/// Path from `chi` to `tau` when they agree outside a coreless set `w`.
///
/// Outside `w` both colorings must use only colors `1..=alpha`, and
/// `q >= alpha + beta + 1`.
pub fn path_core(
    h: &Hypergraph,
    w: &VertexSet,
    chi: &Coloring,
    tau: &Coloring,
    alpha: usize,
    beta: usize,
    q: Color,
    opts: &ReconfigOptions,
) -> Result<RecolorPath, ReconfigError> {
    check_q(q, alpha, beta)?;
    check_colors(h, chi, q, "source")?;
    check_colors(h, tau, q, "target")?;
    let all = h.all_vertices();
    let frame = Frame {
        h,
        active: &all,
        base: 0,
        q,
        opts,
    };
    let mut stats = PathStats::default();
    let steps = core_bridge(frame, w, chi, tau, alpha, beta, &mut stats)?;
    Ok(RecolorPath {
        start: chi.clone(),
        steps,
        stats,
    })
}

/// Grows color classes into a maximally independent sequence, colors the
/// residual first-fit and bridges to the resulting good greedy coloring.
/// Returns the moves and the good greedy coloring reached.
fn to_good_greedy(
    f: Frame<'_>,
    chi: &Coloring,
    alpha: usize,
    beta: usize,
    stats: &mut PathStats,
) -> Result<(Vec<RecolorStep>, Coloring), ReconfigError> {
    let h = f.h;
    let mut residual = f.active.clone();
    let mut classes = Vec::with_capacity(alpha);
    for l in 1..=alpha as Color {
        let seed =
            VertexSet::from_vertices(h.n(), residual.iter().filter(|&v| chi.get(v) == f.base + l));
        let order = residual.to_vec();
        let grown = extend_with(h, &residual, &seed, order);
        residual.difference_with(&grown);
        classes.push(grown);
    }

    let mut cur = chi.clone();
    let mut steps = Vec::new();
    let mut recolors = vec![0u32; h.n() as usize + 1];
    for (l, class) in classes.iter().enumerate() {
        let color = f.base + l as Color + 1;
        for v in class.iter() {
            if cur.get(v) != color {
                debug_assert!(h.move_is_proper(cur.as_slice(), v, color, None));
                push(&mut steps, &mut cur, v, color);
                recolors[v as usize] += 1;
            }
        }
    }
    stats.inter_moves += steps.len();
    stats.max_inter_recolors = stats
        .max_inter_recolors
        .max(recolors.iter().copied().max().unwrap_or(0));

    let core = residual_core(h, beta, &residual);
    if !core.is_empty() {
        return Err(ReconfigError::NotColorableEvidence(ColorabilityWitness {
            sequence: MISequence {
                sets: classes,
                residual,
            },
            core_vertices: core,
        }));
    }
    let mut target = cur.clone();
    if !residual.is_empty() {
        let lo = f.base + alpha as Color + 1;
        let palette: Vec<Color> = (lo..lo + beta as Color + 1).collect();
        let partial = color_coreless(h, beta, &residual, &palette)?;
        for (v, c) in partial.assigned() {
            target.set(v, c);
        }
    }
    let bridge = core_bridge(f, &residual, &cur, &target, alpha, beta, stats)?;
    steps.extend(bridge);
    if steps.len() > f.opts.step_cap {
        return Err(ReconfigError::StepCapExceeded(f.opts.step_cap));
    }
    Ok((steps, target))
}

/// Path from any proper coloring to a good greedy coloring.
pub fn path_to_good_greedy(
    h: &Hypergraph,
    chi: &Coloring,
    q: Color,
    alpha: usize,
    beta: usize,
    opts: &ReconfigOptions,
) -> Result<(RecolorPath, Coloring), ReconfigError> {
    check_q(q, alpha, beta)?;
    check_colors(h, chi, q, "source")?;
    let all = h.all_vertices();
    let frame = Frame {
        h,
        active: &all,
        base: 0,
        q,
        opts,
    };
    let mut stats = PathStats::default();
    let (steps, tau) = to_good_greedy(frame, chi, alpha, beta, &mut stats)?;
    Ok((
        RecolorPath {
            start: chi.clone(),
            steps,
            stats,
        },
        tau,
    ))
}

fn between_good_greedy(
    f: Frame<'_>,
    chi: &Coloring,
    tau: &Coloring,
    alpha: usize,
    beta: usize,
    depth: usize,
    stats: &mut PathStats,
) -> Result<Vec<RecolorStep>, ReconfigError> {
    let h = f.h;
    stats.final_depth = stats.final_depth.max(depth);
    if f.active.iter().all(|v| chi.get(v) == tau.get(v)) {
        return Ok(Vec::new());
    }
    if alpha == 0 {
        return core_bridge(f, f.active, chi, tau, 0, beta, stats);
    }
    let first = f.base + 1;
    let source_class =
        VertexSet::from_vertices(h.n(), f.active.iter().filter(|&v| chi.get(v) == first));
    let target_class =
        VertexSet::from_vertices(h.n(), f.active.iter().filter(|&v| tau.get(v) == first));

    let mut cur = chi.clone();
    let mut steps = Vec::new();
    if source_class != target_class {
        let spare = (first..=f.q)
            .find(|&c| f.active.iter().all(|v| chi.get(v) != c))
            .ok_or(ReconfigError::NoUnusedColor)?;
        for v in source_class.iter() {
            push(&mut steps, &mut cur, v, spare);
        }
        for v in target_class.iter() {
            push(&mut steps, &mut cur, v, first);
        }
        stats.final_moves += steps.len();
    }

    let rest = f.active.difference(&target_class);
    let inner = Frame {
        active: &rest,
        base: first,
        ..f
    };
    let (to_greedy, greedy) = to_good_greedy(inner, &cur, alpha - 1, beta, stats)?;
    let onward = between_good_greedy(inner, &greedy, tau, alpha - 1, beta, depth + 1, stats)?;
    debug_assert!(to_greedy
        .iter()
        .chain(&onward)
        .all(|s| rest.contains(s.vertex) && s.new_color > first));
    steps.extend(to_greedy);
    steps.extend(onward);
    if steps.len() > f.opts.step_cap {
        return Err(ReconfigError::StepCapExceeded(f.opts.step_cap));
    }
    Ok(steps)
}

/// Path between two good greedy colorings.
pub fn path_between_good_greedy(
    h: &Hypergraph,
    chi: &Coloring,
    tau: &Coloring,
    q: Color,
    alpha: usize,
    beta: usize,
    opts: &ReconfigOptions,
) -> Result<RecolorPath, ReconfigError> {
    check_q(q, alpha, beta)?;
    check_colors(h, chi, q, "source")?;
    check_colors(h, tau, q, "target")?;
    let all = h.all_vertices();
    let frame = Frame {
        h,
        active: &all,
        base: 0,
        q,
        opts,
    };
    if !good_greedy_in(h, chi, &all, 0, alpha, beta) {
        return Err(ReconfigError::NotGoodGreedy { which: "source" });
    }
    if !good_greedy_in(h, tau, &all, 0, alpha, beta) {
        return Err(ReconfigError::NotGoodGreedy { which: "target" });
    }
    let mut stats = PathStats::default();
    let steps = between_good_greedy(frame, chi, tau, alpha, beta, 0, &mut stats)?;
    Ok(RecolorPath {
        start: chi.clone(),
        steps,
        stats,
    })
}

/// Path between any two proper colorings: each side to a good greedy
/// coloring, then between the two good greedy colorings.
pub fn connect(
    h: &Hypergraph,
    from: &Coloring,
    to: &Coloring,
    q: Color,
    alpha: usize,
    beta: usize,
    opts: &ReconfigOptions,
) -> Result<RecolorPath, ReconfigError> {
    check_q(q, alpha, beta)?;
    check_colors(h, from, q, "source")?;
    check_colors(h, to, q, "target")?;
    if from == to {
        return Ok(RecolorPath::empty(from.clone()));
    }
    let (head, tau_from) = path_to_good_greedy(h, from, q, alpha, beta, opts)?;
    let (tail, tau_to) = path_to_good_greedy(h, to, q, alpha, beta, opts)?;
    let middle = path_between_good_greedy(h, &tau_from, &tau_to, q, alpha, beta, opts)?;
    let tail = tail.reversed();

    let mut stats = head.stats.clone();
    stats.absorb(&middle.stats);
    stats.absorb(&tail.stats);
    let mut steps = head.steps;
    steps.extend(middle.steps);
    steps.extend(tail.steps);
    if steps.len() > opts.step_cap {
        return Err(ReconfigError::StepCapExceeded(opts.step_cap));
    }
    Ok(RecolorPath {
        start: from.clone(),
        steps,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(c: &[Color]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    fn opts() -> ReconfigOptions {
        ReconfigOptions::default()
    }

    #[test]
    fn verify_examples() {
        let h = Hypergraph::build(2, 2, [[1, 2]]).unwrap();
        let p = RecolorPath::empty(col(&[1, 2]));
        assert!(verify_path(&h, &p, 2).is_valid());
        let noop = RecolorPath {
            start: col(&[1, 2]),
            steps: vec![RecolorStep {
                vertex: 1,
                new_color: 1,
            }],
            stats: PathStats::default(),
        };
        assert_eq!(
            verify_path(&h, &noop, 3),
            PathVerdict::Invalid {
                index: Some(0),
                violation: Violation::NoOpStep { vertex: 1 }
            }
        );
        let clash = RecolorPath {
            start: col(&[1, 2]),
            steps: vec![RecolorStep {
                vertex: 1,
                new_color: 2,
            }],
            stats: PathStats::default(),
        };
        assert!(matches!(
            verify_path(&h, &clash, 3),
            PathVerdict::Invalid {
                index: Some(0),
                violation: Violation::Improper { .. }
            }
        ));
        let range = RecolorPath {
            start: col(&[1, 2]),
            steps: vec![RecolorStep {
                vertex: 1,
                new_color: 4,
            }],
            stats: PathStats::default(),
        };
        assert!(matches!(
            verify_path(&h, &range, 3),
            PathVerdict::Invalid {
                violation: Violation::ColorOutOfRange { .. },
                ..
            }
        ));
    }

    #[test]
    fn core_path_on_single_edge() {
        let h = Hypergraph::build(2, 2, [[1, 2]]).unwrap();
        let p = path_core(
            &h,
            &h.all_vertices(),
            &col(&[1, 2]),
            &col(&[2, 1]),
            0,
            2,
            3,
            &opts(),
        )
        .unwrap();
        assert_eq!(
            p.steps,
            vec![
                RecolorStep {
                    vertex: 1,
                    new_color: 3
                },
                RecolorStep {
                    vertex: 2,
                    new_color: 1
                },
                RecolorStep {
                    vertex: 1,
                    new_color: 2
                },
            ]
        );
        assert!(verify_path(&h, &p, 3).is_valid());
    }

    #[test]
    fn core_path_trivial_and_path_graph() {
        let h = Hypergraph::build(3, 2, [[1, 2], [2, 3]]).unwrap();
        let c = col(&[1, 2, 1]);
        let p = path_core(&h, &VertexSet::empty(3), &c, &c, 2, 1, 4, &opts()).unwrap();
        assert!(p.is_empty());
        let t = col(&[2, 1, 2]);
        let p = path_core(&h, &h.all_vertices(), &c, &t, 0, 2, 3, &opts()).unwrap();
        assert!(verify_path(&h, &p, 3).is_valid());
        assert_eq!(p.end(), t);
    }

    #[test]
    fn core_path_rejects_bad_preconditions() {
        let t = Hypergraph::build(3, 2, [[1, 2], [2, 3], [1, 3]]).unwrap();
        let err = path_core(
            &t,
            &t.all_vertices(),
            &col(&[1, 2, 3]),
            &col(&[2, 3, 1]),
            0,
            2,
            3,
            &opts(),
        );
        assert!(matches!(err, Err(ReconfigError::ResidualCore { .. })));
        let err = path_core(
            &t,
            &t.all_vertices(),
            &col(&[1, 2, 3]),
            &col(&[2, 3, 1]),
            0,
            2,
            2,
            &opts(),
        );
        assert!(matches!(err, Err(ReconfigError::TooFewColors { .. })));
        let w = VertexSet::from_vertices(3, [3]);
        let err = path_core(&t, &w, &col(&[1, 2, 3]), &col(&[2, 1, 3]), 2, 1, 4, &opts());
        assert_eq!(err, Err(ReconfigError::DisagreeOutsideW(1)));
        let err = path_core(&t, &w, &col(&[1, 3, 2]), &col(&[1, 3, 4]), 2, 1, 4, &opts());
        assert!(matches!(
            err,
            Err(ReconfigError::OutsideAlphaPalette { vertex: 2, .. })
        ));
    }

    #[test]
    fn step_cap_is_enforced() {
        let h = Hypergraph::build(2, 2, [[1, 2]]).unwrap();
        let small = ReconfigOptions { step_cap: 2 };
        let err = path_core(
            &h,
            &h.all_vertices(),
            &col(&[1, 2]),
            &col(&[2, 1]),
            0,
            2,
            3,
            &small,
        );
        assert_eq!(err, Err(ReconfigError::StepCapExceeded(2)));
    }

    #[test]
    fn good_greedy_on_triangle() {
        let t = Hypergraph::build(3, 2, [[1, 2], [2, 3], [1, 3]]).unwrap();
        let (p, tau) = path_to_good_greedy(&t, &col(&[1, 2, 3]), 4, 2, 1, &opts()).unwrap();
        assert!(verify_path(&t, &p, 4).is_valid());
        assert_eq!(p.end(), tau);
        assert!(crate::check_good_greedy(&t, &tau, 2, 1));

        let err = path_to_good_greedy(&t, &col(&[1, 2, 3]), 3, 1, 1, &opts());
        assert!(matches!(err, Err(ReconfigError::NotColorableEvidence(_))));
    }

    #[test]
    fn already_good_greedy_needs_no_moves() {
        let t = Hypergraph::build(3, 2, [[1, 2], [2, 3], [1, 3]]).unwrap();
        let (p, tau) = path_to_good_greedy(&t, &col(&[1, 2, 3]), 4, 2, 1, &opts()).unwrap();
        assert_eq!(tau, col(&[1, 2, 3]));
        assert!(p.is_empty());
    }

    #[test]
    fn between_good_greedy_on_triangle() {
        let t = Hypergraph::build(3, 2, [[1, 2], [2, 3], [1, 3]]).unwrap();
        let a = col(&[1, 2, 3]);
        let b = col(&[2, 1, 3]);
        let p = path_between_good_greedy(&t, &a, &b, 4, 2, 1, &opts()).unwrap();
        assert!(verify_path(&t, &p, 4).is_valid());
        assert_eq!(p.end(), b);
        assert!(path_between_good_greedy(&t, &a, &a, 4, 2, 1, &opts())
            .unwrap()
            .is_empty());
        assert!(matches!(
            path_between_good_greedy(&t, &a, &col(&[2, 3, 4]), 4, 2, 1, &opts()),
            Err(ReconfigError::NotGoodGreedy { which: "target" })
        ));
    }

    #[test]
    fn connect_single_edge() {
        let h = Hypergraph::build(2, 2, [[1, 2]]).unwrap();
        let a = col(&[1, 2]);
        let b = col(&[2, 1]);
        let p = connect(&h, &a, &b, 3, 0, 2, &opts()).unwrap();
        assert!(verify_path(&h, &p, 3).is_valid());
        assert_eq!(p.end(), b);
        assert!(p.len() >= 3);
        assert!(connect(&h, &a, &a, 3, 0, 2, &opts()).unwrap().is_empty());
    }

    #[test]
    fn reversed_path_walks_back() {
        let h = Hypergraph::build(2, 2, [[1, 2]]).unwrap();
        let p = path_core(
            &h,
            &h.all_vertices(),
            &col(&[1, 2]),
            &col(&[2, 1]),
            0,
            2,
            3,
            &opts(),
        )
        .unwrap();
        let r = p.reversed();
        assert_eq!(r.start, col(&[2, 1]));
        assert_eq!(r.end(), col(&[1, 2]));
        assert!(verify_path(&h, &r, 3).is_valid());
    }
}
