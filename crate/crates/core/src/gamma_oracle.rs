//! Brute-force ground truth for tiny instances: all proper colorings and the
//! Hamming-1 graph on them.
//!
//! Colorings are encoded as mixed-radix integers with vertex 1 as the most
//! significant digit, so lexicographic enumeration yields sorted codes and
//! membership is a binary search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::hypergraph::{Coloring, Hypergraph};
use crate::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("q^n = {q}^{n} exceeds the enumeration budget of {budget}")]
    BudgetExceeded { q: Color, n: u32, budget: u64 },
    #[error("q must be at least 1")]
    ZeroColors,
    #[error("{which} coloring is not a proper coloring with colors in 1..=q")]
    NotInSpace { which: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaOptions {
    /// Upper bound on `q^n`.
    pub space_budget: u64,
    /// The diameter is computed only when `size^2` of the largest component
    /// stays within this many BFS vertex visits.
    pub diameter_budget: u64,
}

impl Default for GammaOptions {
    fn default() -> Self {
        GammaOptions {
            space_budget: 10_000_000,
            diameter_budget: 400_000_000,
        }
    }
}

/// Every proper coloring of `H` with colors `1..=q`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct ProperColorings {
    n: u32,
    q: Color,
    codes: Vec<u64>,
}

impl ProperColorings {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn decode(&self, code: u64) -> Coloring {
        let mut colors = vec![0; self.n as usize];
        let mut c = code;
        for slot in colors.iter_mut().rev() {
            *slot = (c % self.q as u64) as Color + 1;
            c /= self.q as u64;
        }
        Coloring::new(colors).expect("decoded colors are positive")
    }

    pub fn encode(&self, coloring: &Coloring) -> u64 {
        coloring
            .as_slice()
            .iter()
            .fold(0u64, |acc, &c| acc * self.q as u64 + (c - 1) as u64)
    }

    /// Position of `coloring` in the enumeration, if it is proper.
    pub fn index_of(&self, coloring: &Coloring) -> Option<usize> {
        if coloring.len() != self.n as usize || coloring.as_slice().iter().any(|&c| c > self.q) {
            return None;
        }
        self.codes.binary_search(&self.encode(coloring)).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Coloring> + '_ {
        self.codes.iter().map(|&c| self.decode(c))
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }
}

fn space_size(n: u32, q: Color) -> Option<u64> {
    (q as u64).checked_pow(n)
}

/// Enumerates proper colorings by backtracking over vertices `1..=n`,
/// checking each edge once its largest vertex is assigned.
pub fn enumerate_proper(
    h: &Hypergraph,
    q: Color,
    budget: u64,
) -> Result<ProperColorings, OracleError> {
    if q == 0 {
        return Err(OracleError::ZeroColors);
    }
    match space_size(h.n(), q) {
        Some(s) if s <= budget => {}
        _ => {
            return Err(OracleError::BudgetExceeded {
                q,
                n: h.n(),
                budget,
            })
        }
    }
    let n = h.n() as usize;
    // Edges whose largest vertex is v, indexed by v - 1.
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in h.edges().enumerate() {
        closing[(e[e.len() - 1] - 1) as usize].push(i);
    }
    let mut colors = vec![0 as Color; n];
    let mut codes = Vec::new();
    let mut depth = 0usize;
    loop {
        colors[depth] += 1;
        if colors[depth] > q {
            colors[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        let ok = closing[depth].iter().all(|&i| {
            let e = h.edge(i);
            let c = colors[(e[0] - 1) as usize];
            e.iter().any(|&u| colors[(u - 1) as usize] != c)
        });
        if !ok {
            continue;
        }
        if depth + 1 == n {
            codes.push(
                colors
                    .iter()
                    .fold(0u64, |a, &c| a * q as u64 + (c - 1) as u64),
            );
        } else {
            depth += 1;
        }
    }
    Ok(ProperColorings { n: h.n(), q, codes })
}

/// Summary of the reconfiguration graph on proper q-colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaStats {
    pub num_colorings: usize,
    pub num_components: usize,
    /// Component sizes, largest first.
    pub component_sizes: Vec<usize>,
    /// Largest eccentricity inside the largest component; `None` when there
    /// are no colorings or the diameter budget was exceeded.
    pub diameter: Option<usize>,
    /// At most one component; an instance with no proper colorings counts.
    pub connected: bool,
}

/// Upper bound on cached neighbor entries (`colorings * n * (q-1)`).
const ADJACENCY_CACHE_LIMIT: u64 = 1 << 26;

/// Largest `q^n` for which codes are ranked through a dense table instead of
/// binary search.
const DENSE_RANK_LIMIT: u64 = 1 << 24;

/// The recoloring graph, with neighbor lists cached when they fit.
struct Gamma<'a> {
    all: &'a ProperColorings,
    /// `rank[code]` is the index of `code` in `all`, `u32::MAX` if improper.
    rank: Vec<u32>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl<'a> Gamma<'a> {
    fn new(all: &'a ProperColorings) -> Self {
        let mut g = Gamma {
            all,
            rank: Vec::new(),
            offsets: Vec::new(),
            targets: Vec::new(),
        };
        if let Some(size) = space_size(all.n, all.q).filter(|&s| s <= DENSE_RANK_LIMIT) {
            g.rank = vec![u32::MAX; size as usize];
            for (i, &c) in all.codes.iter().enumerate() {
                g.rank[c as usize] = i as u32;
            }
        }
        g
    }

    /// Caches every neighbor list if the total stays under the limit.
    fn cache(&mut self) {
        let all = self.all;
        let bound = (all.len() as u64)
            .saturating_mul(all.n as u64)
            .saturating_mul(all.q.saturating_sub(1) as u64);
        if !self.offsets.is_empty() || bound > ADJACENCY_CACHE_LIMIT {
            return;
        }
        let mut nb = Vec::new();
        let mut offsets = Vec::with_capacity(all.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for i in 0..all.len() {
            self.compute(i, &mut nb);
            targets.extend(nb.iter().map(|&j| j as u32));
            offsets.push(targets.len() as u32);
        }
        self.offsets = offsets;
        self.targets = targets;
    }

    fn index_of_code(&self, code: u64) -> Option<usize> {
        if self.rank.is_empty() {
            self.all.codes.binary_search(&code).ok()
        } else {
            let r = self.rank[code as usize];
            (r != u32::MAX).then_some(r as usize)
        }
    }

    /// Hamming-1 neighbors of coloring `idx`, as indices into `all`.
    fn compute(&self, idx: usize, out: &mut Vec<usize>) {
        out.clear();
        let q = self.all.q as u64;
        let code = self.all.codes[idx];
        let mut rest = code;
        let mut weight = 1u64;
        for _ in 0..self.all.n {
            let old = rest % q;
            rest /= q;
            let base = code - old * weight;
            for c in 0..q {
                // A recolored code is listed exactly when the move is proper.
                if c != old {
                    if let Some(j) = self.index_of_code(base + c * weight) {
                        out.push(j);
                    }
                }
            }
            weight *= q;
        }
    }

    fn neighbors(&self, i: usize, out: &mut Vec<usize>) {
        if self.offsets.is_empty() {
            self.compute(i, out);
        } else {
            out.clear();
            let (a, b) = (self.offsets[i] as usize, self.offsets[i + 1] as usize);
            out.extend(self.targets[a..b].iter().map(|&j| j as usize));
        }
    }

    /// Eccentricity of `source`; `dist` is scratch space.
    fn bfs(&self, source: usize, dist: &mut [u32]) -> usize {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        let mut queue = VecDeque::new();
        let mut nb = Vec::new();
        dist[source] = 0;
        queue.push_back(source);
        let mut far = 0u32;
        while let Some(i) = queue.pop_front() {
            far = far.max(dist[i]);
            self.neighbors(i, &mut nb);
            for &j in &nb {
                if dist[j] == u32::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        far as usize
    }
}

pub fn gamma_stats(
    h: &Hypergraph,
    q: Color,
    opts: &GammaOptions,
) -> Result<GammaStats, OracleError> {
    let all = enumerate_proper(h, q, opts.space_budget)?;
    let mut g = Gamma::new(&all);
    let total = all.len();
    let mut comp = vec![usize::MAX; total];
    let mut sizes = Vec::new();
    let mut nb = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..total {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut size = 0usize;
        comp[s] = id;
        queue.push_back(s);
        while let Some(i) = queue.pop_front() {
            size += 1;
            g.neighbors(i, &mut nb);
            for &j in &nb {
                if comp[j] == usize::MAX {
                    comp[j] = id;
                    queue.push_back(j);
                }
            }
        }
        sizes.push(size);
    }

    let diameter = match sizes
        .iter()
        .enumerate()
        .max_by_key(|&(i, &s)| (s, core::cmp::Reverse(i)))
    {
        Some((largest, &size))
            if (size as u64).saturating_mul(size as u64) <= opts.diameter_budget =>
        {
            g.cache();
            let mut dist = vec![u32::MAX; total];
            let members: Vec<usize> = (0..total).filter(|&i| comp[i] == largest).collect();
            Some(
                members
                    .iter()
                    .map(|&s| g.bfs(s, &mut dist))
                    .max()
                    .unwrap_or(0),
            )
        }
        _ => None,
    };

    let num_components = sizes.len();
    let mut component_sizes = sizes;
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(GammaStats {
        num_colorings: total,
        num_components,
        component_sizes,
        diameter,
        connected: num_components <= 1,
    })
}

/// Shortest-path distance between two proper colorings, `None` if they lie
/// in different components.
pub fn gamma_distance(
    h: &Hypergraph,
    q: Color,
    from: &Coloring,
    to: &Coloring,
    budget: u64,
) -> Result<Option<usize>, OracleError> {
    let all = enumerate_proper(h, q, budget)?;
    let s = all
        .index_of(from)
        .ok_or(OracleError::NotInSpace { which: "source" })?;
    let t = all
        .index_of(to)
        .ok_or(OracleError::NotInSpace { which: "target" })?;
    let mut dist = vec![u32::MAX; all.len()];
    Gamma::new(&all).bfs(s, &mut dist);
    Ok((dist[t] != u32::MAX).then_some(dist[t] as usize))
}

/// Hamming-1 neighbors of `coloring` that are proper, for symmetry checks.
pub fn neighbor_colorings(h: &Hypergraph, q: Color, coloring: &Coloring) -> Vec<Coloring> {
    let mut out = Vec::new();
    for v in h.vertices() {
        for c in 1..=q {
            if c != coloring.get(v) && h.move_is_proper(coloring.as_slice(), v, c, None) {
                let mut next = coloring.clone();
                next.set(v, c);
                out.push(next);
            }
        }
    }
    out
}
