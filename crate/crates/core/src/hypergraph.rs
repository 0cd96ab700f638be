//! k-uniform hypergraphs, colorings and the two random models.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index;
use rand::Rng as _;
use rand_distr::{Binomial, Distribution};
use thiserror::Error;

use crate::rng::{self, Rng};
use crate::{Color, Vertex, VertexSet};

/// Above this many candidate k-sets `H(n,p;k)` stops testing each one
/// individually and samples the edge count instead.
pub const HNP_ENUMERATION_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypergraphError {
    #[error("uniformity k={k} must satisfy 2 <= k <= n={n}")]
    BadUniformity { n: u32, k: u32 },
    #[error("edge {index} has {found} vertices, expected {k}")]
    WrongArity { index: usize, found: usize, k: u32 },
    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: Vertex },
    #[error("edge {index} mentions vertex {vertex} outside 1..={n}")]
    VertexOutOfRange {
        index: usize,
        vertex: Vertex,
        n: u32,
    },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
    #[error("requested {m} edges but only C(n,k)={available} k-sets exist")]
    TooManyEdges { m: u64, available: u128 },
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("coloring has length {found}, expected {n}")]
    LengthMismatch { found: usize, n: usize },
    #[error("color 0 at vertex {vertex}; colors start at 1")]
    ZeroColor { vertex: Vertex },
}

/// `C(n, k)`, or `None` when it does not fit in a `u128`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// A k-uniform hypergraph on vertices `1..=n`.
///
/// Edges are stored sorted within themselves and in lexicographic order, so
/// two hypergraphs with the same edge set compare equal and serialize
/// identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    k: u32,
    /// Flat edge storage, `k` vertices per edge.
    edges: Vec<Vertex>,
    /// `incidence[v - 1]` lists the indices of the edges containing `v`.
    incidence: Vec<Vec<u32>>,
}

impl Hypergraph {
    /// Validates and indexes an edge list. Edges may be given in any order
    /// and with vertices unsorted.
    pub fn build<I, E>(n: u32, k: u32, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if k < 2 || k > n {
            return Err(HypergraphError::BadUniformity { n, k });
        }
        let mut list: Vec<(Vec<Vertex>, usize)> = Vec::new();
        for (index, e) in edges.into_iter().enumerate() {
            let e = e.as_ref();
            if e.len() != k as usize {
                return Err(HypergraphError::WrongArity {
                    index,
                    found: e.len(),
                    k,
                });
            }
            if let Some(&vertex) = e.iter().find(|&&v| v == 0 || v > n) {
                return Err(HypergraphError::VertexOutOfRange { index, vertex, n });
            }
            let mut sorted = e.to_vec();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex {
                    index,
                    vertex: w[0],
                });
            }
            list.push((sorted, index));
        }
        list.sort();
        if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(HypergraphError::DuplicateEdge {
                index: w[0].1.max(w[1].1),
            });
        }
        Ok(Self::from_canonical(
            n,
            k,
            list.into_iter().flat_map(|(e, _)| e).collect(),
        ))
    }

    /// `edges` must already be canonical: sorted within each edge, sorted
    /// lexicographically and free of duplicates.
    fn from_canonical(n: u32, k: u32, edges: Vec<Vertex>) -> Self {
        let mut incidence = vec![Vec::new(); n as usize];
        for (i, e) in edges.chunks_exact(k as usize).enumerate() {
            for &v in e {
                incidence[(v - 1) as usize].push(i as u32);
            }
        }
        Hypergraph {
            n,
            k,
            edges,
            incidence,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len() / self.k as usize
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        let k = self.k as usize;
        &self.edges[i * k..(i + 1) * k]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[Vertex]> + '_ {
        self.edges.chunks_exact(self.k as usize)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// Indices of the edges containing `v`.
    pub fn incident(&self, v: Vertex) -> &[u32] {
        &self.incidence[(v - 1) as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident(v).len()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// True when every vertex of edge `i` lies in `set`.
    pub fn edge_inside(&self, i: usize, set: &VertexSet) -> bool {
        self.edge(i).iter().all(|&u| set.contains(u))
    }

    /// Number of edges containing `v` that lie entirely inside `set`.
    pub fn degree_inside(&self, v: Vertex, set: &VertexSet) -> usize {
        self.incident(v)
            .iter()
            .filter(|&&e| self.edge_inside(e as usize, set))
            .count()
    }

    /// Number of edges lying entirely inside `set`.
    pub fn edges_inside(&self, set: &VertexSet) -> usize {
        (0..self.m()).filter(|&i| self.edge_inside(i, set)).count()
    }

    /// No edge lies entirely inside `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            self.incident(v)
                .iter()
                .all(|&e| !self.edge_inside(e as usize, set))
        })
    }

    /// No edge is monochromatic under `coloring`.
    pub fn is_proper(&self, coloring: &Coloring) -> Result<bool, HypergraphError> {
        self.check_len(coloring.len())?;
        Ok(self
            .edges()
            .all(|e| !is_monochromatic(e, coloring.as_slice())))
    }

    /// First monochromatic edge, if any.
    pub fn first_monochromatic(&self, coloring: &Coloring) -> Option<usize> {
        self.edges()
            .position(|e| is_monochromatic(e, coloring.as_slice()))
    }

    /// Whether setting `v` to `color` leaves every edge through `v`
    /// non-monochromatic, looking only at edges inside `scope`.
    pub fn move_is_proper(
        &self,
        colors: &[Color],
        v: Vertex,
        color: Color,
        scope: Option<&VertexSet>,
    ) -> bool {
        self.incident(v).iter().all(|&e| {
            let e = self.edge(e as usize);
            if let Some(s) = scope {
                if !e.iter().all(|&u| s.contains(u)) {
                    return true;
                }
            }
            e.iter()
                .any(|&u| u != v && colors[(u - 1) as usize] != color)
        })
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<(), HypergraphError> {
        if len != self.n as usize {
            return Err(HypergraphError::LengthMismatch {
                found: len,
                n: self.n as usize,
            });
        }
        Ok(())
    }
}

fn is_monochromatic(e: &[Vertex], colors: &[Color]) -> bool {
    let c = colors[(e[0] - 1) as usize];
    e[1..].iter().all(|&u| colors[(u - 1) as usize] == c)
}

/// A complete assignment of colors `>= 1` to vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self, HypergraphError> {
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(HypergraphError::ZeroColor {
                vertex: i as Vertex + 1,
            });
        }
        Ok(Coloring(colors))
    }

    /// Every vertex gets `color`.
    pub fn constant(n: u32, color: Color) -> Self {
        assert!(color >= 1);
        Coloring(vec![color; n as usize])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> Color {
        self.0[(v - 1) as usize]
    }

    #[inline]
    pub fn set(&mut self, v: Vertex, c: Color) {
        assert!(c >= 1);
        self.0[(v - 1) as usize] = c;
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.0
    }

    pub fn max_color(&self) -> Color {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Vertices with color `c`.
    pub fn class(&self, c: Color) -> VertexSet {
        VertexSet::from_vertices(
            self.0.len() as u32,
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == c)
                .map(|(i, _)| i as Vertex + 1),
        )
    }
}

/// Number of vertices on which the two colorings disagree.
pub fn hamming(a: &Coloring, b: &Coloring) -> Result<usize, HypergraphError> {
    if a.len() != b.len() {
        return Err(HypergraphError::LengthMismatch {
            found: b.len(),
            n: a.len(),
        });
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

/// Colors for a subset of the vertices; `None` means uncolored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring(Vec<Color>);

impl PartialColoring {
    pub fn uncolored(n: u32) -> Self {
        PartialColoring(vec![0; n as usize])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        match self.0[(v - 1) as usize] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        assert!(c >= 1);
        self.0[(v - 1) as usize] = c;
    }

    pub fn clear(&mut self, v: Vertex) {
        self.0[(v - 1) as usize] = 0;
    }

    /// Colored vertices with their colors, by increasing vertex.
    pub fn assigned(&self) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i as Vertex + 1, c))
    }
}

impl From<&Coloring> for PartialColoring {
    fn from(c: &Coloring) -> Self {
        PartialColoring(c.0.clone())
    }
}

/// Calls `f` on every k-subset of `1..=n` in lexicographic order.
pub(crate) fn for_each_k_subset<F: FnMut(&[Vertex])>(n: u32, k: u32, mut f: F) {
    let k = k as usize;
    if k == 0 || k > n as usize {
        return;
    }
    let mut cur: Vec<Vertex> = (1..=k as u32).collect();
    loop {
        f(&cur);
        let mut i = k;
        while i > 0 && cur[i - 1] == n - (k - i) as u32 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn check_model(n: u32, k: u32) -> Result<u128, HypergraphError> {
    if k < 2 || k > n {
        return Err(HypergraphError::BadUniformity { n, k });
    }
    Ok(binomial(n as u64, k as u64).unwrap_or(u128::MAX))
}

fn sample_exact(n: u32, k: u32, m: u64, available: u128, rng: &mut Rng) -> Hypergraph {
    // Dense requests would spend most draws on rejections; pick among the
    // enumerated k-sets instead.
    if available <= 1 << 22 && (m as u128) * 4 >= available {
        let mut all: Vec<Vertex> = Vec::with_capacity(available as usize * k as usize);
        for_each_k_subset(n, k, |e| all.extend_from_slice(e));
        let mut picked = index::sample(rng, available as usize, m as usize).into_vec();
        picked.sort_unstable();
        let ku = k as usize;
        let edges = picked
            .into_iter()
            .flat_map(|i| all[i * ku..(i + 1) * ku].iter().copied())
            .collect();
        return Hypergraph::from_canonical(n, k, edges);
    }
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    while (seen.len() as u64) < m {
        let mut e: Vec<Vertex> = index::sample(rng, n as usize, k as usize)
            .into_iter()
            .map(|i| i as Vertex + 1)
            .collect();
        e.sort_unstable();
        seen.insert(e);
    }
    Hypergraph::from_canonical(n, k, seen.into_iter().flatten().collect())
}

/// `H(n,m;k)`: exactly `m` distinct k-sets chosen uniformly at random.
pub fn generate_hnm(n: u32, m: u64, k: u32, seed: u64) -> Result<Hypergraph, HypergraphError> {
    let available = check_model(n, k)?;
    if m as u128 > available {
        return Err(HypergraphError::TooManyEdges { m, available });
    }
    let mut rng = rng::from_seed(seed);
    Ok(sample_exact(n, k, m, available, &mut rng))
}

/// `H(n,p;k)`: every k-set is an edge independently with probability `p`.
pub fn generate_hnp(n: u32, p: f64, k: u32, seed: u64) -> Result<Hypergraph, HypergraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(HypergraphError::BadProbability(p));
    }
    let available = check_model(n, k)?;
    let mut rng = rng::from_seed(seed);
    if available <= HNP_ENUMERATION_LIMIT {
        let mut edges = Vec::new();
        for_each_k_subset(n, k, |e| {
            if rng.random::<f64>() < p {
                edges.extend_from_slice(e);
            }
        });
        return Ok(Hypergraph::from_canonical(n, k, edges));
    }
    let trials = u64::try_from(available).unwrap_or(u64::MAX);
    let m = Binomial::new(trials, p)
        .map_err(|_| HypergraphError::BadProbability(p))?
        .sample(&mut rng);
    Ok(sample_exact(n, k, m, available, &mut rng))
}
