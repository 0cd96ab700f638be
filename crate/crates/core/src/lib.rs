//! Reconfiguration machinery for proper colorings of k-uniform hypergraphs.
//!
//! The crate is `no_std` (with `alloc`) and covers:
//!
//! - [`hypergraph`]: the hypergraph and coloring model plus the `H(n,m;k)` and
//!   `H(n,p;k)` random generators;
//! - [`core_peel`]: β-core peeling, certified peeling orders and first-fit
//!   coloring of coreless hypergraphs via blocked colors;
//! - [`independence`]: maximal independent sets, maximally independent
//!   sequences, good greedy colorings and (α,β)-colorability checks;
//! - [`reconfig`]: explicit single-vertex recoloring paths between proper
//!   colorings, together with a path verifier;
//! - [`gamma_oracle`]: brute-force enumeration of the recoloring graph for
//!   tiny instances;
//! - [`experiments`]: the (α, β) parameter calculator and exact/heuristic
//!   probes of the random-hypergraph structural bounds.
//!
//! Vertices are `1..=n` and colors are `1..=q` throughout.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod core_peel;
pub mod experiments;
pub mod gamma_oracle;
pub mod hypergraph;
pub mod independence;
pub mod reconfig;
pub mod rng;
pub mod sampling;
mod vertex_set;

pub use core_peel::{beta_core, blocked_colors, color_coreless, PeelError, PeelResult};
pub use experiments::{
    montecarlo_colorability, params_from_d, run_trial, EdgeSpec, MonteCarloConfig, ParamSet,
    TrialRecord,
};
pub use gamma_oracle::{
    enumerate_proper, gamma_distance, gamma_stats, GammaOptions, GammaStats, OracleError,
    ProperColorings,
};
pub use hypergraph::{
    generate_hnm, generate_hnp, hamming, Coloring, Hypergraph, HypergraphError, PartialColoring,
};
pub use independence::{
    check_good_greedy, extend_to_mis, falsify_alpha_beta, greedy_sequence,
    is_alpha_beta_colorable_exact, max_independent_set_exact, Colorability, ColorabilityWitness,
    IndependenceError, MISequence, Strategy,
};
pub use reconfig::{
    connect, path_between_good_greedy, path_core, path_to_good_greedy, verify_path, PathStats,
    PathVerdict, RecolorPath, RecolorStep, ReconfigError, ReconfigOptions,
};
pub use vertex_set::VertexSet;

/// Vertex identifier, `1..=n`.
pub type Vertex = u32;

/// Color identifier, `1..=q`.
pub type Color = u32;
