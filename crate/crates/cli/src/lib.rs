//! File formats and the Monte-Carlo driver behind the `recolor` binary.

pub mod io;
pub mod montecarlo;
