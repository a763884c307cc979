//! Inputs shared by the benchmarks.

use pcg_core::{fixtures, PeriodicColoring};

/// Fixtures of increasing cell size.
pub fn sample_colorings() -> Vec<(&'static str, PeriodicColoring)> {
    ["II-base", "8-150-2", "e", "b"]
        .into_iter()
        .map(|id| (id, fixtures::get(id).expect("known fixture")))
        .collect()
}
