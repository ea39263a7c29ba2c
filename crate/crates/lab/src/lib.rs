//! Catalog, invariant reports and theorem-verification suites on top of
//! `knotlab-core`.

pub mod catalog;
pub mod input;
pub mod report;
pub mod suites;

use knotlab_core::bracket::DEFAULT_STATE_CAP;
use knotlab_core::skein::SkeinConfig;

/// Work limits: crossings for the bracket state sum, nodes for the skein tree.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub state_cap: usize,
    pub skein: SkeinConfig,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { state_cap: DEFAULT_STATE_CAP, skein: SkeinConfig::default() }
    }
}
