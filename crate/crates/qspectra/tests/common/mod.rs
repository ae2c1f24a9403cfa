//! Shared fixtures for the integration suites: memoized exhaustive
//! enumerations per order and small structural helpers.

#![allow(dead_code)]

use qspectra::{Enumerator, Graph};
use std::sync::OnceLock;

const ORDERS: usize = 9;
static POOLS: [OnceLock<Vec<Graph>>; ORDERS] = [const { OnceLock::new() }; ORDERS];

/// All isomorphism classes of order `n` (`n <= 8`), enumerated once per
/// process.
pub fn all_graphs(n: usize) -> &'static [Graph] {
    POOLS[n].get_or_init(|| Enumerator::new(n).unwrap().collect())
}

pub fn connected(g: &Graph) -> bool {
    g.is_connected()
}

pub fn bipartite(g: &Graph) -> bool {
    let p = g.profile();
    p.bipartite_components == p.components
}

/// Every component a path: acyclic with maximum degree at most two.
pub fn all_components_paths(g: &Graph) -> bool {
    g.profile().m + g.profile().components == g.order()
        && (0..g.order()).all(|v| g.degree(v) <= 2)
}
