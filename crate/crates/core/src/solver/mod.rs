//! Exact maximum-product search over cross-`t`-intersecting subfamilies,
//! the cross-star property hierarchy, and checks of the product bound.

mod engine;
mod instance;
mod pair;
mod probe;
mod properties;
mod tuple;
mod verify;

use std::time::Duration;

use serde::Serialize;

use crate::count::Count;

pub use instance::{build_instance, BicliqueInstance};
pub use pair::max_product_pair;
pub use probe::{chi_probe, Corpus, CorpusEntry, ProbeInstance, ProbeReport};
pub use properties::{
    classify_properties, conjugate_star_set, is_cross_t_intersecting, PropertyReport, Verdict,
    VerdictStatus,
};
pub use tuple::max_product_tuple;
pub use verify::{verify_main_theorem, Status, UniquenessCheck, VerificationReport};

/// Budgets for a search. Exceeding either budget ends the search with
/// `optimal = false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub time_budget: Duration,
    /// Worker threads for the pair search.
    pub parallelism: usize,
    /// Maximum number of witnesses kept; the total is always counted.
    pub witness_cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: 1_000_000_000,
            time_budget: Duration::from_secs(600),
            parallelism: 1,
            witness_cap: 1000,
        }
    }
}

impl SearchLimits {
    pub fn with_parallelism(mut self, workers: usize) -> Self {
        self.parallelism = workers.max(1);
        self
    }

    pub fn with_witness_cap(mut self, cap: usize) -> Self {
        self.witness_cap = cap;
        self
    }

    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes.max(1);
        self
    }
}

/// One extremal tuple: for each family, the indices of the chosen members.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Witness {
    pub parts: Vec<Vec<usize>>,
}

impl Witness {
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn product(&self) -> Count {
        self.parts.iter().map(|p| p.len() as Count).product()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes_explored: u64,
    pub elapsed_us: u64,
}

/// Outcome of a maximum-product search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    #[serde(with = "crate::count::decimal")]
    pub best_product: Count,
    /// Closed extremal tuples in canonical order, at most `witness_cap` of
    /// them. Empty when `best_product` is zero.
    pub witnesses: Vec<Witness>,
    /// Total number of closed extremal tuples, including any beyond the cap.
    pub witness_count: u64,
    pub optimal: bool,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn witnesses_complete(&self) -> bool {
        self.witnesses.len() as u64 == self.witness_count
    }
}
