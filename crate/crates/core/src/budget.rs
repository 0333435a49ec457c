//! Size budgets shared by the construction and enumeration routines.
//!
//! Every constructor that can blow up takes a [`Budget`]; exceeding a cap is
//! a reported error, never a silent truncation.

use serde::{Deserialize, Serialize};

/// Caps for category construction, enumeration and nerve computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Maximal number of morphisms a validated category may have.
    pub max_morphisms: usize,
    /// Maximal ordinal depth n for full category construction.
    pub max_depth: usize,
    /// Maximal ordinal size k for full category construction.
    pub max_ordinal_size: usize,
    /// Maximal number of vertices in an enumerated planar tree.
    pub max_tree_vertices: usize,
    /// Maximal number of leaves in an enumerated planar tree.
    pub max_tree_leaves: usize,
    /// Arity budget for operad and substitude tables.
    pub max_arity: usize,
    /// Dimension cap for nerve computations.
    pub nerve_dim: usize,
    /// Maximal total number of simplices a nerve may allocate.
    pub simplex_budget: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_morphisms: 10_000,
            max_depth: 5,
            max_ordinal_size: 5,
            max_tree_vertices: 5,
            max_tree_leaves: 6,
            max_arity: 4,
            nerve_dim: 4,
            simplex_budget: 2_000_000,
        }
    }
}

impl Budget {
    /// Default budget with environment-variable overrides applied.
    ///
    /// Recognised variables: `OPCAT_MAX_MORPHISMS`, `OPCAT_MAX_DEPTH`,
    /// `OPCAT_MAX_ORDINAL_SIZE`, `OPCAT_MAX_TREE_VERTICES`,
    /// `OPCAT_MAX_TREE_LEAVES`, `OPCAT_MAX_ARITY`, `OPCAT_NERVE_DIM`,
    /// `OPCAT_SIMPLEX_BUDGET`.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        let read = |name: &str| -> Option<usize> {
            std::env::var(name).ok().and_then(|v| v.parse().ok())
        };
        if let Some(v) = read("OPCAT_MAX_MORPHISMS") {
            b.max_morphisms = v;
        }
        if let Some(v) = read("OPCAT_MAX_DEPTH") {
            b.max_depth = v;
        }
        if let Some(v) = read("OPCAT_MAX_ORDINAL_SIZE") {
            b.max_ordinal_size = v;
        }
        if let Some(v) = read("OPCAT_MAX_TREE_VERTICES") {
            b.max_tree_vertices = v;
        }
        if let Some(v) = read("OPCAT_MAX_TREE_LEAVES") {
            b.max_tree_leaves = v;
        }
        if let Some(v) = read("OPCAT_MAX_ARITY") {
            b.max_arity = v;
        }
        if let Some(v) = read("OPCAT_NERVE_DIM") {
            b.nerve_dim = v;
        }
        if let Some(v) = read("OPCAT_SIMPLEX_BUDGET") {
            b.simplex_budget = v;
        }
        b
    }
}
