//! Exact, desk-scale combinatorics of finite categories, n-ordinals,
//! n-planar trees, n-operads and Σ-free substitudes, together with a
//! verification harness that machine-checks the structural claims the
//! library is built around (finality certificates, initial objects in
//! fibers, symmetrisation comparisons, shuffle retractions, filtration
//! colimits and nerve homology of quasibijection categories).

pub mod budget;
pub mod fincat;
pub mod harness;
pub mod homotopy;
pub mod operads;
pub mod optrees;
pub mod ordinals;
pub mod substitudes;
