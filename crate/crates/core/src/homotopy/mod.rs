//! Nerve construction and exact algebraic-topology invariants of finite
//! categories: Betti numbers over Q and F2 by fraction-free and bit-matrix
//! elimination, integral H_1 by Smith normal form, and the edge-path
//! fundamental-group presentation with its abelianization.

mod betti;
mod matrix;
mod nerve;
mod pi1;

pub use betti::{betti, h1_integral, z2_torsion_count, BettiReport, Field, H1Report};
pub use matrix::{rank_f2, rank_mod_p, rank_q_exact, snf_invariant_factors, SparseInt};
pub use nerve::{boundary, nerve, HomotopyError, TruncatedNerve};
pub use pi1::{pi1_presentation, GroupPresentation};
