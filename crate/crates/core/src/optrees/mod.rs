//! n-planar trees: planar shapes with per-vertex ordinal decorations, leaf
//! labelings and a linear order on vertices; the complementary relation a
//! tree induces on its leaves; admissibility against a target ordinal;
//! enumeration of operation sets; and tree substitution.

mod enumerate;
mod literal;
mod nplanar;
mod shape;
mod substitute;

pub use enumerate::{enumerate_trees, enumerate_trees_cw};
pub use literal::{parse_tree, print_tree};
pub use nplanar::{corolla, corolla_of_quasibijection, NPlanarTree, OperadClass, TreeError};
pub use shape::Node;
pub use substitute::{substitute, substitute_all, substitute_all_traced};
