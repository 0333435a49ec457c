//! n-ordinals and their morphisms, quasibijection categories Q_n(k),
//! Milgram posets J_n(k) realized as comma categories of the total-order
//! functor, domination of complementary relations, and suspensions.

mod category;
mod literal;
mod map;
mod ordinal;

pub use category::{
    milgram_poset, quasibijection_category, symmetric_groupoid, total_order_functor, MilgramError,
    MilgramPoset, QuasibijCategory, SymGroupoid,
};
pub use literal::{parse_ordinal, print_ordinal};
pub use map::{all_maps, all_quasibijections, OrdinalMap};
pub use ordinal::{dominates, enumerate_ordinals, ComplementaryRelation, NOrdinal, OrdinalError};
