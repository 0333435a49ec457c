//! Exact computation kernel for finite categories: construction and
//! validation, comma categories, two-sided Grothendieck constructions,
//! presheaf (co)limits, left Kan extensions and final-functor certificates.

mod bimodule;
mod category;
mod comma;
mod final_functor;
mod functor;
mod grothendieck;
mod json;
mod limits;
mod presheaf;

pub use bimodule::Bimodule;
pub use category::{CatBuilder, FinCategory, FincatError, MorphismData};
pub use comma::{comma_over, comma_under, CommaCategory};
pub use final_functor::{
    is_constantly_disconnected, is_disconnected_functor, is_final, DisconnectedReport,
    FinalityCertificate,
};
pub use functor::FinFunctor;
pub use grothendieck::{grothendieck, TwoSidedFibration};
pub use json::{category_from_json, category_to_json};
pub use limits::{colim, left_kan, lim, Colimit, UnionFind};
