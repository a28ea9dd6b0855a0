//! Fixed-point restrictions, GKM classes, Schubert expansions and Chevalley formulas.

mod calculus;
mod chevalley;
mod restrict;

pub use calculus::{Basis, Calculus, GkmClass, GkmViolation, SchubertExpansion};
pub use chevalley::DivisorProduct;
pub use restrict::RestrictionTable;
