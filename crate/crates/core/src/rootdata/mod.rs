//! Root data, Weyl groups, Bruhat order and parabolic coset representatives.

pub mod datum;
pub mod parabolic;
pub mod weyl;

pub use datum::{DatumSpec, RootDatum};
pub use parabolic::{Cover, ParabolicCosets};
pub use weyl::{format_word, parse_word, WeylElement, WeylGroup};
