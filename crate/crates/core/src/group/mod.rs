//! Word algebra of the Hecke group `Z_2 * Z_p` with presentation
//! `<i, g | i^2 = g^p = 1>`.

mod conjugacy;
mod cyclic;
mod params;
mod text;
mod word;

pub use conjugacy::{are_conjugate, is_reciprocal};
pub use cyclic::{cyclic_reduce, least_rotation, ClassKey, CyclicWord};
pub(crate) use cyclic::cyclic_period;
pub use params::{HeckeParams, Parity};
pub use text::{format_word, parse_word};
pub use word::{Letter, Word};
