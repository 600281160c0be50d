//! `U_q^-(gl)` on a finite window of odd indices, modelled by word vectors
//! in the free algebra on the letters `f_i`. Equality, coordinates and the
//! form are read modulo the Serre relations through the bilinear form,
//! whose radical on words is exactly the Serre ideal.

mod boson;
pub mod cache;
mod gram;
mod pbw;
mod vector;
mod word;

pub use boson::{mod_etilde, mod_ftilde};
pub(crate) use boson::{decompose, raise_etilde, raise_ftilde};
pub use cache::{cache_enabled, set_cache_enabled};
pub use gram::{form, is_zero_in_uq, word_gram, WordGram};
pub use pbw::{from_pbw_coords, pbw_coords, pbw_element, pbw_segment, ublock, UBlock};
pub(crate) use pbw::power;
pub use vector::WordVector;
pub use word::Word;

use crate::error::Result;

/// `x · y` in the free algebra.
pub fn mul(x: &WordVector, y: &WordVector) -> Result<WordVector> {
    x.mul(y)
}

pub fn ad_t(i: i32, x: &WordVector) -> WordVector {
    x.ad_t(i)
}

pub fn eprime(i: i32, x: &WordVector) -> WordVector {
    x.eprime(i)
}

pub fn estar(i: i32, x: &WordVector) -> WordVector {
    x.estar(i)
}

pub fn bar_vec(x: &WordVector) -> WordVector {
    x.bar()
}
