//! Prime-filter spectra of finite distributive algebras, the Stone map
//! into the opens of the spectrum, and the Rasiowa involution.

mod interpolation;
mod spectrum;
mod stone;

pub use interpolation::{
    interpolation_check, monteiro_equivalence, opens_nelson_check, Interpolation, MonteiroReport,
};
pub use spectrum::{prime_spectrum, rasiowa_involution, with_involution, Kinds, PrimeFilterSpace};
pub use stone::{stone_map, StoneEmbedding};
