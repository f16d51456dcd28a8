//! One-dimensional constructions: shift-register pairs, cyclic-code
//! rotation classes, self-dual families, interleaving, padded de Bruijn
//! sequences, and the seed catalog.

pub mod debruijn;
pub mod gf2;
pub mod interleave;
pub mod lfsr;
pub mod necklace;
pub mod seeds;
pub mod selfdual;

pub use debruijn::{de_bruijn, debruijn_padded};
pub use gf2::{bundled_primitive, Gf2Polynomial, PRIMITIVE_POLYS};
pub use interleave::interleave;
pub use lfsr::{lfsr_dbcsc, lfsr_pair};
pub use necklace::{class_strings, cyclic_code_classes, NecklaceClass, NecklaceClassProfile};
pub use seeds::{known_seed, SEED_CATALOG};
pub use selfdual::{self_dual_dbcsc, self_dual_family, SEED_X, SEED_Y};
