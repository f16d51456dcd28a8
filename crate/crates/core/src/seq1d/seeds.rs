//! Catalog of known short covering sequences.

use crate::seq::CyclicSequence;
use crate::{Error, Result};

/// `(n, R, variant, symbols)`; variant 1 is the primary entry for a given
/// `(n, R)`, variant 2 an alternate of a different length.
pub const SEED_CATALOG: &[(u32, u32, u32, &str)] = &[
    (5, 1, 1, "10100011"),
    (6, 1, 1, "000100111011"),
    (6, 1, 2, "00000010101111011"),
    (7, 1, 1, "1111001010110010000110"),
    (7, 1, 2, "1111110101100000101001100"),
    // concatenation of the two self-dual halves 0001101111100100, 0001101011100101
    (8, 1, 1, "00011011111001000001101011100101"),
];

/// Look up a catalog sequence by `(n, R)` and variant.
pub fn known_seed(n: u32, r: u32, variant: u32) -> Result<CyclicSequence> {
    SEED_CATALOG
        .iter()
        .find(|&&(cn, cr, cv, _)| (cn, cr, cv) == (n, r, variant))
        .map(|&(_, _, _, bits)| CyclicSequence::from_bits(bits).expect("catalog entries are valid"))
        .ok_or(Error::UnknownSeed { n, r, variant })
}
