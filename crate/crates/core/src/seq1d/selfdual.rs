//! Self-dual sequence families.
//!
//! From two seed words `X`, `Y` of length `l` that differ only in the last
//! bit, every even-weight word `Z` of length `l` starting with 0 yields the
//! merged cyclic sequence `[Z, Z+X, ~Z, ~Z+X, Z, Z+Y, ~Z, ~Z+Y]` of length
//! `8l`. There are `2^(l-2)` choices of `Z`.

use crate::seq::{CyclicSequence, SequenceCode};
use crate::{Error, Result};

/// Seed `X` whose family forms a (16,1) covering-sequence code.
pub const SEED_X: &str = "00011011";
/// Seed `Y`; differs from [`SEED_X`] in the last bit.
pub const SEED_Y: &str = "00011010";

fn xor(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

fn complement(a: &[u8]) -> Vec<u8> {
    a.iter().map(|&x| 1 - x).collect()
}

/// Build all `2^(l-2)` merged sequences, declared as a `(2l, 1)` code.
pub fn self_dual_dbcsc(x: &[u8], y: &[u8]) -> Result<SequenceCode> {
    if x.len() != y.len() {
        return Err(Error::SeedLengthMismatch(x.len(), y.len()));
    }
    let l = x.len();
    if l < 2 {
        return Err(Error::Unsupported(format!("seed length must be at least 2, got {l}")));
    }
    if let Some(&bad) = x.iter().chain(y).find(|&&s| s > 1) {
        return Err(Error::SymbolOutOfRange { value: bad.into(), q: 2 });
    }
    let differs: Vec<usize> = (0..l).filter(|&i| x[i] != y[i]).collect();
    if differs != [l - 1] {
        return Err(Error::SeedDifference);
    }

    let mut members = Vec::with_capacity(1 << (l - 2));
    // Z runs over even-weight words with leading zero, in ascending order of
    // their big-endian integer value
    for value in 0..(1u64 << (l - 1)) {
        let z: Vec<u8> = (0..l).map(|i| ((value >> (l - 1 - i)) & 1) as u8).collect();
        if z.iter().map(|&b| b as u32).sum::<u32>() % 2 != 0 {
            continue;
        }
        let zc = complement(&z);
        let mut seq = Vec::with_capacity(8 * l);
        seq.extend_from_slice(&z);
        seq.extend(xor(&z, x));
        seq.extend_from_slice(&zc);
        seq.extend(xor(&zc, x));
        seq.extend_from_slice(&z);
        seq.extend(xor(&z, y));
        seq.extend_from_slice(&zc);
        seq.extend(xor(&zc, y));
        members.push(CyclicSequence::new(2, seq)?);
    }
    SequenceCode::new(members, 2 * l as u32, 1)
}

/// The paper-seeded family: 64 sequences of length 64 declared (16, 1).
pub fn self_dual_family() -> Result<SequenceCode> {
    let x: Vec<u8> = SEED_X.bytes().map(|b| b - b'0').collect();
    let y: Vec<u8> = SEED_Y.bytes().map(|b| b - b'0').collect();
    self_dual_dbcsc(&x, &y)
}
