//! De Bruijn sequence generation.

use crate::seq::CyclicSequence;
use crate::{Error, Result};

/// The lexicographically least de Bruijn sequence of order `n` over
/// `{0,..,q-1}`, by Lyndon-word concatenation. Deterministic, so downstream
/// constructions are reproducible byte for byte.
pub fn de_bruijn(q: u32, n: u32) -> Result<CyclicSequence> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if n == 0 {
        return Err(Error::Parse {
            field: "n".into(),
            detail: "order must be at least 1".into(),
        });
    }
    let size = (q as u128)
        .checked_pow(n)
        .filter(|&s| s <= 1 << 28)
        .ok_or(Error::ArithmeticOverflow)?;
    let mut seq = Vec::with_capacity(size as usize);
    let mut a = vec![0u8; (n as usize) + 1];
    fn extend(t: usize, p: usize, n: usize, q: u8, a: &mut [u8], seq: &mut Vec<u8>) {
        if t > n {
            if n % p == 0 {
                seq.extend_from_slice(&a[1..=p]);
            }
        } else {
            a[t] = a[t - p];
            extend(t + 1, p, n, q, a, seq);
            for c in a[t - p] + 1..q {
                a[t] = c;
                extend(t + 1, t, n, q, a, seq);
            }
        }
    }
    extend(1, 1, n as usize, q as u8, &mut a, &mut seq);
    CyclicSequence::new(q, seq)
}

/// A binary de Bruijn sequence of order `n` with `pad` extra zeros inserted
/// into its unique run of `n` zeros. Length `2^n + pad`; every `n`-tuple
/// still occurs, so the result covers at radius 0.
pub fn debruijn_padded(n: u32, pad: usize) -> Result<CyclicSequence> {
    let base = de_bruijn(2, n)?;
    // the lexicographically least sequence starts with its zero run, so the
    // padding zeros are prepended
    let mut symbols = vec![0u8; pad];
    symbols.extend_from_slice(base.symbols());
    CyclicSequence::new(2, symbols)
}
