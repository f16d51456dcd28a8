//! Ball volume and the sphere covering bound, in exact integer arithmetic.

use crate::{Error, Result};

/// Volume of a Hamming ball: `V_q(n, R) = sum_{i=0}^{R} C(n, i) (q-1)^i`.
///
/// Exact; any overflow of the checked 128-bit arithmetic is an error, never
/// silent wraparound.
pub fn ball_volume(q: u32, n: u32, r: u32) -> Result<u128> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if n < 1 {
        return Err(Error::Parse {
            field: "n".into(),
            detail: "tuple length must be at least 1".into(),
        });
    }
    if r > n {
        return Err(Error::RadiusExceedsLength { r, n });
    }
    let mut total: u128 = 0;
    let mut binom: u128 = 1; // C(n, i)
    let mut pow: u128 = 1; // (q-1)^i
    for i in 0..=r {
        if i > 0 {
            // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at every step
            binom = binom
                .checked_mul((n - i + 1) as u128)
                .ok_or(Error::ArithmeticOverflow)?
                / i as u128;
            pow = pow
                .checked_mul((q - 1) as u128)
                .ok_or(Error::ArithmeticOverflow)?;
        }
        let term = binom.checked_mul(pow).ok_or(Error::ArithmeticOverflow)?;
        total = total.checked_add(term).ok_or(Error::ArithmeticOverflow)?;
    }
    Ok(total)
}

/// The sphere covering bound `ceil(q^n / V_q(n, R))`, a lower bound on the
/// size of any length-`n` radius-`R` covering code.
pub fn sphere_bound(q: u32, n: u32, r: u32) -> Result<u128> {
    let v = ball_volume(q, n, r)?;
    let mut space: u128 = 1;
    for _ in 0..n {
        space = space.checked_mul(q as u128).ok_or(Error::ArithmeticOverflow)?;
    }
    Ok(space.div_ceil(v))
}

/// `q^n` as a checked u128.
pub fn space_size(q: u32, n: u32) -> Result<u128> {
    let mut space: u128 = 1;
    for _ in 0..n {
        space = space.checked_mul(q as u128).ok_or(Error::ArithmeticOverflow)?;
    }
    Ok(space)
}
