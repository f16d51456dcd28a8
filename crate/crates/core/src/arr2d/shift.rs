//! Mutual shifts of one covering sequence stacked into an array.

use crate::grid::PeriodicArray;
use crate::seq::CyclicSequence;
use crate::verify::{self, CoverageReport};
use crate::{Error, Result};

/// Stack cyclic shifts of an `(n, R)` covering sequence of length `k`:
/// row `i` is the sequence shifted left by `T_i = i(i+1)/2`, giving a
/// `(2, n, 2R)` covering array. For even `k` the array is `(k+1) x k` with
/// the last row duplicating row `k-1`; for odd `k` it is `k x k`.
pub fn shift_construct(
    s: &CyclicSequence,
    n: u32,
    r: u32,
) -> Result<(PeriodicArray, CoverageReport)> {
    shift_construct_with(s, n, r, verify::DEFAULT_WITNESS_CAP, verify::DEFAULT_BUDGET)
}

pub fn shift_construct_with(
    s: &CyclicSequence,
    n: u32,
    r: u32,
    witness_cap: usize,
    budget: u128,
) -> Result<(PeriodicArray, CoverageReport)> {
    let k = s.len();
    let rows = if k % 2 == 0 { k + 1 } else { k };
    let array = PeriodicArray::from_fn(s.q(), rows, k, |i, c| {
        let i = if i == k { k - 1 } else { i };
        let shift = i * (i + 1) / 2;
        s.get(shift + c)
    })?;
    let report = verify::check_dbca_with(&array, 2, n, 2 * r, witness_cap, budget)?;
    if !report.verified {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    Ok((array, report))
}
