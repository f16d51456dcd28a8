//! Folding a covering sequence into a covering array.
//!
//! Row `j` of the fold holds the source symbols `s[jn+1] .. s[jn+2n-1]`
//! (1-based offsets, indices mod the source length), so every length-`mn`
//! substring of the source appears as an `m x n` window whose upper-left
//! corner sits in the first `n` columns.

use crate::grid::PeriodicArray;
use crate::seq::CyclicSequence;
use crate::verify::{self, CoverageReport};
use crate::{Error, Result};

/// Fold geometry: `cols = 2n - 1` always; `rows = k/n` when `n` divides the
/// source length `k`, otherwise the source is padded with `pad` symbols
/// (repeating its prefix) to length `k' = k + pad` and `rows = k'/n + m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldPlan {
    pub source_len: usize,
    pub m: u32,
    pub n: u32,
    pub pad: usize,
    pub rows: usize,
    pub cols: usize,
}

pub fn plan_fold(source_len: usize, m: u32, n: u32) -> FoldPlan {
    let n_us = n as usize;
    let pad = (n_us - source_len % n_us) % n_us;
    let rows = if pad == 0 {
        source_len / n_us
    } else {
        (source_len + pad) / n_us + m as usize - 1
    };
    FoldPlan { source_len, m, n, pad, rows, cols: 2 * n_us - 1 }
}

/// Fold an `(m*n, R)` covering sequence into an `(m, n, R)` covering array
/// and verify the result.
pub fn fold(s: &CyclicSequence, m: u32, n: u32, r: u32) -> Result<(PeriodicArray, CoverageReport)> {
    fold_with(s, m, n, r, verify::DEFAULT_WITNESS_CAP, verify::DEFAULT_BUDGET)
}

pub fn fold_with(
    s: &CyclicSequence,
    m: u32,
    n: u32,
    r: u32,
    witness_cap: usize,
    budget: u128,
) -> Result<(PeriodicArray, CoverageReport)> {
    let plan = plan_fold(s.len(), m, n);
    let n_us = n as usize;
    let array = if plan.pad == 0 {
        let k = s.len();
        PeriodicArray::from_fn(s.q(), plan.rows, plan.cols, |j, c| s.get((j * n_us + 1 + c) % k))?
    } else {
        // padded source, read cyclically at its padded length
        let kp = s.len() + plan.pad;
        let padded: Vec<u8> = (0..kp).map(|i| if i < s.len() { s.get(i) } else { s.get(i - s.len()) }).collect();
        let base_rows = kp / n_us;
        PeriodicArray::from_fn(s.q(), plan.rows, plan.cols, |j, c| {
            let j = if j < base_rows { j } else { j - base_rows };
            padded[(j * n_us + 1 + c) % kp]
        })?
    };
    let report = verify::check_dbca_with(&array, m, n, r, witness_cap, budget)?;
    if !report.verified {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    Ok((array, report))
}

/// Partition the sequence into `t * r` overlapping segments, fold each into
/// a non-periodic block, and tile the blocks `r` high by `t` wide. Each
/// segment is extended by wrapping the parent sequence so segment windows
/// remain genuine windows of the source. Verified post hoc.
pub fn tile_fold(
    s: &CyclicSequence,
    m: u32,
    n: u32,
    tiles_x: u32,
    tiles_y: u32,
    r: u32,
) -> Result<(PeriodicArray, CoverageReport)> {
    tile_fold_with(s, m, n, tiles_x, tiles_y, r, verify::DEFAULT_WITNESS_CAP, verify::DEFAULT_BUDGET)
}

#[allow(clippy::too_many_arguments)]
pub fn tile_fold_with(
    s: &CyclicSequence,
    m: u32,
    n: u32,
    tiles_x: u32,
    tiles_y: u32,
    r: u32,
    witness_cap: usize,
    budget: u128,
) -> Result<(PeriodicArray, CoverageReport)> {
    if tiles_x == 0 || tiles_y == 0 {
        return Err(Error::Parse {
            field: "tiles".into(),
            detail: "tile counts must be at least 1".into(),
        });
    }
    let k = s.len();
    let (m_us, n_us) = (m as usize, n as usize);
    let segments = tiles_x as usize * tiles_y as usize;
    let base = k.div_ceil(segments);
    // overlap of mn-1 keeps every mn-substring inside some segment
    let kappa = base + m_us * n_us - 1;
    let block_rows = kappa.div_ceil(n_us) + m_us - 1;
    let block_cols = 2 * n_us - 1;
    let rows = tiles_y as usize * block_rows;
    let cols = tiles_x as usize * block_cols;
    let array = PeriodicArray::from_fn(s.q(), rows, cols, |i, j| {
        let (u, v) = (i / block_rows, j / block_cols);
        let (bi, bj) = (i % block_rows, j % block_cols);
        let segment = u * tiles_x as usize + v;
        s.get(segment * base + bi * n_us + 1 + bj)
    })?;
    let report = verify::check_dbca_with(&array, m, n, r, witness_cap, budget)?;
    if !report.verified {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    Ok((array, report))
}
