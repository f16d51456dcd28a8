//! Existence search for covering arrays at fixed dimensions.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grid::PeriodicArray;
use crate::tuple::TupleIndex;
use crate::verify;
use crate::{bounds, Error, Result};

/// Cell-count bound for the exhaustive sweep; beyond it the search samples
/// randomly within a trial budget and can only answer "found" or "unknown".
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    /// A verified array; in exhaustive mode, the first in candidate order.
    Found(PeriodicArray),
    /// Exhaustive sweep completed without a hit: none exists.
    NoneExists,
    /// Randomized search exhausted its trial budget.
    Unknown { trials: u64 },
}

/// Search for an `(m, n, R)` covering array of exactly `rows x cols`.
///
/// When the candidate space `q^(rows*cols)` is at most [`EXHAUSTIVE_LIMIT`],
/// candidates are enumerated in tuple-index order (cells row-major, most
/// significant first) and checked with early pruning; absence is then
/// definitive. Larger spaces fall back to seeded random sampling.
pub fn exhaustive_search(
    q: u32,
    m: u32,
    n: u32,
    r: u32,
    rows: usize,
    cols: usize,
    seed: u64,
    trial_budget: u64,
) -> Result<SearchOutcome> {
    let (m_us, n_us) = (m as usize, n as usize);
    let cells = rows * cols;
    let window_ti = TupleIndex::new(q, m_us * n_us)?;
    let candidates = bounds::space_size(q, cells as u32)?;

    let check = |array: &PeriodicArray| -> bool {
        let mut codewords: Vec<u64> = array
            .windows(m_us, n_us)
            .iter()
            .map(|w| window_ti.encode(w))
            .collect();
        codewords.sort_unstable();
        codewords.dedup();
        verify::covers_within(&codewords, &window_ti, r)
    };

    if candidates <= EXHAUSTIVE_LIMIT {
        let cell_ti = TupleIndex::new(q, cells)?;
        for idx in 0..cell_ti.size() {
            let array = PeriodicArray::new(q, rows, cols, cell_ti.decode(idx))?;
            if check(&array) {
                return Ok(SearchOutcome::Found(array));
            }
        }
        return Ok(SearchOutcome::NoneExists);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _trial in 0..trial_budget {
        let cells: Vec<u8> = (0..cells).map(|_| rng.random_range(0..q) as u8).collect();
        let array = PeriodicArray::new(q, rows, cols, cells)?;
        if check(&array) {
            return Ok(SearchOutcome::Found(array));
        }
    }
    Ok(SearchOutcome::Unknown { trials: trial_budget })
}

/// Convenience wrapper asserting the found array verifies.
pub fn search_verified(
    q: u32,
    m: u32,
    n: u32,
    r: u32,
    rows: usize,
    cols: usize,
    seed: u64,
    trial_budget: u64,
) -> Result<SearchOutcome> {
    let outcome = exhaustive_search(q, m, n, r, rows, cols, seed, trial_budget)?;
    if let SearchOutcome::Found(array) = &outcome {
        let report = verify::check_dbca(array, m, n, r)?;
        if !report.verified {
            return Err(Error::VerificationFailed(Box::new(report)));
        }
    }
    Ok(outcome)
}
