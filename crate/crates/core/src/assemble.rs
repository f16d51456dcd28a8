//! Merging linear strings and sequence codes into one cyclic sequence.

use crate::seq::{CyclicSequence, SequenceCode};
use crate::verify::{self, CoverageReport};
use crate::{Error, Result};

/// One merge step: the pool positions of the two strings joined and the
/// suffix-prefix overlap used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeStep {
    pub left: usize,
    pub right: usize,
    pub overlap: usize,
}

/// Log of a greedy merge.
#[derive(Debug, Clone)]
pub struct MergeTrace {
    pub steps: Vec<MergeStep>,
    /// Total symbols across the (deduplicated) inputs.
    pub input_total: usize,
    pub duplicates_removed: usize,
    pub final_len: usize,
}

impl MergeTrace {
    pub fn total_overlap(&self) -> usize {
        self.steps.iter().map(|s| s.overlap).sum()
    }
}

/// Acyclic extension: the sequence's symbols followed by its first `n - 1`
/// symbols (wrapping if the period is shorter), so the string's `n`-windows
/// are exactly the cyclic `n`-windows, multiplicity included. A period-1
/// sequence expands to `n` copies of its symbol.
pub fn linearize(s: &CyclicSequence, n: u32) -> Vec<u8> {
    let n = n as usize;
    let mut out = Vec::with_capacity(s.len() + n - 1);
    out.extend_from_slice(s.symbols());
    for i in 0..n - 1 {
        out.push(s.get(i));
    }
    out
}

/// Sliding windows of a linear string.
pub fn linear_windows(string: &[u8], n: usize) -> Vec<Vec<u8>> {
    if string.len() < n {
        return Vec::new();
    }
    (0..=string.len() - n).map(|i| string[i..i + n].to_vec()).collect()
}

/// Longest overlap between a suffix of `a` and a prefix of `b`, by the
/// failure function of `b # a`.
fn suffix_prefix_overlap(a: &[u8], b: &[u8]) -> usize {
    // 255 is outside every symbol alphabet (q <= 255 means symbols <= 254)
    let mut combined = Vec::with_capacity(a.len() + b.len() + 1);
    combined.extend_from_slice(b);
    combined.push(u8::MAX);
    combined.extend_from_slice(a);
    let mut fail = vec![0usize; combined.len()];
    for i in 1..combined.len() {
        let mut j = fail[i - 1];
        while j > 0 && combined[i] != combined[j] {
            j = fail[j - 1];
        }
        if combined[i] == combined[j] {
            j += 1;
        }
        fail[i] = j;
    }
    *fail.last().unwrap()
}

/// Repeatedly merge the pair with the largest suffix-prefix overlap until
/// one string remains. Ties prefer the lexicographically smaller merged
/// string, then the lowest pool indices. Exact duplicates are removed first.
pub fn greedy_merge(strings: &[Vec<u8>]) -> Result<(Vec<u8>, MergeTrace)> {
    let mut pool: Vec<Vec<u8>> = Vec::new();
    for s in strings {
        if s.is_empty() {
            return Err(Error::EmptySequence);
        }
        if !pool.contains(s) {
            pool.push(s.clone());
        }
    }
    if pool.is_empty() {
        return Err(Error::EmptySequence);
    }
    let duplicates_removed = strings.len() - pool.len();
    let input_total: usize = pool.iter().map(Vec::len).sum();

    // pairwise overlaps; only rows and columns touching a merge change
    let mut overlaps: Vec<Vec<usize>> = (0..pool.len())
        .map(|i| {
            (0..pool.len())
                .map(|j| if i == j { 0 } else { suffix_prefix_overlap(&pool[i], &pool[j]) })
                .collect()
        })
        .collect();

    let mut steps = Vec::new();
    while pool.len() > 1 {
        let mut best_overlap = 0usize;
        let mut ties: Vec<(usize, usize)> = Vec::new();
        for (i, row) in overlaps.iter().enumerate() {
            for (j, &o) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if o > best_overlap {
                    best_overlap = o;
                    ties.clear();
                }
                if o == best_overlap {
                    ties.push((i, j));
                }
            }
        }
        let (i, j) = ties
            .iter()
            .copied()
            .min_by(|&(ai, aj), &(bi, bj)| {
                let a = merged(&pool[ai], &pool[aj], best_overlap);
                let b = merged(&pool[bi], &pool[bj], best_overlap);
                a.cmp(&b).then((ai, aj).cmp(&(bi, bj)))
            })
            .expect("pool has at least two strings");
        let new = merged(&pool[i], &pool[j], best_overlap);
        steps.push(MergeStep { left: i, right: j, overlap: best_overlap });
        let (keep, drop) = (i.min(j), i.max(j));
        pool.remove(drop);
        pool[keep] = new;
        overlaps.remove(drop);
        for row in &mut overlaps {
            row.remove(drop);
        }
        for idx in 0..pool.len() {
            if idx != keep {
                overlaps[keep][idx] = suffix_prefix_overlap(&pool[keep], &pool[idx]);
                overlaps[idx][keep] = suffix_prefix_overlap(&pool[idx], &pool[keep]);
            }
        }
    }

    let result = pool.pop().unwrap();
    let trace = MergeTrace {
        steps,
        input_total,
        duplicates_removed,
        final_len: result.len(),
    };
    debug_assert_eq!(trace.final_len, trace.input_total - trace.total_overlap());
    Ok((result, trace))
}

fn merged(a: &[u8], b: &[u8], overlap: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(a.len() + b.len() - overlap);
    out.extend_from_slice(a);
    out.extend_from_slice(&b[overlap..]);
    out
}

/// Linearize every member of a code, merge greedily, close the result into
/// a cyclic sequence (no wrap trimming), and verify it at the code's
/// declared `(n, R)`. Closing a linear string cyclically only adds windows,
/// so a verified code yields a verified sequence; failure indicates a
/// construction bug and is reported as an error.
pub fn dbcsc_to_dbcs(code: &SequenceCode) -> Result<(CyclicSequence, MergeTrace, CoverageReport)> {
    let strings: Vec<Vec<u8>> =
        code.members().iter().map(|m| linearize(m, code.window())).collect();
    let (merged, trace) = greedy_merge(&strings)?;
    let seq = CyclicSequence::new(code.q(), merged)?;
    let report = verify::check_dbcs(&seq, code.window(), code.radius())?;
    if !report.verified {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    Ok((seq, trace, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linearize_examples() {
        let s = CyclicSequence::from_bits("0101").unwrap();
        assert_eq!(linearize(&s, 3), vec![0, 1, 0, 1, 0, 1]);
        let zeros = CyclicSequence::new(2, vec![0]).unwrap();
        assert_eq!(linearize(&zeros, 12), vec![0; 12]);
        let long = CyclicSequence::new(2, vec![1; 64]).unwrap();
        assert_eq!(linearize(&long, 16).len(), 79);
    }

    #[test]
    fn linearized_windows_match_cyclic_windows() {
        let s = CyclicSequence::from_bits("0101").unwrap();
        assert_eq!(linear_windows(&linearize(&s, 3), 3), s.windows(3));
    }

    #[test]
    fn classic_superstring_step() {
        // "ABC" + "BCD" over a toy alphabet
        let (result, trace) = greedy_merge(&[vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        assert_eq!(result, vec![1, 2, 3, 4]);
        assert_eq!(trace.steps, vec![MergeStep { left: 0, right: 1, overlap: 2 }]);
    }

    #[test]
    fn duplicates_are_removed_first() {
        let (result, trace) = greedy_merge(&[vec![5, 5], vec![5, 5]]).unwrap();
        assert_eq!(result, vec![5, 5]);
        assert_eq!(trace.duplicates_removed, 1);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn length_accounting_is_exact() {
        let inputs = vec![
            vec![0, 0, 1, 0],
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 0],
            vec![1, 1, 0, 0],
        ];
        let (result, trace) = greedy_merge(&inputs).unwrap();
        assert_eq!(result.len(), trace.input_total - trace.total_overlap());
        assert!(result.len() <= 16);
        // window preservation
        for input in &inputs {
            let found = (0..=result.len() - 4).any(|i| &result[i..i + 4] == input.as_slice());
            assert!(found, "{input:?} not in {result:?}");
        }
    }

    #[test]
    fn deterministic() {
        let inputs = vec![vec![0, 1, 1], vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
        let a = greedy_merge(&inputs).unwrap();
        let b = greedy_merge(&inputs).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1.steps, b.1.steps);
    }

    #[test]
    fn single_member_code_closes_cyclically() {
        let member = crate::seq1d::seeds::known_seed(5, 1, 1).unwrap();
        let code = SequenceCode::new(vec![member.clone()], 5, 1).unwrap();
        let (seq, _, report) = dbcsc_to_dbcs(&code).unwrap();
        assert!(report.verified);
        assert_eq!(seq.len(), member.len() + 4);
    }
}
