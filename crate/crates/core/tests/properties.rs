//! Property suites: the exact engine against a naive oracle, structural
//! invariants of the constructions, and bookkeeping identities.

use proptest::prelude::*;

use dbc_core::arr2d::fold::{fold, plan_fold};
use dbc_core::assemble::{greedy_merge, linear_windows, linearize};
use dbc_core::seq1d::{self, debruijn_padded, interleave, known_seed};
use dbc_core::verify::{self, covering_radius, DEFAULT_BUDGET};
use dbc_core::{bounds, CyclicSequence, TupleIndex};

/// Independent oracle: every tuple against every codeword.
fn covering_radius_naive(codewords: &[u64], q: u32, len: u32) -> u32 {
    let ti = TupleIndex::new(q, len as usize).unwrap();
    let decoded: Vec<Vec<u8>> = codewords.iter().map(|&c| ti.decode(c)).collect();
    let mut worst = 0u32;
    for idx in 0..ti.size() {
        let t = ti.decode(idx);
        let best = decoded
            .iter()
            .map(|c| c.iter().zip(&t).filter(|(a, b)| a != b).count() as u32)
            .min()
            .unwrap();
        worst = worst.max(best);
    }
    worst
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn engine_matches_naive_oracle(
        q in 2u32..=3,
        len in 1u32..=7,
        raw in prop::collection::vec(any::<u64>(), 1..12),
    ) {
        let size = (q as u64).pow(len);
        let mut codewords: Vec<u64> = raw.into_iter().map(|c| c % size).collect();
        codewords.sort_unstable();
        codewords.dedup();
        let fast = covering_radius(&codewords, q, len, DEFAULT_BUDGET).unwrap();
        let slow = covering_radius_naive(&codewords, q, len);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn tuple_index_round_trip(
        q in 2u32..=5,
        len in 1usize..=6,
        raw in any::<u64>(),
    ) {
        let ti = TupleIndex::new(q, len).unwrap();
        let idx = raw % ti.size();
        prop_assert_eq!(ti.encode(&ti.decode(idx)), idx);
    }

    #[test]
    fn adding_codewords_never_increases_radius(
        q in 2u32..=3,
        len in 1u32..=6,
        raw in prop::collection::vec(any::<u64>(), 2..10),
    ) {
        let size = (q as u64).pow(len);
        let codewords: Vec<u64> = raw.iter().map(|&c| c % size).collect();
        let mut base = codewords[..codewords.len() - 1].to_vec();
        base.sort_unstable();
        base.dedup();
        let mut more = codewords.clone();
        more.sort_unstable();
        more.dedup();
        let r_base = covering_radius(&base, q, len, DEFAULT_BUDGET).unwrap();
        let r_more = covering_radius(&more, q, len, DEFAULT_BUDGET).unwrap();
        prop_assert!(r_more <= r_base);
    }

    #[test]
    fn rotation_invariance_of_reports(
        bits in prop::collection::vec(0u8..2, 3..14),
        rot in 0usize..16,
        n in 1u32..=5,
        r in 0u32..=2,
    ) {
        prop_assume!(bits.iter().any(|&b| b != bits[0]) || bits.len() == 1);
        let s = CyclicSequence::new(2, bits).unwrap();
        let rotated = s.rotate(rot % s.len());
        let a = verify::check_dbcs(&s, n, r).unwrap();
        let b = verify::check_dbcs(&rotated, n, r).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn verified_at_r_implies_verified_at_r_plus_one(
        bits in prop::collection::vec(0u8..2, 2..12),
        n in 1u32..=4,
        r in 0u32..=2,
    ) {
        let s = CyclicSequence::new(2, bits).unwrap();
        let at_r = verify::check_dbcs(&s, n, r).unwrap();
        let at_r1 = verify::check_dbcs(&s, n, r + 1).unwrap();
        if at_r.verified {
            prop_assert!(at_r1.verified);
        }
    }

    #[test]
    fn ball_volume_matches_brute_force(q in 2u32..=3, n in 1u32..=8, r in 0u32..=3) {
        let r = r.min(n);
        let size = (q as u64).pow(n);
        let mut count = 0u128;
        for idx in 0..size {
            let mut x = idx;
            let mut weight = 0u32;
            for _ in 0..n {
                if x % q as u64 != 0 {
                    weight += 1;
                }
                x /= q as u64;
            }
            if weight <= r {
                count += 1;
            }
        }
        prop_assert_eq!(bounds::ball_volume(q, n, r).unwrap(), count);
    }

    #[test]
    fn merge_length_accounting(
        strings in prop::collection::vec(prop::collection::vec(0u8..2, 1..8), 1..7),
    ) {
        let (result, trace) = greedy_merge(&strings).unwrap();
        prop_assert_eq!(result.len(), trace.input_total - trace.total_overlap());
        // never longer than plain concatenation of the deduplicated inputs
        prop_assert!(result.len() <= trace.input_total);
        // every input window survives into the result
        for s in &strings {
            let found = (0..=result.len() - s.len())
                .any(|i| &result[i..i + s.len()] == s.as_slice());
            prop_assert!(found);
        }
    }

    #[test]
    fn linearize_preserves_window_multiset(
        bits in prop::collection::vec(0u8..2, 1..10),
        n in 1u32..=5,
    ) {
        let s = CyclicSequence::new(2, bits).unwrap();
        let string = linearize(&s, n);
        let mut linear = linear_windows(&string, n as usize);
        let mut cyclic = s.windows(n as usize);
        linear.sort();
        cyclic.sort();
        prop_assert_eq!(linear, cyclic);
    }

    #[test]
    fn fold_window_identity(
        bits in prop::collection::vec(0u8..2, 4..40),
        m in 1u32..=3,
        n in 1u32..=4,
    ) {
        // source length a multiple of n so rows wrap exactly
        let n_us = n as usize;
        let len = (bits.len() / n_us).max(1) * n_us;
        let s = CyclicSequence::new(2, bits[..len].to_vec()).unwrap();
        let plan = plan_fold(s.len(), m, n);
        prop_assert_eq!(plan.pad, 0);
        prop_assert_eq!(plan.rows, s.len() / n_us);
        prop_assert_eq!(plan.cols, 2 * n_us - 1);
        // construct rows directly and check the window bookkeeping without
        // any covering claim
        let rows = plan.rows;
        let cols = plan.cols;
        let cell = |i: usize, j: usize| s.get((i % rows) * n_us + 1 + j % cols);
        for j in 0..rows {
            let mut window = Vec::new();
            for a in 0..m as usize {
                for b in 0..n_us {
                    window.push(cell(j + a, b));
                }
            }
            let substring: Vec<u8> =
                (0..(m * n) as usize).map(|i| s.get(j * n_us + 1 + i)).collect();
            prop_assert_eq!(window, substring);
        }
    }

    #[test]
    fn interleave_slots(
        a_bits in prop::collection::vec(0u8..2, 2..6),
        b_bits in prop::collection::vec(0u8..2, 2..8),
    ) {
        fn gcd(mut a: usize, mut b: usize) -> usize {
            while b != 0 { (a, b) = (b, a % b); }
            a
        }
        prop_assume!(gcd(a_bits.len(), b_bits.len()) == 1);
        let a = CyclicSequence::new(2, a_bits).unwrap();
        let b = CyclicSequence::new(2, b_bits).unwrap();
        let u = interleave(&a, &b, 2, 2, 1, 1).unwrap();
        // whatever the reduced period, even slots follow a and odd slots b
        for i in 0..a.len() * b.len() {
            prop_assert_eq!(u.get(2 * i), a.get(i));
            prop_assert_eq!(u.get(2 * i + 1), b.get(i));
        }
    }
}

#[test]
fn de_bruijn_sequences_have_exactly_all_windows() {
    for n in 1..=10u32 {
        let s = seq1d::de_bruijn(2, n).unwrap();
        let mut windows = s.windows(n as usize);
        windows.sort();
        windows.dedup();
        assert_eq!(windows.len(), 1 << n);
    }
}

#[test]
fn window_counts_match_carrier_sizes() {
    let s = known_seed(7, 1, 1).unwrap();
    assert_eq!(s.windows(7).len(), s.len());
    let (array, _) = fold(&interleaved_12_2(), 3, 4, 2).unwrap();
    assert_eq!(array.windows(3, 4).len(), array.area());
}

fn interleaved_12_2() -> CyclicSequence {
    interleave(
        &known_seed(6, 1, 1).unwrap(),
        &known_seed(6, 1, 2).unwrap(),
        6,
        6,
        1,
        1,
    )
    .unwrap()
}

#[test]
fn constructed_sequences_pass_their_declared_checks() {
    // one representative per construction family
    let cases: Vec<(CyclicSequence, u32, u32)> = vec![
        (known_seed(5, 1, 1).unwrap(), 5, 1),
        (debruijn_padded(5, 1).unwrap(), 5, 0),
        (interleaved_12_2(), 12, 2),
    ];
    for (seq, n, r) in cases {
        let report = verify::check_dbcs(&seq, n, r).unwrap();
        assert!(report.verified, "({n},{r}) failed");
    }
}
