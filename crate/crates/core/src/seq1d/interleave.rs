//! Interleaving of two covering sequences.

use crate::seq::CyclicSequence;
use crate::{Error, Result};

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Alternate the symbols of `s` and `t` (coprime lengths, window lengths
/// within one of each other) until the joint state returns to its start,
/// and reduce the resulting cyclic word to its minimal period.
///
/// The alternating stream revisits its joint start after lcm(k1, k2) pairs,
/// so the constructed word has 2*k1*k2 symbols unless the symbol content is
/// itself periodic. The declared parameters of the result are
/// `(ns + nt, rs + rt)`; callers verify post hoc.
pub fn interleave(
    s: &CyclicSequence,
    t: &CyclicSequence,
    ns: u32,
    nt: u32,
    _rs: u32,
    _rt: u32,
) -> Result<CyclicSequence> {
    if s.q() != t.q() {
        return Err(Error::MixedAlphabets(s.q(), t.q()));
    }
    let (k1, k2) = (s.len(), t.len());
    if gcd(k1, k2) != 1 {
        return Err(Error::NotCoprime(k1, k2));
    }
    if ns.abs_diff(nt) > 1 {
        return Err(Error::WindowLengthConstraint(ns, nt));
    }
    let pairs = k1 * k2;
    let mut stream = Vec::with_capacity(2 * pairs);
    for i in 0..pairs {
        stream.push(s.get(i));
        stream.push(t.get(i));
    }
    let full = CyclicSequence::new(s.q(), stream)?;
    let p = full.minimal_period();
    if p == full.len() {
        Ok(full)
    } else {
        CyclicSequence::new(s.q(), full.symbols()[..p].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq1d::debruijn::debruijn_padded;
    use crate::seq1d::seeds::known_seed;
    use crate::verify;

    #[test]
    fn slot_structure() {
        let s = known_seed(5, 1, 1).unwrap();
        let t = debruijn_padded(5, 1).unwrap();
        let u = interleave(&s, &t, 5, 5, 1, 0).unwrap();
        // even slots cycle through s, odd slots through t
        for i in 0..u.len() / 2 {
            assert_eq!(u.get(2 * i), s.get(i));
            assert_eq!(u.get(2 * i + 1), t.get(i));
        }
    }

    #[test]
    fn ten_one_stream_verifies() {
        let s = known_seed(5, 1, 1).unwrap();
        let t = debruijn_padded(5, 1).unwrap();
        let u = interleave(&s, &t, 5, 5, 1, 0).unwrap();
        assert_eq!(u.len(), 2 * 8 * 33);
        let report = verify::check_dbcs(&u, 10, 1).unwrap();
        assert!(report.verified);
        assert_eq!(report.achieved_radius, 1);
    }

    #[test]
    fn rejects_common_factor_and_window_gap() {
        let a = CyclicSequence::from_bits("0101").unwrap();
        let b = CyclicSequence::from_bits("011011").unwrap();
        assert!(matches!(
            interleave(&a, &b, 3, 3, 1, 1),
            Err(Error::NotCoprime(4, 6))
        ));
        let c = CyclicSequence::from_bits("01101").unwrap();
        assert!(matches!(
            interleave(&a, &c, 3, 5, 1, 1),
            Err(Error::WindowLengthConstraint(3, 5))
        ));
    }

    #[test]
    fn degenerate_periodic_content_collapses() {
        // all-zeros of length 2 alternated with all-zeros of length 3 is the
        // all-zeros word, minimal period 1
        let a = CyclicSequence::new(2, vec![0, 0]).unwrap();
        let b = CyclicSequence::new(2, vec![0, 0, 0]).unwrap();
        let u = interleave(&a, &b, 1, 1, 1, 1).unwrap();
        assert_eq!(u.len(), 1);
    }
}
