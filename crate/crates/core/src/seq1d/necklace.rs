//! Rotation classes of cyclic codes and the strings that realize them.

use std::collections::BTreeMap;

use super::gf2::{poly_mul, Gf2Polynomial};
use crate::{Error, Result};

/// One rotation-equivalence class: the lexicographically least rotation and
/// the number of distinct rotations (a divisor of the code length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecklaceClass {
    pub representative: Vec<u8>,
    pub size: usize,
}

/// Decomposition of a cyclic code's codewords into rotation classes,
/// ordered by representative.
#[derive(Debug, Clone)]
pub struct NecklaceClassProfile {
    pub code_length: u32,
    pub classes: Vec<NecklaceClass>,
}

impl NecklaceClassProfile {
    /// Class count per class size.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for class in &self.classes {
            *out.entry(class.size).or_insert(0) += 1;
        }
        out
    }

    pub fn total_codewords(&self) -> u128 {
        self.classes.iter().map(|c| c.size as u128).sum()
    }
}

fn word_bits(mask: u64, n: u32) -> Vec<u8> {
    (0..n).map(|i| ((mask >> i) & 1) as u8).collect()
}

/// Enumerate the codewords `m(x) * g(x)` of the cyclic code generated by
/// `g` (which must divide `x^n + 1`) and group them by rotation.
pub fn cyclic_code_classes(g: &Gf2Polynomial, n: u32, budget: u128) -> Result<NecklaceClassProfile> {
    if n == 0 || n > 32 {
        return Err(Error::Unsupported(format!(
            "cyclic code length must be in 1..=32, got {n}"
        )));
    }
    if g.degree() > n || !g.divides_x_pow_plus_one(n) {
        return Err(Error::NotADivisor { g: g.to_string(), n });
    }
    let dim = n - g.degree();
    let count: u128 = 1u128 << dim;
    if count > budget {
        return Err(Error::BudgetExceeded { required: count, budget });
    }

    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = vec![false; 1usize << n];
    let mut classes = Vec::new();
    for m in 0..(1u64 << dim) {
        let cw = poly_mul(m, g.mask());
        debug_assert!(cw <= full);
        if seen[cw as usize] {
            continue;
        }
        // walk the rotation orbit: multiply by x modulo x^n + 1
        let mut size = 0usize;
        let mut rep_mask = cw;
        let mut rot = cw;
        loop {
            seen[rot as usize] = true;
            size += 1;
            // track the rotation whose symbol word (s_0 = bit 0 first) is
            // lexicographically least: bit-reverse ordering, cheapest done
            // by comparing candidate words directly
            if word_bits(rot, n) < word_bits(rep_mask, n) {
                rep_mask = rot;
            }
            rot = ((rot << 1) | (rot >> (n - 1))) & full;
            if rot == cw {
                break;
            }
        }
        classes.push(NecklaceClass { representative: word_bits(rep_mask, n), size });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    let profile = NecklaceClassProfile { code_length: n, classes };
    debug_assert_eq!(profile.total_codewords(), count);
    Ok(profile)
}

/// For each class of size `d` with representative `r`, the string
/// `r_0 .. r_{n-1} r_0 .. r_{d-2}` of length `n + d - 1`: its `n`-windows
/// are exactly the class's `d` codewords.
pub fn class_strings(profile: &NecklaceClassProfile) -> Vec<Vec<u8>> {
    let n = profile.code_length as usize;
    profile
        .classes
        .iter()
        .map(|class| {
            let mut s = Vec::with_capacity(n + class.size - 1);
            s.extend_from_slice(&class.representative);
            s.extend_from_slice(&class.representative[..class.size - 1]);
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::DEFAULT_BUDGET;
    use std::collections::BTreeSet;

    #[test]
    fn hamming_15_profile() {
        let g = Gf2Polynomial::parse("x4+x+1").unwrap();
        let profile = cyclic_code_classes(&g, 15, DEFAULT_BUDGET).unwrap();
        let counts = profile.counts();
        assert_eq!(counts.get(&15), Some(&134));
        assert_eq!(counts.get(&5), Some(&6));
        assert_eq!(counts.get(&3), Some(&2));
        assert_eq!(counts.get(&1), Some(&2));
        assert_eq!(profile.total_codewords(), 2048);

        let strings = class_strings(&profile);
        assert_eq!(strings.len(), 144);
        let total: usize = strings.iter().map(Vec::len).sum();
        assert_eq!(total, 4064);
        let mut lengths: Vec<usize> = strings.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        assert_eq!(lengths.iter().filter(|&&l| l == 29).count(), 134);
        assert_eq!(lengths.iter().filter(|&&l| l == 19).count(), 6);
        assert_eq!(lengths.iter().filter(|&&l| l == 17).count(), 2);
        assert_eq!(lengths.iter().filter(|&&l| l == 15).count(), 2);
    }

    #[test]
    fn full_space_length_three() {
        let g = Gf2Polynomial::from_mask(1).unwrap();
        let profile = cyclic_code_classes(&g, 3, DEFAULT_BUDGET).unwrap();
        let counts = profile.counts();
        assert_eq!(counts.get(&3), Some(&2));
        assert_eq!(counts.get(&1), Some(&2));
    }

    #[test]
    fn repetition_code() {
        let g = Gf2Polynomial::parse("x4+x3+x2+x+1").unwrap();
        let profile = cyclic_code_classes(&g, 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(profile.counts(), BTreeMap::from([(1, 2)]));
        assert_eq!(profile.classes[0].representative, vec![0; 5]);
        assert_eq!(profile.classes[1].representative, vec![1; 5]);
    }

    #[test]
    fn rejects_non_divisor() {
        let g = Gf2Polynomial::parse("x4+x+1").unwrap();
        assert!(matches!(
            cyclic_code_classes(&g, 14, DEFAULT_BUDGET),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn representatives_are_least_rotations() {
        let g = Gf2Polynomial::parse("x4+x+1").unwrap();
        let profile = cyclic_code_classes(&g, 15, DEFAULT_BUDGET).unwrap();
        for class in &profile.classes {
            let n = class.representative.len();
            for r in 0..n {
                let rot: Vec<u8> = (0..n).map(|i| class.representative[(i + r) % n]).collect();
                assert!(class.representative <= rot);
            }
        }
    }

    #[test]
    fn strings_realize_exactly_the_code() {
        let g = Gf2Polynomial::parse("x4+x+1").unwrap();
        let profile = cyclic_code_classes(&g, 15, DEFAULT_BUDGET).unwrap();
        let n = 15usize;

        // expected codeword set via the generator sweep
        let mut expected = BTreeSet::new();
        for m in 0..(1u64 << 11) {
            expected.insert(word_bits(poly_mul(m, g.mask()), 15));
        }

        let mut got = BTreeSet::new();
        for (string, class) in class_strings(&profile).iter().zip(&profile.classes) {
            let windows: Vec<Vec<u8>> =
                (0..=string.len() - n).map(|i| string[i..i + n].to_vec()).collect();
            assert_eq!(windows.len(), class.size);
            let distinct: BTreeSet<_> = windows.iter().cloned().collect();
            assert_eq!(distinct.len(), class.size);
            got.extend(distinct);
        }
        assert_eq!(got, expected);
    }
}
