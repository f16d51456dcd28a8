//! Cyclic sequences and sequence codes.

use crate::{Error, Result};

/// A cyclic word over the alphabet `{0, .., q-1}` with period `k`.
///
/// Windows wrap: a window longer than the period reads the symbols repeatedly
/// (indices mod `k`), so the all-zeros sequence of period 1 contributes the
/// all-zeros `n`-tuple for every `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSequence {
    q: u8,
    symbols: Vec<u8>,
}

impl CyclicSequence {
    pub fn new(q: u32, symbols: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall(q));
        }
        if q > 255 {
            return Err(Error::Unsupported(format!("alphabet size {q} exceeds 255")));
        }
        if symbols.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&bad) = symbols.iter().find(|&&s| u32::from(s) >= q) {
            return Err(Error::SymbolOutOfRange { value: bad.into(), q });
        }
        Ok(Self { q: q as u8, symbols })
    }

    /// Binary sequence from a string of `0`/`1` digits.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let symbols = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(Error::Parse {
                    field: "symbols".into(),
                    detail: format!("expected binary digit, got {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(2, symbols)
    }

    pub fn q(&self) -> u32 {
        self.q.into()
    }

    /// Period `k`.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty symbol lists
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Symbol at position `i mod k`.
    pub fn get(&self, i: usize) -> u8 {
        self.symbols[i % self.symbols.len()]
    }

    /// All `k` windows of length `n`, in order of starting position.
    /// Duplicates are preserved; callers deduplicate.
    pub fn windows(&self, n: usize) -> Vec<Vec<u8>> {
        assert!(n >= 1, "window length must be at least 1");
        let k = self.symbols.len();
        (0..k)
            .map(|i| (0..n).map(|j| self.symbols[(i + j) % k]).collect())
            .collect()
    }

    /// Cyclic left shift by `j` positions.
    pub fn rotate(&self, j: usize) -> Self {
        let k = self.symbols.len();
        let symbols = (0..k).map(|i| self.symbols[(i + j) % k]).collect();
        Self { q: self.q, symbols }
    }

    /// Symbol-wise complement `s -> (q-1) - s`.
    pub fn complement(&self) -> Self {
        let symbols = self.symbols.iter().map(|&s| self.q - 1 - s).collect();
        Self { q: self.q, symbols }
    }

    /// Smallest `p` dividing `k` with `s[i] = s[i mod p]` for all `i`.
    pub fn minimal_period(&self) -> usize {
        let k = self.symbols.len();
        (1..=k)
            .find(|&p| {
                k % p == 0 && (p..k).all(|i| self.symbols[i] == self.symbols[i - p])
            })
            .unwrap_or(k)
    }

    /// Digit string (one character per symbol, valid for q <= 10).
    pub fn digits(&self) -> String {
        self.symbols
            .iter()
            .map(|&s| char::from_digit(s.into(), 10).expect("q <= 10"))
            .collect()
    }
}

/// A finite set of cyclic sequences over one alphabet, declared as an
/// `(n, R)` covering-sequence code.
#[derive(Debug, Clone)]
pub struct SequenceCode {
    members: Vec<CyclicSequence>,
    window: u32,
    radius: u32,
}

impl SequenceCode {
    pub fn new(members: Vec<CyclicSequence>, window: u32, radius: u32) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::EmptyCode);
        };
        let q = first.q();
        if let Some(bad) = members.iter().find(|m| m.q() != q) {
            return Err(Error::MixedAlphabets(q, bad.q()));
        }
        Ok(Self { members, window, radius })
    }

    pub fn members(&self) -> &[CyclicSequence] {
        &self.members
    }

    pub fn q(&self) -> u32 {
        self.members[0].q()
    }

    /// Declared window length `n`.
    pub fn window(&self) -> u32 {
        self.window
    }

    /// Declared covering radius `R`.
    pub fn radius(&self) -> u32 {
        self.radius
    }
}
