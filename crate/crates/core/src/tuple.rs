//! Canonical window encoding.

use crate::{Error, Result};

/// A window shape and claimed covering radius: `m` rows (1 for sequences),
/// `n` columns, radius `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    pub m: u32,
    pub n: u32,
    pub r: u32,
}

impl WindowSpec {
    pub fn new(m: u32, n: u32, r: u32) -> Self {
        assert!(m >= 1 && n >= 1, "window sides must be at least 1");
        Self { m, n, r }
    }

    pub fn area(&self) -> usize {
        self.m as usize * self.n as usize
    }
}

/// Bijection between tuples in `{0,..,q-1}^len` and integers
/// `0 .. q^len - 1`. Windows flatten row-major with the most significant
/// symbol first, so a folded row and its source substring share one index.
#[derive(Debug, Clone, Copy)]
pub struct TupleIndex {
    q: u32,
    len: usize,
}

impl TupleIndex {
    pub fn new(q: u32, len: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall(q));
        }
        if len == 0 {
            return Err(Error::Parse {
                field: "len".into(),
                detail: "tuple length must be at least 1".into(),
            });
        }
        // indices must fit u64
        let mut size: u128 = 1;
        for _ in 0..len {
            size = size.checked_mul(q as u128).ok_or(Error::ArithmeticOverflow)?;
        }
        if size > u64::MAX as u128 {
            return Err(Error::ArithmeticOverflow);
        }
        Ok(Self { q, len })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of tuples, `q^len`.
    pub fn size(&self) -> u64 {
        (self.q as u64).pow(self.len as u32)
    }

    pub fn encode(&self, tuple: &[u8]) -> u64 {
        debug_assert_eq!(tuple.len(), self.len);
        tuple
            .iter()
            .fold(0u64, |acc, &s| acc * self.q as u64 + s as u64)
    }

    pub fn decode(&self, mut index: u64) -> Vec<u8> {
        let mut out = vec![0u8; self.len];
        for slot in out.iter_mut().rev() {
            *slot = (index % self.q as u64) as u8;
            index /= self.q as u64;
        }
        out
    }
}
