//! Doubly periodic arrays.

use crate::{Error, Result};

/// A doubly periodic `M x N` grid over `{0, .., q-1}`: row and column indices
/// are taken modulo `M` and `N` (a torus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicArray {
    q: u8,
    rows: usize,
    cols: usize,
    cells: Vec<u8>, // row-major
}

impl PeriodicArray {
    pub fn new(q: u32, rows: usize, cols: usize, cells: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall(q));
        }
        if q > 255 {
            return Err(Error::Unsupported(format!("alphabet size {q} exceeds 255")));
        }
        if rows == 0 || cols == 0 || cells.len() != rows * cols {
            return Err(Error::Parse {
                field: "cells".into(),
                detail: format!("expected {rows}x{cols} = {} cells, got {}", rows * cols, cells.len()),
            });
        }
        if let Some(&bad) = cells.iter().find(|&&s| u32::from(s) >= q) {
            return Err(Error::SymbolOutOfRange { value: bad.into(), q });
        }
        Ok(Self { q: q as u8, rows, cols, cells })
    }

    /// Build from row closures; used by the 2-D constructors.
    pub fn from_fn(q: u32, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u8) -> Result<Self> {
        let mut cells = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                cells.push(f(i, j));
            }
        }
        Self::new(q, rows, cols, cells)
    }

    pub fn q(&self) -> u32 {
        self.q.into()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// Cell at `(i mod M, j mod N)`.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.cells[(i % self.rows) * self.cols + (j % self.cols)]
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// All `M * N` windows of size `m x n`, flattened row-major, in row-major
    /// order of their upper-left corner.
    pub fn windows(&self, m: usize, n: usize) -> Vec<Vec<u8>> {
        assert!(m >= 1 && n >= 1, "window sides must be at least 1");
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let mut w = Vec::with_capacity(m * n);
                for a in 0..m {
                    for b in 0..n {
                        w.push(self.get(i + a, j + b));
                    }
                }
                out.push(w);
            }
        }
        out
    }

    /// Rows rendered as digit strings (q <= 10).
    pub fn digit_rows(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| char::from_digit(self.get(i, j).into(), 10).expect("q <= 10"))
                    .collect()
            })
            .collect()
    }
}
