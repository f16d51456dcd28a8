//! Constructions and exact verification of de Bruijn covering sequences,
//! covering-sequence codes, and covering arrays.
//!
//! An `(n, R)` de Bruijn covering sequence (dBCS) is a cyclic word whose
//! length-`n` windows form a covering code of radius `R`: every `n`-tuple over
//! the alphabet lies within Hamming distance `R` of some window. An
//! `(m, n, R)` de Bruijn covering array (dBCA) is the two-dimensional
//! analogue: a doubly periodic `M x N` grid whose `m x n` windows cover the
//! whole tuple space. A de Bruijn covering sequences code (dBCSC) is a finite
//! set of cyclic sequences whose combined windows cover.
//!
//! The crate provides:
//!
//! - carrier types ([`CyclicSequence`], [`PeriodicArray`], [`SequenceCode`])
//!   and the canonical window encoding ([`TupleIndex`]);
//! - an exact covering-radius engine ([`verify`]) based on level-synchronized
//!   multi-source expansion over the full tuple space — never probabilistic;
//! - one-dimensional constructions ([`seq1d`]): LFSR pairs from primitive
//!   polynomials, rotation classes of cyclic codes, self-dual sequence
//!   families, interleaving, and padded de Bruijn sequences, plus a catalog
//!   of known short sequences;
//! - merging of sequence sets into single cyclic sequences ([`assemble`]);
//! - two-dimensional constructions ([`arr2d`]): folding, tiled folding, the
//!   shift construction, random arrays with patching, and exhaustive search
//!   at tiny sizes;
//! - reproduction harnesses for the summary tables ([`tables`]) and a text
//!   file format ([`fileio`]) shared with the `dbc` command-line tool.
//!
//! Every constructor re-verifies its output with the exact engine before
//! returning it; a construction that fails its own declared parameters is an
//! error, not a silently wrong value.

pub mod assemble;
pub mod arr2d;
pub mod bounds;
pub mod error;
pub mod fileio;
pub mod grid;
pub mod seq;
pub mod seq1d;
pub mod tables;
pub mod tuple;
pub mod verify;

pub use error::Error;
pub use grid::PeriodicArray;
pub use seq::{CyclicSequence, SequenceCode};
pub use tuple::{TupleIndex, WindowSpec};
pub use verify::{CoverageReport, DEFAULT_BUDGET};

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
