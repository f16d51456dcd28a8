//! Text file formats for sequences and arrays.
//!
//! Sequence file:
//! ```text
//! dbcs q=<q> n=<n> R=<R> k=<k>
//! <k symbols as single digits>
//! ```
//!
//! Array file:
//! ```text
//! dbca q=<q> m=<m> n=<n> R=<R> M=<M> N=<N>
//! <M lines of N digits>
//! ```
//!
//! UTF-8, `\n` line endings, no trailing whitespace. The digit encoding
//! limits the format to alphabets with q <= 10. Parsers reject malformed
//! headers with a message naming the offending field.

use std::path::Path;

use crate::grid::PeriodicArray;
use crate::seq::CyclicSequence;
use crate::{Error, Result};

/// A sequence together with its declared `(n, R)`.
#[derive(Debug, Clone)]
pub struct SequenceFile {
    pub seq: CyclicSequence,
    pub n: u32,
    pub r: u32,
}

/// An array together with its declared `(m, n, R)`.
#[derive(Debug, Clone)]
pub struct ArrayFile {
    pub array: PeriodicArray,
    pub m: u32,
    pub n: u32,
    pub r: u32,
}

fn parse_err(field: &str, detail: impl Into<String>) -> Error {
    Error::Parse { field: field.into(), detail: detail.into() }
}

fn expect_field(token: Option<&str>, key: &str) -> Result<u32> {
    let token = token.ok_or_else(|| parse_err(key, "missing header field"))?;
    let value = token
        .strip_prefix(&format!("{key}="))
        .ok_or_else(|| parse_err(key, format!("expected `{key}=<int>`, got {token:?}")))?;
    value
        .parse::<u32>()
        .map_err(|e| parse_err(key, format!("invalid integer {value:?}: {e}")))
}

fn check_q(q: u32) -> Result<()> {
    if !(2..=10).contains(&q) {
        return Err(parse_err("q", format!("text format supports 2 <= q <= 10, got {q}")));
    }
    Ok(())
}

fn parse_digit_line(line: &str, q: u32, field: &str) -> Result<Vec<u8>> {
    line.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) if d < q => Ok(d as u8),
            Some(d) => Err(parse_err(field, format!("symbol {d} out of range for q={q}"))),
            None => Err(parse_err(field, format!("expected digit, got {c:?}"))),
        })
        .collect()
}

pub fn render_sequence(seq: &CyclicSequence, n: u32, r: u32) -> Result<String> {
    check_q(seq.q())?;
    Ok(format!(
        "dbcs q={} n={} R={} k={}\n{}\n",
        seq.q(),
        n,
        r,
        seq.len(),
        seq.digits()
    ))
}

pub fn parse_sequence(text: &str) -> Result<SequenceFile> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err("header", "empty file"))?;
    let mut tokens = header.split(' ');
    match tokens.next() {
        Some("dbcs") => {}
        other => return Err(parse_err("header", format!("expected `dbcs`, got {other:?}"))),
    }
    let q = expect_field(tokens.next(), "q")?;
    check_q(q)?;
    let n = expect_field(tokens.next(), "n")?;
    let r = expect_field(tokens.next(), "R")?;
    let k = expect_field(tokens.next(), "k")?;
    if let Some(extra) = tokens.next() {
        return Err(parse_err("header", format!("unexpected trailing token {extra:?}")));
    }
    if n == 0 {
        return Err(parse_err("n", "window length must be at least 1"));
    }
    let body = lines.next().ok_or_else(|| parse_err("symbols", "missing symbol line"))?;
    let symbols = parse_digit_line(body, q, "symbols")?;
    if symbols.len() != k as usize {
        return Err(parse_err(
            "k",
            format!("header declares k={k} but found {} symbols", symbols.len()),
        ));
    }
    if let Some(extra) = lines.next() {
        if !extra.is_empty() {
            return Err(parse_err("symbols", format!("unexpected extra line {extra:?}")));
        }
    }
    Ok(SequenceFile { seq: CyclicSequence::new(q, symbols)?, n, r })
}

pub fn read_sequence(path: &Path) -> Result<SequenceFile> {
    parse_sequence(&std::fs::read_to_string(path)?)
}

pub fn write_sequence(path: &Path, seq: &CyclicSequence, n: u32, r: u32) -> Result<()> {
    std::fs::write(path, render_sequence(seq, n, r)?)?;
    Ok(())
}

pub fn render_array(array: &PeriodicArray, m: u32, n: u32, r: u32) -> Result<String> {
    check_q(array.q())?;
    let mut out = format!(
        "dbca q={} m={} n={} R={} M={} N={}\n",
        array.q(),
        m,
        n,
        r,
        array.rows(),
        array.cols()
    );
    for row in array.digit_rows() {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_array(text: &str) -> Result<ArrayFile> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err("header", "empty file"))?;
    let mut tokens = header.split(' ');
    match tokens.next() {
        Some("dbca") => {}
        other => return Err(parse_err("header", format!("expected `dbca`, got {other:?}"))),
    }
    let q = expect_field(tokens.next(), "q")?;
    check_q(q)?;
    let m = expect_field(tokens.next(), "m")?;
    let n = expect_field(tokens.next(), "n")?;
    let r = expect_field(tokens.next(), "R")?;
    let rows = expect_field(tokens.next(), "M")?;
    let cols = expect_field(tokens.next(), "N")?;
    if let Some(extra) = tokens.next() {
        return Err(parse_err("header", format!("unexpected trailing token {extra:?}")));
    }
    if m == 0 || n == 0 {
        return Err(parse_err("m", "window sides must be at least 1"));
    }
    let mut cells = Vec::with_capacity(rows as usize * cols as usize);
    for i in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| parse_err("M", format!("header declares M={rows} rows, found {i}")))?;
        let row = parse_digit_line(line, q, "cells")?;
        if row.len() != cols as usize {
            return Err(parse_err(
                "N",
                format!("header declares N={cols} but row {i} has {} symbols", row.len()),
            ));
        }
        cells.extend(row);
    }
    if let Some(extra) = lines.next() {
        if !extra.is_empty() {
            return Err(parse_err("cells", format!("unexpected extra line {extra:?}")));
        }
    }
    Ok(ArrayFile {
        array: PeriodicArray::new(q, rows as usize, cols as usize, cells)?,
        m,
        n,
        r,
    })
}

pub fn read_array(path: &Path) -> Result<ArrayFile> {
    parse_array(&std::fs::read_to_string(path)?)
}

pub fn write_array(path: &Path, array: &PeriodicArray, m: u32, n: u32, r: u32) -> Result<()> {
    std::fs::write(path, render_array(array, m, n, r)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_round_trip() {
        let s = CyclicSequence::from_bits("10100011").unwrap();
        let text = render_sequence(&s, 5, 1).unwrap();
        assert_eq!(text, "dbcs q=2 n=5 R=1 k=8\n10100011\n");
        let parsed = parse_sequence(&text).unwrap();
        assert_eq!(parsed.seq, s);
        assert_eq!((parsed.n, parsed.r), (5, 1));
    }

    #[test]
    fn array_round_trip() {
        let a = PeriodicArray::new(2, 2, 3, vec![0, 0, 1, 0, 1, 1]).unwrap();
        let text = render_array(&a, 2, 2, 1).unwrap();
        assert_eq!(text, "dbca q=2 m=2 n=2 R=1 M=2 N=3\n001\n011\n");
        let parsed = parse_array(&text).unwrap();
        assert_eq!(parsed.array, a);
    }

    #[test]
    fn malformed_headers_name_the_field() {
        let err = parse_sequence("dbcs q=2 n=5 R=x k=8\n10100011\n").unwrap_err();
        match err {
            Error::Parse { field, .. } => assert_eq!(field, "R"),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_sequence("dbcs q=2 n=5 k=8\n10100011\n").unwrap_err();
        match err {
            Error::Parse { field, .. } => assert_eq!(field, "R"),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_sequence("dbcs q=2 n=5 R=1 k=9\n10100011\n").unwrap_err();
        match err {
            Error::Parse { field, .. } => assert_eq!(field, "k"),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_array("dbca q=2 m=2 n=2 R=1 M=2 N=4\n001\n011\n").unwrap_err();
        match err {
            Error::Parse { field, .. } => assert_eq!(field, "N"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_wrong_tag() {
        assert!(parse_sequence("dbca q=2 n=5 R=1 k=8\n10100011\n").is_err());
    }
}
