//! Reproduction harnesses for the summary tables: interleaved sequence
//! lengths (per `(n, R)`) and small covering-array sizes.
//!
//! Each row reports the published value next to the value this crate's
//! constructions actually achieve, with an exact verification verdict.
//! Entries whose inputs cannot be derived from the stated constructions are
//! labeled unreproduced with the blocking gap named.

use std::time::Instant;

use crate::arr2d::{self, SearchOutcome};
use crate::assemble;
use crate::seq::CyclicSequence;
use crate::seq1d::{self, Gf2Polynomial};
use crate::verify::{self, CoverageReport};
use crate::Result;

#[derive(Debug, Clone)]
pub struct TableRow {
    pub params: String,
    pub paper_value: String,
    pub achieved: String,
    pub verified: bool,
    pub seconds: f64,
}

impl TableRow {
    pub fn matches_paper(&self) -> bool {
        self.paper_value == self.achieved
    }
}

/// Fixed TSV schema: params, paper_value, achieved_value, verified, seconds.
pub fn render_tsv(rows: &[TableRow]) -> String {
    let mut out = String::from("params\tpaper_value\tachieved_value\tverified\tseconds\n");
    for row in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{:.3}\n",
            row.params, row.paper_value, row.achieved, row.verified, row.seconds
        ));
    }
    out
}

/// Outcome of one interleaving-table entry.
#[derive(Debug)]
pub enum Table1Outcome {
    Built { seq: CyclicSequence, report: CoverageReport },
    Unreproduced(&'static str),
}

/// Input pair for an interleaving entry: (sequence, window, radius) each.
type Pair = ((CyclicSequence, u32, u32), (CyclicSequence, u32, u32));

fn seed(n: u32, r: u32, v: u32) -> Result<(CyclicSequence, u32, u32)> {
    Ok((seq1d::known_seed(n, r, v)?, n, r))
}

fn padded(n: u32, pad: usize) -> Result<(CyclicSequence, u32, u32)> {
    Ok((seq1d::debruijn_padded(n, pad)?, n, 0))
}

/// The 2-periodic word `10`: its two length-5 windows are complementary, and
/// their radius-2 balls tile the 5-tuple space, so it is a (5, 2) covering
/// sequence. Identified as the missing input for the n = 9, 10 radius-2
/// interleaving entries.
fn alternating_5_2() -> Result<(CyclicSequence, u32, u32)> {
    Ok((CyclicSequence::new(2, vec![1, 0])?, 5, 2))
}

fn table1_inputs(n: u32, r: u32) -> Result<std::result::Result<Pair, &'static str>> {
    let pair = match (n, r) {
        (9, 1) => (seed(5, 1, 1)?, padded(4, 1)?),
        (10, 1) => (seed(5, 1, 1)?, padded(5, 1)?),
        (11, 1) => (seed(6, 1, 1)?, padded(5, 3)?),
        (12, 1) => (seed(6, 1, 1)?, padded(6, 1)?),
        (13, 1) => (padded(6, 1)?, seed(7, 1, 1)?),
        (14, 1) => (seed(7, 1, 1)?, padded(7, 1)?),
        (15, 1) => (seed(8, 1, 1)?, padded(7, 1)?),
        (16, 1) => (seed(8, 1, 1)?, padded(8, 1)?),
        (9, 2) => (alternating_5_2()?, padded(4, 1)?),
        (10, 2) => (alternating_5_2()?, padded(5, 1)?),
        (12, 2) => (seed(6, 1, 1)?, seed(6, 1, 2)?),
        (13, 2) => (seed(6, 1, 1)?, seed(7, 1, 2)?),
        (14, 2) => (seed(7, 1, 1)?, seed(7, 1, 2)?),
        (11, 2) => {
            return Ok(Err("no derivable input pair: the only coprime split 8*15 needs a (6,1) sequence of length 15, which no stated construction yields"));
        }
        (15, 2) | (16, 2) => {
            return Ok(Err("needs an (8,1) sequence of length 35; the known optimal one has length 32 and no stated construction stretches it"));
        }
        (17..=20, 1) | (17..=20, 2) => {
            return Ok(Err("inputs come from sequences announced without construction (out of scope)"));
        }
        _ => return Ok(Err("outside the table range")),
    };
    Ok(Ok(pair))
}

/// Published interleaving lengths per `(n, R)`.
pub fn table1_paper_value(n: u32, r: u32) -> Option<u64> {
    let value = match (n, r) {
        (9, 1) => 136,
        (10, 1) => 264,
        (11, 1) => 420,
        (12, 1) => 780,
        (13, 1) => 1430,
        (14, 1) => 2838,
        (15, 1) => 4128,
        (16, 1) => 8224,
        (17, 1) => 25856,
        (18, 1) => 51712,
        (19, 1) => 103424,
        (20, 1) => 184500,
        (9, 2) => 34,
        (10, 2) => 66,
        (11, 2) => 120,
        (12, 2) => 204,
        (13, 2) => 300,
        (14, 2) => 550,
        (15, 2) => 770,
        (16, 2) => 1120,
        (17, 2) => 3535,
        (18, 2) => 10260,
        (19, 2) => 19494,
        (20, 2) => 32580,
        _ => return None,
    };
    Some(value)
}

/// Build and verify one interleaving-table entry.
pub fn table1_entry(n: u32, r: u32, budget: u128) -> Result<Table1Outcome> {
    match table1_inputs(n, r)? {
        Err(reason) => Ok(Table1Outcome::Unreproduced(reason)),
        Ok(((a, na, ra), (b, nb, rb))) => {
            debug_assert_eq!(na + nb, n);
            debug_assert_eq!(ra + rb, r);
            let seq = seq1d::interleave(&a, &b, na, nb, ra, rb)?;
            let report = verify::check_dbcs_with(&seq, n, r, verify::DEFAULT_WITNESS_CAP, budget)?;
            Ok(Table1Outcome::Built { seq, report })
        }
    }
}

/// All interleaving rows, n = 9..=20, R = 1 then 2.
pub fn table1_rows(budget: u128) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for r in [1u32, 2] {
        for n in 9..=20u32 {
            let paper = table1_paper_value(n, r).expect("in range");
            let start = Instant::now();
            let row = match table1_entry(n, r, budget) {
                Ok(Table1Outcome::Built { seq, report }) => TableRow {
                    params: format!("n={n} R={r}"),
                    paper_value: paper.to_string(),
                    achieved: seq.len().to_string(),
                    verified: report.verified,
                    seconds: start.elapsed().as_secs_f64(),
                },
                Ok(Table1Outcome::Unreproduced(reason)) => TableRow {
                    params: format!("n={n} R={r}"),
                    paper_value: paper.to_string(),
                    achieved: format!("unreproduced({reason})"),
                    verified: false,
                    seconds: start.elapsed().as_secs_f64(),
                },
                Err(err) => TableRow {
                    params: format!("n={n} R={r}"),
                    paper_value: paper.to_string(),
                    achieved: format!("error({err})"),
                    verified: false,
                    seconds: start.elapsed().as_secs_f64(),
                },
            };
            rows.push(row);
        }
    }
    rows
}

/// Named sequence sources for the array table.
fn built_sequence(n: u32, r: u32) -> Result<CyclicSequence> {
    match table1_entry(n, r, verify::DEFAULT_BUDGET)? {
        Table1Outcome::Built { seq, .. } => Ok(seq),
        Table1Outcome::Unreproduced(reason) => Err(crate::Error::Unsupported(reason.into())),
    }
}

/// Merged register-pair sequence: a (10, 1) covering sequence from the
/// degree-7 polynomial with vanishing low coefficients.
fn lfsr_ten_one() -> Result<CyclicSequence> {
    let p = Gf2Polynomial::parse("x7+x6+1")?;
    let code = seq1d::lfsr_dbcsc(&p, 1)?;
    let (seq, _, _) = assemble::dbcsc_to_dbcs(&code)?;
    Ok(seq)
}

enum Recipe {
    Search { rows: usize, cols: usize },
    Fold { src: fn() -> Result<CyclicSequence>, m: u32, n: u32, r: u32 },
    TileFold { src: fn() -> Result<CyclicSequence>, m: u32, n: u32, tx: u32, ty: u32, r: u32 },
    Shift { n: u32, r: u32, variant: u32 },
    Unreproduced(&'static str),
}

fn seq_9_1() -> Result<CyclicSequence> {
    built_sequence(9, 1)
}
fn seq_10_1() -> Result<CyclicSequence> {
    built_sequence(10, 1)
}
fn seq_12_1() -> Result<CyclicSequence> {
    built_sequence(12, 1)
}
fn seq_12_2() -> Result<CyclicSequence> {
    built_sequence(12, 2)
}
fn seed_8_1() -> Result<CyclicSequence> {
    seq1d::known_seed(8, 1, 1)
}

/// Array-table rows: every published `(m, n, R) -> M x N` cell with the
/// construction that reaches (or approaches) it, plus shift-derived extras.
pub fn table2_rows(budget: u128, search_seed: u64) -> Vec<TableRow> {
    use Recipe::*;
    // (params, paper MxN, recipe)
    let entries: Vec<(&str, &str, Recipe)> = vec![
        ("(2,2,1)", "2x3", Search { rows: 2, cols: 3 }),
        ("(2,2,1)", "3x2", Search { rows: 3, cols: 2 }),
        ("(2,2,1)", "3x3", Search { rows: 3, cols: 3 }),
        ("(2,3,1)", "4x3", Search { rows: 4, cols: 3 }),
        ("(2,3,1)", "5x3", Search { rows: 5, cols: 3 }),
        ("(2,3,1)", "4x4", Search { rows: 4, cols: 4 }),
        ("(2,3,1)", "4x5", Search { rows: 4, cols: 5 }),
        ("(2,3,1)", "5x4", Search { rows: 5, cols: 4 }),
        ("(2,4,1)", "3x16", Fold { src: seed_8_1, m: 4, n: 2, r: 1 }),
        ("(2,4,1)", "8x7", Fold { src: seed_8_1, m: 2, n: 4, r: 1 }),
        ("(2,5,1)", "3x132", Fold { src: seq_10_1, m: 5, n: 2, r: 1 }),
        ("(2,5,1)", "51x9", Fold { src: lfsr_ten_one, m: 2, n: 5, r: 1 }),
        ("(2,6,1)", "3x390", Fold { src: seq_12_1, m: 6, n: 2, r: 1 }),
        ("(2,6,1)", "130x11", Fold { src: seq_12_1, m: 2, n: 6, r: 1 }),
        ("(3,3,1)", "5x44", Fold { src: seq_9_1, m: 3, n: 3, r: 1 }),
        ("(3,3,1)", "44x5", Fold { src: seq_9_1, m: 3, n: 3, r: 1 }),
        ("(3,3,1)", "12x15", TileFold { src: seq_9_1, m: 3, n: 3, tx: 3, ty: 1, r: 1 }),
        ("(3,4,1)", "5x260", Fold { src: seq_12_1, m: 4, n: 3, r: 1 }),
        ("(3,4,1)", "195x7", Fold { src: seq_12_1, m: 3, n: 4, r: 1 }),
        ("(2,2,2)", "2x2", Search { rows: 2, cols: 2 }),
        ("(2,3,2)", "3x2", Search { rows: 3, cols: 2 }),
        ("(2,3,2)", "3x3", Search { rows: 3, cols: 3 }),
        ("(2,4,2)", "4x4", Search { rows: 4, cols: 4 }),
        ("(2,4,2)", "4x5", Search { rows: 4, cols: 5 }),
        ("(2,4,2)", "5x4", Search { rows: 5, cols: 4 }),
        ("(2,5,2)", "3x19", Unreproduced("needs a (10,2) sequence of length 38 known only from computer search")),
        ("(2,5,2)", "8x9", Unreproduced("no stated construction reaches 8x9")),
        ("(2,5,2)", "10x11", Unreproduced("no stated construction reaches 10x11")),
        ("(2,5,2)", "-", Shift { n: 5, r: 1, variant: 1 }),
        ("(2,6,2)", "3x102", Fold { src: seq_12_2, m: 6, n: 2, r: 2 }),
        ("(2,6,2)", "12x13", Shift { n: 6, r: 1, variant: 1 }),
        ("(2,6,2)", "34x11", Fold { src: seq_12_2, m: 2, n: 6, r: 2 }),
        ("(2,7,2)", "-", Shift { n: 7, r: 1, variant: 1 }),
        ("(3,3,2)", "5x6", Search { rows: 5, cols: 6 }),
        ("(3,3,2)", "5x7", Search { rows: 5, cols: 7 }),
        ("(3,3,2)", "6x5", Search { rows: 6, cols: 5 }),
        ("(3,3,2)", "7x5", Search { rows: 7, cols: 5 }),
        ("(3,4,2)", "5x68", Fold { src: seq_12_2, m: 4, n: 3, r: 2 }),
        ("(3,4,2)", "51x7", Fold { src: seq_12_2, m: 3, n: 4, r: 2 }),
    ];

    let mut rows = Vec::new();
    for (params, paper, recipe) in entries {
        let start = Instant::now();
        let (m, n, r) = parse_params(params);
        let (achieved, verified) = match recipe {
            Search { rows: ar, cols: ac } => {
                match arr2d::exhaustive_search(2, m, n, r, ar, ac, search_seed, 200_000) {
                    Ok(SearchOutcome::Found(a)) => (format!("{}x{}", a.rows(), a.cols()), true),
                    Ok(SearchOutcome::NoneExists) => ("none-exists".into(), false),
                    Ok(SearchOutcome::Unknown { trials }) => {
                        (format!("unknown-after-{trials}-trials"), false)
                    }
                    Err(e) => (format!("error({e})"), false),
                }
            }
            Fold { src, m: fm, n: fn_, r: fr } => match src().and_then(|s| {
                arr2d::fold::fold_with(&s, fm, fn_, fr, verify::DEFAULT_WITNESS_CAP, budget)
            }) {
                Ok((a, report)) => (format!("{}x{}", a.rows(), a.cols()), report.verified),
                Err(e) => (format!("error({e})"), false),
            },
            TileFold { src, m: fm, n: fn_, tx, ty, r: fr } => match src().and_then(|s| {
                arr2d::fold::tile_fold_with(
                    &s,
                    fm,
                    fn_,
                    tx,
                    ty,
                    fr,
                    verify::DEFAULT_WITNESS_CAP,
                    budget,
                )
            }) {
                Ok((a, report)) => (format!("{}x{}", a.rows(), a.cols()), report.verified),
                Err(e) => (format!("error({e})"), false),
            },
            Shift { n: sn, r: sr, variant } => {
                match seq1d::known_seed(sn, sr, variant)
                    .and_then(|s| arr2d::shift::shift_construct(&s, sn, sr))
                {
                    Ok((a, report)) => (format!("{}x{}", a.rows(), a.cols()), report.verified),
                    Err(e) => (format!("error({e})"), false),
                }
            }
            Unreproduced(reason) => (format!("unreproduced({reason})"), false),
        };
        rows.push(TableRow {
            params: params.to_string(),
            paper_value: paper.to_string(),
            achieved,
            verified,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    rows
}

fn parse_params(params: &str) -> (u32, u32, u32) {
    let inner = params.trim_matches(['(', ')']);
    let parts: Vec<u32> = inner.split(',').map(|p| p.parse().unwrap()).collect();
    (parts[0], parts[1], parts[2])
}
