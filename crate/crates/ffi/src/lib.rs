//! C ABI for the covering-sequence library: opaque handles, status codes,
//! and a generated `include/dbc.h` header so other languages can bind.
//!
//! Conventions:
//! - every fallible call returns a [`DbcStatus`]; non-`Ok` calls leave a
//!   message retrievable with `dbc_last_error` (thread-local, valid until
//!   the next failing call on the same thread);
//! - handles are created through `*_parse`/constructor calls and must be
//!   released with the matching `*_free`;
//! - strings returned as `char*` are owned by the caller and released with
//!   `dbc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use dbc_core::arr2d;
use dbc_core::seq1d;
use dbc_core::verify;
use dbc_core::{fileio, CyclicSequence, Error, PeriodicArray};

/// Status codes shared by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbcStatus {
    Ok = 0,
    /// The object was built but failed exact verification.
    VerificationFailed = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BudgetExceeded = 4,
    IoError = 5,
    NullPointer = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> DbcStatus {
    match err {
        Error::VerificationFailed(_) => DbcStatus::VerificationFailed,
        Error::Parse { .. } => DbcStatus::ParseError,
        Error::BudgetExceeded { .. } => DbcStatus::BudgetExceeded,
        Error::Io(_) => DbcStatus::IoError,
        _ => DbcStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> DbcStatus {
    set_error(&err.to_string());
    status_of(&err)
}

/// A cyclic sequence plus its declared window length and radius.
pub struct DbcSequence {
    seq: CyclicSequence,
    n: u32,
    r: u32,
}

/// A doubly periodic array plus its declared window shape and radius.
pub struct DbcArray {
    array: PeriodicArray,
    m: u32,
    n: u32,
    r: u32,
}

/// An exact coverage report.
pub struct DbcReport {
    report: verify::CoverageReport,
}

unsafe fn cstr_arg<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn give_string(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(std::ptr::null_mut())
}

/// Version of the underlying library, static storage.
#[no_mangle]
pub extern "C" fn dbc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message describing the most recent failure on this thread.
#[no_mangle]
pub extern "C" fn dbc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must come from a `dbc_*` call returning `char*` and not yet be freed.
#[no_mangle]
pub unsafe extern "C" fn dbc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a sequence file (`dbcs` header plus digits).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_parse(
    text: *const c_char,
    out: *mut *mut DbcSequence,
) -> DbcStatus {
    if out.is_null() {
        set_error("out pointer is null");
        return DbcStatus::NullPointer;
    }
    let Some(text) = cstr_arg(text) else {
        set_error("text pointer is null or not UTF-8");
        return DbcStatus::NullPointer;
    };
    match fileio::parse_sequence(text) {
        Ok(f) => {
            *out = Box::into_raw(Box::new(DbcSequence { seq: f.seq, n: f.n, r: f.r }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Build a sequence from digit characters over alphabet `q`, declaring
/// window `n` and radius `r`.
///
/// # Safety
/// `digits` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_from_digits(
    q: u32,
    digits: *const c_char,
    n: u32,
    r: u32,
    out: *mut *mut DbcSequence,
) -> DbcStatus {
    if out.is_null() {
        set_error("out pointer is null");
        return DbcStatus::NullPointer;
    }
    let Some(digits) = cstr_arg(digits) else {
        set_error("digits pointer is null or not UTF-8");
        return DbcStatus::NullPointer;
    };
    let symbols: Result<Vec<u8>, Error> = digits
        .chars()
        .map(|c| {
            c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse {
                field: "symbols".into(),
                detail: format!("expected digit, got {c:?}"),
            })
        })
        .collect();
    let symbols = match symbols {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match CyclicSequence::new(q, symbols) {
        Ok(seq) => {
            *out = Box::into_raw(Box::new(DbcSequence { seq, n, r }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Catalog sequence for `(n, R)` (variant 1 unless stated otherwise).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dbc_seed(
    n: u32,
    r: u32,
    variant: u32,
    out: *mut *mut DbcSequence,
) -> DbcStatus {
    if out.is_null() {
        set_error("out pointer is null");
        return DbcStatus::NullPointer;
    }
    match seq1d::known_seed(n, r, variant) {
        Ok(seq) => {
            *out = Box::into_raw(Box::new(DbcSequence { seq, n, r }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Binary de Bruijn sequence of order `n` with `pad` extra zeros in its
/// zero run; declared `(n, 0)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dbc_debruijn(n: u32, pad: usize, out: *mut *mut DbcSequence) -> DbcStatus {
    if out.is_null() {
        set_error("out pointer is null");
        return DbcStatus::NullPointer;
    }
    match seq1d::debruijn_padded(n, pad) {
        Ok(seq) => {
            *out = Box::into_raw(Box::new(DbcSequence { seq, n, r: 0 }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Interleave two sequences; the result is declared
/// `(n_a + n_b, r_a + r_b)` using the handles' declarations.
///
/// # Safety
/// `a`, `b`, and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dbc_interleave(
    a: *const DbcSequence,
    b: *const DbcSequence,
    out: *mut *mut DbcSequence,
) -> DbcStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        set_error("null handle");
        return DbcStatus::NullPointer;
    }
    let (a, b) = (&*a, &*b);
    match seq1d::interleave(&a.seq, &b.seq, a.n, b.n, a.r, b.r) {
        Ok(seq) => {
            *out = Box::into_raw(Box::new(DbcSequence { seq, n: a.n + b.n, r: a.r + b.r }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Period of the sequence.
///
/// # Safety
/// `seq` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_len(seq: *const DbcSequence) -> u64 {
    if seq.is_null() {
        return 0;
    }
    (*seq).seq.len() as u64
}

/// Declared window length.
///
/// # Safety
/// `seq` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_window(seq: *const DbcSequence) -> u32 {
    if seq.is_null() {
        return 0;
    }
    (*seq).n
}

/// Declared covering radius.
///
/// # Safety
/// `seq` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_radius(seq: *const DbcSequence) -> u32 {
    if seq.is_null() {
        return 0;
    }
    (*seq).r
}

/// Render the sequence in the text file format. Returns NULL on error.
///
/// # Safety
/// `seq` must be a valid handle; free the result with `dbc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_render(seq: *const DbcSequence) -> *mut c_char {
    if seq.is_null() {
        set_error("null handle");
        return std::ptr::null_mut();
    }
    let s = &*seq;
    match fileio::render_sequence(&s.seq, s.n, s.r) {
        Ok(text) => give_string(text),
        Err(e) => {
            set_error(&e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Exactly verify the sequence as an `(n, R)` covering sequence.
///
/// Returns `Ok` with a report handle whether or not the property holds;
/// inspect the report.
///
/// # Safety
/// `seq` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_check(
    seq: *const DbcSequence,
    n: u32,
    r: u32,
    out: *mut *mut DbcReport,
) -> DbcStatus {
    if seq.is_null() || out.is_null() {
        set_error("null handle");
        return DbcStatus::NullPointer;
    }
    match verify::check_dbcs(&(*seq).seq, n, r) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(DbcReport { report }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Release a sequence handle.
///
/// # Safety
/// `seq` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dbc_sequence_free(seq: *mut DbcSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Fold the sequence (declared `(m*n, R)`) into a verified `(m, n, R)`
/// covering array.
///
/// # Safety
/// `seq` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dbc_fold(
    seq: *const DbcSequence,
    m: u32,
    n: u32,
    out: *mut *mut DbcArray,
) -> DbcStatus {
    if seq.is_null() || out.is_null() {
        set_error("null handle");
        return DbcStatus::NullPointer;
    }
    let s = &*seq;
    if m * n != s.n {
        return fail(Error::WindowAreaMismatch { m, n, declared: s.n });
    }
    match arr2d::fold::fold(&s.seq, m, n, s.r) {
        Ok((array, _)) => {
            *out = Box::into_raw(Box::new(DbcArray { array, m, n, r: s.r }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Stack shifted copies of the sequence into a verified `(2, n, 2R)` array.
///
/// # Safety
/// `seq` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dbc_shift2(
    seq: *const DbcSequence,
    out: *mut *mut DbcArray,
) -> DbcStatus {
    if seq.is_null() || out.is_null() {
        set_error("null handle");
        return DbcStatus::NullPointer;
    }
    let s = &*seq;
    match arr2d::shift::shift_construct(&s.seq, s.n, s.r) {
        Ok((array, _)) => {
            *out = Box::into_raw(Box::new(DbcArray { array, m: 2, n: s.n, r: 2 * s.r }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Parse an array file (`dbca` header plus digit rows).
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dbc_array_parse(
    text: *const c_char,
    out: *mut *mut DbcArray,
) -> DbcStatus {
    if out.is_null() {
        set_error("out pointer is null");
        return DbcStatus::NullPointer;
    }
    let Some(text) = cstr_arg(text) else {
        set_error("text pointer is null or not UTF-8");
        return DbcStatus::NullPointer;
    };
    match fileio::parse_array(text) {
        Ok(f) => {
            *out = Box::into_raw(Box::new(DbcArray { array: f.array, m: f.m, n: f.n, r: f.r }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `arr` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_array_rows(arr: *const DbcArray) -> u64 {
    if arr.is_null() {
        return 0;
    }
    (*arr).array.rows() as u64
}

/// # Safety
/// `arr` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_array_cols(arr: *const DbcArray) -> u64 {
    if arr.is_null() {
        return 0;
    }
    (*arr).array.cols() as u64
}

/// Render the array in the text file format. Returns NULL on error.
///
/// # Safety
/// `arr` must be a valid handle; free the result with `dbc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn dbc_array_render(arr: *const DbcArray) -> *mut c_char {
    if arr.is_null() {
        set_error("null handle");
        return std::ptr::null_mut();
    }
    let a = &*arr;
    match fileio::render_array(&a.array, a.m, a.n, a.r) {
        Ok(text) => give_string(text),
        Err(e) => {
            set_error(&e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Exactly verify the array as an `(m, n, R)` covering array.
///
/// # Safety
/// `arr` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dbc_array_check(
    arr: *const DbcArray,
    m: u32,
    n: u32,
    r: u32,
    out: *mut *mut DbcReport,
) -> DbcStatus {
    if arr.is_null() || out.is_null() {
        set_error("null handle");
        return DbcStatus::NullPointer;
    }
    match verify::check_dbca(&(*arr).array, m, n, r) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(DbcReport { report }));
            DbcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `arr` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dbc_array_free(arr: *mut DbcArray) {
    if !arr.is_null() {
        drop(Box::from_raw(arr));
    }
}

/// # Safety
/// `rep` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_report_verified(rep: *const DbcReport) -> bool {
    if rep.is_null() {
        return false;
    }
    (*rep).report.verified
}

/// # Safety
/// `rep` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_report_achieved_radius(rep: *const DbcReport) -> u32 {
    if rep.is_null() {
        return u32::MAX;
    }
    (*rep).report.achieved_radius
}

/// # Safety
/// `rep` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn dbc_report_uncovered(rep: *const DbcReport) -> u64 {
    if rep.is_null() {
        return u64::MAX;
    }
    (*rep).report.uncovered_count
}

/// Human-readable report block plus the one-line summary.
///
/// # Safety
/// `rep` must be a valid handle; free the result with `dbc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn dbc_report_render(rep: *const DbcReport) -> *mut c_char {
    if rep.is_null() {
        set_error("null handle");
        return std::ptr::null_mut();
    }
    let r = &(*rep).report;
    give_string(format!("{}{}\n", r.render(), r.summary_line()))
}

/// # Safety
/// `rep` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dbc_report_free(rep: *mut DbcReport) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}
