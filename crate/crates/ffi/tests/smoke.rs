//! Exercise the C surface end to end from Rust: parse, construct, verify,
//! render, and release through the extern functions only.

use std::ffi::{CStr, CString};

use dbc_ffi::*;

fn cstring(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null());
    let out = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    dbc_string_free(ptr);
    out
}

#[test]
fn version_is_nonempty() {
    let v = unsafe { CStr::from_ptr(dbc_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn parse_verify_render_round_trip() {
    unsafe {
        let text = cstring("dbcs q=2 n=5 R=1 k=8\n10100011\n");
        let mut seq = std::ptr::null_mut();
        assert_eq!(dbc_sequence_parse(text.as_ptr(), &mut seq), DbcStatus::Ok);
        assert_eq!(dbc_sequence_len(seq), 8);
        assert_eq!(dbc_sequence_window(seq), 5);
        assert_eq!(dbc_sequence_radius(seq), 1);

        let mut report = std::ptr::null_mut();
        assert_eq!(dbc_sequence_check(seq, 5, 1, &mut report), DbcStatus::Ok);
        assert!(dbc_report_verified(report));
        assert_eq!(dbc_report_achieved_radius(report), 1);
        assert_eq!(dbc_report_uncovered(report), 0);
        let rendered = take_string(dbc_report_render(report));
        assert!(rendered.contains("verified=true Rstar=1 uncovered=0"));
        dbc_report_free(report);

        let rendered = take_string(dbc_sequence_render(seq));
        assert_eq!(rendered, "dbcs q=2 n=5 R=1 k=8\n10100011\n");
        dbc_sequence_free(seq);
    }
}

#[test]
fn parse_error_reports_field() {
    unsafe {
        let text = cstring("dbcs q=2 n=5 R=zzz k=8\n10100011\n");
        let mut seq = std::ptr::null_mut();
        assert_eq!(dbc_sequence_parse(text.as_ptr(), &mut seq), DbcStatus::ParseError);
        let msg = CStr::from_ptr(dbc_last_error()).to_str().unwrap();
        assert!(msg.contains("`R`"), "{msg}");
    }
}

#[test]
fn interleave_fold_and_shift_through_the_abi() {
    unsafe {
        let mut a = std::ptr::null_mut();
        assert_eq!(dbc_seed(6, 1, 1, &mut a), DbcStatus::Ok);
        let mut b = std::ptr::null_mut();
        assert_eq!(dbc_seed(6, 1, 2, &mut b), DbcStatus::Ok);

        let mut u = std::ptr::null_mut();
        assert_eq!(dbc_interleave(a, b, &mut u), DbcStatus::Ok);
        assert_eq!(dbc_sequence_len(u), 408);
        assert_eq!(dbc_sequence_window(u), 12);
        assert_eq!(dbc_sequence_radius(u), 2);

        let mut folded = std::ptr::null_mut();
        assert_eq!(dbc_fold(u, 3, 4, &mut folded), DbcStatus::Ok);
        assert_eq!(dbc_array_rows(folded), 102);
        assert_eq!(dbc_array_cols(folded), 7);
        let mut report = std::ptr::null_mut();
        assert_eq!(dbc_array_check(folded, 3, 4, 2, &mut report), DbcStatus::Ok);
        assert!(dbc_report_verified(report));
        dbc_report_free(report);

        // window-area mismatch is rejected up front
        let mut bad = std::ptr::null_mut();
        assert_eq!(dbc_fold(u, 3, 5, &mut bad), DbcStatus::InvalidArgument);

        let mut shifted = std::ptr::null_mut();
        assert_eq!(dbc_shift2(a, &mut shifted), DbcStatus::Ok);
        assert_eq!(dbc_array_rows(shifted), 13);
        assert_eq!(dbc_array_cols(shifted), 12);
        let rendered = take_string(dbc_array_render(shifted));
        let mut parsed = std::ptr::null_mut();
        let rendered_c = cstring(&rendered);
        assert_eq!(dbc_array_parse(rendered_c.as_ptr(), &mut parsed), DbcStatus::Ok);
        assert_eq!(dbc_array_rows(parsed), 13);

        dbc_array_free(parsed);
        dbc_array_free(shifted);
        dbc_array_free(folded);
        dbc_sequence_free(u);
        dbc_sequence_free(b);
        dbc_sequence_free(a);
    }
}

#[test]
fn null_pointers_are_rejected() {
    unsafe {
        let mut seq = std::ptr::null_mut();
        assert_eq!(dbc_sequence_parse(std::ptr::null(), &mut seq), DbcStatus::NullPointer);
        assert_eq!(dbc_sequence_len(std::ptr::null()), 0);
        assert!(!dbc_report_verified(std::ptr::null()));
        dbc_sequence_free(std::ptr::null_mut()); // no-op, must not crash
    }
}

#[test]
fn debruijn_constructor() {
    unsafe {
        let mut s = std::ptr::null_mut();
        assert_eq!(dbc_debruijn(5, 1, &mut s), DbcStatus::Ok);
        assert_eq!(dbc_sequence_len(s), 33);
        let mut report = std::ptr::null_mut();
        assert_eq!(dbc_sequence_check(s, 5, 0, &mut report), DbcStatus::Ok);
        assert!(dbc_report_verified(report));
        dbc_report_free(report);
        dbc_sequence_free(s);
    }
}
