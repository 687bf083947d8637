//! Exercises the C entry points the way a foreign caller would:
//! through raw pointers, checking statuses, and freeing every handle
//! and string.

use schurlab_ffi::*;
use std::ffi::{c_char, CStr, CString};

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    sl_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = sl_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

#[test]
fn schur_rendering_round_trip() {
    unsafe {
        let parts = [2u32, 0];
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = sl_schur_render(parts.as_ptr(), 2, &mut out);
        assert_eq!(status, SlStatus::Ok);
        assert_eq!(take_string(out), "u1 + u2");

        let repeated = [2u32, 2];
        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(sl_schur_render(repeated.as_ptr(), 2, &mut out), SlStatus::Ok);
        assert_eq!(take_string(out), "0");

        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            sl_schur_render(std::ptr::null(), 2, &mut out),
            SlStatus::InvalidArgument
        );
        assert!(out.is_null());
    }
}

#[test]
fn verify_reports_expose_exact_coefficients() {
    unsafe {
        let u = cstr("1,2");
        let v = cstr("1,3");
        let mut report: *mut SlVerifyReport = std::ptr::null_mut();
        let status = sl_verify_cauchy(u.as_ptr(), v.as_ptr(), 3, &mut report);
        assert_eq!(status, SlStatus::Ok);
        assert!(sl_verify_report_match(report));
        assert_eq!(sl_verify_report_first_mismatch(report), -1);

        let mut coeff: *mut c_char = std::ptr::null_mut();
        assert_eq!(sl_verify_report_coeff(report, 3, &mut coeff), SlStatus::Ok);
        assert_eq!(take_string(coeff), "194");

        let mut coeff: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            sl_verify_report_coeff(report, 9, &mut coeff),
            SlStatus::InvalidArgument
        );

        let mut json: *mut c_char = std::ptr::null_mut();
        assert_eq!(sl_verify_report_json(report, &mut json), SlStatus::Ok);
        let json = take_string(json);
        assert!(json.contains("\"match\": true"), "{json}");
        assert!(json.contains("\"194\""), "{json}");
        sl_verify_report_free(report);
    }
}

#[test]
fn verify_rejects_malformed_vectors() {
    unsafe {
        let mut report: *mut SlVerifyReport = std::ptr::null_mut();
        let u = cstr("1,2");
        let bad = cstr("1,x");
        assert_eq!(
            sl_verify_cauchy(u.as_ptr(), bad.as_ptr(), 3, &mut report),
            SlStatus::InvalidArgument
        );
        assert!(report.is_null());
        assert!(last_error().contains("v"));

        let dup = cstr("1,1");
        assert_eq!(
            sl_verify_cauchy(dup.as_ptr(), u.as_ptr(), 3, &mut report),
            SlStatus::InvalidArgument
        );
        assert!(last_error().contains("distinct"));

        let short = cstr("1");
        assert_eq!(
            sl_verify_cauchy(u.as_ptr(), short.as_ptr(), 3, &mut report),
            SlStatus::InvalidArgument
        );
    }
}

#[test]
fn frobenius_and_tsymm_agree_through_the_boundary() {
    unsafe {
        let c = cstr("2");
        let u = cstr("1,2");
        let v = cstr("1,3");
        let mut report: *mut SlVerifyReport = std::ptr::null_mut();
        assert_eq!(
            sl_verify_frobenius(c.as_ptr(), u.as_ptr(), v.as_ptr(), 2, &mut report),
            SlStatus::Ok
        );
        let mut coeff: *mut c_char = std::ptr::null_mut();
        assert_eq!(sl_verify_report_coeff(report, 2, &mut coeff), SlStatus::Ok);
        assert_eq!(take_string(coeff), "-24");
        sl_verify_report_free(report);

        let poly = cstr("1,2,0,4");
        let u3 = cstr("1,2,3");
        let v3 = cstr("1,3,4");
        let mut report: *mut SlVerifyReport = std::ptr::null_mut();
        assert_eq!(
            sl_verify_tsymm(poly.as_ptr(), u3.as_ptr(), v3.as_ptr(), 8, &mut report),
            SlStatus::Ok
        );
        assert!(sl_verify_report_match(report));
        sl_verify_report_free(report);
    }
}

#[test]
fn preserve_scan_statuses_track_the_verdict() {
    unsafe {
        let a = cstr("1");
        let eps = cstr("1");
        let mut report: *mut SlPreserveReport = std::ptr::null_mut();
        let status = sl_preserve_power(0.5, 3, a.as_ptr(), eps.as_ptr(), 60, &mut report);
        assert_eq!(status, SlStatus::Mismatch);
        assert!(!sl_preserve_report_passes(report));
        assert!(sl_preserve_report_violation_count(report) > 0);

        let mut json: *mut c_char = std::ptr::null_mut();
        assert_eq!(sl_preserve_report_json(report, &mut json), SlStatus::Ok);
        assert!(take_string(json).contains("violations"));
        sl_preserve_report_free(report);

        let mut report: *mut SlPreserveReport = std::ptr::null_mut();
        assert_eq!(
            sl_preserve_power(1.5, 3, a.as_ptr(), eps.as_ptr(), 60, &mut report),
            SlStatus::Ok
        );
        assert!(sl_preserve_report_passes(report));
        assert_eq!(sl_preserve_report_violation_count(report), 0);
        sl_preserve_report_free(report);

        let zero = cstr("0");
        let coeffs = cstr("1,1,1");
        let mut report: *mut SlPreserveReport = std::ptr::null_mut();
        assert_eq!(
            sl_preserve_poly(coeffs.as_ptr(), 3, zero.as_ptr(), eps.as_ptr(), 60, &mut report),
            SlStatus::Ok
        );
        assert!(sl_preserve_report_passes(report));
        sl_preserve_report_free(report);

        let mut report: *mut SlPreserveReport = std::ptr::null_mut();
        assert_eq!(
            sl_preserve_power(-0.5, 3, a.as_ptr(), eps.as_ptr(), 60, &mut report),
            SlStatus::InvalidArgument
        );
        assert!(report.is_null());
        assert_eq!(
            sl_preserve_power(0.5, 3, a.as_ptr(), eps.as_ptr(), 0, &mut report),
            SlStatus::InvalidArgument
        );
    }
}

#[test]
fn admissibility_through_the_boundary() {
    unsafe {
        let exp = cstr("exp");
        let tuple = [0usize, 2];
        let mut admissible = true;
        assert_eq!(
            sl_admissible_tuple(exp.as_ptr(), 2, tuple.as_ptr(), 2, &mut admissible),
            SlStatus::Ok
        );
        assert!(!admissible);

        let tuple = [0usize, 1];
        assert_eq!(
            sl_admissible_tuple(exp.as_ptr(), 2, tuple.as_ptr(), 2, &mut admissible),
            SlStatus::Ok
        );
        assert!(admissible);

        let mut out: *mut c_char = std::ptr::null_mut();
        let monomial = cstr("monomial:2");
        assert_eq!(sl_admissible_classify(monomial.as_ptr(), 2, &mut out), SlStatus::Ok);
        assert_eq!(take_string(out), "ALL_ADMISSIBLE");

        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(sl_admissible_classify(exp.as_ptr(), 3, &mut out), SlStatus::Ok);
        let law = take_string(out);
        assert!(law.contains("sum < 3"), "{law}");

        let short = cstr("1,0");
        let tuple = [0usize, 3];
        assert_eq!(
            sl_admissible_tuple(short.as_ptr(), 2, tuple.as_ptr(), 2, &mut admissible),
            SlStatus::Undecidable
        );
        assert!(last_error().contains("order"));

        let decreasing = [2usize, 0];
        assert_eq!(
            sl_admissible_tuple(exp.as_ptr(), 2, decreasing.as_ptr(), 2, &mut admissible),
            SlStatus::InvalidArgument
        );
    }
}

#[test]
fn suite_runs_through_the_boundary() {
    unsafe {
        let scale = cstr("smoke");
        let mut json: *mut c_char = std::ptr::null_mut();
        assert_eq!(sl_suite_run(1, scale.as_ptr(), &mut json), SlStatus::Ok);
        let json = take_string(json);
        assert!(json.contains("\"all_pass\": true"), "{json}");

        let mut json: *mut c_char = std::ptr::null_mut();
        let bad = cstr("galaxy");
        assert_eq!(
            sl_suite_run(1, bad.as_ptr(), &mut json),
            SlStatus::InvalidArgument
        );
    }
}

#[test]
fn version_and_error_plumbing() {
    unsafe {
        let v = sl_version();
        assert!(!v.is_null());
        assert_eq!(CStr::from_ptr(v).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
        sl_string_free(std::ptr::null_mut());
        sl_verify_report_free(std::ptr::null_mut());
        sl_preserve_report_free(std::ptr::null_mut());
    }
}

#[test]
fn generated_header_declares_the_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/schurlab.h"
    ))
    .expect("cbindgen header exists");
    for symbol in [
        "SCHURLAB_H",
        "typedef struct SlVerifyReport SlVerifyReport;",
        "typedef struct SlPreserveReport SlPreserveReport;",
        "SL_STATUS_OK",
        "SL_STATUS_MISMATCH",
        "SL_STATUS_UNDECIDABLE",
        "sl_schur_render",
        "sl_verify_cauchy",
        "sl_verify_frobenius",
        "sl_verify_tsymm",
        "sl_verify_report_json",
        "sl_preserve_power",
        "sl_preserve_poly",
        "sl_admissible_tuple",
        "sl_admissible_classify",
        "sl_suite_run",
        "sl_last_error_message",
        "sl_string_free",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}
