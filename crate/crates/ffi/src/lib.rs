//! C ABI for the schurlab verification library.
//!
//! Conventions: every function returns an [`SlStatus`]; results travel
//! through out-pointers.  Reports are opaque handles freed with their
//! `_free` function; strings returned through `char **` are owned by
//! the caller and freed with [`sl_string_free`].  On any non-OK status
//! a thread-local message is available from [`sl_last_error_message`].
//! Panics never cross the boundary; they surface as `SL_STATUS_PANIC`.

use schurlab::detident::{verify_cauchy, verify_frobenius, verify_tsymm, ExpansionReport,
    SeriesFunction};
use schurlab::preserver::{
    admissible_characterize, hl_hypothesis_scan, is_admissible, AdmissibleOutcome, DerivProfile,
    FnSpec, PreserverReport, Tail, TestFamily, PSD_EIG_TOL,
};
use schurlab::ring::Rational;
use schurlab::suite::{run_suite, Scale};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

/// Result of every call: OK and MISMATCH both carry a fully computed
/// report; the remaining values mean no result was produced.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlStatus {
    /// Computation succeeded and the mathematical check (if any) passed.
    Ok = 0,
    /// Computation succeeded but found a mismatch or positivity violation.
    Mismatch = 1,
    /// Malformed or out-of-range input; nothing was computed.
    InvalidArgument = 2,
    /// The supplied derivative profile is too short to decide.
    Undecidable = 3,
    /// An internal panic was caught at the boundary.
    Panic = 4,
}

/// Opaque identity-verification report.
pub struct SlVerifyReport {
    inner: ExpansionReport,
}

/// Opaque positivity-scan report.
pub struct SlPreserveReport {
    inner: PreserverReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into()).unwrap_or_else(|_| c"invalid error text".to_owned());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn invalid(msg: impl Into<String>) -> SlStatus {
    set_error(msg);
    SlStatus::InvalidArgument
}

fn guarded<F: FnOnce() -> SlStatus>(f: F) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            SlStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn str_arg<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, SlStatus> {
    if ptr.is_null() {
        return Err(invalid(format!("{name} is null")));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| invalid(format!("{name} is not valid UTF-8")))
}

fn rational_arg(s: &str, name: &str) -> Result<Rational, SlStatus> {
    Rational::from_str(s).map_err(|e| invalid(format!("{name}: {e}")))
}

fn rational_list_arg(s: &str, name: &str) -> Result<Vec<Rational>, SlStatus> {
    let parsed: Result<Vec<Rational>, _> =
        s.split(',').map(|x| Rational::from_str(x.trim())).collect();
    match parsed {
        Ok(v) if !v.is_empty() => Ok(v),
        Ok(_) => Err(invalid(format!("{name} is empty"))),
        Err(e) => Err(invalid(format!("{name}: {e}"))),
    }
}

fn distinct_arg(xs: &[Rational], name: &str) -> Result<(), SlStatus> {
    for j in 0..xs.len() {
        for k in j + 1..xs.len() {
            if xs[j] == xs[k] {
                return Err(invalid(format!(
                    "{name} coordinates must be pairwise distinct"
                )));
            }
        }
    }
    Ok(())
}

fn give_string(s: String, out: *mut *mut c_char) -> SlStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SlStatus::Ok
        }
        Err(_) => invalid("result contains an interior NUL byte"),
    }
}

fn give_json<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> SlStatus {
    match serde_json::to_string_pretty(value) {
        Ok(json) => give_string(json, out),
        Err(e) => invalid(format!("cannot serialize the report: {e}")),
    }
}

// ---- diagnostics ----

/// Message describing the most recent failure on this thread, or null.
/// The pointer stays valid until the next failing call on the thread.
///
/// # Safety
/// The returned pointer must not be freed or used after a later call.
#[no_mangle]
pub unsafe extern "C" fn sl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Library version as a static string; never freed.
#[no_mangle]
pub extern "C" fn sl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Free a string returned through a `char **` out-parameter.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library,
/// and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- schur ----

/// Render the Schur polynomial of the given degree tuple in
/// `len` variables, computing it by both constructions and requiring
/// them to agree.
///
/// # Safety
/// `parts` must point to `len` readable `uint32_t`s; `out` must be a
/// valid pointer.  The string written to `*out` is freed with
/// [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_schur_render(
    parts: *const u32,
    len: usize,
    out: *mut *mut c_char,
) -> SlStatus {
    if parts.is_null() || out.is_null() {
        return invalid("parts and out must be non-null");
    }
    let mut tuple = std::slice::from_raw_parts(parts, len).to_vec();
    guarded(move || {
        use schurlab::symmetric::{schur_bialternant, schur_tableaux, PartitionTuple};
        tuple.sort_unstable_by(|x, y| y.cmp(x));
        let tuple = match PartitionTuple::new(tuple) {
            Ok(t) => t,
            Err(e) => return invalid(e.to_string()),
        };
        let a = schur_tableaux(&tuple, len);
        let b = schur_bialternant(&tuple, len);
        if a != b {
            set_error("the two constructions disagree");
            return SlStatus::Mismatch;
        }
        give_string(a.to_string(), out)
    })
}

// ---- verify ----

fn finish_verify(report: ExpansionReport, out: *mut *mut SlVerifyReport) -> SlStatus {
    let status = if report.is_match {
        SlStatus::Ok
    } else {
        set_error(format!(
            "first mismatch at degree {}",
            report
                .first_mismatch_degree
                .map_or_else(|| "?".into(), |d| d.to_string())
        ));
        SlStatus::Mismatch
    };
    unsafe { *out = Box::into_raw(Box::new(SlVerifyReport { inner: report })) };
    status
}

/// Compare the determinant expansion of the geometric-kernel family
/// against its Schur-sum closed form through degree `degree`.
/// `u` and `v` are comma-separated rationals with distinct coordinates.
///
/// # Safety
/// `u` and `v` must be valid NUL-terminated strings and `out` a valid
/// pointer.  `*out` is freed with [`sl_verify_report_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_verify_cauchy(
    u: *const c_char,
    v: *const c_char,
    degree: usize,
    out: *mut *mut SlVerifyReport,
) -> SlStatus {
    if out.is_null() {
        return invalid("out is null");
    }
    let (u, v) = match (str_arg(u, "u"), str_arg(v, "v")) {
        (Ok(u), Ok(v)) => (u, v),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    guarded(move || {
        let (u, v) = match verify_vectors(u, v) {
            Ok(pair) => pair,
            Err(s) => return s,
        };
        finish_verify(verify_cauchy(&u, &v, degree), out)
    })
}

/// The same comparison for f(x) = (1 - cx)^{-1}, regrouped three ways.
///
/// # Safety
/// As [`sl_verify_cauchy`]; `c` must also be a valid string.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_frobenius(
    c: *const c_char,
    u: *const c_char,
    v: *const c_char,
    degree: usize,
    out: *mut *mut SlVerifyReport,
) -> SlStatus {
    if out.is_null() {
        return invalid("out is null");
    }
    let (c, u, v) = match (str_arg(c, "c"), str_arg(u, "u"), str_arg(v, "v")) {
        (Ok(c), Ok(u), Ok(v)) => (c, u, v),
        (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
    };
    guarded(move || {
        let c = match rational_arg(c, "c") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let (u, v) = match verify_vectors(u, v) {
            Ok(pair) => pair,
            Err(s) => return s,
        };
        finish_verify(verify_frobenius(&c, &u, &v, degree), out)
    })
}

/// Three-route expansion check for the polynomial with the given
/// comma-separated coefficients.
///
/// # Safety
/// As [`sl_verify_cauchy`]; `poly` must also be a valid string.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_tsymm(
    poly: *const c_char,
    u: *const c_char,
    v: *const c_char,
    degree: usize,
    out: *mut *mut SlVerifyReport,
) -> SlStatus {
    if out.is_null() {
        return invalid("out is null");
    }
    let (poly, u, v) = match (str_arg(poly, "poly"), str_arg(u, "u"), str_arg(v, "v")) {
        (Ok(p), Ok(u), Ok(v)) => (p, u, v),
        (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
    };
    guarded(move || {
        let coeffs = match rational_list_arg(poly, "poly") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let (u, v) = match verify_vectors(u, v) {
            Ok(pair) => pair,
            Err(s) => return s,
        };
        let f = SeriesFunction::polynomial(&coeffs);
        finish_verify(verify_tsymm(&f, &u, &v, degree), out)
    })
}

fn verify_vectors(u: &str, v: &str) -> Result<(Vec<Rational>, Vec<Rational>), SlStatus> {
    let u = rational_list_arg(u, "u")?;
    let v = rational_list_arg(v, "v")?;
    if u.len() != v.len() {
        return Err(invalid("u and v must have the same length"));
    }
    distinct_arg(&u, "u")?;
    distinct_arg(&v, "v")?;
    Ok((u, v))
}

/// Whether every compared coefficient agreed.
///
/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_report_match(r: *const SlVerifyReport) -> bool {
    !r.is_null() && (*r).inner.is_match
}

/// Degree of the first disagreement, or -1 when everything matched.
///
/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_report_first_mismatch(r: *const SlVerifyReport) -> i64 {
    if r.is_null() {
        return -1;
    }
    (*r).inner
        .first_mismatch_degree
        .map_or(-1, |d| d as i64)
}

/// The coefficient of t^degree on the determinant side, as a "p/q"
/// string.
///
/// # Safety
/// `r` must be a live report handle and `out` a valid pointer; the
/// string is freed with [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_verify_report_coeff(
    r: *const SlVerifyReport,
    degree: usize,
    out: *mut *mut c_char,
) -> SlStatus {
    if r.is_null() || out.is_null() {
        return invalid("r and out must be non-null");
    }
    match (&(*r).inner.lhs_coeffs).get(degree) {
        Some(c) => give_string(c.to_string(), out),
        None => invalid(format!("degree {degree} exceeds the report cutoff")),
    }
}

/// The full report as pretty-printed JSON.
///
/// # Safety
/// `r` must be a live report handle and `out` a valid pointer; the
/// string is freed with [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_verify_report_json(
    r: *const SlVerifyReport,
    out: *mut *mut c_char,
) -> SlStatus {
    if r.is_null() || out.is_null() {
        return invalid("r and out must be non-null");
    }
    give_json(&(*r).inner, out)
}

/// Release a verification report.
///
/// # Safety
/// `r` must be null or a handle from this library, unused afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_report_free(r: *mut SlVerifyReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

// ---- preserve ----

unsafe fn preserve_family(
    n: usize,
    a: *const c_char,
    eps: *const c_char,
) -> Result<TestFamily, SlStatus> {
    let a = rational_arg(str_arg(a, "a")?, "a")?;
    let eps = rational_arg(str_arg(eps, "eps")?, "eps")?;
    TestFamily::geometric(a, eps, n).map_err(|e| invalid(e.to_string()))
}

fn finish_preserve(report: PreserverReport, out: *mut *mut SlPreserveReport) -> SlStatus {
    let status = if report.passes() {
        SlStatus::Ok
    } else {
        set_error(report.summary());
        SlStatus::Mismatch
    };
    unsafe { *out = Box::into_raw(Box::new(SlPreserveReport { inner: report })) };
    status
}

/// Scan x^alpha over the n-dimensional geometric test family with the
/// given base point and sweep radius.
///
/// # Safety
/// `a` and `eps` must be valid NUL-terminated strings and `out` a valid
/// pointer.  `*out` is freed with [`sl_preserve_report_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_preserve_power(
    alpha: f64,
    n: usize,
    a: *const c_char,
    eps: *const c_char,
    grid: usize,
    out: *mut *mut SlPreserveReport,
) -> SlStatus {
    if out.is_null() {
        return invalid("out is null");
    }
    if grid == 0 {
        return invalid("grid must be at least 1");
    }
    let family = match preserve_family(n, a, eps) {
        Ok(f) => f,
        Err(s) => return s,
    };
    guarded(move || {
        match hl_hypothesis_scan(&FnSpec::Power(alpha), &family, grid, PSD_EIG_TOL) {
            Ok(report) => finish_preserve(report, out),
            Err(e) => invalid(e.to_string()),
        }
    })
}

/// Scan the polynomial with the given comma-separated coefficients,
/// exactly, over the same family.
///
/// # Safety
/// As [`sl_preserve_power`]; `coeffs` must also be a valid string.
#[no_mangle]
pub unsafe extern "C" fn sl_preserve_poly(
    coeffs: *const c_char,
    n: usize,
    a: *const c_char,
    eps: *const c_char,
    grid: usize,
    out: *mut *mut SlPreserveReport,
) -> SlStatus {
    if out.is_null() {
        return invalid("out is null");
    }
    if grid == 0 {
        return invalid("grid must be at least 1");
    }
    let coeffs = match str_arg(coeffs, "coeffs") {
        Ok(c) => c,
        Err(s) => return s,
    };
    let family = match preserve_family(n, a, eps) {
        Ok(f) => f,
        Err(s) => return s,
    };
    guarded(move || {
        let coeffs = match rational_list_arg(coeffs, "coeffs") {
            Ok(c) => c,
            Err(s) => return s,
        };
        match hl_hypothesis_scan(&FnSpec::Poly(coeffs), &family, grid, PSD_EIG_TOL) {
            Ok(report) => finish_preserve(report, out),
            Err(e) => invalid(e.to_string()),
        }
    })
}

/// Number of grid points whose matrix failed the positivity check.
///
/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn sl_preserve_report_violation_count(r: *const SlPreserveReport) -> usize {
    if r.is_null() {
        return 0;
    }
    (*r).inner.violations.len()
}

/// Whether the scan found no violation and the derivative conclusion
/// (when decidable) passed.
///
/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn sl_preserve_report_passes(r: *const SlPreserveReport) -> bool {
    !r.is_null() && (*r).inner.passes()
}

/// The full report as pretty-printed JSON.
///
/// # Safety
/// `r` must be a live report handle and `out` a valid pointer; the
/// string is freed with [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_preserve_report_json(
    r: *const SlPreserveReport,
    out: *mut *mut c_char,
) -> SlStatus {
    if r.is_null() || out.is_null() {
        return invalid("r and out must be non-null");
    }
    give_json(&(*r).inner, out)
}

/// Release a scan report.
///
/// # Safety
/// `r` must be null or a handle from this library, unused afterwards.
#[no_mangle]
pub unsafe extern "C" fn sl_preserve_report_free(r: *mut SlPreserveReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

// ---- admissible ----

/// Decide whether the strictly increasing `tuple` of derivative orders
/// is admissible for the profile spec (`exp`, `monomial:K`,
/// `two-term:J:K`, `all-zero`, or an explicit derivative list).
///
/// # Safety
/// `profile` must be a valid NUL-terminated string, `tuple` must point
/// to `tuple_len` readable `size_t`s, and `out_admissible` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_admissible_tuple(
    profile: *const c_char,
    n: usize,
    tuple: *const usize,
    tuple_len: usize,
    out_admissible: *mut bool,
) -> SlStatus {
    if tuple.is_null() || out_admissible.is_null() {
        return invalid("tuple and out_admissible must be non-null");
    }
    let profile = match str_arg(profile, "profile") {
        Ok(p) => p,
        Err(s) => return s,
    };
    let tuple = std::slice::from_raw_parts(tuple, tuple_len).to_vec();
    guarded(move || {
        let profile = match DerivProfile::parse(profile, Tail::Unknown) {
            Ok(p) => p,
            Err(e) => return invalid(e.to_string()),
        };
        if tuple.len() != n {
            return invalid(format!("tuple lists {} orders but n is {n}", tuple.len()));
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("tuple must be strictly increasing");
        }
        match is_admissible(&tuple, &profile, n) {
            Ok(outcome) => {
                *out_admissible = matches!(outcome, AdmissibleOutcome::Admissible);
                SlStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                SlStatus::Undecidable
            }
        }
    })
}

/// The closed-form admissibility classification for the profile:
/// either `ALL_ADMISSIBLE` or the threshold rule, rendered as text.
///
/// # Safety
/// `profile` must be a valid NUL-terminated string and `out` a valid
/// pointer; the string is freed with [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_admissible_classify(
    profile: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> SlStatus {
    if out.is_null() {
        return invalid("out is null");
    }
    let profile = match str_arg(profile, "profile") {
        Ok(p) => p,
        Err(s) => return s,
    };
    guarded(move || {
        let profile = match DerivProfile::parse(profile, Tail::Unknown) {
            Ok(p) => p,
            Err(e) => return invalid(e.to_string()),
        };
        if n == 0 {
            return invalid("n must be at least 1");
        }
        match admissible_characterize(&profile, n) {
            Ok(law) => give_string(law.to_string(), out),
            Err(e) => {
                set_error(e.to_string());
                SlStatus::Undecidable
            }
        }
    })
}

// ---- suite ----

/// Run the acceptance battery (`scale` is "smoke" or "desk") and hand
/// back the JSON report.  Returns OK when every criterion passed and
/// MISMATCH (with the report still written) otherwise.
///
/// # Safety
/// `scale` must be a valid NUL-terminated string and `out_json` a valid
/// pointer; the string is freed with [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_suite_run(
    seed: u64,
    scale: *const c_char,
    out_json: *mut *mut c_char,
) -> SlStatus {
    if out_json.is_null() {
        return invalid("out_json is null");
    }
    let scale = match str_arg(scale, "scale") {
        Ok(s) => s,
        Err(s) => return s,
    };
    guarded(move || {
        let scale = match Scale::from_str(scale) {
            Ok(s) => s,
            Err(e) => return invalid(e),
        };
        let report = run_suite(seed, scale);
        let all_pass = report.all_pass;
        let status = give_json(&report, out_json);
        if status != SlStatus::Ok {
            return status;
        }
        if all_pass {
            SlStatus::Ok
        } else {
            set_error("at least one criterion failed");
            SlStatus::Mismatch
        }
    })
}
