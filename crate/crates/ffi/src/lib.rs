//! C ABI surface: opaque report handles, integer status codes, and JSON
//! strings as the data interchange format.
//!
//! Ownership rules: every `HsReport*` produced by a constructor must be
//! released with `hs_report_free`; every `char*` returned by `hs_report_json`
//! must be released with `hs_string_free`. All functions are
//! panic-isolated — a panic inside the library is reported as
//! `HS_STATUS_INTERNAL` instead of unwinding across the boundary.

use hagge_core::numeric::Backend;
use hagge_core::report::{to_canonical_json, CheckReport, SuiteReport};
use hagge_core::script::{parse_script, run_program};
use hagge_core::speckman::oracle8;
use hagge_core::suites::run_suite;
use hagge_core::Scalar;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsStatus {
    /// Success; output parameters are valid.
    HsStatusOk = 0,
    /// A required pointer argument was null.
    HsStatusNullArgument = 1,
    /// A string argument was not valid UTF-8.
    HsStatusInvalidUtf8 = 2,
    /// A script or number failed to parse; see stderr for details.
    HsStatusParseError = 3,
    /// The construction rejected the input (degenerate configuration).
    HsStatusConstructionError = 4,
    /// An unexpected internal failure.
    HsStatusInternal = 5,
}

/// Backend selector for constructions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsBackend {
    HsBackendRational = 0,
    HsBackendFloat = 1,
}

impl From<HsBackend> for Backend {
    fn from(b: HsBackend) -> Backend {
        match b {
            HsBackend::HsBackendRational => Backend::Rational,
            HsBackend::HsBackendFloat => Backend::Float,
        }
    }
}

/// Opaque verification report. Inspect it through `hs_report_passed` and
/// `hs_report_json`.
pub struct HsReport {
    json: String,
    passed: bool,
}

impl HsReport {
    fn from_check(report: CheckReport) -> HsReport {
        HsReport { passed: report.passed(), json: to_canonical_json(&report) }
    }

    fn from_suite(report: SuiteReport) -> HsReport {
        HsReport { passed: report.passed, json: to_canonical_json(&report) }
    }
}

fn guard(out: *mut *mut HsReport, body: impl FnOnce() -> Result<HsReport, HsStatus>) -> HsStatus {
    if out.is_null() {
        return HsStatus::HsStatusNullArgument;
    }
    // Clear the output slot so callers never read garbage on failure.
    unsafe { *out = std::ptr::null_mut() };
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(report)) => {
            unsafe { *out = Box::into_raw(Box::new(report)) };
            HsStatus::HsStatusOk
        }
        Ok(Err(status)) => status,
        Err(_) => HsStatus::HsStatusInternal,
    }
}

fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, HsStatus> {
    if ptr.is_null() {
        return Err(HsStatus::HsStatusNullArgument);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| HsStatus::HsStatusInvalidUtf8)
}

/// Run one verification suite (`"hagge"`, `"speckman"`, or `"section8"`)
/// over `instances` seeded random instances.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_suite_run(
    suite: *const c_char,
    instances: usize,
    seed: u64,
    backend: HsBackend,
    out: *mut *mut HsReport,
) -> HsStatus {
    guard(out, || {
        let name = utf8_arg(suite)?;
        let report = run_suite(name, instances, seed, backend.into())
            .map_err(|_| HsStatus::HsStatusParseError)?;
        Ok(HsReport::from_suite(report))
    })
}

/// Parse and execute a construction script; the report carries one entry
/// per assertion or failed statement.
///
/// # Safety
/// `source` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_run_script(
    source: *const c_char,
    backend: HsBackend,
    out: *mut *mut HsReport,
) -> HsStatus {
    guard(out, || {
        let text = utf8_arg(source)?;
        let prog = parse_script(text).map_err(|e| {
            eprintln!("hs_run_script: {e}");
            HsStatus::HsStatusParseError
        })?;
        let (report, _) = run_program(&prog, backend.into());
        Ok(HsReport::from_check(report))
    })
}

/// Audit the closed-form coordinate model at rational parameters given as
/// `p/q` strings. Audit mismatches are recorded in the report and do not
/// affect `hs_report_passed`.
///
/// # Safety
/// All string arguments must be valid NUL-terminated strings and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_oracle8(
    v: *const c_char,
    w: *const c_char,
    m: *const c_char,
    k: *const c_char,
    out: *mut *mut HsReport,
) -> HsStatus {
    guard(out, || {
        let parse = |ptr: *const c_char| -> Result<Scalar, HsStatus> {
            let text = utf8_arg(ptr)?;
            Scalar::parse(text, Backend::Rational).map_err(|_| HsStatus::HsStatusParseError)
        };
        let report = oracle8(&parse(v)?, &parse(w)?, &parse(m)?, &parse(k)?)
            .map_err(|_| HsStatus::HsStatusConstructionError)?;
        Ok(HsReport::from_check(report))
    })
}

/// True when every check in the report passed.
///
/// # Safety
/// `report` must be a pointer returned by a constructor and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_report_passed(report: *const HsReport) -> bool {
    if report.is_null() {
        return false;
    }
    (*report).passed
}

/// Canonical JSON for the report. The caller owns the returned string and
/// must release it with `hs_string_free`. Returns null on null input.
///
/// # Safety
/// `report` must be a pointer returned by a constructor and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_report_json(report: *const HsReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    match CString::new((*report).json.clone()) {
        Ok(s) => s.into_raw(),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Release a report handle. Null is ignored.
///
/// # Safety
/// `report` must be null or a pointer returned by a constructor, freed at
/// most once.
#[no_mangle]
pub unsafe extern "C" fn hs_report_free(report: *mut HsReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Release a string returned by `hs_report_json`. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer returned by `hs_report_json`, freed at
/// most once.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn script_round_trip_through_the_c_surface() {
        let src = cstr(
            "point A = (0,0)\npoint B = (4,0)\npoint C = (0,3)\ntriangle T = A B C\nassert on_circle(circumcircle(T), A)",
        );
        let mut out: *mut HsReport = std::ptr::null_mut();
        let status = unsafe {
            hs_run_script(src.as_ptr(), HsBackend::HsBackendRational, &mut out)
        };
        assert_eq!(status, HsStatus::HsStatusOk);
        assert!(unsafe { hs_report_passed(out) });
        let json = unsafe { hs_report_json(out) };
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
        assert!(text.contains("\"pass\": true"));
        unsafe {
            hs_string_free(json);
            hs_report_free(out);
        }
    }

    #[test]
    fn suite_and_oracle_entry_points() {
        let mut out: *mut HsReport = std::ptr::null_mut();
        let name = cstr("hagge");
        let status = unsafe {
            hs_suite_run(name.as_ptr(), 2, 7, HsBackend::HsBackendRational, &mut out)
        };
        assert_eq!(status, HsStatus::HsStatusOk);
        assert!(unsafe { hs_report_passed(out) });
        unsafe { hs_report_free(out) };

        let (v, w, m, k) = (cstr("1"), cstr("2"), cstr("1"), cstr("2"));
        let status = unsafe {
            hs_oracle8(v.as_ptr(), w.as_ptr(), m.as_ptr(), k.as_ptr(), &mut out)
        };
        assert_eq!(status, HsStatus::HsStatusOk);
        assert!(unsafe { hs_report_passed(out) });
        let json = unsafe { hs_report_json(out) };
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
        assert!(text.contains("\"status\": \"mismatch\""));
        unsafe {
            hs_string_free(json);
            hs_report_free(out);
        }
    }

    #[test]
    fn error_paths_are_reported_as_status_codes() {
        let mut out: *mut HsReport = std::ptr::null_mut();
        let status = unsafe {
            hs_run_script(std::ptr::null(), HsBackend::HsBackendRational, &mut out)
        };
        assert_eq!(status, HsStatus::HsStatusNullArgument);

        let bad = cstr("point A = (0 0)");
        let status = unsafe {
            hs_run_script(bad.as_ptr(), HsBackend::HsBackendRational, &mut out)
        };
        assert_eq!(status, HsStatus::HsStatusParseError);
        assert!(out.is_null());

        let name = cstr("bogus");
        let status = unsafe {
            hs_suite_run(name.as_ptr(), 1, 0, HsBackend::HsBackendRational, &mut out)
        };
        assert_eq!(status, HsStatus::HsStatusParseError);

        let (v, w, m, k) = (cstr("1"), cstr("1"), cstr("1"), cstr("2"));
        let status = unsafe {
            hs_oracle8(v.as_ptr(), w.as_ptr(), m.as_ptr(), k.as_ptr(), &mut out)
        };
        assert_eq!(status, HsStatus::HsStatusConstructionError);

        assert!(!unsafe { hs_report_passed(std::ptr::null()) });
        assert!(unsafe { hs_report_json(std::ptr::null()) }.is_null());
        unsafe {
            hs_report_free(std::ptr::null_mut());
            hs_string_free(std::ptr::null_mut());
        }
    }
}
