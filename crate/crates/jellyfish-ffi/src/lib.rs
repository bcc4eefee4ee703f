//! C ABI over the jellyfish crate.
//!
//! Handles are opaque and owned by the caller; free them with the matching `*_free`.
//! Every fallible call returns a `JfStatus`; on failure `jf_last_error` describes the cause.
//! Strings returned to the caller are NUL-terminated and must be released with `jf_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jellyfish::oracle::check_equivalence;
use jellyfish::poset::{GroupCase, WallachCase};
use jellyfish::series::{bernstein_degree, covariant_series, sl_invariant_series, wallach_series, RationalSeries};
use jellyfish::tableaux::Shape;
use jellyfish::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidParameters = 3,
    InvalidShape = 4,
    InvalidEndpoints = 5,
    Parse = 6,
    NotStandard = 7,
    Unsupported = 8,
    OracleMismatch = 9,
    Panic = 10,
}

/// The classical group of a dual pair.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JfGroup {
    Gl = 0,
    Sp = 1,
    O = 2,
}

/// Opaque dual pair.
pub struct JfCase(GroupCase);

/// Opaque rational series in t.
pub struct JfSeries(RationalSeries);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> JfStatus {
    match e {
        Error::InvalidParameters(_) => JfStatus::InvalidParameters,
        Error::InvalidEndpoints(_) => JfStatus::InvalidEndpoints,
        Error::InvalidShape(_) => JfStatus::InvalidShape,
        Error::NotStandard(_) => JfStatus::NotStandard,
        Error::Parse(_) => JfStatus::Parse,
        Error::Unsupported(_) => JfStatus::Unsupported,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (JfStatus, String)>) -> JfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => JfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            JfStatus::Panic
        }
    }
}

fn lib<T>(r: jellyfish::Result<T>) -> Result<T, (JfStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(name: &str) -> (JfStatus, String) {
    (JfStatus::NullPointer, format!("{name} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, (JfStatus, String)> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (JfStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn read_case<'a>(p: *const JfCase) -> Result<&'a GroupCase, (JfStatus, String)> {
    p.as_ref().map(|c| &c.0).ok_or_else(|| null("case"))
}

unsafe fn read_series<'a>(p: *const JfSeries) -> Result<&'a RationalSeries, (JfStatus, String)> {
    p.as_ref().map(|s| &s.0).ok_or_else(|| null("series"))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

unsafe fn put_series(out: *mut *mut JfSeries, s: RationalSeries) {
    *out = Box::into_raw(Box::new(JfSeries(s)));
}

/// Message for the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn jf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn jf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a dual pair. `p`, `q` are read for GL and `n` for Sp and O; `k` must not exceed the rank.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn jf_case_new(
    group: JfGroup,
    k: u32,
    p: u32,
    q: u32,
    n: u32,
    out: *mut *mut JfCase,
) -> JfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let case = lib(match group {
            JfGroup::Gl => GroupCase::gl(k, p, q),
            JfGroup::Sp => GroupCase::sp(k, n),
            JfGroup::O => GroupCase::o(k, n),
        })?;
        lib(case.require_range())?;
        *out = Box::into_raw(Box::new(JfCase(case)));
        Ok(())
    })
}

/// Releases a case handle.
///
/// # Safety
/// `case` must be null or a handle from `jf_case_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn jf_case_free(case: *mut JfCase) {
    if !case.is_null() {
        drop(Box::from_raw(case));
    }
}

/// Display name of the case, e.g. `GL(3,3,4)`.
///
/// # Safety
/// `case` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn jf_case_name(case: *const JfCase, out: *mut *mut c_char) -> JfStatus {
    guard(|| {
        let case = read_case(case)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c(case.to_string());
        Ok(())
    })
}

/// Reduced Hilbert series of the covariants of shape `tau` (e.g. `"2,1"`, `"1,-1"`, `"0"`).
///
/// # Safety
/// `case`, `tau` and `out` must be valid pointers; `tau` is NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn jf_covariant_series(
    case: *const JfCase,
    tau: *const c_char,
    out: *mut *mut JfSeries,
) -> JfStatus {
    guard(|| {
        let case = read_case(case)?;
        let shape = lib(Shape::parse(read_str(tau, "tau")?))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = lib(covariant_series(case, &shape))?;
        put_series(out, s.reduced);
        Ok(())
    })
}

/// Hilbert series of the SL(k) invariants of p vectors and q covectors.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn jf_sl_invariant_series(k: u32, p: u32, q: u32, out: *mut *mut JfSeries) -> JfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = lib(sl_invariant_series(k, p, q))?;
        put_series(out, s.reduced);
        Ok(())
    })
}

/// Hilbert series of the Wallach representation of level `k` for `name` in `"E6"`, `"E7"`, `"D5"`, ...
///
/// # Safety
/// `name` and `out` must be valid pointers; `name` is NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn jf_wallach_series(name: *const c_char, k: u32, out: *mut *mut JfSeries) -> JfStatus {
    guard(|| {
        let w = lib(WallachCase::parse(read_str(name, "name")?, k))?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_series(out, wallach_series(&w));
        Ok(())
    })
}

/// Releases a series handle.
///
/// # Safety
/// `series` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn jf_series_free(series: *mut JfSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// LaTeX rendering of the series.
///
/// # Safety
/// `series` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn jf_series_latex(series: *const JfSeries, out: *mut *mut c_char) -> JfStatus {
    guard(|| {
        let s = read_series(series)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c(s.to_latex());
        Ok(())
    })
}

/// JSON rendering of the series (numerator coefficients and denominator factors).
///
/// # Safety
/// `series` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn jf_series_json(series: *const JfSeries, out: *mut *mut c_char) -> JfStatus {
    guard(|| {
        let s = read_series(series)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c(s.to_json().to_string());
        Ok(())
    })
}

/// Writes the first `len` power series coefficients into `coeffs`.
/// Fails with `JF_STATUS_UNSUPPORTED` if a coefficient does not fit in 64 bits.
///
/// # Safety
/// `series` must be valid and `coeffs` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn jf_series_coefficients(series: *const JfSeries, coeffs: *mut i64, len: usize) -> JfStatus {
    guard(|| {
        let s = read_series(series)?;
        if len == 0 {
            return Ok(());
        }
        if coeffs.is_null() {
            return Err(null("coeffs"));
        }
        let out = std::slice::from_raw_parts_mut(coeffs, len);
        for (slot, c) in out.iter_mut().zip(s.expand(len)) {
            *slot = i64::try_from(&c).map_err(|_| (JfStatus::Unsupported, format!("coefficient {c} overflows")))?;
        }
        Ok(())
    })
}

/// Bernstein degree of the covariants of shape `tau`, as a decimal string.
///
/// # Safety
/// `case`, `tau` and `out` must be valid pointers; `tau` is NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn jf_bernstein_degree(
    case: *const JfCase,
    tau: *const c_char,
    out: *mut *mut c_char,
) -> JfStatus {
    guard(|| {
        let case = read_case(case)?;
        let shape = lib(Shape::parse(read_str(tau, "tau")?))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c(lib(bernstein_degree(case, &shape))?.to_string());
        Ok(())
    })
}

/// Compares the series against split-monomial counting up to `max_degree` and checks
/// unique location of standard supports up to `locate_degree`.
/// Returns `JF_STATUS_ORACLE_MISMATCH` on disagreement; `report` (may be null) receives the JSON report either way.
///
/// # Safety
/// `case` and `tau` must be valid pointers; `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn jf_oracle_check(
    case: *const JfCase,
    tau: *const c_char,
    max_degree: u32,
    locate_degree: u32,
    report: *mut *mut c_char,
) -> JfStatus {
    guard(|| {
        let case = read_case(case)?;
        let shape = lib(Shape::parse(read_str(tau, "tau")?))?;
        let r = lib(check_equivalence(case, &shape, max_degree as usize, locate_degree as usize))?;
        if !report.is_null() {
            *report = to_c(r.to_json().to_string());
        }
        if r.ok() {
            Ok(())
        } else {
            Err((JfStatus::OracleMismatch, format!("oracle mismatch for {case} tau={shape}")))
        }
    })
}
