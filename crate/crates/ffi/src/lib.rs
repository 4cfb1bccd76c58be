//! C ABI over the `ehrhart` toolkit.
//!
//! Polytopes live behind the opaque [`EhrPolytope`] handle. Every fallible
//! function returns an [`EhrStatus`]; on failure a message is kept per thread
//! and can be read with [`ehr_last_error_message`]. Strings returned through
//! out-parameters are owned by the caller and released with
//! [`ehr_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ehrhart::corpus::{emit_polytopes, emit_report, parse_polytopes, CheckKind, PolytopeRecord};
use ehrhart::kernel::{barycenter, volume};
use ehrhart::lattice::dual_polytope;
use ehrhart::toric::toric_report;
use ehrhart::{Error, VPolytope};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EhrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Degenerate = 4,
    /// A mathematical precondition failed (origin not interior, not Fano, ...).
    Domain = 5,
    UnknownCheck = 6,
    Internal = 7,
}

/// Opaque polytope handle.
pub struct EhrPolytope {
    inner: VPolytope,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: EhrStatus, msg: impl Into<String>) -> EhrStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> EhrStatus {
    match e {
        Error::Parse { .. } => EhrStatus::Parse,
        Error::DegenerateInput(_) | Error::DimensionMismatch { .. } => EhrStatus::Degenerate,
        Error::Invariant(_) => EhrStatus::Internal,
        _ => EhrStatus::Domain,
    }
}

fn from_error(e: Error) -> EhrStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, converting panics into [`EhrStatus::Internal`].
fn guard(f: impl FnOnce() -> EhrStatus) -> EhrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(EhrStatus::Internal, "panic inside ehrhart"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, EhrStatus> {
    if s.is_null() {
        return Err(fail(EhrStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(EhrStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn handle<'a>(p: *const EhrPolytope) -> Result<&'a VPolytope, EhrStatus> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(EhrStatus::NullPointer, "null polytope handle"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> EhrStatus {
    if out.is_null() {
        return fail(EhrStatus::NullPointer, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            EhrStatus::Ok
        }
        Err(_) => fail(EhrStatus::Internal, "output contains a nul byte"),
    }
}

unsafe fn write_handle(out: *mut *mut EhrPolytope, p: VPolytope) -> EhrStatus {
    if out.is_null() {
        return fail(EhrStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(EhrPolytope { inner: p }));
    EhrStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Parses the first block of `text` (`dim nverts` header, then one vertex per
/// row) into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_from_text(
    text: *const c_char,
    out: *mut *mut EhrPolytope,
) -> EhrStatus {
    guard(|| {
        let text = tri!(read_str(text));
        let records = tri!(parse_polytopes(text, false).map_err(from_error));
        let Some(first) = records.first() else {
            return fail(EhrStatus::Parse, "no polytope in input");
        };
        let p = tri!(first.polytope().map_err(from_error));
        write_handle(out, p)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_free(p: *mut EhrPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Ambient dimension, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_dim(p: *const EhrPolytope) -> usize {
    p.as_ref().map_or(0, |h| h.inner.dim())
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_num_vertices(p: *const EhrPolytope) -> usize {
    p.as_ref().map_or(0, |h| h.inner.num_vertices())
}

/// Exact volume as `"p/q"` (or an integer).
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_volume(
    p: *const EhrPolytope,
    out: *mut *mut c_char,
) -> EhrStatus {
    guard(|| write_string(out, volume(tri!(handle(p))).to_string()))
}

/// Exact barycenter as `"(a, b, ...)"`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_barycenter(
    p: *const EhrPolytope,
    out: *mut *mut c_char,
) -> EhrStatus {
    guard(|| write_string(out, barycenter(tri!(handle(p))).to_string()))
}

/// Polar dual as a new handle; requires the origin in the interior.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_dual(
    p: *const EhrPolytope,
    out: *mut *mut EhrPolytope,
) -> EhrStatus {
    guard(|| {
        let d = tri!(dual_polytope(tri!(handle(p))).map_err(from_error));
        write_handle(out, d)
    })
}

/// Vertex list in the text block format.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_to_text(
    p: *const EhrPolytope,
    out: *mut *mut c_char,
) -> EhrStatus {
    guard(|| {
        let record = PolytopeRecord::from_polytope("polytope", tri!(handle(p)));
        write_string(out, emit_polytopes(&[record]))
    })
}

/// Runs the named check (`ehrhart`, `milman-pajor`, `minkowski`, `grunbaum`,
/// `root-symmetry`, `toric`) and writes its JSON report.
///
/// # Safety
/// `p` must be a live handle, `check` a nul-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_check(
    p: *const EhrPolytope,
    check: *const c_char,
    out: *mut *mut c_char,
) -> EhrStatus {
    guard(|| {
        let k = tri!(handle(p));
        let name = tri!(read_str(check));
        let kind: CheckKind = tri!(name
            .parse()
            .map_err(|_| fail(EhrStatus::UnknownCheck, format!("unknown check `{name}`"))));
        let report = tri!(kind.run(k).map_err(from_error));
        write_string(out, emit_report("polytope", &report))
    })
}

/// JSON toric Fano report for a Fano polytope.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ehr_polytope_toric_report(
    p: *const EhrPolytope,
    out: *mut *mut c_char,
) -> EhrStatus {
    guard(|| {
        let report = tri!(toric_report(tri!(handle(p))).map_err(from_error));
        write_string(out, emit_report("polytope", &report.to_check_report()))
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ehr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn ehr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
