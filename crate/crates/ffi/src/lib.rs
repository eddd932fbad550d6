//! C interface to `lqb`.
//!
//! Structures live behind opaque `LqbAlgebra` handles. Functions return an
//! `LqbStatus`; on failure the message is kept per thread and can be read
//! with [`lqb_last_error_message`]. Strings returned to the caller are owned
//! by the caller and released with [`lqb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lqb::io::{example_catalog, run_check, run_double, run_rep_verify, Flags, InputDocument, InputError, Report};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LqbStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Parse = 3,
    Invalid = 4,
    DimensionCap = 5,
    UnknownExample = 6,
    Panic = 7,
}

/// Outcome of a verification run.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LqbVerdict {
    Pass = 0,
    Fail = 1,
}

/// Opaque handle to a parsed structure document.
pub struct LqbAlgebra {
    doc: InputDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &InputError) -> LqbStatus {
    match err {
        InputError::UnknownExample(_) => LqbStatus::UnknownExample,
        InputError::DimensionCap { .. } => LqbStatus::DimensionCap,
        InputError::Invalid(_) => LqbStatus::Invalid,
        _ => LqbStatus::Parse,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (LqbStatus, String)>) -> LqbStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LqbStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LqbStatus::Panic
        }
    }
}

fn input(err: InputError) -> (LqbStatus, String) {
    (status_of(&err), err.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (LqbStatus, String)> {
    if s.is_null() {
        return Err((LqbStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (LqbStatus::Utf8, e.to_string()))
}

unsafe fn algebra<'a>(a: *const LqbAlgebra) -> Result<&'a LqbAlgebra, (LqbStatus, String)> {
    a.as_ref().ok_or((LqbStatus::NullPointer, "null algebra handle".into()))
}

fn out_ptr<T>(p: *mut T) -> Result<(), (LqbStatus, String)> {
    if p.is_null() {
        Err((LqbStatus::NullPointer, "null output pointer".into()))
    } else {
        Ok(())
    }
}

fn into_c(text: String) -> *mut c_char {
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

fn verdict(report: &Report) -> LqbVerdict {
    if report.passed {
        LqbVerdict::Pass
    } else {
        LqbVerdict::Fail
    }
}

/// Parses a JSON structure document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lqb_algebra_from_json(json: *const c_char, out: *mut *mut LqbAlgebra) -> LqbStatus {
    guard(|| {
        out_ptr(out)?;
        let doc = InputDocument::parse(read_str(json)?).map_err(input)?;
        *out = Box::into_raw(Box::new(LqbAlgebra { doc }));
        Ok(())
    })
}

/// Loads a catalog example by name.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lqb_algebra_from_example(name: *const c_char, out: *mut *mut LqbAlgebra) -> LqbStatus {
    guard(|| {
        out_ptr(out)?;
        let doc = example_catalog(read_str(name)?).map_err(input)?;
        *out = Box::into_raw(Box::new(LqbAlgebra { doc }));
        Ok(())
    })
}

/// # Safety
/// `a` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lqb_algebra_free(a: *mut LqbAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Dimension of the underlying Lie algebra, 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lqb_algebra_dim(a: *const LqbAlgebra) -> usize {
    a.as_ref().map_or(0, |a| a.doc.dim)
}

/// Runs the axiom, relation and Laplacian checks.
///
/// # Safety
/// `a` must be a live handle and `verdict_out` writable.
#[no_mangle]
pub unsafe extern "C" fn lqb_check(a: *const LqbAlgebra, verdict_out: *mut LqbVerdict) -> LqbStatus {
    guard(|| {
        out_ptr(verdict_out)?;
        let report = run_check(&algebra(a)?.doc, &Flags::default());
        *verdict_out = verdict(&report);
        Ok(())
    })
}

/// Like [`lqb_check`], also returning the JSON report.
///
/// # Safety
/// `a` must be a live handle; `verdict_out` and `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn lqb_check_report_json(
    a: *const LqbAlgebra,
    verdict_out: *mut LqbVerdict,
    json_out: *mut *mut c_char,
) -> LqbStatus {
    guard(|| {
        out_ptr(verdict_out)?;
        out_ptr(json_out)?;
        let report = run_check(&algebra(a)?.doc, &Flags::default());
        *verdict_out = verdict(&report);
        *json_out = into_c(report.to_json());
        Ok(())
    })
}

/// Builds the double and writes its structure document to `json_out`.
/// Returns `LQB_STATUS_INVALID` when the input does not validate.
///
/// # Safety
/// `a` must be a live handle and `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn lqb_double_json(a: *const LqbAlgebra, json_out: *mut *mut c_char) -> LqbStatus {
    guard(|| {
        out_ptr(json_out)?;
        let output = run_double(&algebra(a)?.doc, &Flags::default());
        match output.document {
            Some(doc) => {
                *json_out = into_c(doc.to_canonical_string());
                Ok(())
            }
            None => Err((LqbStatus::Invalid, output.report.summary())),
        }
    })
}

/// Verifies the representation and the map `Q`; `rank_out` receives the
/// rank of `Q`. A `max_dim` of 0 selects the default cap.
///
/// # Safety
/// `a` must be a live handle; `verdict_out` and `rank_out` writable.
#[no_mangle]
pub unsafe extern "C" fn lqb_rep_verify(
    a: *const LqbAlgebra,
    max_dim: usize,
    verdict_out: *mut LqbVerdict,
    rank_out: *mut usize,
) -> LqbStatus {
    guard(|| {
        out_ptr(verdict_out)?;
        out_ptr(rank_out)?;
        let flags = if max_dim == 0 { Flags::default() } else { Flags { max_dim } };
        let report = run_rep_verify(&algebra(a)?.doc, &flags).map_err(input)?;
        *verdict_out = verdict(&report);
        *rank_out = report.artifacts.q_rank.unwrap_or(0);
        Ok(())
    })
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lqb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lqb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
