//! C interface to `quiver-core`.
//!
//! Every function returns a [`QvStatus`]; results come back through out
//! pointers. Handles are opaque and released with the matching `*_free`.
//! Strings returned to the caller are released with [`qv_string_free`].
//! After a non-`Ok` status, [`qv_last_error_message`] describes the failure
//! on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::sync::Arc;

use quiver_core::quiver::compute_p;
use quiver_core::schubert::{normalize, rank_conditions_of};
use quiver_core::stanley::{reduced_word_count, stanley_function};
use quiver_core::{Error, Partition, PartitionTuple, Permutation, RankConditions, SchurElement, TensorElement};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Overflow = 4,
    Internal = 5,
}

/// Validated rank conditions.
pub struct QvRankConditions(RankConditions);

/// An element of a tensor power of the ring of symmetric functions.
pub struct QvTensor(Arc<TensorElement>);

/// A symmetric function in the Schur basis.
pub struct QvSchur(SchurElement);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: QvStatus, msg: &str) -> QvStatus {
    set_error(msg);
    status
}

fn from_core(e: Error) -> QvStatus {
    let status = match e {
        Error::NonExactDivision(..) | Error::ExpansionMismatch => QvStatus::Internal,
        _ => QvStatus::InvalidInput,
    };
    fail(status, &e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, QvStatus> {
    if s.is_null() {
        return Err(fail(QvStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(QvStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> QvStatus {
    if out.is_null() {
        return fail(QvStatus::NullPointer, "null output pointer");
    }
    *out = value;
    QvStatus::Ok
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

macro_rules! try_qv {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! handle {
    ($p:expr) => {{
        if $p.is_null() {
            return fail(QvStatus::NullPointer, "null handle");
        }
        &*$p
    }};
}

/// Message for the last failure on this thread, or an empty string. Owned by
/// the library and valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn qv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses rank conditions in text form (`n`, then `n + 1` rows).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_rank_conditions_parse(text: *const c_char, out: *mut *mut QvRankConditions) -> QvStatus {
    let text = try_qv!(read_str(text));
    let r: RankConditions = match text.parse() {
        Ok(r) => r,
        Err(e) => return from_core(e),
    };
    if let Err(e) = r.check() {
        return from_core(e);
    }
    write_out(out, Box::into_raw(Box::new(QvRankConditions(r))))
}

/// Rank conditions of a permutation given in one-line notation.
///
/// # Safety
/// `perm` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_rank_conditions_from_permutation(
    perm: *const c_char,
    out: *mut *mut QvRankConditions,
) -> QvStatus {
    let w = try_qv!(parse_perm(perm));
    let (w, _) = normalize(&w);
    write_out(out, Box::into_raw(Box::new(QvRankConditions(rank_conditions_of(&w)))))
}

unsafe fn parse_perm(perm: *const c_char) -> Result<Permutation, QvStatus> {
    read_str(perm)?.parse().map_err(from_core)
}

/// Number of maps `n` in the sequence.
///
/// # Safety
/// `r` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_rank_conditions_n(r: *const QvRankConditions, out: *mut usize) -> QvStatus {
    let r = handle!(r);
    write_out(out, r.0.n())
}

/// Expected codimension `d(r)`.
///
/// # Safety
/// `r` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_rank_conditions_codim(r: *const QvRankConditions, out: *mut usize) -> QvStatus {
    let r = handle!(r);
    match r.0.expected_codim() {
        Ok(d) => write_out(out, d),
        Err(e) => from_core(e),
    }
}

/// # Safety
/// `r` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qv_rank_conditions_free(r: *mut QvRankConditions) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// The element `P_r` whose coefficients are the quiver coefficients.
///
/// # Safety
/// `r` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_compute_p(r: *const QvRankConditions, out: *mut *mut QvTensor) -> QvStatus {
    let r = handle!(r);
    match compute_p(&r.0) {
        Ok(p) => write_out(out, Box::into_raw(Box::new(QvTensor(p)))),
        Err(e) => from_core(e),
    }
}

/// # Safety
/// `t` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_tensor_arity(t: *const QvTensor, out: *mut usize) -> QvStatus {
    let t = handle!(t);
    write_out(out, t.0.arity())
}

/// Number of non-zero terms.
///
/// # Safety
/// `t` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_tensor_term_count(t: *const QvTensor, out: *mut usize) -> QvStatus {
    let t = handle!(t);
    write_out(out, t.0.len())
}

/// Coefficient of the term whose shapes are given as a JSON array of
/// partitions, e.g. `[[1],[],[2,1]]`.
///
/// # Safety
/// `t` must come from this library, `shapes_json` must be a NUL-terminated
/// string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_tensor_coefficient(t: *const QvTensor, shapes_json: *const c_char, out: *mut i64) -> QvStatus {
    let t = handle!(t);
    let text = try_qv!(read_str(shapes_json));
    let shapes: Vec<Partition> = match serde_json::from_str(text) {
        Ok(s) => s,
        Err(e) => return fail(QvStatus::InvalidInput, &format!("shapes: {e}")),
    };
    if shapes.len() != t.0.arity() {
        return from_core(Error::ArityMismatch(t.0.arity(), shapes.len()));
    }
    let c = t.0.coefficient(&PartitionTuple(shapes));
    match i64::try_from(&c) {
        Ok(v) => write_out(out, v),
        Err(_) => fail(QvStatus::Overflow, &format!("coefficient {c} does not fit in 64 bits")),
    }
}

/// JSON array of `{"shapes": [...], "coeff": c}` objects.
///
/// # Safety
/// `t` must come from this library; `out` must be writable. Release the
/// string with `qv_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qv_tensor_json(t: *const QvTensor, out: *mut *mut c_char) -> QvStatus {
    let t = handle!(t);
    match serde_json::to_string(&*t.0) {
        Ok(s) => write_out(out, to_c_string(s)),
        Err(e) => fail(QvStatus::Internal, &e.to_string()),
    }
}

/// # Safety
/// `t` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qv_tensor_free(t: *mut QvTensor) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Stanley symmetric function of a permutation.
///
/// # Safety
/// `perm` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_stanley(perm: *const c_char, out: *mut *mut QvSchur) -> QvStatus {
    let w = try_qv!(parse_perm(perm));
    match stanley_function(&w) {
        Ok(f) => write_out(out, Box::into_raw(Box::new(QvSchur(f)))),
        Err(e) => from_core(e),
    }
}

/// Text form such as `s[2] + s[1,1]`.
///
/// # Safety
/// `s` must come from this library; `out` must be writable. Release the
/// string with `qv_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qv_schur_to_string(s: *const QvSchur, out: *mut *mut c_char) -> QvStatus {
    let s = handle!(s);
    write_out(out, to_c_string(s.0.to_string()))
}

/// JSON map from partition to coefficient, e.g. `{"[3,1]":1}`.
///
/// # Safety
/// `s` must come from this library; `out` must be writable. Release the
/// string with `qv_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qv_schur_json(s: *const QvSchur, out: *mut *mut c_char) -> QvStatus {
    let s = handle!(s);
    match serde_json::to_string(&s.0) {
        Ok(j) => write_out(out, to_c_string(j)),
        Err(e) => fail(QvStatus::Internal, &e.to_string()),
    }
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qv_schur_free(s: *mut QvSchur) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of reduced words of a permutation.
///
/// # Safety
/// `perm` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qv_reduced_word_count(perm: *const c_char, out: *mut u64) -> QvStatus {
    let w = try_qv!(parse_perm(perm));
    let n = reduced_word_count(&w);
    match u64::try_from(&n) {
        Ok(v) => write_out(out, v),
        Err(_) => fail(QvStatus::Overflow, &format!("count {n} does not fit in 64 bits")),
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
