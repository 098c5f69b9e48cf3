//! C interface to `springer-k`.
//!
//! Every function returns an [`SkStatus`]. On failure the message is
//! available from [`sk_last_error`] until the next call on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and released with [`sk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use springer_k::fixed_points::fixed_points;
use springer_k::groebner::{generic_rank, OrderKind};
use springer_k::presentation::build;
use springer_k::verify::{run_suite, Suite, VerifyConfig};
use springer_k::{Error, Flavor, IdealPresentation, Partition};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkStatus {
    Ok = 0,
    CheckFailed = 1,
    InvalidArgument = 2,
    Degenerate = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Opaque partition handle.
pub struct SkPartition {
    inner: Partition,
}

/// Opaque ideal presentation handle.
pub struct SkPresentation {
    inner: IdealPresentation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> SkStatus {
    match e {
        Error::Degenerate { .. } => SkStatus::Degenerate,
        Error::InfiniteQuotient => SkStatus::CheckFailed,
        _ => SkStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<SkStatus, (SkStatus, String)>) -> SkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SkStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (SkStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(name: &str) -> (SkStatus, String) {
    (SkStatus::NullPointer, format!("{name} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, (SkStatus, String)> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SkStatus::InvalidArgument, format!("{name} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) {
    *out = value;
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL in generated text").into_raw()
}

/// Parses comma-separated parts. Unsorted input is sorted.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sk_partition_parse(text: *const c_char, out: *mut *mut SkPartition) -> SkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(text, "text")?;
        let parsed = Partition::parse(text).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(SkPartition { inner: parsed.partition })));
        Ok(SkStatus::Ok)
    })
}

/// # Safety
/// `partition` must come from [`sk_partition_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn sk_partition_free(partition: *mut SkPartition) {
    if !partition.is_null() {
        drop(Box::from_raw(partition));
    }
}

/// Size `n` of the partition.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_partition_size(partition: *const SkPartition, out: *mut usize) -> SkStatus {
    guard(|| {
        let partition = partition.as_ref().ok_or_else(|| null("partition"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_out(out, partition.inner.size());
        Ok(SkStatus::Ok)
    })
}

/// `n!/(λ_1!⋯λ_l!)` in decimal.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_partition_multinomial(partition: *const SkPartition, out: *mut *mut c_char) -> SkStatus {
    guard(|| {
        let partition = partition.as_ref().ok_or_else(|| null("partition"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_out(out, to_c_string(partition.inner.multinomial().to_string()));
        Ok(SkStatus::Ok)
    })
}

/// Builds a presentation. `flavor` is one of `EqK`, `EqK-compact`, `EqCoh`,
/// `OrdK`, `Flag`, `ClassicalCoh`.
///
/// # Safety
/// Pointers must be valid; `flavor` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sk_presentation_build(
    partition: *const SkPartition,
    flavor: *const c_char,
    out: *mut *mut SkPresentation,
) -> SkStatus {
    guard(|| {
        let partition = partition.as_ref().ok_or_else(|| null("partition"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let flavor: Flavor = read_str(flavor, "flavor")?.parse().map_err(lib_err)?;
        let inner = build(flavor, &partition.inner);
        write_out(out, Box::into_raw(Box::new(SkPresentation { inner })));
        Ok(SkStatus::Ok)
    })
}

/// # Safety
/// `presentation` must come from [`sk_presentation_build`] or be null.
#[no_mangle]
pub unsafe extern "C" fn sk_presentation_free(presentation: *mut SkPresentation) {
    if !presentation.is_null() {
        drop(Box::from_raw(presentation));
    }
}

/// Number of nonzero generators.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_presentation_generator_count(
    presentation: *const SkPresentation,
    out: *mut usize,
) -> SkStatus {
    guard(|| {
        let presentation = presentation.as_ref().ok_or_else(|| null("presentation"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_out(out, presentation.inner.generators().len());
        Ok(SkStatus::Ok)
    })
}

/// The presentation as JSON.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_presentation_to_json(
    presentation: *const SkPresentation,
    out: *mut *mut c_char,
) -> SkStatus {
    guard(|| {
        let presentation = presentation.as_ref().ok_or_else(|| null("presentation"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let json = serde_json_string(&presentation.inner.to_json());
        write_out(out, to_c_string(json));
        Ok(SkStatus::Ok)
    })
}

fn serde_json_string(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).expect("serializable output")
}

/// Quotient dimension at a generic point, certified by two seeds.
/// Returns [`SkStatus::Degenerate`] when the retries run out.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_generic_rank(
    presentation: *const SkPresentation,
    seed: u64,
    retries: u32,
    out: *mut usize,
) -> SkStatus {
    guard(|| {
        let presentation = presentation.as_ref().ok_or_else(|| null("presentation"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let r = generic_rank(&presentation.inner, seed, retries, OrderKind::GrevLex).map_err(lib_err)?;
        write_out(out, r.rank);
        Ok(SkStatus::Ok)
    })
}

/// Fixed-point words as a JSON array of arrays.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_fixed_points_json(partition: *const SkPartition, out: *mut *mut c_char) -> SkStatus {
    guard(|| {
        let partition = partition.as_ref().ok_or_else(|| null("partition"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let set = fixed_points(&partition.inner);
        let points: Vec<&[usize]> = set.points.iter().map(|w| w.as_slice()).collect();
        write_out(out, to_c_string(serde_json_string(&points)));
        Ok(SkStatus::Ok)
    })
}

/// Runs a verification suite and writes the list of check reports as JSON
/// to `out` (which may be null). Returns [`SkStatus::CheckFailed`] if any
/// check fails; `out` is filled in either case.
///
/// # Safety
/// Pointers must be valid; `suite` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sk_verify(
    partition: *const SkPartition,
    suite: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> SkStatus {
    guard(|| {
        let partition = partition.as_ref().ok_or_else(|| null("partition"))?;
        let suite: Suite = read_str(suite, "suite")?.parse().map_err(lib_err)?;
        let config = VerifyConfig { seed, ..VerifyConfig::default() };
        let reports = run_suite(suite, &partition.inner, &config);
        if !out.is_null() {
            write_out(out, to_c_string(serde_json_string(&reports)));
        }
        if reports.iter().all(|r| r.pass) {
            Ok(SkStatus::Ok)
        } else {
            let first = reports.iter().find(|r| !r.pass).unwrap();
            Err((SkStatus::CheckFailed, first.to_string()))
        }
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null.
#[no_mangle]
pub extern "C" fn sk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
