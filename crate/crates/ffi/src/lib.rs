//! C ABI over the `ypattern` engine.
//!
//! Quivers and seeds are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`YpStatus`] and writes its result
//! through an out pointer; on failure the message is available from
//! [`yp_last_error`] on the same thread. Strings returned by the library are
//! released with [`yp_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};
use ypattern::dynkin::DynkinType;
use ypattern::quiver::{ProductKind, QuiverJson, ValuedQuiver};
use ypattern::seed::{seed_equals, Seed, SeedJson};
use ypattern::ysystem::{
    verify_direct_ysystem, verify_folding, verify_periodicity_with, PatternKind, VerifyOptions,
};
use ypattern::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum YpStatus {
    Ok = 0,
    /// Malformed argument: bad JSON, unknown type, vertex out of range.
    InvalidInput = 1,
    NullPointer = 2,
    /// Broken engine invariant or a caught panic.
    Internal = 3,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum YpProduct {
    Tensor = 0,
    Triangle = 1,
    Square = 2,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum YpSystem {
    Boxtimes = 0,
    Square = 1,
    Direct = 2,
    Fold = 3,
}

/// Opaque valued quiver.
pub struct YpQuiver(ValuedQuiver);

/// Opaque seed.
pub struct YpSeed(Seed);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Failure {
    Null(&'static str),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

/// Runs `f`, mapping errors and panics onto status codes.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> YpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => YpStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            YpStatus::NullPointer
        }
        Ok(Err(Failure::Engine(e))) => {
            set_error(e.to_string());
            if e.is_input_error() {
                YpStatus::InvalidInput
            } else {
                YpStatus::Internal
            }
        }
        Err(_) => {
            set_error("panic inside ypattern".to_string());
            YpStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Engine(Error::input(format!("{what} is not UTF-8"))))
}

unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    *out = CString::new(s).expect("JSON has no nul bytes").into_raw();
    Ok(())
}

fn parse_type(s: &str) -> Result<DynkinType, Failure> {
    Ok(s.parse::<DynkinType>()?)
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn yp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, released once.
#[no_mangle]
pub unsafe extern "C" fn yp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"vertices": [...], "b": [[...]], "d": [...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_quiver_from_json(
    json: *const c_char,
    out: *mut *mut YpQuiver,
) -> YpStatus {
    guard(|| {
        let j: QuiverJson = serde_json::from_str(text(json, "json")?)
            .map_err(|e| Error::Parse(format!("quiver JSON: {e}")))?;
        put(out, YpQuiver(ValuedQuiver::from_json(j)?))
    })
}

/// Alternating quiver of a Dynkin type such as `"D4"` or `"B3"`.
///
/// # Safety
/// `dynkin_type` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_quiver_alternating(
    dynkin_type: *const c_char,
    out: *mut *mut YpQuiver,
) -> YpStatus {
    guard(|| {
        let t = parse_type(text(dynkin_type, "dynkin_type")?)?;
        put(out, YpQuiver(ValuedQuiver::alternating(t)))
    })
}

/// # Safety
/// `q` must be a live quiver handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_quiver_to_json(q: *const YpQuiver, out: *mut *mut c_char) -> YpStatus {
    guard(|| {
        let q = handle(q, "quiver")?;
        put_string(
            out,
            serde_json::to_string(&q.0.to_json()).expect("quivers serialize"),
        )
    })
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `q` must be null or a live quiver handle.
#[no_mangle]
pub unsafe extern "C" fn yp_quiver_len(q: *const YpQuiver) -> size_t {
    q.as_ref().map_or(0, |q| q.0.len())
}

/// Mutation at the 0-based vertex `k`, into a new handle.
///
/// # Safety
/// `q` must be a live quiver handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_quiver_mutate(
    q: *const YpQuiver,
    k: size_t,
    out: *mut *mut YpQuiver,
) -> YpStatus {
    guard(|| {
        let q = handle(q, "quiver")?;
        put(out, YpQuiver(q.0.mutate(k)?))
    })
}

/// Tensor, triangle or square product of two acyclic quivers.
///
/// # Safety
/// `a` and `b` must be live quiver handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_quiver_product(
    a: *const YpQuiver,
    b: *const YpQuiver,
    kind: YpProduct,
    out: *mut *mut YpQuiver,
) -> YpStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        let kind = match kind {
            YpProduct::Tensor => ProductKind::Tensor,
            YpProduct::Triangle => ProductKind::Triangle,
            YpProduct::Square => ProductKind::Square,
        };
        put(out, YpQuiver(a.0.product(&b.0, kind)?))
    })
}

/// # Safety
/// `q` must be null or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn yp_quiver_free(q: *mut YpQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Initial seed with principal coefficients at `q`.
///
/// # Safety
/// `q` must be a live quiver handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_seed_initial(q: *const YpQuiver, out: *mut *mut YpSeed) -> YpStatus {
    guard(|| {
        let q = handle(q, "quiver")?;
        put(out, YpSeed(Seed::initial(&q.0)))
    })
}

/// # Safety
/// `s` must be a live seed handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_seed_mutate(
    s: *const YpSeed,
    k: size_t,
    out: *mut *mut YpSeed,
) -> YpStatus {
    guard(|| {
        let s = handle(s, "seed")?;
        put(out, YpSeed(s.0.mutate(k)?))
    })
}

/// # Safety
/// `a` and `b` must be live seed handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_seed_equals(
    a: *const YpSeed,
    b: *const YpSeed,
    out: *mut bool,
) -> YpStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        *out = seed_equals(&a.0, &b.0)?;
        Ok(())
    })
}

/// `{"b": ..., "d": ..., "c": ..., "f": [...], "g": ...}`.
///
/// # Safety
/// `s` must be a live seed handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_seed_to_json(s: *const YpSeed, out: *mut *mut c_char) -> YpStatus {
    guard(|| {
        let s = handle(s, "seed")?;
        put_string(
            out,
            serde_json::to_string(&s.0.to_json()).expect("seeds serialize"),
        )
    })
}

/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yp_seed_from_json(json: *const c_char, out: *mut *mut YpSeed) -> YpStatus {
    guard(|| {
        let j: SeedJson = serde_json::from_str(text(json, "json")?)
            .map_err(|e| Error::Parse(format!("seed JSON: {e}")))?;
        put(out, YpSeed(Seed::from_json(j)?))
    })
}

/// # Safety
/// `s` must be null or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn yp_seed_free(s: *mut YpSeed) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Runs a verification and writes the JSON report to `out_json` and its
/// verdict to `out_verified`. `max_rounds = 0` uses the default bound;
/// `trials` is the number of random points.
///
/// # Safety
/// `left` and `right` must be nul-terminated strings; out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn yp_verify_periodicity(
    left: *const c_char,
    right: *const c_char,
    system: YpSystem,
    max_rounds: size_t,
    trials: size_t,
    rng_seed: u64,
    out_json: *mut *mut c_char,
    out_verified: *mut bool,
) -> YpStatus {
    guard(|| {
        let l = parse_type(text(left, "left")?)?;
        let r = parse_type(text(right, "right")?)?;
        if out_verified.is_null() {
            return Err(Failure::Null("out_verified"));
        }
        let bound = (max_rounds > 0).then_some(max_rounds);
        let report = match system {
            YpSystem::Boxtimes | YpSystem::Square => {
                let opts = VerifyOptions {
                    pattern: if system == YpSystem::Square {
                        PatternKind::Square
                    } else {
                        PatternKind::Boxtimes
                    },
                    max_rounds: bound,
                    point_trials: trials,
                    rng_seed,
                    ..VerifyOptions::default()
                };
                verify_periodicity_with(l, r, &opts, &mut |_, _| {})?
            }
            YpSystem::Direct => verify_direct_ysystem(l, r, trials, rng_seed)?,
            YpSystem::Fold => verify_folding(l, r, bound, false)?,
        };
        put_string(out_json, report.to_json())?;
        *out_verified = report.is_verified();
        Ok(())
    })
}
