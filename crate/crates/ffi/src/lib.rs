// SPDX-License-Identifier: Apache-2.0

//! C ABI over `deutsch-paths`.
//!
//! Results are returned through opaque [`DeutschSequence`] handles holding
//! exact integers; callers read them back as `int64_t` (when they fit) or as
//! decimal strings, and release them with [`deutsch_sequence_free`]. Every
//! entry point returns a [`DeutschStatus`]. A strip size `m` of
//! [`DEUTSCH_UNBOUNDED`] means no upper boundary.

use std::ffi::c_char;
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use deutsch_paths::strip::{det_replaced_poly, phi_closed, phi_limit};
use deutsch_paths::verify::{all_pass, Suite, VerifyConfig};
use deutsch_paths::{count_series, CountTable, Error, StripSpec, TruncatedSeries, Upper};

/// Strip size meaning "no upper boundary".
pub const DEUTSCH_UNBOUNDED: usize = 0;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeutschStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    OutOfRange = 3,
    Overflow = 4,
    BufferTooSmall = 5,
    VerificationFailed = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeutschMethod {
    /// Dynamic programming.
    Dp = 0,
    /// Closed-form generating function.
    Closed = 1,
}

/// Opaque list of exact integers.
pub struct DeutschSequence {
    values: Vec<BigInt>,
}

fn status_of(e: &Error) -> DeutschStatus {
    match e {
        Error::InvalidParams(_) | Error::EmptySeries | Error::TooManySteps { .. } => {
            DeutschStatus::InvalidArgument
        }
        Error::BeyondOrder { .. } => DeutschStatus::OutOfRange,
        _ => DeutschStatus::Internal,
    }
}

fn guard<F>(f: F) -> DeutschStatus
where
    F: FnOnce() -> DeutschStatus + UnwindSafe,
{
    catch_unwind(f).unwrap_or(DeutschStatus::Panic)
}

/// Boxes `values` into `*out`.
///
/// # Safety
/// `out` must be null or valid for writes.
unsafe fn emit(out: *mut *mut DeutschSequence, values: Result<Vec<BigInt>, Error>) -> DeutschStatus {
    if out.is_null() {
        return DeutschStatus::NullPointer;
    }
    match values {
        Ok(values) => {
            *out = Box::into_raw(Box::new(DeutschSequence { values }));
            DeutschStatus::Ok
        }
        Err(e) => {
            *out = ptr::null_mut();
            status_of(&e)
        }
    }
}

fn spec(t: usize, j: usize, m: usize) -> Result<StripSpec, Error> {
    if m == DEUTSCH_UNBOUNDED {
        Ok(StripSpec::unbounded(t, j))
    } else {
        StripSpec::strip(m, t, j)
    }
}

fn series(spec: &StripSpec, order: usize, method: DeutschMethod) -> Result<TruncatedSeries, Error> {
    match (method, spec.height()) {
        (DeutschMethod::Dp, _) => count_series(spec, order),
        (DeutschMethod::Closed, Some(m)) => phi_closed(m, spec.t, spec.j, order),
        (DeutschMethod::Closed, None) => phi_limit(spec.t, spec.j, order),
    }
}

/// Number of `n`-step paths from `t` to `j`, as a one-element sequence.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deutsch_count_paths(
    n: usize,
    t: usize,
    j: usize,
    m: usize,
    method: DeutschMethod,
    out: *mut *mut DeutschSequence,
) -> DeutschStatus {
    guard(move || {
        let values = spec(t, j, m)
            .and_then(|s| series(&s, n + 1, method))
            .and_then(|s| s.to_integers())
            .map(|mut v| vec![v.swap_remove(n)]);
        emit(out, values)
    })
}

/// Coefficients `0..order` of the generating function from `t` to `j`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deutsch_series(
    t: usize,
    j: usize,
    m: usize,
    order: usize,
    method: DeutschMethod,
    out: *mut *mut DeutschSequence,
) -> DeutschStatus {
    guard(move || {
        let values = spec(t, j, m)
            .and_then(|s| series(&s, order, method))
            .and_then(|s| s.to_integers());
        emit(out, values)
    })
}

/// Count table for `0..=n_max` steps from `t`, flattened row by row. The
/// number of levels per row is written to `width`.
///
/// # Safety
/// `out` and `width` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deutsch_table(
    n_max: usize,
    t: usize,
    m: usize,
    width: *mut usize,
    out: *mut *mut DeutschSequence,
) -> DeutschStatus {
    guard(move || {
        if width.is_null() {
            return DeutschStatus::NullPointer;
        }
        let upper = if m == DEUTSCH_UNBOUNDED {
            Upper::Unbounded
        } else {
            Upper::Bound(m - 1)
        };
        let table = CountTable::build(n_max, t, upper);
        if let Ok(table) = &table {
            *width = table.width();
        }
        let values = table.map(|table| {
            table
                .rows()
                .iter()
                .flatten()
                .map(|c| BigInt::from(c.clone()))
                .collect()
        });
        emit(out, values)
    })
}

/// Coefficients (lowest degree first) of the strip determinant in `z`.
/// With `replace` set, column `j` is replaced by the unit vector `e_t`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deutsch_det(
    m: usize,
    replace: bool,
    t: usize,
    j: usize,
    out: *mut *mut DeutschSequence,
) -> DeutschStatus {
    guard(move || {
        let poly = if m == 0 {
            Err(Error::InvalidParams("m must be at least 1".into()))
        } else if replace {
            det_replaced_poly(m, t, j)
        } else {
            deutsch_paths::poly::PolyMatrix::strip_system(m).det()
        };
        emit(out, poly.map(|p| p.coeffs().to_vec()))
    })
}

/// Runs every verification suite. Returns `VerificationFailed` when any
/// suite fails; `passed` receives the overall verdict.
///
/// # Safety
/// `passed` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deutsch_verify(
    m_max: usize,
    t_max: usize,
    n_max: usize,
    trunc: usize,
    passed: *mut bool,
) -> DeutschStatus {
    guard(move || {
        if passed.is_null() {
            return DeutschStatus::NullPointer;
        }
        if m_max == 0 || n_max == 0 || trunc < 2 {
            return DeutschStatus::InvalidArgument;
        }
        let cfg = VerifyConfig {
            m_max,
            t_max,
            n_max,
            trunc,
            ..VerifyConfig::default()
        };
        let ok = all_pass(&cfg.run(&Suite::ALL));
        *passed = ok;
        if ok {
            DeutschStatus::Ok
        } else {
            DeutschStatus::VerificationFailed
        }
    })
}

/// Number of values in the sequence; 0 for a null handle.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn deutsch_sequence_len(seq: *const DeutschSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.values.len())
}

/// Reads value `index` as a signed 64-bit integer.
///
/// # Safety
/// `seq` must be null or a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deutsch_sequence_get_i64(
    seq: *const DeutschSequence,
    index: usize,
    out: *mut i64,
) -> DeutschStatus {
    let (Some(seq), false) = (seq.as_ref(), out.is_null()) else {
        return DeutschStatus::NullPointer;
    };
    let Some(v) = seq.values.get(index) else {
        return DeutschStatus::OutOfRange;
    };
    match v.to_i64() {
        Some(x) => {
            *out = x;
            DeutschStatus::Ok
        }
        None => DeutschStatus::Overflow,
    }
}

/// Writes value `index` as a NUL-terminated decimal string into `buf`.
/// `needed` receives the buffer size required, terminator included, so a
/// call with `cap == 0` sizes the buffer.
///
/// # Safety
/// `seq` must be null or a live handle; `buf` valid for `cap` bytes;
/// `needed` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deutsch_sequence_get_decimal(
    seq: *const DeutschSequence,
    index: usize,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> DeutschStatus {
    let Some(seq) = seq.as_ref() else {
        return DeutschStatus::NullPointer;
    };
    let Some(v) = seq.values.get(index) else {
        return DeutschStatus::OutOfRange;
    };
    let text = v.to_string();
    let size = text.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if cap < size {
        return DeutschStatus::BufferTooSmall;
    }
    if buf.is_null() {
        return DeutschStatus::NullPointer;
    }
    ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
    *buf.add(text.len()) = 0;
    DeutschStatus::Ok
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `seq` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn deutsch_sequence_free(seq: *mut DeutschSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn deutsch_status_message(status: DeutschStatus) -> *const c_char {
    let msg: &'static std::ffi::CStr = match status {
        DeutschStatus::Ok => c"ok",
        DeutschStatus::InvalidArgument => c"invalid argument",
        DeutschStatus::NullPointer => c"null pointer",
        DeutschStatus::OutOfRange => c"index out of range",
        DeutschStatus::Overflow => c"value does not fit in 64 bits",
        DeutschStatus::BufferTooSmall => c"buffer too small",
        DeutschStatus::VerificationFailed => c"verification failed",
        DeutschStatus::Internal => c"internal consistency failure",
        DeutschStatus::Panic => c"panic in library",
    };
    msg.as_ptr()
}
