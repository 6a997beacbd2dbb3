//! C interface to `toric-cohomology`.
//!
//! Fans and matrices are opaque handles created by `toric_*` functions and
//! released with the matching `*_free`. Every fallible call returns a
//! [`ToricStatus`]; on failure the thread-local message from
//! [`toric_last_error_message`] describes the cause. Ray labels are 1-based.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use toric_cohomology::io::rational_string;
use toric_cohomology::{
    cup_matrix, intersection_matrix, normal_fan, verify_duality, Error, Fan, Polygon, RationalMatrix,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToricStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidFan = 2,
    InvalidPolygon = 3,
    NotNormalized = 4,
    IndexOutOfRange = 5,
    Overflow = 6,
    Singular = 7,
    Unsupported = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// Opaque complete fan.
pub struct ToricFan(Fan);

/// Opaque matrix of exact rationals.
pub struct ToricMatrix(RationalMatrix);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> ToricStatus {
    match e {
        Error::NotNormalized => ToricStatus::NotNormalized,
        Error::IndexOutOfRange { .. } => ToricStatus::IndexOutOfRange,
        Error::Overflow => ToricStatus::Overflow,
        Error::Singular => ToricStatus::Singular,
        Error::TooFewVertices(_) | Error::RepeatedVertex(..) | Error::DegeneratePolygon(_) | Error::NotConvex(_) => {
            ToricStatus::InvalidPolygon
        }
        Error::UnsupportedOrientation(_) | Error::SmoothVertexRequired => ToricStatus::Unsupported,
        _ => ToricStatus::InvalidFan,
    }
}

/// Runs `f`, recording the error message and mapping panics to `Panic`.
fn guard(f: impl FnOnce() -> Result<(), (ToricStatus, String)>) -> ToricStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            ToricStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            ToricStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (ToricStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (ToricStatus, String) {
    (ToricStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `coords` must hold `2 * count` readable values, or be null when `count` is 0.
unsafe fn pairs(coords: *const i64, count: usize) -> Result<Vec<(i64, i64)>, (ToricStatus, String)> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if coords.is_null() {
        return Err(null("coords"));
    }
    let flat = std::slice::from_raw_parts(coords, 2 * count);
    Ok(flat.chunks_exact(2).map(|c| (c[0], c[1])).collect())
}

unsafe fn fan_ref<'a>(fan: *const ToricFan) -> Result<&'a Fan, (ToricStatus, String)> {
    fan.as_ref().map(|f| &f.0).ok_or_else(|| null("fan"))
}

unsafe fn matrix_ref<'a>(m: *const ToricMatrix) -> Result<&'a RationalMatrix, (ToricStatus, String)> {
    m.as_ref().map(|m| &m.0).ok_or_else(|| null("matrix"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (ToricStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Validates `ray_count` rays given as interleaved `a0, b0, a1, b1, ...` in
/// counterclockwise order.
///
/// # Safety
/// `coords` must point to `2 * ray_count` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_fan_new(coords: *const i64, ray_count: usize, out: *mut *mut ToricFan) -> ToricStatus {
    guard(|| {
        let fan = Fan::new(pairs(coords, ray_count)?).map_err(lib_err)?;
        put(out, ToricFan(fan))
    })
}

/// Normal fan of a convex lattice polygon with vertices in counterclockwise order.
///
/// # Safety
/// `coords` must point to `2 * vertex_count` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_fan_from_polygon(
    coords: *const i64,
    vertex_count: usize,
    out: *mut *mut ToricFan,
) -> ToricStatus {
    guard(|| {
        let polygon = Polygon::new(pairs(coords, vertex_count)?).map_err(lib_err)?;
        let fan = normal_fan(&polygon).map_err(lib_err)?;
        put(out, ToricFan(fan))
    })
}

/// # Safety
/// `fan` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn toric_fan_free(fan: *mut ToricFan) {
    if !fan.is_null() {
        drop(Box::from_raw(fan));
    }
}

/// Number of rays, or 0 for a null handle.
///
/// # Safety
/// `fan` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn toric_fan_ray_count(fan: *const ToricFan) -> usize {
    fan.as_ref().map_or(0, |f| f.0.len())
}

/// # Safety
/// `fan` must be a live handle; `a` and `b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_fan_ray(fan: *const ToricFan, label: usize, a: *mut i64, b: *mut i64) -> ToricStatus {
    guard(|| {
        let ray = fan_ref(fan)?.ray(label).map_err(lib_err)?;
        if a.is_null() || b.is_null() {
            return Err(null("output coordinate"));
        }
        *a = ray.a;
        *b = ray.b;
        Ok(())
    })
}

/// Normalizes with ray `pivot` moved to position n+1; `pivot` 0 selects the
/// fan's own ray n+1.
///
/// # Safety
/// `fan` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_fan_normalize(
    fan: *const ToricFan,
    pivot: usize,
    out: *mut *mut ToricFan,
) -> ToricStatus {
    guard(|| {
        let fan = fan_ref(fan)?;
        let pivot = if pivot == 0 { fan.len() - 1 } else { pivot };
        let normalized = fan.normalize(pivot).map_err(lib_err)?;
        put(out, ToricFan(normalized.fan))
    })
}

/// Intersection product matrix of a normalized fan.
///
/// # Safety
/// `fan` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_intersection_matrix(fan: *const ToricFan, out: *mut *mut ToricMatrix) -> ToricStatus {
    guard(|| {
        let fan = fan_ref(fan)?;
        if !fan.is_normalized() {
            return Err(lib_err(Error::NotNormalized));
        }
        put(out, ToricMatrix(intersection_matrix(fan).map_err(lib_err)?))
    })
}

/// Cellular cup product matrix of a normalized fan.
///
/// # Safety
/// `fan` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_cup_matrix(fan: *const ToricFan, out: *mut *mut ToricMatrix) -> ToricStatus {
    guard(|| {
        let m = cup_matrix(fan_ref(fan)?).map_err(lib_err)?;
        put(out, ToricMatrix(m.matrix))
    })
}

/// Checks that the two matrices of a normalized fan are mutually inverse.
/// Either output pointer may be null.
///
/// # Safety
/// `fan` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_verify(
    fan: *const ToricFan,
    identity_holds: *mut bool,
    oracle_agrees: *mut bool,
) -> ToricStatus {
    guard(|| {
        let report = verify_duality(fan_ref(fan)?).map_err(lib_err)?;
        if !identity_holds.is_null() {
            *identity_holds = report.identity_holds;
        }
        if !oracle_agrees.is_null() {
            *oracle_agrees = report.oracle_agrees;
        }
        Ok(())
    })
}

/// # Safety
/// `m` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn toric_matrix_free(m: *mut ToricMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn toric_matrix_rows(m: *const ToricMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn toric_matrix_cols(m: *const ToricMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Entry `(row, col)` (0-based) as a reduced fraction `num / den` with
/// `den > 0`. Returns `TORIC_STATUS_OVERFLOW` if either part exceeds 64 bits;
/// use [`toric_matrix_entry_string`] then.
///
/// # Safety
/// `m` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn toric_matrix_entry(
    m: *const ToricMatrix,
    row: usize,
    col: usize,
    num: *mut i64,
    den: *mut i64,
) -> ToricStatus {
    guard(|| {
        let m = matrix_ref(m)?;
        if row >= m.rows() || col >= m.cols() {
            return Err((
                ToricStatus::IndexOutOfRange,
                format!("entry ({row}, {col}) of a {}x{} matrix", m.rows(), m.cols()),
            ));
        }
        if num.is_null() || den.is_null() {
            return Err(null("output fraction"));
        }
        let x = &m[(row, col)];
        match (x.numer().to_i64(), x.denom().to_i64()) {
            (Some(p), Some(q)) => {
                *num = p;
                *den = q;
                Ok(())
            }
            _ => Err((ToricStatus::Overflow, format!("entry {x} does not fit in 64 bits"))),
        }
    })
}

/// Writes entry `(row, col)` as a NUL-terminated `"p/q"` (or `"p"`) string.
/// `*needed` receives the buffer size required, including the terminator;
/// if `capacity` is smaller, nothing is written and `TORIC_STATUS_BUFFER_TOO_SMALL`
/// is returned. `buf` may be null when `capacity` is 0.
///
/// # Safety
/// `m` must be a live handle; `buf` must have `capacity` writable bytes;
/// `needed` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn toric_matrix_entry_string(
    m: *const ToricMatrix,
    row: usize,
    col: usize,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> ToricStatus {
    guard(|| {
        let m = matrix_ref(m)?;
        if row >= m.rows() || col >= m.cols() {
            return Err((
                ToricStatus::IndexOutOfRange,
                format!("entry ({row}, {col}) of a {}x{} matrix", m.rows(), m.cols()),
            ));
        }
        let text = rational_string(&m[(row, col)]);
        let size = text.len() + 1;
        if !needed.is_null() {
            *needed = size;
        }
        if capacity < size {
            return Err((ToricStatus::BufferTooSmall, format!("need {size} bytes, have {capacity}")));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        *buf.add(text.len()) = 0;
        Ok(())
    })
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn toric_status_message(status: ToricStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        ToricStatus::Ok => b"ok\0",
        ToricStatus::NullPointer => b"null pointer argument\0",
        ToricStatus::InvalidFan => b"rays do not form a complete fan\0",
        ToricStatus::InvalidPolygon => b"vertices do not form a convex lattice polygon\0",
        ToricStatus::NotNormalized => b"fan is not normalized\0",
        ToricStatus::IndexOutOfRange => b"index out of range\0",
        ToricStatus::Overflow => b"integer overflow\0",
        ToricStatus::Singular => b"matrix is singular\0",
        ToricStatus::Unsupported => b"unsupported fan orientation\0",
        ToricStatus::BufferTooSmall => b"buffer too small\0",
        ToricStatus::Panic => b"internal panic\0",
    };
    text.as_ptr().cast()
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next `toric_*` call on the same thread.
#[no_mangle]
pub extern "C" fn toric_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
