//! C ABI for the lomo library: opaque handles, integer status codes, and a
//! thread-local last-error message.
//!
//! Ownership rules: every `*_create` / function returning a new handle
//! transfers ownership to the caller, who must release it with the matching
//! `*_free`. Output buffers are caller-allocated; length mismatches are
//! rejected with `LOMO_STATUS_INVALID_ARGUMENT`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::ptr;

use lomo::error::LomoError;
use lomo::grid::{Domain, GridFunction};
use lomo::maximal::{fractional_maximal, RadiusGrid};
use lomo::multiplier::{bochner_riesz, MultiplierSpec};
use lomo::norms::{lorentz_morrey_norm, lorentz_norm, SweepSpec};
use lomo::rearrangement::{decreasing_rearrangement, double_star, DecreasingProfile};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LomoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ComputeError = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let cstring = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn status_of(err: &LomoError) -> LomoStatus {
    set_error(&err.to_string());
    match err {
        LomoError::Io { .. } | LomoError::Json { .. } => LomoStatus::ComputeError,
        _ => LomoStatus::InvalidArgument,
    }
}

/// Message for the most recent error on this thread, or NULL when no error
/// has occurred. The pointer is valid until the next failing call on the
/// same thread; do not free it.
#[no_mangle]
pub extern "C" fn lomo_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// A sampled function on a periodic grid (opaque).
pub struct LomoGridFunction {
    inner: GridFunction,
}

/// A decreasing rearrangement profile (opaque).
pub struct LomoProfile {
    inner: DecreasingProfile,
}

/// Create a grid function from row-major samples. `n_samples` must equal
/// `n_points^dim`. On success `*out` owns the new handle.
///
/// # Safety
/// `samples` must point to `n_samples` readable doubles and `out` must be a
/// valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lomo_grid_function_create(
    dim: usize,
    side: f64,
    n_points: usize,
    samples: *const f64,
    n_samples: usize,
    out: *mut *mut LomoGridFunction,
) -> LomoStatus {
    if samples.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    let domain = match Domain::new(dim, side, n_points) {
        Ok(d) => d,
        Err(e) => return status_of(&e),
    };
    let data = std::slice::from_raw_parts(samples, n_samples).to_vec();
    match GridFunction::new(domain, data) {
        Ok(f) => {
            *out = Box::into_raw(Box::new(LomoGridFunction { inner: f }));
            LomoStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a grid function handle. NULL is accepted and ignored.
///
/// # Safety
/// `f` must be a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lomo_grid_function_free(f: *mut LomoGridFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of samples held by the grid function.
///
/// # Safety
/// `f` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lomo_grid_function_len(
    f: *const LomoGridFunction,
    out: *mut usize,
) -> LomoStatus {
    if f.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    *out = (*f).inner.samples().len();
    LomoStatus::Ok
}

/// Copy the samples into a caller-allocated buffer of length `len`, which
/// must match the value reported by `lomo_grid_function_len`.
///
/// # Safety
/// `f` must be a valid handle and `buf` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn lomo_grid_function_copy_samples(
    f: *const LomoGridFunction,
    buf: *mut f64,
    len: usize,
) -> LomoStatus {
    if f.is_null() || buf.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    let samples = (*f).inner.samples();
    if len != samples.len() {
        set_error("buffer length does not match sample count");
        return LomoStatus::InvalidArgument;
    }
    std::slice::from_raw_parts_mut(buf, len).copy_from_slice(samples);
    LomoStatus::Ok
}

/// Apply the fractional maximal operator M_alpha with a geometric family of
/// `radii_count` ball radii. `alpha` must lie in [0, dim).
///
/// # Safety
/// `f` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lomo_fractional_maximal(
    f: *const LomoGridFunction,
    alpha: f64,
    radii_count: usize,
    out: *mut *mut LomoGridFunction,
) -> LomoStatus {
    if f.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    let func = &(*f).inner;
    let radii = RadiusGrid::geometric(func.domain(), radii_count);
    match fractional_maximal(func, alpha, &radii) {
        Ok(mf) => {
            *out = Box::into_raw(Box::new(LomoGridFunction { inner: mf }));
            LomoStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Apply the Bochner-Riesz mean with exponent `delta` at scale `r`.
/// `delta` must exceed (dim - 1)/2.
///
/// # Safety
/// `f` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lomo_bochner_riesz(
    f: *const LomoGridFunction,
    delta: f64,
    r: f64,
    out: *mut *mut LomoGridFunction,
) -> LomoStatus {
    if f.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    let func = &(*f).inner;
    let spec = match MultiplierSpec::new(func.domain().dim(), delta, r) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let result = bochner_riesz(func, &spec);
    *out = Box::into_raw(Box::new(LomoGridFunction { inner: result }));
    LomoStatus::Ok
}

/// Compute the decreasing rearrangement of |f| as a step profile.
///
/// # Safety
/// `f` must be a valid handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lomo_rearrange(
    f: *const LomoGridFunction,
    out: *mut *mut LomoProfile,
) -> LomoStatus {
    if f.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    let profile = decreasing_rearrangement(&(*f).inner);
    *out = Box::into_raw(Box::new(LomoProfile { inner: profile }));
    LomoStatus::Ok
}

/// Release a profile handle. NULL is accepted and ignored.
///
/// # Safety
/// `p` must be a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lomo_profile_free(p: *mut LomoProfile) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of steps in the profile.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lomo_profile_len(
    p: *const LomoProfile,
    out: *mut usize,
) -> LomoStatus {
    if p.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    *out = (*p).inner.breakpoints().len();
    LomoStatus::Ok
}

/// Copy the profile's breakpoints and step values into two caller-allocated
/// buffers of length `len` (from `lomo_profile_len`).
///
/// # Safety
/// `p` must be a valid handle; both buffers must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn lomo_profile_copy(
    p: *const LomoProfile,
    breakpoints: *mut f64,
    values: *mut f64,
    len: usize,
) -> LomoStatus {
    if p.is_null() || breakpoints.is_null() || values.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    let profile = &(*p).inner;
    if len != profile.breakpoints().len() {
        set_error("buffer length does not match profile step count");
        return LomoStatus::InvalidArgument;
    }
    std::slice::from_raw_parts_mut(breakpoints, len).copy_from_slice(profile.breakpoints());
    std::slice::from_raw_parts_mut(values, len).copy_from_slice(profile.values());
    LomoStatus::Ok
}

/// Evaluate the profile f*(t).
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lomo_profile_value_at(
    p: *const LomoProfile,
    t: f64,
    out: *mut f64,
) -> LomoStatus {
    if p.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    *out = (*p).inner.value_at(t);
    LomoStatus::Ok
}

/// Evaluate the averaged rearrangement f**(t) = (1/t) int_0^t f*. `t` must
/// be positive.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lomo_profile_double_star(
    p: *const LomoProfile,
    t: f64,
    out: *mut f64,
) -> LomoStatus {
    if p.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    match double_star(&(*p).inner, t) {
        Ok(v) => {
            *out = v;
            LomoStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Lorentz norm ||f||_{L_{p,q}}. Requires p >= 1 and q > 0 (q may be
/// infinity).
///
/// # Safety
/// `f` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lomo_lorentz_norm(
    f: *const LomoGridFunction,
    p: f64,
    q: f64,
    out: *mut f64,
) -> LomoStatus {
    if f.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    match lorentz_norm(&(*f).inner, p, q) {
        Ok(v) => {
            *out = v;
            LomoStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Lorentz-Morrey norm via a center/radius sweep with the given per-axis
/// center stride and geometric radius count.
///
/// # Safety
/// `f` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lomo_lorentz_morrey_norm(
    f: *const LomoGridFunction,
    p: f64,
    q: f64,
    lambda: f64,
    centers_stride: usize,
    radii_count: usize,
    out: *mut f64,
) -> LomoStatus {
    if f.is_null() || out.is_null() {
        set_error("null pointer argument");
        return LomoStatus::NullPointer;
    }
    if radii_count == 0 {
        set_error("radii_count must be positive");
        return LomoStatus::InvalidArgument;
    }
    let func = &(*f).inner;
    let sweep = SweepSpec::default_for(func, centers_stride, radii_count);
    match lorentz_morrey_norm(func, p, q, lambda, &sweep) {
        Ok(v) => {
            *out = v;
            LomoStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
