//! C interface to the expansion and periodicity pipeline.
//!
//! Inputs cross the boundary as NUL-terminated strings in the same formats
//! the CLI accepts: rationals are "n" or "n/d", triples are comma-separated.
//! Results come back through out-pointers, every function returns a
//! [`CfStatus`], and orbits are opaque handles that the caller must release
//! with [`cubefarey_orbit_free`]. The header `include/cubefarey.h` is
//! generated from this file with cbindgen and checked in.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use cubefarey::analysis::{detect_period, is_pisot, period_matrix, PeriodResult};
use cubefarey::farey::{PointPair, ValueExponent};
use cubefarey::numberfield::CubicField;
use cubefarey::{ratstr, Error};
use num_bigint::BigInt;

/// Result code returned by every function in this library.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CfStatus {
    /// The call succeeded.
    Ok = 0,
    /// An input string failed to parse, or it described an unusable field,
    /// point, or exponent (reducible polynomial, no such real root, ...).
    InvalidInput = 1,
    /// Iteration reached the step cap without the state repeating. The
    /// orbit handle is still produced so the digits seen so far can be read,
    /// but preperiod, period, charpoly and Pisot data are unavailable.
    CapExceeded = 2,
    /// An exact-arithmetic invariant failed; this signals a bug, not bad
    /// input.
    Arithmetic = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// An input string was not valid UTF-8.
    BadEncoding = 5,
    /// A panic was caught at the boundary.
    Panicked = 6,
}

/// One computed orbit: the digit sequence together with, when the orbit is
/// periodic, its period data. Opaque; create with [`cubefarey_orbit_compute`]
/// and release with [`cubefarey_orbit_free`].
pub struct CfOrbit {
    result: PeriodResult,
    charpoly: Option<[BigInt; 3]>,
    pisot: Option<bool>,
}

fn status_of(err: &Error) -> CfStatus {
    match err {
        Error::Reducible | Error::NotIsolating(_) | Error::InvalidInput(_) => {
            CfStatus::InvalidInput
        }
        _ => CfStatus::Arithmetic,
    }
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Result<&'a str, CfStatus> {
    if ptr.is_null() {
        return Err(CfStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| CfStatus::BadEncoding)
}

fn parse_int_triple(s: &str) -> Result<[BigInt; 3], CfStatus> {
    let rats = ratstr::parse_triple(s).map_err(|e| status_of(&e))?;
    if rats.iter().any(|r| !r.is_integer()) {
        return Err(CfStatus::InvalidInput);
    }
    Ok(rats.map(|r| r.numer().clone()))
}

fn guarded<T>(f: impl FnOnce() -> Result<T, CfStatus>) -> Result<T, CfStatus> {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(Err(CfStatus::Panicked))
}

/// Runs the expansion from the point (alpha, beta) until the state repeats
/// or `cap` steps have been taken, and stores the outcome in `*out`.
///
/// `field` holds the coefficients "c0,c1,c2" of the defining polynomial
/// x^3 + c2 x^2 + c1 x + c0, each a rational. `root` selects which real root
/// of that polynomial the field embeds through: 0 means the largest, k >= 1
/// means the k-th in increasing order. `alpha` and `beta` are coordinate
/// triples "a0,a1,a2" meaning a0 + a1 x + a2 x^2, and `r` is the exponent
/// "p/q" steering digit selection (pass "5/2" for the default).
///
/// Returns `Ok` when a period was found and `CapExceeded` when the cap
/// stopped iteration first; in both cases `*out` receives a handle that the
/// caller owns. On any other status `*out` is set to null.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_compute(
    field: *const c_char,
    root: usize,
    alpha: *const c_char,
    beta: *const c_char,
    r: *const c_char,
    cap: usize,
    out: *mut *mut CfOrbit,
) -> CfStatus {
    if out.is_null() {
        return CfStatus::NullPointer;
    }
    *out = std::ptr::null_mut();
    let run = || -> Result<(CfOrbit, CfStatus), CfStatus> {
        let field = cstr(field)?;
        let alpha = cstr(alpha)?;
        let beta = cstr(beta)?;
        let r = cstr(r)?;
        let err = |e: Error| status_of(&e);
        let coeffs = ratstr::parse_triple(field).map_err(err)?;
        let field = match root {
            0 => CubicField::largest_real_root(coeffs),
            k => CubicField::kth_real_root(coeffs, k),
        }
        .map_err(err)?;
        let alpha = field.element(ratstr::parse_triple(alpha).map_err(err)?);
        let beta = field.element(ratstr::parse_triple(beta).map_err(err)?);
        let point = PointPair::new(alpha, beta).map_err(err)?;
        let r = ValueExponent::from_str(r).map_err(err)?;
        let result = detect_period(&point, r, cap).map_err(err)?;
        let (charpoly, pisot) = if result.found() {
            let pm = period_matrix(&result).map_err(err)?;
            let verdict = is_pisot(&pm.charpoly).is_pisot();
            (Some(pm.charpoly), Some(verdict))
        } else {
            (None, None)
        };
        let status = if result.found() {
            CfStatus::Ok
        } else {
            CfStatus::CapExceeded
        };
        let orbit = CfOrbit {
            result,
            charpoly,
            pisot,
        };
        Ok((orbit, status))
    };
    match guarded(run) {
        Ok((orbit, status)) => {
            *out = Box::into_raw(Box::new(orbit));
            status
        }
        Err(status) => status,
    }
}

unsafe fn orbit_ref<'a>(orbit: *const CfOrbit) -> Result<&'a CfOrbit, CfStatus> {
    if orbit.is_null() {
        return Err(CfStatus::NullPointer);
    }
    Ok(&*orbit)
}

/// Number of digits the expansion produced. Always available, including
/// when the computation stopped at the cap.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_digit_count(
    orbit: *const CfOrbit,
    count: *mut usize,
) -> CfStatus {
    if count.is_null() {
        return CfStatus::NullPointer;
    }
    match orbit_ref(orbit) {
        Ok(o) => {
            *count = o.result.digits.len();
            CfStatus::Ok
        }
        Err(status) => status,
    }
}

/// Writes the k-th digit (0-based) as its index pair. Fails with
/// `InvalidInput` when `k` is out of range.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_digit(
    orbit: *const CfOrbit,
    k: usize,
    i: *mut u8,
    j: *mut u8,
) -> CfStatus {
    if i.is_null() || j.is_null() {
        return CfStatus::NullPointer;
    }
    let o = match orbit_ref(orbit) {
        Ok(o) => o,
        Err(status) => return status,
    };
    match o.result.digits.get(k) {
        Some(d) => {
            *i = d.i;
            *j = d.j;
            CfStatus::Ok
        }
        None => CfStatus::InvalidInput,
    }
}

fn periodic_field<T: Copy>(
    orbit: Result<&CfOrbit, CfStatus>,
    read: impl Fn(&CfOrbit) -> T,
    slot: *mut T,
) -> CfStatus {
    if slot.is_null() {
        return CfStatus::NullPointer;
    }
    match orbit {
        Ok(o) if o.result.found() => {
            unsafe { *slot = read(o) };
            CfStatus::Ok
        }
        Ok(_) => CfStatus::CapExceeded,
        Err(status) => status,
    }
}

/// Number of steps before the periodic part starts. `CapExceeded` when no
/// period was found.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_preperiod(
    orbit: *const CfOrbit,
    preperiod: *mut usize,
) -> CfStatus {
    periodic_field(orbit_ref(orbit), |o| o.result.preperiod, preperiod)
}

/// Length of the periodic part. `CapExceeded` when no period was found.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_period(
    orbit: *const CfOrbit,
    period: *mut usize,
) -> CfStatus {
    periodic_field(orbit_ref(orbit), |o| o.result.period, period)
}

/// Whether the dominant eigenvalue of the period matrix is a Pisot number;
/// writes 1 or 0. `CapExceeded` when no period was found.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_is_pisot(
    orbit: *const CfOrbit,
    pisot: *mut c_int,
) -> CfStatus {
    let read = |o: &CfOrbit| if o.pisot == Some(true) { 1 } else { 0 };
    periodic_field(orbit_ref(orbit), read, pisot)
}

/// Characteristic polynomial of the period matrix as the string "c0;c1;c2"
/// (x^3 + c2 x^2 + c1 x + c0). The string is allocated by this library and
/// must be released with [`cubefarey_string_free`]. `CapExceeded` when no
/// period was found.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_charpoly(
    orbit: *const CfOrbit,
    charpoly: *mut *mut c_char,
) -> CfStatus {
    if charpoly.is_null() {
        return CfStatus::NullPointer;
    }
    *charpoly = std::ptr::null_mut();
    let o = match orbit_ref(orbit) {
        Ok(o) => o,
        Err(status) => return status,
    };
    let c = match &o.charpoly {
        Some(c) => c,
        None => return CfStatus::CapExceeded,
    };
    match CString::new(format!("{};{};{}", c[0], c[1], c[2])) {
        Ok(s) => {
            *charpoly = s.into_raw();
            CfStatus::Ok
        }
        Err(_) => CfStatus::Arithmetic,
    }
}

/// Decides whether the monic cubic with coefficients "c0,c1,c2" (integers,
/// meaning x^3 + c2 x^2 + c1 x + c0) is the minimal polynomial of a Pisot
/// number; writes 1 or 0. Reducible polynomials get 0.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_pisot(poly: *const c_char, pisot: *mut c_int) -> CfStatus {
    if pisot.is_null() {
        return CfStatus::NullPointer;
    }
    let run = || -> Result<c_int, CfStatus> {
        let coeffs = parse_int_triple(cstr(poly)?)?;
        Ok(is_pisot(&coeffs).is_pisot() as c_int)
    };
    match guarded(run) {
        Ok(flag) => {
            *pisot = flag;
            CfStatus::Ok
        }
        Err(status) => status,
    }
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases an orbit handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cubefarey_orbit_free(orbit: *mut CfOrbit) {
    if !orbit.is_null() {
        drop(Box::from_raw(orbit));
    }
}
