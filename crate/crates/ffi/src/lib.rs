//! C interface to `gradlie`.
//!
//! Algebras are opaque handles created by `gradlie_algebra_build` or
//! `gradlie_algebra_from_json` and released with `gradlie_algebra_free`.
//! Every fallible call returns a [`GradlieStatus`]; on failure the message
//! is available from `gradlie_last_error` on the same thread until the next
//! call. Strings returned to the caller are freed with `gradlie_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gradlie::algebra::{validate, Family, GradedLieAlgebra};
use gradlie::cohomology::{cohomology_dims, h1_negative_test};
use gradlie::prolongation::{compare_with_algebra, prolong_full};
use gradlie::subalgebra::gap_scan;
use gradlie::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradlieStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    InvalidAlgebra = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

/// Opaque handle to a graded Lie algebra.
pub struct GradlieAlgebra(GradedLieAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

struct Failure(GradlieStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidAlgebra(_) => GradlieStatus::InvalidAlgebra,
            _ => GradlieStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(GradlieStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GradlieStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GradlieStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GradlieStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(GradlieStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn alg<'a>(p: *const GradlieAlgebra) -> Result<&'a GradedLieAlgebra, Failure> {
    p.as_ref().map(|a| &a.0).ok_or_else(|| null("algebra"))
}

unsafe fn write<T>(out: *mut T, v: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

fn into_handle(g: GradedLieAlgebra) -> *mut GradlieAlgebra {
    Box::into_raw(Box::new(GradlieAlgebra(g)))
}

/// Message of the last failed call on this thread, or null.
#[no_mangle]
pub extern "C" fn gradlie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static version string.
#[no_mangle]
pub extern "C" fn gradlie_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a named family (`g2`, `sp6`, `sp21`, `so-split`, …). `n` is the
/// so-family parameter, 0 when not needed.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_algebra_build(
    name: *const c_char,
    n: usize,
    out: *mut *mut GradlieAlgebra,
) -> GradlieStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = Family::from_alias(name, (n > 0).then_some(n))?.build()?;
        write(out, into_handle(g), "out")
    })
}

/// Parses algebra JSON.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_algebra_from_json(
    json: *const c_char,
    out: *mut *mut GradlieAlgebra,
) -> GradlieStatus {
    guard(|| {
        let json = str_arg(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = GradedLieAlgebra::from_json(json)?;
        write(out, into_handle(g), "out")
    })
}

/// Serializes an algebra; free the result with `gradlie_string_free`.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_algebra_to_json(a: *const GradlieAlgebra, out: *mut *mut c_char) -> GradlieStatus {
    guard(|| {
        let g = alg(a)?;
        let s = CString::new(g.to_json()).map_err(|e| Failure(GradlieStatus::Internal, e.to_string()))?;
        write(out, s.into_raw(), "out")
    })
}

/// # Safety
/// `a` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gradlie_algebra_free(a: *mut GradlieAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn gradlie_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_algebra_dim(a: *const GradlieAlgebra, out: *mut usize) -> GradlieStatus {
    guard(|| write(out, alg(a)?.dim(), "out"))
}

/// Writes `dim g_{-k}, …, dim g_k` into `buf`. `needed` receives `2k+1`;
/// when `len` is smaller nothing is written and `BufferTooSmall` returned.
///
/// # Safety
/// `buf` must hold `len` values and `needed` be writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_algebra_component_dims(
    a: *const GradlieAlgebra,
    buf: *mut usize,
    len: usize,
    needed: *mut usize,
) -> GradlieStatus {
    guard(|| {
        let dims = alg(a)?.component_dims();
        write(needed, dims.len(), "needed")?;
        if len < dims.len() {
            return Err(Failure(
                GradlieStatus::BufferTooSmall,
                format!("need {} slots, got {len}", dims.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(dims.as_ptr(), buf, dims.len());
        Ok(())
    })
}

/// Runs the structural validator.
///
/// # Safety
/// `a` must be a live handle and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_algebra_validate(a: *const GradlieAlgebra, passed: *mut bool) -> GradlieStatus {
    guard(|| write(passed, validate(alg(a)?).passed(), "passed"))
}

/// Total `dim H^q(g₋, g)`.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_cohomology_dim(a: *const GradlieAlgebra, q: usize, out: *mut usize) -> GradlieStatus {
    guard(|| write(out, cohomology_dims(alg(a)?, q)?.total, "out"))
}

/// Whether `H¹(g₋, g)` lives in negative homogeneity only.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_h1_negative(a: *const GradlieAlgebra, out: *mut bool) -> GradlieStatus {
    guard(|| write(out, h1_negative_test(alg(a)?)?, "out"))
}

/// Prolongation of `(g₋, der₀)`: its total dimension and whether it
/// matches `g` degree by degree.
///
/// # Safety
/// `a` must be a live handle; `total` and `matches` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_prolongation(
    a: *const GradlieAlgebra,
    total: *mut usize,
    matches: *mut bool,
) -> GradlieStatus {
    guard(|| {
        let g = alg(a)?;
        let r = prolong_full(g)?;
        write(total, r.total(), "total")?;
        write(matches, compare_with_algebra(&r, g).passed, "matches")
    })
}

/// Seeded gap scan; `violations` counts proper graded subalgebras found
/// with dimension strictly between `lo` and `hi`.
///
/// # Safety
/// `a` must be a live handle and `violations` writable.
#[no_mangle]
pub unsafe extern "C" fn gradlie_gap_scan(
    a: *const GradlieAlgebra,
    lo: usize,
    hi: usize,
    trials: usize,
    seed: u64,
    violations: *mut usize,
) -> GradlieStatus {
    guard(|| {
        let scan = gap_scan(alg(a)?, (lo, hi), trials, seed)?;
        write(violations, scan.violations.len(), "violations")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(name: &str, n: usize) -> *mut GradlieAlgebra {
        let name = CString::new(name).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { gradlie_algebra_build(name.as_ptr(), n, &mut out) }, GradlieStatus::Ok);
        out
    }

    fn last_error() -> String {
        let p = gradlie_last_error();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
    }

    #[test]
    fn g2_handle() {
        let a = build("g2", 0);
        let mut dim = 0;
        assert_eq!(unsafe { gradlie_algebra_dim(a, &mut dim) }, GradlieStatus::Ok);
        assert_eq!(dim, 14);

        let mut buf = [0usize; 7];
        let mut needed = 0;
        let s = unsafe { gradlie_algebra_component_dims(a, buf.as_mut_ptr(), 7, &mut needed) };
        assert_eq!(s, GradlieStatus::Ok);
        assert_eq!(buf, [2, 1, 2, 4, 2, 1, 2]);

        let mut passed = false;
        assert_eq!(unsafe { gradlie_algebra_validate(a, &mut passed) }, GradlieStatus::Ok);
        assert!(passed);

        let mut h2 = 0;
        assert_eq!(unsafe { gradlie_cohomology_dim(a, 2, &mut h2) }, GradlieStatus::Ok);
        assert_eq!(h2, 5);

        let mut neg = false;
        assert_eq!(unsafe { gradlie_h1_negative(a, &mut neg) }, GradlieStatus::Ok);
        assert!(neg);

        let (mut total, mut matches) = (0, false);
        assert_eq!(unsafe { gradlie_prolongation(a, &mut total, &mut matches) }, GradlieStatus::Ok);
        assert_eq!((total, matches), (14, true));

        let mut v = 1;
        assert_eq!(unsafe { gradlie_gap_scan(a, 9, 14, 100, 7, &mut v) }, GradlieStatus::Ok);
        assert_eq!(v, 0);
        unsafe { gradlie_algebra_free(a) };
    }

    #[test]
    fn json_roundtrip() {
        let a = build("so-split", 3);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { gradlie_algebra_to_json(a, &mut s) }, GradlieStatus::Ok);
        let mut b = ptr::null_mut();
        assert_eq!(unsafe { gradlie_algebra_from_json(s, &mut b) }, GradlieStatus::Ok);
        let mut dim = 0;
        unsafe { gradlie_algebra_dim(b, &mut dim) };
        assert_eq!(dim, 21);
        unsafe {
            gradlie_string_free(s);
            gradlie_algebra_free(a);
            gradlie_algebra_free(b);
        }
    }

    #[test]
    fn errors_are_reported() {
        let mut out = ptr::null_mut();
        let name = CString::new("e8").unwrap();
        assert_eq!(unsafe { gradlie_algebra_build(name.as_ptr(), 0, &mut out) }, GradlieStatus::InvalidInput);
        assert!(out.is_null());
        assert!(!last_error().is_empty());

        let json = CString::new("{\"dim\":").unwrap();
        assert_eq!(unsafe { gradlie_algebra_from_json(json.as_ptr(), &mut out) }, GradlieStatus::InvalidInput);
        assert!(last_error().starts_with("json"));

        let mut dim = 0;
        assert_eq!(unsafe { gradlie_algebra_dim(ptr::null(), &mut dim) }, GradlieStatus::NullPointer);
        assert_eq!(unsafe { gradlie_algebra_build(ptr::null(), 0, &mut out) }, GradlieStatus::NullPointer);

        let bad = [0xffu8, 0];
        let s = unsafe { gradlie_algebra_build(bad.as_ptr().cast(), 0, &mut out) };
        assert_eq!(s, GradlieStatus::InvalidUtf8);

        let a = build("sp6", 0);
        let mut buf = [0usize; 2];
        let mut needed = 0;
        let s = unsafe { gradlie_algebra_component_dims(a, buf.as_mut_ptr(), 2, &mut needed) };
        assert_eq!(s, GradlieStatus::BufferTooSmall);
        assert_eq!(needed, 5);
        assert_eq!(unsafe { gradlie_algebra_dim(a, &mut dim) }, GradlieStatus::Ok);
        assert!(gradlie_last_error().is_null());
        unsafe { gradlie_algebra_free(a) };
    }

    #[test]
    fn version_string() {
        let v = unsafe { CStr::from_ptr(gradlie_version()) }.to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
