//! C interface to cubiclab.
//!
//! Rings and ideals are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`CubiclabStatus`] and writes its
//! result through an out-pointer; after a non-OK status,
//! [`cubiclab_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use cubiclab::catalog;
use cubiclab::cli::parse_vars;
use cubiclab::geometry::{smooth_verdict, SmoothVerdict, DEFAULT_MINOR_CAP};
use cubiclab::idealops::{hilbert, saturate, Ideal};
use cubiclab::lattice::{self, SurfaceNumerics};
use cubiclab::parse::render_generators;
use cubiclab::ring::{Ring, RingRef};
use cubiclab::scalar::Field;
use cubiclab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubiclabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    UnknownName = 4,
    InvalidArgument = 5,
    RingMismatch = 6,
    Containment = 7,
    Budget = 8,
    RetriesExhausted = 9,
    Computation = 10,
    Panic = 11,
}

/// A polynomial ring.
pub struct CubiclabRing(RingRef);

/// An ideal of a [`CubiclabRing`].
pub struct CubiclabIdeal(Ideal);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CubiclabStatus {
    match e {
        Error::Syntax { .. } | Error::UnknownVariable(_) => CubiclabStatus::Syntax,
        Error::UnknownName(_) => CubiclabStatus::UnknownName,
        Error::RingMismatch | Error::ArityMismatch { .. } => CubiclabStatus::RingMismatch,
        Error::InvalidArgument(_)
        | Error::InvalidField(_)
        | Error::TooManyVariables { .. }
        | Error::NotHomogeneous
        | Error::MixedDegrees
        | Error::WrongDegree { .. } => CubiclabStatus::InvalidArgument,
        Error::Containment(_) => CubiclabStatus::Containment,
        Error::Budget { .. } => CubiclabStatus::Budget,
        Error::RetriesExhausted { .. } => CubiclabStatus::RetriesExhausted,
        _ => CubiclabStatus::Computation,
    }
}

enum Failure {
    Status(CubiclabStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Run `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CubiclabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CubiclabStatus::Ok,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            CubiclabStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(CubiclabStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Status(CubiclabStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cubiclab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static version string.
#[no_mangle]
pub extern "C" fn cubiclab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Ring in the variables `vars` (`x_0..x_5` or `a,b,c`) over the rationals
/// when `prime` is 0, otherwise over the field with `prime` elements.
///
/// # Safety
/// `vars` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ring_new(vars: *const c_char, prime: u32, out: *mut *mut CubiclabRing) -> CubiclabStatus {
    guard(|| {
        let vars = parse_vars(text(vars, "vars")?)?;
        let field = if prime == 0 { Field::Rational } else { Field::prime(prime)? };
        let ring = Arc::new(Ring::new(vars, field)?);
        write(out, Box::into_raw(Box::new(CubiclabRing(ring))))
    })
}

/// # Safety
/// `ring` must come from [`cubiclab_ring_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ring_free(ring: *mut CubiclabRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

fn boxed(i: Ideal) -> *mut CubiclabIdeal {
    Box::into_raw(Box::new(CubiclabIdeal(i)))
}

/// Ideal generated by a comma or newline separated list of polynomials.
///
/// # Safety
/// `ring` must be a live handle, `gens` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_parse(
    ring: *const CubiclabRing,
    gens: *const c_char,
    out: *mut *mut CubiclabIdeal,
) -> CubiclabStatus {
    guard(|| {
        let ring = deref(ring, "ring")?;
        let i = Ideal::parse(&ring.0, text(gens, "gens")?)?;
        write(out, boxed(i))
    })
}

/// Catalog entry by name (`scroll:s22`, `delpezzo`, `plane:a`, ...), in
/// the ring of rational polynomials in `x_0..x_5`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_catalog(name: *const c_char, out: *mut *mut CubiclabIdeal) -> CubiclabStatus {
    guard(|| {
        let i = catalog::lookup(text(name, "name")?)?;
        write(out, boxed(i))
    })
}

/// # Safety
/// `ideal` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_free(ideal: *mut CubiclabIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Saturation by the irrelevant ideal.
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_saturate(ideal: *const CubiclabIdeal, out: *mut *mut CubiclabIdeal) -> CubiclabStatus {
    guard(|| {
        let s = saturate(&deref(ideal, "ideal")?.0, None)?;
        write(out, boxed(s))
    })
}

/// Sum of two ideals of the same ring.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_sum(
    a: *const CubiclabIdeal,
    b: *const CubiclabIdeal,
    out: *mut *mut CubiclabIdeal,
) -> CubiclabStatus {
    guard(|| {
        let s = cubiclab::idealops::sum(&deref(a, "a")?.0, &deref(b, "b")?.0)?;
        write(out, boxed(s))
    })
}

/// Projective dimension (-1 for the empty scheme) and degree.
///
/// # Safety
/// `ideal` must be a live handle; `dim` and `degree` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_dim_degree(
    ideal: *const CubiclabIdeal,
    dim: *mut i64,
    degree: *mut u64,
) -> CubiclabStatus {
    guard(|| {
        let h = hilbert(&deref(ideal, "ideal")?.0)?;
        write(dim, h.dim)?;
        write(degree, h.degree)
    })
}

/// Whether `a ⊆ b`.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_is_subset(
    a: *const CubiclabIdeal,
    b: *const CubiclabIdeal,
    out: *mut bool,
) -> CubiclabStatus {
    guard(|| {
        let r = deref(a, "a")?.0.is_subset_of(&deref(b, "b")?.0)?;
        write(out, r)
    })
}

/// Smoothness of the projective scheme. Over the rationals a non-exact
/// check reduces modulo a fixed prime first; `certified` reports whether
/// the answer was computed exactly.
///
/// # Safety
/// `ideal` must be a live handle; `smooth` and `certified` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_is_smooth(
    ideal: *const CubiclabIdeal,
    exact: bool,
    smooth: *mut bool,
    certified: *mut bool,
) -> CubiclabStatus {
    guard(|| {
        let i = saturate(&deref(ideal, "ideal")?.0, None)?;
        let v = smooth_verdict(&i, exact, DEFAULT_MINOR_CAP)?;
        write(smooth, v != SmoothVerdict::Singular)?;
        write(certified, v != SmoothVerdict::Filtered)
    })
}

/// Generators as a newline separated string, released with
/// [`cubiclab_string_free`].
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_ideal_to_string(ideal: *const CubiclabIdeal, out: *mut *mut c_char) -> CubiclabStatus {
    guard(|| {
        let s = render_generators(deref(ideal, "ideal")?.0.gens()).join("\n");
        write(out, CString::new(s).expect("no interior nul").into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cubiclab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Discriminant of `⟨h², S, P⟩` for a quintic del Pezzo `S` and a plane
/// `P` with `S·P = beta`.
#[no_mangle]
pub extern "C" fn cubiclab_del_pezzo_discriminant(beta: i64) -> i64 {
    lattice::del_pezzo_discriminant(beta)
}

/// Self-intersection of a smooth surface in a cubic fourfold.
#[no_mangle]
pub extern "C" fn cubiclab_self_int_cubic(h2: i64, hk: i64, k2: i64, chi_top: i64) -> i64 {
    lattice::self_int_cubic_fourfold(&SurfaceNumerics { h2, hk, k2, chi_top, chi_o: 1 })
}

/// Self-intersection of a smooth surface in a quadric fourfold.
#[no_mangle]
pub extern "C" fn cubiclab_self_int_quadric(h2: i64, hk: i64, k2: i64, chi_o: i64) -> i64 {
    lattice::self_int_quadric_fourfold(&SurfaceNumerics { h2, hk, k2, chi_top: 0, chi_o })
}
