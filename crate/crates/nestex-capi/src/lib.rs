//! C ABI for the nestex toolkit.
//!
//! All objects cross the boundary as opaque handles created and destroyed
//! here; every fallible call returns an [`NxStatus`] code and leaves a
//! thread-local message readable through [`nx_last_error`]. Panics are
//! caught at the boundary and reported as `NX_PANIC` instead of unwinding
//! into the caller.

// FFI entry points dereference raw pointers by design; every access is
// null-checked and documented on the function.
#![allow(clippy::not_unsafe_ptr_arg_deref)]

use nestex::building::BuiltLattice;
use nestex::ced::{convex_ear_decomposition, verify_ced};
use nestex::complex::SimplicialComplex;
use nestex::decomp::{verify_vd, vertex_decomposition_default};
use nestex::io::{built_lattice_from_selector, ComplexJson, LatticeJson};
use nestex::matroid::{GeometricLattice, Matroid};
use nestex::nested::{cone_nested_complex, nested_complex};
use nestex::partition::PartitionLattice;
use nestex::poset::{boolean_lattice, Lattice};
use nestex::stirling::second_eulerian;
use nestex::vectors::h_from_f;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    VerifyFailed = 4,
    Panic = 5,
}

/// Opaque lattice handle.
pub struct NxLattice {
    inner: Lattice,
}

/// Opaque built-lattice handle (a lattice with a validated building set).
pub struct NxBuilt {
    inner: BuiltLattice,
}

/// Opaque simplicial complex handle.
pub struct NxComplex {
    inner: SimplicialComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn guard<F: FnOnce() -> NxStatus>(body: F) -> NxStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(&msg);
            NxStatus::Panic
        }
    }
}

/// ABI version, major in the upper 16 bits.
#[no_mangle]
pub extern "C" fn nx_abi_version() -> u32 {
    1 << 16
}

/// The last error message on this thread; valid until the next failing call.
#[no_mangle]
pub extern "C" fn nx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Free a string returned by this library.
///
/// # Safety
/// `s` must have been returned by a `*_to_json` function of this library and
/// not freed before.
#[no_mangle]
pub unsafe extern "C" fn nx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn emit_lattice(l: Lattice, out: *mut *mut NxLattice) -> NxStatus {
    if out.is_null() {
        set_error("null output pointer");
        return NxStatus::NullPointer;
    }
    unsafe {
        *out = Box::into_raw(Box::new(NxLattice { inner: l }));
    }
    NxStatus::Ok
}

/// Partition lattice Π_n on {1, …, n}.
#[no_mangle]
pub extern "C" fn nx_lattice_partition(n: u32, out: *mut *mut NxLattice) -> NxStatus {
    guard(|| {
        if n == 0 || n > 7 {
            set_error("partition lattices support 1 ≤ n ≤ 7");
            return NxStatus::InvalidArgument;
        }
        let pl = PartitionLattice::new(&(1..=n as i64).collect::<Vec<_>>());
        emit_lattice(pl.lattice, out)
    })
}

/// Boolean lattice of subsets of {1, …, n}.
#[no_mangle]
pub extern "C" fn nx_lattice_boolean(n: u32, out: *mut *mut NxLattice) -> NxStatus {
    guard(|| {
        if n > 10 {
            set_error("boolean lattices support n ≤ 10");
            return NxStatus::InvalidArgument;
        }
        emit_lattice(boolean_lattice(n as usize), out)
    })
}

/// Lattice of flats of the uniform matroid U_{r,n}.
#[no_mangle]
pub extern "C" fn nx_lattice_uniform_flats(r: u32, n: u32, out: *mut *mut NxLattice) -> NxStatus {
    guard(|| {
        if r > n || n > 14 {
            set_error("need r ≤ n ≤ 14");
            return NxStatus::InvalidArgument;
        }
        let gl = GeometricLattice::lattice_of_flats(&Matroid::uniform(r as usize, n as usize));
        emit_lattice(gl.lattice, out)
    })
}

/// Build a lattice from its JSON form `{"labels": […], "covers": [[a,b], …]}`.
#[no_mangle]
pub extern "C" fn nx_lattice_from_json(json: *const c_char, out: *mut *mut NxLattice) -> NxStatus {
    guard(|| {
        if json.is_null() {
            set_error("null json pointer");
            return NxStatus::NullPointer;
        }
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(t) => t,
            Err(_) => {
                set_error("json is not valid UTF-8");
                return NxStatus::ParseError;
            }
        };
        let parsed: LatticeJson = match serde_json::from_str(text) {
            Ok(p) => p,
            Err(e) => {
                set_error(&e.to_string());
                return NxStatus::ParseError;
            }
        };
        match parsed.build() {
            Ok(l) => emit_lattice(l, out),
            Err(e) => {
                set_error(&e.to_string());
                NxStatus::InvalidArgument
            }
        }
    })
}

/// Serialize a lattice to JSON; free the string with `nx_string_free`.
#[no_mangle]
pub extern "C" fn nx_lattice_to_json(l: *const NxLattice, out: *mut *mut c_char) -> NxStatus {
    guard(|| {
        let (Some(l), false) = (unsafe { l.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return NxStatus::NullPointer;
        };
        let json = serde_json::to_string(&LatticeJson::of(&l.inner)).expect("serializable");
        unsafe {
            *out = CString::new(json).expect("no interior NUL").into_raw();
        }
        NxStatus::Ok
    })
}

/// Number of elements.
#[no_mangle]
pub extern "C" fn nx_lattice_size(l: *const NxLattice) -> usize {
    unsafe { l.as_ref() }.map_or(0, |l| l.inner.len())
}

/// Destroy a lattice handle. Null is a no-op.
///
/// # Safety
/// `l` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nx_lattice_free(l: *mut NxLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Attach a building set: selector is `"min"`, `"max"`, or a comma-separated
/// list of element labels (validated).
#[no_mangle]
pub extern "C" fn nx_built_new(
    l: *const NxLattice,
    selector: *const c_char,
    out: *mut *mut NxBuilt,
) -> NxStatus {
    guard(|| {
        let Some(l) = (unsafe { l.as_ref() }) else {
            set_error("null lattice");
            return NxStatus::NullPointer;
        };
        if selector.is_null() || out.is_null() {
            set_error("null pointer");
            return NxStatus::NullPointer;
        }
        let sel = match unsafe { CStr::from_ptr(selector) }.to_str() {
            Ok(s) => s,
            Err(_) => {
                set_error("selector is not valid UTF-8");
                return NxStatus::ParseError;
            }
        };
        match built_lattice_from_selector(Some(&l.inner), None, sel) {
            Ok(bl) => {
                unsafe {
                    *out = Box::into_raw(Box::new(NxBuilt { inner: bl }));
                }
                NxStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                NxStatus::InvalidArgument
            }
        }
    })
}

/// Destroy a built-lattice handle. Null is a no-op.
///
/// # Safety
/// `b` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nx_built_free(b: *mut NxBuilt) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// The nested set complex N(L, G), or the cone complex cN(L, G).
#[no_mangle]
pub extern "C" fn nx_nested_complex(
    b: *const NxBuilt,
    cone: bool,
    out: *mut *mut NxComplex,
) -> NxStatus {
    guard(|| {
        let Some(b) = (unsafe { b.as_ref() }) else {
            set_error("null built lattice");
            return NxStatus::NullPointer;
        };
        if out.is_null() {
            set_error("null output pointer");
            return NxStatus::NullPointer;
        }
        let c = if cone {
            cone_nested_complex(&b.inner)
        } else {
            nested_complex(&b.inner)
        };
        unsafe {
            *out = Box::into_raw(Box::new(NxComplex { inner: c }));
        }
        NxStatus::Ok
    })
}

/// Dimension of the complex (−1 for `{∅}`).
#[no_mangle]
pub extern "C" fn nx_complex_dim(c: *const NxComplex) -> i64 {
    unsafe { c.as_ref() }.map_or(-2, |c| c.inner.dim())
}

#[no_mangle]
pub extern "C" fn nx_complex_facet_count(c: *const NxComplex) -> usize {
    unsafe { c.as_ref() }.map_or(0, |c| c.inner.facets().len())
}

fn copy_vector(v: &[i64], buf: *mut i64, cap: usize, written: *mut usize) -> NxStatus {
    if written.is_null() {
        set_error("null written pointer");
        return NxStatus::NullPointer;
    }
    unsafe {
        *written = v.len();
    }
    if v.len() > cap {
        set_error("buffer too small");
        return NxStatus::InvalidArgument;
    }
    if buf.is_null() {
        set_error("null buffer");
        return NxStatus::NullPointer;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(v.as_ptr(), buf, v.len());
    }
    NxStatus::Ok
}

/// Face counts by cardinality, `f[0] = 1` for the empty face. Call with
/// `cap = 0` to learn the length through `written`.
#[no_mangle]
pub extern "C" fn nx_complex_f_vector(
    c: *const NxComplex,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> NxStatus {
    guard(|| {
        let Some(c) = (unsafe { c.as_ref() }) else {
            set_error("null complex");
            return NxStatus::NullPointer;
        };
        let f = c.inner.f_vector();
        if cap == 0 && !written.is_null() {
            unsafe {
                *written = f.len();
            }
            return NxStatus::Ok;
        }
        copy_vector(&f, buf, cap, written)
    })
}

/// The h-vector (full length, trailing zeros kept).
#[no_mangle]
pub extern "C" fn nx_complex_h_vector(
    c: *const NxComplex,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> NxStatus {
    guard(|| {
        let Some(c) = (unsafe { c.as_ref() }) else {
            set_error("null complex");
            return NxStatus::NullPointer;
        };
        let h = h_from_f(&c.inner.f_vector());
        if cap == 0 && !written.is_null() {
            unsafe {
                *written = h.len();
            }
            return NxStatus::Ok;
        }
        copy_vector(&h, buf, cap, written)
    })
}

/// Serialize a complex to `{"vertices": […], "facets": [[…], …]}`.
#[no_mangle]
pub extern "C" fn nx_complex_to_json(c: *const NxComplex, out: *mut *mut c_char) -> NxStatus {
    guard(|| {
        let (Some(c), false) = (unsafe { c.as_ref() }, out.is_null()) else {
            set_error("null pointer");
            return NxStatus::NullPointer;
        };
        let json = serde_json::to_string(&ComplexJson::of(&c.inner)).expect("serializable");
        unsafe {
            *out = CString::new(json).expect("no interior NUL").into_raw();
        }
        NxStatus::Ok
    })
}

/// Destroy a complex handle. Null is a no-op.
///
/// # Safety
/// `c` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nx_complex_free(c: *mut NxComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Build a vertex-decomposition certificate with the default admissible map
/// and verify it against the nested set complex.
#[no_mangle]
pub extern "C" fn nx_vd_certify(b: *const NxBuilt) -> NxStatus {
    guard(|| {
        let Some(b) = (unsafe { b.as_ref() }) else {
            set_error("null built lattice");
            return NxStatus::NullPointer;
        };
        let cert = match vertex_decomposition_default(&b.inner) {
            Ok(c) => c,
            Err(e) => {
                set_error(&e.to_string());
                return NxStatus::VerifyFailed;
            }
        };
        match verify_vd(&nested_complex(&b.inner), &cert) {
            Ok(()) => NxStatus::Ok,
            Err(e) => {
                set_error(&e.to_string());
                NxStatus::VerifyFailed
            }
        }
    })
}

/// Build a convex ear decomposition for the natural atom order and verify it.
#[no_mangle]
pub extern "C" fn nx_ced_certify(b: *const NxBuilt) -> NxStatus {
    guard(|| {
        let Some(b) = (unsafe { b.as_ref() }) else {
            set_error("null built lattice");
            return NxStatus::NullPointer;
        };
        let atoms = b.inner.lattice().atoms();
        let dec = match convex_ear_decomposition(&b.inner, &atoms) {
            Ok(d) => d,
            Err(e) => {
                set_error(&e.to_string());
                return NxStatus::VerifyFailed;
            }
        };
        match verify_ced(&nested_complex(&b.inner), &dec) {
            Ok(()) => NxStatus::Ok,
            Err(e) => {
                set_error(&e.to_string());
                NxStatus::VerifyFailed
            }
        }
    })
}

/// Coefficients of the n-th second Eulerian polynomial, lowest degree first.
#[no_mangle]
pub extern "C" fn nx_second_eulerian(
    n: u32,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> NxStatus {
    guard(|| {
        if n == 0 || n > 20 {
            set_error("need 1 ≤ n ≤ 20");
            return NxStatus::InvalidArgument;
        }
        let p = second_eulerian(n as usize);
        if cap == 0 && !written.is_null() {
            unsafe {
                *written = p.coeffs().len();
            }
            return NxStatus::Ok;
        }
        copy_vector(p.coeffs(), buf, cap, written)
    })
}

/// Exhaustive ψ/Φ bijection and descent-preservation check against
/// `(Π_{n+1}, G_min)`; n ≤ 5.
#[no_mangle]
pub extern "C" fn nx_stirling_bijection_check(n: u32) -> NxStatus {
    guard(|| {
        if n == 0 || n > 5 {
            set_error("need 1 ≤ n ≤ 5");
            return NxStatus::InvalidArgument;
        }
        match nestex::cli::bijection_check(n as usize) {
            Ok(()) => NxStatus::Ok,
            Err(e) => {
                set_error(&e);
                NxStatus::VerifyFailed
            }
        }
    })
}
