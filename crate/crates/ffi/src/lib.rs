//! C ABI over the paracat library.
//!
//! Every function returns a `ParacatStatus`; results go through out-pointers.
//! On failure a message is stored per thread and can be read with
//! `paracat_last_error`. Handles are opaque and must be released with their
//! matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use paracat::align::Acceptance;
use paracat::coxeter::{build_system, parse_type_name, AnySystem};
use paracat::partition::{bounding_shape, kreweras_count};
use paracat::perm::{j_regions, Permutation};
use paracat::tables::{any_family_counts, any_nonnesting_count};
use paracat::tamari::{avoiding_elements, is_j231_avoiding};
use paracat::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParacatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfBounds = 3,
    Unsupported = 4,
    NoRootPoset = 5,
    Internal = 6,
}

/// Opaque permutation handle.
pub struct ParacatPermutation(Permutation);

/// Opaque Coxeter system handle.
pub struct ParacatSystem(AnySystem);

/// Parabolic Catalan family selector for `paracat_family_count`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParacatFamily {
    Aligned = 0,
    Noncrossing = 1,
    Subword = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> ParacatStatus {
    match err {
        Error::Bound(_) | Error::OutOfRange(_) => ParacatStatus::OutOfBounds,
        Error::Unsupported(_) | Error::Infinite => ParacatStatus::Unsupported,
        Error::NoRootPoset(_) => ParacatStatus::NoRootPoset,
        _ => ParacatStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (ParacatStatus, String)>) -> ParacatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ParacatStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ParacatStatus::Internal
        }
    }
}

fn lift<T>(r: paracat::Result<T>) -> Result<T, (ParacatStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (ParacatStatus, String) {
    (ParacatStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, (ParacatStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| (ParacatStatus::InvalidArgument, "string is not UTF-8".into()))
}

unsafe fn slice<'a>(p: *const usize, len: usize) -> Result<&'a [usize], (ParacatStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// The message of the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn paracat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses one-line notation such as "3142", "3 1 4 2" or "4|23|1".
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn paracat_permutation_parse(
    text: *const c_char,
    out: *mut *mut ParacatPermutation,
) -> ParacatStatus {
    guard(|| {
        let s = read_str(text)?;
        if out.is_null() {
            return Err(null());
        }
        let p: Permutation = lift(s.parse())?;
        *out = Box::into_raw(Box::new(ParacatPermutation(p)));
        Ok(())
    })
}

/// # Safety
/// `perm` must come from `paracat_permutation_parse` or be NULL.
#[no_mangle]
pub unsafe extern "C" fn paracat_permutation_free(perm: *mut ParacatPermutation) {
    if !perm.is_null() {
        drop(Box::from_raw(perm));
    }
}

/// Size n and Coxeter length (number of inversions).
///
/// # Safety
/// `perm` must be a live handle; `n` and `length` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn paracat_permutation_info(
    perm: *const ParacatPermutation,
    n: *mut usize,
    length: *mut usize,
) -> ParacatStatus {
    guard(|| {
        if perm.is_null() || n.is_null() || length.is_null() {
            return Err(null());
        }
        *n = (*perm).0.n();
        *length = (*perm).0.length();
        Ok(())
    })
}

/// Whether the permutation lies in S_n^J and avoids (J,231)-patterns.
/// `j` lists 1-based generator indices.
///
/// # Safety
/// `perm` must be a live handle, `j` must point to `j_len` values, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn paracat_is_j231_avoiding(
    perm: *const ParacatPermutation,
    j: *const usize,
    j_len: usize,
    out: *mut bool,
) -> ParacatStatus {
    guard(|| {
        if perm.is_null() || out.is_null() {
            return Err(null());
        }
        let w = &(*perm).0;
        let ctx = lift(j_regions(w.n(), slice(j, j_len)?))?;
        *out = paracat::perm::is_quotient_member(w, &ctx) && is_j231_avoiding(w, &ctx);
        Ok(())
    })
}

/// Number of (J,231)-avoiding permutations of S_n^J (n at most 10).
///
/// # Safety
/// `j` must point to `j_len` values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn paracat_tamari_count(n: usize, j: *const usize, j_len: usize, out: *mut u64) -> ParacatStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        if n > 10 {
            return Err((ParacatStatus::OutOfBounds, format!("n = {n} exceeds 10")));
        }
        let ctx = lift(j_regions(n, slice(j, j_len)?))?;
        *out = avoiding_elements(&ctx).len() as u64;
        Ok(())
    })
}

/// |NN_n^J| through the Kreweras determinant of the bounding shape.
///
/// # Safety
/// `j` must point to `j_len` values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn paracat_kreweras_count(
    n: usize,
    j: *const usize,
    j_len: usize,
    out: *mut u64,
) -> ParacatStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let ctx = lift(j_regions(n, slice(j, j_len)?))?;
        let count = kreweras_count(&bounding_shape(&ctx));
        *out = u64::try_from(count).map_err(|_| (ParacatStatus::OutOfBounds, "count exceeds 64 bits".into()))?;
        Ok(())
    })
}

/// Builds a Coxeter system from a type name ("A", "H3", "affine-A3", "I").
/// `rank` of 0 takes the rank from the name; `m` is only read for type I.
///
/// # Safety
/// `type_name` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn paracat_system_new(
    type_name: *const c_char,
    rank: usize,
    m: u32,
    out: *mut *mut ParacatSystem,
) -> ParacatStatus {
    guard(|| {
        let name = read_str(type_name)?;
        if out.is_null() {
            return Err(null());
        }
        let (kind, rank) = if rank == 0 { lift(parse_type_name(name))? } else { (name.to_string(), rank) };
        let sys = lift(build_system(&kind, rank, (m > 0).then_some(m)))?;
        *out = Box::into_raw(Box::new(ParacatSystem(sys)));
        Ok(())
    })
}

/// # Safety
/// `sys` must come from `paracat_system_new` or be NULL.
#[no_mangle]
pub unsafe extern "C" fn paracat_system_free(sys: *mut ParacatSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// # Safety
/// `sys` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn paracat_system_rank(sys: *const ParacatSystem, out: *mut usize) -> ParacatStatus {
    guard(|| {
        if sys.is_null() || out.is_null() {
            return Err(null());
        }
        *out = (*sys).0.rank();
        Ok(())
    })
}

fn check_generators(sys: &AnySystem, gens: &[usize]) -> Result<(), (ParacatStatus, String)> {
    match gens.iter().find(|&&s| s >= sys.rank()) {
        Some(s) => Err((ParacatStatus::OutOfBounds, format!("generator index {s} out of range"))),
        None => Ok(()),
    }
}

/// Size of one parabolic Catalan family for (W, J, c) under the positive
/// decomposition rule. `j` and `c` hold 0-based generator indices.
///
/// # Safety
/// `sys` must be a live handle; `j`/`c` must point to `j_len`/`c_len` values.
#[no_mangle]
pub unsafe extern "C" fn paracat_family_count(
    sys: *const ParacatSystem,
    family: ParacatFamily,
    j: *const usize,
    j_len: usize,
    c: *const usize,
    c_len: usize,
    out: *mut u64,
) -> ParacatStatus {
    guard(|| {
        if sys.is_null() || out.is_null() {
            return Err(null());
        }
        let sys = &(*sys).0;
        let (j, c) = (slice(j, j_len)?, slice(c, c_len)?);
        check_generators(sys, j)?;
        check_generators(sys, c)?;
        let counts = lift(any_family_counts(sys, j, c, Acceptance::Positive))?;
        *out = match family {
            ParacatFamily::Aligned => counts.align,
            ParacatFamily::Noncrossing => counts.nc,
            ParacatFamily::Subword => counts.sw,
        };
        Ok(())
    })
}

/// |NN(W^J)| from the built-in root poset, or from `root_poset_file` (the
/// text of a root-poset file) when it is not NULL.
///
/// # Safety
/// `sys` must be a live handle, `j` must point to `j_len` values,
/// `root_poset_file` must be NULL or NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn paracat_nonnesting_count(
    sys: *const ParacatSystem,
    j: *const usize,
    j_len: usize,
    root_poset_file: *const c_char,
    out: *mut u64,
) -> ParacatStatus {
    guard(|| {
        if sys.is_null() || out.is_null() {
            return Err(null());
        }
        let sys = &(*sys).0;
        let j = slice(j, j_len)?;
        check_generators(sys, j)?;
        let file = if root_poset_file.is_null() { None } else { Some(read_str(root_poset_file)?) };
        *out = lift(any_nonnesting_count(sys, j, file))?;
        Ok(())
    })
}
