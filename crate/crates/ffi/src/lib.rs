//! C ABI over the classification library.
//!
//! Every entry point returns an [`LrStatus`]; results go through out
//! pointers. Strings handed out must be released with [`lr_string_free`],
//! groups with [`lr_group_free`]. No entry point unwinds across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use loopreps::alcove::{self, AlcoveWeight};
use loopreps::classify;
use loopreps::lattices::CentralElement;
use loopreps::levels;
use loopreps::report;
use loopreps::{Error, Group};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownGroup = 3,
    UnknownSubgroup = 4,
    OutsideAlcove = 5,
    InvalidArgument = 6,
    Internal = 7,
}

/// Opaque handle to a simply connected group with its center.
pub struct LrGroup {
    inner: Group,
}

impl From<&Error> for LrStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::UnknownGroup(_) | Error::InvalidRank { .. } => LrStatus::UnknownGroup,
            Error::UnknownSubgroup { .. } => LrStatus::UnknownSubgroup,
            Error::OutsideAlcove { .. } => LrStatus::OutsideAlcove,
            Error::Inconsistent(_) => LrStatus::Internal,
            _ => LrStatus::InvalidArgument,
        }
    }
}

fn guard<F: FnOnce() -> Result<(), LrStatus>>(f: F) -> LrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LrStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => LrStatus::Internal,
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, LrStatus> {
    if p.is_null() {
        return Err(LrStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| LrStatus::InvalidUtf8)
}

unsafe fn group_arg<'a>(g: *const LrGroup) -> Result<&'a Group, LrStatus> {
    g.as_ref().map(|g| &g.inner).ok_or(LrStatus::NullPointer)
}

fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, LrStatus> {
    // SAFETY: caller guarantees a valid, writable pointer when non-null.
    unsafe { p.as_mut() }.ok_or(LrStatus::NullPointer)
}

fn lift<T>(r: loopreps::Result<T>) -> Result<T, LrStatus> {
    r.map_err(|e| LrStatus::from(&e))
}

/// Builds a group from a name such as `"Spin8"`, `"E6"` or `"SU3"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lr_group_new(name: *const c_char, out: *mut *mut LrGroup) -> LrStatus {
    guard(|| {
        let slot = out_arg(out)?;
        *slot = ptr::null_mut();
        let g = lift(Group::parse(str_arg(name)?))?;
        *slot = Box::into_raw(Box::new(LrGroup { inner: g }));
        Ok(())
    })
}

/// Releases a group. Null is ignored.
///
/// # Safety
/// `g` must come from [`lr_group_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lr_group_free(g: *mut LrGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Rank of the group.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lr_group_rank(g: *const LrGroup, out: *mut usize) -> LrStatus {
    guard(|| {
        *out_arg(out)? = group_arg(g)?.root_system().rank();
        Ok(())
    })
}

/// Order of the center.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lr_group_order(g: *const LrGroup, out: *mut usize) -> LrStatus {
    guard(|| {
        *out_arg(out)? = group_arg(g)?.center().order();
        Ok(())
    })
}

/// Fundamental and basic levels for a named central subgroup.
///
/// # Safety
/// `g` must be a live handle, `subgroup` NUL-terminated, outputs writable.
#[no_mangle]
pub unsafe extern "C" fn lr_levels(
    g: *const LrGroup,
    subgroup: *const c_char,
    fundamental: *mut u32,
    basic: *mut u32,
) -> LrStatus {
    guard(|| {
        let g = group_arg(g)?;
        let z = lift(g.subgroup(str_arg(subgroup)?))?;
        let (f, b) = (out_arg(fundamental)?, out_arg(basic)?);
        *f = lift(levels::fundamental_level(g.root_system(), g.center(), &z))?;
        *b = lift(levels::basic_level(g.root_system(), g.center(), &z))?;
        Ok(())
    })
}

/// Number of weights in the level `level` alcove.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lr_alcove_size(g: *const LrGroup, level: u32, out: *mut usize) -> LrStatus {
    guard(|| {
        *out_arg(out)? = alcove::alcove(group_arg(g)?.root_system(), level).len();
        Ok(())
    })
}

/// Applies the central element of special node `element` (0 for the
/// identity) to the alcove weight with `len` Dynkin labels.
///
/// # Safety
/// `labels` and `out_labels` must each point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn lr_act(
    g: *const LrGroup,
    element: usize,
    level: u32,
    labels: *const i64,
    len: usize,
    out_labels: *mut i64,
) -> LrStatus {
    guard(|| {
        let g = group_arg(g)?;
        if labels.is_null() || out_labels.is_null() {
            return Err(LrStatus::NullPointer);
        }
        let rs = g.root_system();
        if len != rs.rank() {
            return Err(LrStatus::InvalidArgument);
        }
        let input = std::slice::from_raw_parts(labels, len).to_vec();
        let w = lift(AlcoveWeight::new(rs, input, level))?;
        let z = CentralElement(element);
        if g.center().index_of(z).is_err() {
            return Err(LrStatus::InvalidArgument);
        }
        let image = lift(g.action().act(rs, z, &w))?;
        std::slice::from_raw_parts_mut(out_labels, len).copy_from_slice(image.labels());
        Ok(())
    })
}

/// Classification of `L_Z G` at `level` as a JSON document.
///
/// # Safety
/// `g` must be a live handle, `subgroup` NUL-terminated, `out` writable.
/// The string written to `out` must be freed with [`lr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lr_classify_json(
    g: *const LrGroup,
    subgroup: *const c_char,
    level: u32,
    out: *mut *mut c_char,
) -> LrStatus {
    guard(|| {
        let slot = out_arg(out)?;
        *slot = ptr::null_mut();
        let g = group_arg(g)?;
        let z = lift(g.subgroup(str_arg(subgroup)?))?;
        let cl = lift(classify::classify_lzg(g, &z, level))?;
        let text = report::to_json(&report::classify_report(g, &cl));
        *slot = CString::new(text).map_err(|_| LrStatus::Internal)?.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn lr_status_message(status: LrStatus) -> *const c_char {
    let s: &'static CStr = match status {
        LrStatus::Ok => c"ok",
        LrStatus::NullPointer => c"null pointer argument",
        LrStatus::InvalidUtf8 => c"string argument is not UTF-8",
        LrStatus::UnknownGroup => c"unknown group name",
        LrStatus::UnknownSubgroup => c"unknown central subgroup",
        LrStatus::OutsideAlcove => c"weight outside the alcove",
        LrStatus::InvalidArgument => c"invalid argument",
        LrStatus::Internal => c"internal error",
    };
    s.as_ptr()
}
