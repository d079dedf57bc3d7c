//! C ABI for solgraph.
//!
//! Groups are opaque `SgGroup` handles created by `sg_group_from_name` or
//! `sg_group_from_generators` and released with `sg_group_free`. Every
//! fallible call returns an `SgStatus`; on failure a description is available
//! from `sg_last_error_message` on the same thread until the next call.
//! Strings returned by the library are released with `sg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use solgraph::catalog::{by_name, from_generators, CatalogEntry};
use solgraph::graph::{build_graph, diameter, reduced_graph, universal_vertices};
use solgraph::perm::parse_cycles;
use solgraph::solubilizer::{solubilizer, PairCache};
use solgraph::structure::{is_soluble, soluble_radical};
use solgraph::verify::verify_group;
use solgraph::Error;

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotMember = 4,
    CapExceeded = 5,
    UnknownGroup = 6,
    UnknownCheck = 7,
    InvalidArgument = 8,
    BudgetExceeded = 9,
    Disconnected = 10,
    EmptyGraph = 11,
    Internal = 12,
}

/// Opaque group handle.
pub struct SgGroup {
    entry: CatalogEntry,
    cache: PairCache,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SgStatus {
    match e {
        Error::Parse { .. } | Error::RepeatedPoint { .. } | Error::PointOutOfRange { .. } | Error::InvalidImages(_) => {
            SgStatus::Parse
        }
        Error::NotMember { .. } | Error::DegreeMismatch { .. } => SgStatus::NotMember,
        Error::CapExceeded { .. } => SgStatus::CapExceeded,
        Error::UnknownGroup(_) => SgStatus::UnknownGroup,
        Error::UnknownCheck(_) => SgStatus::UnknownCheck,
        Error::BudgetExceeded { .. } => SgStatus::BudgetExceeded,
        Error::Disconnected => SgStatus::Disconnected,
        Error::EmptyGraph => SgStatus::EmptyGraph,
        Error::InvalidArgument(_) | Error::NotSubgroup | Error::NotNormal | Error::SeriesTooLong { .. } => {
            SgStatus::InvalidArgument
        }
        Error::Io(_) => SgStatus::Internal,
    }
}

struct Failure(SgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SgStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SgStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            SgStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(SgStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn group_arg<'a>(g: *const SgGroup) -> Result<&'a SgGroup, Failure> {
    g.as_ref().ok_or_else(|| Failure(SgStatus::NullPointer, "group handle is null".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SgStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn new_handle(entry: CatalogEntry) -> *mut SgGroup {
    Box::into_raw(Box::new(SgGroup { entry, cache: PairCache::new() }))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn sg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates a group from a catalog name such as `"A5"` or `"PSL2-7"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sg_group_from_name(name: *const c_char, out: *mut *mut SgGroup) -> SgStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let entry = by_name(name)?;
        write_out(out, new_handle(entry))
    })
}

/// Creates a group of the given degree from `count` generators in cycle notation.
///
/// # Safety
/// `generators` must point to `count` NUL-terminated strings and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sg_group_from_generators(
    degree: usize,
    generators: *const *const c_char,
    count: usize,
    out: *mut *mut SgGroup,
) -> SgStatus {
    guard(|| {
        if generators.is_null() {
            return Err(Failure(SgStatus::NullPointer, "generator array is null".into()));
        }
        let texts = (0..count).map(|i| str_arg(*generators.add(i), "generator")).collect::<Result<Vec<&str>, _>>()?;
        let group = from_generators(degree, &texts)?;
        let entry = CatalogEntry {
            name: "custom".into(),
            group,
            is_soluble_expected: None,
            is_almost_simple: None,
            notes: String::new(),
        };
        write_out(out, new_handle(entry))
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `group` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sg_group_free(group: *mut SgGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sg_group_order(group: *const SgGroup, out: *mut u64) -> SgStatus {
    guard(|| {
        let g = group_arg(group)?;
        let order = u64::try_from(g.entry.group.order())
            .map_err(|_| Failure(SgStatus::InvalidArgument, "order does not fit in 64 bits".into()))?;
        write_out(out, order)
    })
}

/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sg_group_degree(group: *const SgGroup, out: *mut usize) -> SgStatus {
    guard(|| write_out(out, group_arg(group)?.entry.group.degree()))
}

/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sg_group_is_soluble(group: *const SgGroup, out: *mut bool) -> SgStatus {
    guard(|| write_out(out, is_soluble(&group_arg(group)?.entry.group)))
}

/// Size of the solubilizer of `element` and whether it is a subgroup.
///
/// # Safety
/// `group`, `element`, `out_size` and `out_is_subgroup` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sg_solubilizer(
    group: *const SgGroup,
    element: *const c_char,
    out_size: *mut u64,
    out_is_subgroup: *mut bool,
) -> SgStatus {
    guard(|| {
        let g = group_arg(group)?;
        let x = parse_cycles(str_arg(element, "element")?, g.entry.group.degree())?;
        let r = solubilizer(&g.entry.group, &x, &g.cache)?;
        write_out(out_size, r.cardinality as u64)?;
        write_out(out_is_subgroup, r.is_subgroup)
    })
}

/// Order of the soluble radical.
///
/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sg_radical_order(group: *const SgGroup, out: *mut u64) -> SgStatus {
    guard(|| write_out(out, soluble_radical(&group_arg(group)?.entry.group)?.radical.len() as u64))
}

/// Diameter of the solubility graph with the soluble radical removed.
/// Returns `SG_STATUS_EMPTY_GRAPH` for soluble groups.
///
/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sg_reduced_diameter(group: *const SgGroup, out: *mut u32) -> SgStatus {
    guard(|| {
        let g = group_arg(group)?;
        let graph = build_graph(&g.entry.group, &g.cache)?;
        let reduced = reduced_graph(&graph, &universal_vertices(&graph))?;
        write_out(out, diameter(&reduced)? as u32)
    })
}

/// Runs verification checks and returns the JSON report. `suite` is a
/// comma-separated list of check ids, or null for every check. The number
/// of failed checks is written to `out_failed` when it is not null.
///
/// # Safety
/// `group` and `out_json` must be valid; `suite` null or NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sg_verify_json(
    group: *const SgGroup,
    suite: *const c_char,
    out_json: *mut *mut c_char,
    out_failed: *mut u32,
) -> SgStatus {
    guard(|| {
        let g = group_arg(group)?;
        let ids: Vec<&str> = if suite.is_null() {
            Vec::new()
        } else {
            str_arg(suite, "suite")?.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
        };
        let report = verify_group(&g.entry, &ids)?;
        let json = CString::new(report.to_json()?).map_err(|_| Failure(SgStatus::Internal, "nul in report".into()))?;
        if !out_failed.is_null() {
            out_failed.write(report.failures().count() as u32);
        }
        write_out(out_json, json.into_raw())
    })
}

/// Releases a string returned by the library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
