//! C ABI over `maxpi`. Every handle is an opaque pointer owned by the caller
//! and released with the matching `*_free`. Functions return a
//! [`MaxpiStatus`]; after a failure [`maxpi_last_error`] describes it.
//! Vertex ids are 0-indexed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use maxpi::io::parse_graph;
use maxpi::solver::{solve, ConstantSchedule, Mode, Solution};
use maxpi::{Error, Graph, PiClass};

/// Opaque graph handle.
pub struct MaxpiGraph(Graph);

/// Opaque hereditary-class handle.
pub struct MaxpiClass(PiClass);

/// Opaque solver result.
pub struct MaxpiSolution(Solution);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxpiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    InvalidConstants = 4,
    CapExceeded = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: MaxpiStatus, msg: impl Into<String>) -> MaxpiStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> MaxpiStatus {
    match e {
        Error::Parse { .. } => MaxpiStatus::ParseError,
        Error::InvalidConstants(_) => MaxpiStatus::InvalidConstants,
        Error::CapExceeded { .. } => MaxpiStatus::CapExceeded,
        Error::Verification(_) => MaxpiStatus::Internal,
        _ => MaxpiStatus::InvalidArgument,
    }
}

fn from_error(e: Error) -> MaxpiStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> MaxpiStatus) -> MaxpiStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(MaxpiStatus::Internal, "panic inside maxpi"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, MaxpiStatus> {
    if p.is_null() {
        return Err(fail(MaxpiStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(MaxpiStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message for the most recent failure on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn maxpi_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph on `n` vertices from `m` edges given as `2 * m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m == 0`)
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maxpi_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut MaxpiGraph,
) -> MaxpiStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return fail(MaxpiStatus::NullPointer, "null argument");
        }
        let flat: &[usize] = if m == 0 { &[] } else { std::slice::from_raw_parts(edges, 2 * m) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::from_edges(n, &pairs) {
            Ok(g) => {
                put(out, MaxpiGraph(g));
                MaxpiStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Parses the `p edge` / `e u v` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn maxpi_graph_parse(text: *const c_char, out: *mut *mut MaxpiGraph) -> MaxpiStatus {
    guard(|| {
        if out.is_null() {
            return fail(MaxpiStatus::NullPointer, "out is null");
        }
        let s = match self::text(text, "text") {
            Ok(s) => s,
            Err(status) => return status,
        };
        match parse_graph(s) {
            Ok(g) => {
                put(out, MaxpiGraph(g));
                MaxpiStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn maxpi_graph_vertex_count(g: *const MaxpiGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn maxpi_graph_free(g: *mut MaxpiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Creates `chordal` or `interval`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn maxpi_class_new(name: *const c_char, out: *mut *mut MaxpiClass) -> MaxpiStatus {
    guard(|| {
        if out.is_null() {
            return fail(MaxpiStatus::NullPointer, "out is null");
        }
        let name = match text(name, "name") {
            Ok(s) => s,
            Err(status) => return status,
        };
        match PiClass::from_name(name, Vec::new()) {
            Ok(c) => {
                put(out, MaxpiClass(c));
                MaxpiStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Members of `base` that additionally contain no induced copy of any of
/// the `len` graphs in `family`.
///
/// # Safety
/// `base` must be live, `family` must point to `len` live graph handles
/// (or be null when `len == 0`) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maxpi_class_with_overlay(
    base: *const MaxpiClass,
    family: *const *const MaxpiGraph,
    len: usize,
    out: *mut *mut MaxpiClass,
) -> MaxpiStatus {
    guard(|| {
        if base.is_null() || out.is_null() || (family.is_null() && len > 0) {
            return fail(MaxpiStatus::NullPointer, "null argument");
        }
        let handles: &[*const MaxpiGraph] = if len == 0 { &[] } else { std::slice::from_raw_parts(family, len) };
        let mut graphs = Vec::with_capacity(len);
        for &h in handles {
            match h.as_ref() {
                Some(g) => graphs.push(g.0.clone()),
                None => return fail(MaxpiStatus::NullPointer, "null graph in family"),
            }
        }
        match PiClass::with_overlay(&(*base).0, graphs) {
            Ok(c) => {
                put(out, MaxpiClass(c));
                MaxpiStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn maxpi_class_free(c: *mut MaxpiClass) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Solves `g` for `class`. `mode` is one of `auto`, `structured`, `brute`,
/// `forced-B1`, `forced-B2`; null means `auto`. `constants` is the text of a
/// constants file; null means the defaults.
///
/// # Safety
/// Handles must be live, strings NUL-terminated or null, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn maxpi_solve(
    g: *const MaxpiGraph,
    class: *const MaxpiClass,
    mode: *const c_char,
    constants: *const c_char,
    out: *mut *mut MaxpiSolution,
) -> MaxpiStatus {
    guard(|| {
        if g.is_null() || class.is_null() || out.is_null() {
            return fail(MaxpiStatus::NullPointer, "null argument");
        }
        let mode = if mode.is_null() {
            Mode::Auto
        } else {
            match text(mode, "mode").map(str::parse::<Mode>) {
                Ok(Ok(m)) => m,
                Ok(Err(e)) => return from_error(e),
                Err(status) => return status,
            }
        };
        let c = if constants.is_null() {
            ConstantSchedule::default()
        } else {
            match text(constants, "constants").map(ConstantSchedule::parse) {
                Ok(Ok(c)) => c,
                Ok(Err(e)) => return from_error(e),
                Err(status) => return status,
            }
        };
        match solve(&(*g).0, &(*class).0, &c, mode) {
            Ok(sol) => {
                put(out, MaxpiSolution(sol));
                MaxpiStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `s` must be null or a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn maxpi_solution_size(s: *const MaxpiSolution) -> usize {
    s.as_ref().map_or(0, |s| s.0.size())
}

/// Copies the solution's vertices, ascending, into `buf`. `*written`
/// receives the solution size; if `cap` is smaller nothing is copied and
/// `BufferTooSmall` is returned.
///
/// # Safety
/// `buf` must have room for `cap` values (or be null when `cap == 0`);
/// `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maxpi_solution_vertices(
    s: *const MaxpiSolution,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> MaxpiStatus {
    guard(|| {
        let Some(s) = s.as_ref() else {
            return fail(MaxpiStatus::NullPointer, "solution is null");
        };
        if written.is_null() {
            return fail(MaxpiStatus::NullPointer, "written is null");
        }
        let size = s.0.size();
        *written = size;
        if cap < size {
            return fail(MaxpiStatus::BufferTooSmall, format!("need room for {size} vertices, got {cap}"));
        }
        if size > 0 && buf.is_null() {
            return fail(MaxpiStatus::NullPointer, "buf is null");
        }
        for (i, v) in s.0.vertices.iter().enumerate() {
            *buf.add(i) = v;
        }
        MaxpiStatus::Ok
    })
}

/// Branch counters and timings as a JSON object. Free with
/// [`maxpi_string_free`]. Null on failure.
///
/// # Safety
/// `s` must be null or a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn maxpi_solution_stats_json(s: *const MaxpiSolution) -> *mut c_char {
    let Some(s) = s.as_ref() else {
        set_error("solution is null".into());
        return ptr::null_mut();
    };
    match serde_json::to_string(&s.0.stats).ok().and_then(|j| CString::new(j).ok()) {
        Some(c) => c.into_raw(),
        None => {
            set_error("cannot serialise stats".into());
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must be null or a string handed out by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn maxpi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `s` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn maxpi_solution_free(s: *mut MaxpiSolution) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
