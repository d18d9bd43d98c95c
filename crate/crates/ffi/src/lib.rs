//! C ABI over `lap1`.
//!
//! Graphs cross the boundary as opaque [`Lap1Graph`] handles. Every fallible
//! function returns a [`Lap1Status`] and writes results through out-pointers;
//! on failure [`lap1_last_error`] describes what went wrong on the calling
//! thread. Strings returned by the library must be released with
//! [`lap1_string_free`], graphs with [`lap1_graph_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lap1::graph::{canonical_form, parse_graph6, pendant_profile, to_graph6};
use lap1::linalg::laplacian_multiplicity_one;
use lap1::reduction::{multiplicity_fast, reduced_graph};
use lap1::Graph;

/// Opaque graph handle.
pub struct Lap1Graph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lap1Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(Lap1Status, String);

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> Lap1Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Lap1Status::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            Lap1Status::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const Lap1Graph) -> Result<&'a Graph, Fail> {
    g.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| Fail(Lap1Status::NullPointer, "graph handle is null".into()))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(Lap1Status::NullPointer, format!("{what} is null")));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library strings have no NUL")
        .into_raw()
}

fn boxed(g: Graph) -> *mut Lap1Graph {
    Box::into_raw(Box::new(Lap1Graph { inner: g }))
}

/// Message for the last failed call on this thread, or NULL after a
/// success. Valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn lap1_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lap1_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parse a graph6 string.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut Lap1Graph,
) -> Lap1Status {
    guard(|| {
        if text.is_null() {
            return Err(Fail(Lap1Status::NullPointer, "text is null".into()));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Fail(Lap1Status::InvalidUtf8, e.to_string()))?;
        let g = parse_graph6(s).map_err(|e| Fail(Lap1Status::ParseError, e.to_string()))?;
        put(out, boxed(g), "out")
    })
}

/// Build a graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (it may be NULL when `m` is
/// 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut Lap1Graph,
) -> Lap1Status {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(Fail(Lap1Status::NullPointer, "edges is null".into()));
        } else {
            let len = m
                .checked_mul(2)
                .ok_or_else(|| Fail(Lap1Status::InvalidGraph, "edge count overflows".into()))?;
            std::slice::from_raw_parts(edges, len)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edge_list(n, &pairs)
            .map_err(|e| Fail(Lap1Status::InvalidGraph, e.to_string()))?;
        put(out, boxed(g), "out")
    })
}

/// Release a graph. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn lap1_graph_free(g: *mut Lap1Graph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Release a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn lap1_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_graph_order(g: *const Lap1Graph, out: *mut usize) -> Lap1Status {
    guard(|| put(out, graph_ref(g)?.order(), "out"))
}

/// Number of edges.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_graph_size(g: *const Lap1Graph, out: *mut usize) -> Lap1Status {
    guard(|| put(out, graph_ref(g)?.size(), "out"))
}

/// graph6 encoding in the handle's own labelling.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_graph_to_graph6(
    g: *const Lap1Graph,
    out: *mut *mut c_char,
) -> Lap1Status {
    guard(|| {
        let s = to_graph6(graph_ref(g)?);
        put(out, c_string(s), "out")
    })
}

/// graph6 of the canonical labelling; equal for isomorphic graphs.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_canonical_form(
    g: *const Lap1Graph,
    out: *mut *mut c_char,
) -> Lap1Status {
    guard(|| {
        let s = canonical_form(graph_ref(g)?).into_string();
        put(out, c_string(s), "out")
    })
}

/// Multiplicity of 1 as a Laplacian eigenvalue, by exact rank.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_multiplicity_one(g: *const Lap1Graph, out: *mut usize) -> Lap1Status {
    guard(|| put(out, laplacian_multiplicity_one(graph_ref(g)?), "out"))
}

/// Same multiplicity through the reduction pipeline. When `trace_json` is
/// not NULL it receives the reduction trace as JSON.
///
/// # Safety
/// `g` must be a live handle, `out` writable, `trace_json` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_multiplicity_fast(
    g: *const Lap1Graph,
    out: *mut usize,
    trace_json: *mut *mut c_char,
) -> Lap1Status {
    guard(|| {
        let (m, trace) = multiplicity_fast(graph_ref(g)?);
        put(out, m, "out")?;
        if !trace_json.is_null() {
            trace_json.write(c_string(trace.to_json()));
        }
        Ok(())
    })
}

/// Pendant and quasi-pendant vertex counts.
///
/// # Safety
/// `g` must be a live handle; `p` and `q` writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_pendant_counts(
    g: *const Lap1Graph,
    p: *mut usize,
    q: *mut usize,
) -> Lap1Status {
    guard(|| {
        let prof = pendant_profile(graph_ref(g)?);
        if q.is_null() {
            return Err(Fail(Lap1Status::NullPointer, "q is null".into()));
        }
        put(p, prof.p, "p")?;
        put(q, prof.q, "q")
    })
}

/// The reduced graph as a new handle, and `p - q`, the multiplicity lost
/// by reducing. `offset` may be NULL.
///
/// # Safety
/// `g` must be a live handle, `out` writable, `offset` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn lap1_reduced_graph(
    g: *const Lap1Graph,
    out: *mut *mut Lap1Graph,
    offset: *mut usize,
) -> Lap1Status {
    guard(|| {
        let r = reduced_graph(graph_ref(g)?);
        if out.is_null() {
            return Err(Fail(Lap1Status::NullPointer, "out is null".into()));
        }
        if !offset.is_null() {
            offset.write(r.offset);
        }
        put(out, boxed(r.graph), "out")
    })
}
