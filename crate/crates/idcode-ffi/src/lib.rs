//! C-compatible wrapper around the identifying-code library.
//!
//! Conventions:
//! - Handles (`IdcGraph`, `IdcReport`) are opaque. Create them through the
//!   constructors here and release them with the matching `_free` call;
//!   every `_free` accepts null and does nothing.
//! - Fallible calls return `IDC_OK` (zero) or a negative error code and
//!   record a message retrievable via `idc_last_error_message`.
//! - Query calls on a null handle return 0 (or null for strings).
//! - Vertex buffers follow a copy-out pattern: the function returns the
//!   total count and fills at most `cap` entries, so calling with a null
//!   buffer and zero capacity sizes the allocation.
//! - No call unwinds across the boundary: an internal certification
//!   failure surfaces as `IDC_ERR_INTERNAL` instead of a crash.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use idcode::construct::{self, CaseTaken, ConstructionReport};
use idcode::indep::FractionProvider;
use idcode::{certify, exact, io, Error, Graph, VertexSet};

/// Success.
pub const IDC_OK: i32 = 0;
/// A required pointer argument was null.
pub const IDC_ERR_NULL: i32 = -1;
/// A text argument was not valid UTF-8.
pub const IDC_ERR_UTF8: i32 = -2;
/// The input text or an id in a list failed to parse or was out of range.
pub const IDC_ERR_PARSE: i32 = -3;
/// The graph violates a precondition of the requested operation.
pub const IDC_ERR_PRECONDITION: i32 = -4;
/// The graph exceeds the exact solver's vertex limit.
pub const IDC_ERR_TOO_LARGE: i32 = -5;
/// An internal certification assertion failed; the message has details.
pub const IDC_ERR_INTERNAL: i32 = -6;

/// Opaque graph handle.
pub struct IdcGraph {
    inner: Graph,
}

/// Opaque handle to a certified construction result.
pub struct IdcReport {
    inner: ConstructionReport,
    variant: CString,
    note: Option<CString>,
}

/// Which construction to run.
#[repr(C)]
pub enum IdcVariant {
    /// The default pipeline and its bound.
    Main = 0,
    /// Exact bipartition; sharper bound on bipartite inputs.
    Bipartite = 1,
    /// Greedy colouring with the colour count passed separately.
    Chromatic = 2,
    /// Requires the graph to be free of false twins; sharpest bound.
    NoFalseTwins = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: String) {
    let clean = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = clean);
}

fn code_of(e: &Error) -> i32 {
    if e.is_parse() {
        IDC_ERR_PARSE
    } else if matches!(e, Error::TooLargeForExact { .. }) {
        IDC_ERR_TOO_LARGE
    } else {
        IDC_ERR_PRECONDITION
    }
}

fn fail(e: &Error) -> i32 {
    set_last_error(e.to_string());
    code_of(e)
}

/// Runs a fallible entry point, converting any panic into
/// `IDC_ERR_INTERNAL` so unwinding never crosses the C boundary.
fn guarded<F: FnOnce() -> i32>(f: F) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| (*s).to_owned())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic without message".to_owned());
            set_last_error(format!("internal assertion failed: {msg}"));
            IDC_ERR_INTERNAL
        }
    }
}

/// Message describing the most recent failure on this thread, or null if
/// none has been recorded. The pointer stays valid until the next failing
/// call on the same thread.
#[no_mangle]
pub extern "C" fn idc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow();
        if msg.as_bytes().is_empty() {
            ptr::null()
        } else {
            msg.as_ptr()
        }
    })
}

/// Parses a graph from text (native edge-list or DIMACS, auto-detected)
/// and stores a new handle in `*out`.
#[no_mangle]
pub extern "C" fn idc_graph_parse(text: *const c_char, out: *mut *mut IdcGraph) -> i32 {
    guarded(|| {
        if text.is_null() || out.is_null() {
            set_last_error("null argument".into());
            return IDC_ERR_NULL;
        }
        let text = match unsafe { CStr::from_ptr(text) }.to_str() {
            Ok(t) => t,
            Err(_) => {
                set_last_error("graph text is not valid UTF-8".into());
                return IDC_ERR_UTF8;
            }
        };
        match io::parse_graph(text) {
            Ok(g) => {
                unsafe { *out = Box::into_raw(Box::new(IdcGraph { inner: g })) };
                IDC_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs laid out as
/// `u0, v0, u1, v1, ...` and stores a new handle in `*out`. `endpoints`
/// may be null only when `edge_count` is zero.
#[no_mangle]
pub extern "C" fn idc_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    edge_count: usize,
    out: *mut *mut IdcGraph,
) -> i32 {
    guarded(|| {
        if out.is_null() || (endpoints.is_null() && edge_count > 0) {
            set_last_error("null argument".into());
            return IDC_ERR_NULL;
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            unsafe { std::slice::from_raw_parts(endpoints, 2 * edge_count) }
        };
        let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        match Graph::from_edge_list(n, &edges) {
            Ok(g) => {
                unsafe { *out = Box::into_raw(Box::new(IdcGraph { inner: g })) };
                IDC_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a graph handle.
#[no_mangle]
pub extern "C" fn idc_graph_free(g: *mut IdcGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn idc_graph_vertex_count(g: *const IdcGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.inner.n())
}

/// Number of edges, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn idc_graph_edge_count(g: *const IdcGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.inner.edge_count())
}

/// Maximum degree, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn idc_graph_max_degree(g: *const IdcGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.inner.max_degree())
}

/// Renders the graph in the canonical native edge-list format. The caller
/// owns the returned string and must release it with `idc_string_free`.
/// Returns null for a null handle.
#[no_mangle]
pub extern "C" fn idc_graph_format(g: *const IdcGraph) -> *mut c_char {
    let Some(g) = (unsafe { g.as_ref() }) else {
        return ptr::null_mut();
    };
    let text = io::graph_to_string(&g.inner);
    CString::new(text)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Releases a string returned by this library.
#[no_mangle]
pub extern "C" fn idc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Checks whether the `id_count` vertices in `ids` form an identifying
/// code of the graph. Returns 1 if they do, 0 if they do not, or a
/// negative error code (an out-of-range id is a parse error).
#[no_mangle]
pub extern "C" fn idc_verify(g: *const IdcGraph, ids: *const usize, id_count: usize) -> i32 {
    guarded(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            set_last_error("null graph handle".into());
            return IDC_ERR_NULL;
        };
        if ids.is_null() && id_count > 0 {
            set_last_error("null id buffer".into());
            return IDC_ERR_NULL;
        }
        let ids = if id_count == 0 {
            &[][..]
        } else {
            unsafe { std::slice::from_raw_parts(ids, id_count) }
        };
        let mut set = VertexSet::new(g.inner.n());
        for &v in ids {
            if v >= g.inner.n() {
                return fail(&Error::VertexOutOfRange { v, n: g.inner.n() });
            }
            set.insert(v);
        }
        i32::from(certify::identifying_failures(&g.inner, &set).is_empty())
    })
}

fn wrap_report(report: ConstructionReport) -> *mut IdcReport {
    let variant = CString::new(report.variant.to_string()).unwrap_or_default();
    let note = report
        .note
        .as_deref()
        .and_then(|n| CString::new(n.replace('\0', " ")).ok());
    Box::into_raw(Box::new(IdcReport {
        inner: report,
        variant,
        note,
    }))
}

/// Runs the default construction and stores a report handle in `*out`.
#[no_mangle]
pub extern "C" fn idc_construct(g: *const IdcGraph, out: *mut *mut IdcReport) -> i32 {
    idc_construct_with(g, IdcVariant::Main, 0, out)
}

/// Runs the chosen construction variant. `colours` is only read for
/// `Chromatic` and must be at least 2 there; the other variants ignore it.
#[no_mangle]
pub extern "C" fn idc_construct_with(
    g: *const IdcGraph,
    variant: IdcVariant,
    colours: usize,
    out: *mut *mut IdcReport,
) -> i32 {
    guarded(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            set_last_error("null graph handle".into());
            return IDC_ERR_NULL;
        };
        if out.is_null() {
            set_last_error("null output slot".into());
            return IDC_ERR_NULL;
        }
        let result = match variant {
            IdcVariant::Main => construct::build_identifying_code(&g.inner),
            IdcVariant::Bipartite => {
                construct::build_with_fraction(&g.inner, &FractionProvider::Chromatic(2))
            }
            IdcVariant::Chromatic => {
                if colours < 2 {
                    set_last_error("chromatic variant needs at least 2 colours".into());
                    return IDC_ERR_PRECONDITION;
                }
                construct::build_with_fraction(&g.inner, &FractionProvider::Chromatic(colours))
            }
            IdcVariant::NoFalseTwins => construct::build_no_false_twins(&g.inner),
        };
        match result {
            Ok(report) => {
                unsafe { *out = wrap_report(report) };
                IDC_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a report handle.
#[no_mangle]
pub extern "C" fn idc_report_free(r: *mut IdcReport) {
    if !r.is_null() {
        drop(unsafe { Box::from_raw(r) });
    }
}

/// Number of vertices in the certified code, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn idc_report_code_size(r: *const IdcReport) -> usize {
    unsafe { r.as_ref() }.map_or(0, |r| r.inner.code.len())
}

/// Copies the code's vertex ids (ascending) into `buf`, writing at most
/// `cap` entries, and returns the full code size regardless of `cap`.
#[no_mangle]
pub extern "C" fn idc_report_code(r: *const IdcReport, buf: *mut usize, cap: usize) -> usize {
    let Some(r) = (unsafe { r.as_ref() }) else {
        return 0;
    };
    let total = r.inner.code.len();
    if !buf.is_null() && cap > 0 {
        let out = unsafe { std::slice::from_raw_parts_mut(buf, cap.min(total)) };
        for (slot, v) in out.iter_mut().zip(r.inner.code.iter()) {
            *slot = v;
        }
    }
    total
}

/// The certified size bound as a display value; the underlying comparison
/// was made in exact arithmetic before the report was built. Returns 0.0
/// for a null handle.
#[no_mangle]
pub extern "C" fn idc_report_bound(r: *const IdcReport) -> f64 {
    unsafe { r.as_ref() }.map_or(0.0, |r| r.inner.bound_value)
}

/// Which branch produced the code: 1 for the matching branch, 2 for the
/// false-twin branch, 0 for a null handle.
#[no_mangle]
pub extern "C" fn idc_report_case(r: *const IdcReport) -> i32 {
    unsafe { r.as_ref() }.map_or(0, |r| match r.inner.case_taken {
        CaseTaken::Case1Matching => 1,
        CaseTaken::Case2FalseTwins => 2,
    })
}

/// Vertex count of the input graph, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn idc_report_vertex_count(r: *const IdcReport) -> usize {
    unsafe { r.as_ref() }.map_or(0, |r| r.inner.n)
}

/// Name of the variant that ran (for example "main" or "bipartite"),
/// owned by the report handle. Returns null for a null handle.
#[no_mangle]
pub extern "C" fn idc_report_variant_name(r: *const IdcReport) -> *const c_char {
    unsafe { r.as_ref() }.map_or(ptr::null(), |r| r.variant.as_ptr())
}

/// Optional note attached to the run (for example a colouring fallback),
/// owned by the report handle; null when there is none.
#[no_mangle]
pub extern "C" fn idc_report_note(r: *const IdcReport) -> *const c_char {
    unsafe { r.as_ref() }.map_or(ptr::null(), |r| {
        r.note.as_ref().map_or(ptr::null(), |n| n.as_ptr())
    })
}

/// The largest vertex count the exact solver accepts by default.
#[no_mangle]
pub extern "C" fn idc_exact_default_limit() -> usize {
    exact::DEFAULT_VERTEX_LIMIT
}

/// Computes a minimum identifying code exhaustively. Writes the optimum
/// size to `*out_size` and copies at most `witness_cap` witness ids into
/// `witness_buf` when it is non-null.
#[no_mangle]
pub extern "C" fn idc_exact(
    g: *const IdcGraph,
    vertex_limit: usize,
    out_size: *mut usize,
    witness_buf: *mut usize,
    witness_cap: usize,
) -> i32 {
    guarded(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            set_last_error("null graph handle".into());
            return IDC_ERR_NULL;
        };
        if out_size.is_null() {
            set_last_error("null output slot".into());
            return IDC_ERR_NULL;
        }
        match exact::min_identifying_code(&g.inner, vertex_limit) {
            Ok(result) => {
                unsafe { *out_size = result.size };
                if !witness_buf.is_null() && witness_cap > 0 {
                    let out = unsafe {
                        std::slice::from_raw_parts_mut(witness_buf, witness_cap.min(result.size))
                    };
                    for (slot, v) in out.iter_mut().zip(result.witness.iter()) {
                        *slot = v;
                    }
                }
                IDC_OK
            }
            Err(e) => fail(&e),
        }
    })
}
