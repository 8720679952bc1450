//! C ABI over `fanplan`.
//!
//! Objects cross the boundary as opaque handles created by `fanplan_*` constructors
//! and released by the matching `*_free`. Every fallible call returns a
//! [`FanplanStatus`]; after a non-OK status, [`fanplan_last_error`] describes
//! the failure. Strings returned by the library are released with
//! [`fanplan_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fanplan::construct::{glued_k5_family, k7_drawing};
use fanplan::decide::{decide_outer_fan_planar, decide_two_layer_fan_planar, Answer, Decision, SearchBudget};
use fanplan::io::{drawing_from_json, drawing_to_json, ingest_coordinates, parse_edge_list};
use fanplan::topo::{max_crossings_per_edge, validate_fan_planar};
use fanplan::{Error, Graph, TopoDrawing};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanplanStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    InvalidArgument = 1,
    /// Malformed text input; the message carries line and column.
    ParseError = 2,
    /// Well-formed input that violates a graph or drawing invariant.
    InvalidInput = 3,
    /// An output buffer is too small.
    BufferTooSmall = 4,
    Internal = 5,
}

/// Outcome of a decision procedure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanplanAnswer {
    Yes = 0,
    No = 1,
    /// The order budget ran out first.
    Unknown = 2,
}

/// Opaque graph handle.
pub struct FanplanGraph {
    inner: Graph,
}

/// Opaque drawing handle.
pub struct FanplanDrawing {
    inner: TopoDrawing,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: FanplanStatus, msg: impl Into<String>) -> FanplanStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> FanplanStatus {
    let status = match e {
        Error::Parse { .. } | Error::Json(_) => FanplanStatus::ParseError,
        _ => FanplanStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into [`FanplanStatus::Internal`].
fn guard(f: impl FnOnce() -> FanplanStatus) -> FanplanStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(FanplanStatus::Internal, "internal panic"),
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, FanplanStatus> {
    if s.is_null() {
        return Err(fail(FanplanStatus::InvalidArgument, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(FanplanStatus::InvalidArgument, "string is not UTF-8"))
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(FanplanStatus::InvalidArgument, concat!("null argument `", stringify!($p), "`"));
        })+
    };
}

fn budget(max_orders: u64) -> SearchBudget {
    if max_orders == 0 {
        SearchBudget::unlimited()
    } else {
        SearchBudget::unlimited().with_max_orders(max_orders)
    }
}

fn answer(a: Answer) -> FanplanAnswer {
    match a {
        Answer::Yes => FanplanAnswer::Yes,
        Answer::No => FanplanAnswer::No,
        Answer::Unknown => FanplanAnswer::Unknown,
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fanplan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fanplan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph on `n` vertices from `m` pairs stored flat in `edges` (`2 * m` entries).
///
/// # Safety
/// `edges` points to `2 * m` readable values (may be null when `m == 0`); `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fanplan_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut FanplanGraph,
) -> FanplanStatus {
    guard(|| {
        non_null!(out);
        if m > 0 && edges.is_null() {
            return fail(FanplanStatus::InvalidArgument, "null edge array");
        }
        let flat: &[usize] = if m == 0 { &[] } else { std::slice::from_raw_parts(edges, 2 * m) };
        match Graph::from_edges(n, flat.chunks(2).map(|p| (p[0], p[1]))) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(FanplanGraph { inner: g }));
                FanplanStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Parses edge-list text (`n m` header, then `u v` lines).
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fanplan_graph_from_edge_list(text: *const c_char, out: *mut *mut FanplanGraph) -> FanplanStatus {
    guard(|| {
        non_null!(out);
        let s = match self::text(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match parse_edge_list(s) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(FanplanGraph { inner: g }));
                FanplanStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn fanplan_graph_vertex_count(g: *const FanplanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn fanplan_graph_edge_count(g: *const FanplanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.m())
}

/// # Safety
/// `g` is null or a graph handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fanplan_graph_free(g: *mut FanplanGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

unsafe fn copy_out(dst: *mut usize, cap: usize, src: &[usize]) -> Result<(), FanplanStatus> {
    if dst.is_null() {
        return Ok(());
    }
    if cap < src.len() {
        return Err(fail(
            FanplanStatus::BufferTooSmall,
            format!("buffer holds {cap}, need {}", src.len()),
        ));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
    Ok(())
}

/// Decides outer fan-planarity. `max_orders == 0` means no budget. On a yes
/// answer the circular witness order is copied to `order` (capacity `order_cap`,
/// may be null). `explored` may be null.
///
/// # Safety
/// `g` is a live handle; `answer_out` is writable; `order` has room for `order_cap` values.
#[no_mangle]
pub unsafe extern "C" fn fanplan_decide_outer(
    g: *const FanplanGraph,
    max_orders: u64,
    answer_out: *mut FanplanAnswer,
    order: *mut usize,
    order_cap: usize,
    explored: *mut u64,
) -> FanplanStatus {
    guard(|| {
        non_null!(g, answer_out);
        let d: Decision<_> = decide_outer_fan_planar(&(*g).inner, budget(max_orders));
        if let Some(w) = &d.witness {
            if let Err(s) = copy_out(order, order_cap, w.as_slice()) {
                return s;
            }
        }
        *answer_out = answer(d.answer);
        if !explored.is_null() {
            *explored = d.explored;
        }
        FanplanStatus::Ok
    })
}

/// Decides 2-layer fan-planarity. On yes, the layers go to `top` and `bottom`
/// (each of capacity `cap`, may be null) with their lengths in `top_len` and `bottom_len`.
///
/// # Safety
/// `g` is a live handle; `answer_out` is writable; non-null buffers hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn fanplan_decide_two_layer(
    g: *const FanplanGraph,
    max_orders: u64,
    answer_out: *mut FanplanAnswer,
    top: *mut usize,
    top_len: *mut usize,
    bottom: *mut usize,
    bottom_len: *mut usize,
    cap: usize,
    explored: *mut u64,
) -> FanplanStatus {
    guard(|| {
        non_null!(g, answer_out);
        let d = decide_two_layer_fan_planar(&(*g).inner, budget(max_orders));
        if let Some(w) = &d.witness {
            for (buf, len, layer) in [(top, top_len, w.top()), (bottom, bottom_len, w.bottom())] {
                if let Err(s) = copy_out(buf, cap, layer) {
                    return s;
                }
                if !len.is_null() {
                    *len = layer.len();
                }
            }
        }
        *answer_out = answer(d.answer);
        if !explored.is_null() {
            *explored = d.explored;
        }
        FanplanStatus::Ok
    })
}

unsafe fn drawing_from(
    text: *const c_char,
    out: *mut *mut FanplanDrawing,
    load: fn(&str) -> fanplan::Result<TopoDrawing>,
) -> FanplanStatus {
    guard(|| {
        non_null!(out);
        let s = match self::text(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match load(s) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(FanplanDrawing { inner: d }));
                FanplanStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Loads a drawing from its JSON form.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_from_json(text: *const c_char, out: *mut *mut FanplanDrawing) -> FanplanStatus {
    drawing_from(text, out, drawing_from_json)
}

/// Builds a straight-line drawing from coordinate-file text (`v x y` lines, then edges).
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_from_coordinates(
    text: *const c_char,
    out: *mut *mut FanplanDrawing,
) -> FanplanStatus {
    drawing_from(text, out, ingest_coordinates)
}

/// JSON form of a drawing; release with [`fanplan_string_free`]. Null on failure.
///
/// # Safety
/// `d` is a live drawing handle.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_to_json(d: *const FanplanDrawing) -> *mut c_char {
    let Some(d) = d.as_ref() else {
        set_error("null drawing");
        return ptr::null_mut();
    };
    CString::new(drawing_to_json(&d.inner)).map_or(ptr::null_mut(), CString::into_raw)
}

/// Number of fan-planarity violations (0 means the drawing is fan-planar).
///
/// # Safety
/// `d` is a live drawing handle; `count` is writable.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_validate(d: *const FanplanDrawing, count: *mut usize) -> FanplanStatus {
    guard(|| {
        non_null!(d, count);
        *count = validate_fan_planar(&(*d).inner).len();
        FanplanStatus::Ok
    })
}

/// # Safety
/// `d` is a live drawing handle.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_crossing_count(d: *const FanplanDrawing) -> usize {
    d.as_ref().map_or(0, |d| d.inner.crossing_count())
}

/// # Safety
/// `d` is a live drawing handle.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_max_crossings_per_edge(d: *const FanplanDrawing) -> usize {
    d.as_ref().map_or(0, |d| max_crossings_per_edge(&d.inner))
}

/// Copy of the drawn graph.
///
/// # Safety
/// `d` is a live drawing handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_graph(d: *const FanplanDrawing, out: *mut *mut FanplanGraph) -> FanplanStatus {
    guard(|| {
        non_null!(d, out);
        *out = Box::into_raw(Box::new(FanplanGraph {
            inner: (*d).inner.graph().clone(),
        }));
        FanplanStatus::Ok
    })
}

/// # Safety
/// `d` is null or a drawing handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fanplan_drawing_free(d: *mut FanplanDrawing) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// The 2-planar fan-planar drawing of K7.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fanplan_gen_k7(out: *mut *mut FanplanDrawing) -> FanplanStatus {
    guard(|| {
        non_null!(out);
        *out = Box::into_raw(Box::new(FanplanDrawing { inner: k7_drawing() }));
        FanplanStatus::Ok
    })
}

/// `h` glued K5 blocks; the outer witness order (3h+2 entries) goes to
/// `order` when non-null.
///
/// # Safety
/// `out` is writable; `order` holds `order_cap` values.
#[no_mangle]
pub unsafe extern "C" fn fanplan_gen_glued_k5(
    h: usize,
    out: *mut *mut FanplanGraph,
    order: *mut usize,
    order_cap: usize,
) -> FanplanStatus {
    guard(|| {
        non_null!(out);
        let f = match glued_k5_family(h) {
            Ok(f) => f,
            Err(e) => return from_error(e),
        };
        if let Err(s) = copy_out(order, order_cap, f.witness.as_slice()) {
            return s;
        }
        *out = Box::into_raw(Box::new(FanplanGraph { inner: f.graph }));
        FanplanStatus::Ok
    })
}
