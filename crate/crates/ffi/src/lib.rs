//! C ABI for the `specert` library.
//!
//! Graphs and bipartite graphs cross the boundary as opaque handles owned by
//! the caller and released with the matching `*_free` function. Every entry
//! point returns a [`SpecertStatus`]; results go through out-pointers, which
//! are left untouched on failure. The message for the most recent failure on
//! the calling thread is available from [`specert_last_error_message`].
//!
//! Strings returned by the library are NUL-terminated UTF-8 and must be
//! released with [`specert_string_free`]. Certificates are returned as JSON
//! in the same schema the CLI prints.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use specert::certifiers::{find_k_tree, find_win_violator_with, perfect_matching, WIN_N_CAP};
use specert::error::Error;
use specert::spectral::{self, DEFAULT_TOLERANCE};
use specert::{families, graph6, BipartiteGraph, Graph};

/// Result codes shared by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Domain = 4,
    NotConverged = 5,
    Capacity = 6,
    Numeric = 7,
    Internal = 8,
}

/// Opaque simple graph.
pub struct SpecertGraph(Graph);

/// Opaque bipartite graph with a fixed `(X, Y)` split.
pub struct SpecertBipartite(BipartiteGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> SpecertStatus {
    match err {
        Error::Input(_) => SpecertStatus::InvalidInput,
        Error::Parse { .. } => SpecertStatus::Parse,
        Error::Stream { source, .. } => status_of(source),
        Error::Domain(_) => SpecertStatus::Domain,
        Error::Convergence { .. } => SpecertStatus::NotConverged,
        Error::Capacity(_) => SpecertStatus::Capacity,
        Error::Numeric(_) => SpecertStatus::Numeric,
        Error::Io(_) | Error::Json(_) | Error::Csv(_) => SpecertStatus::Internal,
    }
}

struct Fail(SpecertStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SpecertStatus::NullPointer, format!("{what} is NULL"))
}

fn guard<F>(body: F) -> SpecertStatus
where
    F: FnOnce() -> Result<(), Fail> + UnwindSafe,
{
    match catch_unwind(body) {
        Ok(Ok(())) => SpecertStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {msg}"));
            SpecertStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(SpecertStatus::Internal, "string contains NUL".into()))
}

unsafe fn edge_list(edges: *const usize, edge_count: usize) -> Result<Vec<(usize, usize)>, Fail> {
    if edge_count == 0 {
        return Ok(Vec::new());
    }
    if edges.is_null() {
        return Err(null("edges"));
    }
    let flat = std::slice::from_raw_parts(edges, 2 * edge_count);
    Ok(flat.chunks_exact(2).map(|p| (p[0], p[1])).collect())
}

fn tol_or_default(tol: f64) -> f64 {
    if tol > 0.0 {
        tol
    } else {
        DEFAULT_TOLERANCE
    }
}

/// Message for the last failure on this thread, or NULL if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn specert_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn specert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one graph6 string (the `>>graph6<<` header is accepted).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_graph_from_graph6(text: *const c_char, out: *mut *mut SpecertGraph) -> SpecertStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let bytes = CStr::from_ptr(text).to_bytes();
        let g = graph6::from_graph6(bytes.trim_ascii())?;
        write(out, Box::into_raw(Box::new(SpecertGraph(g))))
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must hold `2 * edge_count` values (it may be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SpecertGraph,
) -> SpecertStatus {
    guard(|| {
        let g = Graph::new(n, &edge_list(edges, edge_count)?)?;
        write(out, Box::into_raw(Box::new(SpecertGraph(g))))
    })
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn specert_graph_free(g: *mut SpecertGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_graph_order(g: *const SpecertGraph, out: *mut usize) -> SpecertStatus {
    guard(|| write(out, deref(g, "graph")?.0.order()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_graph_edge_count(g: *const SpecertGraph, out: *mut usize) -> SpecertStatus {
    guard(|| write(out, deref(g, "graph")?.0.edge_count()))
}

/// graph6 encoding, released with [`specert_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_graph_to_graph6(g: *const SpecertGraph, out: *mut *mut c_char) -> SpecertStatus {
    guard(|| {
        let s = graph6::to_graph6(&deref(g, "graph")?.0);
        write(out, into_c_string(s)?)
    })
}

/// `rho(aD + A)` by certified power iteration. A `tol` of 0 or less
/// selects the default tolerance.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_spectral_radius(
    g: *const SpecertGraph,
    a: f64,
    tol: f64,
    out: *mut f64,
) -> SpecertStatus {
    guard(|| {
        let r = spectral::rho_a(&deref(g, "graph")?.0, a, tol_or_default(tol))?;
        write(out, r)
    })
}

/// `sqrt(2m - n + 1)`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_hong_bound(g: *const SpecertGraph, out: *mut f64) -> SpecertStatus {
    guard(|| write(out, spectral::hong_bound(&deref(g, "graph")?.0)?))
}

/// `2m / (n - 1) + n - 2`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_das_bound(g: *const SpecertGraph, out: *mut f64) -> SpecertStatus {
    guard(|| write(out, spectral::das_bound(&deref(g, "graph")?.0)?))
}

/// `K_1 ∇ (K_{n-k-1} ∪ k K_1)`, the extremal graph without a
/// spanning k-tree.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_ktree_extremal(n: usize, k: usize, out: *mut *mut SpecertGraph) -> SpecertStatus {
    guard(|| {
        let g = families::ktree_extremal(n, k)?;
        write(out, Box::into_raw(Box::new(SpecertGraph(g))))
    })
}

/// `K_{s+1,s} ∇₁ K_{n-s-1,n-s}`, balanced with `n` vertices per side and
/// no perfect matching.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_matching_extremal(
    n: usize,
    s: usize,
    out: *mut *mut SpecertBipartite,
) -> SpecertStatus {
    guard(|| {
        let b = families::matching_extremal(n, s)?;
        write(out, Box::into_raw(Box::new(SpecertBipartite(b))))
    })
}

/// Builds a bipartite graph from pairs `(x, y)` with `x < nx`, `y < ny`,
/// stored flat in `edges`.
///
/// # Safety
/// `edges` must hold `2 * edge_count` values (it may be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_bipartite_from_edges(
    nx: usize,
    ny: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SpecertBipartite,
) -> SpecertStatus {
    guard(|| {
        let b = BipartiteGraph::new(nx, ny, &edge_list(edges, edge_count)?)?;
        write(out, Box::into_raw(Box::new(SpecertBipartite(b))))
    })
}

/// Releases a bipartite handle. NULL is ignored.
///
/// # Safety
/// `b` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn specert_bipartite_free(b: *mut SpecertBipartite) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// The underlying simple graph, `X` labelled `0..nx` and `Y` after it.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_bipartite_to_graph(
    b: *const SpecertBipartite,
    out: *mut *mut SpecertGraph,
) -> SpecertStatus {
    guard(|| {
        let g = deref(b, "bipartite graph")?.0.to_graph();
        write(out, Box::into_raw(Box::new(SpecertGraph(g))))
    })
}

/// Searches for a spanning tree with maximum degree `<= k`. On success `out`
/// receives the `ktree` certificate as JSON, or NULL if none exists.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_find_k_tree(g: *const SpecertGraph, k: usize, out: *mut *mut c_char) -> SpecertStatus {
    guard(|| {
        let cert = find_k_tree(&deref(g, "graph")?.0, k)?;
        let s = match cert {
            Some(c) => into_c_string(c.to_json())?,
            None => ptr::null_mut(),
        };
        write(out, s)
    })
}

/// Searches for a set `S` with `c(G - S) > (k - 2)|S| + 2`. On success `out`
/// receives the `win_violator` certificate as JSON, or NULL if none exists.
/// `cap` bounds the order searched; 0 selects the library default.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_find_win_violator(
    g: *const SpecertGraph,
    k: usize,
    cap: usize,
    out: *mut *mut c_char,
) -> SpecertStatus {
    guard(|| {
        let cap = if cap == 0 { WIN_N_CAP } else { cap };
        let cert = find_win_violator_with(&deref(g, "graph")?.0, k, cap)?;
        let s = match cert {
            Some(c) => into_c_string(c.to_json())?,
            None => ptr::null_mut(),
        };
        write(out, s)
    })
}

/// Either a `matching` or a `hall_violator` certificate as JSON.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_certify_matching(b: *const SpecertBipartite, out: *mut *mut c_char) -> SpecertStatus {
    guard(|| {
        let cert = perfect_matching(&deref(b, "bipartite graph")?.0)?;
        write(out, into_c_string(cert.to_json())?)
    })
}

/// Closed-form adjacency spectral radius of the matching-extremal graph.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_rho_matching_extremal(n: usize, delta: usize, out: *mut f64) -> SpecertStatus {
    guard(|| write(out, families::rho_matching_extremal(n, delta)?))
}

/// Closed-form signless Laplacian spectral radius of the same graph.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn specert_q_matching_extremal(n: usize, delta: usize, out: *mut f64) -> SpecertStatus {
    guard(|| write(out, families::q_matching_extremal(n, delta)?))
}
