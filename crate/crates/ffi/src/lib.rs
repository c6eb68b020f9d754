//! C ABI over `benzleap`.
//!
//! Graphs are opaque `BlGraph` handles created by the `bl_graph_*`
//! constructors and released with `bl_graph_free`. Every fallible call
//! returns a `BlStatus`; on failure `bl_last_error` describes the cause for
//! the calling thread. Strings returned by the library are released with
//! `bl_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use benzleap::graph::{k_degree_profile, MolecularGraph};
use benzleap::index::{compute_index, IndexKind, IndexValue};
use benzleap::verify::{verify_range, ReportFormat, VerificationReport};
use benzleap::{Error, Family};

/// Opaque graph handle.
pub struct BlGraph {
    graph: MolecularGraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    Overflow = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlFamily {
    Zigzag = 0,
    Rhombic = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlReportFormat {
    Text = 0,
    Csv = 1,
    Jsonl = 2,
}

/// Index kinds, in the same order as the library's token list.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlIndexKind {
    Lm1 = 0,
    Lm2,
    Hlm1,
    Hlm2,
    Lso,
    Lf,
    Hlf,
    Ly,
    Lyco,
    M1,
    M2,
    F,
    Hf,
    Y,
    Yco,
    So,
    Hm2,
    Hm2co,
}

impl From<BlIndexKind> for IndexKind {
    fn from(k: BlIndexKind) -> Self {
        match k {
            BlIndexKind::Lm1 => IndexKind::Lm1,
            BlIndexKind::Lm2 => IndexKind::Lm2,
            BlIndexKind::Hlm1 => IndexKind::Hlm1,
            BlIndexKind::Hlm2 => IndexKind::Hlm2,
            BlIndexKind::Lso => IndexKind::Lso,
            BlIndexKind::Lf => IndexKind::Lf,
            BlIndexKind::Hlf => IndexKind::Hlf,
            BlIndexKind::Ly => IndexKind::Ly,
            BlIndexKind::Lyco => IndexKind::Lyco,
            BlIndexKind::M1 => IndexKind::M1,
            BlIndexKind::M2 => IndexKind::M2,
            BlIndexKind::F => IndexKind::F,
            BlIndexKind::Hf => IndexKind::Hf,
            BlIndexKind::Y => IndexKind::Y,
            BlIndexKind::Yco => IndexKind::Yco,
            BlIndexKind::So => IndexKind::So,
            BlIndexKind::Hm2 => IndexKind::Hm2,
            BlIndexKind::Hm2co => IndexKind::Hm2co,
        }
    }
}

impl From<BlFamily> for Family {
    fn from(f: BlFamily) -> Self {
        match f {
            BlFamily::Zigzag => Family::Zigzag,
            BlFamily::Rhombic => Family::Rhombic,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: BlStatus, msg: impl AsRef<str>) -> BlStatus {
    set_last_error(msg.as_ref());
    status
}

fn status_of(e: &Error) -> BlStatus {
    match e {
        Error::Overflow(_) => BlStatus::Overflow,
        Error::IdOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::EmptySystem
        | Error::DisconnectedSystem { .. }
        | Error::DuplicateHex { .. } => BlStatus::InvalidGraph,
        _ => BlStatus::InvalidArgument,
    }
}

/// Runs `f`, converting library errors and panics into status codes.
fn guard<F>(f: F) -> BlStatus
where
    F: FnOnce() -> Result<(), (BlStatus, String)>,
{
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BlStatus::Ok,
        Ok(Err((status, msg))) => fail(status, msg),
        Err(_) => fail(BlStatus::Panic, "internal panic"),
    }
}

fn lib_err(e: Error) -> (BlStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (BlStatus, String) {
    (BlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const BlGraph) -> Result<&'a MolecularGraph, (BlStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn store_graph(out: *mut *mut BlGraph, graph: MolecularGraph) {
    *out = Box::into_raw(Box::new(BlGraph { graph }));
}

/// Builds the zigzag (`BL_FAMILY_ZIGZAG`) or rhombic member with parameter
/// `p >= 1` and stores a new handle in `*out`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_family(
    family: BlFamily,
    p: u32,
    out: *mut *mut BlGraph,
) -> BlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let b = Family::from(family).build(p).map_err(lib_err)?;
        store_graph(out, b.graph);
        Ok(())
    })
}

/// Builds a graph on `vertex_count` vertices from `edge_count` pairs laid
/// out flat in `edges` (`edges[2i]`, `edges[2i+1]`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0); `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_from_edges(
    vertex_count: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut BlGraph,
) -> BlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            let len = edge_count.checked_mul(2).ok_or((
                BlStatus::InvalidArgument,
                "edge_count too large".to_string(),
            ))?;
            std::slice::from_raw_parts(edges, len)
        };
        let pairs = flat.chunks_exact(2).map(|e| (e[0] as usize, e[1] as usize));
        let graph = MolecularGraph::new(vertex_count, pairs).map_err(lib_err)?;
        store_graph(out, graph);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_free(g: *mut BlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_vertex_count(g: *const BlGraph, out: *mut usize) -> BlStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        *out.as_mut().ok_or_else(|| null("out"))? = graph.vertex_count();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_edge_count(g: *const BlGraph, out: *mut usize) -> BlStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        *out.as_mut().ok_or_else(|| null("out"))? = graph.edge_count();
        Ok(())
    })
}

/// Writes the k-distance degree of every vertex into `buf`. `*written`
/// receives the vertex count; if `capacity` is smaller than that, nothing
/// is copied and `BL_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `buf` must have room for `capacity` values; `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bl_k_degree_profile(
    g: *const BlGraph,
    k: u32,
    buf: *mut u32,
    capacity: usize,
    written: *mut usize,
) -> BlStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let written = written.as_mut().ok_or_else(|| null("written"))?;
        let profile = k_degree_profile(graph, k).map_err(lib_err)?;
        *written = profile.len();
        if capacity < profile.len() {
            return Err((
                BlStatus::BufferTooSmall,
                format!("need {} slots, got {capacity}", profile.len()),
            ));
        }
        if !profile.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            std::slice::from_raw_parts_mut(buf, profile.len()).copy_from_slice(profile.degrees());
        }
        Ok(())
    })
}

fn evaluate(
    graph: &MolecularGraph,
    k: u32,
    kind: IndexKind,
) -> Result<IndexValue, (BlStatus, String)> {
    // classical kinds are defined on ordinary degrees
    let k = if kind.is_classical() { 1 } else { k };
    let profile = k_degree_profile(graph, k).map_err(lib_err)?;
    compute_index(graph, &profile, kind).map_err(lib_err)
}

/// Evaluates an integer-valued index. Classical kinds ignore `k`.
/// Returns `BL_STATUS_INVALID_ARGUMENT` for real-valued kinds and
/// `BL_STATUS_OVERFLOW` if the value does not fit in 64 bits.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bl_index_int(
    g: *const BlGraph,
    k: u32,
    kind: BlIndexKind,
    out: *mut i64,
) -> BlStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let kind = IndexKind::from(kind);
        match evaluate(graph, k, kind)? {
            IndexValue::Int(v) => {
                *out = i64::try_from(v)
                    .map_err(|_| (BlStatus::Overflow, format!("{kind} = {v} exceeds 64 bits")))?;
                Ok(())
            }
            IndexValue::Real(_) => Err((
                BlStatus::InvalidArgument,
                format!("{kind} is real-valued; use bl_index_real"),
            )),
        }
    })
}

/// Evaluates any index as a double. Classical kinds ignore `k`.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bl_index_real(
    g: *const BlGraph,
    k: u32,
    kind: BlIndexKind,
    out: *mut f64,
) -> BlStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = evaluate(graph, k, IndexKind::from(kind))?.as_f64();
        Ok(())
    })
}

/// Renders a verification report for `p_min..=p_max` and stores a newly
/// allocated NUL-terminated string in `*out`. `*has_mismatch` (if not
/// null) is set to 1 when any row is an unexplained mismatch.
///
/// # Safety
/// `out` must be valid for one write; free the string with `bl_string_free`.
#[no_mangle]
pub unsafe extern "C" fn bl_verify_report(
    family: BlFamily,
    p_min: u32,
    p_max: u32,
    format: BlReportFormat,
    out: *mut *mut c_char,
    has_mismatch: *mut i32,
) -> BlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let report: VerificationReport =
            verify_range(Family::from(family), p_min, p_max).map_err(lib_err)?;
        let format = match format {
            BlReportFormat::Text => ReportFormat::Text,
            BlReportFormat::Csv => ReportFormat::Csv,
            BlReportFormat::Jsonl => ReportFormat::Jsonl,
        };
        let text = CString::new(report.render(format))
            .map_err(|_| (BlStatus::Panic, "report contains NUL".to_string()))?;
        if let Some(flag) = has_mismatch.as_mut() {
            *flag = report.has_mismatch() as i32;
        }
        *out = text.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into the library on the
/// same thread.
#[no_mangle]
pub extern "C" fn bl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bl_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("version has interior NUL"),
        };
    VERSION.as_ptr()
}
