//! C ABI for `depoly`.
//!
//! Objects cross the boundary as opaque handles created by `*_new`/`*_from_*`
//! functions and released with the matching `*_free`. Every fallible call
//! returns a [`DepolyStatus`]; on failure a message is available from
//! [`depoly_last_error`] on the same thread. Panics are caught and reported as
//! `DEPOLY_STATUS_PANIC`.

use depoly::campaign::{run_campaign, CampaignConfig, Source, Target};
use depoly::graph::parse_graph6;
use depoly::graph_poly::{graph_polynomial, PolyKind};
use depoly::hessian::hessian;
use depoly::poly::{check_polynomial, is_real_rooted, SequenceReport};
use depoly::systems::{counterexample_45, IndependenceSystem};
use depoly::{Error, Graph, Polynomial};
use num_traits::{Signed, ToPrimitive, Zero};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepolyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    SizeLimit = 4,
    Unsupported = 5,
    Precondition = 6,
    NotDownwardClosed = 7,
    BufferTooSmall = 8,
    Overflow = 9,
    Internal = 10,
    Panic = 11,
}

/// Polynomial kinds accepted by [`depoly_graph_polynomial`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepolyPolyKind {
    Dependence = 0,
    Independence = 1,
    Clique = 2,
    Acyclic = 3,
}

pub struct DepolyGraph(Graph);
pub struct DepolyPolynomial(Polynomial);
pub struct DepolySystem(IndependenceSystem);

/// Verdicts over a window `m`. `real_rooted` is 1, 0, or -1 for the zero
/// polynomial.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct DepolySequenceReport {
    pub unimodal: bool,
    pub log_concave: bool,
    pub ordered_lc: bool,
    pub ultra_lc: bool,
    pub real_rooted: i32,
}

/// Hessian certificate summary. Signs are -1, 0 or 1.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct DepolyHessian {
    pub k: usize,
    pub r: usize,
    pub t: [u64; 8],
    pub det_sign: i32,
    pub ulc_gap_sign: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let mut bytes = msg.into().into_bytes();
    bytes.retain(|&b| b != 0);
    let c = CString::new(bytes).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> DepolyStatus {
    match e {
        Error::Graph6 { .. } => DepolyStatus::Parse,
        Error::InvalidParameter(_) | Error::Domain(_) | Error::EndpointIsRoot(_) => DepolyStatus::InvalidArgument,
        Error::SizeLimit { .. } => DepolyStatus::SizeLimit,
        Error::Unsupported(_) => DepolyStatus::Unsupported,
        Error::Precondition(_) => DepolyStatus::Precondition,
        Error::NotDownwardClosed(_) => DepolyStatus::NotDownwardClosed,
        Error::Classification { .. } | Error::Consistency(_) | Error::Io(_) => DepolyStatus::Internal,
    }
}

struct Fail(DepolyStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type Out<T> = Result<T, Fail>;

fn guard(f: impl FnOnce() -> Out<()>) -> DepolyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DepolyStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            DepolyStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(DepolyStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Out<&'a T> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Out<()> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Out<&'a str> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(DepolyStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// Copies `text` plus a NUL into `buf`. `needed` (optional) receives the
/// required size including the NUL.
unsafe fn write_string(text: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Out<()> {
    let size = text.len() + 1;
    if !needed.is_null() {
        needed.write(size);
    }
    if buf.is_null() || len < size {
        return Err(Fail(
            DepolyStatus::BufferTooSmall,
            format!("buffer holds {len} bytes, {size} needed"),
        ));
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
    *buf.add(text.len()) = 0;
    Ok(())
}

fn report_to_c(r: &SequenceReport) -> DepolySequenceReport {
    DepolySequenceReport {
        unimodal: r.unimodal.holds,
        log_concave: r.log_concave.holds,
        ordered_lc: r.ordered_lc.holds,
        ultra_lc: r.ultra_lc.holds,
        real_rooted: r.real_rooted.map_or(-1, i32::from),
    }
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn depoly_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn depoly_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_graph_from_graph6(text: *const c_char, out: *mut *mut DepolyGraph) -> DepolyStatus {
    guard(|| {
        let g = parse_graph6(read_str(text, "text")?)?;
        write(out, Box::into_raw(Box::new(DepolyGraph(g))), "out")
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries, 0-based).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut DepolyGraph,
) -> DepolyStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = Graph::from_edges(n, &pairs)?;
        write(out, Box::into_raw(Box::new(DepolyGraph(g))), "out")
    })
}

/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn depoly_graph_order(g: *const DepolyGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn depoly_graph_edge_count(g: *const DepolyGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Writes the graph6 encoding into `buf`.
///
/// # Safety
/// `g` must be a live handle; `buf` must hold `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn depoly_graph_to_graph6(
    g: *const DepolyGraph,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> DepolyStatus {
    guard(|| write_string(&borrow(g, "graph")?.0.to_graph6(), buf, len, needed))
}

/// # Safety
/// `g` must come from this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn depoly_graph_free(g: *mut DepolyGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_graph_polynomial(
    g: *const DepolyGraph,
    kind: u32,
    out: *mut *mut DepolyPolynomial,
) -> DepolyStatus {
    guard(|| {
        let g = borrow(g, "graph")?;
        let kind = match kind {
            0 => PolyKind::Dependence,
            1 => PolyKind::Independence,
            2 => PolyKind::Clique,
            3 => PolyKind::Acyclic,
            _ => return Err(Fail(DepolyStatus::InvalidArgument, format!("unknown kind {kind}"))),
        };
        let p = graph_polynomial(&g.0, kind)?;
        write(out, Box::into_raw(Box::new(DepolyPolynomial(p))), "out")
    })
}

/// Builds a polynomial from `len` coefficients, constant term first.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_polynomial_from_i64(
    coeffs: *const i64,
    len: usize,
    out: *mut *mut DepolyPolynomial,
) -> DepolyStatus {
    guard(|| {
        let c: &[i64] = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(borrow(coeffs, "coeffs")?, len)
        };
        write(
            out,
            Box::into_raw(Box::new(DepolyPolynomial(Polynomial::from_i64s(c)))),
            "out",
        )
    })
}

/// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn depoly_polynomial_len(p: *const DepolyPolynomial) -> usize {
    p.as_ref().map_or(0, |p| p.0.coeffs().len())
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_polynomial_coefficient_i64(
    p: *const DepolyPolynomial,
    k: usize,
    out: *mut i64,
) -> DepolyStatus {
    guard(|| {
        let c = borrow(p, "polynomial")?.0.coeff(k);
        let v = c
            .to_i64()
            .ok_or_else(|| Fail(DepolyStatus::Overflow, format!("coefficient {c} does not fit in int64")))?;
        write(out, v, "out")
    })
}

/// Decimal string of coefficient `k`, for values beyond 64 bits.
///
/// # Safety
/// `p` must be a live handle; `buf` must hold `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn depoly_polynomial_coefficient_string(
    p: *const DepolyPolynomial,
    k: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> DepolyStatus {
    guard(|| write_string(&borrow(p, "polynomial")?.0.coeff(k).to_string(), buf, len, needed))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_polynomial_is_real_rooted(p: *const DepolyPolynomial, out: *mut bool) -> DepolyStatus {
    guard(|| {
        let v = is_real_rooted(&borrow(p, "polynomial")?.0)?;
        write(out, v, "out")
    })
}

/// Sequence verdicts with the coefficients padded to window `m`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_polynomial_report(
    p: *const DepolyPolynomial,
    m: usize,
    out: *mut DepolySequenceReport,
) -> DepolyStatus {
    guard(|| {
        let rep = check_polynomial(&borrow(p, "polynomial")?.0, m)?;
        write(out, report_to_c(&rep), "out")
    })
}

/// # Safety
/// `p` must come from this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn depoly_polynomial_free(p: *mut DepolyPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_hessian(g: *const DepolyGraph, k: usize, out: *mut DepolyHessian) -> DepolyStatus {
    guard(|| {
        let rep = hessian(&borrow(g, "graph")?.0, k)?;
        let sign = |negative: bool, zero: bool| {
            if zero {
                0
            } else if negative {
                -1
            } else {
                1
            }
        };
        let h = DepolyHessian {
            k: rep.k,
            r: rep.r,
            t: rep.histogram.t,
            det_sign: sign(rep.det.is_negative(), rep.det.is_zero()),
            ulc_gap_sign: sign(rep.ulc_gap.is_negative(), rep.ulc_gap.is_zero()),
        };
        write(out, h, "out")
    })
}

/// Builds a system on `ground` elements from `len` member bitmasks.
///
/// # Safety
/// `family` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_from_family(
    ground: usize,
    family: *const u32,
    len: usize,
    out: *mut *mut DepolySystem,
) -> DepolyStatus {
    guard(|| {
        let f: &[u32] = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(borrow(family, "family")?, len)
        };
        let m = IndependenceSystem::new(ground, f.to_vec())?;
        write(out, Box::into_raw(Box::new(DepolySystem(m))), "out")
    })
}

/// Parses `{"ground_size": n, "family": [...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_from_json(json: *const c_char, out: *mut *mut DepolySystem) -> DepolyStatus {
    guard(|| {
        let m: IndependenceSystem =
            serde_json::from_str(read_str(json, "json")?).map_err(|e| Fail(DepolyStatus::Parse, e.to_string()))?;
        write(out, Box::into_raw(Box::new(DepolySystem(m))), "out")
    })
}

/// The ten-element system whose f-vector is not log-concave.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_counterexample(out: *mut *mut DepolySystem) -> DepolyStatus {
    guard(|| write(out, Box::into_raw(Box::new(DepolySystem(counterexample_45()))), "out"))
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_rank(m: *const DepolySystem, out: *mut usize) -> DepolyStatus {
    guard(|| {
        let rank = borrow(m, "system")?
            .0
            .rank()
            .ok_or_else(|| Fail(DepolyStatus::Precondition, "empty family has no rank".into()))?;
        write(out, rank, "out")
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_min_l(m: *const DepolySystem, out: *mut usize) -> DepolyStatus {
    guard(|| {
        let l = borrow(m, "system")?.0.min_l()?;
        write(out, l, "out")
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_is_l_matroid(m: *const DepolySystem, l: usize, out: *mut bool) -> DepolyStatus {
    guard(|| {
        let v = borrow(m, "system")?.0.is_l_matroid(l)?;
        write(out, v, "out")
    })
}

/// Copies the f-vector (ground size + 1 entries) into `buf`.
///
/// # Safety
/// `m` must be a live handle; `buf` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_f_vector(
    m: *const DepolySystem,
    buf: *mut u64,
    len: usize,
    needed: *mut usize,
) -> DepolyStatus {
    guard(|| {
        let f = borrow(m, "system")?.0.f_vector();
        if !needed.is_null() {
            needed.write(f.len());
        }
        if buf.is_null() || len < f.len() {
            return Err(Fail(
                DepolyStatus::BufferTooSmall,
                format!("buffer holds {len} entries, {} needed", f.len()),
            ));
        }
        ptr::copy_nonoverlapping(f.as_ptr(), buf, f.len());
        Ok(())
    })
}

/// Mason-type verdicts for the f-vector.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_report(m: *const DepolySystem, out: *mut DepolySequenceReport) -> DepolyStatus {
    guard(|| {
        let rep = borrow(m, "system")?.0.mason_report()?;
        write(out, report_to_c(&rep), "out")
    })
}

/// # Safety
/// `m` must come from this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn depoly_system_free(m: *mut DepolySystem) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Runs a campaign over all labeled graphs on `n` vertices (or all systems on
/// ground `n` for the systems target) and returns the summary as JSON in
/// `*out_json`, to be released with [`depoly_string_free`]. `*consistent`
/// receives whether no violation was found. `workers` 0 means all cores.
///
/// # Safety
/// `target` must be a NUL-terminated string; out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn depoly_campaign_run(
    target: *const c_char,
    n: usize,
    workers: usize,
    consistent: *mut bool,
    out_json: *mut *mut c_char,
) -> DepolyStatus {
    guard(|| {
        let target: Target = read_str(target, "target")?.parse()?;
        let source = if target.takes_graphs() {
            Source::Internal { n }
        } else {
            Source::Systems { ground: n }
        };
        let summary = run_campaign(&CampaignConfig::new(target).workers(workers), &source)?;
        let json = serde_json::to_string(&summary).map_err(|e| Fail(DepolyStatus::Internal, e.to_string()))?;
        let c = CString::new(json).map_err(|e| Fail(DepolyStatus::Internal, e.to_string()))?;
        write(consistent, summary.consistent(), "consistent")?;
        write(out_json, c.into_raw(), "out_json")
    })
}

/// # Safety
/// `s` must come from this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn depoly_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
