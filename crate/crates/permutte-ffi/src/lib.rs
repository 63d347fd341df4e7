//! C ABI for the permutte library.
//!
//! Conventions: handles are opaque pointers freed by the matching
//! `pt_*_free` function; strings returned through out-parameters are
//! NUL-terminated, owned by the caller, and released with
//! `pt_string_free`; every fallible call returns a [`PtStatus`] and leaves
//! a human-readable message readable via `pt_last_error` on failure.
//! Rationals cross the boundary as "p/q" strings so exactness survives.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::ptr;

use libc::c_char;

use permutte::classic_tutte::{tutte_del_con, tutte_subset_oracle};
use permutte::graph::{BipGraph, GraphDoc, MultiGraph};
use permutte::perm_tutte::{
    brute_force_poly, habc_eval, Engine, EvalPoint, HabcSpec,
};
use permutte::ratpoly::{parse_rational, BiPoly};
use permutte::verify::cmw_product;
use permutte::Error;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PtStatus {
    Ok = 0,
    /// Unreadable input: bad UTF-8, bad syntax, bad graph document.
    ParseError = 1,
    /// Structurally valid input that violates an operation precondition.
    Precondition = 2,
    /// Invalid argument values (ranges, weights, spec parameters).
    InvalidArgument = 3,
    /// Computation hit its memo budget.
    Budget = 4,
    /// A required pointer was NULL.
    NullPointer = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<Vec<u8>>) {
    let stored = CString::new(message).unwrap_or_else(|_| CString::new("invalid error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn status_of(err: &Error) -> PtStatus {
    match err {
        Error::Parse(_) => PtStatus::ParseError,
        Error::InvalidArgs(_) | Error::InvalidSpec => PtStatus::InvalidArgument,
        Error::Budget(_) => PtStatus::Budget,
        _ => PtStatus::Precondition,
    }
}

fn fail(err: Error) -> PtStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

/// Message of the most recent failure on this thread, or NULL if none.
/// The caller owns the string and frees it with `pt_string_free`.
#[no_mangle]
pub extern "C" fn pt_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Frees a string returned by this library. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn pt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Shared memoization engine for the exact recursions.
pub struct PtEngine(Engine);

/// Bipartite graph handle.
pub struct PtBipGraph(BipGraph);

/// Multigraph handle.
pub struct PtMultiGraph(MultiGraph);

/// Sparse bivariate polynomial handle.
pub struct PtPoly(BiPoly);

#[no_mangle]
pub extern "C" fn pt_engine_new() -> *mut PtEngine {
    Box::into_raw(Box::new(PtEngine(Engine::new())))
}

#[no_mangle]
pub unsafe extern "C" fn pt_engine_free(engine: *mut PtEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

#[no_mangle]
pub unsafe extern "C" fn pt_bipgraph_free(graph: *mut PtBipGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

#[no_mangle]
pub unsafe extern "C" fn pt_multigraph_free(graph: *mut PtMultiGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

#[no_mangle]
pub unsafe extern "C" fn pt_poly_free(poly: *mut PtPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, PtStatus> {
    if ptr.is_null() {
        set_error("NULL string argument");
        return Err(PtStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        PtStatus::ParseError
    })
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> PtStatus {
    if out.is_null() {
        set_error("NULL out-parameter");
        return PtStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(value));
    PtStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> PtStatus {
    if out.is_null() {
        set_error("NULL out-parameter");
        return PtStatus::NullPointer;
    }
    match CString::new(value) {
        Ok(s) => {
            *out = s.into_raw();
            PtStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL");
            PtStatus::InvalidArgument
        }
    }
}

/// Parses a bipartite graph document (JSON `{"A":..,"B":..,"edges":..}` or
/// `bip a b` edge list).
#[no_mangle]
pub unsafe extern "C" fn pt_bipgraph_parse(
    text: *const c_char,
    out: *mut *mut PtBipGraph,
) -> PtStatus {
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match permutte::graph::parse_graph_auto(text).and_then(GraphDoc::bipartite) {
        Ok(graph) => write_out(out, PtBipGraph(graph)),
        Err(err) => fail(err),
    }
}

/// Parses a multigraph document (JSON `{"n":..,"edges":..}` or `multi n`
/// edge list).
#[no_mangle]
pub unsafe extern "C" fn pt_multigraph_parse(
    text: *const c_char,
    out: *mut *mut PtMultiGraph,
) -> PtStatus {
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match permutte::graph::parse_graph_auto(text).and_then(GraphDoc::multigraph) {
        Ok(graph) => write_out(out, PtMultiGraph(graph)),
        Err(err) => fail(err),
    }
}

/// Permutation Tutte polynomial via the memoized recursion.
#[no_mangle]
pub unsafe extern "C" fn pt_compute_poly(
    engine: *mut PtEngine,
    graph: *const PtBipGraph,
    out: *mut *mut PtPoly,
) -> PtStatus {
    if engine.is_null() || graph.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    match (*engine).0.compute_poly(&(*graph).0) {
        Ok(poly) => write_out(out, PtPoly(poly)),
        Err(err) => fail(err),
    }
}

/// Permutation Tutte polynomial via the factorial-time oracle.
#[no_mangle]
pub unsafe extern "C" fn pt_brute_force_poly(
    graph: *const PtBipGraph,
    out: *mut *mut PtPoly,
) -> PtStatus {
    if graph.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    match brute_force_poly(&(*graph).0) {
        Ok(poly) => write_out(out, PtPoly(poly)),
        Err(err) => fail(err),
    }
}

/// Renders a polynomial in the textual term format.
#[no_mangle]
pub unsafe extern "C" fn pt_poly_to_string(
    poly: *const PtPoly,
    out: *mut *mut c_char,
) -> PtStatus {
    if poly.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    write_string(out, (*poly).0.to_string())
}

/// Coefficient of x^i y^j as a "p/q" string.
#[no_mangle]
pub unsafe extern "C" fn pt_poly_coeff(
    poly: *const PtPoly,
    i: u32,
    j: u32,
    out: *mut *mut c_char,
) -> PtStatus {
    if poly.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    write_string(out, (*poly).0.coeff(i, j).to_string())
}

/// Exact evaluation of T̃ at rational coordinates given as "p/q" strings.
#[no_mangle]
pub unsafe extern "C" fn pt_evaluate(
    engine: *mut PtEngine,
    graph: *const PtBipGraph,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> PtStatus {
    if engine.is_null() || graph.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    let point = match (|| -> Result<EvalPoint, PtStatus> {
        let x = read_str(x)?;
        let y = read_str(y)?;
        let x = parse_rational(x).map_err(fail)?;
        let y = parse_rational(y).map_err(fail)?;
        Ok(EvalPoint::new(x, y))
    })() {
        Ok(p) => p,
        Err(status) => return status,
    };
    match (*engine).0.evaluate(&(*graph).0, &point) {
        Ok(value) => write_string(out, value.to_string()),
        Err(err) => fail(err),
    }
}

/// Alternating number alt(H) as a "p/q" string.
#[no_mangle]
pub unsafe extern "C" fn pt_alt(
    engine: *mut PtEngine,
    graph: *const PtBipGraph,
    out: *mut *mut c_char,
) -> PtStatus {
    if engine.is_null() || graph.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    match (*engine).0.alt(&(*graph).0) {
        Ok(value) => write_string(out, value.to_string()),
        Err(err) => fail(err),
    }
}

/// The product P_x(H) = T̃(x,0)·T̃(0,x) as a "p/q" string.
#[no_mangle]
pub unsafe extern "C" fn pt_cmw_product(
    engine: *mut PtEngine,
    graph: *const PtBipGraph,
    x: *const c_char,
    out: *mut *mut c_char,
) -> PtStatus {
    if engine.is_null() || graph.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    let x = match read_str(x) {
        Ok(s) => match parse_rational(s) {
            Ok(r) => r,
            Err(err) => return fail(err),
        },
        Err(status) => return status,
    };
    match cmw_product(&(*engine).0, &(*graph).0, &x) {
        Ok(value) => write_string(out, value.to_string()),
        Err(err) => fail(err),
    }
}

/// Exact T̃ of the pendant family H(a,b,c) at rational coordinates.
#[no_mangle]
pub unsafe extern "C" fn pt_habc_eval(
    a: u32,
    b: u32,
    c: u32,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> PtStatus {
    let spec = match HabcSpec::new(a, b, c) {
        Ok(spec) => spec,
        Err(err) => return fail(err),
    };
    let point = match (|| -> Result<EvalPoint, PtStatus> {
        let x = read_str(x)?;
        let y = read_str(y)?;
        let x = parse_rational(x).map_err(fail)?;
        let y = parse_rational(y).map_err(fail)?;
        Ok(EvalPoint::new(x, y))
    })() {
        Ok(p) => p,
        Err(status) => return status,
    };
    write_string(out, habc_eval(spec, &point).to_string())
}

/// Classical Tutte polynomial via the subset expansion.
#[no_mangle]
pub unsafe extern "C" fn pt_tutte_subset(
    graph: *const PtMultiGraph,
    out: *mut *mut PtPoly,
) -> PtStatus {
    if graph.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    match tutte_subset_oracle(&(*graph).0) {
        Ok(poly) => write_out(out, PtPoly(poly)),
        Err(err) => fail(err),
    }
}

/// Classical Tutte polynomial via deletion–contraction.
#[no_mangle]
pub unsafe extern "C" fn pt_tutte_delcon(
    graph: *const PtMultiGraph,
    out: *mut *mut PtPoly,
) -> PtStatus {
    if graph.is_null() {
        set_error("NULL handle");
        return PtStatus::NullPointer;
    }
    write_out(out, PtPoly(tutte_del_con(&(*graph).0)))
}
