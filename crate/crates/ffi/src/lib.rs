//! C ABI over `orbital-chromatic`.
//!
//! Graphs, groups and polynomials cross the boundary as opaque heap handles
//! that the caller releases with the matching `*_free` function. Fallible
//! calls return an [`OcStatus`] and write their result through an out
//! pointer; the message of the most recent failure on the calling thread is
//! available from [`oc_last_error_message`]. Strings returned by the library
//! are owned by the caller and released with [`oc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orbital_chromatic::{chroma, oracle, Error, Multigraph, PermGroup, Permutation, RationalPoly};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OcStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    NotPrime = 3,
    Capacity = 4,
    Parse = 5,
    Internal = 6,
}

/// Opaque multigraph handle.
pub struct OcGraph(Multigraph);

/// Opaque permutation group handle.
pub struct OcGroup(PermGroup);

/// Opaque rational polynomial handle.
pub struct OcPoly(RationalPoly);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
}

fn status_of(e: &Error) -> OcStatus {
    match e {
        Error::Domain(_) => OcStatus::Domain,
        Error::NotPrime { .. } => OcStatus::NotPrime,
        Error::Capacity { .. } => OcStatus::Capacity,
        Error::Parse(_) => OcStatus::Parse,
    }
}

/// Runs `body`, recording failures and converting panics to `Internal`.
fn guard<F: FnOnce() -> Result<(), OcStatusError>>(body: F) -> OcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            OcStatus::Ok
        }
        Ok(Err(OcStatusError(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            OcStatus::Internal
        }
    }
}

struct OcStatusError(OcStatus, String);

impl From<Error> for OcStatusError {
    fn from(e: Error) -> Self {
        OcStatusError(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> OcStatusError {
    OcStatusError(OcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, OcStatusError> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), OcStatusError> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failed call on this thread, or an empty
/// string. Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn oc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- graphs ----

/// Edgeless graph on `vertices` vertices.
#[no_mangle]
pub extern "C" fn oc_graph_new(vertices: usize) -> *mut OcGraph {
    Box::into_raw(Box::new(OcGraph(Multigraph::empty(vertices))))
}

/// The `n`-cycle (a loop for `n = 1`, a double edge for `n = 2`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_cycle(n: usize, out: *mut *mut OcGraph) -> OcStatus {
    guard(|| {
        let g = Multigraph::cycle(n)?;
        write_out(out, Box::into_raw(Box::new(OcGraph(g))))
    })
}

/// Parses `{"vertices": n, "edges": [[u, v], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_from_json(json: *const c_char, out: *mut *mut OcGraph) -> OcStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| OcStatusError(OcStatus::Parse, "graph text is not UTF-8".into()))?;
        let g = Multigraph::from_json(text)?;
        write_out(out, Box::into_raw(Box::new(OcGraph(g))))
    })
}

/// Adds the edge `{u, v}`; `u == v` adds a loop.
///
/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_add_edge(graph: *mut OcGraph, u: usize, v: usize) -> OcStatus {
    guard(|| {
        let g = graph.as_mut().ok_or_else(|| null("graph"))?;
        g.0.add_edge(u, v)?;
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_vertex_count(graph: *const OcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_edge_count(graph: *const OcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Graph in the JSON interchange format; free with `oc_string_free`.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_to_json(graph: *const OcGraph) -> *mut c_char {
    graph.as_ref().map_or(ptr::null_mut(), |g| into_c_string(g.0.to_json()))
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_free(graph: *mut OcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

// ---- groups ----

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_group_rotations(n: usize, out: *mut *mut OcGroup) -> OcStatus {
    guard(|| {
        let grp = PermGroup::rotations(n)?;
        write_out(out, Box::into_raw(Box::new(OcGroup(grp))))
    })
}

/// Full automorphism group of the `n`-cycle.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_group_cycle_automorphisms(n: usize, out: *mut *mut OcGroup) -> OcStatus {
    guard(|| {
        let grp = PermGroup::automorphisms_of_cycle(n)?;
        write_out(out, Box::into_raw(Box::new(OcGroup(grp))))
    })
}

/// Group from `count` image lists of length `degree`, stored back to back
/// in `images`. Rejected unless the elements form a group.
///
/// # Safety
/// `images` must point to `count * degree` readable values; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_group_from_images(
    degree: usize,
    images: *const usize,
    count: usize,
    out: *mut *mut OcGroup,
) -> OcStatus {
    guard(|| {
        if images.is_null() && degree * count > 0 {
            return Err(null("images"));
        }
        let flat = if degree * count == 0 { &[][..] } else { std::slice::from_raw_parts(images, degree * count) };
        let elements = (0..count)
            .map(|i| Permutation::new(flat[i * degree..(i + 1) * degree].to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        let grp = PermGroup::new(degree, elements)?;
        write_out(out, Box::into_raw(Box::new(OcGroup(grp))))
    })
}

/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_group_order(group: *const OcGroup) -> usize {
    group.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `group` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_group_free(group: *mut OcGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

// ---- computations ----

unsafe fn write_poly(out: *mut *mut OcPoly, p: RationalPoly) -> Result<(), OcStatusError> {
    write_out(out, Box::into_raw(Box::new(OcPoly(p))))
}

/// # Safety
/// `graph` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_chromatic_polynomial(graph: *const OcGraph, out: *mut *mut OcPoly) -> OcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        write_poly(out, chroma::chromatic_polynomial(&g.0))
    })
}

/// Quotient of `graph` by the permutation with the given image list.
///
/// # Safety
/// `graph` must be a live handle, `images` must point to `degree` readable
/// values and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_quotient_graph(
    graph: *const OcGraph,
    images: *const usize,
    degree: usize,
    out: *mut *mut OcGraph,
) -> OcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        if images.is_null() && degree > 0 {
            return Err(null("images"));
        }
        let images = if degree == 0 { Vec::new() } else { std::slice::from_raw_parts(images, degree).to_vec() };
        let q = chroma::quotient_graph(&g.0, &Permutation::new(images)?)?;
        write_out(out, Box::into_raw(Box::new(OcGraph(q))))
    })
}

/// # Safety
/// `graph` and `group` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_orbital_by_definition(
    graph: *const OcGraph,
    group: *const OcGroup,
    out: *mut *mut OcPoly,
) -> OcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let grp = borrow(group, "group")?;
        write_poly(out, chroma::orbital_by_definition(&g.0, &grp.0)?)
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_orbital_rotation_closed(n: usize, out: *mut *mut OcPoly) -> OcStatus {
    guard(|| write_poly(out, chroma::orbital_rotation_closed(n)?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_orbital_full_closed(n: usize, out: *mut *mut OcPoly) -> OcStatus {
    guard(|| write_poly(out, chroma::orbital_full_closed(n)?))
}

/// Brute-force count of proper colorings with `lambda` colors.
///
/// # Safety
/// `graph` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_count_proper_colorings(graph: *const OcGraph, lambda: u64, out: *mut u64) -> OcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        write_out(out, oracle::Oracle::from_env()?.count_proper_colorings(&g.0, lambda)?)
    })
}

/// Brute-force count of coloring classes under the group.
///
/// # Safety
/// `graph` and `group` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_count_coloring_orbits(
    graph: *const OcGraph,
    group: *const OcGroup,
    lambda: u64,
    out: *mut u64,
) -> OcStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let grp = borrow(group, "group")?;
        write_out(out, oracle::Oracle::from_env()?.count_coloring_orbits(&g.0, &grp.0, lambda)?)
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oc_fermat_check(p: u64, lambda_max: u64, out: *mut bool) -> OcStatus {
    guard(|| write_out(out, chroma::fermat_check(p, lambda_max)?))
}

// ---- polynomials ----

/// Degree, or -1 for the zero polynomial (and for a null handle).
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_poly_degree(poly: *const OcPoly) -> i64 {
    poly.as_ref().and_then(|p| p.0.degree()).map_or(-1, |d| d as i64)
}

/// # Safety
/// `a` and `b` must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn oc_poly_equal(a: *const OcPoly, b: *const OcPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// `{"den": D, "coeffs": [c0, ...]}`; free with `oc_string_free`.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_poly_to_json(poly: *const OcPoly) -> *mut c_char {
    poly.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.to_json()))
}

/// Human-readable rendering; free with `oc_string_free`.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_poly_render(poly: *const OcPoly, ascii: bool) -> *mut c_char {
    poly.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.render(ascii)))
}

/// Exact value at an integer point, as `"a"` or `"a/b"`; free with
/// `oc_string_free`.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_poly_eval(poly: *const OcPoly, x: i64) -> *mut c_char {
    poly.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.eval_int(x).to_string()))
}

/// # Safety
/// `poly` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_poly_free(poly: *mut OcPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}
