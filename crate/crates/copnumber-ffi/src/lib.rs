//! C ABI over the pursuit-evasion library: opaque graph handles, integer
//! status codes matching the CLI exit contract, and a thread-local error
//! message readable through [`cn_last_error`].
//!
//! The committed header lives in `include/copnumber.h`; a test checks that
//! every exported symbol appears there.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use copnumber::bounds::{compose, BoundHints};
use copnumber::{cop_number_exact, solve_fixed_k, Error, Graph, Limits};

pub const CN_OK: i32 = 0;
pub const CN_ERR_INTERNAL: i32 = 1;
pub const CN_ERR_INPUT: i32 = 2;
pub const CN_ERR_LIMIT: i32 = 3;
pub const CN_ERR_POLICY: i32 = 4;

/// Opaque handle around a graph. Create with [`cn_graph_from_text`], release
/// with [`cn_graph_free`]. Handles are immutable, so sharing across threads
/// for reads is fine.
pub struct CnGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let safe = CString::new(msg).unwrap_or_else(|_| CString::new("invalid message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = safe);
}

fn fail(e: Error) -> i32 {
    let code = e.exit_code();
    set_error(e.to_string());
    code
}

fn fail_input(msg: &str) -> i32 {
    fail(Error::input(msg))
}

/// Runs a fallible body, translating both errors and panics into codes.
fn guarded(body: impl FnOnce() -> Result<(), Error>) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CN_OK,
        Ok(Err(e)) => fail(e),
        Err(_) => {
            set_error("panic inside the library".into());
            CN_ERR_INTERNAL
        }
    }
}

fn limits_for(state_budget: u64) -> Limits {
    if state_budget == 0 {
        Limits::default()
    } else {
        Limits::default().with_solver_states(state_budget)
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cn_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cn_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses the text graph format (header "n m", one "u v" line per edge) and
/// stores a fresh handle in `out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cn_graph_from_text(text: *const c_char, out: *mut *mut CnGraph) -> i32 {
    if out.is_null() {
        return fail_input("out pointer is null");
    }
    *out = ptr::null_mut();
    if text.is_null() {
        return fail_input("text pointer is null");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(t) => t,
        Err(_) => return fail_input("text is not valid UTF-8"),
    };
    guarded(|| {
        let g = Graph::from_text(text)?;
        *out = Box::into_raw(Box::new(CnGraph(g)));
        Ok(())
    })
}

/// Releases a handle. A null pointer is a no-op.
///
/// # Safety
/// `g` must be a pointer returned by [`cn_graph_from_text`], freed once.
#[no_mangle]
pub unsafe extern "C" fn cn_graph_free(g: *mut CnGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cn_graph_vertex_count(g: *const CnGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cn_graph_edge_count(g: *const CnGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Computes the exact cop number into `out`. `state_budget` caps the solver
/// state space; pass 0 for the default. Over-budget instances return
/// `CN_ERR_LIMIT` with `out` untouched.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cn_cop_number(
    g: *const CnGraph,
    state_budget: u64,
    out: *mut usize,
) -> i32 {
    let Some(g) = g.as_ref() else {
        return fail_input("graph handle is null");
    };
    if out.is_null() {
        return fail_input("out pointer is null");
    }
    guarded(|| {
        let result = cop_number_exact(&g.0, &limits_for(state_budget))?;
        *out = result.cop_number;
        Ok(())
    })
}

/// Decides whether `k` cops capture the robber; writes 1 or 0 into `out`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cn_cops_win(
    g: *const CnGraph,
    k: usize,
    state_budget: u64,
    out: *mut i32,
) -> i32 {
    let Some(g) = g.as_ref() else {
        return fail_input("graph handle is null");
    };
    if out.is_null() {
        return fail_input("out pointer is null");
    }
    guarded(|| {
        let outcome = solve_fixed_k(&g.0, k, &limits_for(state_budget))?;
        *out = outcome.cops_win as i32;
        Ok(())
    })
}

/// Writes the certified bracket `lo <= cop number <= hi` assembled from
/// every applicable bound.
///
/// # Safety
/// `g` must be a live handle; `lo` and `hi` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cn_bounds(g: *const CnGraph, lo: *mut usize, hi: *mut usize) -> i32 {
    let Some(g) = g.as_ref() else {
        return fail_input("graph handle is null");
    };
    if lo.is_null() || hi.is_null() {
        return fail_input("out pointer is null");
    }
    guarded(|| {
        let report = compose(&g.0, &BoundHints::default(), &Limits::default())?;
        *lo = report.bracket.0;
        *hi = report.bracket.1;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(text: &str) -> *mut CnGraph {
        let c = CString::new(text).unwrap();
        let mut out: *mut CnGraph = ptr::null_mut();
        let code = unsafe { cn_graph_from_text(c.as_ptr(), &mut out) };
        assert_eq!(code, CN_OK, "{}", last_error());
        assert!(!out.is_null());
        out
    }

    fn last_error() -> String {
        unsafe { CStr::from_ptr(cn_last_error()) }
            .to_string_lossy()
            .into_owned()
    }

    #[test]
    fn solves_the_cycle_through_the_c_interface() {
        let g = graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        unsafe {
            assert_eq!(cn_graph_vertex_count(g), 5);
            assert_eq!(cn_graph_edge_count(g), 5);

            let mut win = -1;
            assert_eq!(cn_cops_win(g, 1, 0, &mut win), CN_OK);
            assert_eq!(win, 0);
            assert_eq!(cn_cops_win(g, 2, 0, &mut win), CN_OK);
            assert_eq!(win, 1);

            let mut c = 0usize;
            assert_eq!(cn_cop_number(g, 0, &mut c), CN_OK);
            assert_eq!(c, 2);

            let (mut lo, mut hi) = (0usize, 0usize);
            assert_eq!(cn_bounds(g, &mut lo, &mut hi), CN_OK);
            assert!(lo <= 2 && 2 <= hi, "bracket [{lo}, {hi}]");

            cn_graph_free(g);
        }
    }

    #[test]
    fn reports_input_errors_with_messages() {
        let c = CString::new("not a graph").unwrap();
        let mut out: *mut CnGraph = ptr::null_mut();
        let code = unsafe { cn_graph_from_text(c.as_ptr(), &mut out) };
        assert_eq!(code, CN_ERR_INPUT);
        assert!(out.is_null());
        assert!(!last_error().is_empty());

        let code = unsafe { cn_graph_from_text(ptr::null(), &mut out) };
        assert_eq!(code, CN_ERR_INPUT);

        let mut c_out = 0usize;
        let code = unsafe { cn_cop_number(ptr::null(), 0, &mut c_out) };
        assert_eq!(code, CN_ERR_INPUT);
    }

    #[test]
    fn reports_budget_exhaustion_as_a_limit() {
        let g = graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        let mut c = 77usize;
        let code = unsafe { cn_cop_number(g, 1, &mut c) };
        assert_eq!(code, CN_ERR_LIMIT, "{}", last_error());
        assert_eq!(c, 77, "out must stay untouched on failure");
        assert!(last_error().contains("budget"));
        unsafe { cn_graph_free(g) };
    }

    #[test]
    fn null_handles_are_harmless() {
        unsafe {
            cn_graph_free(ptr::null_mut());
            assert_eq!(cn_graph_vertex_count(ptr::null()), 0);
            assert_eq!(cn_graph_edge_count(ptr::null()), 0);
        }
        assert!(!unsafe { CStr::from_ptr(cn_version()) }
            .to_str()
            .unwrap()
            .is_empty());
    }

    /// The committed header must list every exported symbol; this catches
    /// header drift without a generator in the build.
    #[test]
    fn header_lists_every_export() {
        let root = env!("CARGO_MANIFEST_DIR");
        let header = std::fs::read_to_string(format!("{root}/include/copnumber.h")).unwrap();
        let source = std::fs::read_to_string(format!("{root}/src/lib.rs")).unwrap();
        let mut exports = Vec::new();
        for line in source.lines() {
            if let Some(rest) = line
                .trim_start()
                .strip_prefix("pub unsafe extern \"C\" fn ")
                .or_else(|| line.trim_start().strip_prefix("pub extern \"C\" fn "))
            {
                let name: String = rest
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                    .collect();
                exports.push(name);
            }
        }
        assert!(exports.len() >= 8, "export scan broke: {exports:?}");
        for name in exports {
            assert!(header.contains(&name), "header misses {name}");
        }
    }
}
