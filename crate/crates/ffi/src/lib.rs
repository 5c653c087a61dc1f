//! C ABI over the `cubartin` library.
//!
//! Objects cross the boundary as opaque handles that the caller releases with
//! the matching `*_free`. Every fallible call returns a [`CubartinStatus`];
//! on failure a message is kept per thread and read with
//! [`cubartin_last_error`]. Strings handed out by the library are released
//! with [`cubartin_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cubartin::algebra::{ArtinContext, DihedralContext, SphericalContext};
use cubartin::complex::{
    default_spanning_tree, extract_presentation, is_npc, read_complex, write_complex, CubeComplex,
    ExtractMode,
};
use cubartin::construct::build_from_plan;
use cubartin::graph::{verdict, DefiningGraph, Verdict};
use cubartin::toolkit::{is_median, sageev_dual, Wallspace};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubartinStatus {
    Ok = 0,
    /// The question was answered in the negative where an object was
    /// expected, e.g. a build for a graph with no cubulation.
    Negative = 1,
    /// Malformed text input or parameters out of range.
    InputError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubartinVerdict {
    CocompactlyCubulated = 0,
    NotVirtuallyCocompactlyCubulated = 1,
    OutsideClassification = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubartinGroup {
    /// Two-generator Artin group with label `n`.
    Dihedral = 0,
    /// Three-generator spherical type with labels `m`, 2, 3.
    Spherical = 1,
}

/// A parsed defining graph.
pub struct CubartinGraph(DefiningGraph);

/// A cube complex.
pub struct CubartinComplex(CubeComplex);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CubartinStatus, String);

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Failure(CubartinStatus::InputError, msg.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CubartinStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CubartinStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            CubartinStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            CubartinStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CubartinStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(CubartinStatus::NullPointer, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(CubartinStatus::NullPointer, format!("{what} is null")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn cubartin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cubartin_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` is NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cubartin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a defining graph from its text form.
///
/// # Safety
/// `text_in` is a NUL-terminated string; `graph_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_graph_parse(
    text_in: *const c_char,
    graph_out: *mut *mut CubartinGraph,
) -> CubartinStatus {
    guard(|| {
        let slot = out(graph_out, "graph_out")?;
        let g = DefiningGraph::parse(text(text_in, "text")?).map_err(Failure::input)?;
        *slot = Box::into_raw(Box::new(CubartinGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` is NULL or a handle from [`cubartin_graph_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cubartin_graph_free(g: *mut CubartinGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` is a live graph handle; `count_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_graph_vertex_count(
    g: *const CubartinGraph,
    count_out: *mut usize,
) -> CubartinStatus {
    guard(|| {
        *out(count_out, "count_out")? = handle(g, "graph")?.0.vertex_count();
        Ok(())
    })
}

/// Classify the graph. `justification_out` may be NULL; otherwise it receives
/// an owned string.
///
/// # Safety
/// `g` is a live graph handle; `verdict_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_graph_verdict(
    g: *const CubartinGraph,
    verdict_out: *mut CubartinVerdict,
    justification_out: *mut *mut c_char,
) -> CubartinStatus {
    guard(|| {
        let slot = out(verdict_out, "verdict_out")?;
        let v = verdict(&handle(g, "graph")?.0);
        *slot = match v {
            Verdict::CocompactlyCubulated { .. } => CubartinVerdict::CocompactlyCubulated,
            Verdict::NotVirtuallyCocompactlyCubulated { .. } => {
                CubartinVerdict::NotVirtuallyCocompactlyCubulated
            }
            Verdict::OutsideClassification { .. } => CubartinVerdict::OutsideClassification,
        };
        if let Some(j) = justification_out.as_mut() {
            *j = owned_string(v.justification().to_string());
        }
        Ok(())
    })
}

/// Build the cube complex for a positively classified graph. Returns
/// `Negative` when the verdict is not positive.
///
/// # Safety
/// `g` is a live graph handle; `complex_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_build(
    g: *const CubartinGraph,
    complex_out: *mut *mut CubartinComplex,
) -> CubartinStatus {
    guard(|| {
        let slot = out(complex_out, "complex_out")?;
        let v = verdict(&handle(g, "graph")?.0);
        let plan = v.plan().ok_or_else(|| {
            Failure(
                CubartinStatus::Negative,
                format!("no construction: {}", v.label()),
            )
        })?;
        let c =
            build_from_plan(plan).map_err(|e| Failure(CubartinStatus::Negative, e.to_string()))?;
        *slot = Box::into_raw(Box::new(CubartinComplex(c)));
        Ok(())
    })
}

/// Read a complex from its JSONL serialization.
///
/// # Safety
/// `text_in` is a NUL-terminated string; `complex_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_read(
    text_in: *const c_char,
    complex_out: *mut *mut CubartinComplex,
) -> CubartinStatus {
    guard(|| {
        let slot = out(complex_out, "complex_out")?;
        let c = read_complex(text(text_in, "text")?).map_err(Failure::input)?;
        *slot = Box::into_raw(Box::new(CubartinComplex(c)));
        Ok(())
    })
}

/// # Safety
/// `c` is NULL or a complex handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_free(c: *mut CubartinComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// JSONL serialization as an owned string.
///
/// # Safety
/// `c` is a live complex handle; `text_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_write(
    c: *const CubartinComplex,
    text_out: *mut *mut c_char,
) -> CubartinStatus {
    guard(|| {
        let slot = out(text_out, "text_out")?;
        *slot = owned_string(write_complex(&handle(c, "complex")?.0));
        Ok(())
    })
}

/// Counts of vertices, edges and squares.
///
/// # Safety
/// `c` is a live complex handle; the three outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_cell_counts(
    c: *const CubartinComplex,
    vertices_out: *mut usize,
    edges_out: *mut usize,
    squares_out: *mut usize,
) -> CubartinStatus {
    guard(|| {
        let c = &handle(c, "complex")?.0;
        *out(vertices_out, "vertices_out")? = c.vertex_count();
        *out(edges_out, "edges_out")? = c.edge_count();
        *out(squares_out, "squares_out")? = c.square_count();
        Ok(())
    })
}

/// Whether every vertex link is flag with no short cycles.
///
/// # Safety
/// `c` is a live complex handle; `npc_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_is_npc(
    c: *const CubartinComplex,
    npc_out: *mut bool,
) -> CubartinStatus {
    guard(|| {
        *out(npc_out, "npc_out")? = is_npc(&handle(c, "complex")?.0);
        Ok(())
    })
}

/// Whether the complex is a finite CAT(0) cube complex given by a median
/// 1-skeleton.
///
/// # Safety
/// `c` is a live complex handle; `median_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_is_median(
    c: *const CubartinComplex,
    median_out: *mut bool,
) -> CubartinStatus {
    guard(|| {
        let slot = out(median_out, "median_out")?;
        *slot = is_median(&handle(c, "complex")?.0).map_err(Failure::input)?;
        Ok(())
    })
}

/// Abelianization of the fundamental group, e.g. `Z^3` or `Z + Z/2`.
///
/// # Safety
/// `c` is a live complex handle; `text_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_complex_abelianization(
    c: *const CubartinComplex,
    text_out: *mut *mut c_char,
) -> CubartinStatus {
    guard(|| {
        let slot = out(text_out, "text_out")?;
        let c = &handle(c, "complex")?.0;
        if c.components().len() != 1 {
            return Err(Failure::input("complex is not connected"));
        }
        let p = extract_presentation(c, &default_spanning_tree(c), ExtractMode::Plain)
            .map_err(Failure::input)?;
        *slot = owned_string(p.abelianization().to_string());
        Ok(())
    })
}

/// Square complex of the dual to a wallspace given in text form. `bound`
/// caps the number of walls; 0 selects the default.
///
/// # Safety
/// `text_in` is a NUL-terminated string; `complex_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_wallspace_dual(
    text_in: *const c_char,
    bound: usize,
    complex_out: *mut *mut CubartinComplex,
) -> CubartinStatus {
    guard(|| {
        let slot = out(complex_out, "complex_out")?;
        let w = Wallspace::parse(text(text_in, "text")?).map_err(Failure::input)?;
        let bound = if bound == 0 {
            cubartin::toolkit::DEFAULT_WALL_BOUND
        } else {
            bound
        };
        let m = sageev_dual(&w, bound).map_err(Failure::input)?;
        let c = m.to_square_complex();
        *slot = Box::into_raw(Box::new(CubartinComplex(c)));
        Ok(())
    })
}

fn context(group: CubartinGroup, param: u32) -> Result<ArtinContext, Failure> {
    match group {
        CubartinGroup::Dihedral => DihedralContext::new(param).map(|c| c.artin().clone()),
        CubartinGroup::Spherical => SphericalContext::new(param).map(|c| c.artin().clone()),
    }
    .map_err(Failure::input)
}

/// Garside normal form of a word such as `abAB` (capitals are inverses).
///
/// # Safety
/// `word` is a NUL-terminated string; `text_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_normal_form(
    group: CubartinGroup,
    param: u32,
    word: *const c_char,
    text_out: *mut *mut c_char,
) -> CubartinStatus {
    guard(|| {
        let slot = out(text_out, "text_out")?;
        let ctx = context(group, param)?;
        let w = ctx.parse(text(word, "word")?).map_err(Failure::input)?;
        *slot = owned_string(ctx.display(&ctx.normal_form(&w)).to_string());
        Ok(())
    })
}

/// Whether two words are equal in the group.
///
/// # Safety
/// `left` and `right` are NUL-terminated strings; `equal_out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_words_equal(
    group: CubartinGroup,
    param: u32,
    left: *const c_char,
    right: *const c_char,
    equal_out: *mut bool,
) -> CubartinStatus {
    guard(|| {
        let slot = out(equal_out, "equal_out")?;
        let ctx = context(group, param)?;
        let u = ctx.parse(text(left, "left")?).map_err(Failure::input)?;
        let v = ctx.parse(text(right, "right")?).map_err(Failure::input)?;
        *slot = ctx.equal(&u, &v);
        Ok(())
    })
}

/// Run the command-line interface in-process. `argv` excludes the program
/// name. Standard output and error are returned as owned strings and the
/// exit code through `exit_out`; the status is `Ok` whenever the command ran.
///
/// # Safety
/// `argv` points to `argc` NUL-terminated strings; the outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn cubartin_cli_run(
    argv: *const *const c_char,
    argc: usize,
    stdout_out: *mut *mut c_char,
    stderr_out: *mut *mut c_char,
    exit_out: *mut i32,
) -> CubartinStatus {
    guard(|| {
        if argv.is_null() && argc > 0 {
            return Err(Failure(CubartinStatus::NullPointer, "argv is null".into()));
        }
        let mut args = vec!["cubartin".to_string()];
        for i in 0..argc {
            args.push(text(*argv.add(i), "argument")?.to_string());
        }
        let (so, se, code) = (
            out(stdout_out, "stdout_out")?,
            out(stderr_out, "stderr_out")?,
            out(exit_out, "exit_out")?,
        );
        let (mut o, mut e) = (Vec::new(), Vec::new());
        *code = cubartin::cli::run(args, &mut o, &mut e);
        *so = owned_string(String::from_utf8_lossy(&o).into_owned());
        *se = owned_string(String::from_utf8_lossy(&e).into_owned());
        Ok(())
    })
}
