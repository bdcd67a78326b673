//! C ABI for the ferrers-rsk library.
//!
//! Every object crosses the boundary as an opaque handle created by a
//! `frsk_*_new` constructor and released by the matching `frsk_*_free`.
//! Functions return [`FrskStatus`]; on any non-OK status a thread-local
//! message is available through [`frsk_last_error_message`]. Output buffers
//! take a capacity and report the required length, so callers can size them
//! in two calls.

use std::cell::RefCell;
use std::ffi::{c_char, CString};

use ferrers_rsk::coxeter::CoxeterElement;
use ferrers_rsk::gk::{antichain_width, gk_invariant, max_weight_paths, WeightedDag};
use ferrers_rsk::rsk::{coxeter_rsk, gansner_rsk, invert_rsk, special_coxeter, RskVariant};
use ferrers_rsk::shapes::{Filling, Partition};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrskStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments failed validation; see `frsk_last_error_message`.
    InvalidArgument = 2,
    /// Inputs were structurally valid but outside the operation's domain.
    Domain = 3,
    /// Input exceeds a guarded size limit.
    Capacity = 4,
    /// The inverse search exhausted its space without a preimage.
    NotFound = 5,
    /// The output buffer is too small; required length was reported.
    BufferTooSmall = 6,
}

/// An integer partition (opaque).
pub struct FrskPartition(Partition);
/// A filling of a partition's diagram (opaque).
pub struct FrskFilling(Filling);
/// A Coxeter element of a symmetric group (opaque).
pub struct FrskCoxeter(CoxeterElement);
/// A weighted acyclic digraph (opaque).
pub struct FrskDag(WeightedDag);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: impl Into<String>) {
    let owned = CString::new(message.into()).unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = owned);
}

fn invalid(message: impl Into<String>) -> FrskStatus {
    set_error(message);
    FrskStatus::InvalidArgument
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn frsk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `ptr` must be non-null and `len` must count readable elements.
unsafe fn slice_arg<'a, T>(ptr: *const T, len: usize) -> Option<&'a [T]> {
    if ptr.is_null() && len > 0 {
        return None;
    }
    if len == 0 {
        return Some(&[]);
    }
    Some(std::slice::from_raw_parts(ptr, len))
}

fn write_handle<T>(out: *mut *mut T, value: T) -> FrskStatus {
    if out.is_null() {
        set_error("output handle pointer is null");
        return FrskStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    FrskStatus::Ok
}

macro_rules! require {
    ($ptr:expr) => {
        match unsafe { $ptr.as_ref() } {
            Some(value) => value,
            None => {
                set_error("null handle");
                return FrskStatus::NullPointer;
            }
        }
    };
}

fn write_out<T>(out: *mut T, value: T) -> FrskStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return FrskStatus::NullPointer;
    }
    unsafe { *out = value };
    FrskStatus::Ok
}

/// Copies `values` into `buf` when it fits; always reports the length.
fn write_buffer(values: &[u64], buf: *mut u64, capacity: usize, written: *mut usize) -> FrskStatus {
    if written.is_null() {
        set_error("length output pointer is null");
        return FrskStatus::NullPointer;
    }
    unsafe { *written = values.len() };
    if capacity < values.len() {
        set_error(format!(
            "buffer holds {} of the required {} entries",
            capacity,
            values.len()
        ));
        return FrskStatus::BufferTooSmall;
    }
    if values.is_empty() {
        return FrskStatus::Ok;
    }
    if buf.is_null() {
        set_error("buffer pointer is null");
        return FrskStatus::NullPointer;
    }
    unsafe { std::ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len()) };
    FrskStatus::Ok
}

// ------------------------------------------------------------- partitions

/// Builds a partition from weakly decreasing positive parts.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_partition_new(
    parts: *const u64,
    len: usize,
    out: *mut *mut FrskPartition,
) -> FrskStatus {
    let parts = match slice_arg(parts, len) {
        Some(p) => p,
        None => {
            set_error("parts pointer is null");
            return FrskStatus::NullPointer;
        }
    };
    let converted: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
    match Partition::new(converted) {
        Ok(p) => write_handle(out, FrskPartition(p)),
        Err(e) => invalid(e.to_string()),
    }
}

/// # Safety
/// `p` must be a handle from `frsk_partition_new` (or null) not yet freed.
#[no_mangle]
pub unsafe extern "C" fn frsk_partition_free(p: *mut FrskPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Hook length of the box (1,1).
///
/// # Safety
/// `p` must be a live partition handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_partition_hook_length(
    p: *const FrskPartition,
    out: *mut u64,
) -> FrskStatus {
    let p = require!(p);
    write_out(out, p.0.hook_length() as u64)
}

/// Number of boxes in the diagram.
///
/// # Safety
/// `p` must be a live partition handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_partition_box_count(
    p: *const FrskPartition,
    out: *mut usize,
) -> FrskStatus {
    let p = require!(p);
    write_out(out, p.0.size())
}

// --------------------------------------------------------------- fillings

/// Builds a filling from row-major box values (row 1 first).
///
/// # Safety
/// `shape` must be a live partition handle; `values` must hold `len`
/// readable entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_filling_new(
    shape: *const FrskPartition,
    values: *const u64,
    len: usize,
    out: *mut *mut FrskFilling,
) -> FrskStatus {
    let shape = require!(shape);
    let values = match slice_arg(values, len) {
        Some(v) => v,
        None => {
            set_error("values pointer is null");
            return FrskStatus::NullPointer;
        }
    };
    if len != shape.0.size() {
        return invalid(format!(
            "expected {} values for this shape, got {}",
            shape.0.size(),
            len
        ));
    }
    let mut rows = Vec::with_capacity(shape.0.len());
    let mut offset = 0;
    for &row_len in shape.0.parts() {
        rows.push(values[offset..offset + row_len].to_vec());
        offset += row_len;
    }
    match Filling::new(shape.0.clone(), rows) {
        Ok(f) => write_handle(out, FrskFilling(f)),
        Err(e) => invalid(e.to_string()),
    }
}

/// # Safety
/// `f` must be a handle from a `frsk_*` constructor (or null) not yet freed.
#[no_mangle]
pub unsafe extern "C" fn frsk_filling_free(f: *mut FrskFilling) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Row-major box values; reports the required length in `written`.
///
/// # Safety
/// `f` must be a live filling handle; `buf` must hold `capacity` writable
/// entries; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_filling_values(
    f: *const FrskFilling,
    buf: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> FrskStatus {
    let f = require!(f);
    let values: Vec<u64> = f.0.rows().iter().flatten().copied().collect();
    write_buffer(&values, buf, capacity, written)
}

/// Whether the filling weakly increases along rows and columns.
///
/// # Safety
/// `f` must be a live filling handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_filling_is_rpp(f: *const FrskFilling, out: *mut bool) -> FrskStatus {
    let f = require!(f);
    write_out(out, f.0.is_rpp())
}

// ------------------------------------------------------- correspondences

/// Classical correspondence: filling to reverse plane partition.
///
/// # Safety
/// `f` must be a live filling handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_gansner_rsk(
    f: *const FrskFilling,
    out: *mut *mut FrskFilling,
) -> FrskStatus {
    let f = require!(f);
    write_handle(out, FrskFilling(gansner_rsk(&f.0)))
}

/// Coxeter-parametrized correspondence; the element's degree must be the
/// shape's hook length plus one.
///
/// # Safety
/// `c` and `f` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_coxeter_rsk(
    c: *const FrskCoxeter,
    f: *const FrskFilling,
    out: *mut *mut FrskFilling,
) -> FrskStatus {
    let c = require!(c);
    let f = require!(f);
    match coxeter_rsk(&c.0, &f.0) {
        Ok(g) => write_handle(out, FrskFilling(g)),
        Err(e) => {
            set_error(e.to_string());
            FrskStatus::Domain
        }
    }
}

/// Inverts the classical map (`c` null) or the Coxeter map for `c`.
/// Returns `NOT_FOUND` when the target has no preimage within bounds and
/// `CAPACITY` when the shape or entries exceed the search guard.
///
/// # Safety
/// `g` must be a live filling handle; `c` may be null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_invert_rsk(
    c: *const FrskCoxeter,
    g: *const FrskFilling,
    out: *mut *mut FrskFilling,
) -> FrskStatus {
    let g = require!(g);
    let variant = match c.as_ref() {
        Some(handle) => RskVariant::Coxeter(handle.0.clone()),
        None => RskVariant::Gansner,
    };
    match invert_rsk(&variant, &g.0) {
        Ok(Some(f)) => write_handle(out, FrskFilling(f)),
        Ok(None) => {
            set_error("no preimage within the search bounds");
            FrskStatus::NotFound
        }
        Err(e) => {
            set_error(e.to_string());
            FrskStatus::Capacity
        }
    }
}

// ---------------------------------------------------------------- coxeter

/// Builds a Coxeter element from its long cycle rooted at 1.
///
/// # Safety
/// `values` must hold `len` readable entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_coxeter_from_cycle(
    values: *const u64,
    len: usize,
    out: *mut *mut FrskCoxeter,
) -> FrskStatus {
    let values = match slice_arg(values, len) {
        Some(v) => v,
        None => {
            set_error("cycle pointer is null");
            return FrskStatus::NullPointer;
        }
    };
    let converted: Vec<usize> = values.iter().map(|&v| v as usize).collect();
    match CoxeterElement::from_cycle(&converted) {
        Ok(c) => write_handle(out, FrskCoxeter(c)),
        Err(e) => invalid(e.to_string()),
    }
}

/// Builds a Coxeter element from a word in adjacent transpositions.
///
/// # Safety
/// `letters` must hold `len` readable entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_coxeter_from_word(
    letters: *const u64,
    len: usize,
    out: *mut *mut FrskCoxeter,
) -> FrskStatus {
    let letters = match slice_arg(letters, len) {
        Some(v) => v,
        None => {
            set_error("word pointer is null");
            return FrskStatus::NullPointer;
        }
    };
    let converted: Vec<usize> = letters.iter().map(|&v| v as usize).collect();
    match CoxeterElement::from_word(&converted) {
        Ok(c) => write_handle(out, FrskCoxeter(c)),
        Err(e) => invalid(e.to_string()),
    }
}

/// # Safety
/// `c` must be a handle from a `frsk_*` constructor (or null) not yet freed.
#[no_mangle]
pub unsafe extern "C" fn frsk_coxeter_free(c: *mut FrskCoxeter) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Degree `n` of the symmetric group the element lives in.
///
/// # Safety
/// `c` must be a live Coxeter handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_coxeter_degree(
    c: *const FrskCoxeter,
    out: *mut usize,
) -> FrskStatus {
    let c = require!(c);
    write_out(out, c.0.degree())
}

/// The long cycle rooted at 1; reports the required length in `written`.
///
/// # Safety
/// `c` must be a live Coxeter handle; `buf` must hold `capacity` writable
/// entries; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_coxeter_cycle(
    c: *const FrskCoxeter,
    buf: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> FrskStatus {
    let c = require!(c);
    let cycle: Vec<u64> = c.0.cycle().iter().map(|&v| v as u64).collect();
    write_buffer(&cycle, buf, capacity, written)
}

/// The inverse element.
///
/// # Safety
/// `c` must be a live Coxeter handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_coxeter_inverse(
    c: *const FrskCoxeter,
    out: *mut *mut FrskCoxeter,
) -> FrskStatus {
    let c = require!(c);
    write_handle(out, FrskCoxeter(c.0.inverse()))
}

/// The element whose correspondence coincides with the classical one.
///
/// # Safety
/// `shape` must be a live partition handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_special_coxeter(
    shape: *const FrskPartition,
    out: *mut *mut FrskCoxeter,
) -> FrskStatus {
    let shape = require!(shape);
    write_handle(out, FrskCoxeter(special_coxeter(&shape.0)))
}

// ------------------------------------------------------------------- dags

/// Builds a weighted DAG from vertex weights and flattened arc pairs
/// `[from0, to0, from1, to1, ..]` of zero-based ids.
///
/// # Safety
/// `weights` must hold `vertex_count` entries and `arcs` must hold
/// `2 * arc_count` entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_dag_new(
    weights: *const u64,
    vertex_count: usize,
    arcs: *const usize,
    arc_count: usize,
    out: *mut *mut FrskDag,
) -> FrskStatus {
    let weights = match slice_arg(weights, vertex_count) {
        Some(w) => w,
        None => {
            set_error("weights pointer is null");
            return FrskStatus::NullPointer;
        }
    };
    let flat = match slice_arg(arcs, arc_count * 2) {
        Some(a) => a,
        None => {
            set_error("arcs pointer is null");
            return FrskStatus::NullPointer;
        }
    };
    let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|ch| (ch[0], ch[1])).collect();
    match WeightedDag::new(weights.to_vec(), pairs) {
        Ok(dag) => write_handle(out, FrskDag(dag)),
        Err(e) => invalid(e.to_string()),
    }
}

/// # Safety
/// `dag` must be a handle from `frsk_dag_new` (or null) not yet freed.
#[no_mangle]
pub unsafe extern "C" fn frsk_dag_free(dag: *mut FrskDag) {
    if !dag.is_null() {
        drop(Box::from_raw(dag));
    }
}

/// Parts of the Greene-Kleitman invariant, one per level up to the
/// antichain width; reports the required length in `written`.
///
/// # Safety
/// `dag` must be a live DAG handle; `buf` must hold `capacity` writable
/// entries; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_gk_parts(
    dag: *const FrskDag,
    buf: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> FrskStatus {
    let dag = require!(dag);
    let gk = gk_invariant(&dag.0);
    write_buffer(gk.parts(), buf, capacity, written)
}

/// Maximum support weight over `ell`-tuples of paths.
///
/// # Safety
/// `dag` must be a live DAG handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_max_weight_paths(
    dag: *const FrskDag,
    ell: usize,
    out: *mut u64,
) -> FrskStatus {
    let dag = require!(dag);
    write_out(out, max_weight_paths(&dag.0, ell))
}

/// Maximum antichain size.
///
/// # Safety
/// `dag` must be a live DAG handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frsk_antichain_width(
    dag: *const FrskDag,
    out: *mut usize,
) -> FrskStatus {
    let dag = require!(dag);
    write_out(out, antichain_width(&dag.0))
}
