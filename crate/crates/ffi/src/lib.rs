//! C ABI over `cloop`.
//!
//! Tables are opaque `CloopTable` handles created by the `cloop_table_*`
//! constructors and released with `cloop_table_free`. Fallible calls return a
//! `CloopStatus`; on failure `cloop_last_error_message` describes the error for
//! the calling thread. Strings handed out are freed with `cloop_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cloop::{identities, invariants, iso, steiner, Error, LoopTable, SignedTable};

/// Opaque loop table.
pub struct CloopTable {
    inner: LoopTable,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloopStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// An element index is out of range for the table.
    OutOfRange = 3,
    /// Malformed text input.
    Parse = 4,
    /// Not square, not Latin, or 0 is not neutral.
    InvalidTable = 5,
    UnknownName = 6,
    /// Input exceeds a search bound.
    TooLarge = 7,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 8,
    /// Any other library error.
    Failed = 9,
    Panic = 10,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CloopStatus {
    match e {
        Error::Ragged { .. }
        | Error::Empty
        | Error::OutOfRange { .. }
        | Error::NotLatin { .. }
        | Error::NoIdentity(_) => CloopStatus::InvalidTable,
        Error::Parse { .. } => CloopStatus::Parse,
        Error::UnknownIdentity(_) | Error::UnknownBuiltin(_) => CloopStatus::UnknownName,
        Error::TooLarge { .. } => CloopStatus::TooLarge,
        _ => CloopStatus::Failed,
    }
}

/// Runs `f`, recording errors and panics for `cloop_last_error_message`.
fn guard(f: impl FnOnce() -> Result<(), (CloopStatus, String)>) -> CloopStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CloopStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CloopStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CloopStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CloopStatus, String) {
    (CloopStatus::NullPointer, format!("{what} is null"))
}

unsafe fn table<'a>(t: *const CloopTable) -> Result<&'a LoopTable, (CloopStatus, String)> {
    t.as_ref().map(|t| &t.inner).ok_or_else(|| null("table"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (CloopStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (CloopStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), (CloopStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_table(out: *mut *mut CloopTable, l: LoopTable) -> Result<(), (CloopStatus, String)> {
    put(out, Box::into_raw(Box::new(CloopTable { inner: l })), "out")
}

fn index(l: &LoopTable, x: usize) -> Result<usize, (CloopStatus, String)> {
    if x < l.order() {
        Ok(x)
    } else {
        Err((CloopStatus::OutOfRange, format!("element {x} out of range 0..{}", l.order())))
    }
}

/// Builds a table from `n * n` row-major entries.
///
/// # Safety
/// `cells` must point to `n * n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_table_from_rows(
    cells: *const usize,
    n: usize,
    out: *mut *mut CloopTable,
) -> CloopStatus {
    guard(|| {
        if cells.is_null() {
            return Err(null("cells"));
        }
        let len = n.checked_mul(n).ok_or((CloopStatus::TooLarge, "n * n overflows".to_string()))?;
        let flat = std::slice::from_raw_parts(cells, len);
        let rows: Vec<&[usize]> = if n == 0 { Vec::new() } else { flat.chunks(n).collect() };
        put_table(out, LoopTable::from_rows(&rows).map_err(lib_err)?)
    })
}

/// Parses the `.loop` text format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_table_parse(text: *const c_char, out: *mut *mut CloopTable) -> CloopStatus {
    guard(|| put_table(out, LoopTable::parse(read_str(text, "text")?).map_err(lib_err)?))
}

/// One of the shipped tables: `steiner10`, `table1_16`, `sedenion_table2`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_table_builtin(name: *const c_char, out: *mut *mut CloopTable) -> CloopStatus {
    guard(|| put_table(out, cloop::fixtures::builtin(read_str(name, "name")?).map_err(lib_err)?))
}

/// The signed basis loop of Cayley-Dickson level `level` (order `2^(level+1)`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_cayley_dickson_loop(level: u32, out: *mut *mut CloopTable) -> CloopStatus {
    guard(|| put_table(out, SignedTable::level(level).map_err(lib_err)?.signed_loop()))
}

/// A C-loop containing an associator of order `n` (`n > 2`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_assoc_loop(n: usize, out: *mut *mut CloopTable) -> CloopStatus {
    guard(|| put_table(out, steiner::assoc_loop(n).map_err(lib_err)?))
}

/// Releases a table. Null is ignored.
///
/// # Safety
/// `t` must come from a `cloop_*` constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cloop_table_free(t: *mut CloopTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of elements, or 0 for null.
///
/// # Safety
/// `t` must be null or a live table.
#[no_mangle]
pub unsafe extern "C" fn cloop_table_order(t: *const CloopTable) -> usize {
    t.as_ref().map_or(0, |t| t.inner.order())
}

/// # Safety
/// `t` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_table_mul(t: *const CloopTable, x: usize, y: usize, out: *mut usize) -> CloopStatus {
    guard(|| {
        let l = table(t)?;
        let v = l.mul(index(l, x)?, index(l, y)?);
        put(out, v, "out")
    })
}

/// Checks a named identity such as `flexible` or `exponent(4)`.
///
/// # Safety
/// `t` must be a live table, `name` a nul-terminated string, `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_check(t: *const CloopTable, name: *const c_char, holds: *mut bool) -> CloopStatus {
    guard(|| {
        let l = table(t)?;
        let report = identities::check_named(l, read_str(name, "name")?).map_err(lib_err)?;
        put(holds, report.holds, "holds")
    })
}

/// # Safety
/// `t` must be a live table; `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_is_c_loop(t: *const CloopTable, holds: *mut bool) -> CloopStatus {
    guard(|| put(holds, identities::is_c_loop(table(t)?).holds, "holds"))
}

unsafe fn write_set(set: &[usize], buf: *mut usize, cap: usize, len: *mut usize) -> Result<(), (CloopStatus, String)> {
    put(len, set.len(), "len")?;
    if set.len() > cap {
        return Err((CloopStatus::BufferTooSmall, format!("need {} slots, have {cap}", set.len())));
    }
    if !set.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(set.as_ptr(), buf, set.len());
    }
    Ok(())
}

/// Writes the nucleus (sorted) into `buf`. `*len` receives its size, also
/// when the buffer is too small.
///
/// # Safety
/// `t` must be a live table; `buf` must have `cap` writable slots; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_nucleus(
    t: *const CloopTable,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> CloopStatus {
    guard(|| write_set(&invariants::nuclei(table(t)?).nucleus, buf, cap, len))
}

/// Writes the center (sorted) into `buf`, as for `cloop_nucleus`.
///
/// # Safety
/// As for `cloop_nucleus`.
#[no_mangle]
pub unsafe extern "C" fn cloop_center(
    t: *const CloopTable,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> CloopStatus {
    guard(|| write_set(&invariants::center(table(t)?), buf, cap, len))
}

/// Whether the two tables are isomorphic (orders up to 64).
///
/// # Safety
/// `a` and `b` must be live tables; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_isomorphic(a: *const CloopTable, b: *const CloopTable, out: *mut bool) -> CloopStatus {
    guard(|| put(out, iso::are_isomorphic(table(a)?, table(b)?).map_err(lib_err)?, "out"))
}

/// Renders the table in the `.loop` format. Free the result with
/// `cloop_string_free`.
///
/// # Safety
/// `t` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cloop_table_to_string(t: *const CloopTable, out: *mut *mut c_char) -> CloopStatus {
    guard(|| {
        let s = CString::new(table(t)?.to_loop_string()).expect("table text has no nul");
        put(out, s.into_raw(), "out")
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cloop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The last error on this thread, or null. Valid until the next failing call
/// on the same thread; do not free.
#[no_mangle]
pub extern "C" fn cloop_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
