//! C ABI for the wmds library.
//!
//! The surface is deliberately small: parse a TOML document into an opaque
//! handle, run a named command against it, and receive the structured
//! report as a JSON string (SVG for `plot`). Status codes mirror the CLI
//! exit codes; a thread-local slot keeps the last error message.
//!
//! All returned strings are owned by this library and must be released with
//! `wmds_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, c_uint, CStr, CString};
use std::ptr;

use wmds_core::cli::{self, Command, InputDocument, Options, Output};
use wmds_core::Error;

/// Status codes shared with the C header. `Ok` is zero; everything else
/// matches the CLI exit-code convention with a few FFI-specific additions.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WmdsStatus {
    Ok = 0,
    DomainError = 1,
    InputError = 2,
    BudgetExceeded = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
}

/// Opaque parsed document.
pub struct WmdsDocument {
    inner: InputDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> WmdsStatus {
    match cli::exit_code(err) {
        3 => WmdsStatus::BudgetExceeded,
        2 => WmdsStatus::InputError,
        _ => WmdsStatus::DomainError,
    }
}

/// Version string of the underlying crate; static storage, do not free.
#[no_mangle]
pub extern "C" fn wmds_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the most recent error on this thread; valid until the next
/// failing call on the same thread, do not free.
#[no_mangle]
pub extern "C" fn wmds_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a TOML document into an opaque handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string and `out_document` a valid
/// pointer; on `Ok` the handle must be released with `wmds_document_free`.
#[no_mangle]
pub unsafe extern "C" fn wmds_document_parse(
    text: *const c_char,
    out_document: *mut *mut WmdsDocument,
) -> WmdsStatus {
    if text.is_null() || out_document.is_null() {
        set_last_error("null pointer argument");
        return WmdsStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        set_last_error("document text is not valid UTF-8");
        return WmdsStatus::InvalidUtf8;
    };
    match InputDocument::parse(text) {
        Ok(doc) => {
            *out_document = Box::into_raw(Box::new(WmdsDocument { inner: doc }));
            WmdsStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            *out_document = ptr::null_mut();
            status_of(&e)
        }
    }
}

/// Releases a document handle. Passing NULL is a no-op.
///
/// # Safety
/// `document` must be NULL or a pointer returned by `wmds_document_parse`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn wmds_document_free(document: *mut WmdsDocument) {
    if !document.is_null() {
        drop(Box::from_raw(document));
    }
}

/// Runs a command against a parsed document.
///
/// `command` is one of: gale, classify, cones, gkz, chambers, fans,
/// fillable, complete, mmp, sqm, anticanonical, report, plot. `chamber` is
/// 1-based (0 means unset), `divisor_class` is "a,b,..." or NULL, and
/// `mov_only` restricts the gkz command to the moving cone. On success
/// `out_json` receives the JSON report (SVG text for plot) and
/// `out_negative`, when non-NULL, is set to 1 for domain-negative verdicts
/// (not fillable, not effective).
///
/// # Safety
/// `document` must be a live handle from `wmds_document_parse`; `command`
/// must be a valid NUL-terminated string; `divisor_class` must be NULL or a
/// valid NUL-terminated string; `out_json` must be a valid pointer. The
/// returned string must be released with `wmds_string_free`.
#[no_mangle]
pub unsafe extern "C" fn wmds_run(
    document: *const WmdsDocument,
    command: *const c_char,
    chamber: c_uint,
    divisor_class: *const c_char,
    mov_only: c_int,
    out_json: *mut *mut c_char,
    out_negative: *mut c_int,
) -> WmdsStatus {
    if document.is_null() || command.is_null() || out_json.is_null() {
        set_last_error("null pointer argument");
        return WmdsStatus::NullPointer;
    }
    *out_json = ptr::null_mut();
    let Ok(command) = CStr::from_ptr(command).to_str() else {
        set_last_error("command is not valid UTF-8");
        return WmdsStatus::InvalidUtf8;
    };
    let command: Command = match command.parse() {
        Ok(c) => c,
        Err(e) => {
            set_last_error(&e.to_string());
            return WmdsStatus::InputError;
        }
    };
    let class = if divisor_class.is_null() {
        None
    } else {
        match CStr::from_ptr(divisor_class).to_str() {
            Ok(s) => Some(s.to_string()),
            Err(_) => {
                set_last_error("divisor class is not valid UTF-8");
                return WmdsStatus::InvalidUtf8;
            }
        }
    };
    let options = Options {
        mov_only: mov_only != 0,
        chamber: if chamber == 0 { None } else { Some(chamber as usize) },
        class,
    };
    let doc = &(*document).inner;
    match cli::run(command, doc, &options) {
        Ok(result) => {
            let rendered = match &result.output {
                Output::Report(report) => report.to_json(),
                Output::Svg(svg) => svg.clone(),
            };
            let Ok(cstring) = CString::new(rendered) else {
                set_last_error("report contains an interior NUL byte");
                return WmdsStatus::InputError;
            };
            *out_json = cstring.into_raw();
            if !out_negative.is_null() {
                *out_negative = if result.negative { 1 } else { 0 };
            }
            WmdsStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Releases a string returned by this library. Passing NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer previously returned through `out_json` that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn wmds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
