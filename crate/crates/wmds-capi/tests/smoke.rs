//! Exercises the C entry points from Rust exactly as a foreign caller
//! would: NUL-terminated strings in, owned strings out.

use std::ffi::{CStr, CString};
use std::os::raw::c_int;
use std::ptr;

use wmds_capi::{
    wmds_document_free, wmds_document_parse, wmds_last_error, wmds_run, wmds_string_free,
    wmds_version, WmdsDocument, WmdsStatus,
};

const DOC: &str = r#"
name = "quadric"
weight_matrix = [[1, 2, 1, 1, 0], [0, 1, 1, 2, 1]]
irrelevant_ideal = [[1, 5], [2, 4], [1, 3, 4], [2, 3, 5]]
"#;

const NONCOMPLETABLE_DOC: &str = r#"
name = "noncompletable"
weight_matrix = [
    [1, 1, 0, 1, 0, 1, 0],
    [0, 1, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 1],
]
irrelevant_ideal = [
    [2, 5, 6], [1, 2, 3, 7], [1, 2, 5, 7], [1, 3, 4, 6], [1, 3, 4, 7],
    [1, 3, 5, 6], [1, 3, 5, 7], [1, 3, 6, 7], [1, 4, 5, 6], [1, 4, 5, 7],
    [2, 3, 4, 6], [2, 3, 4, 7], [2, 3, 6, 7], [2, 4, 5, 7],
]
"#;

fn parse(text: &str) -> *mut WmdsDocument {
    let c = CString::new(text).unwrap();
    let mut doc: *mut WmdsDocument = ptr::null_mut();
    let status = unsafe { wmds_document_parse(c.as_ptr(), &mut doc) };
    assert_eq!(status, WmdsStatus::Ok);
    assert!(!doc.is_null());
    doc
}

fn run(doc: *const WmdsDocument, command: &str, chamber: u32, class: Option<&str>) -> (WmdsStatus, Option<String>, i32) {
    let cmd = CString::new(command).unwrap();
    let class_c = class.map(|c| CString::new(c).unwrap());
    let mut out: *mut std::os::raw::c_char = ptr::null_mut();
    let mut negative: c_int = -1;
    let status = unsafe {
        wmds_run(
            doc,
            cmd.as_ptr(),
            chamber,
            class_c.as_ref().map_or(ptr::null(), |c| c.as_ptr()),
            0,
            &mut out,
            &mut negative,
        )
    };
    let text = if out.is_null() {
        None
    } else {
        let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { wmds_string_free(out) };
        Some(s)
    };
    (status, text, negative)
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(wmds_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn parse_run_and_free() {
    let doc = parse(DOC);
    let (status, json, negative) = run(doc, "gale", 0, None);
    assert_eq!(status, WmdsStatus::Ok);
    assert_eq!(negative, 0);
    let json = json.unwrap();
    assert!(json.contains("\"kind\": \"gale\""), "{json}");
    let (status, json, _) = run(doc, "chambers", 0, None);
    assert_eq!(status, WmdsStatus::Ok);
    assert!(json.unwrap().contains("\"chambers\""));
    // Completion along chamber 1 succeeds on the quadric.
    let (status, json, _) = run(doc, "complete", 1, None);
    assert_eq!(status, WmdsStatus::Ok);
    assert!(json.unwrap().contains("\"complete\": true"));
    // MMP classification through the FFI.
    let (status, json, negative) = run(doc, "mmp", 0, Some("3,2"));
    assert_eq!(status, WmdsStatus::Ok);
    assert_eq!(negative, 0);
    assert!(json.unwrap().contains("minimal_model"));
    let (status, _, negative) = run(doc, "mmp", 0, Some("-1,1"));
    assert_eq!(status, WmdsStatus::Ok);
    assert_eq!(negative, 1);
    unsafe { wmds_document_free(doc) };
}

#[test]
fn domain_negative_and_errors() {
    let doc = parse(NONCOMPLETABLE_DOC);
    let (status, json, negative) = run(doc, "fillable", 0, None);
    assert_eq!(status, WmdsStatus::Ok);
    assert_eq!(negative, 1);
    assert!(json.unwrap().contains("\"fillable\": false"));
    // Completing a non-filling chamber is a domain error.
    let (status, json, _) = run(doc, "complete", 1, None);
    assert_eq!(status, WmdsStatus::DomainError);
    assert!(json.is_none());
    let msg = unsafe { CStr::from_ptr(wmds_last_error()) }.to_str().unwrap();
    assert!(msg.contains("not a filling cell"), "{msg}");
    unsafe { wmds_document_free(doc) };
}

#[test]
fn input_errors_are_reported() {
    // Unknown command.
    let doc = parse(DOC);
    let (status, _, _) = run(doc, "frobnicate", 0, None);
    assert_eq!(status, WmdsStatus::InputError);
    unsafe { wmds_document_free(doc) };
    // Unparseable document.
    let text = CString::new("weight_matrix = 3").unwrap();
    let mut out: *mut WmdsDocument = ptr::null_mut();
    let status = unsafe { wmds_document_parse(text.as_ptr(), &mut out) };
    assert_eq!(status, WmdsStatus::InputError);
    assert!(out.is_null());
    // Null pointers are caught.
    let status = unsafe { wmds_document_parse(ptr::null(), &mut out) };
    assert_eq!(status, WmdsStatus::NullPointer);
}

#[test]
fn plot_returns_svg() {
    let doc = parse(NONCOMPLETABLE_DOC);
    let (status, svg, _) = run(doc, "plot", 0, None);
    assert_eq!(status, WmdsStatus::Ok);
    let svg = svg.unwrap();
    assert!(svg.starts_with("<svg"));
    unsafe { wmds_document_free(doc) };
}
