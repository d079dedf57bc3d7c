use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use solgraph_ffi::*;

fn group(name: &str) -> *mut SgGroup {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sg_group_from_name(name.as_ptr(), &mut g) }, SgStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = sg_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn a5_basics() {
    let g = group("A5");
    let mut order = 0u64;
    let mut soluble = true;
    let mut radical = 0u64;
    let mut diam = 0u32;
    unsafe {
        assert_eq!(sg_group_order(g, &mut order), SgStatus::Ok);
        assert_eq!(sg_group_is_soluble(g, &mut soluble), SgStatus::Ok);
        assert_eq!(sg_radical_order(g, &mut radical), SgStatus::Ok);
        assert_eq!(sg_reduced_diameter(g, &mut diam), SgStatus::Ok);
        sg_group_free(g);
    }
    assert_eq!(order, 60);
    assert!(!soluble);
    assert_eq!(radical, 1);
    assert!((1..=5).contains(&diam));
}

#[test]
fn solubilizer_sizes() {
    let g = group("A5");
    let mut size = 0u64;
    let mut is_subgroup = true;
    let three = CString::new("(1 2 3)").unwrap();
    let five = CString::new("(1 2 3 4 5)").unwrap();
    unsafe {
        assert_eq!(sg_solubilizer(g, three.as_ptr(), &mut size, &mut is_subgroup), SgStatus::Ok);
        assert_eq!((size, is_subgroup), (24, false));
        assert_eq!(sg_solubilizer(g, five.as_ptr(), &mut size, &mut is_subgroup), SgStatus::Ok);
        assert_eq!((size, is_subgroup), (10, true));
        sg_group_free(g);
    }
}

#[test]
fn error_codes() {
    let g = group("A5");
    let mut size = 0u64;
    let mut flag = false;
    let odd = CString::new("(1 2)").unwrap();
    let junk = CString::new("(1 2").unwrap();
    unsafe {
        assert_eq!(sg_solubilizer(g, odd.as_ptr(), &mut size, &mut flag), SgStatus::NotMember);
        assert!(last_error().contains("not a member"));
        assert_eq!(sg_solubilizer(g, junk.as_ptr(), &mut size, &mut flag), SgStatus::Parse);
        assert_eq!(sg_solubilizer(g, ptr::null(), &mut size, &mut flag), SgStatus::NullPointer);
        assert_eq!(sg_group_order(ptr::null(), &mut size), SgStatus::NullPointer);
        assert_eq!(sg_group_order(g, ptr::null_mut()), SgStatus::NullPointer);
        sg_group_free(g);
    }

    let bogus = CString::new("Z9").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sg_group_from_name(bogus.as_ptr(), &mut out) }, SgStatus::UnknownGroup);
    assert!(out.is_null());

    let s4 = group("S4");
    let mut diam = 0u32;
    assert_eq!(unsafe { sg_reduced_diameter(s4, &mut diam) }, SgStatus::EmptyGraph);
    unsafe { sg_group_free(s4) };

    // success clears the message
    let c6 = group("C6");
    assert!(sg_last_error_message().is_null());
    unsafe { sg_group_free(c6) };
}

#[test]
fn custom_generators() {
    let gens = [CString::new("(1 2 3 4 5)").unwrap(), CString::new("(1 2 3)").unwrap()];
    let ptrs: Vec<*const std::ffi::c_char> = gens.iter().map(|c| c.as_ptr()).collect();
    let mut g = ptr::null_mut();
    let mut order = 0u64;
    unsafe {
        assert_eq!(sg_group_from_generators(5, ptrs.as_ptr(), ptrs.len(), &mut g), SgStatus::Ok);
        assert_eq!(sg_group_order(g, &mut order), SgStatus::Ok);
        sg_group_free(g);
    }
    assert_eq!(order, 60);

    let bad = [CString::new("(1 6)").unwrap()];
    let ptrs: Vec<*const std::ffi::c_char> = bad.iter().map(|c| c.as_ptr()).collect();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sg_group_from_generators(5, ptrs.as_ptr(), 1, &mut g) }, SgStatus::Parse);
}

#[test]
fn verify_report() {
    let g = group("A5");
    let suite = CString::new("lem_six_values, cor_geq_10").unwrap();
    let mut json = ptr::null_mut();
    let mut failed = u32::MAX;
    unsafe {
        assert_eq!(sg_verify_json(g, suite.as_ptr(), &mut json, &mut failed), SgStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_string();
        sg_string_free(json);
        let report = solgraph::verify::VerificationReport::from_json(&text).unwrap();
        assert_eq!(report.results.len(), 2);
        assert_eq!(failed, 0);

        let unknown = CString::new("nope").unwrap();
        let mut json = ptr::null_mut();
        assert_eq!(sg_verify_json(g, unknown.as_ptr(), &mut json, ptr::null_mut()), SgStatus::UnknownCheck);
        assert!(json.is_null());
        sg_group_free(g);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(sg_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_api_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/solgraph.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "sg_group_from_name",
        "sg_group_from_generators",
        "sg_group_free",
        "sg_solubilizer",
        "sg_verify_json",
        "sg_last_error_message",
        "SG_STATUS_NOT_MEMBER",
        "typedef struct SgGroup SgGroup",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    match Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&header).status() {
        Ok(status) => assert!(status.success(), "header does not compile as C"),
        Err(e) => eprintln!("no C compiler available ({e}); syntax check not run"),
    }
}
