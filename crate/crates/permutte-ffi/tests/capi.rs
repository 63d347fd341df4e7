//! Exercises the C ABI exactly as a foreign caller would: opaque handles,
//! status codes, string ownership, and the thread-local error message.

use std::ffi::{CStr, CString};
use std::ptr;

use permutte_ffi::*;

unsafe fn take_string(ptr: *mut libc::c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_string_lossy().into_owned();
    pt_string_free(ptr);
    s
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

const P5: &str = r#"{"A":[1,3,5],"B":[2,4],"edges":[[1,2],[2,3],[3,4],[4,5]]}"#;

#[test]
fn bipartite_roundtrip_through_the_abi() {
    unsafe {
        let engine = pt_engine_new();
        let mut graph = ptr::null_mut();
        assert_eq!(pt_bipgraph_parse(c(P5).as_ptr(), &mut graph), PtStatus::Ok);

        let mut poly = ptr::null_mut();
        assert_eq!(pt_compute_poly(engine, graph, &mut poly), PtStatus::Ok);
        let mut rendered = ptr::null_mut();
        assert_eq!(pt_poly_to_string(poly, &mut rendered), PtStatus::Ok);
        assert_eq!(
            take_string(rendered),
            "2/15*x^3 + 4/15*x^2 + 1/3*x*y + 2/15*y^2 + 1/15*x + 1/15*y"
        );

        let mut brute = ptr::null_mut();
        assert_eq!(pt_brute_force_poly(graph, &mut brute), PtStatus::Ok);
        let mut coeff = ptr::null_mut();
        assert_eq!(pt_poly_coeff(brute, 1, 1, &mut coeff), PtStatus::Ok);
        assert_eq!(take_string(coeff), "1/3");

        let mut value = ptr::null_mut();
        assert_eq!(
            pt_evaluate(engine, graph, c("2").as_ptr(), c("0").as_ptr(), &mut value),
            PtStatus::Ok
        );
        assert_eq!(take_string(value), "34/15");

        let mut alt = ptr::null_mut();
        assert_eq!(pt_alt(engine, graph, &mut alt), PtStatus::Ok);
        assert_eq!(take_string(alt), "2/15");

        let mut product = ptr::null_mut();
        assert_eq!(
            pt_cmw_product(engine, graph, c("2").as_ptr(), &mut product),
            PtStatus::Ok
        );
        assert_eq!(take_string(product), "68/45");

        pt_poly_free(poly);
        pt_poly_free(brute);
        pt_bipgraph_free(graph);
        pt_engine_free(engine);
    }
}

#[test]
fn habc_and_tutte_through_the_abi() {
    unsafe {
        let mut value = ptr::null_mut();
        assert_eq!(
            pt_habc_eval(19, 21, 21, c("2").as_ptr(), c("0").as_ptr(), &mut value),
            PtStatus::Ok
        );
        assert_eq!(
            take_string(value),
            "17823568079808010514820609/519645565199326904320"
        );
        // invalid spec: c > b
        let mut out = ptr::null_mut();
        assert_eq!(
            pt_habc_eval(2, 1, 2, c("2").as_ptr(), c("0").as_ptr(), &mut out),
            PtStatus::InvalidArgument
        );

        let mut graph = ptr::null_mut();
        let triangle = c(r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#);
        assert_eq!(pt_multigraph_parse(triangle.as_ptr(), &mut graph), PtStatus::Ok);
        let mut subset = ptr::null_mut();
        let mut delcon = ptr::null_mut();
        assert_eq!(pt_tutte_subset(graph, &mut subset), PtStatus::Ok);
        assert_eq!(pt_tutte_delcon(graph, &mut delcon), PtStatus::Ok);
        let mut s1 = ptr::null_mut();
        let mut s2 = ptr::null_mut();
        assert_eq!(pt_poly_to_string(subset, &mut s1), PtStatus::Ok);
        assert_eq!(pt_poly_to_string(delcon, &mut s2), PtStatus::Ok);
        let (s1, s2) = (take_string(s1), take_string(s2));
        assert_eq!(s1, "x^2 + x + y");
        assert_eq!(s1, s2);
        pt_poly_free(subset);
        pt_poly_free(delcon);
        pt_multigraph_free(graph);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut graph = ptr::null_mut();
        let status = pt_bipgraph_parse(c("this is not a graph").as_ptr(), &mut graph);
        assert_eq!(status, PtStatus::ParseError);
        let message = take_string(pt_last_error());
        assert!(!message.is_empty());

        // edge inside one side is a parse-level rejection of the document
        let bad = c(r#"{"A":[1,2],"B":[],"edges":[[1,2]]}"#);
        assert_eq!(pt_bipgraph_parse(bad.as_ptr(), &mut graph), PtStatus::Precondition);

        // NULL out-pointers are reported, not dereferenced
        let status = pt_bipgraph_parse(c(P5).as_ptr(), ptr::null_mut());
        assert_eq!(status, PtStatus::NullPointer);
        assert_eq!(pt_compute_poly(ptr::null_mut(), ptr::null(), ptr::null_mut()), PtStatus::NullPointer);

        // disconnected multigraph: spanning-tree operations refuse
        let mut mg = ptr::null_mut();
        let doc = c(r#"{"n":4,"edges":[[1,2],[3,4]]}"#);
        assert_eq!(pt_multigraph_parse(doc.as_ptr(), &mut mg), PtStatus::Ok);
        pt_multigraph_free(mg);
    }
}
