use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use ehrhart_ffi::*;

fn polytope(text: &str) -> *mut EhrPolytope {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { ehr_polytope_from_text(text.as_ptr(), &mut out) },
        EhrStatus::Ok
    );
    out
}

fn take(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ehr_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = ehr_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

const TRIANGLE: &str = "2 3\n-1 -1\n2 -1\n-1 2\n";

#[test]
fn volume_barycenter_and_text() {
    let p = polytope(TRIANGLE);
    unsafe {
        assert_eq!(ehr_polytope_dim(p), 2);
        assert_eq!(ehr_polytope_num_vertices(p), 3);
        let mut s = ptr::null_mut();
        assert_eq!(ehr_polytope_volume(p, &mut s), EhrStatus::Ok);
        assert_eq!(take(s), "9/2");
        assert_eq!(ehr_polytope_barycenter(p, &mut s), EhrStatus::Ok);
        assert_eq!(take(s), "(0, 0)");
        assert_eq!(ehr_polytope_to_text(p, &mut s), EhrStatus::Ok);
        assert_eq!(take(s), "# id: polytope\n2 3\n-1 -1\n-1 2\n2 -1\n");
        ehr_polytope_free(p);
    }
}

#[test]
fn dual_and_reports() {
    let p = polytope(TRIANGLE);
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(ehr_polytope_dual(p, &mut d), EhrStatus::Ok);
        assert_eq!(ehr_polytope_num_vertices(d), 3);

        let mut s = ptr::null_mut();
        let check = CString::new("ehrhart").unwrap();
        assert_eq!(ehr_polytope_check(p, check.as_ptr(), &mut s), EhrStatus::Ok);
        let json = take(s);
        assert!(json.contains(r#""status":"equality""#), "{json}");

        assert_eq!(ehr_polytope_toric_report(d, &mut s), EhrStatus::Ok);
        let json = take(s);
        assert!(json.contains(r#""degree":"9""#), "{json}");
        assert!(json.contains(r#""is_projective_space":true"#), "{json}");
        ehr_polytope_free(d);
        ehr_polytope_free(p);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            ehr_polytope_from_text(ptr::null(), &mut out),
            EhrStatus::NullPointer
        );

        let bad = CString::new("2 3\n1 0 0\n").unwrap();
        assert_eq!(
            ehr_polytope_from_text(bad.as_ptr(), &mut out),
            EhrStatus::Parse
        );
        assert!(last_error().starts_with("line 2"), "{}", last_error());

        let empty = CString::new("# nothing\n").unwrap();
        assert_eq!(
            ehr_polytope_from_text(empty.as_ptr(), &mut out),
            EhrStatus::Parse
        );

        let off_center = polytope("2 3\n0 0\n1 0\n0 1\n");
        let mut d = ptr::null_mut();
        assert_eq!(ehr_polytope_dual(off_center, &mut d), EhrStatus::Domain);
        let mut s = ptr::null_mut();
        assert_eq!(
            ehr_polytope_toric_report(off_center, &mut s),
            EhrStatus::Domain
        );
        let name = CString::new("nope").unwrap();
        assert_eq!(
            ehr_polytope_check(off_center, name.as_ptr(), &mut s),
            EhrStatus::UnknownCheck
        );
        assert_eq!(
            ehr_polytope_volume(ptr::null(), &mut s),
            EhrStatus::NullPointer
        );
        assert_eq!(
            ehr_polytope_volume(off_center, ptr::null_mut()),
            EhrStatus::NullPointer
        );
        assert_eq!(ehr_polytope_dim(ptr::null()), 0);
        ehr_polytope_free(off_center);
        ehr_polytope_free(ptr::null_mut());
        ehr_string_free(ptr::null_mut());
    }
}
