use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use cubiclab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = cubiclab_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn ring(vars: &str, prime: u32) -> *mut CubiclabRing {
    let mut r = ptr::null_mut();
    assert_eq!(cubiclab_ring_new(c(vars).as_ptr(), prime, &mut r), CubiclabStatus::Ok);
    r
}

unsafe fn parse(r: *const CubiclabRing, gens: &str) -> *mut CubiclabIdeal {
    let mut i = ptr::null_mut();
    assert_eq!(cubiclab_ideal_parse(r, c(gens).as_ptr(), &mut i), CubiclabStatus::Ok);
    i
}

unsafe fn dim_degree(i: *const CubiclabIdeal) -> (i64, u64) {
    let (mut d, mut e) = (0, 0);
    assert_eq!(cubiclab_ideal_dim_degree(i, &mut d, &mut e), CubiclabStatus::Ok);
    (d, e)
}

#[test]
fn twisted_cubic_round_trip() {
    unsafe {
        let r = ring("x_0..x_3", 0);
        let i = parse(r, "x_0*x_2-x_1^2, x_0*x_3-x_1*x_2, x_1*x_3-x_2^2");
        assert_eq!(dim_degree(i), (1, 3));
        let (mut smooth, mut certified) = (false, false);
        assert_eq!(cubiclab_ideal_is_smooth(i, true, &mut smooth, &mut certified), CubiclabStatus::Ok);
        assert!(smooth && certified);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(cubiclab_ideal_to_string(i, &mut s), CubiclabStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap().lines().count(), 3);
        cubiclab_string_free(s);
        cubiclab_ideal_free(i);
        cubiclab_ring_free(r);
    }
}

#[test]
fn catalog_and_set_operations() {
    unsafe {
        let mut s = ptr::null_mut();
        let mut p = ptr::null_mut();
        assert_eq!(cubiclab_ideal_catalog(c("delpezzo").as_ptr(), &mut s), CubiclabStatus::Ok);
        assert_eq!(cubiclab_ideal_catalog(c("plane:a").as_ptr(), &mut p), CubiclabStatus::Ok);
        assert_eq!(dim_degree(s), (2, 5));
        let mut meet = ptr::null_mut();
        assert_eq!(cubiclab_ideal_sum(s, p, &mut meet), CubiclabStatus::Ok);
        let mut sat = ptr::null_mut();
        assert_eq!(cubiclab_ideal_saturate(meet, &mut sat), CubiclabStatus::Ok);
        assert_eq!(dim_degree(sat), (1, 2));
        let mut sub = false;
        assert_eq!(cubiclab_ideal_is_subset(s, sat, &mut sub), CubiclabStatus::Ok);
        assert!(sub);
        for h in [s, p, meet, sat] {
            cubiclab_ideal_free(h);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(cubiclab_ring_new(ptr::null(), 0, &mut r), CubiclabStatus::NullPointer);
        assert_eq!(cubiclab_ring_new(c("x,y").as_ptr(), 4, &mut r), CubiclabStatus::InvalidArgument);
        let r = ring("x,y", 7);
        let mut i = ptr::null_mut();
        assert_eq!(cubiclab_ideal_parse(r, c("x^2+").as_ptr(), &mut i), CubiclabStatus::Syntax);
        assert!(last_error().contains("syntax"));
        assert_eq!(cubiclab_ideal_parse(r, c("z").as_ptr(), &mut i), CubiclabStatus::Syntax);
        assert_eq!(cubiclab_ideal_catalog(c("nope").as_ptr(), &mut i), CubiclabStatus::UnknownName);
        assert_eq!(cubiclab_ideal_parse(r, c("x").as_ptr(), ptr::null_mut()), CubiclabStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(cubiclab_ideal_parse(r, bad.as_ptr().cast(), &mut i), CubiclabStatus::InvalidUtf8);
        let a = parse(r, "x");
        let mut q = ptr::null_mut();
        assert_eq!(cubiclab_ideal_catalog(c("scroll:s22").as_ptr(), &mut q), CubiclabStatus::Ok);
        assert_eq!(cubiclab_ideal_sum(a, q, &mut i), CubiclabStatus::RingMismatch);
        cubiclab_ideal_free(a);
        cubiclab_ideal_free(q);
        cubiclab_ring_free(r);
        cubiclab_ideal_free(ptr::null_mut());
        cubiclab_ring_free(ptr::null_mut());
    }
}

#[test]
fn lattice_numbers() {
    let table: Vec<i64> = (0..4).map(|b| cubiclab_del_pezzo_discriminant(b)).collect();
    assert_eq!(table, [29, 36, 37, 32]);
    assert_eq!(cubiclab_self_int_cubic(4, -6, 8, 4), 10);
    assert_eq!(cubiclab_self_int_cubic(5, -5, 5, 7), 13);
    assert_eq!(cubiclab_self_int_quadric(4, -6, 8, 1), 8);
    let v = unsafe { CStr::from_ptr(cubiclab_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/cubiclab.h");
    let src = std::env::temp_dir().join(format!("cubiclab-header-{}.c", std::process::id()));
    std::fs::write(
        &src,
        format!(
            "#include \"{header}\"\nint main(void) {{ CubiclabRing *r = 0; \
             CubiclabStatus s = cubiclab_ring_new(\"x,y\", 0, &r); return s == CUBICLAB_STATUS_OK ? 0 : 1; }}\n"
        ),
    )
    .unwrap();
    for (cc, lang) in [("cc", "c"), ("c++", "c++")] {
        let out = Command::new(cc).args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang]).arg(&src).output().expect(cc);
        assert!(out.status.success(), "{cc}: {}", String::from_utf8_lossy(&out.stderr));
    }
    std::fs::remove_file(&src).unwrap();
}
