use std::ffi::{c_int, CStr, CString};
use std::ptr;

use cubefarey_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn compute(field: &str, alpha: &str, beta: &str, cap: usize) -> (CfStatus, *mut CfOrbit) {
    let (field, alpha, beta, r) = (c(field), c(alpha), c(beta), c("5/2"));
    let mut orbit = ptr::null_mut();
    let status = cubefarey_orbit_compute(
        field.as_ptr(),
        0,
        alpha.as_ptr(),
        beta.as_ptr(),
        r.as_ptr(),
        cap,
        &mut orbit,
    );
    (status, orbit)
}

#[test]
fn periodic_orbit_round_trip() {
    unsafe {
        let (status, orbit) = compute("-1,7,-6", "-1/3,-4/3,1/3", "-2,5,-1", 10_000);
        assert_eq!(status, CfStatus::Ok);
        assert!(!orbit.is_null());

        let mut n = 0usize;
        assert_eq!(cubefarey_orbit_digit_count(orbit, &mut n), CfStatus::Ok);
        assert_eq!(n, 15);
        let (mut pre, mut per) = (0usize, 0usize);
        assert_eq!(cubefarey_orbit_preperiod(orbit, &mut pre), CfStatus::Ok);
        assert_eq!(cubefarey_orbit_period(orbit, &mut per), CfStatus::Ok);
        assert_eq!((pre, per), (7, 8));

        let (mut i, mut j) = (9u8, 9u8);
        for k in 0..n {
            assert_eq!(cubefarey_orbit_digit(orbit, k, &mut i, &mut j), CfStatus::Ok);
            assert!(i < 3 && j < 3 && i != j);
        }
        assert_eq!(
            cubefarey_orbit_digit(orbit, n, &mut i, &mut j),
            CfStatus::InvalidInput
        );

        let mut s = ptr::null_mut();
        assert_eq!(cubefarey_orbit_charpoly(orbit, &mut s), CfStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "-1;10;-13");
        cubefarey_string_free(s);

        let mut pisot: c_int = -1;
        assert_eq!(cubefarey_orbit_is_pisot(orbit, &mut pisot), CfStatus::Ok);
        assert_eq!(pisot, 1);

        cubefarey_orbit_free(orbit);
    }
}

#[test]
fn cap_still_yields_digits() {
    unsafe {
        let (status, orbit) = compute("-1,7,-6", "-1/3,-4/3,1/3", "-2,5,-1", 5);
        assert_eq!(status, CfStatus::CapExceeded);
        assert!(!orbit.is_null());

        let mut n = 0usize;
        assert_eq!(cubefarey_orbit_digit_count(orbit, &mut n), CfStatus::Ok);
        assert_eq!(n, 5);
        let mut pre = 0usize;
        assert_eq!(
            cubefarey_orbit_preperiod(orbit, &mut pre),
            CfStatus::CapExceeded
        );
        let mut s = ptr::null_mut();
        assert_eq!(cubefarey_orbit_charpoly(orbit, &mut s), CfStatus::CapExceeded);
        assert!(s.is_null());

        cubefarey_orbit_free(orbit);
    }
}

#[test]
fn bad_inputs_are_rejected() {
    unsafe {
        let (status, orbit) = compute("-1,3,-3", "1/2,0,0", "1/3,0,0", 100);
        assert_eq!(status, CfStatus::InvalidInput);
        assert!(orbit.is_null());

        let (field, alpha, beta) = (c("-2,0,0"), c("2/3,-2/3,1/6"), c("2/3,1/3,-1/3"));
        let mut orbit = ptr::null_mut();
        let bad_r = c("6/2");
        let status = cubefarey_orbit_compute(
            field.as_ptr(),
            0,
            alpha.as_ptr(),
            beta.as_ptr(),
            bad_r.as_ptr(),
            100,
            &mut orbit,
        );
        assert_eq!(status, CfStatus::InvalidInput);

        let r = c("5/2");
        let status = cubefarey_orbit_compute(
            field.as_ptr(),
            4,
            alpha.as_ptr(),
            beta.as_ptr(),
            r.as_ptr(),
            100,
            &mut orbit,
        );
        assert_eq!(status, CfStatus::InvalidInput);

        let status = cubefarey_orbit_compute(
            field.as_ptr(),
            0,
            alpha.as_ptr(),
            beta.as_ptr(),
            r.as_ptr(),
            100,
            ptr::null_mut(),
        );
        assert_eq!(status, CfStatus::NullPointer);

        let status = cubefarey_orbit_compute(
            field.as_ptr(),
            0,
            ptr::null(),
            beta.as_ptr(),
            r.as_ptr(),
            100,
            &mut orbit,
        );
        assert_eq!(status, CfStatus::NullPointer);
        assert!(orbit.is_null());

        let not_utf8 = CString::new(vec![0xffu8]).unwrap();
        let status = cubefarey_orbit_compute(
            not_utf8.as_ptr(),
            0,
            alpha.as_ptr(),
            beta.as_ptr(),
            r.as_ptr(),
            100,
            &mut orbit,
        );
        assert_eq!(status, CfStatus::BadEncoding);
    }
}

#[test]
fn standalone_pisot_check() {
    unsafe {
        let mut flag: c_int = -1;
        let yes = c("-1,0,-1");
        assert_eq!(cubefarey_pisot(yes.as_ptr(), &mut flag), CfStatus::Ok);
        assert_eq!(flag, 1);

        let no = c("1,-1,0");
        assert_eq!(cubefarey_pisot(no.as_ptr(), &mut flag), CfStatus::Ok);
        assert_eq!(flag, 0);

        let reducible = c("0,-1,0");
        assert_eq!(cubefarey_pisot(reducible.as_ptr(), &mut flag), CfStatus::Ok);
        assert_eq!(flag, 0);

        let fractional = c("1/2,0,0");
        assert_eq!(
            cubefarey_pisot(fractional.as_ptr(), &mut flag),
            CfStatus::InvalidInput
        );
        assert_eq!(
            cubefarey_pisot(yes.as_ptr(), ptr::null_mut()),
            CfStatus::NullPointer
        );
    }
}

#[test]
fn frees_tolerate_null() {
    unsafe {
        cubefarey_orbit_free(ptr::null_mut());
        cubefarey_string_free(ptr::null_mut());
    }
}
