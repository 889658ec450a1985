// SPDX-License-Identifier: Apache-2.0

use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use deutsch_paths_ffi::*;

fn take(f: impl FnOnce(*mut *mut DeutschSequence) -> DeutschStatus) -> (DeutschStatus, *mut DeutschSequence) {
    let mut seq = ptr::null_mut();
    let status = f(&mut seq);
    (status, seq)
}

unsafe fn values(seq: *const DeutschSequence) -> Vec<i64> {
    (0..deutsch_sequence_len(seq))
        .map(|i| {
            let mut x = 0;
            assert_eq!(deutsch_sequence_get_i64(seq, i, &mut x), DeutschStatus::Ok);
            x
        })
        .collect()
}

#[test]
fn count_both_methods() {
    for method in [DeutschMethod::Dp, DeutschMethod::Closed] {
        let (status, seq) = take(|out| unsafe { deutsch_count_paths(3, 1, 0, DEUTSCH_UNBOUNDED, method, out) });
        assert_eq!(status, DeutschStatus::Ok);
        assert_eq!(unsafe { values(seq) }, vec![3]);
        unsafe { deutsch_sequence_free(seq) };
    }
}

#[test]
fn strip_series_and_invalid_levels() {
    let (status, seq) = take(|out| unsafe { deutsch_series(0, 1, 2, 6, DeutschMethod::Closed, out) });
    assert_eq!(status, DeutschStatus::Ok);
    assert_eq!(unsafe { values(seq) }, vec![0, 1, 0, 1, 0, 1]);
    unsafe { deutsch_sequence_free(seq) };

    let (status, seq) = take(|out| unsafe { deutsch_series(3, 0, 3, 6, DeutschMethod::Dp, out) });
    assert_eq!(status, DeutschStatus::InvalidArgument);
    assert!(seq.is_null());
    let (status, _) = take(|out| unsafe { deutsch_series(0, 0, 0, 0, DeutschMethod::Dp, out) });
    assert_eq!(status, DeutschStatus::InvalidArgument);
}

#[test]
fn table_is_row_major() {
    let mut width = 0usize;
    let (status, seq) = take(|out| unsafe { deutsch_table(2, 0, DEUTSCH_UNBOUNDED, &mut width, out) });
    assert_eq!(status, DeutschStatus::Ok);
    assert_eq!(width, 3);
    assert_eq!(unsafe { values(seq) }, vec![1, 0, 0, 0, 1, 0, 1, 0, 1]);
    unsafe { deutsch_sequence_free(seq) };
}

#[test]
fn determinants() {
    let (status, seq) = take(|out| unsafe { deutsch_det(2, false, 0, 0, out) });
    assert_eq!(status, DeutschStatus::Ok);
    assert_eq!(unsafe { values(seq) }, vec![1, 0, -1]);
    unsafe { deutsch_sequence_free(seq) };
    let (status, seq) = take(|out| unsafe { deutsch_det(2, true, 0, 1, out) });
    assert_eq!(status, DeutschStatus::Ok);
    assert_eq!(unsafe { values(seq) }, vec![0, 1]);
    unsafe { deutsch_sequence_free(seq) };
    let (status, _) = take(|out| unsafe { deutsch_det(0, false, 0, 0, out) });
    assert_eq!(status, DeutschStatus::InvalidArgument);
}

#[test]
fn big_values_need_decimal_access() {
    // 60-step unbounded walks from 0 back to 0 overflow i64
    let (status, seq) = take(|out| unsafe { deutsch_count_paths(60, 0, 0, DEUTSCH_UNBOUNDED, DeutschMethod::Dp, out) });
    assert_eq!(status, DeutschStatus::Ok);
    let mut x = 0;
    assert_eq!(unsafe { deutsch_sequence_get_i64(seq, 0, &mut x) }, DeutschStatus::Overflow);
    assert_eq!(unsafe { deutsch_sequence_get_i64(seq, 1, &mut x) }, DeutschStatus::OutOfRange);

    let mut needed = 0usize;
    let status = unsafe { deutsch_sequence_get_decimal(seq, 0, ptr::null_mut(), 0, &mut needed) };
    assert_eq!(status, DeutschStatus::BufferTooSmall);
    let mut buf = vec![0 as c_char; needed];
    let status = unsafe { deutsch_sequence_get_decimal(seq, 0, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(status, DeutschStatus::Ok);
    let text = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_owned();
    assert_eq!(text.len() + 1, needed);

    let expect = deutsch_paths::count_paths(60, &deutsch_paths::StripSpec::unbounded(0, 0)).unwrap();
    assert_eq!(text, expect.to_string());
    unsafe { deutsch_sequence_free(seq) };
}

#[test]
fn null_handles() {
    let mut x = 0;
    assert_eq!(unsafe { deutsch_sequence_len(ptr::null()) }, 0);
    assert_eq!(unsafe { deutsch_sequence_get_i64(ptr::null(), 0, &mut x) }, DeutschStatus::NullPointer);
    assert_eq!(
        unsafe { deutsch_count_paths(1, 0, 1, 0, DeutschMethod::Dp, ptr::null_mut()) },
        DeutschStatus::NullPointer
    );
    unsafe { deutsch_sequence_free(ptr::null_mut()) };
    let msg = unsafe { CStr::from_ptr(deutsch_status_message(DeutschStatus::Overflow)) };
    assert!(msg.to_str().unwrap().contains("64"));
}

#[test]
fn verify_small_bounds() {
    let mut passed = false;
    assert_eq!(unsafe { deutsch_verify(3, 2, 6, 8, &mut passed) }, DeutschStatus::Ok);
    assert!(passed);
    assert_eq!(unsafe { deutsch_verify(0, 2, 6, 8, &mut passed) }, DeutschStatus::InvalidArgument);
}

/// Compiles the C smoke program against the generated header and the static
/// library, then runs it.
#[test]
fn c_header_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    // tests/ffi-<hash> lives in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libdeutsch_paths_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());

    let out_dir = std::env::temp_dir().join(format!("deutsch-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let bin = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "smoke exited with {:?}", run.status);
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert_eq!(stdout, "0,1,0,1,0,1\ninvalid argument\n");
    let _ = std::fs::remove_dir_all(out_dir);
}
