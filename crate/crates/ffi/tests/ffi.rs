use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use toric_cohomology_ffi::*;

const EXAMPLE: [i64; 10] = [-2, 1, -2, -1, 1, -2, 1, 0, 0, 1];

fn new_fan(coords: &[i64]) -> Result<*mut ToricFan, ToricStatus> {
    let mut fan = ptr::null_mut();
    match unsafe { toric_fan_new(coords.as_ptr(), coords.len() / 2, &mut fan) } {
        ToricStatus::Ok => Ok(fan),
        status => Err(status),
    }
}

fn entries(m: *const ToricMatrix) -> Vec<Vec<(i64, i64)>> {
    unsafe {
        (0..toric_matrix_rows(m))
            .map(|i| {
                (0..toric_matrix_cols(m))
                    .map(|j| {
                        let (mut p, mut q) = (0, 0);
                        assert_eq!(toric_matrix_entry(m, i, j, &mut p, &mut q), ToricStatus::Ok);
                        (p, q)
                    })
                    .collect()
            })
            .collect()
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(toric_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn example_fan_matrices() {
    let fan = new_fan(&EXAMPLE).unwrap();
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(toric_intersection_matrix(fan, &mut m), ToricStatus::Ok);
        assert_eq!(
            entries(m),
            vec![vec![(-1, 4), (1, 4), (0, 1)], vec![(1, 4), (-3, 20), (1, 5)], vec![(0, 1), (1, 5), (-1, 10)]]
        );
        toric_matrix_free(m);
        assert_eq!(toric_cup_matrix(fan, &mut m), ToricStatus::Ok);
        assert_eq!(
            entries(m),
            vec![vec![(-2, 1), (2, 1), (4, 1)], vec![(2, 1), (2, 1), (4, 1)], vec![(4, 1), (4, 1), (-2, 1)]]
        );
        toric_matrix_free(m);
        let (mut identity, mut oracle) = (false, false);
        assert_eq!(toric_verify(fan, &mut identity, &mut oracle), ToricStatus::Ok);
        assert!(identity && oracle);
        toric_fan_free(fan);
    }
}

#[test]
fn entry_strings() {
    let fan = new_fan(&EXAMPLE).unwrap();
    unsafe {
        let mut m = ptr::null_mut();
        toric_intersection_matrix(fan, &mut m);
        let mut needed = 0;
        assert_eq!(toric_matrix_entry_string(m, 1, 1, ptr::null_mut(), 0, &mut needed), ToricStatus::BufferTooSmall);
        assert_eq!(needed, 6);
        let mut buf = vec![0 as std::ffi::c_char; needed];
        assert_eq!(toric_matrix_entry_string(m, 1, 1, buf.as_mut_ptr(), buf.len(), &mut needed), ToricStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "-3/20");
        assert_eq!(
            toric_matrix_entry_string(m, 3, 0, buf.as_mut_ptr(), buf.len(), &mut needed),
            ToricStatus::IndexOutOfRange
        );
        toric_matrix_free(m);
        toric_fan_free(fan);
    }
}

#[test]
fn normalize_and_polygon() {
    let square = [0, 0, 1, 0, 1, 1, 0, 1];
    unsafe {
        let mut fan = ptr::null_mut();
        assert_eq!(toric_fan_from_polygon(square.as_ptr(), 4, &mut fan), ToricStatus::Ok);
        assert_eq!(toric_fan_ray_count(fan), 4);
        let mut m = ptr::null_mut();
        assert_eq!(toric_intersection_matrix(fan, &mut m), ToricStatus::NotNormalized);
        let mut normalized = ptr::null_mut();
        assert_eq!(toric_fan_normalize(fan, 0, &mut normalized), ToricStatus::Ok);
        let (mut a, mut b) = (0, 0);
        assert_eq!(toric_fan_ray(normalized, 3, &mut a, &mut b), ToricStatus::Ok);
        assert_eq!((a, b), (1, 0));
        assert_eq!(toric_fan_ray(normalized, 5, &mut a, &mut b), ToricStatus::IndexOutOfRange);
        assert_eq!(toric_intersection_matrix(normalized, &mut m), ToricStatus::Ok);
        assert_eq!(entries(m), vec![vec![(0, 1), (1, 1)], vec![(1, 1), (0, 1)]]);
        toric_matrix_free(m);
        toric_fan_free(normalized);
        toric_fan_free(fan);

        let triangle = [0, 0, 1, 0, 2, 0];
        assert_eq!(toric_fan_from_polygon(triangle.as_ptr(), 3, &mut fan), ToricStatus::InvalidPolygon);
    }
}

#[test]
fn errors_and_null_handles() {
    assert_eq!(new_fan(&[1, 0, 0, 2, -1, -1]).unwrap_err(), ToricStatus::InvalidFan);
    assert!(last_error().contains("primitive"), "{}", last_error());
    assert_eq!(new_fan(&[1, 0, 0, 1]).unwrap_err(), ToricStatus::InvalidFan);
    unsafe {
        assert_eq!(toric_fan_new(ptr::null(), 3, &mut ptr::null_mut()), ToricStatus::NullPointer);
        assert_eq!(toric_fan_ray_count(ptr::null()), 0);
        assert_eq!(toric_matrix_rows(ptr::null()), 0);
        assert_eq!(toric_verify(ptr::null(), ptr::null_mut(), ptr::null_mut()), ToricStatus::NullPointer);
        toric_fan_free(ptr::null_mut());
        toric_matrix_free(ptr::null_mut());
        let fan = new_fan(&EXAMPLE).unwrap();
        assert_eq!(toric_fan_normalize(fan, 9, &mut ptr::null_mut()), ToricStatus::IndexOutOfRange);
        assert_eq!(toric_fan_normalize(fan, 2, ptr::null_mut()), ToricStatus::NullPointer);
        toric_fan_free(fan);
    }
    new_fan(&EXAMPLE).map(|f| unsafe { toric_fan_free(f) }).unwrap();
    assert_eq!(last_error(), "");
    let msg = unsafe { CStr::from_ptr(toric_status_message(ToricStatus::Singular)) };
    assert_eq!(msg.to_str().unwrap(), "matrix is singular");
}

#[test]
fn large_entries_need_strings() {
    // c_12 = a_1 b_2 = 4e9 * 4e9 does not fit in 64 bits.
    let m_coord = 4_000_000_000;
    let rays = [-m_coord, -1, 1, -m_coord, 1, 0, 0, 1];
    let fan = new_fan(&rays).unwrap();
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(toric_cup_matrix(fan, &mut m), ToricStatus::Ok);
        let (mut p, mut q) = (0, 0);
        assert_eq!(toric_matrix_entry(m, 0, 0, &mut p, &mut q), ToricStatus::Ok);
        assert_eq!((p, q), (4_000_000_000, 1));
        assert_eq!(toric_matrix_entry(m, 0, 1, &mut p, &mut q), ToricStatus::Overflow);
        let mut buf = [0 as std::ffi::c_char; 32];
        let mut needed = 0;
        assert_eq!(toric_matrix_entry_string(m, 0, 1, buf.as_mut_ptr(), buf.len(), &mut needed), ToricStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "16000000000000000000");
        let (mut identity, mut oracle) = (false, false);
        assert_eq!(toric_verify(fan, &mut identity, &mut oracle), ToricStatus::Ok);
        assert!(identity && oracle);
        toric_matrix_free(m);
        toric_fan_free(fan);
    }
}

fn target_dir() -> PathBuf {
    // tests run from <target>/<profile>/deps
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_is_generated() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/toric_cohomology.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["toric_fan_new", "toric_verify", "toric_matrix_entry_string", "TORIC_STATUS_BUFFER_TOO_SMALL"] {
        assert!(text.contains(name), "{name} missing from header");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let archive = target_dir().join("libtoric_cohomology_ffi.a");
    assert!(archive.exists(), "{} not built", archive.display());
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::temp_dir().join(format!("toric_ffi_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
