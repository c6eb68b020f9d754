use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use benzleap_ffi::*;

fn family(f: BlFamily, p: u32) -> *mut BlGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { bl_graph_family(f, p, &mut g) }, BlStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bl_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn zigzag_counts_and_indices() {
    let g = family(BlFamily::Zigzag, 2);
    let (mut n, mut m) = (0usize, 0usize);
    unsafe {
        assert_eq!(bl_graph_vertex_count(g, &mut n), BlStatus::Ok);
        assert_eq!(bl_graph_edge_count(g, &mut m), BlStatus::Ok);
    }
    assert_eq!((n, m), (18, 21));

    let mut v = 0i64;
    assert_eq!(
        unsafe { bl_index_int(g, 2, BlIndexKind::Lm1, &mut v) },
        BlStatus::Ok
    );
    assert_eq!(v, 148);
    // classical kinds ignore k
    assert_eq!(
        unsafe { bl_index_int(g, 5, BlIndexKind::M1, &mut v) },
        BlStatus::Ok
    );
    assert_eq!(v, 102);

    let mut r = 0f64;
    assert_eq!(
        unsafe { bl_index_real(g, 2, BlIndexKind::Lso, &mut r) },
        BlStatus::Ok
    );
    assert!((r - 55.2268).abs() < 1e-4);
    assert_eq!(
        unsafe { bl_index_int(g, 2, BlIndexKind::Lso, &mut v) },
        BlStatus::InvalidArgument
    );
    assert!(last_error().contains("real"));
    unsafe { bl_graph_free(g) };
}

#[test]
fn profile_buffer_protocol() {
    let g = family(BlFamily::Rhombic, 2);
    let mut written = 0usize;
    let mut small = [0u32; 4];
    let status =
        unsafe { bl_k_degree_profile(g, 2, small.as_mut_ptr(), small.len(), &mut written) };
    assert_eq!(status, BlStatus::BufferTooSmall);
    assert_eq!(written, 16);
    let mut buf = vec![0u32; written];
    let status = unsafe { bl_k_degree_profile(g, 2, buf.as_mut_ptr(), buf.len(), &mut written) };
    assert_eq!(status, BlStatus::Ok);
    assert_eq!(buf.iter().map(|&d| d as u64).sum::<u64>() % 2, 0);
    assert!(buf.iter().all(|&d| (2..=6).contains(&d)));
    unsafe { bl_graph_free(g) };
}

#[test]
fn edges_constructor_and_errors() {
    let c6: Vec<u32> = (0..6u32).flat_map(|i| [i, (i + 1) % 6]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { bl_graph_from_edges(6, c6.as_ptr(), 6, &mut g) },
        BlStatus::Ok
    );
    let mut v = 0i64;
    assert_eq!(
        unsafe { bl_index_int(g, 2, BlIndexKind::Lyco, &mut v) },
        BlStatus::Ok
    );
    assert_eq!(v, 144);
    unsafe { bl_graph_free(g) };

    let looped = [0u32, 0];
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { bl_graph_from_edges(2, looped.as_ptr(), 1, &mut h) },
        BlStatus::InvalidGraph
    );
    assert!(h.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(
        unsafe { bl_graph_from_edges(2, ptr::null(), 1, &mut h) },
        BlStatus::NullPointer
    );
    assert_eq!(
        unsafe { bl_graph_family(BlFamily::Zigzag, 0, &mut h) },
        BlStatus::InvalidArgument
    );
    let mut n = 0usize;
    assert_eq!(
        unsafe { bl_graph_vertex_count(ptr::null(), &mut n) },
        BlStatus::NullPointer
    );
    unsafe { bl_graph_free(ptr::null_mut()) };
}

#[test]
fn verify_report_string() {
    let mut s = ptr::null_mut();
    let mut mismatch = -1;
    let status = unsafe {
        bl_verify_report(
            BlFamily::Rhombic,
            2,
            3,
            BlReportFormat::Csv,
            &mut s,
            &mut mismatch,
        )
    };
    assert_eq!(status, BlStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { bl_string_free(s) };
    assert_eq!(mismatch, 0);
    assert!(text.starts_with("family,p,quantity,oracle,closed,fixture,status\n"));
    assert!(text.contains("rhombic,3,lm1,328,328,328,match"));

    let status = unsafe {
        bl_verify_report(
            BlFamily::Zigzag,
            5,
            2,
            BlReportFormat::Text,
            &mut s,
            ptr::null_mut(),
        )
    };
    assert_eq!(status, BlStatus::InvalidArgument);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(bl_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "benzleap.h"

int main(void) {
    BlGraph *g = NULL;
    int64_t lm1 = 0;
    if (bl_graph_family(BL_FAMILY_ZIGZAG, 2, &g) != BL_STATUS_OK) return 1;
    if (bl_index_int(g, 2, BL_INDEX_KIND_LM1, &lm1) != BL_STATUS_OK) return 2;
    bl_graph_free(g);
    printf("%lld\n", (long long)lm1);
    return lm1 == 148 ? 0 : 3;
}
"#;

/// Compiles and runs a C client against the generated header and the
/// static library. Skipped when no C compiler is on PATH.
#[test]
fn c_client_links_against_header() {
    let Ok(exe) = std::env::current_exe() else {
        return;
    };
    // target/<profile>/deps/abi-xxxx -> target/<profile>
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libbenzleap_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let bin = dir.path().join("client");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C client failed to compile");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "148");
}
