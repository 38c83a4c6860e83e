use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use specert_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { specert_string_free(p) };
    s
}

fn last_error() -> String {
    let p = specert_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn graph_round_trip_and_counts() {
    let edges: [usize; 8] = [0, 1, 1, 2, 2, 3, 3, 0];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(specert_graph_from_edges(4, edges.as_ptr(), 4, &mut g), SpecertStatus::Ok);
        let (mut n, mut m) = (0, 0);
        assert_eq!(specert_graph_order(g, &mut n), SpecertStatus::Ok);
        assert_eq!(specert_graph_edge_count(g, &mut m), SpecertStatus::Ok);
        assert_eq!((n, m), (4, 4));

        let mut s = ptr::null_mut();
        assert_eq!(specert_graph_to_graph6(g, &mut s), SpecertStatus::Ok);
        let text = CString::new(take_string(s)).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(specert_graph_from_graph6(text.as_ptr(), &mut h), SpecertStatus::Ok);
        let mut rho = 0.0;
        assert_eq!(specert_spectral_radius(h, 1.0, 0.0, &mut rho), SpecertStatus::Ok);
        assert!((rho - 4.0).abs() < 1e-9);
        specert_graph_free(h);
        specert_graph_free(g);
    }
}

#[test]
fn bounds_and_closed_forms() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(specert_ktree_extremal(7, 2, &mut g), SpecertStatus::Ok);
        let (mut hong, mut das, mut rho) = (0.0, 0.0, 0.0);
        assert_eq!(specert_hong_bound(g, &mut hong), SpecertStatus::Ok);
        assert_eq!(specert_das_bound(g, &mut das), SpecertStatus::Ok);
        assert_eq!(specert_spectral_radius(g, 0.0, 1e-12, &mut rho), SpecertStatus::Ok);
        assert!(rho <= hong + 1e-9);
        let mut q = 0.0;
        assert_eq!(specert_spectral_radius(g, 1.0, 1e-12, &mut q), SpecertStatus::Ok);
        assert!(q <= das + 1e-9);
        specert_graph_free(g);

        let mut b = ptr::null_mut();
        assert_eq!(specert_matching_extremal(5, 2, &mut b), SpecertStatus::Ok);
        let mut bg = ptr::null_mut();
        assert_eq!(specert_bipartite_to_graph(b, &mut bg), SpecertStatus::Ok);
        let (mut closed, mut numeric) = (0.0, 0.0);
        assert_eq!(specert_rho_matching_extremal(5, 2, &mut closed), SpecertStatus::Ok);
        assert_eq!(specert_spectral_radius(bg, 0.0, 1e-12, &mut numeric), SpecertStatus::Ok);
        assert!((closed - numeric).abs() < 1e-8);
        assert_eq!(specert_q_matching_extremal(5, 2, &mut closed), SpecertStatus::Ok);
        assert_eq!(specert_spectral_radius(bg, 1.0, 1e-12, &mut numeric), SpecertStatus::Ok);
        assert!((closed - numeric).abs() < 1e-8);
        specert_graph_free(bg);
        specert_bipartite_free(b);
    }
}

#[test]
fn certificates_as_json() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(specert_ktree_extremal(6, 3, &mut g), SpecertStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(specert_find_k_tree(g, 3, &mut s), SpecertStatus::Ok);
        assert!(s.is_null());
        assert_eq!(specert_find_k_tree(g, 4, &mut s), SpecertStatus::Ok);
        assert!(take_string(s).starts_with(r#"{"type":"ktree","data":[["#));
        assert_eq!(specert_find_win_violator(g, 3, 0, &mut s), SpecertStatus::Ok);
        assert_eq!(take_string(s), r#"{"type":"win_violator","data":[0]}"#);
        specert_graph_free(g);

        let pairs: [usize; 4] = [0, 1, 1, 0];
        let mut b = ptr::null_mut();
        assert_eq!(specert_bipartite_from_edges(2, 2, pairs.as_ptr(), 2, &mut b), SpecertStatus::Ok);
        assert_eq!(specert_certify_matching(b, &mut s), SpecertStatus::Ok);
        assert_eq!(take_string(s), r#"{"type":"matching","data":[[0,1],[1,0]]}"#);
        specert_bipartite_free(b);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        let bad = CString::new("~").unwrap();
        assert_eq!(specert_graph_from_graph6(bad.as_ptr(), &mut g), SpecertStatus::Parse);
        assert!(g.is_null());
        assert!(last_error().contains("graph6"));

        assert_eq!(specert_graph_from_graph6(ptr::null(), &mut g), SpecertStatus::NullPointer);
        let mut n = 0;
        assert_eq!(specert_graph_order(ptr::null(), &mut n), SpecertStatus::NullPointer);

        let loops: [usize; 2] = [1, 1];
        assert_eq!(specert_graph_from_edges(3, loops.as_ptr(), 1, &mut g), SpecertStatus::InvalidInput);
        assert_eq!(specert_graph_from_edges(3, ptr::null(), 1, &mut g), SpecertStatus::NullPointer);

        let mut x = 0.0;
        assert_eq!(specert_rho_matching_extremal(2, 2, &mut x), SpecertStatus::InvalidInput);
        assert_eq!(specert_rho_matching_extremal(3, 1, ptr::null_mut()), SpecertStatus::NullPointer);

        // an isolated vertex leaves 2m - n + 1 negative
        assert_eq!(specert_graph_from_edges(3, ptr::null(), 0, &mut g), SpecertStatus::Ok);
        assert_eq!(specert_hong_bound(g, &mut x), SpecertStatus::Domain);
        let mut s = ptr::null_mut();
        assert_eq!(specert_find_k_tree(g, 2, &mut s), SpecertStatus::InvalidInput);
        specert_graph_free(g);

        assert_eq!(specert_ktree_extremal(30, 2, &mut g), SpecertStatus::Ok);
        assert_eq!(specert_find_win_violator(g, 2, 0, &mut s), SpecertStatus::Capacity);
        specert_graph_free(g);

        specert_graph_free(ptr::null_mut());
        specert_bipartite_free(ptr::null_mut());
        specert_string_free(ptr::null_mut());
    }
}

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/specert.h")).unwrap();
    let source = std::fs::read_to_string(manifest_dir().join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for code in ["SPECERT_STATUS_OK = 0", "SPECERT_STATUS_INTERNAL = 8"] {
        assert!(header.contains(code));
    }
    assert!(header.contains("typedef struct SpecertGraph SpecertGraph;"));
}

fn c_compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().filter(|o| o.status.success()).map(|_| cc)
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let include = manifest_dir().join("include");
    for lang in ["c", "c++"] {
        let status = Command::new(&cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg("-I")
            .arg(&include)
            .arg(manifest_dir().join("include/specert.h"))
            .status()
            .unwrap();
        assert!(status.success(), "header rejected as {lang}");
    }
}

fn static_library() -> Option<PathBuf> {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().ok()?;
    let lib = exe.parent()?.parent()?.join("libspecert_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let (Some(cc), Some(lib)) = (c_compiler(), static_library()) else {
        eprintln!("no C compiler or static library, skipping");
        return;
    };
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("specert_smoke");
    let status = Command::new(&cc)
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(manifest_dir().join("include"))
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke program failed to build");
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
