//! Compiles a C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include "depoly.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    DepolyGraph *g = NULL;
    if (depoly_graph_from_graph6("C~", &g) != DEPOLY_STATUS_OK) return 10;
    DepolyPolynomial *p = NULL;
    if (depoly_graph_polynomial(g, DEPOLY_POLY_KIND_DEPENDENCE, &p) != DEPOLY_STATUS_OK) return 11;
    int64_t c = 0;
    for (size_t k = 0; k < depoly_polynomial_len(p); k++) {
        depoly_polynomial_coefficient_i64(p, k, &c);
        printf("%lld ", (long long)c);
    }
    printf("\n");
    if (depoly_graph_from_graph6("!!", &g) != DEPOLY_STATUS_PARSE) return 12;
    if (strlen(depoly_last_error()) == 0) return 13;
    depoly_polynomial_free(p);
    depoly_graph_free(g);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let lib = target_dir().join("libdepoly_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let exe = dir.path().join("client");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "client exited with {:?}", out.status);
    // K4: every set of 2 or more vertices contains an edge
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "0 0 6 4 1");
}
