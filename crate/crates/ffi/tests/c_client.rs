//! Compiles a C program against the generated header and the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "cloop.h"

int main(void) {
    CloopTable *t = NULL;
    if (cloop_table_builtin("table1_16", &t) != CLOOP_STATUS_OK) return 1;
    size_t v = 0;
    if (cloop_table_mul(t, 8, 12, &v) != CLOOP_STATUS_OK || v != 7) return 2;
    bool holds = false;
    if (cloop_check(t, "flexible", &holds) != CLOOP_STATUS_OK || holds) return 3;
    size_t buf[16], len = 0;
    if (cloop_nucleus(t, buf, 16, &len) != CLOOP_STATUS_OK || len != 4) return 4;
    cloop_table_free(t);
    if (cloop_table_builtin("missing", &t) != CLOOP_STATUS_UNKNOWN_NAME) return 5;
    printf("%s\n", cloop_last_error_message());
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok_and(|o| o.status.success())
}

#[test]
fn c_program_links_and_runs() {
    if !have_cc() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let lib = target_dir().join("libcloop_ffi.a");
    assert!(include.join("cloop.h").exists());
    assert!(lib.exists(), "{} missing", lib.display());

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let bin = dir.path().join("client");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "client exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "unknown builtin `missing`");
}
