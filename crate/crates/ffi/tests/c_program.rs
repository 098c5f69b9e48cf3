use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "springer_k.h"

int main(void) {
    SkPartition *p = NULL;
    SkPresentation *eqk = NULL;
    size_t rank = 0;
    char *points = NULL;

    if (sk_partition_parse("3,2,1", &p) != SK_STATUS_OK) return 10;
    if (sk_presentation_build(p, "EqK", &eqk) != SK_STATUS_OK) return 11;
    if (sk_generic_rank(eqk, 17, 3, &rank) != SK_STATUS_OK) return 12;
    if (rank != 60) return 13;
    if (sk_fixed_points_json(p, &points) != SK_STATUS_OK) return 14;
    if (strncmp(points, "[[1,2,3,4,5,6]", 14) != 0) return 15;
    sk_string_free(points);
    if (sk_partition_parse("oops", &p) != SK_STATUS_INVALID_ARGUMENT) return 16;
    if (sk_last_error() == NULL) return 17;
    printf("rank %zu\n", rank);
    sk_presentation_free(eqk);
    sk_partition_free(p);
    return 0;
}
"#;

/// The static library next to the test binary in `target/<profile>/deps`,
/// or its uplifted copy one level up.
fn static_lib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    [deps, deps.parent().unwrap()]
        .iter()
        .map(|d| d.join("libspringer_k_ffi.a"))
        .find(|p| p.exists())
        .expect("libspringer_k_ffi.a is built alongside the tests")
}

#[test]
fn header_compiles_and_links_from_c() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let lib = static_lib();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = std::env::temp_dir().join(format!("springer_k_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let source = dir.join("main.c");
    let binary = dir.join("main");
    std::fs::write(&source, PROGRAM).unwrap();
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&source)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let output = Command::new(&binary).output().unwrap();
    assert!(output.status.success(), "exit {:?}", output.status.code());
    assert_eq!(String::from_utf8_lossy(&output.stdout), "rank 60\n");
    std::fs::remove_dir_all(&dir).ok();
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(cc.to_string());
        }
    }
    Err(())
}
