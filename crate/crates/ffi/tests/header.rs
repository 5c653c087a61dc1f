//! The generated header compiles as C and links against the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "cubartin.h"

int main(void) {
    CubartinGraph *g = NULL;
    if (cubartin_graph_parse("vertex a\nvertex b\nedge a b 5\n", &g) != CUBARTIN_STATUS_OK) return 10;
    CubartinVerdict v;
    if (cubartin_graph_verdict(g, &v, NULL) != CUBARTIN_STATUS_OK) return 11;
    if (v != CUBARTIN_VERDICT_COCOMPACTLY_CUBULATED) return 12;
    CubartinComplex *c = NULL;
    if (cubartin_complex_build(g, &c) != CUBARTIN_STATUS_OK) return 13;
    bool npc = false;
    cubartin_complex_is_npc(c, &npc);
    if (!npc) return 14;
    char *ab = NULL;
    cubartin_complex_abelianization(c, &ab);
    printf("%s\n", ab);
    cubartin_string_free(ab);
    cubartin_complex_free(c);
    cubartin_graph_free(g);
    if (cubartin_graph_parse(NULL, &g) != CUBARTIN_STATUS_NULL_POINTER) return 15;
    if (strlen(cubartin_last_error()) == 0) return 16;
    return 0;
}
"#;

fn tool(name: &str) -> bool {
    Command::new(name).arg("--version").output().is_ok()
}

fn static_lib() -> Option<PathBuf> {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().ok()?;
    let lib = exe.parent()?.parent()?.join("libcubartin_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn header_compiles_and_links() {
    if !tool("cc") {
        eprintln!("no C compiler; skipped");
        return;
    }
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("capi");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();

    let syntax = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(syntax.success());

    let Some(lib) = static_lib() else {
        eprintln!("static library not built; link step skipped");
        return;
    };
    let exe = dir.join("main");
    let link = Command::new("cc")
        .args(["-std=c99", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(link.success());
    let run = Command::new(&exe).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "Z");
}
