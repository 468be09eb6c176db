//! Compile and run the C consumer in examples/smoke.c against the built
//! static library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

fn find_cc() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|cc| {
        Command::new(cc)
            .arg("--version")
            .output()
            .map(|o| o.status.success())
            .unwrap_or(false)
    })
}

#[test]
fn c_consumer_compiles_and_runs() {
    let Some(cc) = find_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // locate the staticlib relative to the test executable
    let exe = std::env::current_exe().expect("test executable path");
    let deps = exe.parent().expect("deps dir");
    let profile_dir = deps.parent().expect("profile dir");
    let staticlib = profile_dir.join("libnestex_capi.a");
    assert!(staticlib.exists(), "staticlib not found at {staticlib:?}");
    let out_dir = std::env::temp_dir().join(format!("nestex_c_smoke_{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe_path = out_dir.join("smoke");
    let status = Command::new(cc)
        .arg(format!("-I{}", manifest.join("include").display()))
        .arg(manifest.join("examples/smoke.c"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe_path)
        .status()
        .expect("compiler runs");
    assert!(status.success(), "C compilation failed");
    let output = Command::new(&exe_path).output().expect("smoke runs");
    assert!(
        output.status.success(),
        "smoke exited with {:?}: {}",
        output.status,
        String::from_utf8_lossy(&output.stderr)
    );
    assert!(String::from_utf8_lossy(&output.stdout).contains("smoke passed"));
    let _ = std::fs::remove_dir_all(&out_dir);
}
