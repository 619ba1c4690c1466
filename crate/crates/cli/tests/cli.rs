use std::path::PathBuf;
use std::process::{Command, Output};

fn hadaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hadaut")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hadaut-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn classify_verify_canon_round_trip() {
    let dir = scratch_dir("p7");
    let out = hadaut(&["classify", "-p", "7", "-o", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("designs=3 matrices=3"), "{}", stdout(&out));

    let manifest = std::fs::read_to_string(dir.join("manifest.txt")).unwrap();
    assert_eq!(manifest.lines().count(), 6);

    let mut matrices: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap().to_str().unwrap().starts_with("H16_"))
        .map(|p| p.to_str().unwrap().to_string())
        .collect();
    matrices.sort();
    assert_eq!(matrices.len(), 3);

    let mut args = vec!["verify"];
    args.extend(matrices.iter().map(String::as_str));
    let out = hadaut(&args);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("ok\t")).count(), 3);

    let mut args = vec!["canon"];
    args.extend(matrices.iter().map(String::as_str));
    let out = hadaut(&args);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3 classes among 3 files"), "{}", stdout(&out));

    // Every digest printed by `canon` is one of the manifest digests.
    for line in stdout(&out).lines().filter(|l| l.contains("H16_")) {
        let digest = line.split('\t').nth(1).unwrap();
        assert!(manifest.contains(digest), "{digest} missing from manifest");
    }
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_reports_broken_matrix() {
    let dir = scratch_dir("broken");
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.txt");
    std::fs::write(&f, "H 2\n++\n++\n").unwrap();
    let out = hadaut(&["verify", f.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stdout(&out).starts_with("FAIL"), "{}", stdout(&out));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn analyze_golay_code() {
    // Every Hadamard matrix of order 12 spans the extended ternary Golay code.
    let dir = scratch_dir("golay");
    let out = hadaut(&["classify", "-p", "5", "-o", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let f = dir.join("H12_001.txt");
    let out = hadaut(&["analyze", "--codes", "c3", f.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let s = stdout(&out);
    assert!(s.contains("GF(3)\t12\t6\t6\textremal\t6:264"), "{s}");
    assert!(s.contains("aut\thadamard\t190080\t1"), "{s}");
    let _ = std::fs::remove_dir_all(&dir);
}
