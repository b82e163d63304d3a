use std::process::Command;

fn triflect(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_triflect")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn verify_kernel_passes() {
    let (code, out, _) = triflect(&["verify", "--filter", "kernel.*", "--threads", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("summary: 9 pass, 0 fail"), "{out}");
}

#[test]
fn failing_claim_exits_one() {
    let dir = std::env::temp_dir().join(format!("triflect-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("golden.toml");
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/golden.toml")).unwrap();
    std::fs::write(&path, text.replace("twelve_cell_cusps = 6", "twelve_cell_cusps = 7")).unwrap();
    let (code, out, _) = triflect(&["verify", "--filter", "cusps.12cell", "--golden", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("fail"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(triflect(&["no-such-command"]).0, 2);
    assert_eq!(triflect(&["verify", "--filter", "zzz*"]).0, 2);
    assert_eq!(triflect(&["lattice", "invariants", "Q7"]).0, 2);
    assert_eq!(triflect(&["polygon", "--mu", "1,1"]).0, 2);
}

#[test]
fn report_converts_json_to_text() {
    let dir = std::env::temp_dir().join(format!("triflect-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let (code, _, _) = triflect(&["verify", "--filter", "mirrors.*", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, text, _) = triflect(&["report", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("mirrors.L4") && text.contains("summary: 4 pass"));
    let tpath = dir.join("r.txt");
    std::fs::write(&tpath, &text).unwrap();
    let (code, json, _) = triflect(&["report", "--input", tpath.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["summary"]["pass"], 4);
}

#[test]
fn lattice_json_round_trip() {
    let dir = std::env::temp_dir().join(format!("triflect-lattice-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("l.json");
    let (code, out, _) = triflect(&["lattice", "build", "A4"]);
    assert_eq!(code, 0);
    std::fs::write(&path, out).unwrap();
    let (code, out, _) = triflect(&["--json", "lattice", "invariants", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["det"], "9");
    assert_eq!(v["roots"], 240);
}

#[test]
fn diagram_file_is_read() {
    let dir = std::env::temp_dir().join(format!("triflect-diagram-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.txt");
    std::fs::write(&path, "# a triangle-free path\nnodes: x:b y:w z:b\nedges: x-y y-z\n").unwrap();
    let (code, out, _) = triflect(&["--diagram-file", path.to_str().unwrap(), "rep", "closure"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "order 648");
}

#[test]
fn polygon_writes_svg() {
    let dir = std::env::temp_dir().join(format!("triflect-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.svg");
    let (code, out, _) = triflect(&["polygon", "--n", "5", "--svg", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("edge")).count(), 5);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<svg"));
}

#[test]
fn vinberg_failure_exits_one() {
    assert_eq!(triflect(&["vinberg", "Y555"]).0, 1);
    assert_eq!(triflect(&["vinberg", "tildeA11"]).0, 0);
}
