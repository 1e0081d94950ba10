use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_spheremotion"));
    c.env_remove("SPHEREMOTION_SEED");
    c
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

fn json(c: &mut Command) -> (i32, serde_json::Value) {
    let out = c.arg("--format").arg("json").output().unwrap();
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(serde_json::Value::Null);
    (code, v)
}

#[test]
fn validate_reports_census() {
    let (code, v) = json(bin().arg("validate").arg(golden("fig1.map.json")));
    assert_eq!(code, 0);
    let c = &v["results"]["census"];
    assert_eq!((c["vertices"].as_u64(), c["edges"].as_u64(), c["faces"].as_u64()), (Some(6), Some(9), Some(5)));
    let (_, v) = json(bin().arg("validate").arg(golden("torus.map.json")));
    assert_eq!(v["results"]["census"]["euler_characteristic"], 0);
}

#[test]
fn corrupt_map_names_the_edge() {
    let dir = std::env::temp_dir().join("spheremotion-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.map.json");
    std::fs::write(&path, r#"{"surface":"sphere","faces":[[{"edge":3,"dir":"+"}]]}"#).unwrap();
    let out = bin().arg("validate").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("edge 3"));
}

#[test]
fn motion_examples() {
    for (file, loci, bound) in [("example1.motion.json", 3, 2), ("example1-optimized.motion.json", 2, 2), ("example2.motion.json", 3, 3)] {
        let (code, v) = json(bin().arg("motion").arg(golden("fig1.map.json")).arg(golden(file)));
        assert_eq!(code, 0, "{file}");
        assert_eq!(v["results"]["loci"], loci, "{file}");
        assert_eq!(v["results"]["bound"], bound, "{file}");
    }
    let (_, v) = json(bin().arg("motion").arg(golden("fig1.map.json")).arg(golden("example2.motion.json")));
    assert_eq!(v["results"]["multiplicities"], serde_json::json!([1, 2, 1, 1, 1]));
    let (code, _) = json(bin().args(["motion", "--standard", "bm", "--m", "1"]).arg(golden("fig10.map.json")));
    assert_eq!(code, 0);
}

#[test]
fn comotion_weights() {
    let (code, v) = json(bin().arg("comotion").arg(golden("fig1.map.json")).arg(golden("example2.comotion.json")));
    assert_eq!(code, 0);
    assert_eq!(v["results"]["weights"]["total"], 2);
    let (code, v) = json(bin().arg("comotion").arg(golden("fig10-blowup.map.json")).arg(golden("fig10.comotion.json")));
    assert_eq!(code, 0);
    assert_eq!(v["results"]["weights"]["total"], 2);
}

#[test]
fn word_commands() {
    let (code, v) = json(bin().args(["word", "rewrite", "--text", "a t b t^-1 a t"]));
    assert_eq!(code, 0);
    assert_eq!(v["results"]["presentation"]["s"], 0);
    assert_eq!(v["results"]["difficult"], true);
    let (_, v) = json(bin().args(["word", "classify", "--text", "a t b t a t b t^-1 a t^-1"]));
    assert_eq!(v["results"]["difficult"], false);
    let (_, v) = json(bin().args(["word", "criterion", "--text", "t a", "--g-simple"]));
    assert_eq!(v["results"]["conjugate_to_t_g"], true);
    assert_eq!(v["results"]["verdict"], "simple");
}

#[test]
fn fuzz_is_seeded() {
    let run = |seed: &str, env: Option<&str>| {
        let mut c = bin();
        c.args(["fuzz", "--suite", "weights", "--cases", "20", "--seed", seed]);
        if let Some(e) = env {
            c.env("SPHEREMOTION_SEED", e);
        }
        let out = c.output().unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("3", None), run("3", None));
    assert_eq!(run("9", Some("3")), run("3", None));
    assert_ne!(run("4", None), run("3", None));
}

#[test]
fn emit_writes_golden_files() {
    let dir = std::env::temp_dir().join("spheremotion-cli-emit");
    let out = bin().args(["examples", "emit", "example2", "--out"]).arg(&dir).output().unwrap();
    assert!(out.status.success());
    for f in ["example2.motion.json", "example2.comotion.json"] {
        assert_eq!(std::fs::read(dir.join(f)).unwrap(), std::fs::read(golden(f)).unwrap());
    }
}
