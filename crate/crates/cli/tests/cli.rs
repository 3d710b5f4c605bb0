use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use mpls::canonical::BlockFormMeta;
use mpls::{BinaryMatrix, Geometry, LatinSquare};
use serde_json::Value;
use tempfile::TempDir;

fn mpls(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpls"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str], dir: &Path) -> String {
    let out = mpls(args, dir);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn generated_plane_verifies() {
    let tmp = TempDir::new().unwrap();
    ok(&["gen-plane", "--order", "2", "--out", "f.inc"], tmp.path());
    let report = json(&ok(&["verify-plane", "--in", "f.inc"], tmp.path()));
    assert_eq!(report["geometry"]["v"], 7);
    assert_eq!(report["geometry"]["b"], 7);
    assert_eq!(report["is_plane"], true);
}

#[test]
fn extracted_squares_form_a_complete_set() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    ok(
        &[
            "gen-plane",
            "--order",
            "5",
            "--shuffle",
            "--seed",
            "9",
            "--out",
            "f.inc",
        ],
        dir,
    );
    ok(&["canon", "--in", "f.inc", "--out", "c.inc", "--meta", "c.json"], dir);
    ok(&["extract", "--in", "c.inc", "--out-dir", "D"], dir);
    let report = json(&ok(&["verify-mpls", "--in-dir", "D"], dir));
    assert_eq!(report["count"], 4);
    assert_eq!(report["is_complete"], true);
    assert!(!dir.join("D/L5.ls").exists());

    ok(&["reconstruct", "--in-dir", "D", "--out", "r.inc"], dir);
    assert_eq!(
        fs::read(dir.join("r.inc")).unwrap(),
        fs::read(dir.join("c.inc")).unwrap()
    );

    let res = json(&ok(&["resolve", "--in-dir", "D", "--target", "2"], dir));
    assert_eq!(res["resolutions"].as_array().unwrap().len(), 3);
    assert_eq!(res["all_valid"], true);
}

#[test]
fn matching_on_all_ones() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("j.inc"), "2 3\n1 1 1\n1 1 1\n").unwrap();
    let report = json(&ok(&["matching", "--in", "j.inc"], tmp.path()));
    assert_eq!(report["v"], 2);
    assert_eq!(report["w"], 0);
    assert_eq!(report["zero_block"], Value::Null);
    assert_eq!(report["matching"]["pairs"].as_array().unwrap().len(), 2);
}

#[test]
fn decomposition_writes_permutation_matrices() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    ok(&["gen-plane", "--order", "3", "--out", "f.inc"], dir);
    ok(&["decompose", "--in", "f.inc", "--out-dir", "P"], dir);
    let m = BinaryMatrix::parse_inc(&fs::read_to_string(dir.join("f.inc")).unwrap()).unwrap();
    let mut sum = vec![0; m.bits().len()];
    for i in 1..=4 {
        let p = BinaryMatrix::parse_inc(&fs::read_to_string(dir.join(format!("P/P{i}.inc"))).unwrap()).unwrap();
        assert!(p.is_permutation_matrix());
        for (s, &b) in sum.iter_mut().zip(p.bits()) {
            *s += usize::from(b);
        }
    }
    assert!(!dir.join("P/P5.inc").exists());
    assert!(sum.iter().zip(m.bits()).all(|(&s, &b)| s == usize::from(b)));
}

#[test]
fn classify_reports_pencils() {
    let tmp = TempDir::new().unwrap();
    fs::write(
        tmp.path().join("g.json"),
        r#"{"points": 4, "lines": [[0, 1, 2], [3, 0], [3, 1], [3, 2]]}"#,
    )
    .unwrap();
    let report = json(&ok(&["classify", "--in", "g.json"], tmp.path()));
    assert_eq!(report["classification"]["kind"], "pencil_with_transversal");
    assert_eq!(report["classification"]["top"], 3);
    assert_eq!(report["injection"].as_array().unwrap().len(), 4);
}

#[test]
fn pipelines_are_deterministic() {
    let runs: Vec<Vec<Vec<u8>>> = (0..2)
        .map(|_| {
            let tmp = TempDir::new().unwrap();
            let dir = tmp.path();
            ok(
                &[
                    "gen-plane",
                    "--order",
                    "4",
                    "--shuffle",
                    "--seed",
                    "17",
                    "--out",
                    "f.inc",
                    "--json",
                    "g.json",
                ],
                dir,
            );
            ok(&["canon", "--in", "f.inc", "--out", "c.inc", "--meta", "c.json"], dir);
            ok(&["extract", "--in", "c.inc", "--out-dir", "D"], dir);
            let mut files: Vec<Vec<u8>> = ["f.inc", "g.json", "c.inc", "c.json", "D/L1.ls", "D/L2.ls", "D/L3.ls"]
                .iter()
                .map(|f| fs::read(dir.join(f)).unwrap())
                .collect();
            files.push(ok(&["matching", "--in", "f.inc"], dir).into_bytes());
            files.push(ok(&["classify", "--in", "g.json"], dir).into_bytes());
            files
        })
        .collect();
    assert_eq!(runs[0], runs[1]);

    let tmp = TempDir::new().unwrap();
    ok(
        &[
            "gen-plane",
            "--order",
            "4",
            "--shuffle",
            "--seed",
            "18",
            "--out",
            "f.inc",
        ],
        tmp.path(),
    );
    assert_ne!(fs::read(tmp.path().join("f.inc")).unwrap(), runs[0][0]);
}

#[test]
fn outputs_reparse_to_equal_values() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    ok(
        &[
            "gen-plane",
            "--order",
            "3",
            "--shuffle",
            "--out",
            "f.inc",
            "--json",
            "g.json",
        ],
        dir,
    );
    ok(&["canon", "--in", "f.inc", "--out", "c.inc", "--meta", "c.json"], dir);
    ok(&["extract", "--in", "c.inc", "--out-dir", "D"], dir);

    let read = |f: &str| fs::read_to_string(dir.join(f)).unwrap();
    let f = BinaryMatrix::parse_inc(&read("f.inc")).unwrap();
    assert_eq!(f.to_inc_string(), read("f.inc"));
    let g = Geometry::from_json(&read("g.json")).unwrap();
    assert_eq!(g, mpls::planes::geometry_from_incidence(&f).unwrap());
    assert_eq!(g.to_json(), read("g.json"));

    let c = BinaryMatrix::parse_inc(&read("c.inc")).unwrap();
    let meta: BlockFormMeta = serde_json::from_str(&read("c.json")).unwrap();
    assert_eq!(meta.order, 3);
    // the permutations carry the input onto the canonical matrix
    let bf = mpls::canonical::BlockForm::from_meta(c.clone(), &meta).unwrap();
    assert_eq!(f.permute(bf.row_perm(), bf.col_perm()).unwrap(), c);

    for i in 1..=2 {
        let text = read(&format!("D/L{i}.ls"));
        assert_eq!(LatinSquare::parse_ls(&text).unwrap().to_ls_string(), text);
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let code = |args: &[&str]| mpls(args, dir).status.code();

    fs::write(dir.join("bad.inc"), "2 2\n1 x\n0 1\n").unwrap();
    assert_eq!(code(&["matching", "--in", "bad.inc"]), Some(2));
    assert_eq!(code(&["matching", "--in", "missing.inc"]), Some(2));
    assert_eq!(code(&["gen-plane", "--out", "f.inc"]), Some(2));
    assert_eq!(code(&["resolve", "--in-dir", ".", "--target", "0"]), Some(2));

    // the near-pencil on 4 points is a geometry but not a plane
    fs::write(dir.join("np.inc"), "4 4\n1 1 1 0\n1 0 0 1\n0 1 0 1\n0 0 1 1\n").unwrap();
    let out = mpls(&["verify-plane", "--in", "np.inc"], dir);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&String::from_utf8(out.stdout).unwrap())["is_plane"], false);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a projective plane"));

    // two lines sharing two points breaks the geometry axioms
    fs::write(dir.join("dup.inc"), "3 3\n1 1 0\n1 1 1\n0 1 1\n").unwrap();
    let out = mpls(&["verify-plane", "--in", "dup.inc"], dir);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lie on two lines"));

    assert_eq!(code(&["gen-plane", "--order", "6", "--out", "f.inc"]), Some(1));
    ok(&["gen-plane", "--order", "3", "--shuffle", "--out", "s.inc"], dir);
    let out = mpls(&["extract", "--in", "s.inc", "--out-dir", "D"], dir);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("block form violation"));

    fs::create_dir(dir.join("E")).unwrap();
    fs::write(dir.join("E/L1.ls"), "3\n1 2 3\n3 1 2\n2 3 1\n").unwrap();
    fs::write(dir.join("E/L2.ls"), "3\n1 2 3\n3 1 2\n2 3 1\n").unwrap();
    assert_eq!(code(&["verify-mpls", "--in-dir", "E"]), Some(1));
}
