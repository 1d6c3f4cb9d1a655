use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;

use serde_json::Value;

use lie2::cohomology::{build_cross_product, build_g_hbar, sl2, so3, triple_product_cochain, Representation};
use lie2::exactlin::{frac, int};
use lie2::fixtures::broken_abelian4;
use lie2::json::{representation_to_json, to_pretty_string, JsonFormat};
use lie2::lie2::{from_crossed_module, DifferentialCrossedModule};
use lie2::linfty::TwoTermLInfinity;
use lie2_cli::{run, Report, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.json")]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn lie2(args: &[&str]) -> lie2_cli::Outcome {
    run(std::iter::once("lie2").chain(args.iter().copied()))
}

fn json_report(args: &[&str]) -> (i32, Report) {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let out = lie2(&argv);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).expect("report parses"))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, v: &Value) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, to_pretty_string(v)).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn fixtures_match_the_library() {
    let read = |n: &str| serde_json::from_str::<Value>(&std::fs::read_to_string(fixture(n)).unwrap()).unwrap();
    assert_eq!(read("so3"), so3().to_json());
    assert_eq!(read("sl2"), sl2().to_json());
    for (n, h) in [(0, 0), (1, 1), (2, 2)] {
        assert_eq!(
            read(&format!("ghbar_so3_{n}")),
            build_g_hbar(&so3(), &int(h)).data().to_json()
        );
    }
    assert_eq!(read("cross_product"), build_cross_product().data().to_json());
    assert_eq!(read("broken_abelian4"), broken_abelian4().to_json());
    assert_eq!(read("dcm_so3_ad"), DifferentialCrossedModule::adjoint(&so3()).to_json());
    assert_eq!(
        read("triple_product_so3"),
        triple_product_cochain(&so3(), &int(1)).to_json()
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lie2");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["check-linfty", &fixture("ghbar_so3_1")]), Some(0));
    assert_eq!(code(&["check-linfty", &fixture("broken_abelian4")]), Some(1));
    assert_eq!(code(&["ybe", &fixture("abelian3")]), Some(0));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["check-linfty", "/nonexistent.json"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn check_linfty() {
    assert_eq!(lie2(&["check-linfty", &fixture("ghbar_so3_1")]).code, EXIT_PASS);
    assert_eq!(lie2(&["check-linfty", &fixture("cross_product")]).code, EXIT_PASS);
    let (code, r) = json_report(&["check-linfty", &fixture("broken_abelian4")]);
    assert_eq!(code, EXIT_FAIL);
    assert!(!r.passed);
    let failing: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    assert_eq!(failing, ["i"]);
}

#[test]
fn tetrahedron_names_the_failing_tuple() {
    let (code, r) = json_report(&["tetrahedron", &fixture("broken_abelian4")]);
    assert_eq!(code, EXIT_FAIL);
    let i = r.checks.iter().find(|c| c.name == "axioms.i").unwrap();
    assert_eq!(i.first_violation.as_ref().unwrap().tuple, [0, 1, 2, 3]);
    let z = r.checks.iter().find(|c| c.name == "zamolodchikov").unwrap();
    assert!(!z.passed);
    // L′ has the ground direction at index 0, so e₁..e₄ are 1..4.
    assert_eq!(z.first_violation.as_ref().unwrap().tuple, [1, 2, 3, 4]);

    let (code, r) = json_report(&["tetrahedron", &fixture("ghbar_so3_1")]);
    assert_eq!(code, EXIT_PASS);
    let z = r.checks.iter().find(|c| c.name == "zamolodchikov").unwrap();
    assert_eq!(z.checked, 256);
}

#[test]
fn ybe() {
    assert_eq!(lie2(&["ybe", &fixture("abelian3")]).code, EXIT_PASS);
    assert_eq!(lie2(&["ybe", &fixture("sl2")]).code, EXIT_PASS);
    assert_eq!(lie2(&["ybe", &fixture("broken_jacobi3")]).code, EXIT_FAIL);
}

#[test]
fn check_lie2_compares_octagon_with_condition_i() {
    for (name, code) in [("ghbar_so3_2", EXIT_PASS), ("broken_abelian4", EXIT_FAIL)] {
        let (c, r) = json_report(&["check-lie2", &fixture(name)]);
        assert_eq!(c, code, "{name}");
        let agree = r.checks.iter().find(|c| c.name == "octagon_agrees_with_i").unwrap();
        assert!(agree.passed, "{name}");
    }
}

#[test]
fn check_dcm() {
    assert_eq!(lie2(&["check-dcm", &fixture("dcm_so3_ad")]).code, EXIT_PASS);
    let dir = tempfile::tempdir().unwrap();
    let mut m = DifferentialCrossedModule::adjoint(&so3());
    let mut v = m.to_json();
    v["t"][0][1] = "1".into();
    let p = write_temp(&dir, "bad.json", &v);
    let (code, r) = json_report(&["check-dcm", &p]);
    assert_eq!(code, EXIT_FAIL);
    assert!(r.checks.iter().any(|c| c.name == "dcm.equivariance" && !c.passed));
    assert!(r.checks.iter().any(|c| c.name == "image.e" && !c.passed));

    // Doubling t is invisible in the image: it equals the image of the
    // crossed module with the h bracket doubled.
    m.t = m.t.scale(&int(2));
    let p = write_temp(&dir, "scaled.json", &m.to_json());
    let (code, r) = json_report(&["check-dcm", &p]);
    assert_eq!(code, EXIT_FAIL);
    assert!(r
        .checks
        .iter()
        .filter(|c| c.name.starts_with("image."))
        .all(|c| c.passed));
}

#[test]
fn cohomology_dimensions() {
    let dim = |args: &[&str]| {
        let (code, r) = json_report(args);
        assert_eq!(code, EXIT_PASS);
        r.output.unwrap()["dim"].as_u64().unwrap()
    };
    assert_eq!(dim(&["cohomology", "--degree", "3", &fixture("so3")]), 1);
    assert_eq!(dim(&["cohomology", "--degree", "2", &fixture("so3")]), 0);
    assert_eq!(dim(&["cohomology", "--degree", "1", &fixture("abelian3")]), 3);
    let dir = tempfile::tempdir().unwrap();
    let rep = write_temp(
        &dir,
        "ad.json",
        &representation_to_json(&Representation::adjoint(&sl2())),
    );
    assert_eq!(dim(&["cohomology", "--degree", "3", &fixture("sl2"), "--rep", &rep]), 0);
}

#[test]
fn cochains() {
    assert_eq!(lie2(&["is-cocycle", &fixture("triple_product_so3")]).code, EXIT_PASS);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dw.json");
    let (code, r) = json_report(&[
        "coboundary",
        &fixture("triple_product_so3"),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.output.unwrap()["degree"], 4);
    assert!(out.exists());

    // δ of a nonzero 1-cochain on so₃ with trivial coefficients is nonzero.
    let mut w = triple_product_cochain(&so3(), &int(1)).to_json();
    w["degree"] = 1.into();
    w["values"] = serde_json::json!({"0": ["1"]});
    let p = write_temp(&dir, "w1.json", &w);
    assert_eq!(lie2(&["is-cocycle", &p]).code, EXIT_FAIL);
}

#[test]
fn build_ghbar_writes_a_valid_structure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let o = out.to_str().unwrap();
    assert_eq!(
        lie2(&["build-ghbar", "--hbar", "-1/2", &fixture("so3"), "-o", o]).code,
        EXIT_PASS
    );
    let v = TwoTermLInfinity::from_json_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(&v, build_g_hbar(&so3(), &frac(-1, 2)).data());
    assert_eq!(lie2(&["check-linfty", o]).code, EXIT_PASS);
    assert_eq!(
        lie2(&["build-ghbar", "--hbar", "x", &fixture("so3"), "-o", o]).code,
        EXIT_INPUT
    );
}

#[test]
fn killing_form() {
    let (_, r) = json_report(&["killing", &fixture("sl2")]);
    let k = r.output.unwrap();
    assert_eq!(k[0][0], "8");
    assert_eq!(k[1][2], "4");
}

#[test]
fn skeletalize_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let strict = from_crossed_module(&DifferentialCrossedModule::adjoint(&so3())).unwrap();
    let p = write_temp(&dir, "strict.json", &strict.data().to_json());
    let out = dir.path().join("sk.json");
    let (code, r) = json_report(&["skeletalize", &p, "-o", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.output.unwrap(), serde_json::json!({"dim0": 0, "dim1": 0}));
    let sk = TwoTermLInfinity::from_json_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(sk.is_skeletal());

    let c = write_temp(&dir, "c.json", &strict.data().complex().to_json());
    assert_eq!(lie2(&["skeletalize", &c, "-o", out.to_str().unwrap()]).code, EXIT_PASS);

    let (code, r) = json_report(&["classify", &fixture("ghbar_so3_1")]);
    assert_eq!(code, EXIT_PASS);
    let q = r.output.unwrap();
    assert_eq!(q["cocycle"]["values"]["0<1<2"], serde_json::json!(["-2"]));
    assert_eq!(q["algebra"], so3().to_json());
    assert_eq!(lie2(&["classify", &fixture("broken_abelian4")]).code, EXIT_FAIL);
}

#[test]
fn homs_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let v = Arc::new(build_g_hbar(&so3(), &int(1)).to_linfty());
    let f = lie2::linfty::LInfHom::identity(&v);
    let p = write_temp(&dir, "f.json", &f.to_json());
    let out = lie2(&["check-hom", &p]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    let t = lie2::linfty::LInfTwoHom::identity(&f);
    let p = write_temp(&dir, "t.json", &t.to_json());
    let out = lie2(&["check-2hom", &p]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);

    let mut bad = f.to_json();
    bad["phi2"][0][1][0] = "1".into();
    let p = write_temp(&dir, "bad.json", &bad);
    assert_eq!(lie2(&["check-hom", &p]).code, EXIT_FAIL);
}

#[test]
fn malformed_input_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = build_g_hbar(&so3(), &int(1)).data().to_json();
    v["l3"][0][1][2] = serde_json::json!(["one"]);
    let p = write_temp(&dir, "bad.json", &v);
    let out = lie2(&["check-linfty", &p]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("l3[0][1][2][0]"), "{}", out.stderr);

    v.as_object_mut().unwrap().remove("l2_01");
    let p = write_temp(&dir, "bad2.json", &v);
    let out = lie2(&["check-linfty", &p]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("l2_01"), "{}", out.stderr);

    let p = write_temp(&dir, "bad3.json", &serde_json::json!({"dim0": 1}));
    std::fs::write(&p, "{ not json").unwrap();
    assert_eq!(lie2(&["check-linfty", &p]).code, EXIT_INPUT);
    assert_eq!(lie2(&["check-hom", &fixture("so3")]).code, EXIT_INPUT);
    assert_eq!(lie2(&["cohomology", &fixture("so3")]).code, EXIT_INPUT);
}

#[test]
fn json_reports_round_trip() {
    for args in [
        vec!["check-linfty".to_string(), fixture("broken_abelian4")],
        vec!["killing".to_string(), fixture("so3")],
    ] {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let (_, r) = json_report(&a);
        assert_eq!(r.command[0], "--json");
        assert_eq!(r.command[1..], args);
        assert_eq!(r.passed, r.checks.iter().all(|c| c.passed));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), r);
    }
    let human = lie2(&["check-linfty", &fixture("broken_abelian4")]);
    assert!(human
        .stdout
        .contains("FAIL i (256 checked, 24 violations) first at [0, 1, 2, 3] residual [-1]"));
}
