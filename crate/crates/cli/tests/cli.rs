use std::path::Path;
use std::process::{Command, Output};

use frieze::image::{read_pgm, transform_image, write_pgm, Transform};
use frieze::table::{print_table, verify_table, DEFAULT_SEED};
use frieze::{
    classify_image, compose, from_generators, generate, rasterize, render_svg, wrap_report, wrap_texture,
    FriezeGroup, Motif, Scalar, StripIsometry, Tolerance, TypeTag,
};

fn frieze(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frieze")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn q(n: i128, d: i128) -> Scalar {
    Scalar::new(n, d)
}

fn fixture(dir: &Path, tag: TypeTag) -> std::path::PathBuf {
    let g = FriezeGroup::standard(tag, q(2, 1), Scalar::ZERO).unwrap();
    let scene = generate(&Motif::asymmetric_flag(q(2, 1), Scalar::ONE), &g, 2).unwrap();
    let path = dir.join(format!("{}.pgm", tag.alias()));
    std::fs::write(&path, write_pgm(&rasterize(&scene, 32, 1).unwrap())).unwrap();
    path
}

#[test]
fn compose_prints_product() {
    let o = frieze(&["compose", "R(3)", "V(1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "S(4)\n");
    let a: StripIsometry = "S(1/2)".parse().unwrap();
    let b: StripIsometry = "V(-3/4)".parse().unwrap();
    let o = frieze(&["compose", "S(1/2)", "V(-3/4)"]);
    assert_eq!(stdout(&o).trim(), compose(&a, &b).to_string());
}

#[test]
fn classify_gens_matches_library() {
    let o = frieze(&["classify-gens", "R(0)", "V(1/2)"]);
    assert!(o.status.success());
    let g = from_generators(&["R(0)".parse().unwrap(), "V(1/2)".parse().unwrap()]).unwrap();
    assert_eq!(stdout(&o).trim(), format!("{g} {}", g.tag().notation()));
    assert!(stdout(&o).contains("tag=p2mg"));
}

#[test]
fn domain_error_exits_one() {
    let o = frieze(&["classify-gens", "V(0)"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&o.stderr).trim(), "error: not a frieze: no translation generated");
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(frieze(&["compose", "Q(1)", "T(0)"]).status.code(), Some(2));
    assert_eq!(frieze(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(frieze(&["generate", "--tag", "p9"]).status.code(), Some(2));
}

#[test]
fn missing_file_is_a_domain_error() {
    let o = frieze(&["detect", "/nonexistent/strip.pgm"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
}

#[test]
fn generate_writes_library_output() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("out.svg");
    let pgm = dir.path().join("out.pgm");
    let o = frieze(&[
        "generate",
        "--motif",
        "builtin",
        "--tag",
        "p2mg",
        "--period",
        "2",
        "--copies",
        "4",
        "--svg",
        svg.to_str().unwrap(),
        "--pgm",
        pgm.to_str().unwrap(),
        "--px",
        "32",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let g = FriezeGroup::standard(TypeTag::TRVSg, q(2, 1), Scalar::ZERO).unwrap();
    let scene = generate(&Motif::asymmetric_flag(q(2, 1), Scalar::ONE), &g, 4).unwrap();
    assert_eq!(std::fs::read_to_string(&svg).unwrap(), render_svg(&scene));
    let img = read_pgm(&std::fs::read(&pgm).unwrap()).unwrap();
    assert_eq!(img.pixels(), rasterize(&scene, 32, 1).unwrap().pixels());
}

#[test]
fn generate_from_motif_file() {
    let dir = tempfile::tempdir().unwrap();
    let motif = dir.path().join("m.motif");
    std::fs::write(&motif, "cell 1 height 1\npolygon filled 0,0 1/2,0 0,1/2\n").unwrap();
    let o = frieze(&["generate", "--motif", motif.to_str().unwrap(), "--tag", "p1", "--copies", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("tag=p1 period=1 "));
    let o = frieze(&["generate", "--motif", motif.to_str().unwrap(), "--tag", "p1", "--period", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn detect_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    for tag in TypeTag::ALL {
        let path = fixture(dir.path(), tag);
        let o = frieze(&["detect", path.to_str().unwrap()]);
        assert!(o.status.success());
        let img = read_pgm(&std::fs::read(&path).unwrap()).unwrap();
        let report = classify_image(&img, Tolerance::default()).unwrap();
        assert_eq!(stdout(&o).trim(), report.to_string());
        assert_eq!(report.tag, tag);
    }
    let path = fixture(dir.path(), TypeTag::TV);
    let o = frieze(&["detect", path.to_str().unwrap(), "--eta", "0", "--delta", "0"]);
    assert!(stdout(&o).starts_with("tag=p1m1 "));
}

#[test]
fn transform_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let src = fixture(dir.path(), TypeTag::TR);
    let out = dir.path().join("sheared.pgm");
    let o = frieze(&["transform", src.to_str().unwrap(), "--op", "shear_x", "--k", "1/2", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let img = read_pgm(&std::fs::read(&src).unwrap()).unwrap();
    let expected = transform_image(&img, Transform::ShearX(q(1, 2))).unwrap();
    assert_eq!(read_pgm(&std::fs::read(&out).unwrap()).unwrap().pixels(), expected.pixels());
    let o = frieze(&["transform", src.to_str().unwrap(), "--op", "rotate", "--k", "1", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn wrap_report_and_texture() {
    let o = frieze(&["wrap", "--tag", "p2", "--n", "6"]);
    assert_eq!(stdout(&o).trim(), wrap_report(TypeTag::TR, 6).to_string());
    assert_eq!(frieze(&["wrap", "--tag", "p2", "--n", "0"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let src = fixture(dir.path(), TypeTag::TR);
    let period = read_pgm(&std::fs::read(&src).unwrap()).unwrap().crop_columns(0, 64);
    let period_path = dir.path().join("period.pgm");
    std::fs::write(&period_path, write_pgm(&period)).unwrap();
    let ring = dir.path().join("ring.pgm");
    let o = frieze(&[
        "wrap",
        "--tag",
        "p2",
        "--n",
        "6",
        "--texture",
        period_path.to_str().unwrap(),
        "-o",
        ring.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let got = read_pgm(&std::fs::read(&ring).unwrap()).unwrap();
    let expected = wrap_texture(&read_pgm(&std::fs::read(&period_path).unwrap()).unwrap(), 6);
    assert_eq!(got, expected);
    assert_eq!(got.width(), 384);
}

#[test]
fn verify_table_is_deterministic() {
    let a = frieze(&["verify-table"]);
    let b = frieze(&["verify-table", "--seed", &DEFAULT_SEED.to_string()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).trim(), verify_table(DEFAULT_SEED).to_string().trim());
    assert!(stdout(&a).contains("16/16 cells verified"));
}

#[test]
fn print_table_matches_library() {
    let o = frieze(&["print-table"]);
    assert_eq!(stdout(&o).trim(), print_table().trim());
}
