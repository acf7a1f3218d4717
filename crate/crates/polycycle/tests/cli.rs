use std::fs;
use std::path::Path;

use polycycle::cli::run;
use polycycle::io;
use polycycle_core::families::monocycle_with;
use polycycle_core::Params;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("polycycle").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn four_valent_summary() {
    let (code, out, _) = call(&["enumerate", "--q", "4", "--r", "2,3", "--max-faces", "20", "--format", "summary"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "total elementary: 8"), "{out}");
    assert_eq!(out.lines().count(), 21);
    for line in out.lines().take(20) {
        assert_eq!(line.split(' ').count(), 5);
    }
}

#[test]
fn barrel_symmetry() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "b5.json");
    assert_eq!(call(&["family", "barrel", "--m", "5", "--out", &f]).0, 0);
    let (code, out, _) = call(&["symmetry", &f]);
    assert_eq!(code, 0);
    assert!(out.contains("aut_g 120 Ih"), "{out}");
    assert!(out.contains("aut_p 20 D5d"), "{out}");
}

#[test]
fn decompose_two_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let t = monocycle_with(3, Params::new([3], 3).unwrap()).unwrap();
    let g = t.agglomerate(t.open_edges()[0], &t, t.open_edges()[0], false).unwrap();
    let f = path(dir.path(), "pair.json");
    fs::write(&f, io::write_json(&g)).unwrap();
    let out_dir = path(dir.path(), "pieces");
    let (code, out, _) = call(&["decompose", &f, "--out", &out_dir]);
    assert_eq!(code, 0, "{out}");
    for name in ["piece_00.json", "piece_01.json"] {
        let p = io::read_json(&fs::read(Path::new(&out_dir).join(name)).unwrap()).unwrap();
        assert_eq!(p.canonical_code(), t.canonical_code());
    }
    assert!(!Path::new(&out_dir).join("piece_02.json").exists());
}

#[test]
fn agglomerate_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.json");
    let g = path(dir.path(), "g.json");
    assert_eq!(call(&["family", "monocycle", "--i", "5", "--out", &a]).0, 0);
    let (code, _, err) = call(&["agglomerate", &a, &a, "--edge-a", "0", "--edge-b", "2", "--flip", "--out", &g]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = call(&["validate", &g]);
    assert_eq!(code, 0);
    assert!(out.contains("2 faces") && out.contains("elementary: false"), "{out}");
}

#[test]
fn enumerate_json_then_classify() {
    let dir = tempfile::tempdir().unwrap();
    let cat = path(dir.path(), "cat");
    let (code, _, err) =
        call(&["enumerate", "--q", "3", "--r", "3,4,5", "--max-faces", "6", "--format", "json", "--out", &cat]);
    assert_eq!(code, 0, "{err}");
    let mut names: Vec<_> = fs::read_dir(&cat).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    assert_eq!(names.len(), 3 + 10 + 24 + 35 + 56);
    for f in &names {
        let doc = io::read_document(&fs::read(f).unwrap()).unwrap();
        let recorded = doc.catalog.unwrap().family;
        let (code, out, _) = call(&["classify", f.to_str().unwrap(), "--catalog", &cat]);
        assert_eq!(code, 0);
        assert_eq!(out.split(' ').next().unwrap(), recorded);
    }
    let b = path(dir.path(), "b4.json");
    call(&["family", "barrel", "--m", "4", "--out", &b]);
    assert_eq!(call(&["classify", &b, "--catalog", &cat]).0, 3);
}

#[test]
fn series_and_render() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "s.json");
    let svg = path(dir.path(), "s.svg");
    assert_eq!(call(&["family", "series", "--q", "5", "--pair", "alpha-alpha", "--out", &f]).0, 0);
    assert_eq!(call(&["render", &f, "--svg", &svg]).0, 0);
    let first = fs::read(&svg).unwrap();
    call(&["render", &f, "--svg", &svg]);
    assert_eq!(fs::read(&svg).unwrap(), first);
    assert!(String::from_utf8(first).unwrap().starts_with("<svg"));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["enumerate", "--q", "3"]).0, 2);
    assert_eq!(call(&["enumerate", "--q", "3", "--r", "3,4,5", "--format", "json"]).0, 2);
    assert_eq!(call(&["enumerate", "--q", "3", "--r", "3,4,5", "--family", "dragons"]).0, 2);
    assert_eq!(call(&["family", "barrel"]).0, 2);
    assert_eq!(call(&["validate", "/definitely/not/here.json"]).0, 4);
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.json");
    fs::write(&bad, "{\"format\": 1}").unwrap();
    assert_eq!(call(&["validate", &bad]).0, 3);
    assert_eq!(call(&["enumerate", "--q", "3", "--r", "3,7", "--max-faces", "3"]).0, 3);
    assert_eq!(call(&["family", "series", "--q", "5", "--pair", "gamma-gamma", "--n", "0"]).0, 3);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn family_filter() {
    let (_, out, _) = call(&["enumerate", "--q", "3", "--r", "3,4,5", "--max-faces", "8", "--family", "barrel"]);
    assert!(out.contains("total elementary: 3"), "{out}");
    let (_, out, _) = call(&["enumerate", "--q", "3", "--r", "3,4,5", "--max-faces", "10", "--totally-elementary"]);
    assert!(out.contains("total elementary: 17"), "{out}");
}
