use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;
use twogroups::cli::parse_instance;
use twogroups::diagram::{replay, zigzag1_diagram, iprime_diagram, Diagram, RewriteTrace, Wire};
use twogroups::fincat::{MorId, ObjId};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twogroups"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_levels_and_codes() {
    let dir = TempDir::new().unwrap();
    let z2 = file(&dir, "z2.txt", "GENERATOR group:Z2\n");
    assert_eq!(run(&["validate", s(&z2), "--level", "coherent"]).0, 0);

    let weak = file(&dir, "weak.txt", "GENERATOR deloop:Z3:1:1\n");
    let (code, out) = run(&["validate", s(&weak), "--level", "coherent"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL ZIGZAG1 0"), "{out}");
    assert_eq!(run(&["validate", s(&weak), "--level", "weak"]).0, 0);
    assert_eq!(run(&["validate", s(&weak), "--level", "monoidal"]).0, 0);

    let (_, full) = run(&["gen", "group:Z3"]);
    let truncated = file(&dir, "cut.txt", &full[..full.len() / 2]);
    assert_eq!(run(&["validate", s(&truncated)]).0, 2);
    assert_eq!(run(&["validate", s(&dir.path().join("missing.txt"))]).0, 2);
}

#[test]
fn improve_writes_coherent_instances() {
    let dir = TempDir::new().unwrap();
    let weak = file(&dir, "weak.txt", "GENERATOR deloop:Z3:1:1\n");
    let out = dir.path().join("improved.txt");
    assert_eq!(run(&["improve", s(&weak), "--out", s(&out)]).0, 0);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("UNIT_I 2\n"), "{text}");
    assert_eq!(run(&["validate", s(&out), "--level", "coherent"]).0, 0);

    let z2 = file(&dir, "z2.txt", "GENERATOR group:Z2\n");
    let (code, improved) = run(&["improve", s(&z2)]);
    assert_eq!(code, 0);
    assert_eq!(parse_instance(&improved).unwrap(), parse_instance("GENERATOR group:Z2").unwrap());

    let bad = file(&dir, "bad.txt", "OBJECTS 1\nMORPHISMS 0 0 0\n");
    assert_eq!(run(&["improve", s(&bad)]).0, 2);
}

#[test]
fn improve_without_dual_data_chooses_one() {
    let dir = TempDir::new().unwrap();
    let (_, text) = run(&["gen", "deloop:Z3:1:1"]);
    let bare: String = text
        .lines()
        .filter(|l| !(l.starts_with("DUAL") || l.starts_with("UNIT_I") || l.starts_with("COUNIT_E")))
        .map(|l| format!("{l}\n"))
        .collect();
    let p = file(&dir, "bare.txt", &bare);
    assert_eq!(run(&["validate", s(&p), "--level", "coherent"]).0, 2);
    let (code, improved) = run(&["improve", s(&p)]);
    assert_eq!(code, 0);
    let inst = parse_instance(&improved).unwrap();
    // first isomorphisms in index order are 0, and then i' = -e = 0
    assert_eq!(inst.data.unwrap().unit_i(ObjId(0)), MorId(0));
}

#[test]
fn check_hom_on_deloop_shifts() {
    let dir = TempDir::new().unwrap();
    let c = file(&dir, "c.txt", "GENERATOR deloop:Z3:0:0\n");
    let good = file(&dir, "good.txt", "OB_MAP 0\nMOR_MAP 0 1 2\nF2 1\nF0 2\n");
    let (code, out) = run(&["check-hom", s(&good), s(&c), s(&c)]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("H1 0 PASS") && out.contains("H2 0 PASS"), "{out}");

    let bad = file(&dir, "bad.txt", "OB_MAP 0\nMOR_MAP 0 1 2\nF2 1\nF0 1\n");
    let (code, out) = run(&["check-hom", s(&bad), s(&c), s(&c)]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL LEFT_UNIT_SQUARE"), "{out}");

    let z2 = file(&dir, "z2.txt", "GENERATOR group:Z2\n");
    let id = file(&dir, "id.txt", "OB_MAP 0 1\nMOR_MAP 0 1\nF2 0 1 1 0\nF0 0\n");
    assert_eq!(run(&["check-hom", s(&id), s(&z2), s(&z2)]).0, 0);
}

#[test]
fn prove_zigzag_and_edge_cases() {
    let dir = TempDir::new().unwrap();
    let z1 = dir.path().join("z1.txt");
    let wire = dir.path().join("wire.txt");
    assert_eq!(run(&["gen", "diagram:zigzag1", "--out", s(&z1)]).0, 0);
    assert_eq!(run(&["gen", "diagram:wire:-", "--out", s(&wire)]).0, 0);
    let trace_path = dir.path().join("trace.txt");
    let (code, out) = run(&["prove", s(&z1), s(&wire), "--max-steps", "12", "--out", s(&trace_path)]);
    assert_eq!(code, 0, "{out}");
    let trace: RewriteTrace = fs::read_to_string(&trace_path).unwrap().parse().unwrap();
    assert!(trace.len() <= 12);
    assert_eq!(replay(&zigzag1_diagram(&iprime_diagram()).unwrap(), &trace).unwrap(), Diagram::wire(Wire::Down));

    let up = file(&dir, "up.txt", "TOP +\nBOTTOM +\n");
    assert_eq!(run(&["prove", s(&wire), s(&up)]).0, 2);

    let (code, out) = run(&["prove", s(&z1), s(&z1)]);
    assert_eq!(code, 0);
    assert!(out.contains("steps 0"), "{out}");

    // one step is not enough for the first zig-zag
    assert_eq!(run(&["prove", s(&z1), s(&wire), "--max-steps", "1"]).0, 3);

    let junk = file(&dir, "junk.txt", "TOP -\nLAYER CUPX\nBOTTOM -\n");
    assert_eq!(run(&["prove", s(&junk), s(&wire)]).0, 2);
}

#[test]
fn gen_is_seeded() {
    let a = run(&["gen", "diagram:random", "--seed", "5"]);
    let b = run(&["gen", "diagram:random", "--seed", "5"]);
    assert_eq!(a, b);
    assert!(a.1.parse::<Diagram>().is_ok());
    assert_eq!(run(&["gen", "nonsense:1"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}
