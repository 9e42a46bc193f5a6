use std::fs;
use std::path::PathBuf;

use lscat::cohom::{complex_to_json, parse_complex_json};
use lscat::finspace::{builtin, parse_space_json, space_to_json};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn space_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("parse_space_json") {
        if let Ok(space) = parse_space_json(&text) {
            assert_eq!(parse_space_json(&space_to_json(&space)).unwrap(), space, "{name}");
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
    assert!(parse_space_json(&fs_seed("parse_space_json", "cycle.json")).is_err());
}

#[test]
fn complex_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("parse_complex_json") {
        if let Ok(c) = parse_complex_json(&text) {
            let back = parse_complex_json(&complex_to_json(&c)).unwrap();
            assert_eq!(back.maximal_faces(), c.maximal_faces(), "{name}");
            accepted += 1;
        }
    }
    assert!(accepted >= 4);
    assert!(parse_complex_json(&fs_seed("parse_complex_json", "empty_face.json")).is_err());
}

#[test]
fn builtin_and_subset_seeds() {
    let known = seeds("parse_builtin")
        .iter()
        .filter(|(_, n)| builtin::parse(n).is_ok() || lscat::cohom::builtin::parse(n).is_ok())
        .count();
    assert!(known >= 9);
    let circle = builtin::circle4();
    for (_, text) in seeds("parse_subset") {
        if let Ok(a) = circle.parse_subset(&text) {
            assert!(a.is_subset(circle.points()));
        }
    }
}

fn fs_seed(target: &str, name: &str) -> String {
    seeds(target).into_iter().find(|(n, _)| n == name).unwrap().1
}
