//! The shipped corpus is exactly what the constructors produce, and every
//! file survives a load/store round trip byte for byte.

use std::fs;
use std::path::PathBuf;

use froblab::cli::write_corpus;
use froblab::corpus::corpus_files;
use froblab::io;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn shipped_files_round_trip() {
    for (rel, _) in corpus_files() {
        let path = corpus_dir().join(rel);
        let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{rel}: {e}"));
        let bundle = io::parse_str(&text, rel).unwrap_or_else(|e| panic!("{rel}: {e}"));
        assert_eq!(io::store(&bundle), text, "{rel} changed on round trip");
    }
}

#[test]
fn shipped_files_match_constructors() {
    let tmp = tempfile::tempdir().unwrap();
    let written = write_corpus(tmp.path()).unwrap();
    for rel in &written {
        let fresh = fs::read(tmp.path().join(rel)).unwrap();
        let shipped = fs::read(corpus_dir().join(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"));
        assert!(fresh == shipped, "{rel} is stale; regenerate with `froblab write-corpus corpus`");
    }
    let mut on_disk = Vec::new();
    for sub in ["", "negative"] {
        for entry in fs::read_dir(corpus_dir().join(sub)).unwrap() {
            let name = entry.unwrap().file_name().into_string().unwrap();
            if name.ends_with(".json") {
                on_disk.push(if sub.is_empty() { name } else { format!("{sub}/{name}") });
            }
        }
    }
    on_disk.sort();
    let mut expected = written.clone();
    expected.sort();
    assert_eq!(on_disk, expected);
}

#[test]
fn schema_files_cover_every_kind() {
    for kind in ["algebra", "aring", "module", "frobenius", "hopf", "action", "coring"] {
        let path = corpus_dir().join("schema").join(format!("{kind}.schema.json"));
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["properties"]["kind"]["const"], kind);
    }
}
