//! Automaton files on disk.

use dendroid_automata::appendix::{universal_word, window_automaton};
use dendroid_automata::models::{example_1mz_expz, odometer};
use dendroid_automata::{Error, GroupAutomaton};

#[test]
fn save_then_load_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    for aut in [
        example_1mz_expz(),
        odometer(),
        window_automaton(&universal_word(3).unwrap()).unwrap(),
    ] {
        let path = dir.path().join("aut.json");
        aut.save(&path).unwrap();
        let back = GroupAutomaton::load(&path).unwrap();
        assert_eq!(back.to_file(), aut.to_file());
        assert_eq!(std::fs::read_to_string(&path).unwrap(), back.to_json());
    }
}

#[test]
fn duplicate_restriction_is_rejected() {
    let text = example_1mz_expz().to_json().replace(
        "\"restrictions\": [",
        "\"restrictions\": [\n    [\"g\", \"*\", \"g\"],",
    );
    let err = GroupAutomaton::from_json(&text).unwrap_err();
    assert!(err.to_string().contains("duplicate restriction"), "{err}");
}

#[test]
fn schema_errors_carry_position() {
    let text = example_1mz_expz()
        .to_json()
        .replace("\"window\": 0", "\"windw\": 0");
    let err = GroupAutomaton::from_json(&text).unwrap_err();
    assert!(err.to_string().contains("line "), "{err}");
    let err = GroupAutomaton::from_json("{ \"alphabet\": 3 }").unwrap_err();
    assert!(
        matches!(err, Error::Schema { .. } | Error::Json(_)),
        "{err}"
    );
}

#[test]
fn invalid_permutation_in_file() {
    let text = example_1mz_expz().to_json().replacen(
        "\"z:0\",\n          \"*\"",
        "\"z:0\",\n          \"z:5\"",
        1,
    );
    assert_ne!(text, example_1mz_expz().to_json());
    assert!(GroupAutomaton::from_json(&text).is_err());
}
