//! Built-in automata.

use std::sync::Arc;

use crate::alphabet::{AlphabetSpec, Letter};
use crate::automaton::GroupAutomaton;
use crate::error::{Error, Result};
use crate::permutation::FdPerm;

/// Names accepted by [`by_name`].
pub const BUILTIN: [(&str, &str); 2] = [
    (
        "example",
        "dendroid automaton of (1-z)exp(z) on X = Z ∪ {*}, states g, h",
    ),
    ("odometer", "binary adding machine on X = {0, 1}, state a"),
];

/// The dendroid automaton of `(1 - z)·exp(z)` on `X = ℤ ∪ {*}`:
///
/// ```text
/// τ(g, z) = (z + 1, Id)    τ(g, *) = (*, h)
/// τ(h, *) = (0, g)         τ(h, 0) = (*, Id)
/// ```
///
/// and `τ(q, x) = (x, Id)` otherwise.
pub fn example_1mz_expz() -> GroupAutomaton {
    let alphabet = Arc::new(AlphabetSpec::new(["*"], ["z"]).expect("valid alphabet"));
    let g = FdPerm::translation(alphabet.clone(), "z", 1).expect("valid translation");
    let h = FdPerm::from_cycles(
        alphabet.clone(),
        &[vec![Letter::fin("*"), Letter::ray("z", 0)]],
    )
    .expect("valid swap");
    GroupAutomaton::new(
        alphabet,
        vec!["g".into(), "h".into()],
        vec!["g".into(), "h".into()],
        vec![g, h],
        vec![
            ("g".into(), Letter::fin("*"), "h".into()),
            ("h".into(), Letter::fin("*"), "g".into()),
        ],
    )
    .expect("valid automaton")
}

/// Binary odometer: `a(0) = 1` with section `Id`, `a(1) = 0` with section `a`.
/// Words are read least significant digit first.
pub fn odometer() -> GroupAutomaton {
    let alphabet = Arc::new(AlphabetSpec::finite(["0", "1"]).expect("valid alphabet"));
    let a = FdPerm::from_cycles(
        alphabet.clone(),
        &[vec![Letter::fin("0"), Letter::fin("1")]],
    )
    .expect("valid swap");
    GroupAutomaton::new(
        alphabet,
        vec!["a".into()],
        vec!["a".into()],
        vec![a],
        vec![("a".into(), Letter::fin("1"), "a".into())],
    )
    .expect("valid automaton")
}

pub fn by_name(name: &str) -> Result<GroupAutomaton> {
    match name {
        "example" => Ok(example_1mz_expz()),
        "odometer" => Ok(odometer()),
        other => Err(Error::Incompatible(format!(
            "no built-in model named `{other}`"
        ))),
    }
}

/// A built-in name or a path to an automaton file.
pub fn resolve(name_or_path: &str) -> Result<GroupAutomaton> {
    if BUILTIN.iter().any(|(n, _)| *n == name_or_path) {
        by_name(name_or_path)
    } else {
        GroupAutomaton::load(name_or_path)
    }
}
