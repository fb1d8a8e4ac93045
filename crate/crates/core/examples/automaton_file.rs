//! Builds an automaton by hand, writes it as JSON and reads it back.

use std::sync::Arc;

use dendroid_automata::{AlphabetSpec, FdPerm, GroupAutomaton, Letter};

fn main() -> dendroid_automata::Result<()> {
    // two rays, each translated by its own generator; c swaps the two tips
    let x = Arc::new(AlphabetSpec::new(["o"], ["u", "v"])?);
    let a = FdPerm::translation(x.clone(), "u", 1)?;
    let b = FdPerm::translation(x.clone(), "v", 1)?;
    let c = FdPerm::from_cycles(
        x.clone(),
        &[vec![
            Letter::fin("o"),
            Letter::ray("u", 0),
            Letter::ray("v", 0),
        ]],
    )?;
    let aut = GroupAutomaton::new(
        x,
        vec!["a".into(), "b".into(), "c".into()],
        vec!["a".into(), "b".into(), "c".into()],
        vec![a, b, c],
        vec![
            ("c".into(), Letter::fin("o"), "a".into()),
            ("c".into(), Letter::ray("u", 0), "b".into()),
        ],
    )?;
    let text = aut.to_json();
    print!("{text}");
    let back = GroupAutomaton::from_json(&text)?;
    print!("{}", back.validate_dendroid());
    Ok(())
}
