//! Validates the built-in dendroid automaton and two broken variants.

use dendroid_automata::models::example_1mz_expz;
use dendroid_automata::GroupAutomaton;

fn main() -> dendroid_automata::Result<()> {
    let aut = example_1mz_expz();
    print!("{}", aut.validate_dendroid());

    // a second restriction onto h
    let mut extra = aut.to_file();
    extra
        .restrictions
        .push(("g".into(), "z:3".parse()?, "h".into()));
    println!("\nwith (g, z:3) -> h added:");
    print!("{}", GroupAutomaton::from_file(extra)?.validate_dendroid());

    // the restriction of g moved onto its infinite orbit
    let mut moved = aut.to_file();
    moved.restrictions[0].1 = "z:3".parse()?;
    println!("\nwith (g, *) -> h moved to (g, z:3):");
    print!("{}", GroupAutomaton::from_file(moved)?.validate_dendroid());
    Ok(())
}
