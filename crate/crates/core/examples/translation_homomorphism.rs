//! Translation vectors, level-1 supports and bounded-depth comparison.

use dendroid_automata::action::Tower;
use dendroid_automata::analysis::{
    bounded_equal, infinite_generators, support, support_radius, translation_vector,
};
use dendroid_automata::models::example_1mz_expz;
use dendroid_automata::SignedWord;

fn main() -> dendroid_automata::Result<()> {
    let e = example_1mz_expz();
    println!(
        "generators with an infinite orbit: {:?}",
        infinite_generators(&e)
    );
    for s in ["g", "g,g,h", "g,h,g^-1,h", "h,g,h,g^-1,g^-1"] {
        let w: SignedWord = s.parse()?;
        let r = support_radius(&e, &w);
        println!(
            "{s}: {}  {}",
            translation_vector(&e, &w)?,
            support(&e, &w, r)?
        );
    }

    let t = Tower::autonomous(e)?;
    let hh: SignedWord = "h,h".parse()?;
    for n in 1..=3 {
        let r = bounded_equal(&t, &hh, &SignedWord::identity(), n)?;
        match r.witness {
            Some(v) => println!("h^2 vs Id to depth {n}: differ at {v}"),
            None => println!("h^2 vs Id to depth {n}: equal"),
        }
    }
    Ok(())
}
