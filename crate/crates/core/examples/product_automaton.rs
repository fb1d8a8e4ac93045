//! The product of two automata acting on pair letters, checked against the
//! two-level tower.

use dendroid_automata::action::{act, product, Tower};
use dendroid_automata::models::example_1mz_expz;
use dendroid_automata::{Letter, LevelWord, SignedWord};

fn main() -> dendroid_automata::Result<()> {
    let e = example_1mz_expz();
    let p = product(&e, &e)?;
    let t = Tower::new(vec![e.clone(), e])?;
    let letters = [
        Letter::fin("*"),
        Letter::ray("z", -1),
        Letter::ray("z", 0),
        Letter::ray("z", 1),
    ];
    for c in ["g", "h"] {
        for x in &letters {
            for y in &letters {
                let (pair, section) = p.step(Some(c), &(x.clone(), y.clone()))?;
                let (image, tower_section) = act(
                    &t,
                    &SignedWord::generator(c),
                    &LevelWord(vec![x.clone(), y.clone()]),
                )?;
                assert_eq!(image, LevelWord(vec![pair.0.clone(), pair.1.clone()]));
                assert_eq!(
                    section
                        .clone()
                        .map(SignedWord::generator)
                        .unwrap_or_default(),
                    tower_section
                );
                if section.is_some() || pair != (x.clone(), y.clone()) {
                    let s = section.unwrap_or_else(|| "Id".into());
                    println!("{c} . ({x}, {y}) = ({}, {}) | {s}", pair.0, pair.1);
                }
            }
        }
    }
    Ok(())
}
