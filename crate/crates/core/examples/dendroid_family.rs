//! Tree test for permutation families, with the finite cycle-diagram check
//! and the DOT rendering of the core graph.

use std::sync::Arc;

use dendroid_automata::dendroid::{cycle_diagram_oracle, is_dendroid_family, verdict_dot};
use dendroid_automata::{AlphabetSpec, FdPerm, Letter};

fn main() -> dendroid_automata::Result<()> {
    // g = z + 1, h swaps * and z:0
    let x = Arc::new(AlphabetSpec::new(["*"], ["z"])?);
    let g = FdPerm::translation(x.clone(), "z", 1)?;
    let h = FdPerm::from_cycles(x.clone(), &[vec![Letter::fin("*"), Letter::ray("z", 0)]])?;
    let names = vec!["g".to_string(), "h".to_string()];
    let verdict = is_dendroid_family(&[g.clone(), h])?;
    println!("{}", verdict.describe(&names));
    for orbit in g.orbits().infinite() {
        println!(
            "g orbit: {} -> {}, shift {}",
            orbit.entry, orbit.exit, orbit.shift
        );
    }

    // shifting by 2 splits the ray into two strands
    let g2 = FdPerm::translation(x.clone(), "z", 2)?;
    let h = FdPerm::from_cycles(x, &[vec![Letter::fin("*"), Letter::ray("z", 0)]])?;
    println!("{}", is_dendroid_family(&[g2, h])?.describe(&names));

    // three transpositions of a 4-letter alphabet forming a path, and a triangle
    let f = Arc::new(AlphabetSpec::finite(["p", "q", "r", "s"])?);
    let swap =
        |a: &str, b: &str| FdPerm::from_cycles(f.clone(), &[vec![Letter::fin(a), Letter::fin(b)]]);
    let path = [swap("p", "q")?, swap("q", "r")?, swap("r", "s")?];
    let triangle = [swap("p", "q")?, swap("q", "r")?, swap("r", "p")?];
    for (name, family) in [("path", &path), ("triangle", &triangle)] {
        let v = is_dendroid_family(family)?;
        println!(
            "{name}: dendroid {} (cycle diagram {})",
            v.is_dendroid,
            cycle_diagram_oracle(family)?
        );
    }
    let names: Vec<String> = ["s1", "s2", "s3"].iter().map(|s| s.to_string()).collect();
    print!("{}", verdict_dot(&is_dendroid_family(&triangle)?, &names));
    Ok(())
}
