//! Schreier balls on levels 1 and 2, printed as DOT.

use dendroid_automata::action::{schreier_ball, Tower};
use dendroid_automata::models::example_1mz_expz;

fn main() -> dendroid_automata::Result<()> {
    let t = Tower::autonomous(example_1mz_expz())?;
    let ball = schreier_ball(&t, &t.parse_word("*")?, 3)?;
    print!("{}", ball.to_dot());

    let ball = schreier_ball(&t, &t.parse_word("*,*")?, 4)?;
    eprintln!(
        "level 2, radius 4: {} vertices, {} edges",
        ball.vertices.len(),
        ball.edges.len()
    );
    Ok(())
}
