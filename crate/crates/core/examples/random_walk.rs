//! Return probabilities of the simple random walk on Schreier graphs.
//!
//! Usage: `cargo run --example random_walk -- [trials] [seed]`

use dendroid_automata::action::{walk_return_stats, Tower};
use dendroid_automata::models::{example_1mz_expz, odometer};

fn main() -> dendroid_automata::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    let t = Tower::autonomous(example_1mz_expz())?;
    for center in ["*", "*,*", "*,*,*"] {
        let start = t.parse_word(center)?;
        let stats = walk_return_stats(&t, start.len(), &start, 20, trials, seed)?;
        let p: Vec<String> = stats
            .estimates()
            .iter()
            .map(|p| format!("{p:.3}"))
            .collect();
        println!("example level {}: {}", start.len(), p.join(" "));
    }
    let o = Tower::autonomous(odometer())?;
    let start = o.parse_word("0,0,0")?;
    let stats = walk_return_stats(&o, 3, &start, 8, trials, seed)?;
    for (k, p) in stats.estimates().iter().enumerate() {
        println!(
            "odometer level 3, p{} = {p:.4} +- {:.4}",
            2 * (k + 1),
            stats.std_error(k + 1)
        );
    }
    Ok(())
}
