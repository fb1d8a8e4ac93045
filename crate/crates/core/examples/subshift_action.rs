//! The action of `C2 * C2 * C2` on the integers read off a subshift word.
//!
//! Usage: `cargo run --example subshift_action -- [max_len]`

use dendroid_automata::appendix::{
    appendix_schreier_segment, check_faithful, involution_failures, universal_word, SubshiftWord,
};

fn main() -> dendroid_automata::Result<()> {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let w = universal_word(max_len)?;
    let report = check_faithful(max_len, &w)?;
    println!(
        "window of {} letters, {} reduced words",
        w.len(),
        report.entries.len()
    );
    println!(
        "faithful: {}, involution failures: {}",
        report.faithful(),
        involution_failures(&w)?.len()
    );
    for e in report.entries.iter().take(6) {
        if let Some((n, m)) = e.moved {
            println!("  {} moves {n} to {m}", e.word);
        }
    }
    let piece: SubshiftWord = "abcbacb".parse()?;
    print!("{}", appendix_schreier_segment(&piece)?.to_dot());
    Ok(())
}
