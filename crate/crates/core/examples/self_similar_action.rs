//! Action on level words, sections and activity growth.

use dendroid_automata::action::{act, activity_profile, section_set, Tower};
use dendroid_automata::models::{example_1mz_expz, odometer};

fn main() -> dendroid_automata::Result<()> {
    let t = Tower::autonomous(example_1mz_expz())?;
    for (g, v) in [
        ("g", "*,*"),
        ("h", "*,z:5"),
        ("g,h^-1", "z:0,*,z:-2"),
        ("h,h", "*,z:5"),
    ] {
        let (image, section) = act(&t, &g.parse()?, &t.parse_word(v)?)?;
        println!("{g} . {v} = {image} | section: {section}");
    }

    let sections = section_set(&t, &"g,h".parse()?, 4)?;
    let all: Vec<String> = sections.sections.iter().map(ToString::to_string).collect();
    println!(
        "sections of g,h: {} (saturated: {})",
        all.join("  "),
        sections.saturated
    );

    println!("activity of g: {:?}", activity_profile(&t, "g", 10)?);
    let o = Tower::autonomous(odometer())?;
    println!(
        "activity of the odometer: {:?}",
        activity_profile(&o, "a", 10)?
    );
    let (image, _) = act(&o, &"a^5".parse()?, &o.parse_word("0,0,0,0")?)?;
    println!("a^5 . 0000 = {image}");
    Ok(())
}
