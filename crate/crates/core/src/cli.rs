//! Command line front end. [`run`] parses arguments, dispatches to the
//! library and returns the process exit code: 0 on success, 1 when a check
//! fails (for example the automaton is not dendroid), 2 on usage or I/O
//! errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::action::{self, Tower};
use crate::analysis;
use crate::appendix::{self, SubshiftWord};
use crate::dendroid;
use crate::error::{Error, Result};
use crate::models;
use crate::word::SignedWord;

#[derive(Debug, Parser)]
#[command(
    name = "dendroid",
    version,
    about = "Dendroid group automata: validation, actions, Schreier graphs and walks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ModelArg {
    /// Built-in model name (`example`, `odometer`) or path to an automaton file.
    #[arg(long, default_value = "example")]
    model: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the three dendroid conditions.
    Validate {
        #[command(flatten)]
        model: ModelArg,
        /// Write the level-1 core graph with its certificate.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a signed word to a level word.
    Act {
        #[command(flatten)]
        model: ModelArg,
        /// Signed word such as `g,h^-1`.
        #[arg(short = 'g', long = "word")]
        word: String,
        /// Level word such as `*,z:0`.
        #[arg(short = 'w', long = "vertex")]
        vertex: String,
        #[arg(long)]
        json: bool,
    },
    /// Distinct sections of a signed word down to a level.
    Sections {
        #[command(flatten)]
        model: ModelArg,
        #[arg(short = 'g', long = "word")]
        word: String,
        #[arg(long, default_value_t = 3)]
        level: usize,
        #[arg(long)]
        json: bool,
    },
    /// Number of nontrivial sections per level.
    Activity {
        #[command(flatten)]
        model: ModelArg,
        /// Generator to profile; all generators when omitted.
        #[arg(short = 'g', long = "state")]
        state: Option<String>,
        #[arg(long, default_value_t = 12)]
        level: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply a word through the product of two automata to a pair letter.
    Product {
        #[command(flatten)]
        model: ModelArg,
        /// Second factor; defaults to the first.
        #[arg(long)]
        with: Option<String>,
        #[arg(short = 'g', long = "word")]
        word: String,
        /// Pair letter `x,y`.
        #[arg(short = 'w', long = "pair")]
        pair: String,
        #[arg(long)]
        json: bool,
    },
    /// Ball in the Schreier graph of a level.
    Schreier {
        #[command(flatten)]
        model: ModelArg,
        /// Level of the center; defaults to the length of the center.
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        center: String,
        #[arg(long, default_value_t = 3)]
        radius: u64,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Monte-Carlo return probabilities of the simple random walk on a level.
    Walk {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        center: String,
        #[arg(long, default_value_t = 8)]
        steps: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Translation vector of a signed word.
    Phi {
        #[command(flatten)]
        model: ModelArg,
        #[arg(short = 'g', long = "word")]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Level-1 support of a signed word.
    Support {
        #[command(flatten)]
        model: ModelArg,
        #[arg(short = 'g', long = "word")]
        word: String,
        /// Window radius; the smallest admissible one when omitted.
        #[arg(long)]
        radius: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Faithfulness, involution and exclusivity checks of the subshift action.
    Appendix {
        /// Maximal length of reduced words to check.
        #[arg(long, default_value_t = 6)]
        level: usize,
        /// Margin on each side of the universal word.
        #[arg(long)]
        margin: Option<usize>,
        /// Subshift word for the DOT segment; the universal word when omitted.
        #[arg(short = 'w', long = "word")]
        word: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List built-in models, or print one as an automaton file.
    Examples {
        #[arg(long)]
        model: Option<String>,
    },
}

/// Runs the command line with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn tower(model: &ModelArg) -> Result<Tower> {
    Tower::autonomous(models::resolve(&model.model)?)
}

fn signed(s: &str) -> Result<SignedWord> {
    s.parse()
}

/// Returns whether every check passed.
fn dispatch(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Validate { model, dot, json } => {
            let aut = models::resolve(&model.model)?;
            let report = aut.validate_dendroid();
            if let Some(path) = dot {
                let verdict = dendroid::is_dendroid_family(aut.perms())?;
                write_file(&path, &dendroid::verdict_dot(&verdict, aut.input_states()))?;
            }
            if json {
                emit_json(out, &report)?;
            } else {
                write!(out, "{report}")?;
            }
            Ok(report.is_dendroid)
        }
        Command::Act {
            model,
            word,
            vertex,
            json,
        } => {
            let t = tower(&model)?;
            let g = signed(&word)?;
            let v = t.parse_word(&vertex)?;
            let (image, section) = action::act(&t, &g, &v)?;
            if json {
                emit_json(
                    out,
                    &serde_json::json!({ "image": image, "section": section }),
                )?;
            } else {
                writeln!(out, "{image} | section: {section}")?;
            }
            Ok(true)
        }
        Command::Sections {
            model,
            word,
            level,
            json,
        } => {
            let t = tower(&model)?;
            let s = action::section_set(&t, &signed(&word)?, level)?;
            if json {
                emit_json(out, &s)?;
            } else {
                for (k, set) in s.levels.iter().enumerate() {
                    let names: Vec<String> = set.iter().map(ToString::to_string).collect();
                    writeln!(out, "level {k}: {}", names.join("  "))?;
                }
                let all: Vec<String> = s.sections.iter().map(ToString::to_string).collect();
                writeln!(out, "all: {}", all.join("  "))?;
                writeln!(out, "saturated: {}", s.saturated)?;
            }
            Ok(true)
        }
        Command::Activity {
            model,
            state,
            level,
            json,
        } => {
            let t = tower(&model)?;
            let states: Vec<String> = match state {
                Some(s) => vec![s],
                None => t.generators().to_vec(),
            };
            let mut rows = Vec::new();
            for s in states {
                let profile = action::activity_profile(&t, &s, level)?;
                rows.push((s, profile));
            }
            if json {
                emit_json(
                    out,
                    &rows
                        .iter()
                        .cloned()
                        .collect::<std::collections::BTreeMap<_, _>>(),
                )?;
            } else {
                for (s, profile) in rows {
                    let nums: Vec<String> = profile.iter().map(u64::to_string).collect();
                    writeln!(out, "{s}: {}", nums.join(" "))?;
                }
            }
            Ok(true)
        }
        Command::Product {
            model,
            with,
            word,
            pair,
            json,
        } => {
            let first = models::resolve(&model.model)?;
            let second = match with {
                Some(m) => models::resolve(&m)?,
                None => first.clone(),
            };
            let p = action::product(&first, &second)?;
            let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
            let [x, y] = parts.as_slice() else {
                return Err(Error::parse(pair.as_str(), "expected a pair `x,y`"));
            };
            let pair = (
                first.alphabet().parse_letter(x)?,
                second.alphabet().parse_letter(y)?,
            );
            let ((x2, y2), section) = p.act_pair(&signed(&word)?, &pair)?;
            if json {
                emit_json(
                    out,
                    &serde_json::json!({ "image": [x2, y2], "section": section }),
                )?;
            } else {
                writeln!(out, "({x2}, {y2}) | section: {section}")?;
            }
            Ok(true)
        }
        Command::Schreier {
            model,
            level,
            center,
            radius,
            dot,
            json,
        } => {
            let t = tower(&model)?;
            let c = t.parse_word(&center)?;
            check_level(level, c.len())?;
            let ball = action::schreier_ball(&t, &c, radius)?;
            if let Some(path) = dot {
                write_file(&path, &ball.to_dot())?;
            }
            if json {
                emit_json(out, &ball)?;
            } else {
                writeln!(
                    out,
                    "vertices: {}  edges: {}",
                    ball.vertices.len(),
                    ball.edges.len()
                )?;
                for (v, d) in ball.vertices.iter().zip(&ball.distances) {
                    writeln!(out, "  {d}  {v}")?;
                }
                for &(a, g, b) in &ball.edges {
                    writeln!(
                        out,
                        "  {} -{}-> {}",
                        ball.vertices[a], ball.generators[g], ball.vertices[b]
                    )?;
                }
            }
            Ok(true)
        }
        Command::Walk {
            model,
            level,
            center,
            steps,
            trials,
            seed,
            json,
        } => {
            let t = tower(&model)?;
            let c = t.parse_word(&center)?;
            check_level(level, c.len())?;
            let stats = action::walk_return_stats(&t, c.len(), &c, steps, trials, seed)?;
            if json {
                emit_json(out, &stats)?;
            } else {
                writeln!(out, "steps  returns  estimate  std_error")?;
                for (k, (r, p)) in stats.returns.iter().zip(stats.estimates()).enumerate() {
                    writeln!(
                        out,
                        "{:>5}  {r:>7}  {p:.6}  {:.6}",
                        2 * (k + 1),
                        stats.std_error(k + 1)
                    )?;
                }
            }
            Ok(true)
        }
        Command::Phi { model, word, json } => {
            let aut = models::resolve(&model.model)?;
            let phi = analysis::translation_vector(&aut, &signed(&word)?)?;
            if json {
                emit_json(out, &phi)?;
            } else {
                writeln!(out, "{phi}")?;
            }
            Ok(true)
        }
        Command::Support {
            model,
            word,
            radius,
            json,
        } => {
            let aut = models::resolve(&model.model)?;
            let w = signed(&word)?;
            let r = radius.unwrap_or_else(|| analysis::support_radius(&aut, &w));
            let s = analysis::support(&aut, &w, r)?;
            if json {
                emit_json(out, &s)?;
            } else {
                writeln!(out, "{s}")?;
            }
            Ok(true)
        }
        Command::Appendix {
            level,
            margin,
            word,
            dot,
            json,
        } => {
            let w = appendix::universal_word_with_margin(level, margin.unwrap_or(level + 2))?;
            let report = appendix::check_faithful(level, &w)?;
            let involution = appendix::involution_failures(&w)?;
            let exclusive = appendix::exclusivity_violations(&w);
            if let Some(path) = dot {
                let seg_word = match word {
                    Some(s) => s.parse::<SubshiftWord>()?,
                    None => w.clone(),
                };
                write_file(
                    &path,
                    &appendix::appendix_schreier_segment(&seg_word)?.to_dot(),
                )?;
            }
            let ok = report.faithful() && involution.is_empty() && exclusive.is_empty();
            if json {
                emit_json(
                    out,
                    &serde_json::json!({
                        "word_length": w.len(),
                        "faithful": report.faithful(),
                        "involution_failures": involution,
                        "exclusivity_violations": exclusive,
                        "entries": report.entries,
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "universal word: {} letters on [{}, {}]",
                    w.len(),
                    w.lo(),
                    w.hi()
                )?;
                writeln!(out, "reduced words checked: {}", report.entries.len())?;
                writeln!(out, "faithful: {}", report.faithful())?;
                for v in report.failures() {
                    writeln!(out, "  acts trivially: {v}")?;
                }
                writeln!(out, "involution failures: {}", involution.len())?;
                writeln!(out, "exclusivity violations: {}", exclusive.len())?;
            }
            Ok(ok)
        }
        Command::Examples { model } => {
            match model {
                Some(name) => write!(out, "{}", models::by_name(&name)?.to_json())?,
                None => {
                    for (name, about) in models::BUILTIN {
                        writeln!(out, "{name:<10} {about}")?;
                    }
                }
            }
            Ok(true)
        }
    }
}

fn check_level(level: Option<usize>, len: usize) -> Result<()> {
    match level {
        Some(l) if l != len => Err(Error::Incompatible(format!(
            "--level {l} does not match a center of length {len}"
        ))),
        _ => Ok(()),
    }
}
