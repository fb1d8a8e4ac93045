//! Dendroid group automata over finitely described countable alphabets.
//!
//! The crate models group automata `τ: A₊ × X → X × B₊` whose alphabet `X`
//! is a finite set of named letters plus integer-indexed rays. On top of
//! that it provides
//!
//! * [`permutation`]: finitely described permutations and their orbits,
//! * [`dendroid`]: the tree criterion for dendroid permutation families,
//! * [`automaton`]: automata, dendroid validation and the JSON file format,
//! * [`action`]: the self-similar action on level words, sections,
//!   activity, product automata, Schreier balls and random walks,
//! * [`analysis`]: the translation homomorphism to `ℤ^J` and support checks,
//! * [`appendix`]: a faithful action of `C₂ * C₂ * C₂` on `ℤ` built from a
//!   subshift word,
//! * [`cli`]: the command line front end behind the `dendroid` binary.

pub mod action;
pub mod alphabet;
pub mod analysis;
pub mod appendix;
pub mod automaton;
pub mod cli;
pub mod dendroid;
pub mod dot;
pub mod error;
pub mod models;
pub mod permutation;
pub mod word;

pub use alphabet::{AlphabetSpec, Letter};
pub use automaton::GroupAutomaton;
pub use error::{Error, Result};
pub use permutation::FdPerm;
pub use word::{Gen, LevelWord, SignedWord};
