//! The translation homomorphism `Φ: G → ℤ^J` and bounded-depth diagnostics.
//!
//! `J` is the set of generators whose level-1 permutation has an infinite
//! orbit. `Φ` counts net exponents of those generators; elements with
//! `Φ = 0` move only finitely many letters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::action::{act_letter, permute_letter, section_support, Tower};
use crate::alphabet::Letter;
use crate::automaton::GroupAutomaton;
use crate::dendroid::auto_radius;
use crate::error::{Error, Result};
use crate::word::{LevelWord, SignedWord};

/// Generators with an infinite orbit on level 1.
pub fn infinite_generators(aut: &GroupAutomaton) -> BTreeSet<String> {
    aut.input_states()
        .iter()
        .zip(aut.perms())
        .filter(|(_, p)| p.orbits().has_infinite())
        .map(|(s, _)| s.clone())
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TranslationVector(pub BTreeMap<String, i64>);

impl TranslationVector {
    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&v| v == 0)
    }

    /// Componentwise sum; both vectors must be indexed by the same `J`.
    pub fn add(&self, other: &TranslationVector) -> TranslationVector {
        let mut out = self.0.clone();
        for (k, v) in &other.0 {
            *out.entry(k.clone()).or_default() += v;
        }
        TranslationVector(out)
    }
}

impl fmt::Display for TranslationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {v}")?;
        }
        f.write_str(")")
    }
}

fn check_states(aut: &GroupAutomaton, w: &SignedWord) -> Result<()> {
    for g in w.gens() {
        aut.input_index(&g.state)?;
    }
    Ok(())
}

pub fn translation_vector(aut: &GroupAutomaton, w: &SignedWord) -> Result<TranslationVector> {
    check_states(aut, w)?;
    Ok(TranslationVector(
        infinite_generators(aut)
            .into_iter()
            .map(|j| {
                let e = w.exponent_sum(&j);
                (j, e)
            })
            .collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Support {
    /// Every moved letter, sorted.
    FiniteSupport(Vec<Letter>),
    /// A ray whose far tail is translated by `shift`.
    TailShift { ray: String, shift: i64 },
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Support::FiniteSupport(letters) => {
                let names: Vec<String> = letters.iter().map(ToString::to_string).collect();
                write!(f, "finite support {{{}}}", names.join(", "))
            }
            Support::TailShift { ray, shift } => write!(f, "tail shift {ray} by {shift:+}"),
        }
    }
}

/// Smallest radius accepted by [`support`] for `w`: beyond it every factor
/// translates rays rigidly, so the composite does too.
pub fn support_radius(aut: &GroupAutomaton, w: &SignedWord) -> u64 {
    let d = aut
        .perms()
        .iter()
        .map(|p| p.max_shift())
        .max()
        .unwrap_or(0)
        .max(1);
    auto_radius(aut.perms()) + w.len() as u64 * d
}

fn net_tail_shifts(aut: &GroupAutomaton, w: &SignedWord) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for ray in aut.alphabet().rays() {
        let mut total = 0;
        for g in w.gens() {
            let d = aut.perm(&g.state)?.shift(ray);
            total += if g.inverse { -d } else { d };
        }
        out.insert(ray.to_string(), total);
    }
    Ok(out)
}

fn moved_in_window(aut: &GroupAutomaton, w: &SignedWord, radius: u64) -> Result<Vec<Letter>> {
    let mut moved = Vec::new();
    for x in aut.alphabet().window(radius) {
        if permute_letter(aut, w, &x)? != x {
            moved.push(x);
        }
    }
    Ok(moved)
}

/// Level-1 support of `w`, computed on the window of the given radius.
pub fn support(aut: &GroupAutomaton, w: &SignedWord, radius: u64) -> Result<Support> {
    check_states(aut, w)?;
    let required = support_radius(aut, w);
    if radius < required {
        return Err(Error::RadiusTooSmall {
            given: radius,
            required,
        });
    }
    if let Some((ray, &shift)) = net_tail_shifts(aut, w)?.iter().find(|(_, &s)| s != 0) {
        return Ok(Support::TailShift {
            ray: ray.clone(),
            shift,
        });
    }
    moved_in_window(aut, w, radius).map(Support::FiniteSupport)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedEquality {
    pub equal: bool,
    /// A level word on which the two images differ.
    pub witness: Option<LevelWord>,
}

/// A letter moved by `u` on level-`k`'s alphabet, if any.
fn moved_letter(aut: &GroupAutomaton, u: &SignedWord) -> Result<Option<Letter>> {
    if let Some(all) = aut.alphabet().letters() {
        for x in all {
            if permute_letter(aut, u, &x)? != x {
                return Ok(Some(x));
            }
        }
        return Ok(None);
    }
    let radius = support_radius(aut, u);
    if let Some(x) = moved_in_window(aut, u, radius)?.into_iter().next() {
        return Ok(Some(x));
    }
    if let Some((ray, _)) = net_tail_shifts(aut, u)?.into_iter().find(|(_, s)| *s != 0) {
        return Ok(Some(Letter::ray(ray, radius as i64 + 1)));
    }
    Ok(None)
}

/// Whether `w1` and `w2` act identically on all words of length `≤ n`.
///
/// Works with `u = w1⁻¹w2`: a level word is moved by `u` exactly where the
/// two images differ. Only letters where the section of `u` can be
/// nontrivial are descended into.
pub fn bounded_equal(
    tower: &Tower,
    w1: &SignedWord,
    w2: &SignedWord,
    n: usize,
) -> Result<BoundedEquality> {
    let u = &w1.inverse() * w2;
    let mut frontier: Vec<(LevelWord, SignedWord)> = vec![(LevelWord::default(), u)];
    for k in 0..n {
        let aut = tower.level(k)?;
        let mut seen: BTreeSet<SignedWord> = BTreeSet::new();
        let mut next = Vec::new();
        for (prefix, s) in frontier {
            if s.is_identity() || !seen.insert(s.clone()) {
                continue;
            }
            check_states(aut, &s)?;
            if let Some(x) = moved_letter(aut, &s)? {
                return Ok(BoundedEquality {
                    equal: false,
                    witness: Some(prefix.concat(&LevelWord(vec![x]))),
                });
            }
            let candidates: Vec<Letter> = match aut.alphabet().letters() {
                Some(all) => all,
                None => section_support(aut, &s)?.into_iter().collect(),
            };
            for x in candidates {
                let (_, section) = act_letter(aut, &s, &x)?;
                if !section.is_identity() {
                    next.push((prefix.concat(&LevelWord(vec![x])), section));
                }
            }
        }
        frontier = next;
    }
    Ok(BoundedEquality {
        equal: true,
        witness: None,
    })
}
