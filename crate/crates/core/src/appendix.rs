//! An action of `C₂ * C₂ * C₂ = ⟨a, b, c | a², b², c²⟩` on `ℤ` read off a
//! word `w` with no two equal adjacent letters:
//!
//! ```text
//! s(n) = n + 1   if w_n = s
//!        n - 1   if w_{n-1} = s
//!        n       otherwise
//! ```
//!
//! Only a finite window of `w` is ever stored, so indices next to the
//! window edge are flagged as unreliable.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::alphabet::{AlphabetSpec, Letter};
use crate::automaton::GroupAutomaton;
use crate::dot::DotGraph;
use crate::error::{Error, Result};
use crate::permutation::FdPerm;

pub const LETTERS: [char; 3] = ['a', 'b', 'c'];

/// Edge color of each letter in DOT output.
pub fn letter_color(s: char) -> &'static str {
    match s {
        'a' => "blue",
        'b' => "red",
        _ => "green",
    }
}

/// A window `w_lo … w_hi` of a word in the subshift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubshiftWord {
    letters: Vec<char>,
    lo: i64,
}

impl SubshiftWord {
    pub fn new(letters: &str, lo: i64) -> Result<Self> {
        let letters: Vec<char> = letters.chars().collect();
        if letters.is_empty() {
            return Err(Error::parse("", "empty subshift word"));
        }
        if let Some(c) = letters.iter().find(|c| !LETTERS.contains(c)) {
            return Err(Error::parse(
                letters.iter().collect::<String>(),
                format!("letter `{c}` is not one of a, b, c"),
            ));
        }
        if let Some(i) = letters.windows(2).position(|p| p[0] == p[1]) {
            return Err(Error::parse(
                letters.iter().collect::<String>(),
                format!(
                    "repeated letter `{}` at indices {} and {}",
                    letters[i],
                    lo + i as i64,
                    lo + i as i64 + 1
                ),
            ));
        }
        Ok(SubshiftWord { letters, lo })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.letters.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn at(&self, n: i64) -> Option<char> {
        usize::try_from(n - self.lo)
            .ok()
            .and_then(|i| self.letters.get(i).copied())
    }

    /// Start indices of every occurrence of `v`.
    pub fn occurrences(&self, v: &str) -> Vec<i64> {
        let v: Vec<char> = v.chars().collect();
        if v.is_empty() || v.len() > self.letters.len() {
            return Vec::new();
        }
        self.letters
            .windows(v.len())
            .enumerate()
            .filter(|(_, f)| *f == v.as_slice())
            .map(|(i, _)| self.lo + i as i64)
            .collect()
    }
}

impl fmt::Display for SubshiftWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl FromStr for SubshiftWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubshiftWord::new(s, 0)
    }
}

/// Nonempty reduced words of length `≤ max_len`, shortest first, then
/// lexicographic.
pub fn reduced_words(max_len: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut layer: Vec<String> = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &layer {
            for s in LETTERS {
                if !v.ends_with(s) {
                    next.push(format!("{v}{s}"));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn other_than(x: Option<char>, y: Option<char>) -> char {
    LETTERS
        .into_iter()
        .find(|&s| Some(s) != x && Some(s) != y)
        .expect("three letters")
}

/// Word containing every reduced word of length `≤ max_len`, flanked by
/// `max_len + 2` letters on each side. The core starts at index 0.
pub fn universal_word(max_len: usize) -> Result<SubshiftWord> {
    universal_word_with_margin(max_len, max_len + 2)
}

pub fn universal_word_with_margin(max_len: usize, margin: usize) -> Result<SubshiftWord> {
    if max_len == 0 {
        return Err(Error::Incompatible(
            "the maximal length must be at least 1".into(),
        ));
    }
    let mut core: Vec<char> = Vec::new();
    for v in reduced_words(max_len) {
        let first = v.chars().next();
        if core.last().copied() == first {
            core.push(other_than(core.last().copied(), v.chars().nth(1)));
        }
        core.extend(v.chars());
    }
    let mut left: Vec<char> = Vec::with_capacity(margin);
    let mut edge = core.first().copied();
    for _ in 0..margin {
        let s = other_than(edge, None);
        left.push(s);
        edge = Some(s);
    }
    left.reverse();
    let mut right = Vec::with_capacity(margin);
    let mut edge = core.last().copied();
    for _ in 0..margin {
        let s = other_than(edge, None);
        right.push(s);
        edge = Some(s);
    }
    let text: String = left.iter().chain(&core).chain(&right).collect();
    SubshiftWord::new(&text, -(margin as i64))
}

/// The permutation of a letter restricted to the points `lo ..= hi + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowPerm {
    pub letter: char,
    pub lo: i64,
    pub images: Vec<i64>,
    /// False where the image depends on letters outside the window.
    pub reliable: Vec<bool>,
}

impl WindowPerm {
    pub fn points(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.lo + self.images.len() as i64 - 1
    }

    pub fn apply(&self, n: i64) -> Option<i64> {
        usize::try_from(n - self.lo)
            .ok()
            .and_then(|i| self.images.get(i).copied())
    }
}

pub fn appendix_perm(s: char, w: &SubshiftWord) -> Result<WindowPerm> {
    if !LETTERS.contains(&s) {
        return Err(Error::parse(s.to_string(), "not one of a, b, c"));
    }
    let (lo, hi) = (w.lo(), w.hi());
    let mut images = Vec::with_capacity(w.len() + 1);
    let mut reliable = Vec::with_capacity(w.len() + 1);
    for n in lo..=hi + 1 {
        let forward = w.at(n) == Some(s);
        let backward = w.at(n - 1) == Some(s);
        assert!(!(forward && backward), "both cases apply at {n}");
        images.push(if forward {
            n + 1
        } else if backward {
            n - 1
        } else {
            n
        });
        // the image of an edge point is known only if one of the known letters is s
        reliable.push((n > lo || forward) && (n <= hi || backward));
    }
    Ok(WindowPerm {
        letter: s,
        lo,
        images,
        reliable,
    })
}

/// Indices where both the forward and the backward case would apply.
/// Empty for every valid word.
pub fn exclusivity_violations(w: &SubshiftWord) -> Vec<(char, i64)> {
    let mut out = Vec::new();
    for s in LETTERS {
        for n in w.lo()..=w.hi() + 1 {
            if w.at(n) == Some(s) && w.at(n - 1) == Some(s) {
                out.push((s, n));
            }
        }
    }
    out
}

/// Points `n` with `s(s(n)) ≠ n`, over all letters.
pub fn involution_failures(w: &SubshiftWord) -> Result<Vec<(char, i64)>> {
    let mut out = Vec::new();
    for s in LETTERS {
        let p = appendix_perm(s, w)?;
        for n in p.points() {
            let m = p.apply(n).expect("in window");
            if p.apply(m) != Some(n) {
                out.push((s, n));
            }
        }
    }
    Ok(out)
}

/// Image of `n` under `v = v₁…v_k` with `v₁` applied first.
pub fn apply_word(perms: &[WindowPerm; 3], v: &str, n: i64) -> Option<i64> {
    v.chars().try_fold(n, |m, s| {
        let i = LETTERS.iter().position(|&t| t == s)?;
        perms[i].apply(m)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaithfulEntry {
    pub word: String,
    /// First interior index moved by the word, with its image.
    pub moved: Option<(i64, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FaithfulReport {
    pub max_len: usize,
    pub entries: Vec<FaithfulEntry>,
}

impl FaithfulReport {
    pub fn faithful(&self) -> bool {
        self.entries.iter().all(|e| e.moved.is_some())
    }

    pub fn failures(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.moved.is_none())
            .map(|e| e.word.as_str())
            .collect()
    }
}

/// Checks that every nonempty reduced word of length `≤ max_len` moves some
/// index of `w`. Each such word must occur in `w` at distance at least
/// `max_len + 2` from both ends. Indices within `|v|` of the window edge are
/// not used as evidence.
pub fn check_faithful(max_len: usize, w: &SubshiftWord) -> Result<FaithfulReport> {
    let margin = max_len as i64 + 2;
    let words = reduced_words(max_len);
    for v in &words {
        let k = v.len() as i64;
        let ok = w
            .occurrences(v)
            .iter()
            .any(|&i| i - w.lo() >= margin && w.hi() - (i + k - 1) >= margin);
        if !ok {
            return Err(Error::InsufficientMargin {
                word: v.clone(),
                required: margin as u64,
            });
        }
    }
    let perms = [
        appendix_perm('a', w)?,
        appendix_perm('b', w)?,
        appendix_perm('c', w)?,
    ];
    let entries = words
        .into_iter()
        .map(|v| {
            let k = v.len() as i64;
            let moved = (w.lo() + k..=w.hi() + 1 - k).find_map(|n| {
                apply_word(&perms, &v, n)
                    .filter(|&m| m != n)
                    .map(|m| (n, m))
            });
            FaithfulEntry { word: v, moved }
        })
        .collect();
    Ok(FaithfulReport { max_len, entries })
}

/// The Schreier graph of the window: vertices `lo ..= hi + 1`, one edge per
/// letter and 2-cycle, loops at fixed points.
#[derive(Debug, Clone, Serialize)]
pub struct AppendixSegment {
    pub vertices: Vec<i64>,
    /// `(n, s, s(n))` with `n ≤ s(n)`.
    pub edges: Vec<(i64, char, i64)>,
}

pub fn appendix_schreier_segment(w: &SubshiftWord) -> Result<AppendixSegment> {
    let vertices: Vec<i64> = (w.lo()..=w.hi() + 1).collect();
    let mut edges = Vec::new();
    let perms = [
        appendix_perm('a', w)?,
        appendix_perm('b', w)?,
        appendix_perm('c', w)?,
    ];
    for &n in &vertices {
        for p in &perms {
            let m = p.apply(n).expect("in window");
            if n <= m {
                edges.push((n, p.letter, m));
            }
        }
    }
    Ok(AppendixSegment { vertices, edges })
}

impl AppendixSegment {
    pub fn to_dot(&self) -> String {
        let mut g = DotGraph::new("appendix", false);
        let lo = self.vertices.first().copied().unwrap_or(0);
        for n in &self.vertices {
            g.node(&n.to_string(), &[]);
        }
        for &(n, s, m) in &self.edges {
            let label = s.to_string();
            g.edge(
                (n - lo) as usize,
                (m - lo) as usize,
                &[("label", &label), ("color", letter_color(s))],
            );
        }
        g.render()
    }
}

/// The window action as a group automaton on the finite alphabet of window
/// points, with states `a, b, c` and no nontrivial restrictions.
pub fn window_automaton(w: &SubshiftWord) -> Result<GroupAutomaton> {
    let points: Vec<i64> = (w.lo()..=w.hi() + 1).collect();
    let alphabet = Arc::new(AlphabetSpec::finite(points.iter().map(|n| n.to_string()))?);
    let names: Vec<String> = LETTERS.iter().map(|s| s.to_string()).collect();
    let mut perms = Vec::new();
    for s in LETTERS {
        let p = appendix_perm(s, w)?;
        let patch = p.points().map(|n| {
            (
                Letter::fin(n.to_string()),
                Letter::fin(p.apply(n).expect("in window").to_string()),
            )
        });
        perms.push(FdPerm::new(
            alphabet.clone(),
            patch,
            std::iter::empty::<(String, i64)>(),
        )?);
    }
    GroupAutomaton::new(alphabet, names.clone(), names, perms, vec![])
}
