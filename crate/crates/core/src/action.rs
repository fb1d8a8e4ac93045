//! The self-similar action of signed words on level words.
//!
//! A [`Tower`] stacks automata `τ₁, τ₂, …` whose state sets chain; an
//! autonomous tower repeats one automaton forever. A signed word acts on the
//! first letter of a level word, its section acts on the rest:
//! `g(xv) = g(x) · g|ₓ(v)`. For a product `g = s₁…s_m` the rightmost factor
//! acts first and `g|ₓ = s₁|_{(s₂…s_m)(x)} ⋯ s_m|ₓ`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::Letter;
use crate::automaton::GroupAutomaton;
use crate::dot::{self, DotGraph};
use crate::error::{Error, Result};
use crate::word::{Gen, LevelWord, SignedWord};

#[derive(Debug, Clone)]
pub struct Tower {
    levels: Vec<GroupAutomaton>,
    autonomous: bool,
}

impl Tower {
    /// The tower repeating `aut`, which needs equal input and output states.
    pub fn autonomous(aut: GroupAutomaton) -> Result<Self> {
        if aut.input_states() != aut.output_states() {
            return Err(Error::StateMismatch(
                "an autonomous tower needs A = B".into(),
            ));
        }
        Ok(Tower {
            levels: vec![aut],
            autonomous: true,
        })
    }

    /// A finite tower; `output_states(τ_k)` must equal `input_states(τ_{k+1})`.
    pub fn new(levels: Vec<GroupAutomaton>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Incompatible(
                "a tower needs at least one level".into(),
            ));
        }
        for (k, pair) in levels.windows(2).enumerate() {
            if pair[0].output_states() != pair[1].input_states() {
                return Err(Error::StateMismatch(format!(
                    "output states of level {} differ from input states of level {}",
                    k + 1,
                    k + 2
                )));
            }
        }
        Ok(Tower {
            levels,
            autonomous: false,
        })
    }

    pub fn is_autonomous(&self) -> bool {
        self.autonomous
    }

    /// Number of levels, `None` for an autonomous tower.
    pub fn depth(&self) -> Option<usize> {
        (!self.autonomous).then_some(self.levels.len())
    }

    /// Automaton acting at level `k` (0-based).
    pub fn level(&self, k: usize) -> Result<&GroupAutomaton> {
        if self.autonomous {
            Ok(&self.levels[0])
        } else {
            self.levels.get(k).ok_or_else(|| {
                Error::Incompatible(format!("the tower has only {} levels", self.levels.len()))
            })
        }
    }

    /// Generators of the acting group: the input states of the first level.
    pub fn generators(&self) -> &[String] {
        self.levels[0].input_states()
    }

    /// Parses a level word whose `k`-th letter belongs to the alphabet of level `k`.
    pub fn parse_word(&self, s: &str) -> Result<LevelWord> {
        let parts: Vec<&str> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect();
        let letters = parts
            .iter()
            .enumerate()
            .map(|(k, t)| self.level(k).and_then(|aut| aut.alphabet().parse_letter(t)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LevelWord(letters))
    }

    fn check_word(&self, v: &LevelWord) -> Result<()> {
        for (k, x) in v.0.iter().enumerate() {
            let aut = self.level(k)?;
            if !aut.alphabet().contains(x) {
                return Err(Error::Incompatible(format!(
                    "letter {x} is not in the alphabet of level {}",
                    k + 1
                )));
            }
        }
        Ok(())
    }
}

/// Action of a signed word on one letter: `(w(x), w|ₓ)` with the section
/// freely reduced.
pub fn act_letter(
    aut: &GroupAutomaton,
    word: &SignedWord,
    x: &Letter,
) -> Result<(Letter, SignedWord)> {
    let mut x = x.clone();
    let mut pieces = Vec::new();
    for g in word.gens().iter().rev() {
        let a = aut.input_index(&g.state)?;
        let (y, b) = if g.inverse {
            aut.inverse_step_index(a, &x)
        } else {
            aut.step_index(a, &x)
        };
        if let Some(b) = b {
            let state = aut.output_states()[b].clone();
            pieces.push(Gen {
                state,
                inverse: g.inverse,
            });
        }
        x = y;
    }
    pieces.reverse();
    Ok((x, SignedWord(pieces).reduced()))
}

/// Image of the level-1 letter only, without tracking sections.
pub(crate) fn permute_letter(
    aut: &GroupAutomaton,
    word: &SignedWord,
    x: &Letter,
) -> Result<Letter> {
    let mut x = x.clone();
    for g in word.gens().iter().rev() {
        let a = aut.input_index(&g.state)?;
        x = if g.inverse {
            aut.inverse_perm(a).image(&x)
        } else {
            aut.perms()[a].image(&x)
        };
    }
    Ok(x)
}

/// `(g(v), g|_v)`.
pub fn act(tower: &Tower, g: &SignedWord, v: &LevelWord) -> Result<(LevelWord, SignedWord)> {
    tower.check_word(v)?;
    let mut word = g.reduced();
    let mut out = Vec::with_capacity(v.len());
    for (k, x) in v.0.iter().enumerate() {
        let aut = tower.level(k)?;
        if word.is_identity() {
            out.extend(v.0[k..].iter().cloned());
            break;
        }
        let (y, section) = act_letter(aut, &word, x)?;
        out.push(y);
        word = section;
    }
    Ok((LevelWord(out), word))
}

/// Number of level-`k` words `v` with `a|_v ≠ Id`, for `k = 1..=n`. Only
/// nontrivial restrictions are followed, so the alphabet is never enumerated.
pub fn activity_profile(tower: &Tower, a: &str, n: usize) -> Result<Vec<u64>> {
    let first = tower.level(0)?;
    let mut counts: BTreeMap<String, u64> =
        BTreeMap::from([(first.input_states()[first.input_index(a)?].clone(), 1)]);
    let mut profile = Vec::with_capacity(n);
    for k in 0..n {
        let aut = tower.level(k)?;
        let mut next: BTreeMap<String, u64> = BTreeMap::new();
        for (state, &count) in &counts {
            let si = aut.input_index(state)?;
            for (_, b) in aut.nontrivial(si) {
                let e = next.entry(aut.output_states()[b].clone()).or_default();
                *e = e.saturating_add(count);
            }
        }
        profile.push(next.values().fold(0u64, |acc, c| acc.saturating_add(*c)));
        counts = next;
    }
    Ok(profile)
}

/// Letters `x` at which `word|ₓ` can be nontrivial. At every other letter
/// each factor restricts to `Id`.
pub(crate) fn section_support(aut: &GroupAutomaton, word: &SignedWord) -> Result<BTreeSet<Letter>> {
    let gens = word.gens();
    let mut out = BTreeSet::new();
    for (i, g) in gens.iter().enumerate() {
        let a = aut.input_index(&g.state)?;
        for (x, _) in aut.nontrivial(a) {
            // g acts on letter t with a nontrivial restriction
            let mut t = if g.inverse {
                aut.perms()[a].image(x)
            } else {
                x.clone()
            };
            // pull t back through the factors to the right of g
            for h in &gens[i + 1..] {
                let b = aut.input_index(&h.state)?;
                t = if h.inverse {
                    aut.perms()[b].image(&t)
                } else {
                    aut.inverse_perm(b).image(&t)
                };
            }
            out.insert(t);
        }
    }
    Ok(out)
}

/// Sections of a word at every letter of level `k`'s alphabet, as a set.
fn level_sections(aut: &GroupAutomaton, word: &SignedWord) -> Result<BTreeSet<SignedWord>> {
    let mut out = BTreeSet::new();
    match aut.alphabet().letters() {
        Some(all) => {
            for x in all {
                out.insert(act_letter(aut, word, &x)?.1);
            }
        }
        None => {
            for x in section_support(aut, word)? {
                out.insert(act_letter(aut, word, &x)?.1);
            }
            out.insert(SignedWord::identity());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SectionSet {
    /// Distinct sections at each level `0..=n`; level 0 is the reduced word itself.
    pub levels: Vec<BTreeSet<SignedWord>>,
    /// Union over all levels.
    pub sections: BTreeSet<SignedWord>,
    /// Level `n` produced nothing that was not already seen at a lower level.
    pub saturated: bool,
}

/// All distinct reduced sections `g|_v` for `|v| ≤ n`.
pub fn section_set(tower: &Tower, g: &SignedWord, n: usize) -> Result<SectionSet> {
    let mut levels = vec![BTreeSet::from([g.reduced()])];
    let mut seen: BTreeSet<SignedWord> = levels[0].clone();
    let mut saturated = n == 0;
    for k in 0..n {
        let aut = tower.level(k)?;
        let mut next = BTreeSet::new();
        for w in &levels[k] {
            next.extend(level_sections(aut, w)?);
        }
        if k + 1 == n {
            saturated = next.is_subset(&seen);
        }
        seen.extend(next.iter().cloned());
        levels.push(next);
    }
    Ok(SectionSet {
        levels,
        sections: seen,
        saturated,
    })
}

/// The product automaton `τ₁ ⊗ τ₂` on pair letters, evaluated lazily:
/// `(c, x, y) ↦ (c(x), c|ₓ(y), (c|ₓ)|_y)`.
#[derive(Debug, Clone)]
pub struct ProductAutomaton {
    first: GroupAutomaton,
    second: GroupAutomaton,
}

pub fn product(first: &GroupAutomaton, second: &GroupAutomaton) -> Result<ProductAutomaton> {
    if first.output_states() != second.input_states() {
        return Err(Error::StateMismatch(
            "output states of the first automaton differ from input states of the second".into(),
        ));
    }
    Ok(ProductAutomaton {
        first: first.clone(),
        second: second.clone(),
    })
}

pub type PairLetter = (Letter, Letter);

impl ProductAutomaton {
    pub fn input_states(&self) -> &[String] {
        self.first.input_states()
    }

    pub fn output_states(&self) -> &[String] {
        self.second.output_states()
    }

    fn check(&self, (x, y): &PairLetter) -> Result<()> {
        self.first.alphabet().check(x)?;
        self.second.alphabet().check(y)
    }

    /// `None` stands for `Id`.
    pub fn step(&self, c: Option<&str>, pair: &PairLetter) -> Result<(PairLetter, Option<String>)> {
        self.check(pair)?;
        let Some(c) = c else {
            return Ok((pair.clone(), None));
        };
        let (x, y) = pair;
        let (x2, b) = self.first.step_index(self.first.input_index(c)?, x);
        let Some(b) = b else {
            return Ok(((x2, y.clone()), None));
        };
        let (y2, a) = self.second.step_index(b, y);
        Ok(((x2, y2), a.map(|a| self.second.output_states()[a].clone())))
    }

    /// Inverse of [`ProductAutomaton::step`]: the preimage pair and the
    /// section of `c⁻¹` there.
    pub fn inverse_step(&self, c: &str, pair: &PairLetter) -> Result<(PairLetter, SignedWord)> {
        self.check(pair)?;
        let (x2, y2) = pair;
        let (x, b) = self
            .first
            .inverse_step_index(self.first.input_index(c)?, x2);
        let Some(b) = b else {
            return Ok(((x, y2.clone()), SignedWord::identity()));
        };
        let (y, a) = self.second.inverse_step_index(b, y2);
        let section = match a {
            Some(a) => SignedWord(vec![Gen::inv(self.second.output_states()[a].clone())]),
            None => SignedWord::identity(),
        };
        Ok(((x, y), section))
    }

    /// Action of a signed word on one pair letter, built from
    /// [`ProductAutomaton::step`] and [`ProductAutomaton::inverse_step`].
    pub fn act_pair(&self, g: &SignedWord, pair: &PairLetter) -> Result<(PairLetter, SignedWord)> {
        self.check(pair)?;
        let mut p = pair.clone();
        let mut pieces = Vec::new();
        for gen in g.gens().iter().rev() {
            if gen.inverse {
                let (q, s) = self.inverse_step(&gen.state, &p)?;
                pieces.push(s);
                p = q;
            } else {
                let (q, s) = self.step(Some(&gen.state), &p)?;
                pieces.push(s.map(SignedWord::generator).unwrap_or_default());
                p = q;
            }
        }
        let section = pieces
            .iter()
            .rev()
            .fold(SignedWord::identity(), |acc, s| &acc * s);
        Ok((p, section))
    }
}

/// Ball in the Schreier graph of the first-level generators acting on
/// level words of a fixed length.
#[derive(Debug, Clone, Serialize)]
pub struct SchreierBall {
    pub center: LevelWord,
    pub radius: u64,
    pub generators: Vec<String>,
    /// Sorted by distance, then word.
    pub vertices: Vec<LevelWord>,
    pub distances: Vec<u64>,
    /// `(from, generator, to)` with `to = generator(from)`, for every vertex
    /// and generator whose image stays in the ball.
    pub edges: Vec<(usize, usize, usize)>,
}

fn single_move(tower: &Tower, gen: &Gen, v: &LevelWord) -> Result<LevelWord> {
    Ok(act(tower, &SignedWord(vec![gen.clone()]), v)?.0)
}

pub fn schreier_ball(tower: &Tower, center: &LevelWord, radius: u64) -> Result<SchreierBall> {
    tower.check_word(center)?;
    let generators = tower.generators().to_vec();
    let moves: Vec<Gen> = generators
        .iter()
        .flat_map(|s| [Gen::new(s.clone()), Gen::inv(s.clone())])
        .collect();

    let mut dist: BTreeMap<LevelWord, u64> = BTreeMap::from([(center.clone(), 0)]);
    let mut queue = VecDeque::from([center.clone()]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == radius {
            continue;
        }
        for m in &moves {
            let w = single_move(tower, m, &v)?;
            if !dist.contains_key(&w) {
                dist.insert(w.clone(), d + 1);
                queue.push_back(w);
            }
        }
    }
    let mut order: Vec<(u64, LevelWord)> = dist.into_iter().map(|(w, d)| (d, w)).collect();
    order.sort();
    let index: BTreeMap<&LevelWord, usize> =
        order.iter().enumerate().map(|(i, (_, w))| (w, i)).collect();
    let mut edges = Vec::new();
    for (i, (_, v)) in order.iter().enumerate() {
        for (gi, s) in generators.iter().enumerate() {
            let w = single_move(tower, &Gen::new(s.clone()), v)?;
            if let Some(&j) = index.get(&w) {
                edges.push((i, gi, j));
            }
        }
    }
    let (distances, vertices) = order.iter().cloned().unzip();
    Ok(SchreierBall {
        center: center.clone(),
        radius,
        generators,
        vertices,
        distances,
        edges,
    })
}

impl SchreierBall {
    pub fn to_dot(&self) -> String {
        let mut g = DotGraph::new("schreier", true);
        for (v, d) in self.vertices.iter().zip(&self.distances) {
            let label = v.to_string();
            if *d == 0 {
                g.node(&label, &[("shape", "doublecircle")]);
            } else {
                g.node(&label, &[]);
            }
        }
        for &(from, gi, to) in &self.edges {
            g.edge(
                from,
                to,
                &[("label", &self.generators[gi]), ("color", dot::color(gi))],
            );
        }
        g.render()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WalkStats {
    pub level: usize,
    pub steps: u64,
    pub trials: u64,
    pub seed: u64,
    /// `returns[k - 1]` counts trials at the start vertex after `2k` steps.
    pub returns: Vec<u64>,
}

impl WalkStats {
    /// Estimated `p_{2k}` for `k = 1..=steps/2`.
    pub fn estimates(&self) -> Vec<f64> {
        self.returns
            .iter()
            .map(|&r| r as f64 / self.trials as f64)
            .collect()
    }

    /// Standard error of the estimate at time `2k`.
    pub fn std_error(&self, k: usize) -> f64 {
        let p = self.returns[k - 1] as f64 / self.trials as f64;
        (p * (1.0 - p) / self.trials as f64).sqrt()
    }
}

/// Monte-Carlo return probabilities of the simple random walk (uniform over
/// generators and their inverses) on level `level`. Trial `t` draws from
/// its own ChaCha stream, so results depend only on `(seed, trials)`.
pub fn walk_return_stats(
    tower: &Tower,
    level: usize,
    start: &LevelWord,
    steps: u64,
    trials: u64,
    seed: u64,
) -> Result<WalkStats> {
    if !steps.is_multiple_of(2) {
        return Err(Error::Incompatible(
            "the number of steps must be even".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::Incompatible("at least one trial is needed".into()));
    }
    if start.len() != level {
        return Err(Error::Incompatible(format!(
            "start word has length {}, expected {level}",
            start.len()
        )));
    }
    tower.check_word(start)?;
    let moves: Vec<SignedWord> = tower
        .generators()
        .iter()
        .flat_map(|s| {
            [
                SignedWord(vec![Gen::new(s.clone())]),
                SignedWord(vec![Gen::inv(s.clone())]),
            ]
        })
        .collect();
    let mut returns = vec![0u64; (steps / 2) as usize];
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut v = start.clone();
        for t in 1..=steps {
            let m = &moves[rng.gen_range(0..moves.len())];
            v = act(tower, m, &v)?.0;
            if t % 2 == 0 && v == *start {
                returns[(t / 2 - 1) as usize] += 1;
            }
        }
    }
    Ok(WalkStats {
        level,
        steps,
        trials,
        seed,
        returns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{example_1mz_expz, odometer};
    use proptest::prelude::*;

    fn example() -> Tower {
        Tower::autonomous(example_1mz_expz()).unwrap()
    }

    fn w(s: &str) -> SignedWord {
        s.parse().unwrap()
    }

    fn lw(t: &Tower, s: &str) -> LevelWord {
        t.parse_word(s).unwrap()
    }

    #[test]
    fn act_examples() {
        let t = example();
        let (img, sec) = act(&t, &w("g"), &lw(&t, "*,*")).unwrap();
        assert_eq!(
            (img.to_string(), sec.to_string()),
            ("*,z:0".into(), "g".into())
        );
        let (img, sec) = act(&t, &w("h"), &lw(&t, "0,5")).unwrap();
        assert_eq!(
            (img.to_string(), sec.to_string()),
            ("*,z:5".into(), "Id".into())
        );
        let v = lw(&t, "*,z:3,*");
        assert_eq!(
            act(&t, &SignedWord::identity(), &v).unwrap(),
            (v, SignedWord::identity())
        );
        assert!(act(&t, &w("q"), &lw(&t, "*")).is_err());
    }

    #[test]
    fn finite_tower_limits_depth() {
        let t = Tower::new(vec![example_1mz_expz(), example_1mz_expz()]).unwrap();
        assert_eq!(t.depth(), Some(2));
        assert!(act(&t, &w("g"), &LevelWord(vec![Letter::fin("*"); 3])).is_err());
        assert!(Tower::new(vec![example_1mz_expz(), odometer()]).is_err());
        assert!(Tower::new(vec![]).is_err());
    }

    #[test]
    fn activity_examples() {
        let t = example();
        assert_eq!(activity_profile(&t, "g", 3).unwrap(), vec![1, 1, 1]);
        assert_eq!(activity_profile(&t, "h", 2).unwrap(), vec![1, 1]);
        let o = Tower::autonomous(odometer()).unwrap();
        assert_eq!(activity_profile(&o, "a", 4).unwrap(), vec![1, 1, 1, 1]);
    }

    /// Brute-force activity over all words of a finite alphabet.
    #[test]
    fn odometer_activity_matches_enumeration() {
        let o = Tower::autonomous(odometer()).unwrap();
        let profile = activity_profile(&o, "a", 5).unwrap();
        for n in 1..=5 {
            let mut count = 0;
            for bits in 0..(1u32 << n) {
                let v = LevelWord(
                    (0..n)
                        .map(|i| Letter::fin(((bits >> i) & 1).to_string()))
                        .collect(),
                );
                // section at v is nontrivial iff it is not Id
                let mut word = w("a");
                for x in &v.0 {
                    word = act_letter(&odometer(), &word, x).unwrap().1;
                }
                if !word.is_identity() {
                    count += 1;
                }
            }
            assert_eq!(profile[n - 1], count);
        }
    }

    #[test]
    fn section_set_examples() {
        let t = example();
        let s = section_set(&t, &w("g"), 3).unwrap();
        let expected: BTreeSet<SignedWord> = [w("g"), w("h"), SignedWord::identity()]
            .into_iter()
            .collect();
        assert_eq!(s.sections, expected);
        assert!(s.saturated);
        let id = section_set(&t, &SignedWord::identity(), 4).unwrap();
        assert_eq!(id.sections, BTreeSet::from([SignedWord::identity()]));
        assert!(id.saturated);
    }

    #[test]
    fn section_set_of_gh_matches_act() {
        let t = example();
        let gh = w("g,h");
        let s = section_set(&t, &gh, 2).unwrap();
        // every section found by brute force on a window is in the set
        let window = example_1mz_expz().alphabet().window(4);
        for x in &window {
            for y in &window {
                let v = LevelWord(vec![x.clone(), y.clone()]);
                assert!(s.levels[2].contains(&act(&t, &gh, &v).unwrap().1));
                assert!(s.levels[1].contains(&act(&t, &gh, &LevelWord(vec![x.clone()])).unwrap().1));
            }
        }
        // (gh)|_{z:-1} = g|_{h(z:-1)} h|_{z:-1} = Id, and at z:0: g|_* h|_0 = h·Id
        assert!(s.levels[1].contains(&w("h")));
        assert!(s.levels[1].contains(&w("g")));
    }

    #[test]
    fn product_step_examples() {
        let e = example_1mz_expz();
        let p = product(&e, &e).unwrap();
        let star = Letter::fin("*");
        let (pair, sec) = p.step(Some("g"), &(star.clone(), star.clone())).unwrap();
        assert_eq!(
            (pair, sec),
            ((star.clone(), Letter::ray("z", 0)), Some("g".to_string()))
        );
        let (pair, sec) = p
            .step(Some("g"), &(Letter::ray("z", 2), star.clone()))
            .unwrap();
        assert_eq!((pair, sec), ((Letter::ray("z", 3), star.clone()), None));
        let any = (Letter::ray("z", 9), Letter::ray("z", -9));
        assert_eq!(p.step(None, &any).unwrap(), (any.clone(), None));
        assert!(product(&e, &odometer()).is_err());
    }

    #[test]
    fn schreier_ball_examples() {
        let t = example();
        let b = schreier_ball(&t, &lw(&t, "*"), 1).unwrap();
        let names: Vec<String> = b.vertices.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["*", "z:0"]);
        let edges: BTreeSet<(String, String, String)> = b
            .edges
            .iter()
            .map(|&(f, g, to)| (names[f].clone(), b.generators[g].clone(), names[to].clone()))
            .collect();
        let expected: BTreeSet<(String, String, String)> =
            [("*", "g", "*"), ("*", "h", "z:0"), ("z:0", "h", "*")]
                .iter()
                .map(|(a, g, c)| (a.to_string(), g.to_string(), c.to_string()))
                .collect();
        assert_eq!(edges, expected);

        let b = schreier_ball(&t, &lw(&t, "z:5"), 1).unwrap();
        let mut names: Vec<String> = b.vertices.iter().map(ToString::to_string).collect();
        names.sort();
        assert_eq!(names, ["z:4", "z:5", "z:6"]);
        assert_eq!(b.edges.len(), 5);

        let b = schreier_ball(&t, &lw(&t, "*,z:2"), 0).unwrap();
        assert_eq!(b.vertices.len(), 1);
        assert!(b.edges.is_empty() || b.edges.iter().all(|&(f, _, to)| f == 0 && to == 0));
    }

    #[test]
    fn radius_zero_ball_has_no_moving_edges() {
        let t = example();
        let b = schreier_ball(&t, &lw(&t, "z:3"), 0).unwrap();
        assert_eq!(b.vertices.len(), 1);
        // h fixes z:3, so the only edge is an h-loop
        assert_eq!(b.edges, vec![(0, 1, 0)]);
    }

    #[test]
    fn walk_on_single_vertex_always_returns() {
        let a = std::sync::Arc::new(crate::AlphabetSpec::finite(["x"]).unwrap());
        let aut = GroupAutomaton::new(
            a.clone(),
            vec!["s".into()],
            vec!["s".into()],
            vec![crate::FdPerm::identity(a)],
            vec![],
        )
        .unwrap();
        let t = Tower::autonomous(aut).unwrap();
        let start = lw(&t, "x,x");
        let stats = walk_return_stats(&t, 2, &start, 6, 50, 1).unwrap();
        assert_eq!(stats.estimates(), vec![1.0; 3]);
    }

    #[test]
    fn walk_is_seed_deterministic_and_validates() {
        let t = example();
        let start = lw(&t, "*");
        let a = walk_return_stats(&t, 1, &start, 4, 200, 7).unwrap();
        let b = walk_return_stats(&t, 1, &start, 4, 200, 7).unwrap();
        assert_eq!(a.returns, b.returns);
        assert!(walk_return_stats(&t, 1, &start, 3, 10, 7).is_err());
        assert!(walk_return_stats(&t, 1, &start, 4, 0, 7).is_err());
        assert!(walk_return_stats(&t, 2, &start, 4, 10, 7).is_err());
    }

    fn arb_gen() -> impl Strategy<Value = Gen> {
        (0..2usize, any::<bool>()).prop_map(|(s, inverse)| Gen {
            state: ["g", "h"][s].into(),
            inverse,
        })
    }

    fn arb_signed() -> impl Strategy<Value = SignedWord> {
        prop::collection::vec(arb_gen(), 0..6).prop_map(SignedWord)
    }

    fn arb_letter() -> impl Strategy<Value = Letter> {
        prop_oneof![
            Just(Letter::fin("*")),
            (-4i64..=4).prop_map(|i| Letter::ray("z", i))
        ]
    }

    fn arb_level_word(max: usize) -> impl Strategy<Value = LevelWord> {
        prop::collection::vec(arb_letter(), 0..=max).prop_map(LevelWord)
    }

    proptest! {
        #[test]
        fn self_similarity(g in arb_signed(), v in arb_level_word(3), u in arb_level_word(2)) {
            let t = example();
            let (gv, gsec) = act(&t, &g, &v).unwrap();
            let (gvu, full_sec) = act(&t, &g, &v.concat(&u)).unwrap();
            let (gu, usec) = act(&t, &gsec, &u).unwrap();
            prop_assert_eq!(gvu, gv.concat(&gu));
            prop_assert_eq!(full_sec, usec);
        }

        #[test]
        fn homomorphism(g in arb_signed(), h in arb_signed(), v in arb_level_word(5)) {
            let t = example();
            let (hv, hsec) = act(&t, &h, &v).unwrap();
            let (ghv, _) = act(&t, &g, &hv).unwrap();
            let (prod, prod_sec) = act(&t, &(&g * &h), &v).unwrap();
            prop_assert_eq!(&prod, &ghv);
            // (gh)|_v = g|_{h(v)} h|_v
            let (_, gsec) = act(&t, &g, &hv).unwrap();
            prop_assert_eq!(prod_sec, &gsec * &hsec);
            // inverses undo
            let (back, _) = act(&t, &g.inverse(), &ghv).unwrap();
            prop_assert_eq!(back, hv);
        }

        #[test]
        fn product_matches_two_level_tower(c in arb_signed(), x in arb_letter(), y in arb_letter()) {
            let e = example_1mz_expz();
            let p = product(&e, &e).unwrap();
            let t = Tower::new(vec![e.clone(), e]).unwrap();
            let ((x2, y2), sec) = p.act_pair(&c, &(x.clone(), y.clone())).unwrap();
            let (img, tsec) = act(&t, &c, &LevelWord(vec![x, y])).unwrap();
            prop_assert_eq!(img, LevelWord(vec![x2, y2]));
            prop_assert_eq!(sec, tsec);
        }

        #[test]
        fn sections_are_found_by_section_set(g in arb_signed(), x in arb_letter()) {
            let t = example();
            let s = section_set(&t, &g, 1).unwrap();
            let (_, sec) = act(&t, &g, &LevelWord(vec![x])).unwrap();
            prop_assert!(s.levels[1].contains(&sec));
        }
    }
}
