//! Finitely described permutations of a countable alphabet.
//!
//! An [`FdPerm`] is a finite *patch* on top of a per-ray translation. Every
//! letter outside the patch domain is sent to its default image: `Fin`
//! letters are fixed and `Ray(r, i)` goes to `Ray(r, i + d_r)`. The patch is
//! valid exactly when the default images of its domain are its range, which
//! makes bijectivity a finite check.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{AlphabetSpec, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FdPerm {
    alphabet: Arc<AlphabetSpec>,
    patch: BTreeMap<Letter, Letter>,
    ray_shift: BTreeMap<String, i64>,
    window: u64,
}

/// On-disk form of an [`FdPerm`]; the alphabet lives in the enclosing file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermFile {
    #[serde(default)]
    pub patch: Vec<(Letter, Letter)>,
    #[serde(default)]
    pub ray_shift: BTreeMap<String, i64>,
    #[serde(default)]
    pub window: u64,
}

impl FdPerm {
    /// Builds and validates a permutation. The window bound is the smallest
    /// one covering the patch.
    pub fn new<P, S, R>(alphabet: Arc<AlphabetSpec>, patch: P, ray_shift: S) -> Result<Self>
    where
        P: IntoIterator<Item = (Letter, Letter)>,
        S: IntoIterator<Item = (R, i64)>,
        R: Into<String>,
    {
        let mut shifts = BTreeMap::new();
        for (ray, d) in ray_shift {
            let ray = ray.into();
            if !alphabet.has_ray(&ray) {
                return Err(Error::InvalidPermutation(format!("unknown ray `{ray}`")));
            }
            if shifts.insert(ray.clone(), d).is_some() {
                return Err(Error::InvalidPermutation(format!(
                    "ray `{ray}` shifted twice"
                )));
            }
        }
        shifts.retain(|_, d| *d != 0);

        let mut map = BTreeMap::new();
        for (x, y) in patch {
            alphabet.check(&x)?;
            alphabet.check(&y)?;
            if map.insert(x.clone(), y).is_some() {
                return Err(Error::InvalidPermutation(format!(
                    "letter `{x}` patched twice"
                )));
            }
        }
        let mut perm = FdPerm {
            alphabet,
            patch: map,
            ray_shift: shifts,
            window: 0,
        };
        perm.patch = std::mem::take(&mut perm.patch)
            .into_iter()
            .filter(|(x, y)| *y != perm.default_image(x))
            .collect();
        perm.validate_bijective()?;
        perm.window = perm.minimal_window();
        Ok(perm)
    }

    /// The identity permutation.
    pub fn identity(alphabet: Arc<AlphabetSpec>) -> Self {
        FdPerm {
            alphabet,
            patch: BTreeMap::new(),
            ray_shift: BTreeMap::new(),
            window: 0,
        }
    }

    /// Pure translation of one ray.
    pub fn translation(alphabet: Arc<AlphabetSpec>, ray: &str, shift: i64) -> Result<Self> {
        Self::new(alphabet, [], [(ray, shift)])
    }

    /// A permutation given by disjoint cycles on top of the identity.
    pub fn from_cycles(alphabet: Arc<AlphabetSpec>, cycles: &[Vec<Letter>]) -> Result<Self> {
        let mut patch = Vec::new();
        for cycle in cycles {
            for (i, x) in cycle.iter().enumerate() {
                patch.push((x.clone(), cycle[(i + 1) % cycle.len()].clone()));
            }
        }
        Self::new(alphabet, patch, std::iter::empty::<(String, i64)>())
    }

    /// Widens the declared window bound. Narrowing below the patch is an error.
    pub fn with_window(mut self, window: u64) -> Result<Self> {
        let min = self.minimal_window();
        if window < min {
            return Err(Error::InvalidPermutation(format!(
                "window {window} does not cover the patch, need at least {min}"
            )));
        }
        self.window = window;
        Ok(self)
    }

    pub fn from_file(alphabet: Arc<AlphabetSpec>, file: &PermFile) -> Result<Self> {
        Self::new(alphabet, file.patch.iter().cloned(), file.ray_shift.clone())?
            .with_window(file.window)
    }

    pub fn to_file(&self) -> PermFile {
        PermFile {
            patch: self
                .patch
                .iter()
                .map(|(x, y)| (x.clone(), y.clone()))
                .collect(),
            ray_shift: self.ray_shift.clone(),
            window: self.window,
        }
    }

    pub fn alphabet(&self) -> &Arc<AlphabetSpec> {
        &self.alphabet
    }

    pub fn patch(&self) -> &BTreeMap<Letter, Letter> {
        &self.patch
    }

    /// Eventual shift of a ray, zero for unshifted or unknown rays.
    pub fn shift(&self, ray: &str) -> i64 {
        self.ray_shift.get(ray).copied().unwrap_or(0)
    }

    /// Rays with a nonzero eventual shift.
    pub fn shifts(&self) -> &BTreeMap<String, i64> {
        &self.ray_shift
    }

    pub fn max_shift(&self) -> u64 {
        self.ray_shift
            .values()
            .map(|d| d.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn window_bound(&self) -> u64 {
        self.window
    }

    pub fn is_identity(&self) -> bool {
        self.patch.is_empty() && self.ray_shift.is_empty()
    }

    pub fn apply(&self, x: &Letter) -> Result<Letter> {
        self.alphabet.check(x)?;
        Ok(self.image(x))
    }

    /// Image of a letter already known to be in the alphabet.
    pub(crate) fn image(&self, x: &Letter) -> Letter {
        match self.patch.get(x) {
            Some(y) => y.clone(),
            None => self.default_image(x),
        }
    }

    pub fn invert(&self) -> FdPerm {
        FdPerm {
            alphabet: self.alphabet.clone(),
            patch: self
                .patch
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
            ray_shift: self
                .ray_shift
                .iter()
                .map(|(r, d)| (r.clone(), -d))
                .collect(),
            window: self.window,
        }
    }

    fn default_image(&self, x: &Letter) -> Letter {
        match x {
            Letter::Fin(_) => x.clone(),
            Letter::Ray(r, i) => Letter::Ray(r.clone(), i + self.shift(r)),
        }
    }

    fn minimal_window(&self) -> u64 {
        self.patch
            .iter()
            .flat_map(|(x, y)| [x, y])
            .filter_map(|l| l.as_ray().map(|(_, i)| i.unsigned_abs()))
            .max()
            .unwrap_or(0)
    }

    fn validate_bijective(&self) -> Result<()> {
        let range: BTreeSet<&Letter> = self.patch.values().collect();
        if range.len() != self.patch.len() {
            return Err(Error::InvalidPermutation("patch is not injective".into()));
        }
        let shifted: BTreeSet<Letter> = self.patch.keys().map(|x| self.default_image(x)).collect();
        if shifted.iter().ne(range.iter().copied()) {
            return Err(Error::InvalidPermutation(
                match shifted.iter().find(|l| !range.contains(l)) {
                    Some(l) => format!("letter `{l}` has no preimage"),
                    None => "patch range does not match its shifted domain".into(),
                },
            ));
        }
        Ok(())
    }

    /// True if `Ray(ray, index)` lies on a pure translation tail moving away
    /// from the window.
    fn is_outgoing(&self, x: &Letter) -> bool {
        match x {
            Letter::Ray(r, i) => {
                let d = self.shift(r);
                i.unsigned_abs() > self.window && d != 0 && (d > 0) == (*i > 0)
            }
            Letter::Fin(_) => false,
        }
    }

    fn strand_of(&self, ray: &str, index: i64) -> Strand {
        let d = self.shift(ray);
        Strand {
            ray: ray.to_string(),
            end: if index < 0 { End::Neg } else { End::Pos },
            residue: index.rem_euclid(d.abs().max(1)) as u64,
        }
    }

    /// Complete orbit decomposition. Finite orbits are listed as cycles that
    /// start at their least letter; each incoming strand of a shifted ray
    /// yields one infinite orbit. Fixed letters on unshifted rays are only
    /// summarized through [`OrbitDecomposition::fixed_rays`].
    pub fn orbits(&self) -> OrbitDecomposition {
        let w = self.window as i64;
        let mut orbits = Vec::new();
        let mut index = BTreeMap::new();
        let mut strands = BTreeMap::new();

        let limit = self.alphabet.fin_letters().count()
            + self.alphabet.rays().count() * (2 * w as usize + 1);
        let mut infinite = Vec::new();
        for (ray, &d) in &self.ray_shift {
            let starts: Vec<i64> = if d > 0 {
                (-w - d..=-w - 1).collect()
            } else {
                (w + 1..=w - d).rev().collect()
            };
            for start in starts {
                let entry = self.strand_of(ray, start);
                let mut x = self.image(&Letter::Ray(ray.clone(), start));
                let mut core = Vec::new();
                while !self.is_outgoing(&x) {
                    core.push(x.clone());
                    assert!(
                        core.len() <= limit,
                        "orbit did not reach an outgoing strand"
                    );
                    x = self.image(&x);
                }
                let (xr, xi) = x.as_ray().expect("outgoing letters are ray letters");
                let exit = self.strand_of(xr, xi);
                let exceptional = core
                    .iter()
                    .filter(|l| match l.as_ray() {
                        Some((r, _)) => r != entry.ray && r != exit.ray,
                        None => true,
                    })
                    .cloned()
                    .collect();
                infinite.push(InfiniteOrbit {
                    entry,
                    exit,
                    shift: d,
                    core,
                    exceptional,
                });
            }
        }

        let mut seen: BTreeSet<Letter> = infinite
            .iter()
            .flat_map(|o| o.core.iter().cloned())
            .collect();
        let mut candidates: BTreeSet<Letter> =
            self.alphabet.fin_letters().map(Letter::fin).collect();
        for ray in self.ray_shift.keys() {
            candidates.extend((-w..=w).map(|i| Letter::Ray(ray.clone(), i)));
        }
        candidates.extend(self.patch.keys().cloned());
        for start in &candidates {
            if seen.contains(start) {
                continue;
            }
            let mut cycle = vec![start.clone()];
            let mut x = self.image(start);
            while x != *start {
                cycle.push(x.clone());
                x = self.image(&x);
            }
            for l in &cycle {
                index.insert(l.clone(), orbits.len());
                seen.insert(l.clone());
            }
            orbits.push(OrbitDescriptor::Finite(cycle));
        }
        for orbit in infinite {
            let k = orbits.len();
            for l in &orbit.core {
                index.insert(l.clone(), k);
            }
            strands.insert(orbit.entry.clone(), k);
            strands.insert(orbit.exit.clone(), k);
            orbits.push(OrbitDescriptor::Infinite(orbit));
        }
        let fixed_rays = self
            .alphabet
            .rays()
            .filter(|r| self.shift(r) == 0)
            .map(str::to_string)
            .collect();
        OrbitDecomposition {
            orbits,
            fixed_rays,
            index,
            strands,
            window: self.window,
            shifts: self.ray_shift.clone(),
        }
    }
}

/// Which infinite end of a ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum End {
    Neg,
    Pos,
}

/// One residue class of a shifted ray tail at one end. A ray shifted by `d`
/// carries `|d|` strands at each end.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Strand {
    pub ray: String,
    pub end: End,
    pub residue: u64,
}

impl std::fmt::Display for Strand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let end = match self.end {
            End::Neg => "-inf",
            End::Pos => "+inf",
        };
        write!(f, "{}:{end}#{}", self.ray, self.residue)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfiniteOrbit {
    /// Tail the orbit comes from.
    pub entry: Strand,
    /// Tail the orbit escapes along.
    pub exit: Strand,
    /// Eventual shift of the entry ray.
    pub shift: i64,
    /// Letters between the two tails, in orbit order.
    pub core: Vec<Letter>,
    /// Core letters that are not on the entry or exit ray.
    pub exceptional: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OrbitDescriptor {
    Finite(Vec<Letter>),
    Infinite(InfiniteOrbit),
}

impl OrbitDescriptor {
    pub fn is_finite(&self) -> bool {
        matches!(self, OrbitDescriptor::Finite(_))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitDecomposition {
    pub orbits: Vec<OrbitDescriptor>,
    /// Rays without eventual shift: their letters not listed in `orbits` are fixed.
    pub fixed_rays: Vec<String>,
    #[serde(skip)]
    index: BTreeMap<Letter, usize>,
    #[serde(skip)]
    strands: BTreeMap<Strand, usize>,
    #[serde(skip)]
    window: u64,
    #[serde(skip)]
    shifts: BTreeMap<String, i64>,
}

impl OrbitDecomposition {
    /// Index of the orbit containing `x`, or `None` for an implicit fixed point.
    pub fn locate(&self, x: &Letter) -> Option<usize> {
        if let Some(&k) = self.index.get(x) {
            return Some(k);
        }
        let (ray, i) = x.as_ray()?;
        let d = self.shifts.get(ray).copied().unwrap_or(0);
        if d == 0 || i.unsigned_abs() <= self.window {
            return None;
        }
        let strand = Strand {
            ray: ray.to_string(),
            end: if i < 0 { End::Neg } else { End::Pos },
            residue: i.rem_euclid(d.abs()) as u64,
        };
        self.strands.get(&strand).copied()
    }

    pub fn finite(&self) -> impl Iterator<Item = &[Letter]> {
        self.orbits.iter().filter_map(|o| match o {
            OrbitDescriptor::Finite(c) => Some(c.as_slice()),
            OrbitDescriptor::Infinite(_) => None,
        })
    }

    pub fn infinite(&self) -> impl Iterator<Item = &InfiniteOrbit> {
        self.orbits.iter().filter_map(|o| match o {
            OrbitDescriptor::Infinite(o) => Some(o),
            OrbitDescriptor::Finite(_) => None,
        })
    }

    pub fn has_infinite(&self) -> bool {
        self.infinite().next().is_some()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn example_alphabet() -> Arc<AlphabetSpec> {
        Arc::new(AlphabetSpec::new(["*"], ["z"]).unwrap())
    }

    pub(crate) fn g() -> FdPerm {
        FdPerm::translation(example_alphabet(), "z", 1).unwrap()
    }

    pub(crate) fn h() -> FdPerm {
        FdPerm::from_cycles(
            example_alphabet(),
            &[vec![Letter::fin("*"), Letter::ray("z", 0)]],
        )
        .unwrap()
    }

    #[test]
    fn apply_example_generators() {
        assert_eq!(
            g().apply(&Letter::ray("z", 5)).unwrap(),
            Letter::ray("z", 6)
        );
        assert_eq!(g().apply(&Letter::fin("*")).unwrap(), Letter::fin("*"));
        assert_eq!(h().apply(&Letter::fin("*")).unwrap(), Letter::ray("z", 0));
        assert_eq!(h().apply(&Letter::ray("z", 0)).unwrap(), Letter::fin("*"));
        assert_eq!(
            h().apply(&Letter::ray("z", 3)).unwrap(),
            Letter::ray("z", 3)
        );
        let id = FdPerm::identity(example_alphabet());
        assert_eq!(
            id.apply(&Letter::ray("z", -9)).unwrap(),
            Letter::ray("z", -9)
        );
        assert!(matches!(
            g().apply(&Letter::ray("y", 0)),
            Err(Error::UnknownLetter(_))
        ));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            g().invert().apply(&Letter::ray("z", 6)).unwrap(),
            Letter::ray("z", 5)
        );
        assert_eq!(g().invert().shift("z"), -1);
        assert_eq!(h().invert(), h());
        let id = FdPerm::identity(example_alphabet());
        assert_eq!(id.invert(), id);
    }

    #[test]
    fn rejects_non_bijections() {
        let a = example_alphabet();
        // * -> z:0 without anything landing on *
        let err = FdPerm::new(
            a.clone(),
            [(Letter::fin("*"), Letter::ray("z", 0))],
            [("z", 0)],
        );
        assert!(matches!(err, Err(Error::InvalidPermutation(_))));
        let err = FdPerm::new(
            a.clone(),
            [
                (Letter::fin("*"), Letter::ray("z", 0)),
                (Letter::ray("z", 1), Letter::ray("z", 0)),
            ],
            [("z", 0)],
        );
        assert!(err.is_err());
        assert!(FdPerm::translation(a.clone(), "y", 1).is_err());
        // splice * into the +1 translation between z:0 and z:1
        let ok = FdPerm::new(
            a,
            [
                (Letter::ray("z", 0), Letter::fin("*")),
                (Letter::fin("*"), Letter::ray("z", 1)),
            ],
            [("z", 1)],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn patch_is_normalized() {
        let a = example_alphabet();
        let p = FdPerm::new(
            a.clone(),
            [(Letter::ray("z", 3), Letter::ray("z", 4))],
            [("z", 1)],
        )
        .unwrap();
        assert_eq!(p, g());
        assert_eq!(p.window_bound(), 0);
        assert!(p.clone().with_window(4).is_ok());
        assert!(h().with_window(0).is_ok());
    }

    #[test]
    fn orbits_of_g() {
        let dec = g().orbits();
        assert_eq!(dec.orbits.len(), 2);
        assert_eq!(
            dec.orbits[0],
            OrbitDescriptor::Finite(vec![Letter::fin("*")])
        );
        match &dec.orbits[1] {
            OrbitDescriptor::Infinite(o) => {
                assert_eq!(o.entry.ray, "z");
                assert_eq!(o.entry.end, End::Neg);
                assert_eq!(o.exit.end, End::Pos);
                assert_eq!(o.shift, 1);
                assert!(o.exceptional.is_empty());
            }
            other => panic!("expected infinite orbit, got {other:?}"),
        }
        assert!(dec.fixed_rays.is_empty());
        assert_eq!(dec.locate(&Letter::ray("z", -100)), Some(1));
        assert_eq!(dec.locate(&Letter::ray("z", 0)), Some(1));
    }

    #[test]
    fn orbits_of_h() {
        let dec = h().orbits();
        assert_eq!(
            dec.orbits,
            vec![OrbitDescriptor::Finite(vec![
                Letter::fin("*"),
                Letter::ray("z", 0)
            ])]
        );
        assert_eq!(dec.fixed_rays, vec!["z".to_string()]);
        assert_eq!(dec.locate(&Letter::ray("z", 4)), None);
    }

    #[test]
    fn orbits_of_identity_on_finite_set() {
        let a = Arc::new(AlphabetSpec::finite(["a", "b"]).unwrap());
        let dec = FdPerm::identity(a).orbits();
        assert_eq!(
            dec.orbits,
            vec![
                OrbitDescriptor::Finite(vec![Letter::fin("a")]),
                OrbitDescriptor::Finite(vec![Letter::fin("b")])
            ]
        );
    }

    #[test]
    fn spliced_letter_is_exceptional() {
        let p = FdPerm::new(
            example_alphabet(),
            [
                (Letter::ray("z", 0), Letter::fin("*")),
                (Letter::fin("*"), Letter::ray("z", 1)),
            ],
            [("z", 1)],
        )
        .unwrap();
        let dec = p.orbits();
        assert_eq!(dec.orbits.len(), 1);
        let inf = dec.infinite().next().unwrap();
        assert_eq!(inf.exceptional, vec![Letter::fin("*")]);
        assert_eq!(
            inf.core,
            vec![
                Letter::ray("z", -1),
                Letter::ray("z", 0),
                Letter::fin("*"),
                Letter::ray("z", 1)
            ]
        );
    }

    #[test]
    fn double_shift_has_two_strands_per_end() {
        let p = FdPerm::translation(example_alphabet(), "z", -2).unwrap();
        let dec = p.orbits();
        assert_eq!(dec.infinite().count(), 2);
        assert_ne!(
            dec.locate(&Letter::ray("z", 7)),
            dec.locate(&Letter::ray("z", 8))
        );
        assert_eq!(
            dec.locate(&Letter::ray("z", 7)),
            dec.locate(&Letter::ray("z", -7))
        );
    }

    /// Random valid permutations: a translation followed by a random
    /// permutation of a finite block of letters.
    pub(crate) fn arb_perm() -> impl Strategy<Value = FdPerm> {
        (
            prop::collection::vec(-2i64..=2, 2),
            0i64..=3,
            prop::collection::vec(any::<prop::sample::Index>(), 0..12),
        )
            .prop_map(|(shifts, w, swaps)| {
                let alphabet = Arc::new(AlphabetSpec::new(["a", "b"], ["p", "q"]).unwrap());
                let base = FdPerm::new(alphabet.clone(), [], [("p", shifts[0]), ("q", shifts[1])])
                    .unwrap();
                let block = alphabet.window(w as u64);
                let mut sigma: Vec<usize> = (0..block.len()).collect();
                for pair in swaps.chunks(2) {
                    if let [i, j] = pair {
                        let (i, j) = (i.index(block.len()), j.index(block.len()));
                        sigma.swap(i, j);
                    }
                }
                let at: BTreeMap<&Letter, usize> =
                    block.iter().enumerate().map(|(k, l)| (l, k)).collect();
                let inv = base.invert();
                // p = sigma ∘ base, patched wherever sigma moves base(x)
                let patch: Vec<(Letter, Letter)> = block
                    .iter()
                    .map(|y| (inv.image(y), block[sigma[at[y]]].clone()))
                    .collect();
                FdPerm::new(alphabet, patch, [("p", shifts[0]), ("q", shifts[1])]).unwrap()
            })
    }

    proptest! {
        #[test]
        fn invert_is_inverse(p in arb_perm()) {
            let q = p.invert();
            let r = p.window_bound() + p.max_shift() + 2;
            for x in p.alphabet().window(r) {
                prop_assert_eq!(q.image(&p.image(&x)), x.clone());
                prop_assert_eq!(p.image(&q.image(&x)), x);
            }
        }

        #[test]
        fn orbits_partition_the_window(p in arb_perm()) {
            let dec = p.orbits();
            let r = p.window_bound() + p.max_shift() + 2;
            for x in p.alphabet().window(r) {
                let y = p.image(&x);
                match dec.locate(&x) {
                    None => prop_assert_eq!(&y, &x),
                    Some(k) => {
                        prop_assert_eq!(dec.locate(&y), Some(k));
                        if let OrbitDescriptor::Finite(c) = &dec.orbits[k] {
                            prop_assert!(c.contains(&x));
                        }
                    }
                }
            }
            for cycle in dec.finite() {
                let distinct: BTreeSet<_> = cycle.iter().collect();
                prop_assert_eq!(distinct.len(), cycle.len());
                for (i, x) in cycle.iter().enumerate() {
                    prop_assert_eq!(&p.image(x), &cycle[(i + 1) % cycle.len()]);
                }
            }
        }

        #[test]
        fn moved_letters_on_unshifted_rays_are_patched(p in arb_perm()) {
            let r = p.window_bound() + 3;
            for x in p.alphabet().window(r) {
                if let Some((ray, _)) = x.as_ray() {
                    if p.shift(ray) == 0 && p.image(&x) != x {
                        prop_assert!(p.patch().contains_key(&x));
                    }
                }
            }
        }
    }
}
