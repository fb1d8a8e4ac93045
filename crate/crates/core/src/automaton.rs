//! Non-autonomous group automata `τ: A₊ × X → X × B₊`.
//!
//! `Id` is not a state: it is the implicit extra symbol of `A₊` and `B₊`,
//! with `τ(Id, x) = (x, Id)`. Restrictions are stored sparsely; any pair
//! `(a, x)` not listed restricts to `Id`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alphabet::{AlphabetSpec, Letter};
use crate::dendroid::is_dendroid_family;
use crate::error::{Error, Result};
use crate::permutation::{FdPerm, OrbitDescriptor, PermFile};
use crate::word::{Gen, SignedWord};

/// Reserved name of the trivial state.
pub const ID: &str = "Id";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomaton {
    alphabet: Arc<AlphabetSpec>,
    input_states: Vec<String>,
    output_states: Vec<String>,
    perms: Vec<FdPerm>,
    inverses: Vec<FdPerm>,
    restrictions: BTreeMap<(usize, Letter), usize>,
}

/// Serialized form, see [`GroupAutomaton::to_json`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonFile {
    pub alphabet: AlphabetSpec,
    pub input_states: Vec<String>,
    pub output_states: Vec<String>,
    pub perms: OrderedPerms,
    #[serde(default)]
    pub restrictions: Vec<(String, Letter, String)>,
}

/// Permutations keyed by state, kept in file order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OrderedPerms(pub Vec<(String, PermFile)>);

impl Serialize for OrderedPerms {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for OrderedPerms {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = OrderedPerms;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from state names to permutations")
            }

            fn visit_map<M: MapAccess<'de>>(
                self,
                mut access: M,
            ) -> std::result::Result<OrderedPerms, M::Error> {
                let mut out: Vec<(String, PermFile)> = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, PermFile>()? {
                    if out.iter().any(|(seen, _)| *seen == k) {
                        return Err(serde::de::Error::custom(format!(
                            "duplicate permutation for state `{k}`"
                        )));
                    }
                    out.push((k, v));
                }
                Ok(OrderedPerms(out))
            }
        }
        deserializer.deserialize_map(V)
    }
}

fn check_states(field: &str, states: &[String]) -> Result<()> {
    for (i, s) in states.iter().enumerate() {
        if s.is_empty()
            || s == ID
            || s.contains([',', '^', ':'])
            || s.chars().any(char::is_whitespace)
        {
            return Err(Error::schema(
                format!("{field}[{i}]"),
                format!("invalid state name `{s}`"),
            ));
        }
        if states[..i].contains(s) {
            return Err(Error::schema(
                format!("{field}[{i}]"),
                format!("duplicate state `{s}`"),
            ));
        }
    }
    Ok(())
}

impl GroupAutomaton {
    /// Builds an automaton from per-state permutations and restriction
    /// triples `(a, x, b)` meaning `a|ₓ = b`.
    pub fn new(
        alphabet: Arc<AlphabetSpec>,
        input_states: Vec<String>,
        output_states: Vec<String>,
        perms: Vec<FdPerm>,
        restrictions: Vec<(String, Letter, String)>,
    ) -> Result<Self> {
        check_states("input_states", &input_states)?;
        check_states("output_states", &output_states)?;
        if perms.len() != input_states.len() {
            return Err(Error::schema(
                "perms",
                "need exactly one permutation per input state",
            ));
        }
        for (a, p) in input_states.iter().zip(&perms) {
            if **p.alphabet() != *alphabet {
                return Err(Error::schema(
                    format!("perms.{a}"),
                    "permutation over a different alphabet",
                ));
            }
        }
        let mut table = BTreeMap::new();
        for (i, (a, x, b)) in restrictions.into_iter().enumerate() {
            let ctx = format!("restrictions[{i}]");
            let ai = input_states
                .iter()
                .position(|s| *s == a)
                .ok_or_else(|| Error::schema(&ctx, format!("unknown input state `{a}`")))?;
            if !alphabet.contains(&x) {
                return Err(Error::schema(
                    &ctx,
                    format!("letter `{x}` is not in the alphabet"),
                ));
            }
            if b == ID {
                continue;
            }
            let bi = output_states
                .iter()
                .position(|s| *s == b)
                .ok_or_else(|| Error::schema(&ctx, format!("unknown output state `{b}`")))?;
            if table.insert((ai, x.clone()), bi).is_some() {
                return Err(Error::schema(
                    &ctx,
                    format!("duplicate restriction ({a}, {x})"),
                ));
            }
        }
        let inverses = perms.iter().map(FdPerm::invert).collect();
        Ok(GroupAutomaton {
            alphabet,
            input_states,
            output_states,
            perms,
            inverses,
            restrictions: table,
        })
    }

    pub fn from_file(file: AutomatonFile) -> Result<Self> {
        let alphabet = Arc::new(file.alphabet);
        let mut perms = Vec::with_capacity(file.input_states.len());
        for a in &file.input_states {
            let pf = file
                .perms
                .0
                .iter()
                .find(|(k, _)| k == a)
                .map(|(_, p)| p)
                .ok_or_else(|| {
                    Error::schema("perms", format!("missing permutation for state `{a}`"))
                })?;
            let perm = FdPerm::from_file(alphabet.clone(), pf)
                .map_err(|e| Error::schema(format!("perms.{a}"), e.to_string()))?;
            perms.push(perm);
        }
        if let Some((k, _)) = file
            .perms
            .0
            .iter()
            .find(|(k, _)| !file.input_states.contains(k))
        {
            return Err(Error::schema(format!("perms.{k}"), "not an input state"));
        }
        Self::new(
            alphabet,
            file.input_states,
            file.output_states,
            perms,
            file.restrictions,
        )
    }

    /// Canonical file form: states in declared order, restrictions sorted by
    /// state position then letter.
    pub fn to_file(&self) -> AutomatonFile {
        AutomatonFile {
            alphabet: (*self.alphabet).clone(),
            input_states: self.input_states.clone(),
            output_states: self.output_states.clone(),
            perms: OrderedPerms(
                self.input_states
                    .iter()
                    .cloned()
                    .zip(self.perms.iter().map(FdPerm::to_file))
                    .collect(),
            ),
            restrictions: self
                .restrictions
                .iter()
                .map(|((a, x), b)| {
                    (
                        self.input_states[*a].clone(),
                        x.clone(),
                        self.output_states[*b].clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file())
            .expect("automaton files always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AutomatonFile = serde_json::from_str(text).map_err(|e| {
            Error::schema(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        Self::from_file(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn alphabet(&self) -> &Arc<AlphabetSpec> {
        &self.alphabet
    }

    pub fn input_states(&self) -> &[String] {
        &self.input_states
    }

    pub fn output_states(&self) -> &[String] {
        &self.output_states
    }

    pub fn perms(&self) -> &[FdPerm] {
        &self.perms
    }

    pub fn input_index(&self, state: &str) -> Result<usize> {
        self.input_states
            .iter()
            .position(|s| s == state)
            .ok_or_else(|| Error::UnknownState(state.to_string()))
    }

    pub fn perm(&self, state: &str) -> Result<&FdPerm> {
        Ok(&self.perms[self.input_index(state)?])
    }

    /// Restriction triples in canonical order.
    pub fn restrictions(&self) -> impl Iterator<Item = (&str, &Letter, &str)> {
        self.restrictions.iter().map(|((a, x), b)| {
            (
                self.input_states[*a].as_str(),
                x,
                self.output_states[*b].as_str(),
            )
        })
    }

    pub fn restriction_count(&self) -> usize {
        self.restrictions.len()
    }

    /// Letters where state `a` (by index) restricts nontrivially, with the
    /// output state index.
    pub(crate) fn nontrivial(&self, a: usize) -> impl Iterator<Item = (&Letter, usize)> {
        self.restrictions
            .range((a, Letter::Fin(String::new()))..)
            .take_while(move |((s, _), _)| *s == a)
            .map(|((_, x), b)| (x, *b))
    }

    pub(crate) fn inverse_perm(&self, a: usize) -> &FdPerm {
        &self.inverses[a]
    }

    pub(crate) fn step_index(&self, a: usize, x: &Letter) -> (Letter, Option<usize>) {
        let y = self.perms[a].image(x);
        (y, self.restrictions.get(&(a, x.clone())).copied())
    }

    /// `x = a⁻¹(y)` and the output state `b = a|ₓ`; the section of `a⁻¹` at
    /// `y` is `b⁻¹`.
    pub(crate) fn inverse_step_index(&self, a: usize, y: &Letter) -> (Letter, Option<usize>) {
        let x = self.inverses[a].image(y);
        let b = self.restrictions.get(&(a, x.clone())).copied();
        (x, b)
    }

    /// `τ(a, x)`. `None` stands for `Id` on both sides.
    pub fn step(&self, a: Option<&str>, x: &Letter) -> Result<(Letter, Option<&str>)> {
        self.alphabet.check(x)?;
        let Some(a) = a else {
            return Ok((x.clone(), None));
        };
        let (y, b) = self.step_index(self.input_index(a)?, x);
        Ok((y, b.map(|b| self.output_states[b].as_str())))
    }

    /// `a⁻¹ · y = x · (a|ₓ)⁻¹`: returns `x` and the section as a signed word.
    pub fn inverse_step(&self, a: &str, y: &Letter) -> Result<(Letter, SignedWord)> {
        self.alphabet.check(y)?;
        let (x, b) = self.inverse_step_index(self.input_index(a)?, y);
        let section = match b {
            Some(b) => SignedWord(vec![Gen::inv(self.output_states[b].clone())]),
            None => SignedWord::identity(),
        };
        Ok((x, section))
    }

    /// Checks the three dendroid conditions and reports every violation.
    pub fn validate_dendroid(&self) -> DendroidReport {
        let mut witnesses = Vec::new();

        let condition1 = match is_dendroid_family(&self.perms) {
            Ok(v) => {
                if !v.is_dendroid {
                    witnesses.push(format!("condition 1: {}", v.describe(&self.input_states)));
                }
                v.is_dendroid
            }
            Err(e) => {
                witnesses.push(format!("condition 1: {e}"));
                false
            }
        };

        let mut uses: Vec<Vec<String>> = vec![Vec::new(); self.output_states.len()];
        for ((a, x), b) in &self.restrictions {
            uses[*b].push(format!("({}, {x})", self.input_states[*a]));
        }
        let mut condition2 = true;
        for (b, found) in uses.iter().enumerate() {
            if found.len() != 1 {
                condition2 = false;
                witnesses.push(format!(
                    "condition 2: output state {} appears {} times as a restriction{}{}",
                    self.output_states[b],
                    found.len(),
                    if found.is_empty() { "" } else { ": " },
                    found.join(", ")
                ));
            }
        }

        let mut condition3 = true;
        for (ai, perm) in self.perms.iter().enumerate() {
            let a = &self.input_states[ai];
            let dec = perm.orbits();
            let mut per_orbit: BTreeMap<usize, Vec<&Letter>> = BTreeMap::new();
            for (x, _) in self.nontrivial(ai) {
                match dec.locate(x) {
                    None => {}
                    Some(k) => match &dec.orbits[k] {
                        OrbitDescriptor::Infinite(_) => {
                            condition3 = false;
                            witnesses.push(format!("condition 3: {a} restricts nontrivially at {x} on an infinite orbit"));
                        }
                        OrbitDescriptor::Finite(_) => per_orbit.entry(k).or_default().push(x),
                    },
                }
            }
            for letters in per_orbit.values().filter(|l| l.len() > 1) {
                condition3 = false;
                let list: Vec<String> = letters.iter().map(ToString::to_string).collect();
                witnesses.push(format!(
                    "condition 3: {a} restricts nontrivially at {} points of one finite orbit: {}",
                    letters.len(),
                    list.join(", ")
                ));
            }
        }

        DendroidReport {
            is_dendroid: condition1 && condition2 && condition3,
            condition1,
            condition2,
            condition3,
            witnesses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DendroidReport {
    pub is_dendroid: bool,
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    pub witnesses: Vec<String>,
}

impl fmt::Display for DendroidReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dendroid: {}", self.is_dendroid)?;
        writeln!(
            f,
            "  condition 1 (dendroid permutations): {}",
            self.condition1
        )?;
        writeln!(
            f,
            "  condition 2 (unique restriction per output state): {}",
            self.condition2
        )?;
        writeln!(
            f,
            "  condition 3 (restrictions along orbits): {}",
            self.condition3
        )?;
        for w in &self.witnesses {
            writeln!(f, "  - {w}")?;
        }
        Ok(())
    }
}
