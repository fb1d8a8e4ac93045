//! Countable alphabets with a finite description: a finite set of named
//! letters plus a finite set of bi-infinite, integer-indexed rays.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single point of an [`AlphabetSpec`].
///
/// The derived order puts every `Fin` letter before every `Ray` letter,
/// orders `Fin` letters by name and `Ray` letters by ray name, then index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Fin(String),
    Ray(String, i64),
}

impl Letter {
    pub fn fin(name: impl Into<String>) -> Self {
        Letter::Fin(name.into())
    }

    pub fn ray(ray: impl Into<String>, index: i64) -> Self {
        Letter::Ray(ray.into(), index)
    }

    /// The ray and index, if this is a ray letter.
    pub fn as_ray(&self) -> Option<(&str, i64)> {
        match self {
            Letter::Ray(r, i) => Some((r.as_str(), *i)),
            Letter::Fin(_) => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Fin(name) => f.write_str(name),
            Letter::Ray(ray, index) => write!(f, "{ray}:{index}"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// Parses `name` or `ray:index`. No alphabet membership check happens here.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse(s, "empty letter"));
        }
        if let Some((ray, index)) = s.rsplit_once(':') {
            let index = index
                .parse::<i64>()
                .map_err(|_| Error::parse(s, "ray index is not an integer"))?;
            check_identifier(ray).map_err(|reason| Error::parse(s, reason))?;
            return Ok(Letter::Ray(ray.to_string(), index));
        }
        check_identifier(s).map_err(|reason| Error::parse(s, reason))?;
        Ok(Letter::Fin(s.to_string()))
    }
}

impl Serialize for Letter {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_identifier(id: &str) -> std::result::Result<(), &'static str> {
    if id.is_empty() {
        return Err("empty identifier");
    }
    if id.contains([':', ',', '^']) || id.chars().any(char::is_whitespace) {
        return Err("identifiers may not contain ':', ',', '^' or whitespace");
    }
    Ok(())
}

/// Finite presentation of a countable alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AlphabetFile", into = "AlphabetFile")]
pub struct AlphabetSpec {
    fin: BTreeSet<String>,
    rays: BTreeSet<String>,
}

#[derive(Serialize, Deserialize)]
struct AlphabetFile {
    #[serde(default)]
    fin: Vec<String>,
    #[serde(default)]
    rays: Vec<String>,
}

impl TryFrom<AlphabetFile> for AlphabetSpec {
    type Error = Error;

    fn try_from(file: AlphabetFile) -> Result<Self> {
        AlphabetSpec::new(file.fin, file.rays)
    }
}

impl From<AlphabetSpec> for AlphabetFile {
    fn from(spec: AlphabetSpec) -> Self {
        AlphabetFile {
            fin: spec.fin.into_iter().collect(),
            rays: spec.rays.into_iter().collect(),
        }
    }
}

impl AlphabetSpec {
    pub fn new<F, R>(fin: F, rays: R) -> Result<Self>
    where
        F: IntoIterator,
        F::Item: Into<String>,
        R: IntoIterator,
        R::Item: Into<String>,
    {
        let mut fin_set = BTreeSet::new();
        for name in fin {
            let name = name.into();
            check_identifier(&name)
                .map_err(|r| Error::InvalidAlphabet(format!("`{name}`: {r}")))?;
            if !fin_set.insert(name.clone()) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter `{name}`")));
            }
        }
        let mut ray_set = BTreeSet::new();
        for name in rays {
            let name = name.into();
            check_identifier(&name)
                .map_err(|r| Error::InvalidAlphabet(format!("`{name}`: {r}")))?;
            if fin_set.contains(&name) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{name}` is both a letter and a ray"
                )));
            }
            if !ray_set.insert(name.clone()) {
                return Err(Error::InvalidAlphabet(format!("duplicate ray `{name}`")));
            }
        }
        if fin_set.is_empty() && ray_set.is_empty() {
            return Err(Error::InvalidAlphabet(
                "an alphabet needs at least one letter".into(),
            ));
        }
        Ok(AlphabetSpec {
            fin: fin_set,
            rays: ray_set,
        })
    }

    /// A finite alphabet without rays.
    pub fn finite<F>(fin: F) -> Result<Self>
    where
        F: IntoIterator,
        F::Item: Into<String>,
    {
        Self::new(fin, std::iter::empty::<String>())
    }

    pub fn fin_letters(&self) -> impl Iterator<Item = &str> {
        self.fin.iter().map(String::as_str)
    }

    pub fn rays(&self) -> impl Iterator<Item = &str> {
        self.rays.iter().map(String::as_str)
    }

    pub fn has_ray(&self, ray: &str) -> bool {
        self.rays.contains(ray)
    }

    pub fn is_finite(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        match letter {
            Letter::Fin(name) => self.fin.contains(name),
            Letter::Ray(ray, _) => self.rays.contains(ray),
        }
    }

    pub fn check(&self, letter: &Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::UnknownLetter(letter.to_string()))
        }
    }

    /// All letters of a finite alphabet, `None` if there are rays.
    pub fn letters(&self) -> Option<Vec<Letter>> {
        self.is_finite().then(|| self.window(0))
    }

    /// Every `Fin` letter plus `Ray(r, i)` for every ray and `|i| <= radius`,
    /// in canonical order.
    pub fn window(&self, radius: u64) -> Vec<Letter> {
        let r = radius as i64;
        let mut out: Vec<Letter> = self.fin.iter().cloned().map(Letter::Fin).collect();
        for ray in &self.rays {
            out.extend((-r..=r).map(|i| Letter::Ray(ray.clone(), i)));
        }
        out
    }

    /// Parses a letter and checks membership. A bare integer is accepted as
    /// shorthand for `ray:integer` when the alphabet has exactly one ray.
    pub fn parse_letter(&self, s: &str) -> Result<Letter> {
        let s = s.trim();
        let letter = match (s.parse::<i64>(), self.rays.len()) {
            (Ok(index), 1) if !self.fin.contains(s) => {
                Letter::Ray(self.rays.iter().next().unwrap().clone(), index)
            }
            _ => s.parse()?,
        };
        self.check(&letter)?;
        Ok(letter)
    }
}
