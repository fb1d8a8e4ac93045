//! Signed words over state names (free group elements) and level words
//! (vertices of the tree `X*`).

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::alphabet::{AlphabetSpec, Letter};
use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub state: String,
    pub inverse: bool,
}

impl Gen {
    pub fn new(state: impl Into<String>) -> Self {
        Gen {
            state: state.into(),
            inverse: false,
        }
    }

    pub fn inv(state: impl Into<String>) -> Self {
        Gen {
            state: state.into(),
            inverse: true,
        }
    }

    pub fn inverted(&self) -> Self {
        Gen {
            state: self.state.clone(),
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &Gen) -> bool {
        self.state == other.state && self.inverse != other.inverse
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.state)
        } else {
            f.write_str(&self.state)
        }
    }
}

/// Element of a free group, written left to right. The empty word is the
/// identity and prints as `Id`. A word acts on the left, so its rightmost
/// generator is applied first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedWord(pub Vec<Gen>);

impl SignedWord {
    pub fn identity() -> Self {
        SignedWord(Vec::new())
    }

    pub fn generator(state: impl Into<String>) -> Self {
        SignedWord(vec![Gen::new(state)])
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    /// Free reduction.
    pub fn reduced(&self) -> SignedWord {
        let mut out: Vec<Gen> = Vec::with_capacity(self.0.len());
        for g in &self.0 {
            if out.last().is_some_and(|last| last.cancels(g)) {
                out.pop();
            } else {
                out.push(g.clone());
            }
        }
        SignedWord(out)
    }

    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(Gen::inverted).collect())
    }

    /// Net exponent of `state`.
    pub fn exponent_sum(&self, state: &str) -> i64 {
        self.0
            .iter()
            .filter(|g| g.state == state)
            .map(|g| if g.inverse { -1 } else { 1 })
            .sum()
    }
}

impl Mul for &SignedWord {
    type Output = SignedWord;

    /// Concatenation followed by free reduction.
    fn mul(self, rhs: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend(rhs.0.iter().cloned());
        SignedWord(v).reduced()
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("Id");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedWord {
    type Err = Error;

    /// Parses `g,h^-1,g`. Whitespace also separates; `Id` and the empty
    /// string denote the identity. `x^n` for any nonzero integer `n` expands
    /// to `|n|` copies.
    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for token in s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            if token == "Id" {
                continue;
            }
            let (state, power) = match token.split_once('^') {
                Some((state, exp)) => {
                    let n: i64 = exp
                        .parse()
                        .map_err(|_| Error::parse(s, format!("bad exponent in `{token}`")))?;
                    (state, n)
                }
                None => (token, 1),
            };
            if state.is_empty() || state.contains(':') {
                return Err(Error::parse(s, format!("bad generator `{token}`")));
            }
            if power == 0 {
                return Err(Error::parse(s, format!("zero exponent in `{token}`")));
            }
            for _ in 0..power.unsigned_abs() {
                gens.push(Gen {
                    state: state.to_string(),
                    inverse: power < 0,
                });
            }
        }
        Ok(SignedWord(gens))
    }
}

impl Serialize for SignedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A vertex `x₁x₂…xₙ` of the tree, with `x_k` taken from the alphabet of
/// level `k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelWord(pub Vec<Letter>);

impl LevelWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        LevelWord(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Parses comma separated letters against one alphabet (all levels share
    /// it in an autonomous tower).
    pub fn parse_in(alphabet: &AlphabetSpec, s: &str) -> Result<Self> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| alphabet.parse_letter(t))
            .collect::<Result<Vec<_>>>()
            .map(LevelWord)
    }

    pub fn concat(&self, other: &LevelWord) -> LevelWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        LevelWord(v)
    }
}

impl fmt::Display for LevelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for LevelWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_print() {
        let w: SignedWord = "g,h^-1,g".parse().unwrap();
        assert_eq!(w.0, vec![Gen::new("g"), Gen::inv("h"), Gen::new("g")]);
        assert_eq!(w.to_string(), "g,h^-1,g");
        assert_eq!("".parse::<SignedWord>().unwrap(), SignedWord::identity());
        assert_eq!("Id".parse::<SignedWord>().unwrap().to_string(), "Id");
        assert_eq!(
            "g^2 h^-2".parse::<SignedWord>().unwrap().to_string(),
            "g,g,h^-1,h^-1"
        );
        assert!("g^0".parse::<SignedWord>().is_err());
        assert!("g^x".parse::<SignedWord>().is_err());
    }

    #[test]
    fn reduction() {
        let w: SignedWord = "g,h,h^-1,g^-1,h".parse().unwrap();
        assert_eq!(w.reduced().to_string(), "h");
        let a: SignedWord = "g,h".parse().unwrap();
        assert_eq!((&a * &a.inverse()), SignedWord::identity());
        assert_eq!(w.exponent_sum("h"), 1);
        assert_eq!(w.exponent_sum("g"), 0);
    }

    #[test]
    fn level_words() {
        let spec = AlphabetSpec::new(["*"], ["z"]).unwrap();
        let v = LevelWord::parse_in(&spec, "*, 0,z:5").unwrap();
        assert_eq!(v.to_string(), "*,z:0,z:5");
        assert!(LevelWord::parse_in(&spec, "*,q").is_err());
    }

    fn arb_word() -> impl Strategy<Value = SignedWord> {
        prop::collection::vec((0..3usize, any::<bool>()), 0..12).prop_map(|v| {
            SignedWord(
                v.into_iter()
                    .map(|(s, inv)| Gen {
                        state: ["a", "b", "c"][s].into(),
                        inverse: inv,
                    })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_and_associative(a in arb_word(), b in arb_word(), c in arb_word()) {
            let r = a.reduced();
            prop_assert_eq!(r.reduced(), r.clone());
            prop_assert!(r.0.windows(2).all(|w| !w[0].cancels(&w[1])));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(r.to_string().parse::<SignedWord>().unwrap(), r);
        }
    }
}
