//! Words over the idempotent alphabet of a biordered set.
//!
//! A [`Word`] is a sequence of letters, each letter an index into the
//! idempotent set E. Non-empty words are elements of the free semigroup
//! on E; the empty word is allowed where a formal identity is needed
//! (witness multipliers).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Index of an idempotent within a biordered set.
pub type Letter = u16;

#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letter(&self, i: usize) -> Letter {
        self.0[i]
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `k`-fold repetition; `power(0)` is the empty word.
    pub fn power(&self, k: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// The prefix holding the first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// The suffix starting at letter `n`.
    pub fn suffix(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    /// Shortlex order: shorter words first, ties broken lexicographically.
    pub fn shortlex(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl<const N: usize> From<[Letter; N]> for Word {
    fn from(letters: [Letter; N]) -> Self {
        Word(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Parse a comma-separated list of letter indices, e.g. `0,2,1`.
pub fn parse_word_csv(input: &str) -> Result<Word, String> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err("empty word".to_owned());
    }
    let mut letters = Vec::new();
    for (i, part) in trimmed.split(',').enumerate() {
        let part = part.trim();
        if part.is_empty() {
            return Err(format!("empty letter at position {i}"));
        }
        let letter: Letter = part
            .parse()
            .map_err(|_| format!("invalid letter '{part}' at position {i}"))?;
        letters.push(letter);
    }
    Ok(Word::new(letters))
}
