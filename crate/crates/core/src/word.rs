//! Finite words over the alphabet `{0, .., q-1}`.
//!
//! A [`Word`] does not carry its alphabet size; operations that depend on
//! the alphabet take `q` explicitly. Words order lexicographically, so sets
//! and maps keyed by words iterate deterministically.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest alphabet whose symbols print as single decimal digits.
pub const MAX_DIGIT_ALPHABET: u8 = 10;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<u8>);

impl Word {
    /// Wraps raw symbols without validating them against an alphabet.
    pub fn new(symbols: Vec<u8>) -> Self {
        Word(symbols)
    }

    /// Wraps symbols after checking each lies in `[0, q-1]`.
    pub fn with_alphabet(symbols: Vec<u8>, q: u8) -> Result<Self> {
        let w = Word(symbols);
        w.check_alphabet(q)?;
        Ok(w)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn repeat(symbol: u8, len: usize) -> Self {
        Word(vec![symbol; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    pub fn check_alphabet(&self, q: u8) -> Result<()> {
        match self.0.iter().find(|&&s| s >= q) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, q }),
            None => Ok(()),
        }
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&s| s != 0).count()
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&s| s < 2)
    }

    /// The word with `symbol` prepended.
    pub fn prepend(&self, symbol: u8) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(symbol);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// The word without its first symbol. Empty stays empty.
    pub fn tail(&self) -> Word {
        Word(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Rank of the word among all words of its length, in lexicographic order.
    pub fn index(&self, q: u8) -> u64 {
        self.0.iter().fold(0u64, |acc, &s| acc * u64::from(q) + u64::from(s))
    }

    /// Inverse of [`Word::index`].
    pub fn from_index(mut index: u64, len: usize, q: u8) -> Word {
        let q = u64::from(q);
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = (index % q) as u8;
            index /= q;
        }
        Word(v)
    }

    /// Serialization for fields that cannot be empty: the empty word is `-`.
    pub fn to_field(&self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            self.to_string()
        }
    }

    /// Parses a digit string, accepting `-` for the empty word.
    pub fn parse_field(s: &str) -> Result<Word> {
        if s == "-" {
            Ok(Word::empty())
        } else {
            s.parse()
        }
    }
}

/// Iterates over all `q^len` words of a given length in lexicographic order.
pub fn all_words(len: usize, q: u8) -> impl Iterator<Item = Word> {
    let total = word_count(len, q).expect("word space too large to enumerate");
    (0..total).map(move |i| Word::from_index(i, len, q))
}

/// `q^len`, or `None` when it does not fit in a `u64`.
pub fn word_count(len: usize, q: u8) -> Option<u64> {
    u64::from(q).checked_pow(u32::try_from(len).ok()?)
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Word> {
        s.parse()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("invalid symbol {c:?} in word {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            if s < MAX_DIGIT_ALPHABET {
                write!(f, "{s}")?;
            } else {
                write!(f, "[{s}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}
