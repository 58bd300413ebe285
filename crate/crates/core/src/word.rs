//! Finite words over the positive integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integer letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: u32) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl From<Vec<u32>> for Word {
    fn from(letters: Vec<u32>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    /// Letters separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", letters.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts letters separated by whitespace and/or commas.
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<u32>() {
                Ok(0) => Err(Error::Parse("letters must be positive".into())),
                Ok(v) => Ok(v),
                Err(e) => Err(Error::Parse(format!("bad letter {t:?}: {e}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Every word of length `len` over `[1, m]`, in lexicographic order.
pub fn all_words(len: usize, m: u32) -> Vec<Word> {
    let mut out = Vec::with_capacity((m as usize).pow(len as u32));
    let mut letters = vec![1u32; len];
    if m == 0 {
        return if len == 0 { vec![Word::default()] } else { out };
    }
    loop {
        out.push(Word(letters.clone()));
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if letters[i] < m {
                letters[i] += 1;
                break;
            }
            letters[i] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w: Word = "4 2 3 1 2".parse().unwrap();
        assert_eq!(w.letters(), &[4, 2, 3, 1, 2]);
        assert_eq!(w.to_string(), "4 2 3 1 2");
        assert_eq!("1,2, 3".parse::<Word>().unwrap(), Word(vec![1, 2, 3]));
        assert!("0 1".parse::<Word>().is_err());
        assert_eq!("".parse::<Word>().unwrap(), Word::default());
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(0, 3), vec![Word::default()]);
        assert_eq!(all_words(3, 2).len(), 8);
        assert_eq!(all_words(2, 3)[1], Word(vec![1, 2]));
        assert_eq!(all_words(4, 4).len(), 256);
    }
}
