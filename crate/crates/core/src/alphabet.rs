//! Ordered symbol sets.
//!
//! Every language engine works on symbol *indices* into an [`Alphabet`] so
//! that the derived `Ord` on `Vec<u8>` is lexicographic order by declaration
//! order, which is the order used for all enumeration output.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("alphabet is empty")]
    Empty,
    #[error("duplicate symbol '{0}' in alphabet")]
    Duplicate(char),
    #[error("symbol '{0}' may not be used in an alphabet")]
    Reserved(char),
    #[error("alphabet holds at most 255 symbols")]
    TooLarge,
    #[error("symbol '{symbol}' is not in the alphabet {{{alphabet}}}")]
    UnknownSymbol { symbol: char, alphabet: String },
}

/// Characters that carry meaning in the regex and system-file syntax.
const RESERVED: &[char] = &['(', ')', '[', ']', '|', '*', '+', '?', '#', '=', '"'];

/// A non-empty, duplicate-free, ordered set of single-character symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self, AlphabetError> {
        let mut out: Vec<char> = Vec::new();
        for c in symbols {
            if c.is_whitespace() || RESERVED.contains(&c) {
                return Err(AlphabetError::Reserved(c));
            }
            if out.contains(&c) {
                return Err(AlphabetError::Duplicate(c));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(AlphabetError::Empty);
        }
        if out.len() > u8::MAX as usize {
            return Err(AlphabetError::TooLarge);
        }
        Ok(Alphabet { symbols: out })
    }

    /// The folding-procedure alphabet, `u` before `d`.
    pub fn procedure() -> Self {
        Alphabet {
            symbols: vec!['u', 'd'],
        }
    }

    /// Distinct symbols of `text` in first-occurrence order.
    pub fn from_text(text: &str) -> Result<Self, AlphabetError> {
        let mut seen = Vec::new();
        for c in text.chars() {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        Alphabet::new(seen)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn contains(&self, c: char) -> bool {
        self.symbols.contains(&c)
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as u8)
    }

    pub fn symbol(&self, index: u8) -> char {
        self.symbols[index as usize]
    }

    pub fn check(&self, c: char) -> Result<u8, AlphabetError> {
        self.index_of(c)
            .ok_or_else(|| AlphabetError::UnknownSymbol {
                symbol: c,
                alphabet: self.to_string(),
            })
    }

    /// Encodes `text` as symbol indices, failing on the first foreign symbol.
    pub fn encode(&self, text: &str) -> Result<Vec<u8>, AlphabetError> {
        text.chars().map(|c| self.check(c)).collect()
    }

    /// Like [`Alphabet::encode`] but returns `None` instead of an error.
    pub fn try_encode(&self, text: &str) -> Option<Vec<u8>> {
        text.chars().map(|c| self.index_of(c)).collect()
    }

    pub fn decode(&self, word: &[u8]) -> String {
        word.iter().map(|&i| self.symbol(i)).collect()
    }

    /// Compares two words of this alphabet by (length, declaration order).
    pub fn shortlex_cmp(&self, a: &str, b: &str) -> std::cmp::Ordering {
        let ka = (a.chars().count(), self.try_encode(a));
        let kb = (b.chars().count(), self.try_encode(b));
        ka.cmp(&kb)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
