//! Regular languages: regex syntax, automaton compilation, membership,
//! per-length enumeration and pumping decomposition.

mod dfa;
mod regex;

pub use dfa::Dfa;
pub use regex::{parse_regex, RegexAst, RegexError};

use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::limit::LimitExceeded;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("'{0}' is not in the language")]
    NotMember(String),
    #[error("'{word}' is shorter than the pumping length {pumping_length}")]
    TooShort { word: String, pumping_length: usize },
}

/// `w = x y z` with `x y^i z` in the language for every `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegDecomposition {
    pub x: String,
    pub y: String,
    pub z: String,
}

impl RegDecomposition {
    pub fn pump(&self, i: usize) -> String {
        format!("{}{}{}", self.x, self.y.repeat(i), self.z)
    }
}

/// A regular language given by a regex and its compiled automaton.
#[derive(Debug, Clone)]
pub struct RegularLang {
    ast: RegexAst,
    dfa: Dfa,
}

impl RegularLang {
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, RegexError> {
        Ok(Self::from_ast(parse_regex(text, alphabet)?, alphabet))
    }

    pub fn from_ast(ast: RegexAst, alphabet: &Alphabet) -> Self {
        let dfa = Dfa::compile(&ast, alphabet);
        RegularLang { ast, dfa }
    }

    pub fn ast(&self) -> &RegexAst {
        &self.ast
    }

    pub fn automaton(&self) -> &Dfa {
        &self.dfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.dfa.alphabet()
    }

    /// Words containing foreign symbols are simply not members.
    pub fn member(&self, w: &str) -> bool {
        self.alphabet()
            .try_encode(w)
            .is_some_and(|word| self.dfa.accepts(&word))
    }

    pub fn enumerate_length(&self, n: usize, cap: usize) -> Result<Vec<String>, LimitExceeded> {
        Ok(self
            .dfa
            .enumerate_length(n, cap)?
            .iter()
            .map(|w| self.alphabet().decode(w))
            .collect())
    }

    pub fn first_of_length(&self, n: usize) -> Option<String> {
        self.dfa
            .first_of_length(n)
            .map(|w| self.alphabet().decode(&w))
    }

    pub fn nonempty_lengths(&self, max: usize) -> Vec<bool> {
        self.dfa.nonempty_lengths(max)
    }

    pub fn is_infinite(&self) -> bool {
        self.dfa.is_infinite()
    }

    /// The state count of the minimal complete automaton.
    pub fn pumping_length(&self) -> usize {
        self.dfa.state_count()
    }

    /// Splits `w` at the first state repetition along its run: `y` is the
    /// leftmost, shortest loop.
    pub fn decompose(&self, w: &str) -> Result<RegDecomposition, DecomposeError> {
        let word = match self.alphabet().try_encode(w) {
            Some(word) if self.dfa.accepts(&word) => word,
            _ => return Err(DecomposeError::NotMember(w.to_string())),
        };
        let p = self.pumping_length();
        if word.len() < p {
            return Err(DecomposeError::TooShort {
                word: w.to_string(),
                pumping_length: p,
            });
        }
        let states = self.dfa.run(&word);
        let mut first_seen = vec![None; self.dfa.state_count()];
        for (t, &q) in states.iter().enumerate() {
            if let Some(s) = first_seen[q] {
                let a = self.alphabet();
                return Ok(RegDecomposition {
                    x: a.decode(&word[..s]),
                    y: a.decode(&word[s..t]),
                    z: a.decode(&word[t..]),
                });
            }
            first_seen[q] = Some(t);
        }
        unreachable!("a run of length >= state count repeats a state")
    }
}
