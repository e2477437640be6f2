//! Folding systems.
//!
//! An [`FSystem`] pairs a core language over an arbitrary alphabet with a
//! procedure language over `{u, d}`. Its language is every fold of an
//! equal-length (core, procedure) pair. Everything here is decided by
//! exhaustive enumeration per length, guarded by [`Limits`].

mod system_file;

pub use system_file::SystemFileError;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::cfg::ContextFreeLang;
use crate::folding::{fold_symbols, unfold_symbols, Direction, FoldError};
use crate::limit::LimitExceeded;
use crate::regular::{RegexAst, RegularLang};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FsError {
    #[error(transparent)]
    Limit(#[from] LimitExceeded),
    #[error(
        "NoEqualLengthPair: no length n in {min_len}..={ceiling} has both a core and a procedure word"
    )]
    NoEqualLengthPair { min_len: usize, ceiling: usize },
    #[error("the procedure language must be over {{u d}}, found {{{0}}}")]
    ProcedureAlphabet(String),
    #[error(transparent)]
    Fold(#[from] FoldError),
}

/// Caps for the exhaustive oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum (core, procedure) candidate pairs examined at one length;
    /// also bounds each per-length enumeration.
    pub max_pairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LanguageKind {
    Regular,
    ContextFree,
}

impl fmt::Display for LanguageKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LanguageKind::Regular => "regex",
            LanguageKind::ContextFree => "cfg",
        })
    }
}

/// A component language of a folding system.
#[derive(Debug, Clone)]
pub enum Language {
    Regular(RegularLang),
    ContextFree(ContextFreeLang),
}

impl Language {
    pub fn kind(&self) -> LanguageKind {
        match self {
            Language::Regular(_) => LanguageKind::Regular,
            Language::ContextFree(_) => LanguageKind::ContextFree,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Language::Regular(l) => l.alphabet(),
            Language::ContextFree(l) => l.alphabet(),
        }
    }

    pub fn member(&self, w: &str) -> bool {
        match self {
            Language::Regular(l) => l.member(w),
            Language::ContextFree(l) => l.member(w),
        }
    }

    pub fn enumerate_length(&self, n: usize, cap: usize) -> Result<Vec<String>, LimitExceeded> {
        match self {
            Language::Regular(l) => l.enumerate_length(n, cap),
            Language::ContextFree(l) => l.enumerate_length(n, cap),
        }
    }

    pub fn first_of_length(&self, n: usize) -> Option<String> {
        match self {
            Language::Regular(l) => l.first_of_length(n),
            Language::ContextFree(l) => l.first_of_length(n),
        }
    }

    pub fn nonempty_lengths(&self, max: usize) -> Vec<bool> {
        match self {
            Language::Regular(l) => l.nonempty_lengths(max),
            Language::ContextFree(l) => l.nonempty_lengths(max),
        }
    }

    pub fn is_infinite(&self) -> bool {
        match self {
            Language::Regular(l) => l.is_infinite(),
            Language::ContextFree(l) => l.is_infinite(),
        }
    }

    pub fn pumping_length(&self) -> usize {
        match self {
            Language::Regular(l) => l.pumping_length(),
            Language::ContextFree(l) => l.pumping_length(),
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Language::Regular(l) => write!(f, "{}", l.ast()),
            Language::ContextFree(l) => {
                let text = l.grammar().to_string();
                f.write_str(text.trim_end().replace('\n', "; ").as_str())
            }
        }
    }
}

/// The (core, procedure) pair that folds to a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub core: String,
    pub procedure: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsWord {
    pub word: String,
    pub witness: Witness,
}

#[derive(Debug, Clone)]
pub struct FSystem {
    core: Language,
    procedure: Language,
}

fn directions(s: &str) -> Vec<Direction> {
    s.chars()
        .map(|c| Direction::from_symbol(c).expect("procedure alphabet is {u, d}"))
        .collect()
}

impl FSystem {
    pub fn new(core: Language, procedure: Language) -> Result<Self, FsError> {
        if *procedure.alphabet() != Alphabet::procedure() {
            return Err(FsError::ProcedureAlphabet(procedure.alphabet().to_string()));
        }
        Ok(FSystem { core, procedure })
    }

    pub fn core(&self) -> &Language {
        &self.core
    }

    pub fn procedure(&self) -> &Language {
        &self.procedure
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.core.alphabet()
    }

    /// Every fold of an equal-length pair of length at most `max_len`,
    /// deduplicated and ordered by (length, lexicographic). Each word keeps
    /// the first witness found (smallest core word, then procedure word).
    pub fn enumerate(&self, max_len: usize, limits: &Limits) -> Result<Vec<FsWord>, FsError> {
        let alphabet = self.alphabet();
        let mut out = Vec::new();
        for n in 0..=max_len {
            let cores = self.core.enumerate_length(n, limits.max_pairs)?;
            if cores.is_empty() {
                continue;
            }
            let procs = self.procedure.enumerate_length(n, limits.max_pairs)?;
            if cores.len().saturating_mul(procs.len()) > limits.max_pairs {
                return Err(LimitExceeded::new(
                    format!(
                        "{} x {} candidate pairs at length {n}",
                        cores.len(),
                        procs.len()
                    ),
                    limits.max_pairs,
                )
                .into());
            }
            let mut found: BTreeMap<Vec<u8>, Witness> = BTreeMap::new();
            for r in &cores {
                let word = alphabet
                    .encode(r)
                    .expect("core words use the core alphabet");
                for s in &procs {
                    let folded = fold_symbols(&word, &directions(s))?;
                    found.entry(folded).or_insert_with(|| Witness {
                        core: r.clone(),
                        procedure: s.clone(),
                    });
                }
            }
            out.extend(found.into_iter().map(|(w, witness)| FsWord {
                word: alphabet.decode(&w),
                witness,
            }));
        }
        Ok(out)
    }

    /// Decides membership. Folding with a fixed procedure is a bijection on
    /// positions, so each procedure word of length `|w|` determines the only
    /// core word that could fold to `w`; that word is then tested directly.
    pub fn member(&self, w: &str, limits: &Limits) -> Result<Option<Witness>, FsError> {
        let Some(word) = self.alphabet().try_encode(w) else {
            return Ok(None);
        };
        let procs = self
            .procedure
            .enumerate_length(word.len(), limits.max_pairs)?;
        for s in procs {
            let core = unfold_symbols(&word, &directions(&s))?;
            let core = self.alphabet().decode(&core);
            if self.core.member(&core) {
                return Ok(Some(Witness { core, procedure: s }));
            }
        }
        Ok(None)
    }

    /// The smallest `n >= min_len` (up to `ceiling`) at which both languages
    /// have words, with the lexicographically smallest word of each.
    pub fn equal_length_pair(
        &self,
        min_len: usize,
        ceiling: usize,
    ) -> Result<(String, String), FsError> {
        let not_found = FsError::NoEqualLengthPair { min_len, ceiling };
        if ceiling < min_len {
            return Err(not_found);
        }
        let core_lens = self.core.nonempty_lengths(ceiling);
        let proc_lens = self.procedure.nonempty_lengths(ceiling);
        let n = (min_len..=ceiling)
            .find(|&n| core_lens[n] && proc_lens[n])
            .ok_or(not_found)?;
        let r = self
            .core
            .first_of_length(n)
            .expect("length profile says non-empty");
        let s = self
            .procedure
            .first_of_length(n)
            .expect("length profile says non-empty");
        Ok((r, s))
    }

    /// For a finite word set `W`, the system `(W, d*)` whose language is `W`.
    pub fn finite_language<S: AsRef<str>>(alphabet: &Alphabet, words: &[S]) -> Self {
        let core = RegularLang::from_ast(RegexAst::finite(words), alphabet);
        let procedure = RegularLang::from_ast(
            RegexAst::Star(Box::new(RegexAst::Literal('d'))),
            &Alphabet::procedure(),
        );
        FSystem {
            core: Language::Regular(core),
            procedure: Language::Regular(procedure),
        }
    }

    pub fn parse_system(text: &str) -> Result<Self, SystemFileError> {
        system_file::parse(text)
    }

    pub fn load(path: &std::path::Path) -> Result<Self, SystemFileError> {
        let text = std::fs::read_to_string(path).map_err(|e| SystemFileError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        system_file::parse(&text)
    }
}
