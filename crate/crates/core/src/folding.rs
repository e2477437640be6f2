//! The folding operation.
//!
//! A core string `w` is folded under a procedure string `v` over `{u, d}`:
//! each symbol of `w` is placed on top of the growing stack when its
//! direction is `u` and underneath it when the direction is `d`. The result
//! is the stack read from top to bottom.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

use crate::alphabet::{Alphabet, AlphabetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoldError {
    /// The fold is only defined for strings of equal length.
    #[error("fold undefined: core length {core} differs from procedure length {procedure}")]
    UndefinedFold { core: usize, procedure: usize },
    #[error("'{0}' is not a folding direction (expected 'u' or 'd')")]
    BadDirection(char),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn symbol(self) -> char {
        match self {
            Direction::Up => 'u',
            Direction::Down => 'd',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self, FoldError> {
        match c {
            'u' => Ok(Direction::Up),
            'd' => Ok(Direction::Down),
            other => Err(FoldError::BadDirection(other)),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A folding procedure: a string over `{u, d}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProcString(Vec<Direction>);

impl ProcString {
    pub fn new(directions: Vec<Direction>) -> Self {
        ProcString(directions)
    }

    pub fn into_inner(self) -> Vec<Direction> {
        self.0
    }
}

impl Deref for ProcString {
    type Target = [Direction];

    fn deref(&self) -> &[Direction] {
        &self.0
    }
}

impl FromStr for ProcString {
    type Err = FoldError;

    fn from_str(s: &str) -> Result<Self, FoldError> {
        s.chars()
            .map(Direction::from_symbol)
            .collect::<Result<Vec<_>, _>>()
            .map(ProcString)
    }
}

impl fmt::Display for ProcString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromIterator<Direction> for ProcString {
    fn from_iter<I: IntoIterator<Item = Direction>>(iter: I) -> Self {
        ProcString(iter.into_iter().collect())
    }
}

/// One application of the single-step fold to `stack`.
pub fn fold_step(
    alphabet: &Alphabet,
    stack: &str,
    symbol: char,
    direction: Direction,
) -> Result<String, FoldError> {
    alphabet.check(symbol)?;
    let mut out = String::with_capacity(stack.len() + symbol.len_utf8());
    match direction {
        Direction::Up => {
            out.push(symbol);
            out.push_str(stack);
        }
        Direction::Down => {
            out.push_str(stack);
            out.push(symbol);
        }
    }
    Ok(out)
}

fn check_lengths(core: usize, procedure: usize) -> Result<(), FoldError> {
    if core != procedure {
        return Err(FoldError::UndefinedFold { core, procedure });
    }
    Ok(())
}

/// Folds a symbol sequence; generic over the symbol type so that engines can
/// fold index-encoded words directly.
pub fn fold_symbols<T: Copy>(w: &[T], v: &[Direction]) -> Result<Vec<T>, FoldError> {
    check_lengths(w.len(), v.len())?;
    let mut stack = VecDeque::with_capacity(w.len());
    for (&a, &b) in w.iter().zip(v) {
        match b {
            Direction::Up => stack.push_front(a),
            Direction::Down => stack.push_back(a),
        }
    }
    Ok(stack.into())
}

/// Folds `w` according to `v`. Undefined (an error) when the lengths differ.
pub fn fold(w: &str, v: &ProcString) -> Result<String, FoldError> {
    let symbols: Vec<char> = w.chars().collect();
    fold_symbols(&symbols, v).map(|s| s.into_iter().collect())
}

/// Splits `w` into the subsequences folded up and folded down, each in its
/// original order.
pub fn split_updown(w: &str, v: &ProcString) -> Result<(String, String), FoldError> {
    let symbols: Vec<char> = w.chars().collect();
    check_lengths(symbols.len(), v.len())?;
    let mut up = String::new();
    let mut down = String::new();
    for (&a, &b) in symbols.iter().zip(v.iter()) {
        match b {
            Direction::Up => up.push(a),
            Direction::Down => down.push(a),
        }
    }
    Ok((up, down))
}

/// For a procedure `v`, the positions of the input read by each output
/// position: `fold(w, v)[p] == w[perm[p]]`.
pub fn fold_permutation(v: &[Direction]) -> Vec<usize> {
    let positions: Vec<usize> = (0..v.len()).collect();
    fold_symbols(&positions, v).expect("lengths agree by construction")
}

/// The unique `w` with `fold(w, v) == folded`.
pub fn unfold_symbols<T: Copy>(folded: &[T], v: &[Direction]) -> Result<Vec<T>, FoldError> {
    check_lengths(folded.len(), v.len())?;
    let perm = fold_permutation(v);
    let mut out: Vec<Option<T>> = vec![None; folded.len()];
    for (p, &src) in perm.iter().enumerate() {
        out[src] = Some(folded[p]);
    }
    Ok(out.into_iter().map(|s| s.expect("permutation")).collect())
}

pub fn unfold(folded: &str, v: &ProcString) -> Result<String, FoldError> {
    let symbols: Vec<char> = folded.chars().collect();
    unfold_symbols(&symbols, v).map(|s| s.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldStep {
    /// The stack after this step; step `t` (1-based) holds `t` symbols.
    pub stack: String,
    pub symbol: char,
    pub direction: Direction,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FoldTrace {
    pub steps: Vec<FoldStep>,
}

impl FoldTrace {
    pub fn result(&self) -> &str {
        self.steps.last().map(|s| s.stack.as_str()).unwrap_or("")
    }
}

pub fn fold_trace(w: &str, v: &ProcString) -> Result<FoldTrace, FoldError> {
    let symbols: Vec<char> = w.chars().collect();
    check_lengths(symbols.len(), v.len())?;
    let mut stack: VecDeque<char> = VecDeque::with_capacity(symbols.len());
    let mut steps = Vec::with_capacity(symbols.len());
    for (&a, &b) in symbols.iter().zip(v.iter()) {
        match b {
            Direction::Up => stack.push_front(a),
            Direction::Down => stack.push_back(a),
        }
        steps.push(FoldStep {
            stack: stack.iter().collect(),
            symbol: a,
            direction: b,
        });
    }
    Ok(FoldTrace { steps })
}
