//! Refuting pump families over a one-letter alphabet.
//!
//! A unary family pumps to `a^(f + i l)` where `f` is the fixed length and
//! `l` the pumped total. If `k = f + l` is prime then `i = k + 1` gives
//! `k (1 + l)`, which is composite, so no such family stays inside the
//! primes.

use std::fmt;
use std::str::FromStr;

use super::{PumpError, PumpFamily};

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryPredicate {
    Primes,
    Even,
}

impl UnaryPredicate {
    pub fn holds(self, n: usize) -> bool {
        match self {
            UnaryPredicate::Primes => is_prime(n),
            UnaryPredicate::Even => n.is_multiple_of(2),
        }
    }
}

impl FromStr for UnaryPredicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "primes" => Ok(UnaryPredicate::Primes),
            "even" => Ok(UnaryPredicate::Even),
            other => Err(format!(
                "unknown predicate '{other}' (expected primes or even)"
            )),
        }
    }
}

impl fmt::Display for UnaryPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnaryPredicate::Primes => "primes",
            UnaryPredicate::Even => "even",
        })
    }
}

/// The smallest `i` in `1..=bound` whose pumped length fails `predicate`.
/// `i = 0` is skipped: dropping the pumped parts entirely can leave
/// lengths (such as 0 or 1) that say nothing about the family's base word.
pub fn refute_unary_family<P: Fn(usize) -> bool>(
    predicate: P,
    family: &PumpFamily,
    bound: usize,
) -> Result<Option<usize>, PumpError> {
    family.validate()?;
    let mut symbols = family.parts.iter().flat_map(|p| p.chars());
    if let Some(first) = symbols.next() {
        if symbols.any(|c| c != first) {
            return Err(PumpError::NonUnary);
        }
    }
    let (fixed, pumped) = (family.fixed_total(), family.pumped_total());
    Ok((1..=bound).find(|&i| !predicate(fixed + i * pumped)))
}
