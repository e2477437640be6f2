//! Grammar text format: one production group per line,
//!
//! ```text
//! S -> a S b | eps
//! ```
//!
//! Nonterminals are identifiers starting with an uppercase letter, terminals
//! are single characters from the alphabet (a token such as `ab` is read as
//! the terminals `a b`), and `eps` is the empty right-hand side. The start
//! symbol is the left-hand side of the first line.

use std::fmt;

use thiserror::Error;

use crate::alphabet::Alphabet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrammarError {
    #[error("grammar line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("grammar line {line}: nonterminal '{name}' has no productions")]
    Undeclared { line: usize, name: String },
    #[error("grammar line {line}: terminal '{symbol}' is not in the alphabet {{{alphabet}}}")]
    UnknownTerminal {
        line: usize,
        symbol: char,
        alphabet: String,
    },
    #[error("grammar has no productions")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Terminal(char),
    Nonterminal(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Production {
    pub lhs: usize,
    pub rhs: Vec<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    pub alphabet: Alphabet,
    pub nonterminals: Vec<String>,
    pub start: usize,
    pub productions: Vec<Production>,
}

fn is_identifier(token: &str) -> bool {
    let mut chars = token.chars();
    chars.next().is_some_and(|c| c.is_ascii_uppercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Grammar {
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Grammar, GrammarError> {
        let mut lines: Vec<(usize, &str, &str)> = Vec::new();
        let mut nonterminals: Vec<String> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((lhs, rhs)) = line.split_once("->") else {
                return Err(GrammarError::Syntax {
                    line: i + 1,
                    message: "expected 'A -> ...'".into(),
                });
            };
            let lhs = lhs.trim();
            if !is_identifier(lhs) {
                return Err(GrammarError::Syntax {
                    line: i + 1,
                    message: format!("'{lhs}' is not a nonterminal"),
                });
            }
            if !nonterminals.iter().any(|n| n == lhs) {
                nonterminals.push(lhs.to_string());
            }
            lines.push((i + 1, lhs, rhs));
        }
        if lines.is_empty() {
            return Err(GrammarError::Empty);
        }

        let index = |name: &str| nonterminals.iter().position(|n| n == name);
        let mut productions = Vec::new();
        for (line, lhs, rhs) in lines {
            let lhs = index(lhs).expect("collected above");
            for alt in rhs.split('|') {
                let mut symbols = Vec::new();
                let tokens: Vec<&str> = alt.split_whitespace().collect();
                if tokens.is_empty() {
                    return Err(GrammarError::Syntax {
                        line,
                        message: "empty alternative (write 'eps' for the empty string)".into(),
                    });
                }
                if tokens == ["eps"] {
                    productions.push(Production { lhs, rhs: symbols });
                    continue;
                }
                for token in tokens {
                    if token == "eps" {
                        return Err(GrammarError::Syntax {
                            line,
                            message: "'eps' must stand alone".into(),
                        });
                    }
                    if token.starts_with(|c: char| c.is_ascii_uppercase()) {
                        if !is_identifier(token) {
                            return Err(GrammarError::Syntax {
                                line,
                                message: format!("'{token}' is not a nonterminal"),
                            });
                        }
                        let id = index(token).ok_or_else(|| GrammarError::Undeclared {
                            line,
                            name: token.to_string(),
                        })?;
                        symbols.push(Symbol::Nonterminal(id));
                    } else {
                        for c in token.chars() {
                            if !alphabet.contains(c) || c.is_ascii_uppercase() {
                                return Err(GrammarError::UnknownTerminal {
                                    line,
                                    symbol: c,
                                    alphabet: alphabet.to_string(),
                                });
                            }
                            symbols.push(Symbol::Terminal(c));
                        }
                    }
                }
                productions.push(Production { lhs, rhs: symbols });
            }
        }
        Ok(Grammar {
            alphabet: alphabet.clone(),
            nonterminals,
            start: 0,
            productions,
        })
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, name) in self.nonterminals.iter().enumerate() {
            let alts: Vec<String> = self
                .productions
                .iter()
                .filter(|p| p.lhs == id)
                .map(|p| {
                    if p.rhs.is_empty() {
                        return "eps".to_string();
                    }
                    p.rhs
                        .iter()
                        .map(|s| match s {
                            Symbol::Terminal(c) => c.to_string(),
                            Symbol::Nonterminal(n) => self.nonterminals[*n].clone(),
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            if !alts.is_empty() {
                writeln!(f, "{name} -> {}", alts.join(" | "))?;
            }
        }
        Ok(())
    }
}
