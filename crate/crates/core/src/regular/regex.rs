//! Regex concrete syntax.
//!
//! ```text
//! union   := concat ('|' concat)*
//! concat  := postfix*
//! postfix := atom ('*' | '+' | '?')*
//! atom    := symbol | '(' union ')' | '[' ']'
//! ```
//!
//! `()` is the empty string and `[]` the empty language. Whitespace is
//! ignored; there are no escapes or character classes.

use std::fmt;

use thiserror::Error;

use crate::alphabet::Alphabet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegexError {
    #[error("regex syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("regex symbol '{symbol}' at position {pos} is not in the alphabet {{{alphabet}}}")]
    UnknownSymbol {
        pos: usize,
        symbol: char,
        alphabet: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegexAst {
    Empty,
    Epsilon,
    Literal(char),
    Concat(Vec<RegexAst>),
    Union(Vec<RegexAst>),
    Star(Box<RegexAst>),
    Plus(Box<RegexAst>),
    Optional(Box<RegexAst>),
}

impl RegexAst {
    /// A union of literal words; the empty list gives the empty language.
    pub fn finite<S: AsRef<str>>(words: &[S]) -> RegexAst {
        let alts: Vec<RegexAst> = words
            .iter()
            .map(|w| {
                let lits: Vec<RegexAst> = w.as_ref().chars().map(RegexAst::Literal).collect();
                match lits.len() {
                    0 => RegexAst::Epsilon,
                    1 => lits.into_iter().next().unwrap(),
                    _ => RegexAst::Concat(lits),
                }
            })
            .collect();
        match alts.len() {
            0 => RegexAst::Empty,
            1 => alts.into_iter().next().unwrap(),
            _ => RegexAst::Union(alts),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RegexAst::Union(_) => 0,
            RegexAst::Concat(_) => 1,
            RegexAst::Star(_) | RegexAst::Plus(_) | RegexAst::Optional(_) => 2,
            _ => 3,
        }
    }

    fn fmt_child(&self, child: &RegexAst, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if child.precedence() < min {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegexAst::Empty => f.write_str("[]"),
            RegexAst::Epsilon => f.write_str("()"),
            RegexAst::Literal(c) => write!(f, "{c}"),
            RegexAst::Concat(items) => {
                for item in items {
                    self.fmt_child(item, 2, f)?;
                }
                Ok(())
            }
            RegexAst::Union(items) => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str("|")?;
                    }
                    self.fmt_child(item, 1, f)?;
                }
                Ok(())
            }
            RegexAst::Star(c) => {
                self.fmt_child(c, 3, f)?;
                f.write_str("*")
            }
            RegexAst::Plus(c) => {
                self.fmt_child(c, 3, f)?;
                f.write_str("+")
            }
            RegexAst::Optional(c) => {
                self.fmt_child(c, 3, f)?;
                f.write_str("?")
            }
        }
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn end_pos(&self) -> usize {
        self.chars.last().map(|&(p, _)| p + 1).unwrap_or(0)
    }

    fn syntax<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, RegexError> {
        Err(RegexError::Syntax {
            pos,
            message: message.into(),
        })
    }

    fn union(&mut self) -> Result<RegexAst, RegexError> {
        let mut alts = vec![self.concat()?];
        while let Some((_, '|')) = self.peek() {
            self.at += 1;
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 {
            alts.pop().unwrap()
        } else {
            RegexAst::Union(alts)
        })
    }

    fn concat(&mut self) -> Result<RegexAst, RegexError> {
        let mut items = Vec::new();
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            items.push(self.postfix()?);
        }
        Ok(match items.len() {
            0 => RegexAst::Epsilon,
            1 => items.pop().unwrap(),
            _ => RegexAst::Concat(items),
        })
    }

    fn postfix(&mut self) -> Result<RegexAst, RegexError> {
        let mut node = self.atom()?;
        while let Some((_, c)) = self.peek() {
            node = match c {
                '*' => RegexAst::Star(Box::new(node)),
                '+' => RegexAst::Plus(Box::new(node)),
                '?' => RegexAst::Optional(Box::new(node)),
                _ => break,
            };
            self.at += 1;
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<RegexAst, RegexError> {
        let Some((pos, c)) = self.peek() else {
            return self.syntax(self.end_pos(), "unexpected end of pattern");
        };
        self.at += 1;
        match c {
            '(' => {
                let inner = self.union()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => self.syntax(pos, "unclosed '('"),
                }
            }
            '[' => match self.peek() {
                Some((_, ']')) => {
                    self.at += 1;
                    Ok(RegexAst::Empty)
                }
                _ => self.syntax(
                    pos,
                    "'[' must be followed by ']' (character classes are not supported)",
                ),
            },
            '*' | '+' | '?' => self.syntax(pos, format!("'{c}' has nothing to repeat")),
            ']' => self.syntax(pos, "unmatched ']'"),
            _ if self.alphabet.contains(c) => Ok(RegexAst::Literal(c)),
            _ => Err(RegexError::UnknownSymbol {
                pos,
                symbol: c,
                alphabet: self.alphabet.to_string(),
            }),
        }
    }
}

/// Parses `text` and checks every literal against `alphabet`.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<RegexAst, RegexError> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        chars,
        at: 0,
        alphabet,
    };
    let ast = parser.union()?;
    if let Some((pos, c)) = parser.peek() {
        return parser.syntax(pos, format!("unexpected '{c}'"));
    }
    Ok(ast)
}

#[cfg(test)]
mod tests {
    use super::*;
    use RegexAst::*;

    fn ab() -> Alphabet {
        Alphabet::new(['a', 'b']).unwrap()
    }

    #[test]
    fn parses_aaaab_languages() {
        assert_eq!(
            parse_regex("aaaab*", &ab()).unwrap(),
            Concat(vec![
                Literal('a'),
                Literal('a'),
                Literal('a'),
                Literal('a'),
                Star(Box::new(Literal('b')))
            ])
        );
        assert_eq!(
            parse_regex("(uu)*ddd", &Alphabet::procedure()).unwrap(),
            Concat(vec![
                Star(Box::new(Concat(vec![Literal('u'), Literal('u')]))),
                Literal('d'),
                Literal('d'),
                Literal('d')
            ])
        );
    }

    #[test]
    fn epsilon_and_empty() {
        assert_eq!(parse_regex("()", &ab()).unwrap(), Epsilon);
        assert_eq!(parse_regex("", &ab()).unwrap(), Epsilon);
        assert_eq!(parse_regex("[]", &ab()).unwrap(), Empty);
        assert_eq!(
            parse_regex("a|", &ab()).unwrap(),
            Union(vec![Literal('a'), Epsilon])
        );
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse_regex("ab|b*?", &ab()).unwrap(),
            Union(vec![
                Concat(vec![Literal('a'), Literal('b')]),
                Optional(Box::new(Star(Box::new(Literal('b')))))
            ])
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_regex("a(b", &ab()),
            Err(RegexError::Syntax {
                pos: 1,
                message: "unclosed '('".into()
            })
        );
        assert!(matches!(
            parse_regex("ac", &ab()),
            Err(RegexError::UnknownSymbol {
                pos: 1,
                symbol: 'c',
                ..
            })
        ));
        assert!(matches!(
            parse_regex("*a", &ab()),
            Err(RegexError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_regex("a)", &ab()),
            Err(RegexError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_regex("[a]", &ab()),
            Err(RegexError::Syntax { pos: 0, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in ["aaaab*", "(ab)*", "a|b()", "(a|b)+b?", "[]", "()"] {
            let ast = parse_regex(text, &ab()).unwrap();
            assert_eq!(parse_regex(&ast.to_string(), &ab()).unwrap(), ast, "{text}");
        }
    }

    #[test]
    fn finite_union() {
        assert_eq!(RegexAst::finite::<&str>(&[]), Empty);
        assert_eq!(RegexAst::finite(&[""]), Epsilon);
        assert_eq!(
            RegexAst::finite(&["ab", "b"]),
            Union(vec![Concat(vec![Literal('a'), Literal('b')]), Literal('b')])
        );
    }
}
