//! The `.fsys` text format:
//!
//! ```text
//! alphabet = a b
//! core.kind = regex
//! core.regex = aaaab*
//! proc.kind = cfg
//! proc.cfg = S -> u S d | eps
//! ```
//!
//! `#` starts a comment. `*.cfg` lines accumulate into one grammar; every
//! other key may appear once. The procedure alphabet is always `{u, d}`.

use thiserror::Error;

use crate::alphabet::{Alphabet, AlphabetError};
use crate::cfg::{ContextFreeLang, GrammarError};
use crate::regular::{RegexError, RegularLang};

use super::{FSystem, Language};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemFileError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing '{0}'")]
    Missing(String),
    #[error("alphabet: {0}")]
    Alphabet(#[from] AlphabetError),
    #[error("{component} regex: {source}")]
    Regex {
        component: &'static str,
        source: RegexError,
    },
    #[error("{component} grammar: {source}")]
    Grammar {
        component: &'static str,
        source: GrammarError,
    },
}

#[derive(Default)]
struct Component {
    kind: Option<(usize, String)>,
    regex: Option<(usize, String)>,
    cfg: Vec<String>,
    cfg_line: Option<usize>,
}

impl Component {
    fn build(self, name: &'static str, alphabet: &Alphabet) -> Result<Language, SystemFileError> {
        let (line, kind) = self
            .kind
            .ok_or_else(|| SystemFileError::Missing(format!("{name}.kind")))?;
        match kind.as_str() {
            "regex" => {
                if let Some(line) = self.cfg_line {
                    return Err(SystemFileError::Syntax {
                        line,
                        message: format!("{name}.cfg given but {name}.kind = regex"),
                    });
                }
                let (_, text) = self
                    .regex
                    .ok_or_else(|| SystemFileError::Missing(format!("{name}.regex")))?;
                RegularLang::parse(&text, alphabet)
                    .map(Language::Regular)
                    .map_err(|source| SystemFileError::Regex {
                        component: name,
                        source,
                    })
            }
            "cfg" => {
                if let Some((line, _)) = self.regex {
                    return Err(SystemFileError::Syntax {
                        line,
                        message: format!("{name}.regex given but {name}.kind = cfg"),
                    });
                }
                if self.cfg.is_empty() {
                    return Err(SystemFileError::Missing(format!("{name}.cfg")));
                }
                ContextFreeLang::parse(&self.cfg.join("\n"), alphabet)
                    .map(Language::ContextFree)
                    .map_err(|source| SystemFileError::Grammar {
                        component: name,
                        source,
                    })
            }
            other => Err(SystemFileError::Syntax {
                line,
                message: format!("unknown kind '{other}' (expected regex or cfg)"),
            }),
        }
    }
}

fn set_once(
    slot: &mut Option<(usize, String)>,
    line: usize,
    key: &str,
    value: &str,
) -> Result<(), SystemFileError> {
    if let Some((first, _)) = slot {
        return Err(SystemFileError::Syntax {
            line,
            message: format!("'{key}' already set on line {first}"),
        });
    }
    *slot = Some((line, value.to_string()));
    Ok(())
}

pub(super) fn parse(text: &str) -> Result<FSystem, SystemFileError> {
    let mut alphabet: Option<(usize, String)> = None;
    let mut core = Component::default();
    let mut proc = Component::default();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(SystemFileError::Syntax {
                line,
                message: "expected 'key = value'".into(),
            });
        };
        let (key, value) = (key.trim(), value.trim());
        let (component, field) = match key.split_once('.') {
            Some(("core", field)) => (Some(&mut core), field),
            Some(("proc", field)) => (Some(&mut proc), field),
            None if key == "alphabet" => (None, ""),
            _ => {
                return Err(SystemFileError::Syntax {
                    line,
                    message: format!("unknown key '{key}'"),
                })
            }
        };
        let Some(c) = component else {
            set_once(&mut alphabet, line, key, value)?;
            continue;
        };
        match field {
            "kind" => set_once(&mut c.kind, line, key, value)?,
            "regex" => set_once(&mut c.regex, line, key, value)?,
            "cfg" => {
                c.cfg_line.get_or_insert(line);
                c.cfg.push(value.to_string());
            }
            "alphabet" if key.starts_with("proc") => {
                return Err(SystemFileError::Syntax {
                    line,
                    message: "the procedure alphabet is fixed to {u d} and cannot be declared"
                        .into(),
                })
            }
            _ => {
                return Err(SystemFileError::Syntax {
                    line,
                    message: format!("unknown key '{key}'"),
                })
            }
        }
    }

    let (line, symbols) = alphabet.ok_or_else(|| SystemFileError::Missing("alphabet".into()))?;
    let mut chars = Vec::new();
    for token in symbols.split_whitespace() {
        let mut it = token.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => chars.push(c),
            _ => {
                return Err(SystemFileError::Syntax {
                    line,
                    message: format!("alphabet symbol '{token}' is not a single character"),
                })
            }
        }
    }
    let sigma = Alphabet::new(chars)?;
    let core = core.build("core", &sigma)?;
    let procedure = proc.build("proc", &Alphabet::procedure())?;
    Ok(FSystem::new(core, procedure).expect("procedure built over {u, d}"))
}
