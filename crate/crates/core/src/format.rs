//! The line-oriented `.lgs` logic-system format.
//!
//! ```text
//! # comment
//! standard: a1 a2 b1 b2
//! nonstandard: l1 l2
//! rule: a1 l1 => b1
//! rule: a2 l2 => b2
//! ```
//!
//! Declarations may repeat and accumulate, and may appear after the rules
//! that use them. Names match `[A-Za-z0-9_]+`. A `#` starts a comment that
//! runs to the end of the line.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use indexmap::IndexMap;
use thiserror::Error;

use crate::closure::DeductionSet;
use crate::error::Error;
use crate::model::{Language, LogicSystem, Rule, Sort, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDocument {
    pub source_name: String,
    pub language: Arc<Language>,
    pub system: LogicSystem,
    /// Line of the first occurrence of each rule.
    pub line_map: IndexMap<Rule, usize>,
}

impl SystemDocument {
    pub fn with_source_name(mut self, name: impl Into<String>) -> Self {
        self.source_name = name.into();
        self
    }

    /// Same language and same rule set.
    pub fn same_content(&self, other: &SystemDocument) -> bool {
        self.language == other.language && self.system == other.system
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error, expected {expected}")]
    Syntax { expected: &'static str },
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error(transparent)]
    Model(#[from] Error),
}

impl ParseError {
    fn syntax(line: usize, column: usize, expected: &'static str) -> Self {
        ParseError {
            line,
            column,
            kind: ParseErrorKind::Syntax { expected },
        }
    }

    fn model(at: Loc, err: Error) -> Self {
        ParseError {
            line: at.line,
            column: at.column,
            kind: ParseErrorKind::Model(err),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Loc {
    line: usize,
    column: usize,
}

#[derive(Debug)]
enum Token<'a> {
    Name(&'a str),
    Arrow,
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits one comment-free line body into names and arrows. `offset` is the
/// 0-based char column where `body` starts.
fn tokenize(body: &str, line: usize, offset: usize) -> Result<Vec<(Token<'_>, Loc)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = body.char_indices().enumerate().peekable();
    while let Some((col, (start, c))) = chars.next() {
        let loc = Loc {
            line,
            column: offset + col + 1,
        };
        if c.is_whitespace() {
            continue;
        }
        if is_name_char(c) {
            let mut end = start + c.len_utf8();
            while let Some(&(_, (i, c))) = chars.peek() {
                if !is_name_char(c) {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            tokens.push((Token::Name(&body[start..end]), loc));
        } else if c == '=' && matches!(chars.peek(), Some((_, (_, '>')))) {
            chars.next();
            tokens.push((Token::Arrow, loc));
        } else {
            return Err(ParseError::syntax(line, loc.column, "symbol name or `=>`"));
        }
    }
    Ok(tokens)
}

type Named<'a> = (&'a str, Loc);

struct RuleLine<'a> {
    premises: Vec<Named<'a>>,
    conclusion: Named<'a>,
    line: usize,
}

const KEYWORDS: [(&str, Option<Sort>); 3] = [
    ("standard:", Some(Sort::Standard)),
    ("nonstandard:", Some(Sort::Nonstandard)),
    ("rule:", None),
];

/// Parses raw bytes, reporting invalid UTF-8 at its position.
pub fn parse_bytes(bytes: &[u8]) -> Result<SystemDocument, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_system(text),
        Err(e) => {
            let valid = std::str::from_utf8(&bytes[..e.valid_up_to()]).unwrap_or_default();
            let line = valid.matches('\n').count() + 1;
            let column = valid.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
            Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::InvalidUtf8,
            })
        }
    }
}

pub fn parse_system(text: &str) -> Result<SystemDocument, ParseError> {
    let mut declared: IndexMap<&str, (Sort, Loc)> = IndexMap::new();
    let mut first_nonstandard: Option<Loc> = None;
    let mut rules: Vec<RuleLine<'_>> = Vec::new();
    let mut last_line = 1;

    for (i, raw) in text.split('\n').enumerate() {
        let line = i + 1;
        last_line = line;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim_end().is_empty() {
            continue;
        }
        let indent = content[..content.len() - trimmed.len()].chars().count();
        let Some((keyword, sort)) = KEYWORDS.iter().find(|(k, _)| trimmed.starts_with(k)) else {
            return Err(ParseError::syntax(
                line,
                indent + 1,
                "`standard:`, `nonstandard:`, `rule:` or a comment",
            ));
        };
        let body = &trimmed[keyword.len()..];
        let tokens = tokenize(body, line, indent + keyword.chars().count())?;
        let end_column = indent + trimmed.trim_end().chars().count() + 1;

        match sort {
            Some(sort) => {
                if *sort == Sort::Standard && tokens.is_empty() {
                    return Err(ParseError::syntax(line, end_column, "symbol name"));
                }
                for (token, loc) in tokens {
                    let Token::Name(name) = token else {
                        return Err(ParseError::syntax(line, loc.column, "symbol name"));
                    };
                    if *sort == Sort::Nonstandard && first_nonstandard.is_none() {
                        first_nonstandard = Some(loc);
                    }
                    match declared.get(name) {
                        Some((existing, _)) if existing != sort => {
                            return Err(ParseError::model(
                                loc,
                                Error::NameCollision(name.to_owned()),
                            ))
                        }
                        Some(_) => {}
                        None => {
                            declared.insert(name, (*sort, loc));
                        }
                    }
                }
            }
            None => rules.push(parse_rule(tokens, line, end_column)?),
        }
    }

    for rule in &rules {
        for &(name, loc) in rule.premises.iter().chain(Some(&rule.conclusion)) {
            if !declared.contains_key(name) {
                return Err(ParseError::model(
                    loc,
                    Error::UnknownSymbol(name.to_owned()),
                ));
            }
        }
    }
    let start = Loc { line: 1, column: 1 };
    let names_of = |wanted: Sort| {
        declared
            .iter()
            .filter(move |(_, (sort, _))| *sort == wanted)
            .map(|(name, _)| *name)
    };
    let language = Language::new(names_of(Sort::Standard), names_of(Sort::Nonstandard))
        .map_err(|e| ParseError::model(first_nonstandard.unwrap_or(start), e))?;
    let language = Arc::new(language);
    if rules.is_empty() {
        return Err(ParseError::model(
            Loc {
                line: last_line,
                column: 1,
            },
            Error::EmptySystem,
        ));
    }
    let system = LogicSystem::new(
        language.clone(),
        rules
            .iter()
            .map(|r| (r.premises.iter().map(|(n, _)| *n), r.conclusion.0)),
    )
    .map_err(|e| ParseError::model(start, e))?;

    let mut line_map = IndexMap::new();
    for (rule, line) in system.rules().zip(dedup_lines(&rules, &language)) {
        line_map.insert(rule.clone(), line);
    }
    Ok(SystemDocument {
        source_name: String::from("<input>"),
        language,
        system,
        line_map,
    })
}

/// Source lines of the first occurrence of each distinct rule, in order.
fn dedup_lines(rules: &[RuleLine<'_>], language: &Language) -> Vec<usize> {
    let mut seen = std::collections::HashSet::new();
    rules
        .iter()
        .filter(|r| {
            let key: (Vec<_>, _) = (
                r.premises.iter().map(|(n, _)| language.lookup(n)).collect(),
                language.lookup(r.conclusion.0),
            );
            seen.insert(key)
        })
        .map(|r| r.line)
        .collect()
}

fn parse_rule<'a>(
    tokens: Vec<(Token<'a>, Loc)>,
    line: usize,
    end_column: usize,
) -> Result<RuleLine<'a>, ParseError> {
    let mut premises = Vec::new();
    let mut iter = tokens.into_iter();
    let arrow = loop {
        match iter.next() {
            Some((Token::Name(n), loc)) => premises.push((n, loc)),
            Some((Token::Arrow, loc)) => break loc,
            None => return Err(ParseError::syntax(line, end_column, "`=>`")),
        }
    };
    if premises.is_empty() {
        return Err(ParseError::model(arrow, Error::NullaryRule));
    }
    let conclusion = match iter.next() {
        Some((Token::Name(n), loc)) => (n, loc),
        Some((Token::Arrow, loc)) => {
            return Err(ParseError::syntax(line, loc.column, "conclusion name"))
        }
        None => return Err(ParseError::syntax(line, end_column, "conclusion name")),
    };
    if let Some((_, loc)) = iter.next() {
        return Err(ParseError::syntax(line, loc.column, "end of line"));
    }
    Ok(RuleLine {
        premises,
        conclusion,
        line,
    })
}

/// Canonical text: sorted declarations, then rules sorted by arity, premise
/// names and conclusion. Duplicate rules appear once.
pub fn render_system(language: &Language, system: &LogicSystem) -> String {
    let mut out = String::new();
    let standard: Vec<&str> = language.standard_part().map(Symbol::name).collect();
    let nonstandard: Vec<&str> = language.nonstandard_part().map(Symbol::name).collect();
    let _ = writeln!(out, "standard: {}", standard.join(" "));
    if !nonstandard.is_empty() {
        let _ = writeln!(out, "nonstandard: {}", nonstandard.join(" "));
    }
    for rule in system.sorted_rules() {
        out.push_str("rule:");
        for &p in rule.premises() {
            out.push(' ');
            out.push_str(language.name(p));
        }
        let _ = writeln!(out, " => {}", language.name(rule.conclusion()));
    }
    out
}

impl fmt::Display for SystemDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_system(&self.language, &self.system))
    }
}

/// Comma-separated names, lexicographic, nonstandard names prefixed `*`.
pub fn render_set(x: &DeductionSet) -> String {
    x.to_string()
}

/// Reads a comma-separated set of names. A leading `*` is accepted and
/// ignored; sorts come from the language.
pub fn parse_set(language: &Arc<Language>, text: &str) -> Result<DeductionSet, Error> {
    if text.trim().is_empty() {
        return Ok(DeductionSet::empty(language.clone()));
    }
    let names = text
        .split(',')
        .map(|item| {
            let item = item.trim();
            let name = item.strip_prefix('*').unwrap_or(item);
            if name.is_empty() {
                Err(Error::BadIdentifier(item.to_owned()))
            } else {
                Ok(name)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    DeductionSet::from_names(language.clone(), names)
}
