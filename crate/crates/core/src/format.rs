//! Text formats for relations, subsets, partitions and bijections.
//!
//! All formats are UTF-8 and line based. Blank lines and lines whose first
//! non-blank character is `#` are ignored everywhere.
//!
//! ```text
//! # relation: optional ground header, then one pair per line
//! a
//! b
//! c
//! ---
//! a < b
//! b<c
//! ```
//!
//! Elements that only appear in pairs are appended to the ground sequence in
//! first-appearance order. Subsets list one token per line; partitions are
//! subsets separated by `---` lines; bijections list `y -> x` lines.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::order::{ElementId, Poset, StrictRelation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Non-ignored lines with their 1-based line numbers, trimmed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn token(line: usize, s: &str) -> Result<ElementId, ParseError> {
    ElementId::new(s.trim()).map_err(|e| err(line, e.to_string()))
}

const SEPARATOR: &str = "---";

/// A parsed relation file: ground sequence and pairs as written.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationFile {
    pub ground: Vec<ElementId>,
    pub pairs: Vec<(ElementId, ElementId)>,
}

pub fn parse_relation(text: &str) -> Result<RelationFile, ParseError> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let mut separators = lines.iter().filter(|(_, l)| *l == SEPARATOR);
    let header_end = separators.next().map(|(n, _)| *n);
    if let Some((n, _)) = separators.next() {
        return Err(err(*n, "a relation file has at most one `---` separator"));
    }

    let mut out = RelationFile::default();
    let mut in_ground = HashSet::new();
    for &(n, l) in &lines {
        if l == SEPARATOR {
            continue;
        }
        if header_end.is_some_and(|end| n < end) {
            let e = token(n, l)?;
            in_ground.insert(e.clone());
            // duplicates stay so validation can report them
            out.ground.push(e);
            continue;
        }
        let (x, y) = l
            .split_once('<')
            .ok_or_else(|| err(n, format!("expected `x < y`, found {l:?}")))?;
        let (x, y) = (token(n, x)?, token(n, y)?);
        for e in [&x, &y] {
            if in_ground.insert(e.clone()) {
                out.ground.push(e.clone());
            }
        }
        out.pairs.push((x, y));
    }
    Ok(out)
}

/// One token per line.
pub fn parse_subset(text: &str) -> Result<Vec<ElementId>, ParseError> {
    content_lines(text).map(|(n, l)| token(n, l)).collect()
}

/// Blocks of tokens separated by `---` lines. Empty blocks are kept so the
/// partition check can name them.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<ElementId>>, ParseError> {
    let mut blocks = Vec::new();
    let mut current = Vec::new();
    let mut any = false;
    for (n, l) in content_lines(text) {
        any = true;
        if l == SEPARATOR {
            blocks.push(std::mem::take(&mut current));
        } else {
            current.push(token(n, l)?);
        }
    }
    if any {
        blocks.push(current);
    }
    Ok(blocks)
}

/// `y -> x` lines.
pub fn parse_bijection(text: &str) -> Result<Vec<(ElementId, ElementId)>, ParseError> {
    content_lines(text)
        .map(|(n, l)| {
            let (y, x) = l
                .split_once("->")
                .ok_or_else(|| err(n, format!("expected `y -> x`, found {l:?}")))?;
            Ok((token(n, y)?, token(n, x)?))
        })
        .collect()
}

/// Relation file text for `poset`: full ground header, then every strict
/// pair. Parsing the result gives back the same poset.
pub fn render_poset(poset: &Poset) -> String {
    let mut out = String::new();
    for e in poset.ground() {
        writeln!(out, "{e}").unwrap();
    }
    writeln!(out, "{SEPARATOR}").unwrap();
    for (x, y) in poset.pairs() {
        writeln!(out, "{x} < {y}").unwrap();
    }
    out
}

/// Pairs only, one `x < y` per line.
pub fn render_relation(relation: &StrictRelation) -> String {
    let mut out = String::new();
    for (x, y) in relation {
        writeln!(out, "{x} < {y}").unwrap();
    }
    out
}
