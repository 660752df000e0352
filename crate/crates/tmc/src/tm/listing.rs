//! The plain-text listing format.
//!
//! A listing is a whitespace-separated sequence of entries, one per state, in
//! ascending state order starting at 0:
//!
//! ```text
//! 0000(0001bR|ERROR-)
//! ```
//!
//! reads as: state 0, on `a`: write `b`, move right, go to state 1; on `b`:
//! halt in the error state. Each half is either `<state><symbol><direction>`
//! (state index zero-padded to the listing's uniform width, symbol `a`/`b`,
//! direction `L`/`R`) or one of the bare halting forms `HALT--` / `ERROR-`.
//!
//! Serialization pads indices to `max(4, digits(state_count - 1))` digits;
//! parsing accepts any width of at least four digits.

use super::{Machine, MachineError, Move, Sym, Transition};
use std::fmt;

/// What went wrong, and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListingError {
    /// Byte offset of the offending token in the input.
    pub offset: usize,
    /// Zero-based ordinal of the offending entry.
    pub entry: usize,
    pub kind: ListingErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ListingErrorKind {
    Malformed { token: String },
    OutOfOrderIndex { expected: u32, found: u32 },
    DanglingTarget { on: Sym, target: u32 },
    Empty,
}

impl fmt::Display for ListingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ListingErrorKind::Malformed { token } => write!(
                f,
                "entry {} (byte {}): malformed entry {token:?}",
                self.entry, self.offset
            ),
            ListingErrorKind::OutOfOrderIndex { expected, found } => write!(
                f,
                "entry {} (byte {}): expected state index {expected}, found {found}",
                self.entry, self.offset
            ),
            ListingErrorKind::DanglingTarget { on, target } => write!(
                f,
                "entry {} (byte {}): transition on '{}' names nonexistent state {target}",
                self.entry,
                self.offset,
                on.ch()
            ),
            ListingErrorKind::Empty => write!(f, "listing contains no entries"),
        }
    }
}

impl std::error::Error for ListingError {}

/// Parses a listing into a machine starting in state 0.
pub fn parse_listing(text: &str) -> Result<Machine, ListingError> {
    let mut rows: Vec<[Transition; 2]> = Vec::new();
    for (offset, token) in tokens(text) {
        let entry = rows.len();
        let fail = |kind| Err(ListingError { offset, entry, kind });
        let malformed = || {
            Err(ListingError {
                offset,
                entry,
                kind: ListingErrorKind::Malformed {
                    token: token.to_string(),
                },
            })
        };

        let Some((index_digits, rest)) = split_at_paren(token) else {
            return malformed();
        };
        let Some(index) = parse_index(index_digits) else {
            return malformed();
        };
        if index != entry as u32 {
            return fail(ListingErrorKind::OutOfOrderIndex {
                expected: entry as u32,
                found: index,
            });
        }
        let Some(body) = rest.strip_suffix(')') else {
            return malformed();
        };
        let Some((on_a, on_b)) = body.split_once('|') else {
            return malformed();
        };
        let (Some(ta), Some(tb)) = (parse_half(on_a), parse_half(on_b)) else {
            return malformed();
        };
        rows.push([ta, tb]);
    }

    if rows.is_empty() {
        return Err(ListingError {
            offset: 0,
            entry: 0,
            kind: ListingErrorKind::Empty,
        });
    }
    Machine::new(rows).map_err(|e| match e {
        MachineError::DanglingTarget { state, on, target } => ListingError {
            offset: 0,
            entry: state as usize,
            kind: ListingErrorKind::DanglingTarget { on, target },
        },
        // Emptiness and start-range defects are impossible here.
        _ => unreachable!("unexpected machine validation failure: {e}"),
    })
}

/// Serializes a machine in the listing format, eight entries per line.
pub fn serialize_listing(m: &Machine) -> String {
    let width = index_width(m.state_count());
    let mut out = String::new();
    for (i, row) in m.rows().iter().enumerate() {
        out.push_str(&format!("{:0width$}(", i, width = width));
        push_half(&mut out, row[0], width);
        out.push('|');
        push_half(&mut out, row[1], width);
        out.push(')');
        out.push(if i % 8 == 7 { '\n' } else { ' ' });
    }
    if !out.ends_with('\n') {
        out.pop();
        out.push('\n');
    }
    out
}

/// Uniform index width for a listing with `count` states.
pub(crate) fn index_width(count: usize) -> usize {
    let digits = count.saturating_sub(1).max(1).ilog10() as usize + 1;
    digits.max(4)
}

fn push_half(out: &mut String, tr: Transition, width: usize) {
    match tr {
        Transition::Halt => out.push_str("HALT--"),
        Transition::Error => out.push_str("ERROR-"),
        Transition::Step { next, write, mv } => {
            out.push_str(&format!(
                "{:0width$}{}{}",
                next,
                write.ch(),
                mv.ch(),
                width = width
            ));
        }
    }
}

/// Whitespace-splits `text`, keeping each token's byte offset.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut base = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        base += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed
            .find(char::is_whitespace)
            .unwrap_or(trimmed.len());
        let token = &trimmed[..end];
        let offset = base;
        rest = &trimmed[end..];
        base += end;
        Some((offset, token))
    })
}

fn split_at_paren(token: &str) -> Option<(&str, &str)> {
    let open = token.find('(')?;
    Some((&token[..open], &token[open + 1..]))
}

/// A state index: at least four decimal digits.
fn parse_index(digits: &str) -> Option<u32> {
    if digits.len() < 4 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn parse_half(half: &str) -> Option<Transition> {
    match half {
        "HALT--" => Some(Transition::Halt),
        "ERROR-" => Some(Transition::Error),
        _ => {
            if half.len() < 6 {
                return None;
            }
            let (digits, suffix) = half.split_at(half.len() - 2);
            let next = parse_index(digits)?;
            let mut suffix = suffix.chars();
            let write = match suffix.next()? {
                'a' => Sym::A,
                'b' => Sym::B,
                _ => return None,
            };
            let mv = match suffix.next()? {
                'L' => Move::L,
                'R' => Move::R,
                _ => return None,
            };
            Some(Transition::Step { next, write, mv })
        }
    }
}
