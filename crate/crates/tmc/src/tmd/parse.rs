//! Parsing and resolution of TMD directories.
//!
//! `parse_tmd_dir` takes the directory's files as named text blobs and
//! produces a fully validated [`TmdProgram`]; every error carries the file
//! and line it was found on.

use super::validate::resolve;
use super::{Digit, TmdProgram};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

/// Any defect found while parsing or resolving a TMD directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TmdError {
    /// File the defect is in (e.g. `f.tmd`, `functions`, `initvar`).
    pub file: String,
    /// One-based line number, when meaningful.
    pub line: Option<usize>,
    pub message: String,
}

impl TmdError {
    pub(super) fn new(file: &str, line: impl Into<Option<usize>>, message: String) -> TmdError {
        TmdError {
            file: file.to_string(),
            line: line.into(),
            message,
        }
    }
}

impl fmt::Display for TmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "{}:{}: {}", self.file, n, self.message),
            None => write!(f, "{}: {}", self.file, self.message),
        }
    }
}

impl std::error::Error for TmdError {}

/// A function as parsed, before name resolution.
#[derive(Clone, Debug)]
pub(super) struct RawFunction {
    pub name: String,
    pub file: String,
    pub params: Vec<String>,
    pub lines: Vec<RawLine>,
}

/// One body line: optional label, command, source line number.
#[derive(Clone, Debug)]
pub(super) struct RawLine {
    pub label: Option<String>,
    pub command: RawCommand,
    pub line_no: usize,
}

#[derive(Clone, Debug)]
pub(super) enum RawCommand {
    Explicit {
        var: String,
        reactions: Vec<RawReaction>,
    },
    Call {
        callee: String,
        args: Vec<String>,
    },
    Return,
}

#[derive(Clone, Debug)]
pub(super) struct RawReaction {
    pub read: char,
    /// Raw action tokens from inside the parentheses.
    pub actions: Vec<String>,
}

/// Parses a TMD directory given as `(file name, content)` pairs.
///
/// Required files: `functions`, `initvar`, and one `<name>.tmd` or
/// `<name>.tfn` per function listed in `functions`. Extra files are ignored.
pub fn parse_tmd_dir(files: &[(String, String)]) -> Result<TmdProgram, TmdError> {
    let by_name: BTreeMap<&str, &str> = files
        .iter()
        .map(|(name, content)| (name.as_str(), content.as_str()))
        .collect();

    let functions_file = by_name
        .get("functions")
        .ok_or_else(|| TmdError::new("functions", None, "file is missing".into()))?;
    let initvar_file = by_name
        .get("initvar")
        .ok_or_else(|| TmdError::new("initvar", None, "file is missing".into()))?;

    let names = parse_functions_file(functions_file)?;
    let initvar = parse_initvar_file(initvar_file)?;

    let mut raw_functions = Vec::with_capacity(names.len());
    for name in &names {
        let tmd = format!("{name}.tmd");
        let tfn = format!("{name}.tfn");
        let (file, content) = if let Some(c) = by_name.get(tmd.as_str()) {
            (tmd.clone(), *c)
        } else if let Some(c) = by_name.get(tfn.as_str()) {
            (tfn.clone(), *c)
        } else {
            return Err(TmdError::new(
                "functions",
                None,
                format!("function {name:?} has no {tmd} or {tfn} file"),
            ));
        };
        raw_functions.push(parse_function_file(name, &file, content)?);
    }

    resolve(raw_functions, initvar)
}

/// Reads a TMD directory from disk and parses it.
pub fn read_tmd_dir_files(dir: &Path) -> std::io::Result<Vec<(String, String)>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            let name = entry.file_name().to_string_lossy().into_owned();
            let content = std::fs::read_to_string(entry.path())?;
            files.push((name, content));
        }
    }
    files.sort();
    Ok(files)
}

fn parse_functions_file(content: &str) -> Result<Vec<String>, TmdError> {
    let mut names = Vec::new();
    for (i, line) in significant_lines(content) {
        let mut words = line.split_whitespace();
        let name = words.next().unwrap().to_string();
        if words.next().is_some() {
            return Err(TmdError::new(
                "functions",
                i,
                format!("expected one function name per line, got {line:?}"),
            ));
        }
        if !is_identifier(&name) {
            return Err(TmdError::new(
                "functions",
                i,
                format!("invalid function name {name:?}"),
            ));
        }
        if names.contains(&name) {
            return Err(TmdError::new(
                "functions",
                i,
                format!("function {name:?} listed twice"),
            ));
        }
        names.push(name);
    }
    if names.is_empty() {
        return Err(TmdError::new(
            "functions",
            None,
            "no functions listed".into(),
        ));
    }
    Ok(names)
}

/// Initial register contents: nonempty strings over `1`/`E`.
fn parse_initvar_file(content: &str) -> Result<Vec<Vec<Digit>>, TmdError> {
    let mut rows = Vec::new();
    for (i, line) in significant_lines(content) {
        let mut digits = Vec::new();
        for word in line.split_whitespace() {
            for c in word.chars() {
                match Digit::from_ch(c) {
                    Some(d) => digits.push(d),
                    None => {
                        return Err(TmdError::new(
                            "initvar",
                            i,
                            format!("invalid register symbol {c:?} (expected 1 or E)"),
                        ))
                    }
                }
            }
        }
        if digits.is_empty() {
            return Err(TmdError::new(
                "initvar",
                i,
                "empty register content (every tape needs at least one symbol)".into(),
            ));
        }
        rows.push(digits);
    }
    if rows.is_empty() {
        return Err(TmdError::new(
            "initvar",
            None,
            "no register contents listed".into(),
        ));
    }
    Ok(rows)
}

fn parse_function_file(name: &str, file: &str, content: &str) -> Result<RawFunction, TmdError> {
    let mut lines = significant_lines(content);

    let (input_line_no, input_line) = lines
        .next()
        .ok_or_else(|| TmdError::new(file, None, "file is empty".into()))?;
    let mut words = input_line.split_whitespace();
    if words.next() != Some("input") {
        return Err(TmdError::new(
            file,
            input_line_no,
            "the first line must declare parameters: input p1 p2 …".into(),
        ));
    }
    let params: Vec<String> = words.map(str::to_string).collect();
    for p in &params {
        if !is_identifier(p) {
            return Err(TmdError::new(
                file,
                input_line_no,
                format!("invalid parameter name {p:?}"),
            ));
        }
    }

    let mut body = Vec::new();
    for (line_no, line) in lines {
        body.push(parse_body_line(file, line_no, line)?);
    }

    Ok(RawFunction {
        name: name.to_string(),
        file: file.to_string(),
        params,
        lines: body,
    })
}

fn parse_body_line(file: &str, line_no: usize, line: &str) -> Result<RawLine, TmdError> {
    let err = |message: String| TmdError::new(file, line_no, message);

    // Split off a `LABEL:` prefix. A colon inside the first word marks a
    // label; the command may continue on the same line.
    let (label, rest) = match line.split_once(':') {
        Some((before, after))
            if !before.trim().is_empty()
                && is_identifier(before.trim())
                && !before.trim_start().starts_with('[') =>
        {
            (Some(before.trim().to_string()), after.trim())
        }
        _ => (None, line),
    };
    if rest.is_empty() {
        return Err(err("label with no command on the line".into()));
    }

    let command = if let Some(rest) = rest.strip_prefix('[') {
        let (var, tail) = rest
            .split_once(']')
            .ok_or_else(|| err("unclosed [variable] bracket".into()))?;
        let var = var.trim();
        if !is_identifier(var) {
            return Err(err(format!("invalid variable name {var:?}")));
        }
        let reactions = parse_reactions(tail.trim(), &err)?;
        RawCommand::Explicit {
            var: var.to_string(),
            reactions,
        }
    } else {
        let mut words = rest.split_whitespace();
        match words.next() {
            Some("function") => {
                let callee = words
                    .next()
                    .ok_or_else(|| err("function call without a callee name".into()))?;
                if !is_identifier(callee) {
                    return Err(err(format!("invalid callee name {callee:?}")));
                }
                let args: Vec<String> = words.map(str::to_string).collect();
                for a in &args {
                    if !is_identifier(a) {
                        return Err(err(format!("invalid argument name {a:?}")));
                    }
                }
                RawCommand::Call {
                    callee: callee.to_string(),
                    args,
                }
            }
            Some("return") => {
                if words.next().is_some() {
                    return Err(err("unexpected tokens after `return`".into()));
                }
                RawCommand::Return
            }
            Some(other) => {
                return Err(err(format!(
                    "expected `[variable]`, `function`, or `return`, got {other:?}"
                )))
            }
            None => unreachable!("blank lines are filtered out"),
        }
    };

    Ok(RawLine {
        label,
        command,
        line_no,
    })
}

/// Parses `SYM ( actions ); SYM ( actions ); …`.
fn parse_reactions(
    text: &str,
    err: &dyn Fn(String) -> TmdError,
) -> Result<Vec<RawReaction>, TmdError> {
    let mut reactions = Vec::new();
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            return Err(err("empty reaction (stray semicolon?)".into()));
        }
        let mut chars = part.chars();
        let read = chars.next().unwrap();
        if !matches!(read, '_' | '1' | 'E') {
            return Err(err(format!(
                "reaction must start with a read symbol (_, 1, E), got {read:?}"
            )));
        }
        let rest = chars.as_str().trim_start();
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err(format!("reaction for {read:?} needs a (…) action list")))?;
        let actions: Vec<String> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        reactions.push(RawReaction { read, actions });
    }
    Ok(reactions)
}

/// Yields `(line number, content)` for every line that still has content
/// after stripping `//` comments, with line numbers starting at 1.
fn significant_lines(content: &str) -> impl Iterator<Item = (usize, &str)> {
    content.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find("//") {
            Some(p) => &line[..p],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

pub(super) fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().unwrap().is_ascii_alphabetic()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}
