//! Name resolution and structural validation.

use super::parse::{is_identifier, RawCommand, RawFunction, RawLine, TmdError};
use super::{Command, Digit, Function, MoveDir, Reaction, TapeSym, TmdProgram};
use std::collections::BTreeMap;

/// Tokens that cannot be used as labels because a reaction action list would
/// read them as a write or a move.
const RESERVED_ACTION_TOKENS: [&str; 3] = ["L", "R", "E"];

pub(super) fn resolve(
    raw: Vec<RawFunction>,
    initvar: Vec<Vec<Digit>>,
) -> Result<TmdProgram, TmdError> {
    let fn_index: BTreeMap<&str, usize> = raw
        .iter()
        .enumerate()
        .map(|(i, f)| (f.name.as_str(), i))
        .collect();

    let mut functions = Vec::with_capacity(raw.len());
    for f in &raw {
        functions.push(resolve_function(f, &raw, &fn_index)?);
    }

    let entry = 0;
    let register_count = functions[entry].params.len();
    if register_count == 0 {
        return Err(TmdError::new(
            &raw[entry].file,
            None,
            "the entry function must have at least one parameter (the machine needs a register)"
                .into(),
        ));
    }

    let initvar = match initvar.len() {
        1 => vec![initvar[0].clone(); register_count],
        n if n == register_count => initvar,
        n => {
            return Err(TmdError::new(
                "initvar",
                None,
                format!(
                    "{n} register contents for {register_count} registers \
                     (give one line for all registers, or exactly one per register)"
                ),
            ))
        }
    };

    let program = TmdProgram {
        functions,
        entry,
        initvar,
    };
    debug_assert_eq!(validate_resolved(&program), Ok(()));
    Ok(program)
}

fn resolve_function(
    f: &RawFunction,
    all: &[RawFunction],
    fn_index: &BTreeMap<&str, usize>,
) -> Result<Function, TmdError> {
    // Parameters must be distinct: bindings are positional.
    for (i, p) in f.params.iter().enumerate() {
        if f.params[..i].contains(p) {
            return Err(TmdError::new(
                &f.file,
                None,
                format!("duplicate parameter {p:?}"),
            ));
        }
    }
    let param_index: BTreeMap<&str, usize> = f
        .params
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_str(), i))
        .collect();

    // Collect labels first: jumps may point forward.
    let mut labels: BTreeMap<&str, usize> = BTreeMap::new();
    for (line_idx, line) in f.lines.iter().enumerate() {
        if let Some(label) = &line.label {
            if RESERVED_ACTION_TOKENS.contains(&label.as_str()) {
                return Err(TmdError::new(
                    &f.file,
                    line.line_no,
                    format!("label {label:?} collides with a reaction action token"),
                ));
            }
            if labels.insert(label.as_str(), line_idx).is_some() {
                return Err(TmdError::new(
                    &f.file,
                    line.line_no,
                    format!("duplicate label {label:?}"),
                ));
            }
        }
    }

    let mut body = Vec::with_capacity(f.lines.len());
    for line in &f.lines {
        body.push(resolve_command(f, line, all, fn_index, &param_index, &labels)?);
    }

    Ok(Function {
        name: f.name.clone(),
        params: f.params.clone(),
        body,
    })
}

fn resolve_command(
    f: &RawFunction,
    line: &RawLine,
    all: &[RawFunction],
    fn_index: &BTreeMap<&str, usize>,
    param_index: &BTreeMap<&str, usize>,
    labels: &BTreeMap<&str, usize>,
) -> Result<Command, TmdError> {
    let err = |message: String| TmdError::new(&f.file, line.line_no, message);

    match &line.command {
        RawCommand::Return => Ok(Command::Return),
        RawCommand::Call { callee, args } => {
            let &callee_idx = fn_index
                .get(callee.as_str())
                .ok_or_else(|| err(format!("call of unknown function {callee:?}")))?;
            let expected = all[callee_idx].params.len();
            if args.len() != expected {
                return Err(err(format!(
                    "{callee} takes {expected} argument(s), got {}",
                    args.len()
                )));
            }
            let mut arg_idx = Vec::with_capacity(args.len());
            for a in args {
                let &i = param_index
                    .get(a.as_str())
                    .ok_or_else(|| err(format!("undeclared variable {a:?}")))?;
                arg_idx.push(i);
            }
            Ok(Command::Call {
                callee: callee_idx,
                args: arg_idx,
            })
        }
        RawCommand::Explicit { var, reactions } => {
            let &var_idx = param_index
                .get(var.as_str())
                .ok_or_else(|| err(format!("undeclared variable {var:?}")))?;
            let mut resolved: [Option<Reaction>; 3] = [None; 3];
            for raw in reactions {
                let read = TapeSym::from_ch(raw.read)
                    .expect("parser only admits _, 1, E as read symbols");
                if resolved[read.idx()].is_some() {
                    return Err(err(format!(
                        "two reactions for read symbol {:?}",
                        raw.read
                    )));
                }
                let mut reaction = Reaction::default();
                for token in &raw.actions {
                    if let Some(sym) =
                        (token.len() == 1).then(|| TapeSym::from_ch(token.chars().next().unwrap())).flatten()
                    {
                        if reaction.write.replace(sym).is_some() {
                            return Err(err("reaction lists two writes".into()));
                        }
                    } else if token == "L" || token == "R" {
                        let mv = if token == "L" { MoveDir::L } else { MoveDir::R };
                        if reaction.mv.replace(mv).is_some() {
                            return Err(err("reaction lists two moves".into()));
                        }
                    } else if is_identifier(token) {
                        let &target = labels.get(token.as_str()).ok_or_else(|| {
                            err(format!("jump to unknown label {token:?}"))
                        })?;
                        if reaction.jump.replace(target).is_some() {
                            return Err(err("reaction lists two jumps".into()));
                        }
                    } else {
                        return Err(err(format!(
                            "unrecognized action token {token:?} \
                             (expected a write symbol, L, R, or a label)"
                        )));
                    }
                }
                resolved[read.idx()] = Some(reaction);
            }
            Ok(Command::Explicit {
                var: var_idx,
                reactions: resolved,
            })
        }
    }
}

/// Re-checks all indices of an already resolved program. Used to guard
/// programs constructed in memory (generators, the language front end).
pub fn validate_resolved(p: &TmdProgram) -> Result<(), String> {
    if p.functions.is_empty() {
        return Err("program has no functions".into());
    }
    if p.entry >= p.functions.len() {
        return Err(format!("entry index {} out of range", p.entry));
    }
    let registers = p.functions[p.entry].params.len();
    if registers == 0 {
        return Err("entry function has no parameters".into());
    }
    if p.initvar.len() != registers {
        return Err(format!(
            "{} initial register contents for {} registers",
            p.initvar.len(),
            registers
        ));
    }
    if p.initvar.iter().any(|row| row.is_empty()) {
        return Err("empty initial register content".into());
    }
    for (fi, f) in p.functions.iter().enumerate() {
        let arity = f.params.len();
        for (li, cmd) in f.body.iter().enumerate() {
            let at = format!("function {} line {}", f.name, li);
            match cmd {
                Command::Return => {}
                Command::Call { callee, args } => {
                    let Some(target) = p.functions.get(*callee) else {
                        return Err(format!("{at}: callee index {callee} out of range"));
                    };
                    if args.len() != target.params.len() {
                        return Err(format!(
                            "{at}: {} takes {} argument(s), got {}",
                            target.name,
                            target.params.len(),
                            args.len()
                        ));
                    }
                    if args.iter().any(|&a| a >= arity) {
                        return Err(format!("{at}: argument index out of range"));
                    }
                    let _ = fi;
                }
                Command::Explicit { var, reactions } => {
                    if *var >= arity {
                        return Err(format!("{at}: variable index {var} out of range"));
                    }
                    for r in reactions.iter().flatten() {
                        if let Some(j) = r.jump {
                            if j >= f.body.len() {
                                return Err(format!("{at}: jump target {j} out of range"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
