//! Random program generator for differential testing.
//!
//! Generated programs terminate by construction: jumps only go forward
//! within a body, and a function only calls higher-indexed functions, so
//! control strictly advances and call depth is bounded. A small fraction of
//! programs still fault (missing reactions, edge moves, running past the end
//! of a body), which is deliberate: faults are part of the behavior the
//! compiled machines must reproduce.

use super::validate::validate_resolved;
use super::{Command, Digit, Function, MoveDir, Reaction, TapeSym, TmdProgram};
use crate::support::SplitMix64;

/// Size and fault-bias knobs for [`random_program`].
#[derive(Debug, Clone)]
pub struct GenConfig {
    /// Max registers (entry-function parameters), at least 1.
    pub max_registers: usize,
    /// Max functions, at least 1.
    pub max_functions: usize,
    /// Max body lines per function, at least 1.
    pub max_lines: usize,
    /// Out of 100: chance that a read symbol gets a reaction. Lower values
    /// produce more `MissingReaction` faults.
    pub reaction_coverage: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_registers: 4,
            max_functions: 5,
            max_lines: 8,
            reaction_coverage: 88,
        }
    }
}

/// Builds a random well-formed program. Deterministic in `rng`.
pub fn random_program(rng: &mut SplitMix64, cfg: &GenConfig) -> TmdProgram {
    let registers = 1 + rng.below(cfg.max_registers as u64) as usize;
    let fn_count = 1 + rng.below(cfg.max_functions as u64) as usize;

    // Pick arities up front so call sites know them. Entry is index 0.
    let mut arities = vec![registers];
    for _ in 1..fn_count {
        arities.push(1 + rng.below(cfg.max_registers as u64) as usize);
    }

    let mut functions = Vec::with_capacity(fn_count);
    for i in 0..fn_count {
        let params: Vec<String> = (0..arities[i]).map(|p| format!("p{p}")).collect();
        let lines = 1 + rng.below(cfg.max_lines as u64) as usize;
        let mut body = Vec::with_capacity(lines);
        for line in 0..lines {
            let last = line + 1 == lines;
            body.push(random_command(rng, cfg, i, line, lines, last, &arities));
        }
        functions.push(Function {
            name: if i == 0 { "main".into() } else { format!("f{i}") },
            params,
            body,
        });
    }

    let initvar = (0..registers)
        .map(|_| {
            let len = 1 + rng.below(4) as usize;
            (0..len)
                .map(|_| if rng.chance(1, 2) { Digit::One } else { Digit::E })
                .collect()
        })
        .collect();

    let program = TmdProgram {
        functions,
        entry: 0,
        initvar,
    };
    debug_assert_eq!(validate_resolved(&program), Ok(()));
    program
}

fn random_command(
    rng: &mut SplitMix64,
    cfg: &GenConfig,
    fn_idx: usize,
    line: usize,
    lines: usize,
    last: bool,
    arities: &[usize],
) -> Command {
    if last && rng.chance(9, 10) {
        return Command::Return;
    }
    let can_call = fn_idx + 1 < arities.len();
    let roll = rng.below(100);
    if roll < 12 {
        Command::Return
    } else if can_call && roll < 35 {
        let callee = fn_idx + 1 + rng.below((arities.len() - fn_idx - 1) as u64) as usize;
        // Arguments may repeat: aliased parameters are legal and must work.
        let args = (0..arities[callee])
            .map(|_| rng.below(arities[fn_idx] as u64) as usize)
            .collect();
        Command::Call { callee, args }
    } else {
        let var = rng.below(arities[fn_idx] as u64) as usize;
        let mut reactions: [Option<Reaction>; 3] = [None; 3];
        for sym in TapeSym::ALL {
            if !rng.chance(cfg.reaction_coverage, 100) {
                continue;
            }
            let write = match rng.below(5) {
                0 => Some(TapeSym::One),
                1 => Some(TapeSym::E),
                2 => Some(TapeSym::Blank), // may fault on content
                _ => None,
            };
            let mv = match rng.below(4) {
                0 => Some(MoveDir::L),
                1 => Some(MoveDir::R),
                _ => None,
            };
            // Forward only, so bodies cannot loop.
            let jump = (line + 1 < lines && rng.chance(3, 10))
                .then(|| line + 1 + rng.below((lines - line - 1) as u64) as usize);
            reactions[sym.idx()] = Some(Reaction { write, mv, jump });
        }
        Command::Explicit { var, reactions }
    }
}
