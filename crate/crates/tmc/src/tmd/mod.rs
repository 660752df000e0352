//! TMD: a multi-tape, three-symbol register machine with a function stack.
//!
//! A TMD program is a directory of text files:
//!
//! * `functions` — one function name per line; the first is the entry
//!   function.
//! * `initvar` — initial register contents over `1`/`E`: either a single line
//!   (applied to every register) or exactly one line per register.
//! * one `<name>.tmd` (or `<name>.tfn`) file per listed function.
//!
//! Each function file starts with an `input p1 p2 …` line declaring its
//! parameters, followed by commands, one per line, optionally prefixed with a
//! `LABEL:`. Comments run from `//` to end of line. The three command forms:
//!
//! ```text
//! [x] 1 (E, R, LOOP); E (); _ (1)     explicit tape command on variable x
//! function g a b                      call g with arguments a, b
//! return                              pop the stack (program halts when the
//!                                     entry function returns)
//! ```
//!
//! An explicit command lists up to three reactions keyed by the symbol read
//! under the bound register's head (`_`, `1`, `E`). A reaction's parenthesized
//! actions are any of: a symbol literal to write (`_`, `1`, `E`), a head move
//! (`L`, `R`), and a jump label — each at most once, in any order, applied in
//! write → move → jump order. Reading a symbol that has no reaction is a
//! fault.
//!
//! ## Machine model
//!
//! The program owns one register (tape) per parameter of the entry function,
//! in order; `initvar` fills them and every head starts on the first content
//! cell. Every tape always matches `_?(1|E)+_∞`: a permanent leading blank,
//! then at least one content cell, then blanks. The head may stand on the
//! leading blank, any content cell, or the first trailing blank. Faults (all
//! of which end the run, mirroring a hardware ERROR state):
//!
//! * reading a symbol with no reaction listed,
//! * writing `1`/`E` on the leading blank (tapes cannot grow leftward),
//! * writing `_` on a content cell (tapes never shrink),
//! * moving left from the leading blank or right from the trailing blank,
//! * the program counter running past the end of a function.
//!
//! Writing `1`/`E` on the trailing blank grows the tape by one cell; writing
//! `_` on either blank is a no-op.
//!
//! Calls bind callee parameters to the caller's argument registers
//! positionally (by reference — distinct parameters may alias the same
//! register); `return` resumes the caller just after the call. One executed
//! command = one TMD step. A call to a function named `BUILTIN_print` is
//! additionally recorded in the run's print trace together with its first
//! argument's register content (the call itself executes normally).

mod gen;
mod interp;
mod parse;
mod validate;

pub use gen::{random_program, GenConfig};
pub use interp::{
    interpret, Interp, PrintEvent, TmdFault, TmdOutcome, TmdRunResult,
};
pub use parse::{parse_tmd_dir, read_tmd_dir_files, TmdError};
pub use validate::validate_resolved;

use std::fmt;

/// A tape symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TapeSym {
    Blank,
    One,
    E,
}

impl TapeSym {
    pub fn idx(self) -> usize {
        match self {
            TapeSym::Blank => 0,
            TapeSym::One => 1,
            TapeSym::E => 2,
        }
    }

    pub fn ch(self) -> char {
        match self {
            TapeSym::Blank => '_',
            TapeSym::One => '1',
            TapeSym::E => 'E',
        }
    }

    pub fn from_ch(c: char) -> Option<TapeSym> {
        match c {
            '_' => Some(TapeSym::Blank),
            '1' => Some(TapeSym::One),
            'E' => Some(TapeSym::E),
            _ => None,
        }
    }

    pub const ALL: [TapeSym; 3] = [TapeSym::Blank, TapeSym::One, TapeSym::E];
}

impl fmt::Display for TapeSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ch())
    }
}

/// A content cell: a non-blank tape symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    One,
    E,
}

impl Digit {
    pub fn sym(self) -> TapeSym {
        match self {
            Digit::One => TapeSym::One,
            Digit::E => TapeSym::E,
        }
    }

    pub fn ch(self) -> char {
        self.sym().ch()
    }

    pub fn from_ch(c: char) -> Option<Digit> {
        match c {
            '1' => Some(Digit::One),
            'E' => Some(Digit::E),
            _ => None,
        }
    }
}

/// A head move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveDir {
    L,
    R,
}

/// One reaction of an explicit tape command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub struct Reaction {
    pub write: Option<TapeSym>,
    pub mv: Option<MoveDir>,
    /// Resolved jump target: a line index in the same function.
    pub jump: Option<usize>,
}

/// One line of a function body.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    /// React to the symbol under the head of the register bound to parameter
    /// `var`; `reactions` is indexed by [`TapeSym::idx`].
    Explicit {
        var: usize,
        reactions: [Option<Reaction>; 3],
    },
    /// Call `functions[callee]`, binding its parameters to the registers
    /// bound to `args` (parameter indices of the calling function).
    Call { callee: usize, args: Vec<usize> },
    Return,
}

/// A named function: parameter list and body.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Function {
    pub name: String,
    pub params: Vec<String>,
    pub body: Vec<Command>,
}

/// A fully resolved, validated program.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TmdProgram {
    pub functions: Vec<Function>,
    /// Index of the entry function; its parameters are the machine's
    /// registers, in order.
    pub entry: usize,
    /// Initial content of each register, over `1`/`E`, one entry per register.
    pub initvar: Vec<Vec<Digit>>,
}

impl TmdProgram {
    pub fn entry_fn(&self) -> &Function {
        &self.functions[self.entry]
    }

    pub fn register_count(&self) -> usize {
        self.entry_fn().params.len()
    }
}
