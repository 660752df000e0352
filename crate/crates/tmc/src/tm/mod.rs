//! Single-tape, two-symbol Turing machines: the model, a fast simulator, a
//! bit-exact listing format, and the two-bit block code used to view the tape
//! through a four-symbol lens.
//!
//! The model: a machine is a finite ordered set of states; each state holds
//! one transition per tape symbol (`a` or `b`, with `a` the blank). A
//! transition either names a successor state together with a symbol to write
//! and a head move, or it is a bare halting transition (`HALT` or `ERROR`).
//! Machines always start in state 0 on an all-blank tape, and taking a
//! halting transition counts as one step.

mod codec;
mod listing;
mod sim;
mod tape;

pub use codec::{
    decode_2to4, encode_4to2, quad_from_bits, quad_value, tape_quad, value_to_quad,
    write_tape_quad, CodecError, QUADS,
};
pub use listing::{parse_listing, serialize_listing, ListingError, ListingErrorKind};
pub use sim::{run, HaltFlavor, Outcome, RunResult, Simulation};
pub use tape::Tape;

use std::fmt;

/// A tape symbol. `A` is the blank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    A,
    B,
}

impl Sym {
    pub fn bit(self) -> u8 {
        match self {
            Sym::A => 0,
            Sym::B => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Sym {
        if bit == 0 {
            Sym::A
        } else {
            Sym::B
        }
    }

    pub fn ch(self) -> char {
        match self {
            Sym::A => 'a',
            Sym::B => 'b',
        }
    }
}

/// A head move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    L,
    R,
}

impl Move {
    pub fn ch(self) -> char {
        match self {
            Move::L => 'L',
            Move::R => 'R',
        }
    }
}

/// One entry of a state's transition pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Transition {
    /// Write `write`, move `mv`, continue in state `next`.
    Step { next: u32, write: Sym, mv: Move },
    /// Stop in the accepting halt state.
    Halt,
    /// Stop in the error halt state.
    Error,
}

impl Transition {
    pub fn is_halting(self) -> bool {
        !matches!(self, Transition::Step { .. })
    }
}

/// A complete machine: one `[on_a, on_b]` transition pair per state.
///
/// Construction validates that every named successor state exists, so a
/// `Machine` value is always internally consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Machine {
    rows: Vec<[Transition; 2]>,
    start: u32,
}

/// Structural defects detected while building a [`Machine`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MachineError {
    Empty,
    DanglingTarget { state: u32, on: Sym, target: u32 },
    StartOutOfRange { start: u32 },
    TooManyStates { count: usize },
}

impl fmt::Display for MachineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MachineError::Empty => write!(f, "machine has no states"),
            MachineError::DanglingTarget { state, on, target } => write!(
                f,
                "state {} (on '{}') names nonexistent state {}",
                state,
                on.ch(),
                target
            ),
            MachineError::StartOutOfRange { start } => {
                write!(f, "start state {start} is out of range")
            }
            MachineError::TooManyStates { count } => {
                write!(f, "machine has {count} states; the limit is 2^32 - 2")
            }
        }
    }
}

impl std::error::Error for MachineError {}

impl Machine {
    /// Builds a machine starting in state 0.
    pub fn new(rows: Vec<[Transition; 2]>) -> Result<Machine, MachineError> {
        Machine::with_start(rows, 0)
    }

    pub fn with_start(rows: Vec<[Transition; 2]>, start: u32) -> Result<Machine, MachineError> {
        if rows.is_empty() {
            return Err(MachineError::Empty);
        }
        // Two ids are reserved as internal simulator sentinels.
        if rows.len() >= (u32::MAX - 1) as usize {
            return Err(MachineError::TooManyStates { count: rows.len() });
        }
        let n = rows.len() as u32;
        if start >= n {
            return Err(MachineError::StartOutOfRange { start });
        }
        for (i, row) in rows.iter().enumerate() {
            for (sym, tr) in [(Sym::A, row[0]), (Sym::B, row[1])] {
                if let Transition::Step { next, .. } = tr {
                    if next >= n {
                        return Err(MachineError::DanglingTarget {
                            state: i as u32,
                            on: sym,
                            target: next,
                        });
                    }
                }
            }
        }
        Ok(Machine { rows, start })
    }

    pub fn state_count(&self) -> usize {
        self.rows.len()
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn rows(&self) -> &[[Transition; 2]] {
        &self.rows
    }

    pub fn row(&self, state: u32) -> &[Transition; 2] {
        &self.rows[state as usize]
    }

    pub fn transition(&self, state: u32, read: Sym) -> Transition {
        self.rows[state as usize][read.bit() as usize]
    }

    /// All `(state, read_symbol)` pairs whose transition is `HALT`.
    pub fn halt_transitions(&self) -> Vec<(u32, Sym)> {
        self.transitions_of(Transition::Halt)
    }

    /// All `(state, read_symbol)` pairs whose transition is `ERROR`.
    pub fn error_transitions(&self) -> Vec<(u32, Sym)> {
        self.transitions_of(Transition::Error)
    }

    fn transitions_of(&self, wanted: Transition) -> Vec<(u32, Sym)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for sym in [Sym::A, Sym::B] {
                if row[sym.bit() as usize] == wanted {
                    out.push((i as u32, sym));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty() {
        assert_eq!(Machine::new(vec![]), Err(MachineError::Empty));
    }

    #[test]
    fn rejects_dangling_target() {
        let rows = vec![[
            Transition::Step {
                next: 1,
                write: Sym::B,
                mv: Move::R,
            },
            Transition::Error,
        ]];
        assert_eq!(
            Machine::new(rows),
            Err(MachineError::DanglingTarget {
                state: 0,
                on: Sym::A,
                target: 1
            })
        );
    }

    #[test]
    fn finds_halt_transitions() {
        let rows = vec![
            [
                Transition::Step {
                    next: 1,
                    write: Sym::B,
                    mv: Move::R,
                },
                Transition::Halt,
            ],
            [Transition::Error, Transition::Halt],
        ];
        let m = Machine::new(rows).unwrap();
        assert_eq!(m.halt_transitions(), vec![(0, Sym::B), (1, Sym::B)]);
        assert_eq!(m.error_transitions(), vec![(1, Sym::A)]);
    }
}
