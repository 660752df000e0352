//! Budgeted, resumable simulation.

use super::{Machine, Tape, Transition};

/// How a completed run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HaltFlavor {
    Halt,
    Error,
}

/// Result classification of a budgeted run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Halted(HaltFlavor),
    BudgetExhausted,
}

/// Everything a finished (or suspended) run reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub outcome: Outcome,
    /// Transitions taken, the halting one included.
    pub steps: u64,
    pub tape: Tape,
}

const HALT_ID: u32 = u32::MAX;
const ERROR_ID: u32 = u32::MAX - 1;

#[derive(Clone, Copy)]
struct FastTr {
    next: u32,
    write: u8,
    right: bool,
}

/// A resumable simulation: `advance` may be called repeatedly and the overall
/// trajectory is identical to a single run with the summed budget.
pub struct Simulation {
    table: Vec<[FastTr; 2]>,
    state: u32,
    tape: Tape,
    steps: u64,
    finished: Option<HaltFlavor>,
}

impl Simulation {
    pub fn new(m: &Machine) -> Simulation {
        let table = m
            .rows()
            .iter()
            .map(|row| {
                [0, 1].map(|s| match row[s] {
                    Transition::Step { next, write, mv } => FastTr {
                        next,
                        write: write.bit(),
                        right: mv == super::Move::R,
                    },
                    // Halting transitions are normalized to "write blank, move
                    // right" internally; the listing format never spells that
                    // out and serialization never re-emits it.
                    Transition::Halt => FastTr {
                        next: HALT_ID,
                        write: 0,
                        right: true,
                    },
                    Transition::Error => FastTr {
                        next: ERROR_ID,
                        write: 0,
                        right: true,
                    },
                })
            })
            .collect();
        Simulation {
            table,
            state: m.start(),
            tape: Tape::new(),
            steps: 0,
            finished: None,
        }
    }

    /// Runs at most `budget` further steps. Returns how this leg ended; a
    /// simulation that has already halted reports its flavor and does nothing.
    pub fn advance(&mut self, budget: u64) -> Outcome {
        if let Some(flavor) = self.finished {
            return Outcome::Halted(flavor);
        }
        let mut state = self.state;
        let mut remaining = budget;
        while remaining > 0 {
            remaining -= 1;
            let read = self.tape.read_at_head();
            let tr = self.table[state as usize][read as usize];
            self.tape.write_at_head(tr.write);
            if tr.right {
                self.tape.step_right();
            } else {
                self.tape.step_left();
            }
            if tr.next >= ERROR_ID {
                self.steps += budget - remaining;
                self.state = state;
                let flavor = if tr.next == HALT_ID {
                    HaltFlavor::Halt
                } else {
                    HaltFlavor::Error
                };
                self.finished = Some(flavor);
                return Outcome::Halted(flavor);
            }
            state = tr.next;
        }
        self.state = state;
        self.steps += budget;
        Outcome::BudgetExhausted
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn tape(&self) -> &Tape {
        &self.tape
    }

    /// Current state id; meaningless after the machine has halted.
    pub fn state(&self) -> u32 {
        self.state
    }

    pub fn finished(&self) -> Option<HaltFlavor> {
        self.finished
    }

    pub fn into_result(self, outcome: Outcome) -> RunResult {
        RunResult {
            outcome,
            steps: self.steps,
            tape: self.tape,
        }
    }
}

/// Runs `m` from an all-blank tape for at most `budget` steps.
pub fn run(m: &Machine, budget: u64) -> RunResult {
    let mut sim = Simulation::new(m);
    let outcome = sim.advance(budget);
    sim.into_result(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tm::{Move, Sym};

    fn immediate_halter() -> Machine {
        Machine::new(vec![[Transition::Halt, Transition::Halt]]).unwrap()
    }

    /// One state: writes `b`, shuttles right, halts when it sees a `b`
    /// (which never happens — it always moves onto fresh blanks).
    fn right_runner() -> Machine {
        Machine::new(vec![[
            Transition::Step {
                next: 0,
                write: Sym::B,
                mv: Move::R,
            },
            Transition::Halt,
        ]])
        .unwrap()
    }

    #[test]
    fn immediate_halt_is_one_step() {
        let r = run(&immediate_halter(), 10);
        assert_eq!(r.outcome, Outcome::Halted(HaltFlavor::Halt));
        assert_eq!(r.steps, 1);
    }

    #[test]
    fn zero_budget_exhausts_immediately() {
        let r = run(&immediate_halter(), 0);
        assert_eq!(r.outcome, Outcome::BudgetExhausted);
        assert_eq!(r.steps, 0);
    }

    #[test]
    fn budget_exhaustion_counts_exactly() {
        let r = run(&right_runner(), 1000);
        assert_eq!(r.outcome, Outcome::BudgetExhausted);
        assert_eq!(r.steps, 1000);
        assert_eq!(r.tape.count_b(), 1000);
        assert_eq!(r.tape.head(), 1000);
    }

    #[test]
    fn split_budgets_match_one_shot() {
        let m = right_runner();
        let one_shot = run(&m, 777);
        let mut sim = Simulation::new(&m);
        sim.advance(300);
        sim.advance(400);
        let outcome = sim.advance(77);
        let split = sim.into_result(outcome);
        assert_eq!(one_shot, split);
    }

    #[test]
    fn advancing_a_halted_simulation_is_inert() {
        let mut sim = Simulation::new(&immediate_halter());
        assert_eq!(sim.advance(5), Outcome::Halted(HaltFlavor::Halt));
        assert_eq!(sim.advance(5), Outcome::Halted(HaltFlavor::Halt));
        assert_eq!(sim.steps(), 1);
    }

    #[test]
    fn error_flavor_reported() {
        let m = Machine::new(vec![[Transition::Error, Transition::Halt]]).unwrap();
        let r = run(&m, 3);
        assert_eq!(r.outcome, Outcome::Halted(HaltFlavor::Error));
        assert_eq!(r.steps, 1);
    }

    #[test]
    fn determinism_bit_for_bit() {
        let m = right_runner();
        assert_eq!(run(&m, 12345), run(&m, 12345));
    }
}
