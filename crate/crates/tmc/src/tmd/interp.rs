//! Reference interpreter for multi-tape register programs.
//!
//! [`Interp`] is resumable: [`Interp::advance`] runs up to a budget of steps
//! and can be called again after `BudgetExhausted`, which makes split runs
//! byte-identical to one-shot runs. [`interpret`] is the one-call wrapper.

use super::{Command, Digit, TapeSym, TmdProgram};

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmdOutcome {
    /// The entry function returned with an empty call stack.
    Halted,
    /// The step budget ran out; the program may be resumed.
    BudgetExhausted,
    /// The program hit an illegal action and stopped permanently.
    Faulted(TmdFault),
}

/// Illegal actions. Each records the function index and body line executing
/// when the fault fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmdFault {
    /// The command has no reaction for the symbol under the head.
    MissingReaction { func: usize, line: usize, read: TapeSym },
    /// Wrote `1` or `E` on the permanent leading blank (head position 0).
    WriteAtLeadingBlank { func: usize, line: usize },
    /// Wrote `_` on a content cell.
    EraseContent { func: usize, line: usize },
    /// Moved left while on the leading blank.
    MoveLeftAtEdge { func: usize, line: usize },
    /// Moved right while on the trailing blank.
    MoveRightAtEdge { func: usize, line: usize },
    /// Control ran past the last line of a function body.
    PcPastEnd { func: usize },
}

/// One `BUILTIN_print` call: which register its first argument resolved to,
/// and that register's content at call time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintEvent {
    pub register: usize,
    pub content: String,
}

/// Result of [`interpret`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmdRunResult {
    pub outcome: TmdOutcome,
    pub steps: u64,
    /// Final register contents, digits only (no blanks), register order.
    pub registers: Vec<String>,
    pub prints: Vec<PrintEvent>,
}

/// One register: a content string over `{1, E}` with a permanent leading
/// blank at position 0 and an infinite blank tail starting at `len + 1`.
/// The head ranges over `0..=len + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RegTape {
    content: Vec<Digit>,
    head: usize,
}

impl RegTape {
    fn new(init: &[Digit]) -> Self {
        debug_assert!(!init.is_empty());
        RegTape {
            content: init.to_vec(),
            head: 1,
        }
    }

    fn read(&self) -> TapeSym {
        if self.head == 0 || self.head > self.content.len() {
            TapeSym::Blank
        } else {
            self.content[self.head - 1].sym()
        }
    }

    fn content_string(&self) -> String {
        self.content.iter().map(|d| d.ch()).collect()
    }
}

#[derive(Debug, Clone)]
struct Frame {
    func: usize,
    /// Register index for each parameter, positionally.
    bindings: Vec<usize>,
    /// Caller line to resume at after this frame returns.
    ret: usize,
}

/// Resumable interpreter state.
#[derive(Debug, Clone)]
pub struct Interp<'p> {
    prog: &'p TmdProgram,
    regs: Vec<RegTape>,
    stack: Vec<Frame>,
    pc: usize,
    steps: u64,
    prints: Vec<PrintEvent>,
    finished: Option<TmdOutcome>,
}

impl<'p> Interp<'p> {
    pub fn new(prog: &'p TmdProgram) -> Self {
        let regs = prog.initvar.iter().map(|row| RegTape::new(row)).collect();
        let entry = prog.entry;
        let bindings = (0..prog.register_count()).collect();
        Interp {
            prog,
            regs,
            stack: vec![Frame {
                func: entry,
                bindings,
                ret: 0,
            }],
            pc: 0,
            steps: 0,
            prints: Vec::new(),
            finished: None,
        }
    }

    /// Runs up to `budget` further steps. Returns `Halted` / `Faulted` if the
    /// program finished within the budget (now or on an earlier call), else
    /// `BudgetExhausted`. A finished interpreter is inert.
    pub fn advance(&mut self, budget: u64) -> TmdOutcome {
        if let Some(done) = self.finished {
            return done;
        }
        for _ in 0..budget {
            self.step();
            if let Some(done) = self.finished {
                return done;
            }
        }
        TmdOutcome::BudgetExhausted
    }

    fn step(&mut self) {
        let frame = self.stack.last().expect("running interpreter has a frame");
        let func = frame.func;
        let body = &self.prog.functions[func].body;
        if self.pc >= body.len() {
            self.finished = Some(TmdOutcome::Faulted(TmdFault::PcPastEnd { func }));
            return;
        }
        let line = self.pc;
        match &body[line] {
            Command::Return => {
                let popped = self.stack.pop().expect("return pops the frame it runs in");
                if self.stack.is_empty() {
                    self.finished = Some(TmdOutcome::Halted);
                } else {
                    self.pc = popped.ret;
                }
            }
            Command::Call { callee, args } => {
                let bindings: Vec<usize> =
                    args.iter().map(|&a| frame.bindings[a]).collect();
                if self.prog.functions[*callee].name == "BUILTIN_print" {
                    if let Some(&register) = bindings.first() {
                        self.prints.push(PrintEvent {
                            register,
                            content: self.regs[register].content_string(),
                        });
                    }
                }
                self.stack.push(Frame {
                    func: *callee,
                    bindings,
                    ret: line + 1,
                });
                self.pc = 0;
            }
            Command::Explicit { var, reactions } => {
                let reg = frame.bindings[*var];
                let read = self.regs[reg].read();
                let Some(reaction) = reactions[read.idx()] else {
                    self.finished = Some(TmdOutcome::Faulted(TmdFault::MissingReaction {
                        func,
                        line,
                        read,
                    }));
                    return;
                };
                // Write, then move, then jump.
                if let Some(sym) = reaction.write {
                    if let Err(fault) = write(&mut self.regs[reg], sym, func, line) {
                        self.finished = Some(TmdOutcome::Faulted(fault));
                        return;
                    }
                }
                if let Some(mv) = reaction.mv {
                    if let Err(fault) = shift(&mut self.regs[reg], mv, func, line) {
                        self.finished = Some(TmdOutcome::Faulted(fault));
                        return;
                    }
                }
                self.pc = reaction.jump.unwrap_or(line + 1);
            }
        }
        self.steps += 1;
        debug_assert!(self.regs.iter().all(|r| {
            !r.content.is_empty() && r.head <= r.content.len() + 1
        }));
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn finished(&self) -> Option<TmdOutcome> {
        self.finished
    }

    pub fn prints(&self) -> &[PrintEvent] {
        &self.prints
    }

    pub fn register_content(&self, register: usize) -> String {
        self.regs[register].content_string()
    }

    pub fn register_head(&self, register: usize) -> usize {
        self.regs[register].head
    }

    pub fn stack_depth(&self) -> usize {
        self.stack.len()
    }

    fn into_result(self, outcome: TmdOutcome) -> TmdRunResult {
        TmdRunResult {
            outcome,
            steps: self.steps,
            registers: self.regs.iter().map(RegTape::content_string).collect(),
            prints: self.prints,
        }
    }
}

fn write(reg: &mut RegTape, sym: TapeSym, func: usize, line: usize) -> Result<(), TmdFault> {
    let len = reg.content.len();
    match sym {
        TapeSym::Blank => {
            // Writing blank on a blank cell is a no-op; on content it is a fault.
            if reg.head >= 1 && reg.head <= len {
                Err(TmdFault::EraseContent { func, line })
            } else {
                Ok(())
            }
        }
        TapeSym::One | TapeSym::E => {
            let digit = if sym == TapeSym::One { Digit::One } else { Digit::E };
            if reg.head == 0 {
                Err(TmdFault::WriteAtLeadingBlank { func, line })
            } else if reg.head <= len {
                reg.content[reg.head - 1] = digit;
                Ok(())
            } else {
                // Trailing blank: the content string grows by one digit and
                // the head now sits on the new last content cell.
                reg.content.push(digit);
                Ok(())
            }
        }
    }
}

fn shift(reg: &mut RegTape, mv: super::MoveDir, func: usize, line: usize) -> Result<(), TmdFault> {
    match mv {
        super::MoveDir::L => {
            if reg.head == 0 {
                Err(TmdFault::MoveLeftAtEdge { func, line })
            } else {
                reg.head -= 1;
                Ok(())
            }
        }
        super::MoveDir::R => {
            if reg.head > reg.content.len() {
                Err(TmdFault::MoveRightAtEdge { func, line })
            } else {
                reg.head += 1;
                Ok(())
            }
        }
    }
}

/// Runs `prog` from its initial state for up to `budget` steps.
pub fn interpret(prog: &TmdProgram, budget: u64) -> TmdRunResult {
    let mut interp = Interp::new(prog);
    let outcome = interp.advance(budget);
    interp.into_result(outcome)
}
