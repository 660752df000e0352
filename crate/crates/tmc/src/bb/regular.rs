//! Non-halting proofs from finite-automaton abstractions of the tape.
//!
//! Fix two small DFAs over the tape alphabet, one per side of the head,
//! each with a designated *sea* state that loops on blank. A concrete
//! configuration maps to the abstract configuration `(p, q, s, r)`: `p`
//! is the left DFA's state after reading the left half of the tape from
//! the blank sea inward, `q` the machine state, `s` the symbol under the
//! head, and `r` the right DFA's state after reading the right half from
//! the sea inward. Abstract successors cover concrete successors:
//!
//! * moving right feeds the written symbol to the left DFA (exact) and
//!   uncovers the nearest cell of the right half, whose symbol and
//!   remaining DFA state are only constrained to map to `r`: branch over
//!   every preimage pair;
//! * moving left mirrors this.
//!
//! The abstract start `(sea, start, blank, sea)` covers the concrete
//! start on the all-blank tape, so by induction every reachable concrete
//! configuration is covered by a reachable abstract one. If the closure
//! of the abstract start settles without ever sitting in an undefined or
//! halting table cell, the machine can never halt.
//!
//! Soundness does not depend on which DFAs are chosen — only precision
//! does — so the prover simply enumerates all DFA pairs up to a few
//! states per side and reports success as soon as any pair's closure
//! settles. The closure over one pair is tiny (at most
//! `|A| * k * 2 * |B|` abstract configurations), which keeps the whole
//! enumeration affordable. This catches machines whose non-halting
//! argument lives in the *shape* of a tape half — for example counters
//! that keep their scattered low bits separated by at least one blank —
//! which defeats run-length abstractions because the set of reachable
//! run lists never stops growing.

use crate::tm::{Move, Sym, Transition};

/// Largest DFA size per side the search schedule uses.
const MAX_DFA: usize = 4;

/// Most machine states a closure check supports (the seen-set is a fixed
/// 256-bit array sized for `MAX_DFA * MAX_MACHINE_STATES * 2 * MAX_DFA`).
const MAX_MACHINE_STATES: u32 = 8;

/// DFA sizes to try, cheapest first; the first settling pair wins. Sizes
/// were chosen so the search stays well under a second per machine while
/// still covering mirror-image structure on either side.
const SIZE_SCHEDULE: [(u8, u8); 6] = [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2), (2, 4)];

/// A DFA over the two tape symbols. State 0 is the sea state and must
/// loop on blank, so reading the infinite blank sea leaves it at 0.
#[derive(Clone, Copy)]
struct Dfa {
    states: u8,
    /// `next[state * 2 + symbol]`; entries beyond `states * 2` unused.
    next: [u8; 2 * MAX_DFA],
}

impl Dfa {
    fn step(&self, state: u8, sym: u8) -> u8 {
        self.next[(state * 2 + sym) as usize]
    }
}

/// Enumerates every `n`-state DFA whose sea state loops on blank, in a
/// fixed order: the remaining `2n - 1` table entries run through all
/// combinations like digits of a base-`n` odometer.
fn for_each_dfa(n: u8, mut f: impl FnMut(&Dfa) -> bool) -> bool {
    let digits = 2 * n as usize - 1;
    let mut entry = [0u8; 2 * MAX_DFA];
    loop {
        let mut dfa = Dfa {
            states: n,
            next: [0; 2 * MAX_DFA],
        };
        dfa.next[1..=digits].copy_from_slice(&entry[..digits]);
        if f(&dfa) {
            return true;
        }
        // Advance the odometer; done once it wraps to all zeros.
        let mut i = 0;
        loop {
            if i == digits {
                return false;
            }
            entry[i] += 1;
            if entry[i] < n {
                break;
            }
            entry[i] = 0;
            i += 1;
        }
    }
}

/// Searches small DFA pairs for one whose closure proves the machine
/// never halts. `cell` reports each table cell as a concrete step,
/// `Some(halting)`, or `None` for undefined; the proof only exists when
/// the closure avoids the latter two. Deterministic: sizes are tried per
/// `SIZE_SCHEDULE` and the first success wins. False is inconclusive.
pub(crate) fn search_refutes_halting(
    start: u32,
    states: u32,
    cell: impl Fn(u32, Sym) -> Option<Transition> + Copy,
) -> bool {
    if states > MAX_MACHINE_STATES {
        return false;
    }
    SIZE_SCHEDULE.iter().any(|&(na, nb)| {
        for_each_dfa(na, |a| for_each_dfa(nb, |b| closure_settles(start, states, cell, a, b)))
    })
}

/// Explores the closure of the abstract start under one DFA pair.
/// Returns true when it settles without touching an undefined or halting
/// cell.
fn closure_settles(
    start: u32,
    states: u32,
    cell: impl Fn(u32, Sym) -> Option<Transition>,
    a: &Dfa,
    b: &Dfa,
) -> bool {
    let (na, nb) = (a.states as u32, b.states as u32);
    debug_assert!(na * states * 2 * nb <= 256);
    let id = |p: u8, q: u32, s: u8, r: u8| -> usize {
        (((p as u32 * states + q) * 2 + s as u32) * nb + r as u32) as usize
    };
    let mut seen = [0u64; 4];
    let mut mark = |i: usize| -> bool {
        let (word, bit) = (i / 64, 1u64 << (i % 64));
        let fresh = seen[word] & bit == 0;
        seen[word] |= bit;
        fresh
    };
    let mut frontier: Vec<(u8, u32, u8, u8)> = Vec::with_capacity(32);
    mark(id(0, start, 0, 0));
    frontier.push((0, start, 0, 0));

    while let Some((p, q, s, r)) = frontier.pop() {
        let Some(Transition::Step { next, write, mv }) = cell(q, Sym::from_bit(s)) else {
            return false;
        };
        let w = write.bit();
        match mv {
            Move::R => {
                let p2 = a.step(p, w);
                // Uncover the nearest right cell: any (t, r2) the right
                // DFA maps to r could be behind it.
                for t in 0..2u8 {
                    for r2 in 0..nb as u8 {
                        if b.step(r2, t) == r && mark(id(p2, next, t, r2)) {
                            frontier.push((p2, next, t, r2));
                        }
                    }
                }
            }
            Move::L => {
                let r2 = b.step(r, w);
                for t in 0..2u8 {
                    for p2 in 0..na as u8 {
                        if a.step(p2, t) == p && mark(id(p2, next, t, r2)) {
                            frontier.push((p2, next, t, r2));
                        }
                    }
                }
            }
        }
    }
    true
}
