//! Non-halting proofs by abstract interpretation over compressed tapes.
//!
//! A concrete configuration (state, tape, head) is abstracted as a state
//! plus two run lists, one per side of the head. Each run is a short word
//! repeated some number of times, nearest-the-head first, and repeat
//! counts saturate at a cap: a saturated count means "cap or more". Far
//! ends fade into the infinite blank sea. The abstraction is a sound
//! over-approximation of reachability:
//!
//! * the abstract start (empty run lists) covers the concrete start;
//! * popping a cell branches over every shape the remainder can take —
//!   a saturated leading count splits into "exactly cap - 1 left" and
//!   "still cap or more";
//! * recompression only merges runs of identical words (exact counts add
//!   and saturate at the cap), which merely enlarges the set of tapes a
//!   configuration denotes.
//!
//! Hence every concrete configuration the machine ever reaches is covered
//! by some member of the closure of the abstract start. If that closure
//! is finite and never sits in an undefined or halting table cell, the
//! machine can never halt.
//!
//! Word length is a parameter: length 1 catches tapes that grow by
//! repeating one symbol, length 2 catches alternating patterns such as
//! `abab...`, and so on. Callers escalate through a schedule until one
//! closure settles. The domain's limit is machines whose reachable tapes
//! need unboundedly many runs — counters scattering marks with
//! ever-changing spacing — which no word length resolves; those fall to
//! the automaton abstraction in the `regular` module instead.

use crate::tm::{Move, Sym, Transition};
use std::collections::HashSet;

/// Repeat count standing for "cap or more".
const MANY: u16 = u16::MAX;

/// Bound on the units one recompression may expand; beyond it the
/// attempt is abandoned as inconclusive.
const MAX_EXPAND: usize = 4096;

/// Tuning knobs for one closure attempt.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ClosureParams {
    /// Word length (in units) used when recompressing the tape.
    pub block: u8,
    /// Repeat counts saturate at this value.
    pub cap: u16,
    /// Abandon the attempt once this many abstract configurations have
    /// been visited.
    pub max_configs: usize,
    /// Abandon the attempt when one side of the tape needs this many
    /// runs.
    pub max_runs: usize,
}

/// One abstract tape unit: a single cell.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Unit {
    /// The blank symbol `a`.
    Blank,
    /// The mark symbol `b`.
    Mark,
}

impl Unit {
    fn of_sym(sym: u8) -> Unit {
        if sym == 0 {
            Unit::Blank
        } else {
            Unit::Mark
        }
    }

    fn sym(self) -> u8 {
        match self {
            Unit::Blank => 0,
            Unit::Mark => 1,
        }
    }

    fn code(self) -> u16 {
        self.sym() as u16
    }

    fn of_code(code: u16) -> Unit {
        if code == 0 {
            Unit::Blank
        } else {
            Unit::Mark
        }
    }
}

/// A word of 1..=8 units, packed little-endian two bits per unit: the
/// low pair is the unit nearest the head.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Word {
    len: u8,
    bits: u16,
}

impl Word {
    fn single(unit: Unit) -> Word {
        Word {
            len: 1,
            bits: unit.code(),
        }
    }

    fn pack(units: &[Unit]) -> Word {
        debug_assert!(!units.is_empty() && units.len() <= 8);
        let mut bits = 0;
        for (i, &u) in units.iter().enumerate() {
            bits |= u.code() << (2 * i);
        }
        Word {
            len: units.len() as u8,
            bits,
        }
    }

    /// The unit nearest the head.
    fn first(self) -> Unit {
        Unit::of_code(self.bits & 0b11)
    }

    /// Everything after the first unit, if any.
    fn rest(self) -> Option<Word> {
        (self.len > 1).then(|| Word {
            len: self.len - 1,
            bits: self.bits >> 2,
        })
    }

    /// True when every cell the word denotes is blank.
    fn is_blank(self) -> bool {
        self.bits == 0
    }

    fn units(self) -> impl Iterator<Item = Unit> {
        (0..self.len).map(move |i| Unit::of_code((self.bits >> (2 * i)) & 0b11))
    }
}

/// One side of the tape: repeated words, nearest the head first, with the
/// far end implicitly blank.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Runs(Vec<(Word, u16)>);

impl Runs {
    fn empty() -> Runs {
        Runs(Vec::new())
    }

    /// Removes the cell nearest the head. Returns the symbol that was
    /// there and every possible remainder: a saturated leading count
    /// splits into "exactly cap - 1" and "still cap or more". The
    /// remainders are raw; callers recompress after the whole step.
    fn pop(&self, cap: u16) -> (u8, Vec<Runs>) {
        let Some(&(word, count)) = self.0.first() else {
            // Implicit blank sea: reading it consumes nothing.
            return (0, vec![Runs::empty()]);
        };
        let counts: &[u16] = if count == MANY {
            &[cap - 1, MANY]
        } else {
            &[count - 1]
        };
        let mut rests = Vec::with_capacity(counts.len());
        for &left_over in counts {
            let mut v = Vec::with_capacity(self.0.len() + 1);
            if let Some(tail) = word.rest() {
                v.push((tail, 1));
            }
            if left_over > 0 {
                v.push((word, left_over));
            }
            v.extend_from_slice(&self.0[1..]);
            rests.push(Runs(v));
        }
        (word.first().sym(), rests)
    }

    /// Adds one cell nearest the head, raw (no recompression).
    fn pushed(&self, sym: u8) -> Runs {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push((Word::single(Unit::of_sym(sym)), 1));
        v.extend_from_slice(&self.0);
        Runs(v)
    }

    /// Recompresses into the canonical form: literal stretches between
    /// saturated runs are re-chunked into `block`-length words from their
    /// head-side end, and adjacent runs of identical words merge with
    /// saturating counts; trailing all-blank runs drop into the implicit
    /// blank sea. Returns None when the expansion bound is hit.
    fn canonicalize(&self, params: &ClosureParams) -> Option<Runs> {
        let mut out: Vec<(Word, u16)> = Vec::new();
        let mut segment: Vec<Unit> = Vec::new();

        for &(word, count) in &self.0 {
            if count == MANY {
                flush(&mut segment, &mut out, params);
                merge_push(&mut out, word, MANY, params.cap);
            } else {
                if segment.len() + word.len as usize * count as usize > MAX_EXPAND {
                    return None;
                }
                for _ in 0..count {
                    segment.extend(word.units());
                }
            }
        }
        flush(&mut segment, &mut out, params);

        while out.last().is_some_and(|&(w, _)| w.is_blank()) {
            out.pop();
        }
        Some(Runs(out))
    }
}

/// Chunks the segment into `block`-length words from its head-side end
/// and merges them onto `out`.
fn flush(segment: &mut Vec<Unit>, out: &mut Vec<(Word, u16)>, params: &ClosureParams) {
    for chunk in segment.chunks(params.block as usize) {
        merge_push(out, Word::pack(chunk), 1, params.cap);
    }
    segment.clear();
}

fn merge_push(out: &mut Vec<(Word, u16)>, word: Word, count: u16, cap: u16) {
    if let Some(last) = out.last_mut() {
        if last.0 == word {
            last.1 = if last.1 == MANY || count == MANY {
                MANY
            } else {
                let sum = last.1.saturating_add(count);
                if sum >= cap {
                    MANY
                } else {
                    sum
                }
            };
            return;
        }
    }
    out.push((word, count));
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct AbsConfig {
    state: u32,
    left: Runs,
    /// Head cell first.
    right: Runs,
}

/// Why a closure attempt did not produce a proof.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Failure {
    /// A halting or undefined cell is abstractly reachable: the
    /// abstraction is too coarse (or the machine really halts).
    HaltReachable,
    /// An exploration bound was exceeded before the closure settled.
    BoundsExceeded,
}

/// Explores the closure of the abstract start under `cell`. Returns true
/// when the closure settles without ever sitting in an undefined or
/// halting cell — proof that the machine never halts. False is
/// inconclusive: a halting cell was abstractly reachable, or a bound was
/// exceeded.
pub(crate) fn closure_refutes_halting(
    start: u32,
    cell: impl Fn(u32, Sym) -> Option<Transition>,
    params: ClosureParams,
) -> bool {
    closure(start, cell, params).is_ok()
}

fn closure(
    start: u32,
    cell: impl Fn(u32, Sym) -> Option<Transition>,
    params: ClosureParams,
) -> Result<usize, Failure> {
    debug_assert!((1..=8).contains(&params.block));
    debug_assert!((1..MANY).contains(&params.cap));

    let begin = AbsConfig {
        state: start,
        left: Runs::empty(),
        right: Runs::empty(),
    };
    let mut seen: HashSet<AbsConfig> = HashSet::new();
    seen.insert(begin.clone());
    let mut frontier = vec![begin];

    while let Some(cfg) = frontier.pop() {
        let (head_sym, right_rests) = cfg.right.pop(params.cap);
        let Some(Transition::Step { next, write, mv }) =
            cell(cfg.state, Sym::from_bit(head_sym))
        else {
            return Err(Failure::HaltReachable);
        };
        for right_rest in right_rests {
            // Raw successor sides for this branch of the right pop.
            let raw: Vec<(Runs, Runs)> = match mv {
                Move::R => vec![(cfg.left.pushed(write.bit()), right_rest)],
                Move::L => {
                    let shifted = right_rest.pushed(write.bit());
                    let (adj_sym, left_rests) = cfg.left.pop(params.cap);
                    left_rests
                        .into_iter()
                        .map(|left_rest| (left_rest, shifted.pushed(adj_sym)))
                        .collect()
                }
            };
            for (left, right) in raw {
                let (Some(left), Some(right)) =
                    (left.canonicalize(&params), right.canonicalize(&params))
                else {
                    return Err(Failure::BoundsExceeded);
                };
                if left.0.len() > params.max_runs || right.0.len() > params.max_runs {
                    return Err(Failure::BoundsExceeded);
                }
                let succ = AbsConfig {
                    state: next,
                    left,
                    right,
                };
                if seen.len() >= params.max_configs {
                    return Err(Failure::BoundsExceeded);
                }
                if seen.insert(succ.clone()) {
                    frontier.push(succ);
                }
            }
        }
    }
    Ok(seen.len())
}
