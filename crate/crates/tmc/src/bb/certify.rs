//! Exhaustive busy-beaver certification.
//!
//! The driver enumerates machines lazily in tree normal form: simulation
//! starts with an empty transition table, and the first time a (state,
//! symbol) cell is reached it branches over every canonical way to fill it
//! (halt, or a step whose target respects first-visited-state numbering).
//! Machines that halt record their step counts; machines that keep running
//! must be *proven* non-halting by one of five filters, or they count as
//! unresolved and the certification fails:
//!
//! 1. halt-unreachability — no undefined cell is reachable in the state
//!    digraph, so nothing can ever halt;
//! 2. exact configuration cycles — the full configuration (state, head,
//!    tape) recurs, detected by Brent's algorithm with power-of-two
//!    checkpoints;
//! 3. translated cycles — the machine breaks a head-position record in the
//!    same state twice, and the tape segment it could still revisit is
//!    identical at both records up to translation, so it escapes forever;
//! 4. backward contradictions — every backward chain from "about to reach
//!    an undefined cell" contradicts itself within a depth the forward run
//!    has already survived, so the undefined cells are unreachable;
//! 5. abstract closures — the reachable configurations, over-approximated
//!    by run-compressed tapes, form a finite closed set that contains no
//!    undefined cell (see the `abstraction` module).
//!
//! All five filters are sound: they never misclassify a halting machine.

use super::{abstraction, regular};
use super::enumerate::MAX_STATES;
use crate::tm::{Machine, Move, Sym, Transition};

/// Canonical-form normalizations the lazy enumerator applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Normalization {
    /// New states are introduced in first-visit order: a branch may target
    /// only states seen so far plus one fresh state.
    pub first_visit_numbering: bool,
    /// The very first transition is pinned to write the non-blank symbol
    /// (machines whose first write is a blank either loop on an all-blank
    /// tape or halt within k+1 steps, so no champion is lost).
    pub first_write_symmetry: bool,
}

impl Default for Normalization {
    fn default() -> Self {
        Normalization {
            first_visit_numbering: true,
            first_write_symmetry: true,
        }
    }
}

/// One exhaustive enumeration job.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationTask {
    pub k: u32,
    /// Per-machine simulation cap. Must be at least the true maximum
    /// halting time for the certification to be meaningful.
    pub step_budget: u64,
    pub normalization: Normalization,
}

impl EnumerationTask {
    pub fn new(k: u32, step_budget: u64) -> EnumerationTask {
        assert!(
            (1..=MAX_STATES).contains(&k),
            "state count {k} outside supported range 1..={MAX_STATES}"
        );
        assert!(step_budget >= 1);
        EnumerationTask {
            k,
            step_budget,
            normalization: Normalization::default(),
        }
    }
}

/// Which filter proved a machine non-halting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonHaltProof {
    /// No undefined cell is reachable in the state digraph.
    HaltUnreachable,
    /// The full configuration recurred.
    ExactCycle,
    /// A head-position record recurred in the same state with an identical
    /// reachable tape segment.
    TranslatedCycle,
    /// Halt-unreachability at the configuration level: every backward
    /// history from every potential halting configuration contradicts
    /// itself within a window the forward run already cleared.
    BackwardContradiction,
    /// Halt-unreachability by abstract interpretation: the set of
    /// configurations reachable from the start, tracked as run-length
    /// tapes with saturating counts, closes without ever executing an
    /// undefined cell.
    AbstractClosure,
    /// Halt-unreachability by abstract interpretation with each tape
    /// half tracked as the state of a small DFA reading it from the
    /// blank sea inward; some pair of DFAs yields a closure that never
    /// executes an undefined cell.
    AutomatonClosure,
}

/// Outcome of one exhaustive enumeration.
#[derive(Clone, Debug)]
pub struct BbResult {
    pub k: u32,
    pub step_budget: u64,
    /// Largest step count among halting machines (the halting transition
    /// itself counts as one step).
    pub max_steps: u64,
    /// First enumerated machine attaining `max_steps`; unreached cells are
    /// materialized as error transitions, which the winning run never
    /// executes.
    pub champion: Machine,
    /// Leaves of the enumeration tree.
    pub enumerated: u64,
    pub halted: u64,
    pub halt_unreachable: u64,
    pub exact_cycles: u64,
    pub translated_cycles: u64,
    pub backward_contradictions: u64,
    pub abstract_closures: u64,
    pub automaton_closures: u64,
    /// Machines neither halted nor proven non-halting within the budget.
    /// Certification requires zero.
    pub unresolved: u64,
    /// A spread of machines each filter claimed, for soundness spot-checks.
    pub filtered_samples: Vec<(NonHaltProof, Machine)>,
    /// The first few unresolved machines, for diagnostics.
    pub unresolved_samples: Vec<Machine>,
}

impl BbResult {
    pub fn proven_nonhalting(&self) -> u64 {
        self.halt_unreachable
            + self.exact_cycles
            + self.translated_cycles
            + self.backward_contradictions
            + self.abstract_closures
            + self.automaton_closures
    }

    /// True when every enumerated machine was resolved, making `max_steps`
    /// the exact busy-beaver value rather than a lower bound.
    pub fn is_certified(&self) -> bool {
        self.unresolved == 0
    }
}

// ---------------------------------------------------------------------
// Partial tables
// ---------------------------------------------------------------------

/// A transition table under construction: each of the `2k` cells is either
/// still unconstrained or a concrete non-halting step. (Cells assigned a
/// halt become leaves immediately and are never explored further.)
#[derive(Clone, Copy)]
struct PartialTable {
    cells: [Option<Transition>; 2 * MAX_STATES as usize],
    k: u32,
    /// Highest state index named anywhere so far.
    max_named: u32,
}

impl PartialTable {
    fn new(k: u32) -> PartialTable {
        PartialTable {
            cells: [None; 2 * MAX_STATES as usize],
            k,
            max_named: 0,
        }
    }

    fn idx(state: u32, sym: Sym) -> usize {
        state as usize * 2 + sym.bit() as usize
    }

    fn cell(&self, state: u32, sym: Sym) -> Option<Transition> {
        self.cells[Self::idx(state, sym)]
    }

    fn defined_count(&self) -> usize {
        self.cells[..2 * self.k as usize]
            .iter()
            .filter(|c| c.is_some())
            .count()
    }

    fn with(mut self, state: u32, sym: Sym, tr: Transition) -> PartialTable {
        self.cells[Self::idx(state, sym)] = Some(tr);
        if let Transition::Step { next, .. } = tr {
            self.max_named = self.max_named.max(next);
        }
        self
    }

    /// Bitmask of states from which no undefined cell is reachable in the
    /// state digraph. A machine sitting in such a state can only keep
    /// stepping through fully-defined non-halting cells forever.
    fn doomed_mask(&self) -> u32 {
        let k = self.k;
        let mut alive = 0u32;
        for s in 0..k {
            if self.cell(s, Sym::A).is_none() || self.cell(s, Sym::B).is_none() {
                alive |= 1 << s;
            }
        }
        loop {
            let mut changed = false;
            for s in 0..k {
                if alive & (1 << s) != 0 {
                    continue;
                }
                for sym in [Sym::A, Sym::B] {
                    match self.cell(s, sym) {
                        Some(Transition::Step { next, .. }) => {
                            if alive & (1 << next) != 0 {
                                alive |= 1 << s;
                                changed = true;
                                break;
                            }
                        }
                        Some(_) => unreachable!("explored tables hold only step cells"),
                        None => unreachable!("undefined cells make their state alive"),
                    }
                }
            }
            if !changed {
                break;
            }
        }
        !alive & ((1 << k) - 1)
    }

    /// Every canonical way to fill the cell the head just reached. Halt is
    /// always first, so the 1-step halter exists in every enumeration and
    /// the order is deterministic.
    fn candidates(&self, norm: Normalization) -> Vec<Transition> {
        let mut out = vec![Transition::Halt];
        let is_root = self.defined_count() == 0;
        let max_target = if norm.first_visit_numbering {
            (self.max_named + 1).min(self.k - 1)
        } else {
            self.k - 1
        };
        if is_root {
            // Mirror symmetry pins the first move rightward; first-write
            // symmetry (when on, and when there is a second state to go
            // to) pins the first transition entirely.
            if norm.first_write_symmetry && self.k >= 2 {
                out.push(Transition::Step {
                    next: 1,
                    write: Sym::B,
                    mv: Move::R,
                });
                return out;
            }
            for next in 0..=max_target {
                for write in [Sym::A, Sym::B] {
                    out.push(Transition::Step {
                        next,
                        write,
                        mv: Move::R,
                    });
                }
            }
            return out;
        }
        for next in 0..=max_target {
            for write in [Sym::A, Sym::B] {
                for mv in [Move::L, Move::R] {
                    out.push(Transition::Step { next, write, mv });
                }
            }
        }
        out
    }

    /// Configuration-level halt-unreachability. A halting run must execute
    /// some undefined cell; walking its history backwards forces a chain
    /// of (state, head, local tape) constraints. If every such chain
    /// contradicts itself within `depth` steps, any undefined-cell
    /// execution would have to happen within the first `depth` steps of
    /// the run — and the forward simulation has already cleared at least
    /// that many. `depth` must therefore not exceed the steps the forward
    /// run survived. Returns false (inconclusive) when any chain survives
    /// to the depth limit or the node budget runs out.
    fn backward_refutes_halting(&self, depth: u64, node_cap: u64) -> bool {
        struct BackNode {
            state: u32,
            head: i64,
            depth: u64,
            window: std::collections::BTreeMap<i64, Sym>,
        }
        let mut nodes = 0u64;
        for s in 0..self.k {
            for sym in [Sym::A, Sym::B] {
                if self.cell(s, sym).is_some() {
                    continue;
                }
                // The configuration about to execute the undefined cell.
                let mut stack = vec![BackNode {
                    state: s,
                    head: 0,
                    depth: 0,
                    window: [(0i64, sym)].into_iter().collect(),
                }];
                while let Some(node) = stack.pop() {
                    nodes += 1;
                    if nodes > node_cap || node.depth == depth {
                        return false;
                    }
                    for ps in 0..self.k {
                        for py in [Sym::A, Sym::B] {
                            let Some(Transition::Step { next, write, mv }) = self.cell(ps, py)
                            else {
                                continue;
                            };
                            if next != node.state {
                                continue;
                            }
                            // The predecessor stood one cell against the
                            // move direction and left `write` behind.
                            let phead = match mv {
                                Move::R => node.head - 1,
                                Move::L => node.head + 1,
                            };
                            if let Some(&known) = node.window.get(&phead) {
                                if known != write {
                                    continue; // contradicts the history
                                }
                            }
                            let mut window = node.window.clone();
                            window.insert(phead, py);
                            stack.push(BackNode {
                                state: ps,
                                head: phead,
                                depth: node.depth + 1,
                                window,
                            });
                        }
                    }
                    // No valid predecessor pushed: this chain died, which
                    // is what the refutation needs.
                }
            }
        }
        true
    }

    /// Abstract interpretation over word-run-compressed tapes (see the
    /// `abstraction` module). Returns true when the closure of reachable
    /// abstract configurations settles without touching an undefined
    /// cell, which proves the machine never halts. False is inconclusive.
    fn abstract_closure_refutes_halting(&self, params: abstraction::ClosureParams) -> bool {
        abstraction::closure_refutes_halting(0, |state, sym| self.cell(state, sym), params)
    }

    /// Abstract interpretation over DFA-abstracted tape halves (see the
    /// `regular` module): searches small DFA pairs for one whose closure
    /// settles without touching an undefined cell. False is inconclusive.
    fn automaton_closure_refutes_halting(&self) -> bool {
        regular::search_refutes_halting(0, self.k, |state, sym| self.cell(state, sym))
    }

    /// Totalizes the table: unreached cells become error transitions the
    /// recorded run never executes.
    fn materialize(&self) -> Machine {
        let rows: Vec<[Transition; 2]> = (0..self.k)
            .map(|s| {
                [
                    self.cell(s, Sym::A).unwrap_or(Transition::Error),
                    self.cell(s, Sym::B).unwrap_or(Transition::Error),
                ]
            })
            .collect();
        Machine::new(rows).expect("partial tables only name existing states")
    }
}

// ---------------------------------------------------------------------
// Simulation configurations with cycle detectors
// ---------------------------------------------------------------------

/// Snapshot of a full configuration for exact-cycle detection.
#[derive(Clone)]
struct BrentSnapshot {
    state: u32,
    head: usize,
    vlo: usize,
    tape: Vec<u8>,
}

impl BrentSnapshot {
    fn at(&self, pos: usize) -> u8 {
        if pos < self.vlo || pos - self.vlo >= self.tape.len() {
            0
        } else {
            self.tape[pos - self.vlo]
        }
    }
}

/// Snapshot taken at a head-position record, for translated-cycle
/// detection in one direction.
#[derive(Clone)]
struct RecordSnapshot {
    state: u32,
    head: usize,
    lo: usize,
    tape: Vec<u8>,
}

impl RecordSnapshot {
    fn at(&self, pos: usize) -> u8 {
        if pos < self.lo || pos - self.lo >= self.tape.len() {
            0
        } else {
            self.tape[pos - self.lo]
        }
    }
}

/// Record tracker for one travel direction.
#[derive(Clone)]
struct RecordTracker {
    /// Furthest head position reached in this direction.
    frontier: usize,
    saved: Option<RecordSnapshot>,
    /// For rightward records: the minimum head position since the save.
    /// For leftward records: the maximum. Bounds the tape segment the
    /// machine could have consulted since the saved record.
    watermark: usize,
    records_seen: u64,
    next_save_at: u64,
}

impl RecordTracker {
    fn new(start: usize) -> RecordTracker {
        RecordTracker {
            frontier: start,
            saved: None,
            watermark: start,
            records_seen: 0,
            next_save_at: 1,
        }
    }
}

#[derive(Clone)]
struct Config {
    tape: Vec<u8>,
    head: usize,
    state: u32,
    steps: u64,
    /// Extent of head positions ever occupied; all content lies inside.
    vlo: usize,
    vhi: usize,
    brent: Option<BrentSnapshot>,
    brent_power: u64,
    brent_lam: u64,
    right: RecordTracker,
    left: RecordTracker,
}

impl Config {
    fn new(budget: u64) -> Config {
        let budget = usize::try_from(budget).expect("budget fits a usize");
        let center = budget + 1;
        Config {
            tape: vec![0u8; 2 * budget + 3],
            head: center,
            state: 0,
            steps: 0,
            vlo: center,
            vhi: center,
            brent: None,
            brent_power: 1,
            brent_lam: 0,
            right: RecordTracker::new(center),
            left: RecordTracker::new(center),
        }
    }

    fn read(&self) -> Sym {
        Sym::from_bit(self.tape[self.head])
    }

    /// Executes one step and runs the cycle detectors. Returns a proof if
    /// the machine can now never halt.
    fn apply(&mut self, tr: Transition) -> Option<NonHaltProof> {
        let Transition::Step { next, write, mv } = tr else {
            unreachable!("only step transitions are executed");
        };
        self.tape[self.head] = write.bit();
        self.head = match mv {
            Move::L => self.head - 1,
            Move::R => self.head + 1,
        };
        self.state = next;
        self.steps += 1;
        self.vlo = self.vlo.min(self.head);
        self.vhi = self.vhi.max(self.head);
        self.right.watermark = self.right.watermark.min(self.head);
        self.left.watermark = self.left.watermark.max(self.head);

        if let Some(proof) = self.check_exact_cycle() {
            return Some(proof);
        }
        if self.head > self.right.frontier {
            self.right.frontier = self.head;
            if let Some(proof) = self.check_record(true) {
                return Some(proof);
            }
        }
        if self.head < self.left.frontier {
            self.left.frontier = self.head;
            if let Some(proof) = self.check_record(false) {
                return Some(proof);
            }
        }
        None
    }

    /// Brent's algorithm on full configurations: compare against the saved
    /// checkpoint, and re-save at power-of-two step distances.
    fn check_exact_cycle(&mut self) -> Option<NonHaltProof> {
        if let Some(saved) = &self.brent {
            if saved.state == self.state && saved.head == self.head {
                let equal = (self.vlo..=self.vhi)
                    .all(|p| self.tape[p] == saved.at(p));
                if equal {
                    return Some(NonHaltProof::ExactCycle);
                }
            }
        }
        self.brent_lam += 1;
        if self.brent_lam == self.brent_power {
            self.brent = Some(BrentSnapshot {
                state: self.state,
                head: self.head,
                vlo: self.vlo,
                tape: self.tape[self.vlo..=self.vhi].to_vec(),
            });
            self.brent_power *= 2;
            self.brent_lam = 0;
        }
        None
    }

    /// The head just broke a record in one direction. If an earlier record
    /// in the same state left an identical tape segment over everything
    /// the machine has consulted since, the run repeats translated
    /// forever. Otherwise maybe re-anchor the saved record.
    fn check_record(&mut self, rightward: bool) -> Option<NonHaltProof> {
        let tracker = if rightward {
            &mut self.right
        } else {
            &mut self.left
        };
        tracker.records_seen += 1;

        let mut proven = false;
        if let Some(saved) = &tracker.saved {
            if saved.state == self.state {
                // Segment the machine could have consulted since the saved
                // record: from the deepest backward excursion to the
                // record position.
                let m = if rightward {
                    saved.head - tracker.watermark
                } else {
                    tracker.watermark - saved.head
                };
                let (now_base, saved_base) = if rightward {
                    (self.head - m, saved.head - m)
                } else {
                    (self.head, saved.head)
                };
                proven = (0..=m)
                    .all(|x| self.tape[now_base + x] == saved.at(saved_base + x));
            }
        }
        if proven {
            return Some(NonHaltProof::TranslatedCycle);
        }

        if tracker.records_seen == tracker.next_save_at {
            let (lo, hi) = if rightward {
                (self.vlo, self.head)
            } else {
                (self.head, self.vhi)
            };
            tracker.saved = Some(RecordSnapshot {
                state: self.state,
                head: self.head,
                lo,
                tape: self.tape[lo..=hi].to_vec(),
            });
            tracker.watermark = self.head;
            tracker.next_save_at *= 2;
        }
        None
    }
}

// ---------------------------------------------------------------------
// The driver
// ---------------------------------------------------------------------

struct Acc {
    task: EnumerationTask,
    max_steps: u64,
    champion: Option<Machine>,
    enumerated: u64,
    halted: u64,
    halt_unreachable: u64,
    exact_cycles: u64,
    translated_cycles: u64,
    unresolved: u64,
    backward_contradictions: u64,
    abstract_closures: u64,
    automaton_closures: u64,
    filtered_samples: Vec<(NonHaltProof, Machine)>,
    sample_counts: [u64; 6],
    unresolved_samples: Vec<Machine>,
}

const SAMPLES_PER_FILTER: usize = 48;
const SAMPLE_STRIDE: u64 = 257;
/// Backward-history window; capped so pathological branchings stay cheap.
const BACKWARD_DEPTH: u64 = 96;
const BACKWARD_NODE_CAP: u64 = 400_000;
/// (word length, saturation cap) pairs the closure decider tries in
/// turn. Longer words compress tapes with longer repeating patterns;
/// larger caps distinguish more configurations (fewer spurious merges)
/// at the price of a bigger closure. Ordered cheap to expensive.
const ABSTRACTION_SCHEDULE: [(u8, u16); 7] = [
    (1, 3),
    (2, 3),
    (3, 3),
    (4, 3),
    (2, 6),
    (3, 6),
    (4, 6),
];
const ABSTRACTION_CONFIGS: usize = 20_000;
const ABSTRACTION_RUNS: usize = 24;

impl Acc {
    fn halt(&mut self, table: PartialTable, steps: u64) {
        self.enumerated += 1;
        self.halted += 1;
        if steps > self.max_steps || self.champion.is_none() {
            self.max_steps = self.max_steps.max(steps);
            self.champion = Some(table.materialize());
        }
    }

    fn nonhalt(&mut self, proof: NonHaltProof, table: &PartialTable) {
        self.enumerated += 1;
        let slot = match proof {
            NonHaltProof::HaltUnreachable => {
                self.halt_unreachable += 1;
                0
            }
            NonHaltProof::ExactCycle => {
                self.exact_cycles += 1;
                1
            }
            NonHaltProof::TranslatedCycle => {
                self.translated_cycles += 1;
                2
            }
            NonHaltProof::BackwardContradiction => {
                self.backward_contradictions += 1;
                3
            }
            NonHaltProof::AbstractClosure => {
                self.abstract_closures += 1;
                4
            }
            NonHaltProof::AutomatonClosure => {
                self.automaton_closures += 1;
                5
            }
        };
        self.sample_counts[slot] += 1;
        let kind_count = self.sample_counts[slot];
        let kept = self
            .filtered_samples
            .iter()
            .filter(|(p, _)| *p == proof)
            .count();
        if kept < SAMPLES_PER_FILTER && (kind_count - 1) % SAMPLE_STRIDE == 0 {
            self.filtered_samples.push((proof, table.materialize()));
        }
    }

    fn unresolved(&mut self, table: &PartialTable) {
        self.enumerated += 1;
        self.unresolved += 1;
        if self.unresolved_samples.len() < 48 {
            self.unresolved_samples.push(table.materialize());
        }
    }

    fn finish(self) -> BbResult {
        BbResult {
            k: self.task.k,
            step_budget: self.task.step_budget,
            max_steps: self.max_steps,
            champion: self.champion.expect("the 1-step halter is always enumerated"),
            enumerated: self.enumerated,
            halted: self.halted,
            halt_unreachable: self.halt_unreachable,
            exact_cycles: self.exact_cycles,
            translated_cycles: self.translated_cycles,
            backward_contradictions: self.backward_contradictions,
            abstract_closures: self.abstract_closures,
            automaton_closures: self.automaton_closures,
            unresolved: self.unresolved,
            filtered_samples: self.filtered_samples,
            unresolved_samples: self.unresolved_samples,
        }
    }
}

fn explore(table: PartialTable, mut cfg: Config, acc: &mut Acc) {
    let doomed = table.doomed_mask();
    loop {
        if doomed & (1 << cfg.state) != 0 {
            acc.nonhalt(NonHaltProof::HaltUnreachable, &table);
            return;
        }
        if cfg.steps == acc.task.step_budget {
            // Last resort before giving up: configuration-level
            // halt-unreachability. The depth must stay within the steps
            // the forward run just survived.
            let depth = acc.task.step_budget.min(BACKWARD_DEPTH);
            if table.backward_refutes_halting(depth, BACKWARD_NODE_CAP) {
                acc.nonhalt(NonHaltProof::BackwardContradiction, &table);
            } else if ABSTRACTION_SCHEDULE.iter().any(|&(block, cap)| {
                table.abstract_closure_refutes_halting(abstraction::ClosureParams {
                    block,
                    cap,
                    max_configs: ABSTRACTION_CONFIGS,
                    max_runs: ABSTRACTION_RUNS,
                })
            }) {
                acc.nonhalt(NonHaltProof::AbstractClosure, &table);
            } else if table.automaton_closure_refutes_halting() {
                acc.nonhalt(NonHaltProof::AutomatonClosure, &table);
            } else {
                acc.unresolved(&table);
            }
            return;
        }
        let sym = cfg.read();
        match table.cell(cfg.state, sym) {
            Some(tr) => {
                if let Some(proof) = cfg.apply(tr) {
                    acc.nonhalt(proof, &table);
                    return;
                }
            }
            None => {
                for tr in table.candidates(acc.task.normalization) {
                    let child = table.with(cfg.state, sym, tr);
                    match tr {
                        Transition::Halt => acc.halt(child, cfg.steps + 1),
                        Transition::Step { .. } => {
                            let mut child_cfg = cfg.clone();
                            if let Some(proof) = child_cfg.apply(tr) {
                                acc.nonhalt(proof, &child);
                            } else {
                                explore(child, child_cfg, acc);
                            }
                        }
                        Transition::Error => unreachable!("error is never a candidate"),
                    }
                }
                return;
            }
        }
    }
}

/// Exhaustively enumerates the canonical `k`-state machines, simulating
/// each for at most `task.step_budget` steps, and proves the non-halters
/// non-halting. With `unresolved == 0` the result certifies the exact
/// maximum halting step count.
pub fn certify_bb(task: &EnumerationTask) -> BbResult {
    assert!(
        (1..=MAX_STATES).contains(&task.k),
        "state count {} outside supported range 1..={MAX_STATES}",
        task.k
    );
    assert!(task.step_budget >= 1);
    let mut acc = Acc {
        task: *task,
        max_steps: 0,
        champion: None,
        enumerated: 0,
        halted: 0,
        halt_unreachable: 0,
        exact_cycles: 0,
        translated_cycles: 0,
        backward_contradictions: 0,
        abstract_closures: 0,
        automaton_closures: 0,
        unresolved: 0,
        filtered_samples: Vec::new(),
        sample_counts: [0; 6],
        unresolved_samples: Vec::new(),
    };
    explore(PartialTable::new(task.k), Config::new(task.step_budget), &mut acc);
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tm::{run, HaltFlavor, Outcome};

    #[test]
    fn one_state_certification() {
        let result = certify_bb(&EnumerationTask::new(1, 10));
        assert_eq!(result.max_steps, 1);
        assert!(result.is_certified());
        // Canonical 1-state space: halt, write-blank-right, write-b-right.
        assert_eq!(result.enumerated, 3);
        assert_eq!(result.halted, 1);
        assert_eq!(result.translated_cycles, 2);
    }

    #[test]
    fn the_drifting_writer_is_caught_by_the_record_filter() {
        // One state, (a -> write b, move R, stay): grows a b-trail forever,
        // so its configuration never recurs even translated in full — the
        // record filter alone can prove it out.
        let mut cfg = Config::new(50);
        let tr = Transition::Step {
            next: 0,
            write: Sym::B,
            mv: Move::R,
        };
        let mut proof = None;
        for _ in 0..50 {
            if let Some(p) = cfg.apply(tr) {
                proof = Some(p);
                break;
            }
        }
        assert_eq!(proof, Some(NonHaltProof::TranslatedCycle));
    }

    #[test]
    fn the_two_state_flip_flop_is_an_exact_cycle() {
        // 0: on a write b move R to 1; 1: on a/b write a move L to 0.
        // Repeats the same two-cell dance in place.
        let mut cfg = Config::new(100);
        let fwd = Transition::Step {
            next: 1,
            write: Sym::B,
            mv: Move::R,
        };
        let back = Transition::Step {
            next: 0,
            write: Sym::A,
            mv: Move::L,
        };
        let mut proof = None;
        for i in 0..100 {
            let tr = if i % 2 == 0 { fwd } else { back };
            if let Some(p) = cfg.apply(tr) {
                proof = Some(p);
                break;
            }
        }
        assert_eq!(proof, Some(NonHaltProof::ExactCycle));
    }

    #[test]
    fn doomed_states_are_detected() {
        // State 1 loops to itself on both symbols with no way out; state 0
        // still has an undefined cell.
        let table = PartialTable::new(2)
            .with(0, Sym::A, Transition::Step { next: 1, write: Sym::B, mv: Move::R })
            .with(1, Sym::A, Transition::Step { next: 1, write: Sym::B, mv: Move::R })
            .with(1, Sym::B, Transition::Step { next: 1, write: Sym::A, mv: Move::L });
        assert_eq!(table.doomed_mask(), 0b10);
    }

    #[test]
    fn champion_runs_reproduce_their_recorded_step_counts() {
        for (k, budget) in [(1u32, 10u64), (2, 50)] {
            let result = certify_bb(&EnumerationTask::new(k, budget));
            let rerun = run(&result.champion, budget + 1);
            assert_eq!(rerun.outcome, Outcome::Halted(HaltFlavor::Halt));
            assert_eq!(rerun.steps, result.max_steps, "k={k}");
        }
    }

    #[test]
    fn tasks_reject_out_of_range_state_counts() {
        assert!(std::panic::catch_unwind(|| EnumerationTask::new(0, 10)).is_err());
        assert!(std::panic::catch_unwind(|| EnumerationTask::new(9, 10)).is_err());
    }
}
