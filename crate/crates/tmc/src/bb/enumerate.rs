//! Enumeration of small machines, naive and canonical.
//!
//! The naive enumerator materializes every total transition table over `k`
//! states where each cell either halts or steps somewhere — `(4k+1)^(2k)`
//! tables. It exists as the ground truth the canonical enumerations are
//! cross-checked against: canonicalization must never change observable
//! behavior, and quotienting the naive space must reproduce the canonical
//! class counts.
//!
//! Canonical form quotients by the two behavior-preserving symmetries of
//! the model: renaming the non-start states, and mirroring every head move
//! (the blank symbol is pinned by the all-blank input, so symbol swaps are
//! *not* a symmetry and are not applied).

use crate::tm::{Machine, Move, Sym, Transition};

/// Largest state count the exhaustive tooling accepts.
pub const MAX_STATES: u32 = 4;

fn check_k(k: u32) {
    assert!(
        (1..=MAX_STATES).contains(&k),
        "state count {k} outside supported range 1..={MAX_STATES}"
    );
}

/// Number of distinct values one table cell can take: halt, or
/// (2 writes × 2 moves × k targets).
fn cell_base(k: u32) -> u64 {
    1 + 4 * u64::from(k)
}

/// Dense encoding of one cell in `0..cell_base(k)`.
fn cell_code(tr: Transition) -> u64 {
    match tr {
        Transition::Halt => 0,
        Transition::Step { next, write, mv } => {
            1 + 4 * u64::from(next)
                + 2 * u64::from(write.bit())
                + u64::from(mv == Move::R)
        }
        Transition::Error => panic!("error cells do not occur in enumerated tables"),
    }
}

fn cell_decode(code: u64, k: u32) -> Transition {
    assert!(code < cell_base(k));
    if code == 0 {
        return Transition::Halt;
    }
    let c = code - 1;
    Transition::Step {
        next: u32::try_from(c / 4).unwrap(),
        write: Sym::from_bit(u8::try_from((c / 2) % 2).unwrap()),
        mv: if c % 2 == 1 { Move::R } else { Move::L },
    }
}

/// Packs a whole table into one integer, mixed-radix by cell. Fits `u64`
/// comfortably for every supported `k` (`17^8 < 2^33`·…`< 2^64` at k=4).
pub fn table_key(rows: &[[Transition; 2]]) -> u64 {
    let k = u32::try_from(rows.len()).unwrap();
    let base = cell_base(k);
    let mut key = 0u64;
    for row in rows.iter().rev() {
        for tr in row.iter().rev() {
            key = key * base + cell_code(*tr);
        }
    }
    key
}

fn table_from_key(mut key: u64, k: u32) -> Vec<[Transition; 2]> {
    let base = cell_base(k);
    let mut rows = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let a = cell_decode(key % base, k);
        key /= base;
        let b = cell_decode(key % base, k);
        key /= base;
        rows.push([a, b]);
    }
    assert_eq!(key, 0);
    rows
}

/// Iterator over every total `k`-state table.
pub struct NaiveTables {
    k: u32,
    next_key: u64,
    end_key: u64,
}

impl Iterator for NaiveTables {
    type Item = Vec<[Transition; 2]>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_key == self.end_key {
            return None;
        }
        let t = table_from_key(self.next_key, self.k);
        self.next_key += 1;
        Some(t)
    }
}

/// Enumerates all `(4k+1)^(2k)` total transition tables.
pub fn naive_tables(k: u32) -> NaiveTables {
    check_k(k);
    let end_key = cell_base(k).pow(2 * k);
    NaiveTables {
        k,
        next_key: 0,
        end_key,
    }
}

/// Applies a state permutation (fixing the start state 0) and optionally a
/// left-right mirror to a table.
fn transform(rows: &[[Transition; 2]], perm: &[u32], mirror: bool) -> Vec<[Transition; 2]> {
    let mut out = vec![[Transition::Halt; 2]; rows.len()];
    for (s, row) in rows.iter().enumerate() {
        let mapped: [Transition; 2] = std::array::from_fn(|sym| match row[sym] {
            Transition::Step { next, write, mv } => Transition::Step {
                next: perm[next as usize],
                write,
                mv: if mirror {
                    match mv {
                        Move::L => Move::R,
                        Move::R => Move::L,
                    }
                } else {
                    mv
                },
            },
            other => other,
        });
        out[perm[s] as usize] = mapped;
    }
    out
}

fn permutations_fixing_start(k: u32) -> Vec<Vec<u32>> {
    // All permutations of 1..k, with 0 pinned.
    let mut perms = Vec::new();
    let mut rest: Vec<u32> = (1..k).collect();
    heap_permutations(&mut rest, 0, &mut |tail: &[u32]| {
        let mut p = Vec::with_capacity(k as usize);
        p.push(0);
        p.extend_from_slice(tail);
        perms.push(p);
    });
    perms
}

// Heap's algorithm over the non-start states.
fn heap_permutations(items: &mut Vec<u32>, i: usize, visit: &mut impl FnMut(&[u32])) {
    if i + 1 >= items.len() {
        visit(items);
        return;
    }
    for j in i..items.len() {
        items.swap(i, j);
        heap_permutations(items, i + 1, visit);
        items.swap(i, j);
    }
}

/// The least [`table_key`] over every symmetry variant of the table —
/// identical for behaviorally-identical tables, so it names the class.
pub fn canonical_key(rows: &[[Transition; 2]]) -> u64 {
    let k = u32::try_from(rows.len()).unwrap();
    check_k(k);
    let mut best = u64::MAX;
    for perm in permutations_fixing_start(k) {
        for mirror in [false, true] {
            best = best.min(table_key(&transform(rows, &perm, mirror)));
        }
    }
    best
}

/// Number of symmetry classes, computed by quotienting the naive space:
/// count the distinct canonical keys over every table.
pub fn class_count_by_quotient(k: u32) -> usize {
    check_k(k);
    let mut seen = std::collections::HashSet::new();
    for rows in naive_tables(k) {
        seen.insert(canonical_key(&rows));
    }
    seen.len()
}

/// Number of symmetry classes, computed by direct canonical enumeration:
/// count the tables that are their own canonical representative. Must agree
/// with [`class_count_by_quotient`] — the cross-check that canonicalization
/// is idempotent and every class's representative is reachable.
pub fn class_count_by_enumeration(k: u32) -> usize {
    check_k(k);
    naive_tables(k)
        .filter(|rows| canonical_key(rows) == table_key(rows))
        .count()
}

/// Yields the canonical representative of every symmetry class of total
/// `k`-state tables, as ready-to-run machines.
pub fn enumerate_canonical(k: u32) -> impl Iterator<Item = Machine> {
    check_k(k);
    naive_tables(k)
        .filter(|rows| canonical_key(rows) == table_key(rows))
        .map(|rows| Machine::new(rows).expect("enumerated table is structurally valid"))
}
