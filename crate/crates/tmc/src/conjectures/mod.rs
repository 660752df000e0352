//! Exact, native implementations of the mathematical statements the
//! generated machines encode. These are the oracles the rest of the test
//! suite measures compiled programs against:
//!
//! * [`primes`] — primality, Goldbach witnesses and range sweeps;
//! * [`lagarias`] — Lagarias's elementary form of the Riemann Hypothesis
//!   (`η`, `δ`, and the `l(n) < r(n)` inequality) over exact big integers;
//! * [`friedman`] — the order-invariant-graph predicates behind the
//!   ZFC-independence machine, plus a toy-scale search skeleton.

pub mod friedman;
pub mod lagarias;
pub mod primes;

pub use friedman::{
    complexity, condition3, graph_is_valid, order_equivalent, rationals_of_complexity, rlex_cmp,
    rlex_le, search_one_triple, subsets_up_to, ush, OrderGraph, PrefixRule, Rat, SearchVerdict,
    ToySearch, Vertex,
};
pub use lagarias::{
    check_cancelled, check_certified_u64, delta, delta_u64, eta, harmonic_sum_and_factorial,
    lagarias_check, lagarias_row, LagariasRow,
};
pub use primes::{
    goldbach_sweep, goldbach_witness, goldbach_witness_naive, is_prime, Sieve,
};
