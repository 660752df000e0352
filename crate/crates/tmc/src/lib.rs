//! A toolchain for building, running, and studying small Turing machines.
//!
//! The pipeline has three layers:
//!
//! 1. **Laconic** — a tiny imperative language over unbounded naturals
//!    (assignment, arithmetic, `while`/`if`, functions, `print`, `halt`).
//! 2. **TMD** — a multi-tape register intermediate form: one growable tape of
//!    symbols `1`/`E` per register, a call stack, and per-function command
//!    lists whose commands react to the symbol under a register head.
//! 3. **Single-tape two-symbol machines** ([`tm`]) — the final target. The
//!    compiler emits either a *naive* machine (one state per payload bit) or
//!    an *introspective* one (a short word-extractor unpacks a binary payload
//!    that the machine then executes on-tape), whichever is asked for or —
//!    under `auto` — whichever is smaller.
//!
//! Alongside the pipeline live number-theory oracles used to cross-check
//! compiled programs, and a Busy Beaver enumerator for validating the
//! simulator against ground truth.

pub mod bb;
pub mod conjectures;
pub mod tm;
pub mod tmd;

pub mod support;
