//! Busy-beaver search: exhaustive enumeration of small two-symbol machines
//! with exact non-halting proofs.
//!
//! [`enumerate`] provides the naive total-table space and its quotient by
//! the behavior-preserving symmetries (state renaming, left-right mirror);
//! [`certify`] runs the lazy tree-normal-form enumeration with non-halting
//! filters and reports the maximum halting step count.

mod abstraction;
pub mod certify;
pub mod enumerate;
mod regular;

pub use certify::{certify_bb, BbResult, EnumerationTask, NonHaltProof, Normalization};
pub use enumerate::{
    class_count_by_enumeration, class_count_by_quotient, enumerate_canonical, naive_tables,
    table_key, MAX_STATES,
};
