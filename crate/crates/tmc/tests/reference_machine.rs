//! Checks on the vendored 7,910-state reference machine (`assets/zfc.tm`), a
//! published machine whose halting is independent of the axioms of set
//! theory. The listing's structural facts are frozen here; the bounded
//! non-halting runs are sanity checks of the simulator at scale.

use tmc::tm::{parse_listing, run, serialize_listing, Outcome, Sym};

const LISTING: &str = include_str!("../assets/zfc.tm");

#[test]
fn parses_with_expected_shape() {
    let m = parse_listing(LISTING).expect("vendored listing must parse");
    assert_eq!(m.state_count(), 7910);
    assert_eq!(m.start(), 0);
}

#[test]
fn exactly_one_halt_transition_from_7862() {
    let m = parse_listing(LISTING).unwrap();
    assert_eq!(m.halt_transitions(), vec![(7862, Sym::A)]);
}

#[test]
fn serialization_round_trips() {
    let m = parse_listing(LISTING).unwrap();
    let text = serialize_listing(&m);
    let back = parse_listing(&text).unwrap();
    assert_eq!(m, back);
}

#[test]
fn does_not_halt_within_a_million_steps() {
    let m = parse_listing(LISTING).unwrap();
    let r = run(&m, 1_000_000);
    assert_eq!(r.outcome, Outcome::BudgetExhausted);
    assert_eq!(r.steps, 1_000_000);
}

#[test]
fn simulation_is_deterministic() {
    let m = parse_listing(LISTING).unwrap();
    assert_eq!(run(&m, 200_000), run(&m, 200_000));
}

#[test]
fn retargeting_a_transition_breaks_halt_uniqueness() {
    // Point another state's transition at HALT; the uniqueness check must
    // notice.
    let mutated = LISTING.replacen("0001bR", "HALT--", 1);
    assert_ne!(mutated, LISTING);
    let m = parse_listing(&mutated).unwrap();
    assert!(m.halt_transitions().len() > 1);
}

/// The full-scale non-halting run: ten billion steps. Takes on the order of a
/// minute; run with `cargo test -- --ignored reference_machine`.
#[test]
#[ignore]
fn does_not_halt_within_ten_billion_steps() {
    let m = parse_listing(LISTING).unwrap();
    let r = run(&m, 10_000_000_000);
    assert_eq!(r.outcome, Outcome::BudgetExhausted);
    assert_eq!(r.steps, 10_000_000_000);
}

/// Throughput floor: the acceptance-scale runs assume at least ten million
/// steps per second. Ignored by default because wall-clock assertions are
/// machine-dependent.
#[test]
#[ignore]
fn simulator_throughput_floor() {
    let m = parse_listing(LISTING).unwrap();
    let start = std::time::Instant::now();
    let steps = 200_000_000u64;
    let r = run(&m, steps);
    let secs = start.elapsed().as_secs_f64();
    assert_eq!(r.outcome, Outcome::BudgetExhausted);
    let rate = steps as f64 / secs;
    assert!(
        rate >= 1e7,
        "simulated only {rate:.0} steps/s; need at least 1e7"
    );
}
