//! Property tests for the machine model: listing round-trips and budget
//! additivity over randomly generated machines.

use proptest::prelude::*;
use tmc::tm::{parse_listing, run, serialize_listing, Machine, Move, Simulation, Sym, Transition};

fn arb_transition(states: u32) -> impl Strategy<Value = Transition> {
    prop_oneof![
        8 => (0..states, any::<bool>(), any::<bool>()).prop_map(|(next, w, m)| {
            Transition::Step {
                next,
                write: if w { Sym::B } else { Sym::A },
                mv: if m { Move::R } else { Move::L },
            }
        }),
        1 => Just(Transition::Halt),
        1 => Just(Transition::Error),
    ]
}

fn arb_machine() -> impl Strategy<Value = Machine> {
    (1u32..40).prop_flat_map(|n| {
        proptest::collection::vec((arb_transition(n), arb_transition(n)), n as usize)
            .prop_map(|pairs| {
                Machine::new(pairs.into_iter().map(|(a, b)| [a, b]).collect()).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn listing_round_trip(m in arb_machine()) {
        let text = serialize_listing(&m);
        let back = parse_listing(&text).unwrap();
        prop_assert_eq!(m, back);
    }

    #[test]
    fn budget_additivity(m in arb_machine(), b1 in 0u64..1500, b2 in 0u64..1500) {
        let one_shot = run(&m, b1 + b2);
        let mut sim = Simulation::new(&m);
        sim.advance(b1);
        let outcome = sim.advance(b2);
        let split = sim.into_result(outcome);
        prop_assert_eq!(one_shot, split);
    }

    #[test]
    fn budget_monotonicity(m in arb_machine(), budget in 1u64..2000) {
        // A run that halts within a smaller budget reports the same halt at
        // any larger budget.
        let small = run(&m, budget);
        let large = run(&m, budget * 2);
        if matches!(small.outcome, tmc::tm::Outcome::Halted(_)) {
            prop_assert_eq!(small, large);
        } else {
            prop_assert!(large.steps >= small.steps);
        }
    }
}
