//! `tmc bb`: exhaustive search for the maximum halting step count among
//! all machines of a given size.

use crate::Format;
use std::path::Path;
use std::process::ExitCode;
use tmc::bb::{certify_bb, EnumerationTask, MAX_STATES};
use tmc::tm::serialize_listing;

pub fn execute(
    k: u32,
    budget: u64,
    out: Option<&Path>,
    format: Format,
) -> Result<ExitCode, String> {
    if !(1..=MAX_STATES).contains(&k) {
        return Err(format!("--k must be in 1..={MAX_STATES}, got {k}"));
    }
    if budget == 0 {
        return Err("--budget must be at least 1".into());
    }
    let result = certify_bb(&EnumerationTask::new(k, budget));
    let champion = serialize_listing(&result.champion);

    match format {
        Format::Text => {
            println!("states: {}", result.k);
            println!("budget: {}", result.step_budget);
            if result.is_certified() {
                println!("max-steps: {} (exact)", result.max_steps);
            } else {
                println!(
                    "max-steps: {} (lower bound; {} machines unresolved)",
                    result.max_steps, result.unresolved
                );
            }
            println!("enumerated: {}", result.enumerated);
            println!("halted: {}", result.halted);
            println!("nonhalting-proofs:");
            println!("  halt-unreachable: {}", result.halt_unreachable);
            println!("  exact-cycle: {}", result.exact_cycles);
            println!("  translated-cycle: {}", result.translated_cycles);
            println!("  backward-contradiction: {}", result.backward_contradictions);
            println!("  abstract-closure: {}", result.abstract_closures);
            println!("  automaton-closure: {}", result.automaton_closures);
            println!("unresolved: {}", result.unresolved);
            println!("champion:");
            print!("{champion}");
        }
        Format::JsonLike => {
            let summary = serde_json::json!({
                "states": result.k,
                "budget": result.step_budget,
                "max_steps": result.max_steps,
                "certified": result.is_certified(),
                "enumerated": result.enumerated,
                "halted": result.halted,
                "nonhalting_proofs": {
                    "halt_unreachable": result.halt_unreachable,
                    "exact_cycle": result.exact_cycles,
                    "translated_cycle": result.translated_cycles,
                    "backward_contradiction": result.backward_contradictions,
                    "abstract_closure": result.abstract_closures,
                    "automaton_closure": result.automaton_closures,
                },
                "unresolved": result.unresolved,
                "champion": champion.lines().collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
        }
    }

    if let Some(path) = out {
        std::fs::write(path, &champion)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}
