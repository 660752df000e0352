//! `tmc run`: simulate a listing and summarize the outcome.

use crate::Format;
use std::path::Path;
use std::process::ExitCode;
use tmc::tm::{parse_listing, run, HaltFlavor, Outcome, Tape};

pub fn execute(machine_path: &Path, budget: u64, format: Format) -> Result<ExitCode, String> {
    let text = super::read_text(machine_path)?;
    let machine = parse_listing(&text).map_err(|e| e.to_string())?;
    let result = run(&machine, budget);

    let outcome = match result.outcome {
        Outcome::Halted(HaltFlavor::Halt) => "halted",
        Outcome::Halted(HaltFlavor::Error) => "halted-error",
        Outcome::BudgetExhausted => "budget-exhausted",
    };

    match format {
        Format::Text => {
            println!("outcome: {outcome}");
            println!("steps: {}", result.steps);
            print_tape_summary(&result.tape);
        }
        Format::JsonLike => {
            let summary = serde_json::json!({
                "outcome": outcome,
                "steps": result.steps,
                "states": machine.state_count(),
                "tape": tape_json(&result.tape),
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_tape_summary(tape: &Tape) {
    match tape.nonblank_range() {
        None => println!("tape: all blank"),
        Some((lo, hi)) => {
            println!("tape: non-blank span [{lo}, {hi}), {} b-cells", tape.count_b());
            println!("tape-rle: {}", run_length(tape, lo, hi, 64));
        }
    }
    println!("head: {}", tape.head());
}

fn tape_json(tape: &Tape) -> serde_json::Value {
    match tape.nonblank_range() {
        None => serde_json::json!({ "blank": true, "head": tape.head() }),
        Some((lo, hi)) => serde_json::json!({
            "span": [lo, hi],
            "b_cells": tape.count_b(),
            "rle": run_length(tape, lo, hi, 64),
            "head": tape.head(),
        }),
    }
}

/// Run-length rendering of `[lo, hi)`, truncated to at most `max_runs` runs.
pub fn run_length(tape: &Tape, lo: i64, hi: i64, max_runs: usize) -> String {
    let mut out = String::new();
    let mut runs = 0;
    let mut pos = lo;
    while pos < hi {
        let sym = tape.read(pos);
        let mut end = pos + 1;
        while end < hi && tape.read(end) == sym {
            end += 1;
        }
        if runs == max_runs {
            out.push('…');
            break;
        }
        let len = end - pos;
        if len == 1 {
            out.push(sym.ch());
        } else {
            out.push_str(&format!("{}{}", sym.ch(), len));
        }
        runs += 1;
        pos = end;
    }
    out
}
