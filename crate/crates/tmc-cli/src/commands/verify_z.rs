//! `tmc verify-z`: structural verification of a machine listing.
//!
//! Required checks: the listing parses, starts in state 0, and contains
//! exactly one transition to HALT. Informational rows report the state count
//! and halt location, noting when they match the vendored 7,910-state
//! reference machine. With `--budget N` the machine must additionally run N
//! steps without halting.

use crate::Format;
use std::path::Path;
use std::process::ExitCode;
use tmc::tm::{parse_listing, run, Outcome};

const REFERENCE_STATES: usize = 7910;
const REFERENCE_HALT_SOURCE: u32 = 7862;

pub fn execute(
    listing_path: &Path,
    budget: Option<u64>,
    format: Format,
) -> Result<ExitCode, String> {
    let text = super::read_text(listing_path)?;
    let machine = match parse_listing(&text) {
        Ok(m) => m,
        Err(e) => return Err(format!("parse check failed: {e}")),
    };

    let mut failures: Vec<String> = Vec::new();
    let mut rows: Vec<(String, String)> = Vec::new();

    rows.push(("parse".into(), "ok".into()));

    let start_ok = machine.start() == 0;
    rows.push((
        "start-state".into(),
        if start_ok { "0 (ok)".into() } else { format!("{} (expected 0)", machine.start()) },
    ));
    if !start_ok {
        failures.push("start-state".into());
    }

    let halts = machine.halt_transitions();
    let unique = halts.len() == 1;
    rows.push((
        "unique-halt".into(),
        if unique {
            format!("ok (from state {} on '{}')", halts[0].0, halts[0].1.ch())
        } else {
            format!("{} HALT transitions (expected exactly 1)", halts.len())
        },
    ));
    if !unique {
        failures.push("unique-halt".into());
    }

    let count = machine.state_count();
    rows.push((
        "state-count".into(),
        if count == REFERENCE_STATES {
            format!("{count} (matches the reference machine)")
        } else {
            format!("{count}")
        },
    ));
    if unique {
        let (src, _) = halts[0];
        if src == REFERENCE_HALT_SOURCE && count == REFERENCE_STATES {
            rows.push((
                "halt-source".into(),
                format!("{src} (matches the reference machine)"),
            ));
        } else {
            rows.push(("halt-source".into(), format!("{src}")));
        }
    }

    rows.push((
        "error-transitions".into(),
        format!("{}", machine.error_transitions().len()),
    ));

    if let Some(b) = budget {
        let result = run(&machine, b);
        let survived = result.outcome == Outcome::BudgetExhausted;
        rows.push((
            "bounded-run".into(),
            if survived {
                format!("no halt within {b} steps (ok)")
            } else {
                format!("halted after {} steps (expected no halt within {b})", result.steps)
            },
        ));
        if !survived {
            failures.push("bounded-run".into());
        }
    }

    match format {
        Format::Text => {
            for (name, value) in &rows {
                println!("{name}: {value}");
            }
            if failures.is_empty() {
                println!("result: all checks passed");
            } else {
                println!("result: FAILED ({})", failures.join(", "));
            }
        }
        Format::JsonLike => {
            let map: serde_json::Map<String, serde_json::Value> = rows
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                .collect();
            let summary = serde_json::json!({
                "checks": map,
                "passed": failures.is_empty(),
                "failures": failures,
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
        }
    }

    Ok(if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
