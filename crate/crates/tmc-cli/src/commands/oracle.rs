//! `tmc oracle`: native exact checkers for the conjectures the toolchain's
//! sample programs encode. These run directly on the host (no Turing
//! machines involved) and serve as the reference answers the machine runs
//! are compared against.

use crate::Format;
use std::process::ExitCode;
use tmc::conjectures::{
    check_certified_u64, delta_u64, goldbach_sweep, goldbach_witness, lagarias_row,
    search_one_triple, OrderGraph, PrefixRule, Rat, SearchVerdict, Sieve, ToySearch, Vertex,
};

/// Checks that every even number in `4..=max` is a sum of two primes and
/// reports sample decompositions. Exit 1 if a counterexample exists.
pub fn goldbach(max: u64, format: Format) -> Result<ExitCode, String> {
    if max < 4 {
        return Err("--max must be at least 4 (the first even number with a decomposition)".into());
    }
    let sieve = Sieve::new(max);
    let counterexample = goldbach_sweep(max, &sieve);

    // Sample witnesses: the small numbers the machine traces print, plus
    // round numbers up to max, plus the last even number itself.
    let mut samples: Vec<u64> = (4..=12.min(max)).step_by(2).collect();
    let mut p = 100u64;
    while p <= max {
        samples.push(p);
        p = p.saturating_mul(10);
    }
    let last_even = max & !1;
    if last_even >= 4 && !samples.contains(&last_even) {
        samples.push(last_even);
    }
    let witnesses: Vec<(u64, Option<(u64, u64)>)> = samples
        .iter()
        .map(|&e| (e, goldbach_witness(e, &sieve)))
        .collect();

    match format {
        Format::Text => {
            println!("checked: every even number in 4..={max}");
            for (e, w) in &witnesses {
                match w {
                    Some((p, q)) => println!("witness: {e} = {p} + {q}"),
                    None => println!("witness: {e} has NO decomposition"),
                }
            }
            match counterexample {
                None => println!("result: no counterexample"),
                Some(e) => println!("result: COUNTEREXAMPLE at {e}"),
            }
        }
        Format::JsonLike => {
            let witness_rows: Vec<serde_json::Value> = witnesses
                .iter()
                .map(|(e, w)| {
                    serde_json::json!({
                        "even": e,
                        "witness": w.map(|(p, q)| vec![p, q]),
                    })
                })
                .collect();
            let summary = serde_json::json!({
                "max": max,
                "counterexample": counterexample,
                "witnesses": witness_rows,
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
        }
    }
    Ok(if counterexample.is_none() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Checks the Lagarias inequality `l(n) < r(n)` for every `n` in `1..=max`,
/// exactly. Exit 1 if any trial fails.
pub fn lagarias(max: u64, format: Format) -> Result<ExitCode, String> {
    if max < 1 {
        return Err("--max must be at least 1".into());
    }
    if max > 9 {
        return Err(format!(
            "--max {max} is out of reach: delta(10) is about 4.6e14, and the \
             certified route sums one term per unit of delta(n); the largest \
             supported trial is n = 9"
        ));
    }

    struct Row {
        n: u64,
        delta: u64,
        route: &'static str,
        holds: bool,
        sides: Option<(String, String)>,
    }

    let mut rows = Vec::new();
    for n in 1..=max {
        let m = delta_u64(n).expect("delta fits in u64 for n <= 9");
        let row = if m <= 20_000 {
            let r = lagarias_row(n);
            // Print the two sides verbatim while they are readable, by
            // magnitude once the factorials take over.
            let sides = if r.l4.bits() <= 128 {
                (r.l4.to_string(), r.r4.to_string())
            } else {
                (
                    format!("~10^{}", r.l4.to_str_radix(10).len() - 1),
                    format!("~10^{}", r.r4.to_str_radix(10).len() - 1),
                )
            };
            Row {
                n,
                delta: m,
                route: "literal",
                holds: r.holds(),
                sides: Some(sides),
            }
        } else {
            if n == 9 && format == Format::Text {
                println!("note: n=9 sums {m} harmonic terms; this takes a few minutes");
            }
            let holds = check_certified_u64(n)
                .ok_or_else(|| format!("harmonic enclosure too coarse to decide n = {n}"))?;
            Row {
                n,
                delta: m,
                route: "certified",
                holds,
                sides: None,
            }
        };
        if format == Format::Text {
            let verdict = if row.holds { "holds" } else { "FAILS" };
            match &row.sides {
                Some((l, r)) => println!(
                    "n={}: delta={}, {} route, {verdict} (4l = {l} < 4r = {r})",
                    row.n, row.delta, row.route
                ),
                None => println!(
                    "n={}: delta={}, {} route, {verdict}",
                    row.n, row.delta, row.route
                ),
            }
        }
        rows.push(row);
    }

    let all_hold = rows.iter().all(|r| r.holds);
    match format {
        Format::Text => {
            if all_hold {
                println!("result: l(n) < r(n) for every n in 1..={max}");
            } else {
                println!("result: FAILED");
            }
        }
        Format::JsonLike => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r.n,
                        "delta": r.delta,
                        "route": r.route,
                        "holds": r.holds,
                    })
                })
                .collect();
            let summary = serde_json::json!({
                "max": max,
                "trials": json_rows,
                "all_hold": all_hold,
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
        }
    }
    Ok(if all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Demonstrates the order-invariant-graph predicates on small worked
/// examples: an invariant graph over six two-element vertices, and two toy
/// graph searches (one with a vacuous prefix schedule, one whose schedule
/// forces real edges).
pub fn friedman_demo(format: Format) -> Result<ExitCode, String> {
    // Part 1: the interleaving graph on two-element subsets of {1,2,3,4}.
    // Edge iff a1 < b1 < a2 < b2 in either orientation — a relation defined
    // purely by order comparisons, hence order invariant.
    let pairs = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)];
    let vertices: Vec<Vertex> = pairs
        .iter()
        .map(|&(a, b)| Vertex::from_set([Rat::integer(a), Rat::integer(b)]))
        .collect();
    let graph = OrderGraph::from_predicate(vertices, |a, b| {
        a.len() == 2
            && b.len() == 2
            && a.elements()[0] < b.elements()[0]
            && b.elements()[0] < a.elements()[1]
            && a.elements()[1] < b.elements()[1]
    });
    let mut edges = Vec::new();
    for i in 0..graph.vertices().len() {
        for j in i + 1..graph.vertices().len() {
            if graph.edge(i, j) {
                edges.push((i, j));
            }
        }
    }
    let invariant = graph.check_order_invariance();

    // Part 2: the toy search with the statement's own factorial prefix
    // schedule (vacuous at this scale — the edgeless graph is valid).
    let vacuous = ToySearch {
        k: 1,
        n: 1,
        r: 1,
        complexity_bound: 1,
        prefix_rule: PrefixRule::Factorial,
        max_graphs: 1 << 16,
    };
    let vacuous_verdict = search_one_triple(&vacuous);

    // Part 3: the same triple under a linear schedule, which forces the
    // reduction clause to bite and the found graph to carry edges.
    let linear = ToySearch {
        prefix_rule: PrefixRule::Linear,
        ..vacuous.clone()
    };
    let linear_verdict = search_one_triple(&linear);

    let describe = |v: &SearchVerdict| -> (String, Option<usize>) {
        match v {
            SearchVerdict::ValidFound { graphs_tried, edges } => {
                let count = edges.iter().filter(|&&e| e).count() / 2;
                (format!("valid graph on try {graphs_tried}"), Some(count))
            }
            SearchVerdict::NoneValid { graphs_tried } => {
                (format!("no valid graph in {graphs_tried} tries"), None)
            }
            SearchVerdict::BudgetOut { graphs_tried } => {
                (format!("budget out after {graphs_tried} tries"), None)
            }
        }
    };
    let (vacuous_desc, vacuous_edges) = describe(&vacuous_verdict);
    let (linear_desc, linear_edges) = describe(&linear_verdict);

    match format {
        Format::Text => {
            println!("interleaving graph on {{1,2,3,4}} pairs:");
            for (i, v) in graph.vertices().iter().enumerate() {
                println!("  vertex {i}: {v}");
            }
            for (i, j) in &edges {
                println!("  edge: {} -- {}", graph.vertices()[*i], graph.vertices()[*j]);
            }
            println!("  order invariant: {invariant}");
            println!("toy search (k=1, n=1, r=1, complexity<=1):");
            println!(
                "  factorial prefix schedule: {vacuous_desc}{}",
                match vacuous_edges {
                    Some(c) => format!(", {c} edges"),
                    None => String::new(),
                }
            );
            println!(
                "  linear prefix schedule:    {linear_desc}{}",
                match linear_edges {
                    Some(c) => format!(", {c} edges"),
                    None => String::new(),
                }
            );
        }
        Format::JsonLike => {
            let summary = serde_json::json!({
                "interleaving_graph": {
                    "vertices": graph.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "edges": edges,
                    "order_invariant": invariant,
                },
                "toy_search": {
                    "factorial_schedule": { "outcome": vacuous_desc, "edge_count": vacuous_edges },
                    "linear_schedule": { "outcome": linear_desc, "edge_count": linear_edges },
                },
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}
