//! Parsing and validation of register-program directories.

use tmc::tmd::{parse_tmd_dir, read_tmd_dir_files, Command, TapeSym};

fn files(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs
        .iter()
        .map(|(n, c)| (n.to_string(), c.to_string()))
        .collect()
}

/// Smallest complete program: one function, one register, immediate return.
fn trivial(body: &str) -> Vec<(String, String)> {
    files(&[
        ("functions", "main\n"),
        ("initvar", "E\n"),
        ("main.tmd", &format!("input x\n{body}\n")),
    ])
}

fn err_of(pairs: Vec<(String, String)>) -> String {
    parse_tmd_dir(&pairs).expect_err("program should be rejected").to_string()
}

#[test]
fn example_directory_parses() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("assets/tmd-example");
    let blobs = read_tmd_dir_files(&dir).expect("example directory is readable");
    let p = parse_tmd_dir(&blobs).expect("example directory parses");

    // The first name in the functions file is the entry point.
    assert_eq!(p.entry_fn().name, "f");
    assert_eq!(p.entry_fn().params, ["a", "b", "c"]);
    assert_eq!(p.register_count(), 3);
    // One initvar line is applied to every register.
    assert_eq!(p.initvar.len(), 3);
    for row in &p.initvar {
        assert_eq!(row.iter().map(|d| d.ch()).collect::<String>(), "E");
    }
    assert_eq!(p.functions.len(), 2);
    assert_eq!(p.functions[1].name, "g");
    assert_eq!(p.functions[1].params, ["x"]);

    // f's body: call g, explicit command on b, recursive call, labeled return.
    assert_eq!(p.functions[0].body.len(), 4);
    assert!(matches!(
        p.functions[0].body[0],
        Command::Call { callee: 1, ref args } if args == &[0]
    ));
    match &p.functions[0].body[1] {
        Command::Explicit { var, reactions } => {
            assert_eq!(*var, 1);
            assert!(reactions[TapeSym::Blank.idx()].is_none());
            let on_one = reactions[TapeSym::One.idx()].expect("reaction for 1");
            assert_eq!(on_one.jump, Some(3));
            assert_eq!(on_one.write, None);
            let on_e = reactions[TapeSym::E.idx()].expect("reaction for E");
            assert_eq!(on_e, Default::default());
        }
        other => panic!("expected explicit command, got {other:?}"),
    }
    assert!(matches!(
        p.functions[0].body[2],
        Command::Call { callee: 0, ref args } if args == &[1, 2, 0]
    ));
    assert!(matches!(p.functions[0].body[3], Command::Return));
}

#[test]
fn tfn_extension_is_accepted() {
    let p = parse_tmd_dir(&files(&[
        ("functions", "main\nhelper\n"),
        ("initvar", "1E\n"),
        ("main.tmd", "input x\nfunction helper x\nreturn\n"),
        ("helper.tfn", "input y\nreturn\n"),
    ]))
    .expect("mixed extensions parse");
    assert_eq!(p.functions[1].name, "helper");
}

#[test]
fn missing_function_file_is_an_error() {
    let e = err_of(files(&[
        ("functions", "main\nghost\n"),
        ("initvar", "E\n"),
        ("main.tmd", "input x\nreturn\n"),
    ]));
    assert!(e.contains("ghost"), "unhelpful error: {e}");
}

#[test]
fn missing_manifest_files_are_errors() {
    let e = err_of(files(&[("initvar", "E\n"), ("main.tmd", "input x\nreturn\n")]));
    assert!(e.contains("functions"), "unhelpful error: {e}");
    let e = err_of(files(&[("functions", "main\n"), ("main.tmd", "input x\nreturn\n")]));
    assert!(e.contains("initvar"), "unhelpful error: {e}");
}

#[test]
fn duplicate_function_name_is_an_error() {
    let e = err_of(files(&[
        ("functions", "main\nmain\n"),
        ("initvar", "E\n"),
        ("main.tmd", "input x\nreturn\n"),
    ]));
    assert!(e.contains("main"), "unhelpful error: {e}");
}

#[test]
fn initvar_count_must_match_or_be_one() {
    // One line for three registers: fine (checked in example test). Two for
    // three: rejected.
    let e = err_of(files(&[
        ("functions", "main\n"),
        ("initvar", "E\n1\n"),
        ("main.tmd", "input x y z\nreturn\n"),
    ]));
    assert!(e.contains("3 register"), "unhelpful error: {e}");

    let e = err_of(files(&[
        ("functions", "main\n"),
        ("initvar", "E\nQ\n"),
        ("main.tmd", "input x y\nreturn\n"),
    ]));
    assert!(e.contains('Q'), "unhelpful error: {e}");

    let e = err_of(files(&[
        ("functions", "main\n"),
        ("initvar", "",),
        ("main.tmd", "input x\nreturn\n"),
    ]));
    assert!(e.contains("initvar"), "unhelpful error: {e}");
}

#[test]
fn entry_function_needs_a_parameter() {
    let e = err_of(files(&[
        ("functions", "main\n"),
        ("initvar", "E\n"),
        ("main.tmd", "input\nreturn\n"),
    ]));
    assert!(e.contains("parameter"), "unhelpful error: {e}");
}

#[test]
fn name_resolution_errors() {
    let cases: &[(&str, &str)] = &[
        ("function nowhere x", "nowhere"),        // unknown callee
        ("[y] 1 ()", "y"),                        // undeclared variable
        ("[x] 1 (); 1 ()", "two reactions"),      // duplicate read symbol
        ("[x] 1 (1, E)", "two writes"),           // two writes in one reaction
        ("[x] 1 (L, R)", "two moves"),            // two moves in one reaction
        ("[x] 1 (NOPE)", "NOPE"),                 // unknown label
        ("[x] 1 (?)", "?"),                       // unparseable action token
    ];
    for (line, needle) in cases {
        let e = err_of(trivial(&format!("{line}\nreturn")));
        assert!(e.contains(needle), "error for {line:?} should mention {needle:?}: {e}");
    }
}

#[test]
fn call_arity_is_checked() {
    let e = err_of(files(&[
        ("functions", "main\nhelper\n"),
        ("initvar", "E\n"),
        ("main.tmd", "input x\nfunction helper x x\nreturn\n"),
        ("helper.tmd", "input y\nreturn\n"),
    ]));
    assert!(e.contains("argument"), "unhelpful error: {e}");
}

#[test]
fn duplicate_parameter_is_an_error() {
    let e = err_of(files(&[
        ("functions", "main\n"),
        ("initvar", "E\n"),
        ("main.tmd", "input x x\nreturn\n"),
    ]));
    assert!(e.contains('x'), "unhelpful error: {e}");
}

#[test]
fn label_rules() {
    let e = err_of(trivial("here: [x] 1 (here)\nhere: return"));
    assert!(e.contains("duplicate label"), "unhelpful error: {e}");

    for reserved in ["L", "R", "E"] {
        let e = err_of(trivial(&format!("{reserved}: return")));
        assert!(
            e.contains("action token"),
            "label {reserved:?} should be rejected: {e}"
        );
    }
}

#[test]
fn jumps_may_point_backward_and_forward() {
    let p = parse_tmd_dir(&trivial(
        "back: [x] 1 (ahead); E (back); _ ()\nahead: return",
    ))
    .expect("loops are legal at parse time");
    match &p.functions[0].body[0] {
        Command::Explicit { reactions, .. } => {
            assert_eq!(reactions[TapeSym::One.idx()].unwrap().jump, Some(1));
            assert_eq!(reactions[TapeSym::E.idx()].unwrap().jump, Some(0));
        }
        other => panic!("expected explicit command, got {other:?}"),
    }
}

#[test]
fn comments_and_spacing_are_ignored() {
    let p = parse_tmd_dir(&trivial(
        "// leading comment\n  [x]   1  ( 1 ,R )  ;E(L)   // trailing\n\nreturn",
    ))
    .expect("comments and loose spacing parse");
    match &p.functions[0].body[0] {
        Command::Explicit { reactions, .. } => {
            let one = reactions[TapeSym::One.idx()].unwrap();
            assert_eq!(one.write, Some(TapeSym::One));
            assert!(one.mv.is_some());
        }
        other => panic!("expected explicit command, got {other:?}"),
    }
}
