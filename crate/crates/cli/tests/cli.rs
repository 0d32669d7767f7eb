use seqfact_cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("seqfact").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn seq_plain_and_json() {
    assert_eq!(call(&["seq", "f", "--length", "8"]), (EXIT_OK, "abaababa\n".into(), String::new()));
    let (code, out, _) = call(&["seq", "rs", "--length", "4"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "111(-1)\n"));
    let (_, out, _) = call(&["seq", "rs", "--length", "4", "--format", "json"]);
    assert_eq!(out, "{\"length\":4,\"letters\":[1,1,1,-1],\"sequence\":\"rs\"}\n");
    let (_, out, _) = call(&["seq", "t", "--length", "3", "--format", "json"]);
    assert_eq!(out, "{\"length\":3,\"letters\":[\"a\",\"b\",\"b\"],\"sequence\":\"t\"}\n");
}

#[test]
fn usage_errors() {
    let (code, _, err) = call(&["seq", "nosuch", "--length", "3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("nosuch"));
    let (code, _, err) = call(&["seq", "f", "--length", "x"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--length"));
    assert_eq!(call(&["val", "11", "--system", "fib"]).0, EXIT_USAGE);
    assert_eq!(call(&["rep", "3", "--system", "base1"]).0, EXIT_USAGE);
    assert_eq!(call(&["regex", "[0,1"]).0, EXIT_USAGE);
    assert_eq!(call(&["zfact"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn factorization_formats() {
    let (code, out, _) = call(&["zfact", "f", "--count", "2", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "m,start,length,word\n0,0,1,a\n1,1,1,b\n");
    let (_, out, _) = call(&["zfact", "f", "--count", "0", "--format", "json"]);
    assert_eq!(out, "{\"kind\":\"Z\",\"pairs\":[]}\n");
    let (_, out, _) = call(&["cfact", "mw", "--count", "5", "--format", "csv"]);
    assert_eq!(out, "m,start,length,word\n0,0,1,a\n1,1,1,a\n2,2,1,b\n3,3,3,aab\n4,6,2,bb\n");
    let (_, out, _) = call(&["cfact", "--word", "xyxxyx", "--format", "json"]);
    assert_eq!(
        out,
        "{\"kind\":\"C\",\"pairs\":[{\"length\":1,\"start\":0,\"word\":\"x\"},{\"length\":1,\"start\":1,\"word\":\"y\"},{\"length\":1,\"start\":2,\"word\":\"x\"},{\"length\":3,\"start\":3,\"word\":\"xyx\"}]}\n"
    );
    let (_, out, _) = call(&["zfact", "pf", "--count", "3"]);
    assert!(out.contains("1(-1)"));
}

#[test]
fn representations() {
    assert_eq!(call(&["rep", "0", "--system", "zeckendorf"]).1, "0\n");
    assert_eq!(call(&["rep", "4", "--system", "zeckendorf"]).1, "101\n");
    assert_eq!(call(&["rep", "5"]).1, "101\n");
    assert_eq!(call(&["rep", "5", "--system", "base3"]).1, "12\n");
    assert_eq!(call(&["val", "10100", "--system", "fib"]).1, "11\n");
    assert_eq!(call(&["val", "0", "--system", "fib"]).1, "0\n");
}

#[test]
fn regex_verb() {
    let fibz = "[0,0]*[0,1] | [0,0]*[1,1] | [0,0]*[1,1][0,0]([1,0][0,0])* | [0,0]*[1,1][0,0]([1,0][0,0])*[1,0]";
    let (code, out, _) = call(&["regex", fibz, "--system", "fib", "--max-len", "2"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "(0,1)\n(1,1)\n(2,2)\n"));
    assert_eq!(call(&["regex", fibz, "--accepts", "[0,1]"]).0, EXIT_OK);
    assert_eq!(call(&["regex", fibz, "--accepts", "[1,0]"]).0, EXIT_FAILED);
    let (code, out, _) = call(&["regex", fibz, "--check", "f", "--kind", "z", "--max-len", "10"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, out, _) = call(&["regex", "[0,0]*[0,1] | [0,1][0,1]", "--check", "t", "--max-len", "4"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("counterexample: (0,3)"));
}

#[test]
fn theorem_checks() {
    let (code, out, _) = call(&["check-theorem", "pd", "z", "--m-max", "20"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.ends_with("PASS\n"));
    let (code, out, _) = call(&["check-theorem", "mw", "c", "--m-max", "10"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("counterexample: (4,0)"));
    let (code, _, _) = call(&["check-theorem", "mw", "c", "--m-max", "10", "--errata"]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = call(&["check-theorem", "t", "c", "--m-max", "12", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["closed_form"]["rows"][6]["expected"], serde_json::json!([10, 3]));
}

#[test]
fn export_round_trips() {
    let (code, dot, _) = call(&["export-dfao", "t"]);
    assert_eq!(code, EXIT_OK);
    let d = seqfact::automata::Dfao::parse_dot(&dot).unwrap();
    assert_eq!(&d, seqfact::sequences::SequenceSpec::catalog(seqfact::sequences::SequenceId::ThueMorse).dfao());
    let (_, text, _) = call(&["export-dfao", "f", "--format", "text"]);
    assert!(seqfact::automata::Dfao::parse_text(&text).is_ok());
}

#[test]
fn deterministic_output() {
    let a = call(&["cfact", "rs", "--count", "30", "--format", "json"]);
    let b = call(&["cfact", "rs", "--count", "30", "--format", "json"]);
    assert_eq!(a, b);
}
