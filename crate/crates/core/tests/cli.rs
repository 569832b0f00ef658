use serde::de::DeserializeOwned;
use serde::Serialize;

use sl2_cohom::cli::{
    run, DecomposeJson, E2PageJson, Ext1Json, H2Json, PartnersJson, TableRow, VerifyJson,
    WitnessesJson, EXIT_OK, EXIT_USAGE,
};

fn sl2coh(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sl2coh").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn stdout_ok(args: &[&str]) -> String {
    let (code, out, err) = sl2coh(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

/// Parses the single JSON document and checks that re-rendering it gives
/// the same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let out = stdout_ok(args);
    let doc = out.trim_end();
    assert_eq!(out.lines().count(), 1, "one document per invocation");
    let parsed: T = serde_json::from_str(doc).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), doc);
    parsed
}

#[test]
fn h2_text() {
    assert_eq!(
        stdout_ok(&["h2", "-p", "3", "-r", "40"]),
        "H2(SL2, L(40)) = K (dim 1), family 2p-2+(2p-2)p^e, e=2, twist 0\n"
    );
    assert_eq!(
        stdout_ok(&["h2", "-p", "3", "-r", "2"]),
        "H2(SL2, L(2)) = 0\n"
    );
    assert_eq!(
        stdout_ok(&["h2", "-p", "3", "-r", "18"]),
        "H2(SL2, L(18)) = K (dim 1), family 2p, twist 1\n"
    );
}

#[test]
fn h2_json() {
    let doc: H2Json = round_trip(&["h2", "-p", "3", "-r", "[1,1,0,1,1]@3", "--format", "json"]);
    assert_eq!(doc.r, "112");
    assert_eq!((doc.dim, doc.e, doc.twist), (1, Some(3), Some(0)));
    let doc: H2Json = round_trip(&["h2", "-p", "5", "-r", "5", "--format", "json"]);
    assert_eq!((doc.dim, doc.family), (0, None));
}

#[test]
fn h1_text_and_json() {
    assert_eq!(
        stdout_ok(&["h1", "-p", "3", "-r", "12"]),
        "H1(SL2, L(12)) = K (dim 1)\n"
    );
    assert_eq!(
        stdout_ok(&["h1", "-p", "3", "-r", "8"]),
        "H1(SL2, L(8)) = 0\n"
    );
    let out = stdout_ok(&["h1", "-p", "2", "-r", "2", "--format", "json"]);
    assert_eq!(out, "{\"p\":2,\"r\":\"2\",\"dim\":1}\n");
}

#[test]
fn ext1() {
    assert_eq!(
        stdout_ok(&["ext1", "-p", "5", "-r", "0", "-s", "8"]),
        "Ext1(L(0), L(8)) = K (dim 1), k = 0\n"
    );
    let doc: Ext1Json = round_trip(&[
        "ext1", "-p", "5", "-r", "42", "-s", "52", "--format", "json",
    ]);
    assert_eq!(
        doc,
        Ext1Json {
            dim: 1,
            witness_k: Some(1)
        }
    );
    let doc: Ext1Json = round_trip(&["ext1", "-p", "5", "-r", "7", "-s", "7", "--format", "json"]);
    assert_eq!(
        doc,
        Ext1Json {
            dim: 0,
            witness_k: None
        }
    );
}

#[test]
fn e2page_json() {
    let doc: E2PageJson = round_trip(&["e2page", "-p", "3", "-r", "6", "--format", "json"]);
    assert_eq!((doc.h1, doc.h2, doc.parity.as_str()), (0, 1, "even"));
    let nonzero: Vec<(u32, u32)> = doc
        .entries
        .iter()
        .filter(|e| e.dim > 0)
        .map(|e| (e.n, e.m))
        .collect();
    assert_eq!(nonzero, vec![(0, 2)]);

    let doc: E2PageJson = round_trip(&["e2page", "-p", "3", "-r", "10", "--format", "json"]);
    assert_eq!(doc.parity, "odd");
}

#[test]
fn e2page_text() {
    let out = stdout_ok(&["e2page", "-p", "3", "-r", "10"]);
    assert!(out.starts_with("E2 page for L(10) = L([1,0,1]@3) at p = 3\n"));
    assert!(out.ends_with("h1 = 0, h2 = 1, parity = odd\n"));
}

#[test]
fn characters() {
    assert_eq!(
        stdout_ok(&["char", "-p", "3", "-r", "1", "-s", "2"]),
        "{3:1, 1:2, -1:2, -3:1}\n"
    );
    assert_eq!(
        stdout_ok(&["decompose", "-p", "3", "-r", "1", "-s", "2"]),
        "L(3):1, L(1):2\n"
    );
    let doc: DecomposeJson = round_trip(&[
        "decompose",
        "-p",
        "2",
        "-r",
        "1",
        "-s",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(
        doc.factors,
        vec![("2".to_string(), 1), ("0".to_string(), 2)]
    );
    let out = stdout_ok(&["char", "-p", "3", "-r", "4", "--format", "json"]);
    assert_eq!(
        out,
        "{\"p\":3,\"dimension\":4,\"character\":[[4,1],[2,1],[-2,1],[-4,1]]}\n"
    );
}

#[test]
fn partners_and_witnesses() {
    assert_eq!(
        stdout_ok(&["partners", "-p", "3", "-s", "4", "--max", "4"]),
        "0 6 10 40\n"
    );
    let doc: PartnersJson = round_trip(&[
        "partners", "-p", "2", "-s", "4", "--max", "4", "--format", "json",
    ]);
    assert_eq!(doc.partners, vec!["0", "6"]);
    assert_eq!(stdout_ok(&["witnesses", "-p", "3", "-r", "40"]), "4 36\n");
    let doc: WitnessesJson = round_trip(&["witnesses", "-p", "2", "-r", "4", "--format", "json"]);
    assert!(doc.witnesses.is_empty());
}

#[test]
fn table_csv_and_json() {
    let out = stdout_ok(&["table", "-p", "3", "--max", "10", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p,weight,digits,h0,h1,h2,h2_family,h2_twist");
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[1], "3,0,[],1,0,0,,");
    assert_eq!(lines[5], "3,4,\"[1,1]\",0,1,0,,");
    assert_eq!(lines[7], "3,6,\"[0,2]\",0,0,1,2p,0");
    assert_eq!(lines[11], "3,10,\"[1,0,1]\",0,0,1,2p^2-2p-2,0");

    let rows: Vec<TableRow> = round_trip(&["table", "-p", "3", "--max", "10", "--format", "json"]);
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[6].h2_family.as_deref(), Some("2p"));
}

#[test]
fn verify() {
    assert_eq!(
        stdout_ok(&["verify", "-p", "2", "--max", "64"]),
        "checked 65 weights, 0 mismatches\n"
    );
    let doc: VerifyJson = round_trip(&[
        "verify", "-p", "3", "--max", "243", "--pairs", "81", "--format", "json",
    ]);
    assert!(doc.mismatches.is_empty());
    assert_eq!(doc.pairs_checked, 82 * 82);
    assert_eq!(
        doc.h2_positive,
        ["6", "10", "18", "30", "40", "54", "90", "112", "120", "162"]
    );
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let one = stdout_ok(&[
        "verify", "-p", "5", "--max", "3125", "--pairs", "125", "--jobs", "1", "--format", "json",
    ]);
    let four = stdout_ok(&[
        "verify", "-p", "5", "--max", "3125", "--pairs", "125", "--jobs", "4", "--format", "json",
    ]);
    assert_eq!(one, four);
}

#[test]
fn usage_errors() {
    for args in [
        &["h2", "-p", "4", "-r", "1"][..],
        &["h2", "-r", "1"],
        &["h2", "-p", "3", "-r", "-1"],
        &["h2", "-p", "3", "-r", "[3]"],
        &["h2", "-p", "3", "-r", "[1,2]@5"],
        &["h2", "-p", "3"],
        &["ext1", "-p", "3", "-r", "1"],
        &["partners", "-p", "3", "-s", "4", "--max", "1"],
        &["frobnicate", "-p", "3"],
    ] {
        let (code, out, err) = sl2coh(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = sl2coh(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}
