use assert_cmd::Command;
use grossnum::measure::{parse_set, Measure};
use grossnum::rank::{BitRank, ScoreVector};
use grossnum::{measure, GrossNumber};
use predicates::prelude::*;
use serde_json::Value;

fn grossnum() -> Command {
    let mut cmd = Command::cargo_bin("grossnum").unwrap();
    cmd.env_remove("GROSSNUM_MAX_DIV_TERMS");
    cmd
}

fn stdout_of(args: &[&str]) -> String {
    let out = grossnum().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout_of(&full)).unwrap()
}

/// Plain-mode output, byte for byte.
const GOLDEN: &[(&[&str], &str)] = &[
    (&["cmp", "2*G^2+1", "G^2+11*G+3"], ">\n"),
    (&["cmp", "G - 1", "G"], "<\n"),
    (&["cmp", "G/G", "1"], "=\n"),
    (&["eval", "3*G^2 - (G - 1)"], "3*G^2 - G + 1\n"),
    (&["eval", "0*G"], "0\n"),
    (&["eval", "G - G"], "0\n"),
    (&["eval", "G/G"], "1\n"),
    (&["eval", "G^0"], "1\n"),
    (&["eval", "1^G"], "1\n"),
    (&["eval", "0^G"], "0\n"),
    (&["eval", "-G/2 + 3/4"], "-1/2*G + 3/4\n"),
    (&["eval", "(G^2 - 1)/(G - 1)"], "G + 1\n"),
    (&["eval", "(4*G)^(1/2)"], "2*G^(1/2)\n"),
    (&["--unicode", "eval", "G^2 + G^(-1)"], "①^2 + ①^(-1)\n"),
    (&["measure", "num[1,2)@10"], "10^G\n"),
    (&["measure", "num[1,2)@2"], "2^G\n"),
    (&["measure", "num[1,2]@2"], "2^G + 1\n"),
    (&["measure", "N"], "G\n"),
    (&["measure", "N \\ {3,5,10,23,114}"], "G - 5\n"),
    (&["measure", "N(2,2)"], "1/2*G\n"),
    (&["measure", "Z"], "2*G + 1\n"),
    (&["measure", "Z \\ {0}"], "2*G\n"),
    (&["measure", "squares"], "floor(G^(1/2))\n"),
    (&["measure", "pairs"], "G^2\n"),
    (&["measure", "P(N)"], "2^G\n"),
    (&["measure-cmp", "num[1,2)@10", "num[1,2)@2"], ">\n"),
    (&["measure-cmp", "num[1,2]@2", "num[1,2)@2"], ">\n"),
    (&["measure-cmp", "N(1,2) | N(2,2)", "N"], "=\n"),
    (
        &["rank", "--method", "gross", "--scores", "2,0,1", "--label", "A", "--scores", "1,11,3", "--label", "B"],
        "1\tA\t2*G^2 + 1\n2\tB\tG^2 + 11*G + 3\n",
    ),
    (
        &["rank", "--method", "binary", "--scores", "2,0,1", "--label", "A", "--scores", "1,11,3", "--label", "B"],
        "1\tA\t0.11001\n2\tB\t0.10111111111110111\n",
    ),
    (
        &["rank", "--scores", "0,1", "--scores", "1,0", "--scores", "0,1"],
        "1\t1,0\tG\n2\t0,1\t1\n2\t0,1\t1\n",
    ),
];

#[test]
fn golden_plain_output() {
    for (args, expected) in GOLDEN {
        assert_eq!(&stdout_of(args), expected, "grossnum {}", args.join(" "));
    }
}

#[test]
fn syntax_error_reports_name_and_position() {
    grossnum()
        .args(["eval", "2*G^2 + + 1"])
        .assert()
        .code(1)
        .stdout("")
        .stderr(predicate::str::starts_with("error: SyntaxError at position 8:"));
}

#[test]
fn domain_errors_exit_with_one() {
    for (args, name) in [
        (&["eval", "1/0"][..], "DivisionByZero"),
        (&["eval", "0^(-1)"], "ZeroToNegativePower"),
        (&["eval", "G^G"], "NotRepresentable"),
        (&["eval", "1/(G+1)"], "InexactDivision"),
        (&["measure", "N \\ {0}"], "InvalidDescriptor"),
        (&["measure", "N("], "SyntaxError"),
        (&["rank", "--method", "binary", "--scores", "1/2,1"], "NonIntegerScore"),
        (&["rank", "--scores", "1,2", "--scores", "1"], "DimensionMismatch"),
    ] {
        grossnum()
            .args(args)
            .assert()
            .code(1)
            .stderr(predicate::str::contains(name));
    }
}

#[test]
fn json_errors_are_machine_readable() {
    let out = grossnum()
        .args(["--json", "eval", "(G"])
        .assert()
        .code(1)
        .get_output()
        .stderr
        .clone();
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["error"], "SyntaxError");
    assert_eq!(v["position"], 2);
}

#[test]
fn usage_errors_exit_with_two() {
    grossnum().assert().code(2);
    grossnum().arg("frobnicate").assert().code(2);
    grossnum().args(["cmp", "G"]).assert().code(2);
    grossnum().args(["rank", "--method", "decimal", "--scores", "1"]).assert().code(2);
    grossnum().arg("rank").assert().code(2);
    grossnum()
        .args(["rank", "--scores", "1,2", "--label", "A", "--label", "B"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--label"));
}

#[test]
fn help_and_version_succeed() {
    grossnum().arg("--help").assert().success();
    grossnum().arg("--version").assert().success();
}

#[test]
fn division_budget_from_environment() {
    grossnum()
        .env("GROSSNUM_MAX_DIV_TERMS", "3")
        .args(["eval", "1/(G+1)"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("quotient G^(-1) - G^(-2) + G^(-3) +"));
    grossnum()
        .env("GROSSNUM_MAX_DIV_TERMS", "zero")
        .args(["eval", "1"])
        .assert()
        .code(2);
    grossnum()
        .env("GROSSNUM_MAX_DIV_TERMS", "2")
        .args(["eval", "(G^2 - 1)/(G - 1)"])
        .assert()
        .success()
        .stdout("G + 1\n");
}

#[test]
fn eval_json_round_trips() {
    for expr in ["3*G^2 - (G - 1)", "0", "G^(1/2) - 7/3 + G^(-2)"] {
        let v = json_of(&["eval", expr]);
        let value: GrossNumber = serde_json::from_value(v["value"].clone()).unwrap();
        assert_eq!(value, grossnum::syntax::evaluate(expr).unwrap());
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms.len(), value.terms().len());
        let parts: Vec<GrossNumber> = ["infinite", "finite", "infinitesimal"]
            .iter()
            .map(|k| serde_json::from_value(v["parts"][k].clone()).unwrap())
            .collect();
        assert_eq!(&(&parts[0] + &parts[1]) + &parts[2], value);
        assert_eq!(v["class"], value.classify().to_string());
    }
}

#[test]
fn cmp_json_shape() {
    let v = json_of(&["cmp", "2*G^2+1", "G^2+11*G+3"]);
    assert_eq!(v["lhs"], "2*G^2 + 1");
    assert_eq!(v["rhs"], "G^2 + 11*G + 3");
    assert_eq!(v["ordering"], ">");
}

#[test]
fn measure_json_round_trips() {
    for set in ["N", "squares", "P(N)", "num[1,2]@2", "num[0,2)@10", "Q1", "N(3,5)"] {
        let v = json_of(&["measure", set]);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["form", "coeff", "base", "exponent", "offset", "floor"]);
        let m: Measure = serde_json::from_value(v).unwrap();
        assert_eq!(m, measure(&parse_set(set).unwrap()).unwrap(), "{set}");
    }
    let v = json_of(&["measure-cmp", "P(N)", "num[1,2)@10"]);
    assert_eq!(v["ordering"], "<");
    let _: Measure = serde_json::from_value(v["lhs"].clone()).unwrap();
}

#[test]
fn rank_json_round_trips() {
    let base = ["rank", "--scores", "2,0,1", "--label", "A", "--scores", "1,11,3", "--label", "B"];
    let v = json_of(&[&base[..], &["--method", "gross"]].concat());
    assert_eq!(v["method"], "gross");
    let board = v["leaderboard"].as_array().unwrap();
    assert_eq!(board[0]["label"], "A");
    assert_eq!(board[1]["label"], "B");
    let scores: ScoreVector = serde_json::from_value(board[1]["scores"].clone()).unwrap();
    assert_eq!(scores, ScoreVector::from_integers(&[1, 11, 3]).unwrap());
    let rank: GrossNumber = serde_json::from_value(board[0]["rank"].clone()).unwrap();
    assert_eq!(rank.to_string(), "2*G^2 + 1");

    let v = json_of(&[&base[..], &["--method", "binary"]].concat());
    let rank: BitRank = serde_json::from_value(v["leaderboard"][1]["rank"].clone()).unwrap();
    assert_eq!(rank.tallies(), [1, 11, 3]);
    assert_eq!(rank.bit_length(), 17);
}

#[test]
fn repl_matches_one_shot() {
    let verbs: &[&[&str]] = &[
        &["eval", "3*G^2 - (G - 1)"],
        &["cmp", "2*G^2+1", "G^2+11*G+3"],
        &["measure", "N \\ {3,5,10,23,114}"],
        &["measure-cmp", "Z", "N"],
        &["--json", "measure", "squares"],
        &["rank", "--scores", "2,0,1", "--label", "A", "--scores", "1,11,3", "--label", "B"],
        &["--unicode", "eval", "G^(1/2)"],
    ];
    let script: String = verbs
        .iter()
        .map(|args| shlex::try_join(args.iter().copied()).unwrap() + "\n")
        .collect();
    let expected: String = verbs.iter().map(|args| stdout_of(args)).collect();
    grossnum()
        .arg("repl")
        .write_stdin(script + "quit\neval 1\n")
        .assert()
        .success()
        .stdout(expected)
        .stderr("");
}

#[test]
fn repl_reports_errors_and_continues() {
    grossnum()
        .args(["--json", "repl"])
        .write_stdin("eval (G\nnonsense\n\n# comment\neval G+G\n")
        .assert()
        .success()
        .stdout(predicate::str::contains("\"value\":\"2*G\""))
        .stderr(predicate::str::contains("\"error\":\"SyntaxError\"").and(predicate::str::contains("\"Usage\"")));
}
