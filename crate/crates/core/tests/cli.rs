mod common;

use std::fs;

use branchpol::cli::run;
use common::samples_dir;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let dir = samples_dir();
    let mut argv = vec![
        "branchpol".to_string(),
        "--lexicon-dir".to_string(),
        dir.display().to_string(),
    ];
    argv.extend(args.iter().map(|a| a.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn sample(rel: &str) -> String {
    samples_dir().join(rel).display().to_string()
}

#[test]
fn score_prints_sentence_review_and_class() {
    let (code, out, _) = invoke(&["score", &sample("fixtures/no_es_excelente.conllu")]);
    assert_eq!(code, 0);
    assert_eq!(out, "sentence 1: 1.0\nreview: 1.0 (extreme)\nclass: 3\n");
}

#[test]
fn explain_emits_trace_json() {
    let (code, out, _) = invoke(&[
        "score",
        "--explain",
        &sample("fixtures/no_es_una_comida_muy_buena.conllu"),
    ]);
    assert_eq!(code, 0);
    let json_line = out.lines().find(|l| l.starts_with('{')).unwrap();
    let value: serde_json::Value = serde_json::from_str(json_line).unwrap();
    let traces = value["traces"].as_array().unwrap();
    let comida = traces.iter().find(|t| t["head_id"] == 4).unwrap();
    assert_eq!(comida["negated"], true);
    assert_eq!(comida["result"], -1.5);
    assert!(json_line.contains(r#""head_id":4,"base_score":2.5,"boost_sum":0.0,"negated":true"#));
}

#[test]
fn score_with_mean_metric() {
    let (code, out, _) = invoke(&[
        "score",
        "--metric",
        "mean",
        &sample("fixtures/no_es_excelente_scope.conllu"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("sentence 1: 0.0\nsentence 2: 5.0\n"));
    assert!(out.contains("review: 2.5 (mean)"));
    assert!(out.ends_with("class: 4\n"));
}

#[test]
fn missing_lexicon_exits_three() {
    let (code, _, err) = invoke(&[
        "score",
        "--sentiment-lex",
        "/no/such/sentiment.tsv",
        &sample("fixtures/no_es_excelente.conllu"),
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("/no/such/sentiment.tsv"));
}

#[test]
fn invalid_conllu_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.conllu");
    fs::write(&path, "1\ta\ta\tX\t_\t_\t1\tdep\t_\t_\n").unwrap();
    let (code, _, err) = invoke(&["score", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("token 1"));

    let (code, _, _) = invoke(&["score", "/no/such/input.conllu"]);
    assert_eq!(code, 2);
}

#[test]
fn evaluate_synthetic_corpus() {
    let (code, out, _) = invoke(&["evaluate", &sample("corpus/manifest.csv")]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().starts_with("ucr-extreme"));
    assert!(out.lines().nth(1).unwrap().ends_with("1.0000"));
}

#[test]
fn evaluate_binary_subset() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let (code, _, _) = invoke(&[
        "evaluate",
        "--binary",
        "--out",
        json.to_str().unwrap(),
        &sample("corpus/manifest.csv"),
    ]);
    assert_eq!(code, 0);
    let text = fs::read_to_string(&json).unwrap();
    let start = text.find('[').unwrap();
    let reports: serde_json::Value = serde_json::from_str(&text[start..]).unwrap();
    let support = &reports[0]["support"];
    assert_eq!(support, &serde_json::json!([5, 0, 0, 0, 7]));
    assert_eq!(reports[0]["accuracy"], 1.0);
}

#[test]
fn evaluate_empty_manifest_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.csv");
    fs::write(
        &path,
        "review_id,title_conllu_path,body_conllu_path,polarity\n",
    )
    .unwrap();
    let (code, _, err) = invoke(&["evaluate", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("empty"));
}

#[test]
fn compare_renders_four_rows_with_ucr_first() {
    let (code, out, _) = invoke(&["compare", &sample("corpus/manifest.csv")]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).take_while(|l| !l.is_empty()).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("ucr-extreme"));
}

#[test]
fn compare_with_single_tau() {
    let (code, out, _) = invoke(&[
        "compare",
        "--baseline-tau",
        "0.7",
        &sample("corpus/manifest.csv"),
    ]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).take_while(|l| !l.is_empty()).collect();
    assert_eq!(rows.len(), 2);

    let (code, _, err) = invoke(&[
        "compare",
        "--baseline-tau",
        "0.5",
        &sample("corpus/manifest.csv"),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("0.5"));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let args = ["compare", &sample("corpus/manifest.csv")];
    assert_eq!(invoke(&args).1, invoke(&args).1);
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    fs::write(&config, "metric = \"weighted-last\"\nlast_weight = 3.0\n").unwrap();
    let input = sample("fixtures/no_es_excelente_scope.conllu");
    let (code, out, _) = invoke(&["score", "--config", config.to_str().unwrap(), &input]);
    assert_eq!(code, 0);
    // (0 + 3 * 5) / (1 + 3)
    assert!(out.contains("review: 3.75 (weighted-last)"));

    let (_, out, _) = invoke(&[
        "score",
        "--config",
        config.to_str().unwrap(),
        "--metric",
        "extreme",
        &input,
    ]);
    assert!(out.contains("review: 5.0 (extreme)"));

    fs::write(&config, "colour = \"red\"\n").unwrap();
    let (code, _, _) = invoke(&["score", "--config", config.to_str().unwrap(), &input]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = invoke(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = invoke(&[
        "score",
        "--metric",
        "median",
        &sample("fixtures/no_es_excelente.conllu"),
    ]);
    assert_eq!(code, 2);
}
