//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

mod common;

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use branchpol::cli::run;
use branchpol::{
    aggregate, intensify_then_negate, map_to_class, parse_conllu, score_proximity, score_review,
    score_sentence, serialize_conllu, AggregationMetric, Token,
};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn worked_example_one() -> Outcome {
    let sentence = &read_fixture("no_es_excelente.conllu")[0];
    let score = score_sentence(sentence, &sample_lexicons()).score;
    let class = map_to_class(score).value();
    // 5 * (1 + 0) - 4
    check(
        (score - 1.0).abs() < TOL && class == 3,
        format!("score {score}, class {class}"),
    )
}

fn worked_example_two() -> Outcome {
    let sentence = &read_fixture("no_es_una_comida_muy_buena.conllu")[0];
    let score = score_sentence(sentence, &sample_lexicons()).score;
    let class = map_to_class(score).value();
    // buena: 2 * 1.25 = 2.5; comida: 2.5 - 4
    check(
        (score + 1.5).abs() < TOL && class == 2,
        format!("score {score}, class {class}"),
    )
}

fn aggregation_example() -> Outcome {
    let scores = [-1.0, 2.0, -1.0, 1.0, -4.0];
    let mean = aggregate(&scores, AggregationMetric::Mean).map_err(|e| e.to_string())?;
    let extreme = aggregate(&scores, AggregationMetric::Extreme).map_err(|e| e.to_string())?;
    check(
        mean == -0.6 && extreme == -4.0,
        format!("mean {mean}, extreme {extreme}"),
    )
}

fn mapping_table() -> Outcome {
    let points = [-5.0, -3.0, -1.0, 1.0, 3.0, 5.0, -3.0001, 1.0001];
    let got: Vec<u8> = points.iter().map(|&s| map_to_class(s).value()).collect();
    check(got == [1, 1, 2, 3, 4, 5, 1, 4], format!("classes {got:?}"))
}

fn order_of_operations() -> Outcome {
    let fixed = intensify_then_negate(5.0, 0.25, true);
    if fixed != 2.25 {
        return Err(format!("intensify_then_negate(5, 0.25, true) = {fixed}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tried = 0;
    for _ in 0..10_000 {
        let a: f64 = rng.gen_range(-5.0..=5.0);
        let b: f64 = rng.gen_range(0.0..=1.0);
        if a == 0.0 || b == 0.0 {
            continue;
        }
        tried += 1;
        let reversed = (a - a.signum() * 4.0) * (1.0 + b);
        if intensify_then_negate(a, b, true) == reversed {
            return Err(format!("orders agree at a={a}, b={b}"));
        }
    }
    Ok(format!(
        "2.25 exact; {tried} random (a, b) pairs differ from the reversed order"
    ))
}

fn oracle_equivalence() -> Outcome {
    let lexicons = synthetic_lexicons();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..1000 {
        let (heads, roles) = random_tree(&mut rng, 8);
        let pipeline = score_sentence(&build_sentence(&heads, &roles), &lexicons).score;
        let oracle = naive_score(&heads, &roles);
        if pipeline != oracle {
            return Err(format!(
                "tree {i} heads {heads:?}: pipeline {pipeline}, oracle {oracle}"
            ));
        }
    }
    Ok("1000 random trees agree exactly".into())
}

fn scope_property() -> Outcome {
    let lexicons = sample_lexicons();
    let sentences = read_fixture("no_es_excelente_scope.conllu");
    let review = score_review(&sentences, &lexicons, AggregationMetric::Extreme);
    let ucr: Vec<f64> = review.sentences.iter().map(|s| s.score).collect();
    let flat: Vec<Token> = sentences
        .iter()
        .flat_map(|s| s.tokens().iter().cloned())
        .collect();
    let base = score_proximity(&flat, &lexicons, 3);
    check(
        ucr == [0.0, 5.0] && base.neg > base.pos && base.compound < 0.0,
        format!(
            "ucr {ucr:?}; baseline pos {:.3} neg {:.3} compound {:.3}",
            base.pos, base.neg, base.compound
        ),
    )
}

fn round_trip() -> Outcome {
    let mut count = 0;
    for dir in ["fixtures", "corpus"] {
        let entries = fs::read_dir(samples_dir().join(dir)).map_err(|e| e.to_string())?;
        for entry in entries {
            let path = entry.map_err(|e| e.to_string())?.path();
            if path.extension().is_none_or(|e| e != "conllu") {
                continue;
            }
            let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
            let first = parse_conllu(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            let again = parse_conllu(&serialize_conllu(&first)).map_err(|e| e.to_string())?;
            if first != again {
                return Err(format!("{} changed after a round trip", path.display()));
            }
            count += 1;
        }
    }
    check(count > 0, format!("{count} files"))
}

fn corpus_comparison() -> Outcome {
    let argv = [
        "branchpol".to_string(),
        "--lexicon-dir".into(),
        samples_dir().display().to_string(),
        "compare".into(),
        samples_dir()
            .join("corpus/manifest.csv")
            .display()
            .to_string(),
    ];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    let text = String::from_utf8_lossy(&out);
    let json = &text[text.find('[').ok_or("no JSON in output")?..];
    let reports: serde_json::Value = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let accuracy = |name: &str| {
        reports
            .as_array()
            .and_then(|a| a.iter().find(|r| r["system"] == name))
            .and_then(|r| r["accuracy"].as_f64())
    };
    let ucr = accuracy("ucr-extreme").ok_or("missing ucr-extreme")?;
    let mut detail = format!("ucr {ucr:.2}");
    let mut ok = ucr == 1.0;
    for tau in ["0.7", "0.8", "1.0"] {
        let base =
            accuracy(&format!("baseline-tau{tau}")).ok_or(format!("missing baseline-tau{tau}"))?;
        ok &= ucr > base;
        detail.push_str(&format!(", tau {tau} {base:.2}"));
    }
    check(ok, detail)
}

fn main() -> ExitCode {
    let started = Instant::now();
    let criteria: [Criterion; 9] = [
        ("worked example: no es excelente", worked_example_one),
        (
            "worked example: no es una comida muy buena",
            worked_example_two,
        ),
        ("aggregation example", aggregation_example),
        ("class mapping boundaries", mapping_table),
        ("intensify before negate", order_of_operations),
        ("pipeline matches recursive oracle", oracle_equivalence),
        ("negation scope vs proximity window", scope_property),
        ("CoNLL-U round trip", round_trip),
        ("corpus comparison", corpus_comparison),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    let elapsed = started.elapsed();
    let in_time = elapsed.as_secs_f64() < 30.0;
    if !in_time {
        failed += 1;
    }
    println!(
        "{}  runtime: {:.3}s",
        if in_time { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    println!(
        "{} of {} criteria passed",
        criteria.len() + 1 - failed,
        criteria.len() + 1
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
