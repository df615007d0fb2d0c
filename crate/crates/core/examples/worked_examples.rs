// Scores the two canonical negation sentences and prints every branch.
//
//     cargo run --example worked_examples

use std::error::Error;
use std::path::PathBuf;

use branchpol::{load_lexicons, map_to_class, parse_conllu, score_sentence};

fn samples() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples")
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = samples();
    let lexicons = load_lexicons(
        &dir.join("sentiment_es.tsv"),
        &dir.join("intensifiers_es.tsv"),
        &dir.join("negators_es.txt"),
    )?;

    for (file, expected) in [
        ("no_es_excelente.conllu", 1.0),
        ("no_es_una_comida_muy_buena.conllu", -1.5),
    ] {
        let text = std::fs::read_to_string(dir.join("fixtures").join(file))?;
        let sentence = &parse_conllu(&text)?[0];
        let words: Vec<&str> = sentence.tokens().iter().map(|t| t.form.as_str()).collect();
        println!("{}", words.join(" "));

        let scored = score_sentence(sentence, &lexicons);
        for trace in &scored.traces {
            println!(
                "  head {:>2}: base {:>5} boost {:>5} negated {:<5} -> {}",
                trace.head_id, trace.base_score, trace.boost_sum, trace.negated, trace.result
            );
        }
        println!(
            "  score {} class {}",
            scored.score,
            map_to_class(scored.score)
        );
        if scored.score != expected {
            return Err(format!("{file}: expected {expected}, got {}", scored.score).into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
