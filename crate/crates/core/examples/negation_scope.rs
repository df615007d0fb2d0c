// Contrasts tree-scoped negation with a flat proximity window.
//
// The review "no! es excelente!" splits into two sentences. The tree
// scorer keeps "no" inside the first one; the window baseline sees it three
// tokens before "excelente" and flips the polarity.
//
//     cargo run --example negation_scope

use std::error::Error;
use std::path::PathBuf;

use branchpol::{
    classify_threshold, load_lexicons, parse_conllu, score_proximity, score_review,
    AggregationMetric, Token,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples");
    let lexicons = load_lexicons(
        &dir.join("sentiment_es.tsv"),
        &dir.join("intensifiers_es.tsv"),
        &dir.join("negators_es.txt"),
    )?;
    let sentences = parse_conllu(&std::fs::read_to_string(
        dir.join("fixtures/no_es_excelente_scope.conllu"),
    )?)?;

    let review = score_review(&sentences, &lexicons, AggregationMetric::Extreme);
    let per_sentence: Vec<f64> = review.sentences.iter().map(|s| s.score).collect();
    println!(
        "tree scorer: sentences {per_sentence:?} -> {} (class {})",
        review.score, review.class
    );

    let flat: Vec<Token> = sentences
        .iter()
        .flat_map(|s| s.tokens().iter().cloned())
        .collect();
    for window in [1, 2, 3] {
        let score = score_proximity(&flat, &lexicons, window);
        println!(
            "window {window}: pos {:.2} neg {:.2} neu {:.2} compound {:+.3} -> {:?}",
            score.pos,
            score.neg,
            score.neu,
            score.compound,
            classify_threshold(&score, 0.7)
        );
    }

    if per_sentence != [0.0, 5.0] {
        return Err("negation leaked across the sentence boundary".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
