// Evaluates the tree scorer and the proximity baseline on the bundled
// corpus, then prints the comparison table.
//
//     cargo run --example corpus_comparison
//     cargo run --example corpus_comparison -- path/to/manifest.csv

use std::error::Error;
use std::path::PathBuf;

use branchpol::eval::{predict_baseline, predict_ucr};
use branchpol::{compare_report, evaluate, load_dataset, load_lexicons, AggregationMetric};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples");
    let manifest = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .filter(|p| p.extension().is_some_and(|e| e == "csv"))
        .unwrap_or_else(|| dir.join("corpus/manifest.csv"));
    let lexicons = load_lexicons(
        &dir.join("sentiment_es.tsv"),
        &dir.join("intensifiers_es.tsv"),
        &dir.join("negators_es.txt"),
    )?;
    let dataset = load_dataset(&manifest)?;
    println!(
        "{} reviews, {} skipped",
        dataset.records.len(),
        dataset.skipped.len()
    );

    let mut reports = vec![evaluate("ucr-extreme", &dataset.records, |r| {
        predict_ucr(r, &lexicons, AggregationMetric::Extreme)
    })?];
    for tau in [0.7, 0.8, 1.0] {
        let name = format!("baseline-tau{tau:?}");
        reports.push(evaluate(&name, &dataset.records, |r| {
            predict_baseline(r, &lexicons, 3, tau)
        })?);
    }

    let ucr = &reports[0];
    println!("confusion (rows gold 1..5, columns predicted 1..5):");
    for row in ucr.confusion {
        println!("  {row:?}");
    }
    println!();
    print!("{}", compare_report(&reports));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
