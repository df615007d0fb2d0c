// Aggregates five sentence scores with each metric and maps to a class.
//
//     cargo run --example review_metrics

use std::error::Error;

use branchpol::{aggregate, map_to_class, AggregationMetric};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let scores = [-1.0, 2.0, -1.0, 1.0, -4.0];
    println!("sentence scores: {scores:?}");

    let metrics = [
        AggregationMetric::Mean,
        AggregationMetric::weighted_last(2.0)?,
        AggregationMetric::weighted_last(4.0)?,
        AggregationMetric::Extreme,
    ];
    for metric in metrics {
        let value = aggregate(&scores, metric)?;
        println!(
            "{:<20} {:>8.4}  class {}",
            format!("{metric:?}"),
            value,
            map_to_class(value)
        );
    }

    // parsing from the CLI spelling
    let parsed: AggregationMetric = "extreme".parse()?;
    assert_eq!(aggregate(&scores, parsed)?, -4.0);
    assert!("median".parse::<AggregationMetric>().is_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
