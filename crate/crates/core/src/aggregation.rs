//! Review-level combination of sentence scores and the 1–5 class scale.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conllu::Sentence;
use crate::lexicon::LexiconSet;
use crate::scorer::{score_sentence, SentenceScore};

pub const DEFAULT_LAST_WEIGHT: f64 = 2.0;

#[derive(Debug, Error, PartialEq)]
pub enum AggregationError {
    #[error("cannot aggregate an empty list of scores")]
    EmptyInput,
    #[error("both title and body are empty")]
    BothEmpty,
    #[error("last-sentence weight must be finite and positive, got {0}")]
    InvalidWeight(f64),
    #[error("unknown metric {0:?} (expected mean, weighted-last or extreme)")]
    UnknownMetric(String),
}

/// How sentence scores become one review score.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub enum AggregationMetric {
    Mean,
    /// Weighted mean where the last sentence counts `weight` times.
    WeightedLast(f64),
    /// The score with the largest magnitude; later sentences win ties.
    #[default]
    Extreme,
}

impl AggregationMetric {
    pub fn weighted_last(weight: f64) -> Result<Self, AggregationError> {
        if weight.is_finite() && weight > 0.0 {
            Ok(AggregationMetric::WeightedLast(weight))
        } else {
            Err(AggregationError::InvalidWeight(weight))
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AggregationMetric::Mean => "mean",
            AggregationMetric::WeightedLast(_) => "weighted-last",
            AggregationMetric::Extreme => "extreme",
        }
    }
}

impl fmt::Display for AggregationMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AggregationMetric {
    type Err = AggregationError;

    /// `weighted-last` parses with the default weight.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mean" => Ok(AggregationMetric::Mean),
            "weighted-last" => Ok(AggregationMetric::WeightedLast(DEFAULT_LAST_WEIGHT)),
            "extreme" => Ok(AggregationMetric::Extreme),
            other => Err(AggregationError::UnknownMetric(other.to_string())),
        }
    }
}

pub fn aggregate(scores: &[f64], metric: AggregationMetric) -> Result<f64, AggregationError> {
    let (&last, init) = scores.split_last().ok_or(AggregationError::EmptyInput)?;
    let value = match metric {
        AggregationMetric::Mean => scores.iter().sum::<f64>() / scores.len() as f64,
        AggregationMetric::WeightedLast(weight) => {
            let head = init.iter().fold(0.0, |acc, v| acc + v);
            (head + weight * last) / (init.len() as f64 + weight)
        }
        AggregationMetric::Extreme => {
            scores.iter().copied().fold(
                scores[0],
                |best, s| if s.abs() >= best.abs() { s } else { best },
            )
        }
    };
    Ok(value)
}

/// Ordinal polarity label, 1 (most negative) through 5 (most positive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct PolarityClass(u8);

impl PolarityClass {
    pub const ALL: [PolarityClass; 5] = [
        PolarityClass(1),
        PolarityClass(2),
        PolarityClass(3),
        PolarityClass(4),
        PolarityClass(5),
    ];

    pub fn new(class: u8) -> Option<Self> {
        (1..=5).contains(&class).then_some(PolarityClass(class))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Zero-based index for tables.
    pub fn index(self) -> usize {
        usize::from(self.0 - 1)
    }
}

impl TryFrom<u8> for PolarityClass {
    type Error = String;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        PolarityClass::new(value).ok_or_else(|| format!("polarity class {value} outside 1..=5"))
    }
}

impl From<PolarityClass> for u8 {
    fn from(class: PolarityClass) -> u8 {
        class.0
    }
}

impl fmt::Display for PolarityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Clamps to `[-5, 5]`, then buckets into the half-open intervals
/// `(-5,-3] (-3,-1] (-1,1] (1,3] (3,5]`. NaN maps to the neutral class.
pub fn map_to_class(score: f64) -> PolarityClass {
    if score.is_nan() {
        return PolarityClass(3);
    }
    let s = score.clamp(-5.0, 5.0);
    let class = if s <= -3.0 {
        1
    } else if s <= -1.0 {
        2
    } else if s <= 1.0 {
        3
    } else if s <= 3.0 {
        4
    } else {
        5
    };
    PolarityClass(class)
}

/// Uses the title when it carries at least one sentiment word, the body
/// otherwise, falling back to whichever side is non-empty.
pub fn select_input<'a>(
    title: &'a [Sentence],
    body: &'a [Sentence],
    lexicons: &LexiconSet,
) -> Result<&'a [Sentence], AggregationError> {
    if title.is_empty() && body.is_empty() {
        return Err(AggregationError::BothEmpty);
    }
    let title_has_sentiment = title
        .iter()
        .flat_map(|s| s.tokens())
        .any(|t| lexicons.classify(t).is_sentiment());
    let chosen = if title_has_sentiment { title } else { body };
    Ok(if chosen.is_empty() {
        if title_has_sentiment {
            body
        } else {
            title
        }
    } else {
        chosen
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReviewScore {
    pub sentences: Vec<SentenceScore>,
    pub score: f64,
    pub class: PolarityClass,
}

/// Scores every sentence and aggregates. An empty slice scores 0.
pub fn score_review(
    sentences: &[Sentence],
    lexicons: &LexiconSet,
    metric: AggregationMetric,
) -> ReviewScore {
    let scored: Vec<SentenceScore> = sentences
        .iter()
        .map(|s| score_sentence(s, lexicons))
        .collect();
    let values: Vec<f64> = scored.iter().map(|s| s.score).collect();
    let score = aggregate(&values, metric).unwrap_or(0.0);
    ReviewScore {
        sentences: scored,
        score,
        class: map_to_class(score),
    }
}
