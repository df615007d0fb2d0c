//! Labeled review datasets, accuracy reports and system comparison.
//!
//! A dataset is a CSV manifest with the columns
//! `review_id,title_conllu_path,body_conllu_path,polarity`. Paths are
//! resolved relative to the manifest's directory; an empty path means the
//! review has no title (or no body).

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::aggregation::{score_review, select_input, AggregationMetric, PolarityClass};
use crate::baseline::{classify_threshold, score_proximity, ThresholdVerdict};
use crate::conllu::{parse_conllu, Sentence, Token};
use crate::lexicon::LexiconSet;

const COLUMNS: [&str; 4] = [
    "review_id",
    "title_conllu_path",
    "body_conllu_path",
    "polarity",
];

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("manifest: {0}")]
    Csv(#[from] csv::Error),
    #[error("manifest is missing column {0:?}")]
    MissingColumn(&'static str),
    #[error("review {review_id}: polarity {value:?} is not a class in 1..=5")]
    BadPolarity { review_id: String, value: String },
    #[error("review {review_id}: file not found: {}", .path.display())]
    FileNotFound { review_id: String, path: PathBuf },
    #[error("cannot evaluate an empty dataset")]
    EmptyDataset,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReviewRecord {
    pub review_id: String,
    pub title: Vec<Sentence>,
    pub body: Vec<Sentence>,
    pub gold: PolarityClass,
}

impl ReviewRecord {
    /// The sentences the scorers look at: the title when it carries
    /// sentiment, otherwise the body.
    pub fn input<'a>(&'a self, lexicons: &LexiconSet) -> &'a [Sentence] {
        select_input(&self.title, &self.body, lexicons).unwrap_or(&[])
    }
}

#[derive(Clone, Debug, Default)]
pub struct Dataset {
    pub records: Vec<ReviewRecord>,
    /// `(review_id, reason)` for rows whose CoNLL-U could not be used.
    pub skipped: Vec<(String, String)>,
}

pub fn load_dataset(manifest_path: &Path) -> Result<Dataset, EvalError> {
    let text = fs::read_to_string(manifest_path).map_err(|source| EvalError::Io {
        path: manifest_path.to_path_buf(),
        source,
    })?;
    let base = manifest_path.parent().unwrap_or(Path::new("."));
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let headers = reader.headers()?.clone();
    let mut idx = [0usize; 4];
    for (slot, column) in idx.iter_mut().zip(COLUMNS) {
        *slot = headers
            .iter()
            .position(|h| h == column)
            .ok_or(EvalError::MissingColumn(column))?;
    }

    let mut dataset = Dataset::default();
    for row in reader.records() {
        let row = row?;
        let field = |i: usize| row.get(idx[i]).unwrap_or("");
        let review_id = field(0).to_string();
        let gold = field(3)
            .parse::<u8>()
            .ok()
            .and_then(PolarityClass::new)
            .ok_or_else(|| EvalError::BadPolarity {
                review_id: review_id.clone(),
                value: field(3).to_string(),
            })?;

        let read_side = |raw: &str| -> Result<Result<Vec<Sentence>, String>, EvalError> {
            if raw.is_empty() {
                return Ok(Ok(Vec::new()));
            }
            let path = base.join(raw);
            let text = fs::read_to_string(&path).map_err(|_| EvalError::FileNotFound {
                review_id: review_id.clone(),
                path: path.clone(),
            })?;
            Ok(parse_conllu(&text).map_err(|e| format!("{}: {e}", path.display())))
        };
        let title = read_side(field(1))?;
        let body = read_side(field(2))?;
        match (title, body) {
            (Ok(title), Ok(body)) if title.is_empty() && body.is_empty() => {
                log::warn!("review {review_id}: title and body are both empty, skipped");
                dataset
                    .skipped
                    .push((review_id, "title and body are both empty".to_string()));
            }
            (Ok(title), Ok(body)) => dataset.records.push(ReviewRecord {
                review_id,
                title,
                body,
                gold,
            }),
            (Err(reason), _) | (_, Err(reason)) => {
                log::warn!("review {review_id}: {reason}, skipped");
                dataset.skipped.push((review_id, reason));
            }
        }
    }
    Ok(dataset)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    #[serde(rename = "system")]
    pub system_name: String,
    pub accuracy: f64,
    /// `confusion[gold - 1][predicted - 1]`.
    pub confusion: [[usize; 5]; 5],
    #[serde(rename = "support")]
    pub per_class_support: [usize; 5],
}

impl EvalReport {
    pub fn total(&self) -> usize {
        self.per_class_support.iter().sum()
    }

    pub fn correct(&self) -> usize {
        (0..5).map(|i| self.confusion[i][i]).sum()
    }
}

pub fn evaluate<F>(
    system_name: &str,
    records: &[ReviewRecord],
    predict: F,
) -> Result<EvalReport, EvalError>
where
    F: Fn(&ReviewRecord) -> PolarityClass + Sync,
{
    if records.is_empty() {
        return Err(EvalError::EmptyDataset);
    }
    let predictions: Vec<PolarityClass> = records.par_iter().map(&predict).collect();
    let mut confusion = [[0usize; 5]; 5];
    let mut support = [0usize; 5];
    for (record, predicted) in records.iter().zip(predictions) {
        confusion[record.gold.index()][predicted.index()] += 1;
        support[record.gold.index()] += 1;
    }
    let correct: usize = (0..5).map(|i| confusion[i][i]).sum();
    Ok(EvalReport {
        system_name: system_name.to_string(),
        accuracy: correct as f64 / records.len() as f64,
        confusion,
        per_class_support: support,
    })
}

/// Restricts to the two extreme classes, for title-level binary runs.
pub fn binary_subset(records: &[ReviewRecord]) -> Vec<ReviewRecord> {
    records
        .iter()
        .filter(|r| matches!(r.gold.value(), 1 | 5))
        .cloned()
        .collect()
}

pub fn predict_ucr(
    record: &ReviewRecord,
    lexicons: &LexiconSet,
    metric: AggregationMetric,
) -> PolarityClass {
    score_review(record.input(lexicons), lexicons, metric).class
}

/// Runs the proximity baseline over the selected input as one flat token
/// stream; a positive verdict maps to class 5, negative to 1, otherwise 3.
pub fn predict_baseline(
    record: &ReviewRecord,
    lexicons: &LexiconSet,
    window: usize,
    tau: f64,
) -> PolarityClass {
    let tokens: Vec<Token> = record
        .input(lexicons)
        .iter()
        .flat_map(|s| s.tokens().iter().cloned())
        .collect();
    let score = score_proximity(&tokens, lexicons, window);
    let class = match classify_threshold(&score, tau) {
        ThresholdVerdict::Positive => 5,
        ThresholdVerdict::Negative => 1,
        ThresholdVerdict::Inconclusive => 3,
    };
    PolarityClass::new(class).expect("valid class")
}

/// Aligned `system / accuracy` table, best first (ties by name), followed
/// by the reports as pretty JSON in the same order.
pub fn compare_report(reports: &[EvalReport]) -> String {
    let mut sorted: Vec<&EvalReport> = reports.iter().collect();
    sorted.sort_by(|a, b| {
        b.accuracy
            .total_cmp(&a.accuracy)
            .then_with(|| a.system_name.cmp(&b.system_name))
    });
    let width = sorted
        .iter()
        .map(|r| r.system_name.chars().count())
        .max()
        .unwrap_or(0)
        .max("system".len());

    let mut out = format!("{:<width$}  {:>8}\n", "system", "accuracy");
    for report in &sorted {
        out.push_str(&format!(
            "{:<width$}  {:>8.4}\n",
            report.system_name, report.accuracy
        ));
    }
    out.push('\n');
    out.push_str(&serde_json::to_string_pretty(&sorted).expect("reports serialize"));
    out.push('\n');
    out
}
