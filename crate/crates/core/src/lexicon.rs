//! Sentiment, intensifier and negator lexicons.
//!
//! Sentiment and intensifier files are `lemma<TAB>score` rows, negator files
//! hold one lemma per line. Blank lines and `#` comments are ignored and all
//! lemmas are lowercased on load.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::conllu::Token;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{source_name}:{line}: score {value} for {lemma:?} is out of range ({allowed})")]
    ScoreOutOfRange {
        source_name: String,
        line: usize,
        lemma: String,
        value: f64,
        allowed: &'static str,
    },
    #[error("{source_name}:{line}: duplicate lemma {lemma:?}")]
    DuplicateLemma {
        source_name: String,
        line: usize,
        lemma: String,
    },
    #[error("{lemma:?} is listed both as a sentiment word and as a negator")]
    RoleConflict { lemma: String },
    #[error("{source_name}:{line}: {reason}")]
    MalformedRow {
        source_name: String,
        line: usize,
        reason: String,
    },
    #[error("{source_name}: negator list is empty")]
    EmptyNegators { source_name: String },
}

/// Lemma → prior polarity in `[-5, 5]`, never zero.
#[derive(Clone, Debug, Default)]
pub struct SentimentLexicon {
    entries: HashMap<String, f64>,
}

impl SentimentLexicon {
    pub fn parse(source_name: &str, text: &str) -> Result<Self, LexiconError> {
        let entries = parse_scored(
            source_name,
            text,
            |v| v != 0.0 && (-5.0..=5.0).contains(&v),
            "-5 <= a <= 5, a != 0",
        )?;
        Ok(SentimentLexicon { entries })
    }

    pub fn get(&self, lemma: &str) -> Option<f64> {
        self.entries.get(lemma).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Lemma → boost `b`, applied as `(1 + b)`. Downtoners carry `-1 < b < 0`.
#[derive(Clone, Debug, Default)]
pub struct IntensifierLexicon {
    entries: HashMap<String, f64>,
}

impl IntensifierLexicon {
    pub fn parse(source_name: &str, text: &str) -> Result<Self, LexiconError> {
        let entries = parse_scored(source_name, text, |v| v > -1.0 && v.is_finite(), "b > -1")?;
        Ok(IntensifierLexicon { entries })
    }

    pub fn get(&self, lemma: &str) -> Option<f64> {
        self.entries.get(lemma).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct NegatorList {
    entries: HashSet<String>,
}

impl NegatorList {
    pub fn parse(source_name: &str, text: &str) -> Result<Self, LexiconError> {
        let mut entries = HashSet::new();
        for (line, row) in rows(text) {
            let lemma = single_lemma(source_name, line, row)?;
            if !entries.insert(lemma.clone()) {
                return Err(LexiconError::DuplicateLemma {
                    source_name: source_name.to_string(),
                    line,
                    lemma,
                });
            }
        }
        if entries.is_empty() {
            return Err(LexiconError::EmptyNegators {
                source_name: source_name.to_string(),
            });
        }
        Ok(NegatorList { entries })
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.entries.contains(lemma)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Numbered non-blank, non-comment rows.
fn rows(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn single_lemma(source_name: &str, line: usize, raw: &str) -> Result<String, LexiconError> {
    let lemma = raw.trim();
    if lemma.split_whitespace().count() != 1 {
        return Err(LexiconError::MalformedRow {
            source_name: source_name.to_string(),
            line,
            reason: format!("multi-word entry {lemma:?} is not supported"),
        });
    }
    Ok(lemma.to_lowercase())
}

fn parse_scored(
    source_name: &str,
    text: &str,
    in_range: impl Fn(f64) -> bool,
    allowed: &'static str,
) -> Result<HashMap<String, f64>, LexiconError> {
    let mut entries = HashMap::new();
    for (line, row) in rows(text) {
        let malformed = |reason: String| LexiconError::MalformedRow {
            source_name: source_name.to_string(),
            line,
            reason,
        };
        let fields: Vec<&str> = row.split('\t').collect();
        if fields.len() != 2 {
            return Err(malformed(format!(
                "expected `lemma<TAB>score`, found {} field(s)",
                fields.len()
            )));
        }
        let lemma = single_lemma(source_name, line, fields[0])?;
        let value: f64 = fields[1]
            .trim()
            .parse()
            .map_err(|_| malformed(format!("invalid score {:?}", fields[1].trim())))?;
        if !in_range(value) {
            return Err(LexiconError::ScoreOutOfRange {
                source_name: source_name.to_string(),
                line,
                lemma,
                value,
                allowed,
            });
        }
        if entries.insert(lemma.clone(), value).is_some() {
            return Err(LexiconError::DuplicateLemma {
                source_name: source_name.to_string(),
                line,
                lemma,
            });
        }
    }
    Ok(entries)
}

/// The three lookups bundled together.
#[derive(Clone, Debug)]
pub struct LexiconSet {
    pub sentiment: SentimentLexicon,
    pub intensifiers: IntensifierLexicon,
    pub negators: NegatorList,
}

impl LexiconSet {
    /// Rejects a lemma that is both a sentiment word and a negator.
    pub fn new(
        sentiment: SentimentLexicon,
        intensifiers: IntensifierLexicon,
        negators: NegatorList,
    ) -> Result<Self, LexiconError> {
        let mut conflicts: Vec<&String> = negators
            .entries
            .iter()
            .filter(|lemma| sentiment.entries.contains_key(*lemma))
            .collect();
        conflicts.sort();
        if let Some(lemma) = conflicts.first() {
            return Err(LexiconError::RoleConflict {
                lemma: (*lemma).clone(),
            });
        }
        Ok(LexiconSet {
            sentiment,
            intensifiers,
            negators,
        })
    }

    /// Parses the three lexicons from in-memory text.
    pub fn from_strs(
        sentiment: &str,
        intensifiers: &str,
        negators: &str,
    ) -> Result<Self, LexiconError> {
        LexiconSet::new(
            SentimentLexicon::parse("sentiment", sentiment)?,
            IntensifierLexicon::parse("intensifiers", intensifiers)?,
            NegatorList::parse("negators", negators)?,
        )
    }

    /// Role of `token`, by precedence Negator > Intensifier > Sentiment > Neutral.
    pub fn classify(&self, token: &Token) -> TokenRole {
        classify_token(token, self)
    }
}

fn read(path: &Path) -> Result<String, LexiconError> {
    fs::read_to_string(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_lexicons(
    sentiment_path: &Path,
    intensifier_path: &Path,
    negator_path: &Path,
) -> Result<LexiconSet, LexiconError> {
    let name = |p: &Path| p.display().to_string();
    LexiconSet::new(
        SentimentLexicon::parse(&name(sentiment_path), &read(sentiment_path)?)?,
        IntensifierLexicon::parse(&name(intensifier_path), &read(intensifier_path)?)?,
        NegatorList::parse(&name(negator_path), &read(negator_path)?)?,
    )
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TokenRole {
    Sentiment(f64),
    Intensifier(f64),
    Negator,
    Neutral,
}

impl TokenRole {
    pub fn is_sentiment(&self) -> bool {
        matches!(self, TokenRole::Sentiment(_))
    }
}

pub fn classify_token(token: &Token, lexicons: &LexiconSet) -> TokenRole {
    let lemma = token.lemma.to_lowercase();
    if token.feat("Polarity") == Some("Neg") || lexicons.negators.contains(&lemma) {
        return TokenRole::Negator;
    }
    if let Some(boost) = lexicons.intensifiers.get(&lemma) {
        return TokenRole::Intensifier(boost);
    }
    // quantitative modifiers are never sentiment words, so the surface
    // fallback only applies to the sentiment lookup
    let score = lexicons
        .sentiment
        .get(&lemma)
        .or_else(|| lexicons.sentiment.get(&token.form.to_lowercase()));
    match score {
        Some(a) => TokenRole::Sentiment(a),
        None => TokenRole::Neutral,
    }
}
