//! Proximity-window baseline.
//!
//! Ignores the tree entirely: each sentiment word looks back over a fixed
//! number of preceding tokens in the flat stream and is damped by any negator
//! or scaled by intensifiers it finds there, with farther intensifiers
//! weighing less. Output is a pos/neg/neu proportion split plus a
//! normalized compound score.

use serde::Serialize;

use crate::conllu::Token;
use crate::lexicon::{LexiconSet, TokenRole};

pub const DEFAULT_WINDOW: usize = 3;
/// Valence multiplier for a negated sentiment word.
pub const NEGATION_DAMPING: f64 = -0.74;
/// Per-token decay of an intensifier's boost with distance.
pub const DISTANCE_DECAY: f64 = 0.95;
/// `alpha` in `S / sqrt(S^2 + alpha)`.
pub const COMPOUND_ALPHA: f64 = 15.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProportionScore {
    pub pos: f64,
    pub neg: f64,
    pub neu: f64,
    pub compound: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ThresholdVerdict {
    Positive,
    Negative,
    Inconclusive,
}

/// Per-word valences after window adjustments, in token order.
pub fn valences(tokens: &[Token], lexicons: &LexiconSet, window: usize) -> Vec<f64> {
    let window = window.max(1);
    let roles: Vec<TokenRole> = tokens.iter().map(|t| lexicons.classify(t)).collect();
    let mut out = Vec::new();
    for (i, role) in roles.iter().enumerate() {
        let TokenRole::Sentiment(a) = *role else {
            continue;
        };
        let mut valence = a;
        let mut negated = false;
        for distance in 1..=window.min(i) {
            match roles[i - distance] {
                TokenRole::Negator => negated = true,
                TokenRole::Intensifier(b) => {
                    valence *= 1.0 + b * DISTANCE_DECAY.powi(distance as i32 - 1)
                }
                _ => {}
            }
        }
        if negated {
            valence *= NEGATION_DAMPING;
        }
        out.push(valence);
    }
    out
}

pub fn score_proximity(tokens: &[Token], lexicons: &LexiconSet, window: usize) -> ProportionScore {
    let vals = valences(tokens, lexicons, window);
    let positive = vals
        .iter()
        .filter(|v| **v > 0.0)
        .fold(0.0, |acc, v| acc + v);
    let negative = vals
        .iter()
        .filter(|v| **v < 0.0)
        .fold(0.0, |acc, v| acc - v);
    let neutral = tokens
        .iter()
        .filter(|t| !t.is_punct() && lexicons.classify(t) == TokenRole::Neutral)
        .count() as f64;
    let total = positive + negative + neutral;
    let sum = vals.iter().fold(0.0, |acc, v| acc + v);
    let compound = sum / (sum * sum + COMPOUND_ALPHA).sqrt();
    if total == 0.0 {
        return ProportionScore {
            pos: 0.0,
            neg: 0.0,
            neu: 1.0,
            compound,
        };
    }
    ProportionScore {
        pos: positive / total,
        neg: negative / total,
        neu: neutral / total,
        compound,
    }
}

/// `pos > tau` / `neg > tau`; at `tau >= 1` the share must equal 1. When
/// both clear a low threshold the larger share wins and a tie is
/// inconclusive.
pub fn classify_threshold(score: &ProportionScore, tau: f64) -> ThresholdVerdict {
    debug_assert!(tau > 0.0 && tau <= 1.0, "tau must lie in (0, 1]");
    let clears = |share: f64| {
        if tau >= 1.0 {
            share >= 1.0
        } else {
            share > tau
        }
    };
    match (clears(score.pos), clears(score.neg)) {
        (true, false) => ThresholdVerdict::Positive,
        (false, true) => ThresholdVerdict::Negative,
        (true, true) if score.pos > score.neg => ThresholdVerdict::Positive,
        (true, true) if score.neg > score.pos => ThresholdVerdict::Negative,
        _ => ThresholdVerdict::Inconclusive,
    }
}
