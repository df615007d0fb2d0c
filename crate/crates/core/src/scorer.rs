//! Branch-wise, bottom-up polarity composition.
//!
//! Every head/child branch is scored once, deepest first. A branch's base is
//! the head's own prior polarity plus whatever its children carry up: the
//! composed result of a child that heads its own branch, or the raw prior of
//! a leaf sentiment word. Intensifier children add their boosts, negator
//! children flag the branch, and the branch result is
//!
//! ```text
//! base * (1 + boost) + sign(base * (1 + boost)) * -4    (negated)
//! base * (1 + boost)                                    (otherwise)
//! ```
//!
//! The virtual root copies the value of its only child, so the sentence
//! score is the value that reaches the root.

use serde::Serialize;

use crate::conllu::{branch_order, build_head_child_map, Sentence};
use crate::lexicon::{LexiconSet, TokenRole};

/// Magnitude of the polarity shift a negator applies.
pub const NEGATION_SHIFT: f64 = 4.0;

/// Lowercases text the same way the lexicons are keyed.
pub fn preprocess(text: &str) -> String {
    text.to_lowercase()
}

/// Applies the boost first, then shifts the intensified value toward (and
/// past) zero by [`NEGATION_SHIFT`] when negated. A zero value stays zero.
pub fn intensify_then_negate(base: f64, boost: f64, negated: bool) -> f64 {
    debug_assert!(1.0 + boost > 0.0, "boost must stay above -1");
    let intensified = base * (1.0 + boost);
    if negated {
        intensified + sign(intensified) * -NEGATION_SHIFT
    } else {
        intensified
    }
}

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Sums the boosts of sibling intensifiers. Stacked downtoners whose sum
/// would reach -1 compose multiplicatively instead, so the factor
/// `1 + boost` stays positive.
pub fn combine_boosts(boosts: &[f64]) -> f64 {
    let sum = boosts.iter().fold(0.0, |acc, b| acc + b);
    if sum > -1.0 {
        sum
    } else {
        boosts.iter().map(|b| 1.0 + b).product::<f64>() - 1.0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchTrace {
    pub head_id: usize,
    pub base_score: f64,
    pub boost_sum: f64,
    pub negated: bool,
    pub result: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SentenceScore {
    pub score: f64,
    /// One entry per branch, deepest first, the virtual root last.
    pub traces: Vec<BranchTrace>,
}

impl SentenceScore {
    pub fn trace_for(&self, head_id: usize) -> Option<&BranchTrace> {
        self.traces.iter().find(|t| t.head_id == head_id)
    }

    pub fn traces_json(&self) -> String {
        serde_json::to_string(&self.traces).expect("traces serialize")
    }
}

pub fn score_sentence(sentence: &Sentence, lexicons: &LexiconSet) -> SentenceScore {
    let roles: Vec<TokenRole> = sentence
        .tokens()
        .iter()
        .map(|t| lexicons.classify(t))
        .collect();
    let role = |id: usize| roles[id - 1];
    let own = |id: usize| match role(id) {
        TokenRole::Sentiment(a) => a,
        _ => 0.0,
    };

    let map = build_head_child_map(sentence);
    // composed value per token id; only heads get an entry
    let mut composed = vec![None; sentence.len() + 1];
    let value_of = |composed: &[Option<f64>], id: usize| composed[id].unwrap_or_else(|| own(id));

    let mut traces = Vec::new();
    for head in branch_order(&map) {
        let trace = if head == 0 {
            let root = sentence.root();
            let value = value_of(&composed, root);
            BranchTrace {
                head_id: 0,
                base_score: value,
                boost_sum: 0.0,
                negated: false,
                result: value,
            }
        } else {
            let mut base = own(head);
            let mut boosts = Vec::new();
            let mut negated = false;
            for &child in map.children(head) {
                base += value_of(&composed, child);
                match role(child) {
                    TokenRole::Intensifier(b) => boosts.push(b),
                    TokenRole::Negator => negated = true,
                    _ => {}
                }
            }
            let boost_sum = combine_boosts(&boosts);
            let result = intensify_then_negate(base, boost_sum, negated);
            composed[head] = Some(result);
            BranchTrace {
                head_id: head,
                base_score: base,
                boost_sum,
                negated,
                result,
            }
        };
        traces.push(trace);
    }

    let score = traces.last().map(|t| t.result).unwrap_or(0.0);
    SentenceScore { score, traces }
}
