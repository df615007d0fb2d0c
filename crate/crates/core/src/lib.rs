//! Unsupervised, compositional sentiment scoring over dependency trees.
//!
//! Input is CoNLL-U. Each token is labeled as a sentiment word, an
//! intensifier, a negator or neutral from three small lexicons, and the
//! tree's head/child branches are scored bottom-up: intensifiers scale the
//! branch value, negators shift it by four points toward the opposite
//! polarity, and the value carried up to the root is the sentence score.
//! Sentence scores are combined into a review score and bucketed into a
//! 1–5 class.
//!
//! ```
//! use branchpol::{parse_conllu, score_sentence, LexiconSet};
//!
//! let lexicons = LexiconSet::from_strs("excelente\t5\n", "muy\t0.25\n", "no\n").unwrap();
//! let conllu = "1\tno\tno\tADV\t_\tPolarity=Neg\t3\tadvmod\t_\t_\n\
//!               2\tes\tser\tAUX\t_\t_\t3\tcop\t_\t_\n\
//!               3\texcelente\texcelente\tADJ\t_\t_\t0\troot\t_\t_\n";
//! let sentence = &parse_conllu(conllu).unwrap()[0];
//! assert_eq!(score_sentence(sentence, &lexicons).score, 1.0);
//! ```
//!
//! A proximity-window baseline ([`baseline`]) and an accuracy harness
//! ([`eval`]) are included for comparisons; [`cli`] backs the `branchpol`
//! binary.

pub mod aggregation;
pub mod baseline;
pub mod cli;
pub mod conllu;
pub mod eval;
pub mod lexicon;
pub mod scorer;

pub use aggregation::{
    aggregate, map_to_class, score_review, select_input, AggregationMetric, PolarityClass,
    ReviewScore,
};
pub use baseline::{classify_threshold, score_proximity, ProportionScore, ThresholdVerdict};
pub use conllu::{
    branch_order, build_head_child_map, parse_conllu, serialize_conllu, HeadChildMap, Sentence,
    Token, TreeError,
};
pub use eval::{compare_report, evaluate, load_dataset, EvalReport, ReviewRecord};
pub use lexicon::{classify_token, load_lexicons, LexiconSet, TokenRole};
pub use scorer::{intensify_then_negate, preprocess, score_sentence, BranchTrace, SentenceScore};
