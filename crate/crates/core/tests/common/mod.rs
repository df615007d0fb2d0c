//! Test-only helpers: random labeled trees and an independent top-down
//! evaluator for the branch composition rule.

#![allow(dead_code)]

use std::path::PathBuf;

use branchpol::{LexiconSet, Sentence, Token};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn samples_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples")
}

pub fn sample_lexicons() -> LexiconSet {
    let dir = samples_dir();
    branchpol::load_lexicons(
        &dir.join("sentiment_es.tsv"),
        &dir.join("intensifiers_es.tsv"),
        &dir.join("negators_es.txt"),
    )
    .expect("sample lexicons load")
}

pub fn read_fixture(name: &str) -> Vec<Sentence> {
    let text = std::fs::read_to_string(samples_dir().join("fixtures").join(name)).unwrap();
    branchpol::parse_conllu(&text).unwrap()
}

/// Role assigned to a synthetic token. Values are dyadic so every sum and
/// product along the way is exact in binary floating point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Role {
    Sentiment(f64),
    Intensifier(f64),
    Negator,
    Neutral,
}

pub const SENTIMENTS: [(&str, f64); 6] = [
    ("s_p5", 5.0),
    ("s_p2", 2.0),
    ("s_p05", 0.5),
    ("s_m3", -3.0),
    ("s_m1", -1.0),
    ("s_m45", -4.5),
];
pub const INTENSIFIERS: [(&str, f64); 4] = [
    ("i_25", 0.25),
    ("i_50", 0.5),
    ("i_m50", -0.5),
    ("i_125", 0.125),
];

/// Lexicon covering every synthetic lemma.
pub fn synthetic_lexicons() -> LexiconSet {
    let sentiment: String = SENTIMENTS
        .iter()
        .map(|(l, a)| format!("{l}\t{a}\n"))
        .collect();
    let intensifiers: String = INTENSIFIERS
        .iter()
        .map(|(l, b)| format!("{l}\t{b}\n"))
        .collect();
    LexiconSet::from_strs(&sentiment, &intensifiers, "neg\n").unwrap()
}

pub fn lemma_for(role: Role) -> &'static str {
    match role {
        Role::Sentiment(a) => SENTIMENTS.iter().find(|(_, v)| *v == a).unwrap().0,
        Role::Intensifier(b) => INTENSIFIERS.iter().find(|(_, v)| *v == b).unwrap().0,
        Role::Negator => "neg",
        Role::Neutral => "x",
    }
}

/// Role `k` of the flat role table (sentiments, intensifiers, negator, neutral).
pub fn role_from_index(k: usize) -> Role {
    let n_s = SENTIMENTS.len();
    let n_i = INTENSIFIERS.len();
    match k % (n_s + n_i + 2) {
        i if i < n_s => Role::Sentiment(SENTIMENTS[i].1),
        i if i < n_s + n_i => Role::Intensifier(INTENSIFIERS[i - n_s].1),
        i if i == n_s + n_i => Role::Negator,
        _ => Role::Neutral,
    }
}

pub const ROLE_COUNT: usize = SENTIMENTS.len() + INTENSIFIERS.len() + 2;

/// Head array from a visiting order and, for each non-first node, a choice
/// among the already placed nodes.
pub fn heads_from_order(order: &[usize], picks: &[usize]) -> Vec<usize> {
    let n = order.len();
    let mut heads = vec![0; n];
    for pos in 1..n {
        let parent = order[picks[pos] % pos];
        heads[order[pos] - 1] = parent;
    }
    heads
}

pub fn random_tree<R: Rng>(rng: &mut R, max_len: usize) -> (Vec<usize>, Vec<Role>) {
    let n = rng.gen_range(1..=max_len);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let picks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n.max(1))).collect();
    let heads = heads_from_order(&order, &picks);
    let roles = (0..n)
        .map(|_| role_from_index(rng.gen_range(0..ROLE_COUNT)))
        .collect();
    (heads, roles)
}

pub fn build_sentence(heads: &[usize], roles: &[Role]) -> Sentence {
    let tokens = heads
        .iter()
        .zip(roles)
        .enumerate()
        .map(|(i, (&h, &r))| {
            let lemma = lemma_for(r);
            Token::new(i + 1, lemma, lemma, "X", h, "dep")
        })
        .collect();
    Sentence::new(tokens).expect("generated tree is valid")
}

/// Direct top-down recursion over the head array.
pub fn naive_score(heads: &[usize], roles: &[Role]) -> f64 {
    fn value(node: usize, heads: &[usize], roles: &[Role]) -> f64 {
        let own = match roles[node - 1] {
            Role::Sentiment(a) => a,
            _ => 0.0,
        };
        let children: Vec<usize> = (1..=heads.len())
            .filter(|&c| heads[c - 1] == node)
            .collect();
        if children.is_empty() {
            return own;
        }
        let mut total = own;
        let mut boost = 0.0;
        let mut factor = 1.0;
        let mut negated = false;
        for &c in &children {
            total += value(c, heads, roles);
            match roles[c - 1] {
                Role::Intensifier(b) => {
                    boost += b;
                    factor *= 1.0 + b;
                }
                Role::Negator => negated = true,
                _ => {}
            }
        }
        // additive boosts unless stacked downtoners would zero the factor
        let scaled = if 1.0 + boost > 0.0 {
            total * (1.0 + boost)
        } else {
            total * factor
        };
        if !negated || scaled == 0.0 {
            scaled
        } else if scaled > 0.0 {
            scaled - 4.0
        } else {
            scaled + 4.0
        }
    }
    let root = heads.iter().position(|&h| h == 0).unwrap() + 1;
    value(root, heads, roles)
}

/// Brute-force tree check: one root, heads in range, no self loops, every
/// token reaches 0 within n steps.
pub fn brute_force_is_tree(heads: &[usize]) -> bool {
    let n = heads.len();
    if n == 0 || heads.iter().filter(|&&h| h == 0).count() != 1 {
        return false;
    }
    if heads.iter().enumerate().any(|(i, &h)| h > n || h == i + 1) {
        return false;
    }
    (1..=n).all(|start| {
        let mut id = start;
        for _ in 0..=n {
            if id == 0 {
                return true;
            }
            id = heads[id - 1];
        }
        id == 0
    })
}
