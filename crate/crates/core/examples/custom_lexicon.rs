// Builds lexicons from in-memory tables, classifies tokens, and shows the
// validation errors a bad table produces.
//
//     cargo run --example custom_lexicon

use std::error::Error;

use branchpol::{score_sentence, LexiconSet, Sentence, Token, TokenRole};

const SENTIMENT: &str = "\
# lemma\tscore
genial\t4
aburrido\t-3
";
const INTENSIFIERS: &str = "súper\t0.5\npoco\t-0.5\n";
const NEGATORS: &str = "no\nnada\n";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lexicons = LexiconSet::from_strs(SENTIMENT, INTENSIFIERS, NEGATORS)?;

    // "la película no es súper aburrida"
    let sentence = Sentence::new(vec![
        Token::new(1, "la", "el", "DET", 2, "det"),
        Token::new(2, "película", "película", "NOUN", 6, "nsubj"),
        Token::new(3, "no", "no", "ADV", 6, "advmod"),
        Token::new(4, "es", "ser", "AUX", 6, "cop"),
        Token::new(5, "súper", "súper", "ADV", 6, "advmod"),
        Token::new(6, "aburrida", "aburrido", "ADJ", 0, "root"),
    ])?;
    for token in sentence.tokens() {
        let role = lexicons.classify(token);
        if role != TokenRole::Neutral {
            println!("{:<10} {role:?}", token.form);
        }
    }
    let scored = score_sentence(&sentence, &lexicons);
    // -3 * 1.5 = -4.5, negated -> -0.5
    println!("score {}", scored.score);
    assert_eq!(scored.score, -0.5);

    for (label, sentiment, intensifiers, negators) in [
        ("score out of range", "genial\t7\n", "", "no\n"),
        ("zero score", "meh\t0\n", "", "no\n"),
        ("boost at -1", "", "nada\t-1\n", "no\n"),
        ("negator with a score", "no\t-2\n", "", "no\n"),
        ("no negators", "", "", ""),
    ] {
        match LexiconSet::from_strs(sentiment, intensifiers, negators) {
            Err(e) => println!("{label}: {e}"),
            Ok(_) => return Err(format!("{label} was accepted").into()),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
