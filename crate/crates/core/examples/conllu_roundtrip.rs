// Parses CoNLL-U, shows the head-to-children map and the bottom-up branch
// order, and writes the sentence back out. Also shows what a malformed tree
// reports.
//
//     cargo run --example conllu_roundtrip

use std::error::Error;

use branchpol::{branch_order, build_head_child_map, parse_conllu, serialize_conllu};

const INPUT: &str = "\
# sent_id = demo-1
# text = No es una comida muy buena
1\tNo\tno\tADV\t_\tPolarity=Neg\t4\tadvmod\t_\t_
2\tes\tser\tAUX\t_\tMood=Ind|Number=Sing\t4\tcop\t_\t_
3\tuna\tuno\tDET\t_\t_\t4\tdet\t_\t_
4\tcomida\tcomida\tNOUN\t_\t_\t0\troot\t_\t_
5\tmuy\tmuy\tADV\t_\t_\t6\tadvmod\t_\t_
6\tbuena\tbueno\tADJ\t_\t_\t4\tamod\t_\t_

";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sentences = parse_conllu(INPUT)?;
    let sentence = &sentences[0];
    println!(
        "sent_id {:?}, {} tokens",
        sentence.sent_id(),
        sentence.len()
    );

    let map = build_head_child_map(sentence);
    for (head, children) in map.branches() {
        println!("  head {head} (depth {}) -> {children:?}", map.depth(*head));
    }
    println!("branch order: {:?}", branch_order(&map));

    let written = serialize_conllu(&sentences);
    print!("{written}");
    assert_eq!(parse_conllu(&written)?, sentences);

    let cyclic = "1\ta\ta\tX\t_\t_\t2\tdep\t_\t_\n2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n3\tc\tc\tX\t_\t_\t0\troot\t_\t_\n";
    match parse_conllu(cyclic) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("cycle was accepted".into()),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
