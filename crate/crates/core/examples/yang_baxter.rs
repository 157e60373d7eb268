//! The braiding `R(x⊗y) = (x₁ ▷ y₁) ⊗ (x₂ ◁ y₂)` on forests and its checks.

use posthopf::coshuffle::Word;
use posthopf::posthopf::{OrderedPostHopf, UnorderedPostHopf};
use posthopf::trees::{parse_forest, OrderedTree};
use posthopf::ybe::{r_table, verify_ybe, YbeOperator};

fn main() -> posthopf::Result<()> {
    let ph = OrderedPostHopf::grafting(4);
    let ybe = YbeOperator::new(&ph);
    let x: Word<OrderedTree> = parse_forest("()")?;
    let y: Word<OrderedTree> = parse_forest("(())")?;
    println!("R(x⊗y) = {}", ybe.r_word(&x, &y));
    println!("explicit = {}", ybe.r_trees_explicit_word(&x, &y));

    for line in r_table(&ph, 2) {
        println!("{line}");
    }
    println!("{}", verify_ybe(&ph, 3)?);
    println!("pre-Hopf: {}", verify_ybe(&UnorderedPostHopf::grafting(4), 3)?.pass);
    Ok(())
}
