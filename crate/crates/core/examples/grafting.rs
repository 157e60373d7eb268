//! Left grafting of planar and non-planar rooted trees, and the B⁺/B⁻ maps.

use posthopf::trees::{b_minus_tree, b_plus, canonicalize, graft_left, graft_unordered, parse_forest, OrderedTree, UnorderedTree};

fn main() -> posthopf::Result<()> {
    let tau: OrderedTree = "(())".parse()?;
    let omega: OrderedTree = "(()()())".parse()?;
    println!("{tau} ↷ {omega} = {}", graft_left(&tau, &omega));

    let (tu, ou): (UnorderedTree, UnorderedTree) = ("(())".parse()?, "(()()())".parse()?);
    println!("non-planar: {}", graft_unordered(&tu, &ou));
    println!("forgetting planarity: {}", canonicalize(&graft_left(&tau, &omega)));

    let forest = parse_forest::<OrderedTree>("(()) (()())")?;
    println!("B+({forest}) = {}", b_plus(&forest));
    let t: OrderedTree = "(()()((())))".parse()?;
    println!("B-({t}) = {}", b_minus_tree(&t));

    for n in 1..=6 {
        println!("degree {n}: {} planar, {} non-planar", OrderedTree::all_of_degree(n).len(), UnorderedTree::all_of_degree(n).len());
    }
    Ok(())
}
