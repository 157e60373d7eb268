//! The Grossman-Larson product on forests with its deshuffle coproduct and
//! antipode, computed from the grafting post-Hopf structure.

use posthopf::coshuffle::{deshuffle, Elem};
use posthopf::posthopf::OrderedPostHopf;
use posthopf::trees::OrderedTree;

fn main() -> posthopf::Result<()> {
    let ph = OrderedPostHopf::grafting(6);
    let x: Elem<OrderedTree> = "()".parse()?;
    let y: Elem<OrderedTree> = "(()) ()".parse()?;

    println!("x = {x}, y = {y}");
    println!("x ▷ y = {}", ph.triangle(&x, &y)?);
    println!("x ∗ y = {}", ph.gl_product(&x, &y)?);
    println!("via B±: {}", ph.gl_product_bpm(&x, &y)?);
    println!("Δ(y) = {}", deshuffle(&y));
    let s = ph.subadjacent_antipode(&y)?;
    println!("S(y) = {s}");
    println!("y ∗ S(y) has {} terms", ph.gl_product(&y, &s)?.len());

    // degree 7 does not fit under the cutoff
    let big: Elem<OrderedTree> = "((((()))))".parse()?;
    match ph.gl_product(&big, &big) {
        Err(e) => println!("refused: {e}"),
        Ok(v) => println!("{v}"),
    }
    Ok(())
}
