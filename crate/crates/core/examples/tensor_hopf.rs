//! Words with concatenation, the deshuffle coproduct and the antipode.

use posthopf::coshuffle::{antipode, concat, counit, deshuffle, iterated_coproduct, Elem};
use posthopf::trees::OrderedTree;

fn main() -> posthopf::Result<()> {
    let u: Elem<OrderedTree> = "() (()) ()".parse()?;
    let v: Elem<OrderedTree> = "2*() - 1/2*(())".parse()?;
    println!("u v = {}", concat(&u, &v));
    println!("Δ(u) = {}", deshuffle(&u));
    println!("Δ²(v) = {}", iterated_coproduct(&v, 3));
    println!("ε(v) = {}", counit(&v));
    println!("S(u) = {}", antipode(&u));
    Ok(())
}
