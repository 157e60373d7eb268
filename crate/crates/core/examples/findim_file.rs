//! Loading Hopf algebras and post-products given by structure constants.
//!
//! `cargo run --example findim_file -- fixtures/h4_corrupted_post.json`

use posthopf::findim::post::{verify_findim_file, FindimJson};
use posthopf::findim::{group_algebra, FiniteGroup};

fn main() -> posthopf::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/h4_post.json").into());
    let input: FindimJson = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
    println!("{}", verify_findim_file(&input)?);

    let k = group_algebra(&FiniteGroup::cyclic(2));
    let json = serde_json::to_string(&FindimJson::new(&k, None, None))?;
    println!("{json}");
    Ok(())
}
