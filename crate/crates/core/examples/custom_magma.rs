//! Extending a user-supplied magma on trees to a post-Hopf algebra on forests.

use std::sync::Arc;

use posthopf::posthopf::{full_suite, PostHopfTrunc, TableMagma};
use posthopf::trees::OrderedTree;
use posthopf::LinComb;

fn main() -> posthopf::Result<()> {
    let t = |s: &str| s.parse::<OrderedTree>().unwrap();
    let magma = TableMagma::new([
        ((t("()"), t("()")), LinComb::basis(t("(())"))),
        ((t("()"), t("(())")), "2*((())) - (()())".parse()?),
    ])?;
    println!("{}", serde_json::to_string(&magma.to_entries()).unwrap());

    let ph = PostHopfTrunc::new(Arc::new(magma), 4);
    let x = "() ()".parse()?;
    let y = "()".parse()?;
    println!("() () ▷ () = {}", ph.triangle(&x, &y)?);
    println!("{}", full_suite(&ph, 3)?);

    // products must be degree-additive
    let bad = TableMagma::new([((t("()"), t("()")), LinComb::basis(t("()")))]);
    println!("{}", bad.err().map(|e| e.to_string()).unwrap_or_default());
    Ok(())
}
