//! Exhaustive post-Hopf, subadjacent, brace and post-Lie checks on forests,
//! first for grafting and then for a deliberately broken extension.

use posthopf::posthopf::{full_suite, Mutation, OrderedPostHopf, UnorderedPostHopf};

fn main() -> posthopf::Result<()> {
    let d = 3;
    let report = full_suite(&OrderedPostHopf::grafting(d), d)?;
    println!("{report}");
    let report = full_suite(&UnorderedPostHopf::grafting(d), d)?;
    println!("unordered: {}", if report.pass { "PASS" } else { "FAIL" });

    let broken = OrderedPostHopf::grafting(d).with_mutation(Mutation::RecursionSign);
    let report = full_suite(&broken, d)?;
    for f in report.failures().take(2) {
        println!("{}: {}", f.name, f.witness.as_deref().unwrap_or(""));
    }
    Ok(())
}
