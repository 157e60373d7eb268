//! The matched pair of a relative Rota-Baxter operator, its double
//! crossproduct and the twist onto the smash product.

use posthopf::findim::matched::{double_crossproduct, matched_pair_from_rrb, twist_check};
use posthopf::findim::rrb::s3_inverse_instance;
use posthopf::findim::{group_rb_lift, verify_hopf};

fn main() -> posthopf::Result<()> {
    let (g, phi, t) = s3_inverse_instance();
    let r = group_rb_lift(&g, &g, &phi, &t)?;
    let (right, report) = matched_pair_from_rrb(&r)?;
    println!("{report}");
    let kt = r.descendent_unchecked();
    let dcp = double_crossproduct(&r.h, &kt, &r.act, &right)?;
    println!("{} has dimension {}", dcp.name(), dcp.dim());
    println!("Hopf axioms: {}", verify_hopf(&dcp).pass);
    println!("{}", twist_check(&r, &dcp));
    Ok(())
}
