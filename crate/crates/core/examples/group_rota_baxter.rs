//! A relative Rota-Baxter operator on the group algebra of S3 and everything
//! it induces: descendent Hopf algebra, post-product, graph, matched pair.

use posthopf::findim::rrb::{group_rb_witness, s3_inverse_instance};
use posthopf::findim::{group_rb_lift, rrb_pipeline};

fn main() -> posthopf::Result<()> {
    let (g, phi, t) = s3_inverse_instance();
    let r = group_rb_lift(&g, &g, &phi, &t)?;
    let a = r.k.e(1);
    let b = r.k.e(3);
    println!("{} ∗_T {} = {}", r.k.show(&a), r.k.show(&b), r.k.show(&r.star(&a, &b)));
    println!("{}", rrb_pipeline(&r)?);

    // the identity map is not an operator for the conjugation action
    let id: Vec<usize> = (0..g.order()).collect();
    if let Some((h, k)) = group_rb_witness(&g, &g, &phi, &id) {
        println!("T = id fails at h = {}, k = {}", g.elements[h], g.elements[k]);
    }
    println!("{}", group_rb_lift(&g, &g, &phi, &id).unwrap_err());
    Ok(())
}
