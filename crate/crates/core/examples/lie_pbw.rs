//! A relative Rota-Baxter operator on a Lie algebra, its post-Lie product,
//! and the lift to truncated enveloping algebras.

use posthopf::liepbw::{liepbw_pipeline, LieRb, Mono, TruncUea, UeaLift};
use posthopf::LinComb;

fn main() -> posthopf::Result<()> {
    let r = LieRb::nonabelian2();
    let u = TruncUea::new(r.g.clone(), 3)?;
    let e2e1 = u.mul(&LinComb::basis(Mono(vec![1])), &LinComb::basis(Mono(vec![0])))?;
    println!("e2 e1 = {}", u.show(&e2e1));
    println!("S(e1 e2) = {}", u.show(&u.antipode(&LinComb::basis(Mono(vec![0, 1])))));

    let lift = UeaLift::new(&r, 3)?;
    for m in [Mono(vec![0]), Mono(vec![1, 1]), Mono(vec![0, 1])] {
        println!("T̄({}) = {}", u.show(&LinComb::basis(m.clone())), u.show(&lift.tbar_basis(&m)));
    }
    println!("{}", liepbw_pipeline(&r, 3)?);
    println!("heisenberg: {}", liepbw_pipeline(&LieRb::heisenberg(), 3)?.pass);
    println!("T = id: {}", liepbw_pipeline(&LieRb::nonabelian2_broken(), 2)?.pass);
    Ok(())
}
