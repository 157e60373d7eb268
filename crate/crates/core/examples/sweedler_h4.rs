//! Sweedler's four-dimensional Hopf algebra with the family of post-Hopf
//! products ▷_a, their convolution inverses and the rescaling isomorphisms.

use posthopf::findim::post::{check_posthopf_iso, h4_scaling, verify_post_hopf_solved};
use posthopf::findim::{convolution_inverse, sweedler_h4, verify_hopf};
use posthopf::kernel::{int, rat};

fn main() -> posthopf::Result<()> {
    let (h, t1) = sweedler_h4(&int(1));
    println!("{}", verify_hopf(&h));
    let x = h.e(2);
    println!("Δ(x) = {}", h.show2(&h.coproduct(&x)));
    println!("S(gx) = {}", h.show(&h.antipode(&h.e(3))));

    for a in [int(0), int(1), int(2), int(-3), rat(1, 2)] {
        let (_, t) = sweedler_h4(&a);
        let inv = convolution_inverse(&h, &t).expect("▷_a is invertible");
        let self_inverse = inv == t;
        let pass = verify_post_hopf_solved(&h, &t).pass;
        print!("a = {a}: axioms {}, inverse is ▷_a itself: {self_inverse}", if pass { "hold" } else { "fail" });
        if a != int(0) {
            let iso = check_posthopf_iso(&h4_scaling(&a), (&h, &t), (&h, &t1));
            print!(", x ↦ ax onto ▷_1: {}", iso.pass);
        }
        println!();
    }
    Ok(())
}
