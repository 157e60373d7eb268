//! Finite-dimensional Hopf algebras given by structure constants, and the
//! constructions built on them.

pub mod hopf;
pub mod matched;
pub mod post;
pub mod rrb;

pub use hopf::{group_algebra, verify_hopf, FinDimHopf, FiniteGroup, HopfParts, Vector, Vector2};
pub use matched::{double_crossproduct, matched_pair_from_rrb, rrb_pipeline, twist_check};
pub use post::{convolution_inverse, h4, h4_post, sweedler_h4, verify_post_hopf_findim, PostTable};
pub use rrb::{group_rb_lift, verify_rrb, RelativeRb, RrbJson};
