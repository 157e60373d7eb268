//! Exact computer algebra for post-Hopf algebras.
//!
//! The crate works over the rationals throughout. Its layers, bottom up:
//!
//! - [`kernel`] and [`linalg`]: sparse linear combinations over canonical
//!   basis keys and exact Gaussian elimination.
//! - [`trees`] and [`coshuffle`]: planar and non-planar rooted trees with
//!   grafting and `B±`, and the word Hopf algebra over a tree alphabet.
//! - [`posthopf`]: the post-Hopf product extended from a magma, the
//!   Grossman-Larson product and its antipode, and the axiom suites.
//! - [`ybe`]: the right action and the Yang-Baxter operator built from a
//!   post-Hopf algebra.
//! - [`findim`]: structure-constant Hopf algebras, Sweedler's algebra,
//!   relative Rota-Baxter operators, smash products and matched pairs.
//! - [`liepbw`]: Lie algebras, truncated enveloping algebras and the lift of
//!   a Lie relative Rota-Baxter operator to them.
//! - [`cli`]: the `posthopf` command.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod cli;
pub mod coshuffle;
pub mod error;
pub mod findim;
pub mod json;
pub mod kernel;
pub mod liepbw;
pub mod linalg;
pub mod posthopf;
pub mod report;
pub mod trees;
pub mod ybe;

pub use error::{Error, Result};
pub use kernel::{LinComb, Rational, Tensor, Tensor3};
pub use report::Report;
