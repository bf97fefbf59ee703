//! Radii of convexity of normalized Lommel and Struve functions.
//!
//! The crate evaluates the Lommel function s_{μ−1/2,1/2} and the Struve
//! function **H**_ν together with their first two derivatives ([`specfun`]),
//! tabulates the positive zeros of both functions and their derivatives with
//! interlacing certificates ([`zeros`]), solves for the radius of convexity
//! of the six classical normalizations under a convexity order α ∈ [0,1)
//! ([`radius`]), and cross-checks everything against independent integral
//! representations and a boundary-disk certification ([`verify`]).
//!
//! Start with the examples directory: each file is a runnable walkthrough of
//! one capability (`cargo run --example radius`, etc.).  The `convexity-radii`
//! binary exposes the same operations as JSON-emitting subcommands.

mod dd;

pub mod cli;
pub mod error;
pub mod family;
pub mod output;
pub mod radius;
pub mod specfun;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use family::{FamilySpec, NormKind};
