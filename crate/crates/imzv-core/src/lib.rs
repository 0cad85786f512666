//! Exact algebra of interpolated multiple zeta values.
//!
//! The crate implements, over exact rationals, the index calculus behind
//! Ohno-type relations (duals, Hoffman duals, exponent shifts), the
//! interpolation kernels that tie multiple zeta values to their star
//! variants, the noncommutative word algebra realizing those kernels as
//! generating functions, and two concrete realizations used to verify the
//! relations on instances: multiple harmonic sums modulo a prime and
//! truncated real sums.
//!
//! The crate is `no_std`-compatible (`default-features = false`); it only
//! needs `alloc`. All values are immutable and all operations are pure, so
//! everything here can be fanned out across threads freely.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bernoulli;
pub mod finite;
pub mod genfun;
pub mod index;
pub mod index_sum;
pub mod interp;
pub mod numeric;
pub mod poly;
pub mod rat;
pub mod relations;
pub mod words;

pub use index::{ExpVector, Index, IndexError};
pub use index_sum::IndexSum;
pub use poly::{ModPPoly, RatPoly};
pub use rat::Rat;
