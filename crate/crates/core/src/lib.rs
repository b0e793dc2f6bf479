//! Exact Shapley values for linearly representable TU games.
//!
//! A game is linearly representable when every player `j` carries a weight
//! `a_j` and the worth of a coalition is `f(Σ_{j∈S} a_j)`. Weighted voting,
//! bankruptcy and liability games are of this form. For such games the
//! Shapley value is the integral over `x ∈ [0, 1]` of the expected marginal
//! contribution to a random coalition in which every other player joins
//! independently with probability `x`. The distribution of the coalition's
//! total weight is a row of integer polynomials in `x`, built by a
//! pseudo-polynomial dynamic program ([`engine::dp_forward_step`]).
//!
//! * [`Engine::shapley_single`] runs one forward pass for one player.
//! * [`Engine::shapley_all`] runs one pass over everybody (the *base
//!   polynomials*) and removes each player again with
//!   [`engine::dp_revert_step`].
//! * [`Engine::shapley_all_generalized`] handles games where a coalition's
//!   state is folded with an arbitrary update, e.g. the running maximum of
//!   airport games.
//! * [`oracle`] has the brute-force definitions for cross-checking.
//!
//! All arithmetic is exact. The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod engine;
pub mod exactpoly;
pub mod game;
pub mod oracle;

pub use engine::{DpRow, Engine, EngineError, ShapleyResult};
pub use exactpoly::{IntPoly, NotDivisible, Rational};
pub use game::{GameError, GameFamily, GeneralizedGame, LinearGame, StateUpdate};
pub use num_bigint::BigInt;
