//! Group entropies built from formal group laws.
//!
//! The crate is organised bottom-up:
//!
//! - [`formal_series`]: exact rational power series, reversion and the
//!   Lazard construction `Ψ(x,y) = G(G⁻¹(x) + G⁻¹(y))`.
//! - [`group_log`]: evaluatable group functions `G`, logarithms
//!   `ln_G(x) = G(γ ln x)`, exponentials and group laws `χ`.
//! - [`entropy`]: Z-entropies, trace-form entropies and their composition laws.
//! - [`properties`]: randomized and deterministic verification of
//!   composability, Shannon-Khinchin axioms, Schur concavity and extensivity.
//! - [`quantum`]: density matrices, quantum Z-entropies, Dicke states and the
//!   LMG block-entropy asymptotics.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod entropy;
pub mod error;
pub mod formal_series;
pub mod group_log;
pub mod properties;
pub mod quantum;

pub use error::{Error, Result};
