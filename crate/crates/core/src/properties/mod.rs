//! Randomized and deterministic verification of composability, the
//! Shannon-Khinchin axioms, Schur concavity and extensivity.
//!
//! Every randomized check is driven by a seeded [`rand_chacha::ChaCha8Rng`]
//! and records its seed in the resulting [`PropertyReport`]; trials run in
//! order so that a report is a pure function of its inputs.

mod composability;
mod extensivity;
mod report;
pub mod sampling;
mod schur;
mod sk;

pub use composability::{
    check_composability, check_composability_random_params, check_composability_uniform, check_group_axioms_numeric,
    FamilyKind,
};
pub use extensivity::{
    check_extensivity, extensivity_round_trip, extensivity_round_trip_exact, solve_growth_law, tsallis_power_law_drift,
    tsallis_qstar, GrowthLaw, GrowthSolution,
};
pub use report::PropertyReport;
pub use schur::{check_schur_concavity, generate_majorization_pair, majorizes, MajorizationPair};
pub use sk::{check_concavity, check_concavity_region_saq, check_sk_axioms, search_saq_concavity_counterexample};

use crate::entropy::EntropySpec;
use crate::error::Result;

/// What the checks need from an entropy: a value on raw vectors and a claimed
/// composition law.
pub trait Entropy {
    fn label(&self) -> String;

    /// Value of the defining formula on a nonnegative vector (normalization not checked).
    fn value_raw(&self, p: &[f64]) -> Result<f64>;

    /// The claimed `Φ` with `S(A ∪ B) = Φ(S(A), S(B))`.
    fn compose(&self, x: f64, y: f64) -> Result<f64>;
}

impl Entropy for EntropySpec {
    fn label(&self) -> String {
        self.to_string()
    }

    fn value_raw(&self, p: &[f64]) -> Result<f64> {
        EntropySpec::value_raw(self, p)
    }

    fn compose(&self, x: f64, y: f64) -> Result<f64> {
        EntropySpec::compose(self, x, y)
    }
}

/// Trace-form control `Σ p_i² ln(1/p_i)` that claims additivity. It is
/// symmetric, expansible and zero on deltas, but not composable, so a
/// composability check must reject it.
#[derive(Clone, Copy, Debug, Default)]
pub struct NonComposableControl;

impl Entropy for NonComposableControl {
    fn label(&self) -> String {
        "control(sum p^2 ln 1/p)".into()
    }

    fn value_raw(&self, p: &[f64]) -> Result<f64> {
        Ok(p.iter().filter(|&&x| x > 0.0).map(|x| -x * x * x.ln()).sum())
    }

    fn compose(&self, x: f64, y: f64) -> Result<f64> {
        Ok(x + y)
    }
}
