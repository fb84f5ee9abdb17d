use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::report::{fmt_vec, PropertyReport};
use super::sampling::random_distribution;
use super::Entropy;
use crate::entropy::{composition_phi, product_distribution, EntropySpec};
use crate::error::Result;
use crate::group_log::GroupFunction;

/// Families whose parameters [`check_composability_random_params`] can draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Renyi,
    ZQAlpha,
    ZKAlpha,
    ZAB,
    TsallisAQ,
    LandsbergVedral,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Renyi,
        FamilyKind::ZQAlpha,
        FamilyKind::ZKAlpha,
        FamilyKind::ZAB,
        FamilyKind::TsallisAQ,
        FamilyKind::LandsbergVedral,
    ];

    /// Draws admissible parameters, staying a little away from excluded points.
    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R) -> EntropySpec {
        let alpha = |rng: &mut R| rng.random_range(0.05..0.95);
        let q_away_from_one = |rng: &mut R| loop {
            let q: f64 = rng.random_range(0.1..2.5);
            if (q - 1.0).abs() > 0.02 {
                break q;
            }
        };
        let spec = match self {
            FamilyKind::Renyi => {
                let a = if rng.random_bool(0.5) { alpha(rng) } else { rng.random_range(1.05..3.0) };
                EntropySpec::renyi(a)
            }
            FamilyKind::ZQAlpha => {
                let q = q_away_from_one(rng);
                EntropySpec::z_q(q, alpha(rng))
            }
            FamilyKind::ZKAlpha => {
                let k = loop {
                    let k: f64 = rng.random_range(-0.95..0.95);
                    if k.abs() > 0.02 {
                        break k;
                    }
                };
                EntropySpec::z_k(k, alpha(rng))
            }
            FamilyKind::ZAB => {
                let (a, b) = loop {
                    let a: f64 = rng.random_range(0.05..1.5);
                    let b: f64 = rng.random_range(-1.0..1.0);
                    if (a - b).abs() > 0.05 {
                        break (a, b);
                    }
                };
                EntropySpec::z_ab(a, b, alpha(rng))
            }
            FamilyKind::TsallisAQ => loop {
                let q = q_away_from_one(rng);
                let a: f64 = rng.random_range(0.1..3.0);
                if a * (q - 1.0) + 1.0 > 0.05 {
                    break EntropySpec::tsallis_aq(a, q);
                }
            },
            FamilyKind::LandsbergVedral => EntropySpec::landsberg_vedral(q_away_from_one(rng)),
        };
        spec.expect("sampled parameters are admissible")
    }
}

/// One composability trial; `None` when the claimed `Φ` cannot be evaluated.
fn composability_trial<E: Entropy, R: Rng>(entropy: &E, rng: &mut R, report: &mut PropertyReport) {
    let wa = rng.random_range(1..=8);
    let wb = rng.random_range(1..=8);
    let p = random_distribution(rng, wa);
    let r = random_distribution(rng, wb);
    let joint = product_distribution(&p, &r);
    let outcome = (|| -> Result<(f64, f64)> {
        let s_p = entropy.value_raw(p.probs())?;
        let s_r = entropy.value_raw(r.probs())?;
        let s_joint = entropy.value_raw(joint.probs())?;
        let phi = entropy.compose(s_p, s_r)?;
        Ok((s_joint, phi))
    })();
    match outcome {
        Ok((s_joint, phi)) => {
            let residual = (s_joint - phi).abs() / (1.0 + s_joint.abs());
            report.record(residual, || {
                format!("{}; p={}; r={}", entropy.label(), fmt_vec(p.probs()), fmt_vec(r.probs()))
            });
        }
        Err(_) => report.skip(),
    }
}

/// `|S(p⊗r) - Φ(S(p), S(r))| <= tol·(1 + |S(p⊗r)|)` on random pairs with
/// `W_A, W_B ∈ [1, 8]`.
pub fn check_composability<E: Entropy>(entropy: &E, trials: usize, tol: f64, seed: u64) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropertyReport::new("composability", entropy.label(), tol, seed);
    for _ in 0..trials {
        composability_trial(entropy, &mut rng, &mut report);
    }
    report
}

/// As [`check_composability`], drawing fresh admissible parameters for every trial.
pub fn check_composability_random_params(family: FamilyKind, trials: usize, tol: f64, seed: u64) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let label = format!("{family:?} (random parameters)");
    let mut report = PropertyReport::new("composability", label, tol, seed);
    for _ in 0..trials {
        let spec = family.sample(&mut rng);
        composability_trial(&spec, &mut rng, &mut report);
    }
    report
}

/// Composability restricted to uniform distributions. Weaker than the full
/// check: some non-composable entropies pass it. Report-only.
pub fn check_composability_uniform<E: Entropy>(entropy: &E, max_w: usize, tol: f64) -> PropertyReport {
    let mut report = PropertyReport::new("composability_uniform", entropy.label(), tol, 0);
    let uniform = |w: usize| vec![1.0 / w as f64; w];
    for wa in 1..=max_w {
        for wb in 1..=max_w {
            let outcome = (|| -> Result<(f64, f64)> {
                let s_joint = entropy.value_raw(&uniform(wa * wb))?;
                let phi = entropy.compose(entropy.value_raw(&uniform(wa))?, entropy.value_raw(&uniform(wb))?)?;
                Ok((s_joint, phi))
            })();
            match outcome {
                Ok((s_joint, phi)) => {
                    let residual = (s_joint - phi).abs() / (1.0 + s_joint.abs());
                    report.record(residual, || format!("W_A={wa}, W_B={wb}"));
                }
                Err(_) => report.skip(),
            }
        }
    }
    report.report_only()
}

/// Numerical identity, commutativity and associativity of
/// `Φ(x, y) = χ((1-α)x, (1-α)y)/(1-α)` on random arguments in the range of `G`.
/// Returns one report per axiom.
pub fn check_group_axioms_numeric(
    g: &GroupFunction,
    alpha: f64,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Vec<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subject = format!("Phi[{}](alpha={alpha})", g.name());
    let mut identity = PropertyReport::new("phi_identity", subject.clone(), tol, seed);
    let mut commutativity = PropertyReport::new("phi_commutativity", subject.clone(), tol, seed);
    let mut associativity = PropertyReport::new("phi_associativity", subject, tol, seed);

    let (t_lo, t_hi) = g.increasing_domain();
    let (t_lo, t_hi) = (t_lo.max(-2.0), t_hi.min(2.0));
    let c = 1.0 - alpha;
    let phi = |x: f64, y: f64| composition_phi(g, alpha, x, y);
    let rel = |a: f64, b: f64| (a - b).abs() / (1.0 + a.abs().max(b.abs()));

    for _ in 0..trials {
        let mut draw = || -> Result<f64> {
            let t = rng.random_range(t_lo..t_hi) / 3.0;
            Ok(g.eval(t)? / c)
        };
        let (x, y, z) = match (draw(), draw(), draw()) {
            (Ok(x), Ok(y), Ok(z)) => (x, y, z),
            _ => {
                identity.skip();
                commutativity.skip();
                associativity.skip();
                continue;
            }
        };
        let witness = || format!("x={x:e}, y={y:e}, z={z:e}");
        match phi(x, 0.0) {
            Ok(v) => identity.record(rel(v, x), witness),
            Err(_) => identity.skip(),
        }
        match (phi(x, y), phi(y, x)) {
            (Ok(a), Ok(b)) => commutativity.record(rel(a, b), witness),
            _ => commutativity.skip(),
        }
        let left = phi(x, y).and_then(|xy| phi(xy, z));
        let right = phi(y, z).and_then(|yz| phi(x, yz));
        match (left, right) {
            (Ok(a), Ok(b)) => associativity.record(rel(a, b), witness),
            _ => associativity.skip(),
        }
    }
    vec![identity, commutativity, associativity]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::NonComposableControl;

    #[test]
    fn every_family_composes() {
        for family in FamilyKind::ALL {
            let report = check_composability_random_params(family, 200, 1e-10, 11);
            assert!(report.passed, "{report:?}");
            assert_eq!(report.skipped, 0, "{report:?}");
        }
    }

    #[test]
    fn control_is_rejected_with_witness() {
        let report = check_composability(&NonComposableControl, 50, 1e-10, 5);
        assert!(!report.passed);
        assert!(report.witness.is_some());
    }

    #[test]
    fn numeric_axioms_hold_for_known_laws() {
        for g in [
            GroupFunction::Identity,
            GroupFunction::multiplicative(0.6).unwrap(),
            GroupFunction::kaniadakis(0.4).unwrap(),
            GroupFunction::abel(0.8, -0.3).unwrap(),
            GroupFunction::abel(1.2, 0.4).unwrap(),
        ] {
            for report in check_group_axioms_numeric(&g, 0.5, 200, 1e-10, 2) {
                assert!(report.passed, "{report:?}");
            }
        }
    }

    #[test]
    fn same_seed_same_report() {
        let spec = EntropySpec::z_k(0.3, 0.4).unwrap();
        assert_eq!(check_composability(&spec, 100, 1e-10, 9), check_composability(&spec, 100, 1e-10, 9));
    }
}
