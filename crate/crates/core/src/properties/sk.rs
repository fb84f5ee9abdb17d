use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{fmt_vec, PropertyReport};
use super::sampling::{random_distribution, random_interior_distribution};
use crate::entropy::{raw_power_sum, Distribution, EntropySpec};

/// Slack for the maximum-on-uniform and concavity inequalities.
pub const SK_SLACK: f64 = 1e-12;
const CONTINUITY_STEP: f64 = 1e-7;
const MAX_W: usize = 6;

/// Shannon-Khinchin checks: a continuity proxy (report-only; the worst
/// observed Lipschitz ratio is the residual), maximum on the uniform
/// distribution, exact expansibility, and the concavity inequality.
/// `trials` samples are drawn for each `W ∈ {2..6}`.
///
/// The concavity sub-report is only asserted in the concave regime.
pub fn check_sk_axioms(spec: &EntropySpec, trials: usize, seed: u64) -> Vec<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let label = spec.to_string();
    let mut continuity = PropertyReport::new("sk_continuity", label.clone(), f64::INFINITY, seed);
    let mut maximum = PropertyReport::new("sk_maximum_on_uniform", label.clone(), SK_SLACK, seed);
    let mut expansible = PropertyReport::new("sk_expansibility", label, 0.0, seed);

    for w in 2..=MAX_W {
        let s_uniform = match spec.value(&Distribution::uniform(w).expect("w >= 1")) {
            Ok(s) => s,
            Err(_) => {
                maximum.skip();
                continue;
            }
        };
        for _ in 0..trials {
            let p = random_distribution(&mut rng, w);
            let Ok(s) = spec.value(&p) else {
                maximum.skip();
                expansible.skip();
                continue;
            };
            maximum.record((s - s_uniform) / (1.0 + s_uniform.abs()), || fmt_vec(p.probs()));
            match spec.value(&p.with_zero_appended()) {
                Ok(s0) => expansible.record((s0 - s).abs(), || fmt_vec(p.probs())),
                Err(_) => expansible.skip(),
            }

            let q = random_interior_distribution(&mut rng, w, 1e-3);
            let (i, j) = distinct_pair(&mut rng, w);
            let mut moved = q.probs().to_vec();
            moved[i] -= CONTINUITY_STEP;
            moved[j] += CONTINUITY_STEP;
            match (spec.value_raw(q.probs()), spec.value_raw(&moved)) {
                (Ok(a), Ok(b)) => {
                    let ratio = (a - b).abs() / (2.0 * CONTINUITY_STEP);
                    continuity.record(ratio, || fmt_vec(q.probs()));
                }
                _ => continuity.skip(),
            }
        }
    }
    let mut concavity = check_concavity(spec, trials, seed.wrapping_add(1));
    if spec.regime() != crate::entropy::Regime::Concave {
        concavity = concavity.report_only();
    }
    vec![continuity.report_only(), maximum, expansible, concavity]
}

/// `λ S(p) + (1-λ) S(r) <= S(λp + (1-λ)r) + 1e-12` on random triples with `W ∈ {2..6}`.
pub fn check_concavity(spec: &EntropySpec, trials: usize, seed: u64) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropertyReport::new("concavity", spec.to_string(), SK_SLACK, seed);
    for _ in 0..trials {
        let w = rng.random_range(2..=MAX_W);
        let p = random_distribution(&mut rng, w);
        let r = random_distribution(&mut rng, w);
        let lambda: f64 = rng.random();
        let mixed = p.mix(&r, lambda).expect("same support size");
        match (spec.value(&p), spec.value(&r), spec.value(&mixed)) {
            (Ok(a), Ok(b), Ok(m)) => {
                let gap = lambda * a + (1.0 - lambda) * b - m;
                report.record(gap, || format!("p={}; r={}; lambda={lambda:e}", fmt_vec(p.probs()), fmt_vec(r.probs())));
            }
            _ => report.skip(),
        }
    }
    report
}

/// Parameter region where `S_(a,q)` is concave: `q < 1, 0 < a < 1/(1-q)` or `q > 1, a > 0`.
pub fn check_concavity_region_saq(a: f64, q: f64) -> bool {
    (q < 1.0 && a > 0.0 && a < 1.0 / (1.0 - q)) || (q > 1.0 && a > 0.0)
}

/// Searches for a violation of the concavity inequality of the raw formula
/// `(1 - Σ p^{a(q-1)+1})/(q-1)`, for any `(a, q)` with `q != 1`. Each found
/// violation counts as a failure; the report is never asserted.
pub fn search_saq_concavity_counterexample(a: f64, q: f64, trials: usize, seed: u64) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let label = format!("raw S_(a,q)(a={a},q={q})");
    let mut report = PropertyReport::new("saq_concavity", label, SK_SLACK, seed);
    let q_prime = a * (q - 1.0) + 1.0;
    let s = |p: &[f64]| (1.0 - raw_power_sum(p, q_prime)) / (q - 1.0);
    for _ in 0..trials {
        let w = rng.random_range(2..=MAX_W);
        let p = random_interior_distribution(&mut rng, w, 1e-3);
        let r = random_interior_distribution(&mut rng, w, 1e-3);
        let lambda: f64 = rng.random();
        let mixed = p.mix(&r, lambda).expect("same support size");
        let gap = lambda * s(p.probs()) + (1.0 - lambda) * s(r.probs()) - s(mixed.probs());
        report.record(gap, || format!("p={}; r={}; lambda={lambda:e}", fmt_vec(p.probs()), fmt_vec(r.probs())));
    }
    report.report_only()
}

fn distinct_pair<R: Rng>(rng: &mut R, w: usize) -> (usize, usize) {
    let i = rng.random_range(0..w);
    let j = (i + rng.random_range(1..w)) % w;
    (i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sk_axioms_hold_for_concave_members() {
        for spec in [
            EntropySpec::renyi(0.5).unwrap(),
            EntropySpec::z_k(0.3, 0.5).unwrap(),
            EntropySpec::z_q(1.4, 0.3).unwrap(),
            EntropySpec::z_ab(0.3, -0.2, 0.5).unwrap(),
        ] {
            for report in check_sk_axioms(&spec, 100, 4) {
                assert!(report.ok(), "{report:?}");
                assert!(report.worst_residual.is_finite());
            }
        }
    }

    #[test]
    fn saq_regions() {
        assert!(check_concavity_region_saq(1.5, 0.5));
        assert!(check_concavity_region_saq(7.0, 2.0));
        assert!(!check_concavity_region_saq(3.0, 0.5));
    }

    #[test]
    fn counterexample_found_outside_region() {
        let inside = search_saq_concavity_counterexample(1.5, 0.5, 300, 1);
        assert_eq!(inside.failures, 0);
        let outside = search_saq_concavity_counterexample(3.0, 0.5, 300, 1);
        assert!(outside.failures > 0);
        assert!(!outside.asserted);
    }
}
