use crate::entropy::EntropySpec;
use crate::error::{param, Result};
use crate::group_log::GroupFunction;

use super::report::PropertyReport;

/// Relative drift allowed for `S/N` between `N = 1e5` and `N = 1e6`.
pub const POWER_LAW_DRIFT_TOL: f64 = 1e-3;
/// Relative error allowed for the round trip `S(uniform over W(N))/N = λ`.
pub const ROUND_TRIP_TOL: f64 = 1e-9;
/// Largest `N` probed when validating a growth law.
pub const GROWTH_HORIZON: f64 = 1e4;
/// Below this, `W(N)` is rounded to an integer count of states.
const ROUNDING_LIMIT: f64 = 1e15;
const VALIDITY_SAMPLES: usize = 200;

/// Phase-space growth `W(N)`.
#[derive(Clone, Debug, PartialEq)]
pub enum GrowthLaw {
    /// `W(N) = N^ρ`.
    PowerLaw { rho: f64 },
    /// `W(N) = e^{λN}`.
    Exponential { lambda: f64 },
    /// `W(N) = [exp_G((1-α)λN)]^{1/(1-α)}`.
    GroupSolved { g: GroupFunction, alpha: f64, lambda: f64 },
}

impl GrowthLaw {
    /// `ln W(N)`; working in logarithms keeps large `N` finite.
    pub fn ln_w(&self, n: f64) -> Result<f64> {
        match self {
            GrowthLaw::PowerLaw { rho } => Ok(rho * n.ln()),
            GrowthLaw::Exponential { lambda } => Ok(lambda * n),
            GrowthLaw::GroupSolved { g, alpha, lambda } => {
                let c = 1.0 - alpha;
                Ok(g.inverse(c * lambda * n)? / c)
            }
        }
    }

    pub fn w(&self, n: f64) -> Result<f64> {
        Ok(self.ln_w(n)?.exp())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthSolution {
    pub law: GrowthLaw,
    /// `W` is real and increasing on every sampled `N ∈ [1, horizon]`.
    pub valid: bool,
    /// Where `(1-α)λN` leaves the range of `G`, if it does at all.
    pub max_valid_n: Option<f64>,
    pub horizon: f64,
}

impl GrowthSolution {
    pub fn is_restricted(&self) -> bool {
        self.max_valid_n.is_some()
    }
}

/// Solves `S(uniform over W(N)) = λN` for `W` in a Z-family member (or the
/// Boltzmann entropy).
pub fn solve_growth_law(spec: &EntropySpec, lambda: f64) -> Result<GrowthSolution> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(param(format!("growth rate lambda must be positive, got {lambda}")));
    }
    let (law, max_valid_n) = match spec {
        EntropySpec::Boltzmann | EntropySpec::Renyi { .. } => (GrowthLaw::Exponential { lambda }, None),
        _ if spec.is_z_family() => {
            let g = spec.group_function().ok_or_else(|| param("missing G"))?;
            let alpha = spec.alpha().unwrap_or(f64::NAN);
            let c = 1.0 - alpha;
            let (lo, hi) = g.range();
            let bound = if c > 0.0 { hi } else { lo };
            let max_n = bound.is_finite().then(|| bound / (c * lambda));
            (GrowthLaw::GroupSolved { g, alpha, lambda }, max_n)
        }
        _ => return Err(param(format!("growth laws are solved for Z-family members only, not {}", spec.name()))),
    };

    let mut valid = true;
    let mut previous = f64::NEG_INFINITY;
    for k in 0..VALIDITY_SAMPLES {
        let n = GROWTH_HORIZON.powf(k as f64 / (VALIDITY_SAMPLES - 1) as f64);
        match law.ln_w(n) {
            Ok(v) if v.is_finite() && v > previous => previous = v,
            _ => {
                valid = false;
                break;
            }
        }
    }
    Ok(GrowthSolution { law, valid, max_valid_n, horizon: GROWTH_HORIZON })
}

/// `S(uniform over W(N))/N`, with `W(N)` rounded to the nearest integer `>= 1`
/// while it is below `1e15`.
pub fn extensivity_round_trip(spec: &EntropySpec, law: &GrowthLaw, n: f64) -> Result<f64> {
    let mut ln_w = law.ln_w(n)?;
    if ln_w < ROUNDING_LIMIT.ln() {
        ln_w = ln_w.exp().round().max(1.0).ln();
    }
    Ok(spec.uniform_value(ln_w)? / n)
}

/// As [`extensivity_round_trip`] but with the real-valued `W(N)`.
pub fn extensivity_round_trip_exact(spec: &EntropySpec, law: &GrowthLaw, n: f64) -> Result<f64> {
    Ok(spec.uniform_value(law.ln_w(n)?)? / n)
}

/// `q* = 1 - 1/(aρ)`, the index making `S_(a,q)` extensive on `W(N) = N^ρ`.
pub fn tsallis_qstar(a: f64, rho: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(param(format!("q* needs a > 0, got {a}")));
    }
    if !(rho > 1.0 && rho.is_finite()) {
        return Err(param(format!("q* needs rho > 1, got {rho}")));
    }
    Ok(1.0 - 1.0 / (a * rho))
}

/// Relative change of `S_(a,q*)(uniform over N^ρ)/N` between `n1` and `n2`.
pub fn tsallis_power_law_drift(a: f64, rho: f64, n1: f64, n2: f64) -> Result<f64> {
    let spec = EntropySpec::tsallis_aq(a, tsallis_qstar(a, rho)?)?;
    let law = GrowthLaw::PowerLaw { rho };
    let s1 = spec.uniform_value(law.ln_w(n1)?)? / n1;
    let s2 = spec.uniform_value(law.ln_w(n2)?)? / n2;
    Ok((s2 - s1).abs() / s1.abs())
}

/// Extensivity suite. Z-family members (and Boltzmann): validity of the
/// solved growth law (report-only when the domain is restricted) and the
/// round trip at the largest probed `N ∈ {1, 10, 100, 1000, 10000}` inside the
/// valid domain, asserted for real-valued `W(N)` and report-only with `W(N)`
/// rounded to an integer (rounding shifts `S/N` by about `1/W`).
/// `S_(a,q)` with `q < 1, a(1-q) < 1`: the power-law drift at
/// `ρ = 1/(a(1-q))`. Other entropies yield no reports.
pub fn check_extensivity(spec: &EntropySpec, lambda: f64) -> Result<Vec<PropertyReport>> {
    let label = spec.to_string();
    if let EntropySpec::TsallisAQ { a, q } = *spec {
        if q < 1.0 && a * (1.0 - q) < 1.0 {
            let rho = 1.0 / (a * (1.0 - q));
            let mut report = PropertyReport::new("extensivity_power_law", label, POWER_LAW_DRIFT_TOL, 0);
            report.record(tsallis_power_law_drift(a, rho, 1e5, 1e6)?, || format!("rho={rho}, N=1e5..1e6"));
            return Ok(vec![report]);
        }
        return Ok(vec![]);
    }
    if !(spec.is_z_family() || *spec == EntropySpec::Boltzmann) {
        return Ok(vec![]);
    }

    let solution = solve_growth_law(spec, lambda)?;
    let mut validity = PropertyReport::new("growth_law_valid", label.clone(), 0.0, 0);
    validity.record(if solution.valid { 0.0 } else { 1.0 }, || format!("max_valid_n={:?}", solution.max_valid_n));
    if solution.is_restricted() {
        validity = validity.report_only();
    }

    let limit = solution.max_valid_n.map_or(f64::INFINITY, |n| 0.9 * n);
    let n = [1e4, 1e3, 1e2, 1e1, 1.0].into_iter().find(|&n| n <= limit);
    let run = |property: &str, f: fn(&EntropySpec, &GrowthLaw, f64) -> Result<f64>| {
        let mut report = PropertyReport::new(property, label.clone(), ROUND_TRIP_TOL, 0);
        match n.map(|n| (n, f(spec, &solution.law, n))) {
            Some((n, Ok(s_per_n))) => {
                report.record((s_per_n - lambda).abs() / lambda, || format!("N={n}, lambda={lambda}"))
            }
            _ => report.skip(),
        }
        report
    };
    let exact = run("extensivity_round_trip", extensivity_round_trip_exact);
    let integer = run("extensivity_round_trip_integer_w", extensivity_round_trip).report_only();
    Ok(vec![validity, exact, integer])
}
