//! Classical entropy functionals over finite distributions and their
//! composition laws `Φ`.
//!
//! All values are in nats. Zero-probability outcomes are skipped in every
//! power sum (`0^α := 0`), which makes expansibility hold exactly.

use std::fmt;

use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::group_log::GroupFunction;

/// Tolerance on `|Σ p_i - 1|` accepted by [`Distribution::new`].
pub const DISTRIBUTION_TOL: f64 = 1e-12;

/// A finite probability vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Distribution {
    p: Vec<f64>,
}

impl Distribution {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        Self::check_entries(&p)?;
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > DISTRIBUTION_TOL {
            return Err(Error::Distribution(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Distribution { p })
    }

    /// Like [`Distribution::new`] but rescales any positive total to 1.
    pub fn renormalized(mut p: Vec<f64>) -> Result<Self> {
        Self::check_entries(&p)?;
        let total: f64 = p.iter().sum();
        if !(total > 0.0) {
            return Err(Error::Distribution("probabilities sum to zero".into()));
        }
        p.iter_mut().for_each(|x| *x /= total);
        Ok(Distribution { p })
    }

    fn check_entries(p: &[f64]) -> Result<()> {
        if p.is_empty() {
            return Err(Error::Distribution("empty distribution".into()));
        }
        if let Some(x) = p.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
            return Err(Error::Distribution(format!("invalid probability {x}")));
        }
        Ok(())
    }

    pub fn uniform(w: usize) -> Result<Self> {
        if w == 0 {
            return Err(Error::Distribution("uniform distribution needs W >= 1".into()));
        }
        Ok(Distribution { p: vec![1.0 / w as f64; w] })
    }

    /// All mass on the first of `w` outcomes.
    pub fn delta(w: usize) -> Result<Self> {
        if w == 0 {
            return Err(Error::Distribution("delta distribution needs W >= 1".into()));
        }
        let mut p = vec![0.0; w];
        p[0] = 1.0;
        Ok(Distribution { p })
    }

    pub fn probs(&self) -> &[f64] {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn with_zero_appended(&self) -> Self {
        let mut p = self.p.clone();
        p.push(0.0);
        Distribution { p }
    }

    /// `λ self + (1-λ) other` for distributions of equal length.
    pub fn mix(&self, other: &Distribution, lambda: f64) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Distribution("mixing distributions of different length".into()));
        }
        let p = self.p.iter().zip(&other.p).map(|(a, b)| lambda * a + (1.0 - lambda) * b).collect();
        Ok(Distribution { p })
    }

    pub(crate) fn from_trusted(p: Vec<f64>) -> Self {
        Distribution { p }
    }
}

/// `Σ p_i^α` over the support.
pub fn power_sum(p: &Distribution, alpha: f64) -> f64 {
    raw_power_sum(p.probs(), alpha)
}

pub(crate) fn raw_power_sum(p: &[f64], alpha: f64) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|x| x.powf(alpha)).sum()
}

/// Outer product distribution of two independent systems, row-major in `(i, j)`.
pub fn product_distribution(p: &Distribution, r: &Distribution) -> Distribution {
    let joint = p.probs().iter().flat_map(|a| r.probs().iter().map(move |b| a * b)).collect();
    Distribution::from_trusted(joint)
}

/// Whether a parameter set lies in the range where concavity is proven (`0 < α < 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Concave,
    NonConcave,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntropyValue {
    pub value: f64,
    pub regime: Regime,
}

/// Entropy family plus validated parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum EntropySpec {
    Boltzmann,
    Renyi { alpha: f64 },
    TsallisAQ { a: f64, q: f64 },
    LandsbergVedral { q: f64 },
    ZGAlpha { g: GroupFunction, alpha: f64 },
    ZQAlpha { q: f64, alpha: f64 },
    ZKAlpha { k: f64, alpha: f64 },
    ZAB { a: f64, b: f64, alpha: f64 },
    AltNewZ { g: GroupFunction, alpha: f64 },
}

fn check_alpha(alpha: f64, family: &'static str) -> Result<()> {
    if alpha == 1.0 {
        return Err(Error::AlphaOne(family));
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(param(format!("{family} needs alpha > 0, got {alpha}")));
    }
    Ok(())
}

impl EntropySpec {
    pub fn renyi(alpha: f64) -> Result<Self> {
        Self::Renyi { alpha }.validated()
    }

    pub fn tsallis_aq(a: f64, q: f64) -> Result<Self> {
        Self::TsallisAQ { a, q }.validated()
    }

    pub fn landsberg_vedral(q: f64) -> Result<Self> {
        Self::LandsbergVedral { q }.validated()
    }

    pub fn z_g(g: GroupFunction, alpha: f64) -> Result<Self> {
        Self::ZGAlpha { g, alpha }.validated()
    }

    pub fn z_q(q: f64, alpha: f64) -> Result<Self> {
        Self::ZQAlpha { q, alpha }.validated()
    }

    pub fn z_k(k: f64, alpha: f64) -> Result<Self> {
        Self::ZKAlpha { k, alpha }.validated()
    }

    pub fn z_ab(a: f64, b: f64, alpha: f64) -> Result<Self> {
        Self::ZAB { a, b, alpha }.validated()
    }

    pub fn alt_z(g: GroupFunction, alpha: f64) -> Result<Self> {
        Self::AltNewZ { g, alpha }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            EntropySpec::Boltzmann => Ok(()),
            EntropySpec::Renyi { alpha } => check_alpha(alpha, "Renyi"),
            EntropySpec::TsallisAQ { a, q } => {
                if !(a > 0.0) || q == 1.0 || !q.is_finite() || !(a * (q - 1.0) + 1.0 > 0.0) {
                    return Err(param(format!("S_(a,q) needs a > 0, q != 1, a(q-1)+1 > 0; got a={a}, q={q}")));
                }
                Ok(())
            }
            EntropySpec::LandsbergVedral { q } => {
                if q == 1.0 || !q.is_finite() {
                    return Err(param(format!("Landsberg-Vedral needs finite q != 1, got {q}")));
                }
                Ok(())
            }
            EntropySpec::ZGAlpha { alpha, .. } => check_alpha(alpha, "Z_(G,alpha)"),
            EntropySpec::AltNewZ { alpha, .. } => check_alpha(alpha, "G(Renyi)"),
            EntropySpec::ZQAlpha { q, alpha } => {
                check_alpha(alpha, "Z_(q,alpha)")?;
                if !(q > 0.0 && q.is_finite()) || q == 1.0 {
                    return Err(param(format!("Z_(q,alpha) needs q > 0, q != 1, got {q}")));
                }
                Ok(())
            }
            EntropySpec::ZKAlpha { k, alpha } => {
                check_alpha(alpha, "Z_(k,alpha)")?;
                if k == 0.0 {
                    return Err(param("Z_(k,alpha) at k = 0 is the Renyi entropy; use renyi"));
                }
                if !(k > -1.0 && k < 1.0) {
                    return Err(param(format!("Z_(k,alpha) needs -1 < k < 1, got {k}")));
                }
                Ok(())
            }
            EntropySpec::ZAB { a, b, alpha } => {
                check_alpha(alpha, "Z_(a,b)")?;
                if !a.is_finite() || !b.is_finite() || a == b {
                    return Err(param(format!("Z_(a,b) needs a != b, got a=b={a}")));
                }
                if !(a > 0.0 || b > 0.0) {
                    return Err(param(format!("Z_(a,b) needs a > 0 or b > 0, got a={a}, b={b}")));
                }
                Ok(())
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EntropySpec::Boltzmann => "boltzmann",
            EntropySpec::Renyi { .. } => "renyi",
            EntropySpec::TsallisAQ { .. } => "tsallis_aq",
            EntropySpec::LandsbergVedral { .. } => "landsberg_vedral",
            EntropySpec::ZGAlpha { .. } => "zg",
            EntropySpec::ZQAlpha { .. } => "zq",
            EntropySpec::ZKAlpha { .. } => "zk",
            EntropySpec::ZAB { .. } => "zab",
            EntropySpec::AltNewZ { .. } => "alt_z",
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match *self {
            EntropySpec::Renyi { alpha }
            | EntropySpec::ZGAlpha { alpha, .. }
            | EntropySpec::ZQAlpha { alpha, .. }
            | EntropySpec::ZKAlpha { alpha, .. }
            | EntropySpec::ZAB { alpha, .. }
            | EntropySpec::AltNewZ { alpha, .. } => Some(alpha),
            _ => None,
        }
    }

    /// `α > 1` members are accepted but carry no concavity guarantee.
    pub fn regime(&self) -> Regime {
        match self.alpha() {
            Some(alpha) if alpha > 1.0 => Regime::NonConcave,
            _ => Regime::Concave,
        }
    }

    /// Whether this is a member of the Z-family `ln_G(Σ p^α)/(1-α)`.
    pub fn is_z_family(&self) -> bool {
        matches!(
            self,
            EntropySpec::Renyi { .. }
                | EntropySpec::ZGAlpha { .. }
                | EntropySpec::ZQAlpha { .. }
                | EntropySpec::ZKAlpha { .. }
                | EntropySpec::ZAB { .. }
        )
    }

    /// Whether the argument handed to `G` at `p` lies where `G` is strictly
    /// increasing. Always true for entropies without a `G`.
    pub fn in_increasing_branch(&self, p: &[f64]) -> bool {
        let (Some(g), Some(alpha)) = (self.group_function(), self.alpha()) else {
            return true;
        };
        let t = match self {
            EntropySpec::AltNewZ { .. } => raw_power_sum(p, alpha).ln() / (1.0 - alpha),
            _ => raw_power_sum(p, alpha).ln(),
        };
        let (lo, hi) = g.increasing_domain();
        t > lo && t < hi
    }

    /// The `G` behind a Z-family member (or the `G` applied by [`EntropySpec::AltNewZ`]).
    pub fn group_function(&self) -> Option<GroupFunction> {
        match self {
            EntropySpec::Renyi { .. } => Some(GroupFunction::Identity),
            EntropySpec::ZGAlpha { g, .. } | EntropySpec::AltNewZ { g, .. } => Some(g.clone()),
            EntropySpec::ZQAlpha { q, .. } => Some(GroupFunction::Multiplicative { q: *q }),
            EntropySpec::ZKAlpha { k, .. } => Some(GroupFunction::Kaniadakis { k: *k }),
            EntropySpec::ZAB { a, b, .. } => Some(GroupFunction::Abel { a: *a, b: *b }),
            _ => None,
        }
    }

    pub fn evaluate(&self, p: &Distribution) -> Result<EntropyValue> {
        Ok(EntropyValue { value: self.value(p)?, regime: self.regime() })
    }

    pub fn value(&self, p: &Distribution) -> Result<f64> {
        self.value_raw(p.probs())
    }

    /// Evaluates the defining formula on an arbitrary nonnegative vector,
    /// without checking normalization (used for finite differences).
    pub fn value_raw(&self, p: &[f64]) -> Result<f64> {
        match self {
            EntropySpec::Boltzmann => Ok(raw_boltzmann(p)),
            EntropySpec::Renyi { alpha } => Ok(raw_power_sum(p, *alpha).ln() / (1.0 - alpha)),
            EntropySpec::TsallisAQ { a, q } => {
                let q_prime = a * (q - 1.0) + 1.0;
                Ok((1.0 - raw_power_sum(p, q_prime)) / (q - 1.0))
            }
            EntropySpec::LandsbergVedral { q } => {
                let sum = raw_power_sum(p, *q);
                Ok((1.0 - sum) / (q - 1.0) / sum)
            }
            EntropySpec::ZGAlpha { .. }
            | EntropySpec::ZQAlpha { .. }
            | EntropySpec::ZKAlpha { .. }
            | EntropySpec::ZAB { .. } => {
                let alpha = self.alpha().unwrap_or(f64::NAN);
                let g = self.group_function().ok_or_else(|| param("missing G"))?;
                Ok(g.eval(raw_power_sum(p, alpha).ln())? / (1.0 - alpha))
            }
            EntropySpec::AltNewZ { g, alpha } => g.eval(raw_power_sum(p, *alpha).ln() / (1.0 - alpha)),
        }
    }

    /// Closed-form value on the uniform distribution over `W = e^{ln_w}` states.
    /// `W` need not be an integer.
    pub fn uniform_value(&self, ln_w: f64) -> Result<f64> {
        match self {
            EntropySpec::Boltzmann => Ok(ln_w),
            EntropySpec::TsallisAQ { a, q } => Ok(-(a * (1.0 - q) * ln_w).exp_m1() / (q - 1.0)),
            EntropySpec::LandsbergVedral { q } => {
                let s_q = -((1.0 - q) * ln_w).exp_m1() / (q - 1.0);
                Ok(s_q / ((1.0 - q) * ln_w).exp())
            }
            EntropySpec::AltNewZ { g, .. } => g.eval(ln_w),
            _ => {
                let alpha = self.alpha().unwrap_or(f64::NAN);
                let g = self.group_function().ok_or_else(|| param("missing G"))?;
                Ok(g.eval((1.0 - alpha) * ln_w)? / (1.0 - alpha))
            }
        }
    }

    /// Composition law `Φ` with `S(A ∪ B) = Φ(S(A), S(B))` for independent `A`, `B`.
    pub fn compose(&self, x: f64, y: f64) -> Result<f64> {
        match self {
            EntropySpec::Boltzmann => Ok(x + y),
            EntropySpec::TsallisAQ { q, .. } => Ok(x + y + (1.0 - q) * x * y),
            EntropySpec::LandsbergVedral { q } => Ok(x + y + (q - 1.0) * x * y),
            EntropySpec::AltNewZ { g, .. } => g.chi(x, y),
            _ => {
                let alpha = self.alpha().unwrap_or(f64::NAN);
                let g = self.group_function().ok_or_else(|| param("missing G"))?;
                composition_phi(&g, alpha, x, y)
            }
        }
    }

    /// Named parameters, for reports.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        let mut out = match *self {
            EntropySpec::Boltzmann => vec![],
            EntropySpec::Renyi { alpha } => vec![("alpha", alpha)],
            EntropySpec::TsallisAQ { a, q } => vec![("a", a), ("q", q)],
            EntropySpec::LandsbergVedral { q } => vec![("q", q)],
            EntropySpec::ZQAlpha { q, alpha } => vec![("q", q), ("alpha", alpha)],
            EntropySpec::ZKAlpha { k, alpha } => vec![("k", k), ("alpha", alpha)],
            EntropySpec::ZAB { a, b, alpha } => vec![("a", a), ("b", b), ("alpha", alpha)],
            EntropySpec::ZGAlpha { alpha, .. } | EntropySpec::AltNewZ { alpha, .. } => vec![("alpha", alpha)],
        };
        if let EntropySpec::ZGAlpha { g, .. } | EntropySpec::AltNewZ { g, .. } = self {
            match *g {
                GroupFunction::Multiplicative { q } => out.push(("q", q)),
                GroupFunction::Kaniadakis { k } => out.push(("k", k)),
                GroupFunction::Abel { a, b } => {
                    out.push(("a", a));
                    out.push(("b", b));
                }
                _ => {}
            }
        }
        out
    }
}

impl fmt::Display for EntropySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        if let EntropySpec::ZGAlpha { g, .. } | EntropySpec::AltNewZ { g, .. } = self {
            write!(f, "[{}]", g.name())?;
        }
        let params = self.params();
        if !params.is_empty() {
            let list: Vec<_> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", list.join(","))?;
        }
        Ok(())
    }
}

fn raw_boltzmann(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|x| -x * x.ln()).sum()
}

/// `Σ p_i ln(1/p_i)`.
pub fn boltzmann(p: &Distribution) -> f64 {
    raw_boltzmann(p.probs())
}

/// `ln(Σ p_i^α)/(1-α)`.
pub fn renyi(alpha: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::renyi(alpha)?.value(p)
}

/// `ln_G(Σ p_i^α)/(1-α)` with `ln_G(x) = G(ln x)`.
pub fn z_entropy(g: &GroupFunction, alpha: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::z_g(g.clone(), alpha)?.value(p)
}

/// `(1 - Σ p_i^{a(q-1)+1})/(q-1)`.
pub fn tsallis_aq(a: f64, q: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::tsallis_aq(a, q)?.value(p)
}

/// `S_q(p)/Σ p_i^q`.
pub fn landsberg_vedral(q: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::landsberg_vedral(q)?.value(p)
}

pub fn z_q_alpha(q: f64, alpha: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::z_q(q, alpha)?.value(p)
}

pub fn z_k_alpha(k: f64, alpha: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::z_k(k, alpha)?.value(p)
}

pub fn z_ab(a: f64, b: f64, alpha: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::z_ab(a, b, alpha)?.value(p)
}

/// `G(ln(Σ p_i^α)/(1-α))`: `G` applied after the Rényi quotient.
pub fn alt_z_entropy(g: &GroupFunction, alpha: f64, p: &Distribution) -> Result<f64> {
    EntropySpec::alt_z(g.clone(), alpha)?.value(p)
}

/// `Φ(x, y) = χ((1-α)x, (1-α)y)/(1-α)`.
pub fn composition_phi(g: &GroupFunction, alpha: f64, x: f64, y: f64) -> Result<f64> {
    check_alpha(alpha, "composition law")?;
    let c = 1.0 - alpha;
    Ok(g.chi(c * x, c * y)? / c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn d(p: &[f64]) -> Distribution {
        Distribution::new(p.to_vec()).unwrap()
    }

    #[test]
    fn distribution_validation() {
        assert!(Distribution::new(vec![0.5, 0.5]).is_ok());
        assert!(Distribution::new(vec![0.5, 0.6]).is_err());
        assert!(Distribution::new(vec![1.5, -0.5]).is_err());
        assert!(Distribution::new(vec![]).is_err());
        assert!(Distribution::new(vec![f64::NAN, 1.0]).is_err());
        let r = Distribution::renormalized(vec![1.0, 3.0]).unwrap();
        assert_eq!(r.probs(), &[0.25, 0.75]);
    }

    #[test]
    fn power_sum_examples() {
        assert!((power_sum(&Distribution::uniform(4).unwrap(), 2.0) - 0.25).abs() < 1e-16);
        assert_eq!(power_sum(&Distribution::delta(5).unwrap(), 0.3), 1.0);
        let p = d(&[0.5, 1.0 / 3.0, 1.0 / 6.0]);
        assert!((power_sum(&p, 2.0) - 14.0 / 36.0).abs() < 1e-15);
    }

    #[test]
    fn boltzmann_examples() {
        assert!((boltzmann(&Distribution::uniform(2).unwrap()) - LN_2).abs() < 1e-15);
        assert_eq!(boltzmann(&Distribution::delta(3).unwrap()), 0.0);
        assert!((boltzmann(&d(&[0.5, 0.25, 0.25])) - 1.5 * LN_2).abs() < 1e-15);
    }

    #[test]
    fn renyi_on_uniform_is_log_w() {
        for alpha in [0.2, 0.5, 2.0, 7.0] {
            for w in 1..8 {
                let s = z_entropy(&GroupFunction::Identity, alpha, &Distribution::uniform(w).unwrap()).unwrap();
                assert!((s - (w as f64).ln()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn delta_has_zero_entropy_in_every_family() {
        let delta = Distribution::delta(4).unwrap();
        let specs = [
            EntropySpec::Boltzmann,
            EntropySpec::renyi(0.5).unwrap(),
            EntropySpec::tsallis_aq(2.0, 0.8).unwrap(),
            EntropySpec::landsberg_vedral(1.5).unwrap(),
            EntropySpec::z_q(0.5, 0.4).unwrap(),
            EntropySpec::z_k(0.3, 0.4).unwrap(),
            EntropySpec::z_ab(0.3, -0.2, 0.5).unwrap(),
            EntropySpec::z_g(GroupFunction::abel(2.0, 1.0).unwrap(), 2.0).unwrap(),
            EntropySpec::alt_z(GroupFunction::kaniadakis(0.5).unwrap(), 0.5).unwrap(),
        ];
        for spec in specs {
            assert_eq!(spec.value(&delta).unwrap(), 0.0, "{spec}");
        }
    }

    #[test]
    fn alpha_one_is_rejected() {
        assert!(matches!(z_entropy(&GroupFunction::Identity, 1.0, &d(&[1.0])), Err(Error::AlphaOne(_))));
        assert!(matches!(EntropySpec::z_ab(1.0, 0.5, 1.0), Err(Error::AlphaOne(_))));
        assert!(matches!(EntropySpec::z_q(0.5, 1.0), Err(Error::AlphaOne(_))));
    }

    #[test]
    fn parameter_constraints() {
        assert!(EntropySpec::tsallis_aq(0.0, 0.5).is_err());
        assert!(EntropySpec::tsallis_aq(1.0, 1.0).is_err());
        // a(q-1)+1 = 3(-1)+1 < 0
        assert!(EntropySpec::tsallis_aq(3.0, 0.0).is_err());
        assert!(EntropySpec::landsberg_vedral(1.0).is_err());
        assert!(EntropySpec::z_k(0.0, 0.5).is_err());
        assert!(EntropySpec::z_k(1.0, 0.5).is_err());
        assert!(EntropySpec::z_ab(0.4, 0.4, 0.5).is_err());
        assert!(EntropySpec::z_ab(-0.4, -0.1, 0.5).is_err());
        assert!(EntropySpec::z_ab(-0.4, 0.1, 0.5).is_ok());
        assert!(EntropySpec::z_q(-0.5, 0.5).is_err());
    }

    #[test]
    fn regimes() {
        assert_eq!(EntropySpec::z_q(0.5, 0.5).unwrap().regime(), Regime::Concave);
        assert_eq!(EntropySpec::z_q(0.5, 2.0).unwrap().regime(), Regime::NonConcave);
        assert_eq!(EntropySpec::Boltzmann.regime(), Regime::Concave);
    }

    #[test]
    fn tsallis_aq_rescaling_identity() {
        let p = d(&[0.1, 0.2, 0.3, 0.4]);
        let (a, q) = (1.7, 1.3);
        let q_prime = a * (q - 1.0) + 1.0;
        let lhs = tsallis_aq(a, q, &p).unwrap();
        let rhs = a * tsallis_aq(1.0, q_prime, &p).unwrap();
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn landsberg_vedral_uniform_q2() {
        // S_2 = 1 - 1/W, Σ p^2 = 1/W, ratio W - 1
        for w in 1..7 {
            let v = landsberg_vedral(2.0, &Distribution::uniform(w).unwrap()).unwrap();
            assert!((v - (w as f64 - 1.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn alt_z_examples() {
        let p = d(&[0.2, 0.3, 0.5]);
        assert_eq!(alt_z_entropy(&GroupFunction::Identity, 0.7, &p).unwrap(), renyi(0.7, &p).unwrap());
        let half = d(&[0.5, 0.5]);
        let g = GroupFunction::multiplicative(0.5).unwrap();
        // Z: ln_q(2^{1/2})/(1/2) = 2 (2^{1/4} - 1)/(1/2) ; alt: G(ln 2) = 2(2^{1/2} - 1)
        let z = z_entropy(&g, 0.5, &half).unwrap();
        let alt = alt_z_entropy(&g, 0.5, &half).unwrap();
        assert!((z - 4.0 * (2f64.powf(0.25) - 1.0)).abs() < 1e-14);
        assert!((alt - 2.0 * (2f64.sqrt() - 1.0)).abs() < 1e-14);
        assert!((z - alt).abs() > 1e-3);
    }

    #[test]
    fn phi_examples() {
        for x in [0.0, 0.3, 2.5] {
            for g in [
                GroupFunction::Identity,
                GroupFunction::multiplicative(0.3).unwrap(),
                GroupFunction::abel(0.6, -0.2).unwrap(),
            ] {
                let phi = composition_phi(&g, 0.4, x, 0.0).unwrap();
                assert!((phi - x).abs() <= 1e-14 * x.max(1.0));
            }
        }
        assert_eq!(composition_phi(&GroupFunction::Identity, 0.5, 1.25, 2.5).unwrap(), 3.75);
        let (q, alpha, x, y) = (0.3, 0.6, 1.1, 0.7);
        let phi = composition_phi(&GroupFunction::multiplicative(q).unwrap(), alpha, x, y).unwrap();
        assert!((phi - (x + y + (1.0 - alpha) * (1.0 - q) * x * y)).abs() < 1e-14);
    }

    #[test]
    fn product_distribution_examples() {
        let p = product_distribution(&d(&[0.5, 0.5]), &d(&[1.0 / 3.0, 2.0 / 3.0]));
        let expected = [1.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 3.0];
        for (a, b) in p.probs().iter().zip(expected) {
            assert!((a - b).abs() < 1e-16);
        }
        let u = product_distribution(&Distribution::uniform(2).unwrap(), &Distribution::uniform(3).unwrap());
        assert!(u.probs().iter().all(|x| (x - 1.0 / 6.0).abs() < 1e-16));
        let r = d(&[0.2, 0.8]);
        let dr = product_distribution(&Distribution::delta(2).unwrap(), &r);
        assert_eq!(&dr.probs()[..2], r.probs());
        assert!(Distribution::new(p.probs().to_vec()).is_ok());
    }

    #[test]
    fn uniform_closed_form_matches_direct_evaluation() {
        let specs = [
            EntropySpec::Boltzmann,
            EntropySpec::renyi(0.3).unwrap(),
            EntropySpec::tsallis_aq(1.5, 0.6).unwrap(),
            EntropySpec::landsberg_vedral(0.7).unwrap(),
            EntropySpec::z_q(0.5, 0.4).unwrap(),
            EntropySpec::z_k(0.3, 2.0).unwrap(),
            EntropySpec::z_ab(0.3, -0.2, 0.5).unwrap(),
            EntropySpec::alt_z(GroupFunction::kaniadakis(0.5).unwrap(), 0.5).unwrap(),
        ];
        for spec in specs {
            for w in [1usize, 2, 5, 9] {
                let direct = spec.value(&Distribution::uniform(w).unwrap()).unwrap();
                let closed = spec.uniform_value((w as f64).ln()).unwrap();
                assert!((direct - closed).abs() <= 1e-13 * direct.abs().max(1.0), "{spec} W={w}");
            }
        }
    }

    #[test]
    fn expansibility_is_exact() {
        let p = d(&[0.5, 0.5]);
        let spec = EntropySpec::z_ab(0.3, -0.2, 0.5).unwrap();
        assert_eq!(spec.value(&p).unwrap(), spec.value(&p.with_zero_appended()).unwrap());
    }
}
