//! Generalized group logarithms `ln_G(x) = G(γ ln x)`, their exponentials
//! `exp_G(y) = e^{G⁻¹(y)/γ}` and the group laws `χ(x,y) = G(G⁻¹(x) + G⁻¹(y))`.

use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::formal_series::TruncatedSeries;

/// Below this `|1 - q|` the multiplicative `G` is evaluated as its limit `G(t) = t`.
pub const MULTIPLICATIVE_LIMIT: f64 = 1e-9;

/// Relative accuracy demanded from numeric inversion, `|G(t) - s| <= INVERSE_TOL·max(1,|s|)`.
pub const INVERSE_TOL: f64 = 1e-12;

const MAX_BRACKET_STEPS: usize = 2048;
const MAX_REFINE_STEPS: usize = 400;

/// A strictly increasing `G` with `G(0) = 0`, `G'(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupFunction {
    /// `G(t) = t`.
    Identity,
    /// `G(t) = (e^{(1-q)t} - 1)/(1-q)`.
    Multiplicative { q: f64 },
    /// `G(t) = sinh(kt)/k`.
    Kaniadakis { k: f64 },
    /// `G(t) = (e^{at} - e^{bt})/(a - b)`.
    Abel { a: f64, b: f64 },
    /// Horner evaluation of a truncated series, valid for `|t| <= horizon`.
    Series(SeriesFunction),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesFunction {
    coeffs: Vec<f64>,
    horizon: f64,
}

impl SeriesFunction {
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    fn eval(&self, t: f64) -> Result<f64> {
        self.check(t)?;
        Ok(self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c))
    }

    fn derivative(&self, t: f64) -> Result<f64> {
        self.check(t)?;
        Ok(self.coeffs.iter().enumerate().skip(1).rev().fold(0.0, |acc, (k, c)| acc * t + k as f64 * c))
    }

    fn check(&self, t: f64) -> Result<()> {
        if t.is_nan() || t.abs() > self.horizon {
            return Err(Error::Domain { what: "series-defined G (beyond horizon)", value: t });
        }
        Ok(())
    }
}

impl GroupFunction {
    pub fn multiplicative(q: f64) -> Result<Self> {
        if !q.is_finite() || q == 1.0 {
            return Err(param(format!("multiplicative G needs finite q != 1, got {q}")));
        }
        Ok(GroupFunction::Multiplicative { q })
    }

    pub fn kaniadakis(k: f64) -> Result<Self> {
        if !(k > -1.0 && k < 1.0) || k == 0.0 {
            return Err(param(format!("Kaniadakis G needs -1 < k < 1, k != 0, got {k}")));
        }
        Ok(GroupFunction::Kaniadakis { k })
    }

    pub fn abel(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a == b {
            return Err(param(format!("Abel G needs finite a != b, got a={a}, b={b}")));
        }
        Ok(GroupFunction::Abel { a, b })
    }

    /// Series-defined `G`. The series must satisfy `c_0 = 0`, `c_1 = 1`, and
    /// `G'` must stay positive on `[-horizon, horizon]` (checked on a grid).
    pub fn series(series: &TruncatedSeries, horizon: f64) -> Result<Self> {
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(param(format!("series horizon must be positive and finite, got {horizon}")));
        }
        let coeffs = series.to_f64();
        if coeffs.len() < 2 || coeffs[0] != 0.0 || coeffs[1] != 1.0 {
            return Err(Error::NonInvertible("series G needs c_0 = 0 and c_1 = 1".into()));
        }
        let f = SeriesFunction { coeffs, horizon };
        const GRID: usize = 2000;
        for i in 0..=GRID {
            let t = -horizon + 2.0 * horizon * i as f64 / GRID as f64;
            if f.derivative(t)? <= 0.0 {
                return Err(param(format!("series G is not increasing on [-{horizon}, {horizon}] (G'({t}) <= 0)")));
            }
        }
        Ok(GroupFunction::Series(f))
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupFunction::Identity => "identity",
            GroupFunction::Multiplicative { .. } => "tsallis",
            GroupFunction::Kaniadakis { .. } => "kaniadakis",
            GroupFunction::Abel { .. } => "abel",
            GroupFunction::Series(_) => "series",
        }
    }

    pub fn has_closed_form_inverse(&self) -> bool {
        matches!(
            self,
            GroupFunction::Identity | GroupFunction::Multiplicative { .. } | GroupFunction::Kaniadakis { .. }
        )
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        Ok(match self {
            GroupFunction::Identity => t,
            GroupFunction::Multiplicative { q } => {
                let c = 1.0 - q;
                if c.abs() < MULTIPLICATIVE_LIMIT {
                    t
                } else {
                    (c * t).exp_m1() / c
                }
            }
            GroupFunction::Kaniadakis { k } => (k * t).sinh() / k,
            GroupFunction::Abel { a, b } => (b * t).exp() * ((a - b) * t).exp_m1() / (a - b),
            GroupFunction::Series(f) => return f.eval(t),
        })
    }

    pub fn derivative(&self, t: f64) -> Result<f64> {
        Ok(match self {
            GroupFunction::Identity => 1.0,
            GroupFunction::Multiplicative { q } => {
                let c = 1.0 - q;
                if c.abs() < MULTIPLICATIVE_LIMIT {
                    1.0
                } else {
                    (c * t).exp()
                }
            }
            GroupFunction::Kaniadakis { k } => (k * t).cosh(),
            GroupFunction::Abel { a, b } => (a * (a * t).exp() - b * (b * t).exp()) / (a - b),
            GroupFunction::Series(f) => return f.derivative(t),
        })
    }

    /// Interval of `t` on which `G` is strictly increasing (bounds may be infinite).
    pub fn increasing_domain(&self) -> (f64, f64) {
        match self {
            GroupFunction::Abel { a, b } => {
                let (hi, lo) = if a > b { (*a, *b) } else { (*b, *a) };
                // G' > 0  <=>  hi e^{hi t} > lo e^{lo t}
                let turning = (lo / hi).ln() / (hi - lo);
                if lo > 0.0 {
                    (turning, f64::INFINITY)
                } else if hi < 0.0 {
                    (f64::NEG_INFINITY, turning)
                } else {
                    (f64::NEG_INFINITY, f64::INFINITY)
                }
            }
            GroupFunction::Series(f) => (-f.horizon, f.horizon),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    /// Image of the increasing domain; open at infinite ends.
    pub fn range(&self) -> (f64, f64) {
        match self {
            GroupFunction::Multiplicative { q } => {
                let c = 1.0 - q;
                if c.abs() < MULTIPLICATIVE_LIMIT {
                    (f64::NEG_INFINITY, f64::INFINITY)
                } else if c > 0.0 {
                    (-1.0 / c, f64::INFINITY)
                } else {
                    (f64::NEG_INFINITY, -1.0 / c)
                }
            }
            GroupFunction::Abel { a, b } => {
                let (t_lo, t_hi) = self.increasing_domain();
                let (hi, lo) = if a > b { (*a, *b) } else { (*b, *a) };
                let low = if t_lo.is_finite() {
                    self.eval(t_lo).unwrap_or(f64::NAN)
                } else if lo < 0.0 {
                    f64::NEG_INFINITY
                } else {
                    // lo == 0: G -> -1/hi as t -> -inf
                    -1.0 / hi
                };
                let high = if t_hi.is_finite() {
                    self.eval(t_hi).unwrap_or(f64::NAN)
                } else if hi > 0.0 {
                    f64::INFINITY
                } else {
                    // hi == 0: G -> -1/lo = 1/|lo| as t -> +inf
                    -1.0 / lo
                };
                (low, high)
            }
            GroupFunction::Series(f) => (f.eval(-f.horizon).unwrap_or(f64::NAN), f.eval(f.horizon).unwrap_or(f64::NAN)),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn in_range(&self, s: f64) -> bool {
        let (lo, hi) = self.range();
        let closed = matches!(self, GroupFunction::Series(_));
        if closed {
            s >= lo && s <= hi
        } else {
            s > lo && s < hi
        }
    }

    /// `G⁻¹(s)` on the increasing branch through `t = 0`.
    pub fn inverse(&self, s: f64) -> Result<f64> {
        if s.is_nan() {
            return Err(Error::Range { what: "G", value: s });
        }
        match self {
            GroupFunction::Identity => Ok(s),
            GroupFunction::Multiplicative { q } => {
                let c = 1.0 - q;
                if c.abs() < MULTIPLICATIVE_LIMIT {
                    return Ok(s);
                }
                if !self.in_range(s) {
                    return Err(Error::Range { what: "multiplicative G", value: s });
                }
                Ok((c * s).ln_1p() / c)
            }
            GroupFunction::Kaniadakis { k } => Ok((k * s).asinh() / k),
            GroupFunction::Abel { .. } | GroupFunction::Series(_) => {
                if !self.in_range(s) {
                    return Err(Error::Range { what: self.name(), value: s });
                }
                self.numeric_inverse(s)
            }
        }
    }

    /// Exponential bracketing from `t = 0` followed by safeguarded Newton/bisection.
    fn numeric_inverse(&self, s: f64) -> Result<f64> {
        if s == 0.0 {
            return Ok(0.0);
        }
        let (t_min, t_max) = self.increasing_domain();
        let value = |t: f64| self.eval(t).map(|g| g - s);

        let (mut lo, mut hi) = if s > 0.0 { (0.0, 1.0f64.min(t_max)) } else { (t_min.max(-1.0), 0.0) };
        let mut steps = 0;
        loop {
            let edge = if s > 0.0 { hi } else { lo };
            let f_edge = value(edge)?;
            let bracketed = if s > 0.0 { f_edge >= 0.0 } else { f_edge <= 0.0 };
            if bracketed {
                break;
            }
            if s > 0.0 {
                if hi >= t_max || !hi.is_finite() {
                    return Err(Error::Range { what: self.name(), value: s });
                }
                lo = hi;
                hi = (hi * 2.0).min(t_max);
            } else {
                if lo <= t_min || !lo.is_finite() {
                    return Err(Error::Range { what: self.name(), value: s });
                }
                hi = lo;
                lo = (lo * 2.0).max(t_min);
            }
            steps += 1;
            if steps > MAX_BRACKET_STEPS {
                return Err(Error::Convergence(format!("could not bracket G(t) = {s}")));
            }
        }

        let mut t = 0.5 * (lo + hi);
        for _ in 0..MAX_REFINE_STEPS {
            let f = value(t)?;
            if f == 0.0 {
                return Ok(t);
            }
            if f > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            let d = self.derivative(t)?;
            let newton = t - f / d;
            let next = if d > 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
            if next == t || hi - lo <= 2.0 * f64::EPSILON * t.abs().max(f64::MIN_POSITIVE) {
                t = next;
                break;
            }
            t = next;
        }
        let residual = value(t)?.abs();
        if residual <= INVERSE_TOL * s.abs().max(1.0) {
            Ok(t)
        } else {
            Err(Error::Convergence(format!("G(t) = {s}: residual {residual:e} at t = {t}")))
        }
    }

    /// `χ(x, y) = G(G⁻¹(x) + G⁻¹(y))`, in closed form where one exists.
    pub fn chi(&self, x: f64, y: f64) -> Result<f64> {
        match self {
            GroupFunction::Identity => Ok(x + y),
            GroupFunction::Multiplicative { q } => {
                for v in [x, y] {
                    if !self.in_range(v) {
                        return Err(Error::Range { what: "multiplicative G", value: v });
                    }
                }
                Ok(x + y + (1.0 - q) * x * y)
            }
            GroupFunction::Kaniadakis { k } => Ok(x * (1.0 + k * k * y * y).sqrt() + y * (1.0 + k * k * x * x).sqrt()),
            _ => self.chi_numeric(x, y),
        }
    }

    /// `G(G⁻¹(x) + G⁻¹(y))` without closed-form dispatch.
    pub fn chi_numeric(&self, x: f64, y: f64) -> Result<f64> {
        let t = self.inverse(x)? + self.inverse(y)?;
        self.eval(t)
    }
}

/// `ln_G(x) = G(γ ln x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupLogarithm {
    g: GroupFunction,
    gamma: f64,
}

impl GroupLogarithm {
    pub fn new(g: GroupFunction) -> Self {
        GroupLogarithm { g, gamma: 1.0 }
    }

    pub fn with_gamma(g: GroupFunction, gamma: f64) -> Result<Self> {
        if gamma == 0.0 || !gamma.is_finite() {
            return Err(param(format!("gamma must be finite and nonzero, got {gamma}")));
        }
        Ok(GroupLogarithm { g, gamma })
    }

    pub fn g(&self) -> &GroupFunction {
        &self.g
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Defined for `x > 0` with `γ ln x` on the increasing branch of `G`.
    pub fn ln(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain { what: "ln_G", value: x });
        }
        let t = self.gamma * x.ln();
        let (lo, hi) = self.g.increasing_domain();
        if !(t > lo && t < hi) && !matches!(self.g, GroupFunction::Series(_)) {
            return Err(Error::Domain { what: "ln_G (outside the increasing branch of G)", value: x });
        }
        self.g.eval(t)
    }

    pub fn exp(&self, y: f64) -> Result<f64> {
        Ok((self.g.inverse(y)? / self.gamma).exp())
    }
}

/// `ln_G(x)` with `γ = 1`.
pub fn eval_ln_g(g: &GroupFunction, x: f64) -> Result<f64> {
    GroupLogarithm::new(g.clone()).ln(x)
}

/// `exp_G(y)` with `γ = 1`.
pub fn eval_exp_g(g: &GroupFunction, y: f64) -> Result<f64> {
    GroupLogarithm::new(g.clone()).exp(y)
}

/// Sufficient concavity condition on the normalized coefficients of `G`:
/// every `a_k > 0` and `a_k > (k+1) a_{k+1}`. `a_seq[0]` is `a_1`.
pub fn check_concavity_condition(a_seq: &[f64]) -> bool {
    if a_seq.iter().any(|&a| !(a > 0.0)) {
        return false;
    }
    a_seq.windows(2).enumerate().all(|(i, w)| w[0] > (i as f64 + 2.0) * w[1])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConcavitySample {
    pub points: usize,
    /// Largest second central difference seen (concave iff <= 0).
    pub max_second_difference: f64,
    pub worst_x: f64,
}

impl ConcavitySample {
    pub fn is_concave(&self) -> bool {
        self.max_second_difference <= 0.0
    }
}

/// Second central differences of `ln_G` on a log-spaced grid over `[lo, hi]`.
pub fn sample_concavity(lg: &GroupLogarithm, lo: f64, hi: f64, points: usize) -> Result<ConcavitySample> {
    let mut worst = ConcavitySample { points, max_second_difference: f64::NEG_INFINITY, worst_x: lo };
    let ratio = (hi / lo).ln();
    for i in 0..points {
        let x = lo * (ratio * i as f64 / (points - 1).max(1) as f64).exp();
        let h = 1e-3 * x;
        let d2 = lg.ln(x + h)? - 2.0 * lg.ln(x)? + lg.ln(x - h)?;
        if d2 > worst.max_second_difference {
            worst.max_second_difference = d2;
            worst.worst_x = x;
        }
    }
    Ok(worst)
}
