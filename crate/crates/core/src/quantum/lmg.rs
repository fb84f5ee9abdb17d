use std::f64::consts::PI;

use serde::Serialize;

use super::density::quantum_z_ab;
use super::dicke::{dicke_reduced_density, DickeSpec};
use crate::error::{param, Error, Result};

/// Parameters of the leading block-entropy asymptotics for the LMG ground state.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LmgParams {
    pub a: f64,
    pub m: usize,
    pub alpha: f64,
    /// Block ratio `L/N` in `(0, 1)`.
    pub gamma: f64,
    pub densities: Vec<f64>,
}

impl LmgParams {
    pub fn new(a: f64, m: usize, alpha: f64, gamma: f64, densities: Vec<f64>) -> Result<Self> {
        if a == 0.0 || !a.is_finite() {
            return Err(param(format!("LMG asymptotics need a != 0, got {a}")));
        }
        if m < 1 {
            return Err(param(format!("LMG asymptotics need m >= 1, got {m}")));
        }
        if alpha == 1.0 {
            return Err(Error::AlphaOne("Z_(a,0) block entropy"));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::Domain { what: "the LMG asymptotic formula (alpha^(-ma/2))", value: alpha });
        }
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(param(format!("block ratio gamma must lie in (0,1), got {gamma}")));
        }
        if densities.len() != m + 1 || densities.iter().any(|&n| !(n >= 0.0)) {
            return Err(param(format!("need {} nonnegative densities, got {densities:?}", m + 1)));
        }
        let total: f64 = densities.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(param(format!("densities sum to {total}, not 1")));
        }
        Ok(LmgParams { a, m, alpha, gamma, densities })
    }
}

/// Leading term `L^e/(a(1-α)α^{ma/2}) · [2π(1-γ) Π n_j^{1/m}]^e`, `e = am(1-α)/2`.
pub fn lmg_asymptotic_za0(params: &LmgParams, block: u64) -> Result<f64> {
    let LmgParams { a, m, alpha, gamma, ref densities } = *params;
    let m_f = m as f64;
    let exponent = a * m_f * (1.0 - alpha) / 2.0;
    let product: f64 = densities.iter().map(|n| n.powf(1.0 / m_f)).product();
    let prefactor = 1.0 / (a * (1.0 - alpha) * alpha.powf(m_f * a / 2.0));
    Ok(prefactor * (block as f64).powf(exponent) * (2.0 * PI * (1.0 - gamma) * product).powf(exponent))
}

/// `α = 1 - 2/(am)`, the index for which the leading term is linear in `L`.
pub fn extensive_alpha(a: f64, m: usize) -> Result<f64> {
    let am = a * m as f64;
    if am == 0.0 || !am.is_finite() {
        return Err(param(format!("extensive alpha needs a*m != 0, got a={a}, m={m}")));
    }
    Ok(1.0 - 2.0 / am)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LmgRow {
    pub block: usize,
    pub exact_entropy: f64,
    pub asymptotic_value: f64,
    /// `exact_entropy / asymptotic_value`.
    pub ratio: f64,
}

/// Exact `Z_(a,0)[ρ_L]` of the Dicke reduced state next to the leading
/// asymptotic term (with `γ = L/N`) for each requested block size.
pub fn lmg_sweep(
    m: usize,
    n: usize,
    occupations: &[usize],
    a: f64,
    alpha: f64,
    blocks: impl IntoIterator<Item = usize>,
) -> Result<Vec<LmgRow>> {
    let mut rows = Vec::new();
    for block in blocks {
        let spec = DickeSpec::new(m, n, occupations.to_vec(), block)?;
        let rho = dicke_reduced_density(&spec)?;
        let exact_entropy = quantum_z_ab(a, 0.0, alpha, &rho)?;
        let params = LmgParams::new(a, m, alpha, block as f64 / n as f64, spec.densities())?;
        let asymptotic_value = lmg_asymptotic_za0(&params, block as u64)?;
        rows.push(LmgRow { block, exact_entropy, asymptotic_value, ratio: exact_entropy / asymptotic_value });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extensive_alpha_values() {
        assert_eq!(extensive_alpha(2.0, 1).unwrap(), 0.0);
        assert_eq!(extensive_alpha(1.0, 2).unwrap(), 0.0);
        assert_eq!(extensive_alpha(4.0, 1).unwrap(), 0.5);
        assert!(extensive_alpha(0.0, 1).is_err());
    }

    #[test]
    fn linear_at_extensive_alpha() {
        let alpha = extensive_alpha(4.0, 1).unwrap();
        let params = LmgParams::new(4.0, 1, alpha, 0.5, vec![0.5, 0.5]).unwrap();
        let per_site: Vec<f64> =
            [10u64, 100, 1000].iter().map(|&l| lmg_asymptotic_za0(&params, l).unwrap() / l as f64).collect();
        assert!((per_site[0] - per_site[1]).abs() / per_site[0] < 1e-14);
        assert!((per_site[0] - per_site[2]).abs() / per_site[0] < 1e-14);
        // 2π(1-γ)·(1/4) with γ = 1/2, over a(1-α)α^{a/2} = 4·0.5·0.25.
        assert!((per_site[0] - PI / 4.0 / 0.5).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(LmgParams::new(2.0, 1, 0.0, 0.5, vec![0.5, 0.5]), Err(Error::Domain { .. })));
        assert!(matches!(LmgParams::new(2.0, 1, 1.0, 0.5, vec![0.5, 0.5]), Err(Error::AlphaOne(_))));
        assert!(LmgParams::new(0.0, 1, 0.5, 0.5, vec![0.5, 0.5]).is_err());
        assert!(LmgParams::new(2.0, 1, 0.5, 1.0, vec![0.5, 0.5]).is_err());
        assert!(LmgParams::new(2.0, 1, 0.5, 0.5, vec![0.6, 0.5]).is_err());
    }

    #[test]
    fn vanishing_density_gives_zero() {
        let params = LmgParams::new(4.0, 1, 0.5, 0.5, vec![1.0, 0.0]).unwrap();
        assert_eq!(lmg_asymptotic_za0(&params, 10).unwrap(), 0.0);
    }

    #[test]
    fn sweep_ratio_rises_toward_one() {
        let rows = lmg_sweep(1, 14, &[7, 7], 4.0, 0.5, 1..=7).unwrap();
        assert!(rows.windows(2).all(|w| w[1].ratio > w[0].ratio));
        assert!(rows.last().unwrap().ratio < 1.0);
    }
}
