use serde::Serialize;

use super::density::DensityMatrix;
use crate::error::{param, Result};

/// Largest `N` for which the reduced state is built, by `m`.
fn max_sites(m: usize) -> usize {
    match m {
        1 => 14,
        2 => 10,
        _ => 8,
    }
}

/// Dicke state of su(m+1) type on `n` sites with `occupations[j]` sites in
/// level `j`, and a block of the first `block` sites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DickeSpec {
    pub m: usize,
    pub n: usize,
    pub occupations: Vec<usize>,
    pub block: usize,
}

impl DickeSpec {
    pub fn new(m: usize, n: usize, occupations: Vec<usize>, block: usize) -> Result<Self> {
        if m < 1 {
            return Err(param(format!("Dicke states need m >= 1, got {m}")));
        }
        if occupations.len() != m + 1 {
            return Err(param(format!("su({}) needs {} occupations, got {}", m + 1, m + 1, occupations.len())));
        }
        if occupations.iter().sum::<usize>() != n {
            return Err(param(format!("occupations {occupations:?} do not sum to N={n}")));
        }
        if n > max_sites(m) {
            return Err(param(format!("N={n} exceeds the supported size {} for m={m}", max_sites(m))));
        }
        if block < 1 || block + 1 > n {
            return Err(param(format!("block size L={block} must satisfy 1 <= L <= N-1 = {}", n.saturating_sub(1))));
        }
        Ok(DickeSpec { m, n, occupations, block })
    }

    /// Densities `k_j/N`.
    pub fn densities(&self) -> Vec<f64> {
        self.occupations.iter().map(|&k| k as f64 / self.n as f64).collect()
    }
}

/// All `(l_1, …, l_{m+1})` with `Σ l_j = block`, in lexicographically decreasing order.
pub fn block_basis(m: usize, block: usize) -> Vec<Vec<usize>> {
    fn rec(parts: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for l in (0..=remaining).rev() {
            prefix.push(l);
            rec(parts - 1, remaining - l, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m + 1, block, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    // Exact for the sizes used here: every intermediate value is an integer below 2^53.
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64).round()
}

/// Weights `Π_j C(k_j, l_j) / C(N, L)` over [`block_basis`]; the reduced
/// state is diagonal in that basis with these entries.
pub fn dicke_spectrum(spec: &DickeSpec) -> Vec<f64> {
    let total = binomial(spec.n, spec.block);
    block_basis(spec.m, spec.block)
        .iter()
        .map(|l| l.iter().zip(&spec.occupations).map(|(&lj, &kj)| binomial(kj, lj)).product::<f64>() / total)
        .collect()
}

/// Reduced density matrix of the first `L` sites, in the block-occupation basis.
pub fn dicke_reduced_density(spec: &DickeSpec) -> Result<DensityMatrix> {
    DensityMatrix::diagonal(&dicke_spectrum(spec))
}
