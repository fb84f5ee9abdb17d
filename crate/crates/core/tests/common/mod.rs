//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

/// Brute-force reduced state of a su(m+1) Dicke state.
///
/// Builds the equal-amplitude superposition of all site assignments with
/// the given occupations in the full `(m+1)^N` space and traces out the
/// last `N - L` sites. Returns `ρ_L` as a dense real matrix over the
/// `(m+1)^L` block configurations (amplitudes are real).
pub fn brute_force_reduced(m: usize, occupations: &[usize], block: usize) -> Vec<Vec<f64>> {
    let d = m + 1;
    let n: usize = occupations.iter().sum();
    let env = n - block;
    let dim_block = d.pow(block as u32);
    let dim_env = d.pow(env as u32);

    let counts = |mut code: usize, sites: usize| {
        let mut c = vec![0usize; d];
        for _ in 0..sites {
            c[code % d] += 1;
            code /= d;
        }
        c
    };
    let mut psi = vec![0.0; dim_block * dim_env];
    let mut support = 0usize;
    for s in 0..dim_block {
        for e in 0..dim_env {
            let cs = counts(s, block);
            let ce = counts(e, env);
            if cs.iter().zip(&ce).zip(occupations).all(|((a, b), k)| a + b == *k) {
                psi[s * dim_env + e] = 1.0;
                support += 1;
            }
        }
    }
    let norm = (support as f64).sqrt();
    psi.iter_mut().for_each(|x| *x /= norm);

    let mut rho = vec![vec![0.0; dim_block]; dim_block];
    for (s, row) in rho.iter_mut().enumerate() {
        for (t, cell) in row.iter_mut().enumerate() {
            *cell = (0..dim_env).map(|e| psi[s * dim_env + e] * psi[t * dim_env + e]).sum();
        }
    }
    rho
}

/// `ρ_L` projected onto the normalized symmetric states `|l⟩` of the block,
/// indexed by the given list of block occupations.
pub fn project_on_block_basis(m: usize, block: usize, rho: &[Vec<f64>], basis: &[Vec<usize>]) -> Vec<Vec<f64>> {
    let d = m + 1;
    let dim = rho.len();
    let occupation_of = |mut code: usize| {
        let mut c = vec![0usize; d];
        for _ in 0..block {
            c[code % d] += 1;
            code /= d;
        }
        c
    };
    let vectors: Vec<Vec<f64>> = basis
        .iter()
        .map(|l| {
            let v: Vec<f64> = (0..dim).map(|s| if occupation_of(s) == *l { 1.0 } else { 0.0 }).collect();
            let norm = v.iter().sum::<f64>().sqrt();
            v.into_iter().map(|x| x / norm).collect()
        })
        .collect();
    vectors
        .iter()
        .map(|u| {
            vectors
                .iter()
                .map(|v| {
                    (0..dim)
                        .filter(|&s| u[s] != 0.0)
                        .map(|s| u[s] * (0..dim).map(|t| rho[s][t] * v[t]).sum::<f64>())
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// All occupation vectors of `n` sites over `parts` levels.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

pub fn shannon(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|x| -x * x.ln()).sum()
}

pub fn power_sum(p: &[f64], alpha: f64) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|x| x.powf(alpha)).sum()
}

pub fn renyi(p: &[f64], alpha: f64) -> f64 {
    power_sum(p, alpha).ln() / (1.0 - alpha)
}

/// `(Σp^α - 1)/(1-α)`.
pub fn tsallis(p: &[f64], alpha: f64) -> f64 {
    (power_sum(p, alpha) - 1.0) / (1.0 - alpha)
}

/// Standard two-parameter form `[(Σp^α)^{(1-β)/(1-α)} - 1]/(1-β)`.
pub fn sharma_mittal(p: &[f64], alpha: f64, beta: f64) -> f64 {
    (power_sum(p, alpha).powf((1.0 - beta) / (1.0 - alpha)) - 1.0) / (1.0 - beta)
}

/// Deterministic xorshift sequence in (0, 1), independent of the library's sampling.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        ((self.0 >> 11) as f64 + 0.5) / (1u64 << 53) as f64
    }

    pub fn distribution(&mut self, w: usize) -> Vec<f64> {
        let raw: Vec<f64> = (0..w).map(|_| -self.next().ln()).collect();
        let total: f64 = raw.iter().sum();
        raw.into_iter().map(|x| x / total).collect()
    }
}
