//! Random distributions for the property checks.

use rand::Rng;
use rand_distr::{Distribution as _, Exp1};

use crate::entropy::Distribution;

/// Flat Dirichlet sample of length `w`; with probability 1/8 one outcome is
/// forced to zero so boundary cases are exercised.
pub fn random_distribution<R: Rng + ?Sized>(rng: &mut R, w: usize) -> Distribution {
    let mut p: Vec<f64> = (0..w).map(|_| Exp1.sample(rng)).collect();
    if w > 1 && rng.random_range(0..8) == 0 {
        let i = rng.random_range(0..w);
        p[i] = 0.0;
    }
    normalize(p)
}

/// Dirichlet sample with every entry at least `floor` (requires `w·floor < 1`).
pub fn random_interior_distribution<R: Rng + ?Sized>(rng: &mut R, w: usize, floor: f64) -> Distribution {
    let free = 1.0 - w as f64 * floor;
    let raw = normalize((0..w).map(|_| Exp1.sample(rng)).collect());
    let mut p: Vec<f64> = raw.probs().iter().map(|x| floor + free * x).collect();
    let total: f64 = p.iter().sum();
    p.iter_mut().for_each(|x| *x /= total);
    Distribution::from_trusted(p)
}

fn normalize(mut p: Vec<f64>) -> Distribution {
    let total: f64 = p.iter().sum();
    if total > 0.0 {
        p.iter_mut().for_each(|x| *x /= total);
    } else {
        p.iter_mut().for_each(|x| *x = 0.0);
        p[0] = 1.0;
    }
    Distribution::from_trusted(p)
}
