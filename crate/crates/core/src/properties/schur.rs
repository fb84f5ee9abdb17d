use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, Exp1};
use serde::Serialize;

use super::report::{fmt_vec, PropertyReport};
use super::sampling::random_interior_distribution;
use crate::entropy::{Distribution, EntropySpec};
use crate::error::{param, Result};

/// Probabilities are multiples of `2^-40`, so partial sums are exact in `f64`.
const UNIT_BITS: u32 = 40;
const TOTAL_UNITS: u64 = 1 << UNIT_BITS;

pub const ORDERING_SLACK: f64 = 1e-12;
pub const SCHUR_OSTROWSKI_TOL: f64 = 1e-10;
const INTERIOR_FLOOR: f64 = 1e-3;

/// `p ≼ r`: `r` majorizes `p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MajorizationPair {
    pub p: Distribution,
    pub r: Distribution,
}

impl MajorizationPair {
    pub fn is_valid(&self) -> bool {
        majorizes(self.r.probs(), self.p.probs())
    }
}

/// Whether `r` majorizes `p`: equal totals and every partial sum of the
/// decreasingly sorted `r` is at least the one of `p`. Partial sums are
/// compared exactly, which is exact for dyadic inputs such as those from
/// [`generate_majorization_pair`]; totals may differ by rounding.
pub fn majorizes(r: &[f64], p: &[f64]) -> bool {
    if r.len() != p.len() {
        return false;
    }
    let sorted = |v: &[f64]| {
        let mut v = v.to_vec();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    };
    let (r, p) = (sorted(r), sorted(p));
    let (mut sr, mut sp) = (0.0, 0.0);
    let n = r.len();
    for (k, (a, b)) in r.iter().zip(&p).enumerate() {
        sr += a;
        sp += b;
        if k + 1 < n && sr < sp {
            return false;
        }
    }
    (sr - sp).abs() <= f64::EPSILON * r.len() as f64
}

/// Draws a random `r` of length `w` and applies `steps` Robin-Hood transfers
/// (mass moved from a larger to a smaller entry without reversing their
/// order) to obtain `p ≼ r`. All arithmetic is in integer units of `2^-40`.
pub fn generate_majorization_pair<R: Rng + ?Sized>(w: usize, steps: usize, rng: &mut R) -> Result<MajorizationPair> {
    if w < 2 {
        return Err(param(format!("majorization pairs need W >= 2, got {w}")));
    }
    let r_units = random_units(rng, w);
    let mut p_units = r_units.clone();
    for _ in 0..steps {
        let i = rng.random_range(0..w);
        let j = (i + rng.random_range(1..w)) % w;
        let (hi, lo) = if p_units[i] >= p_units[j] { (i, j) } else { (j, i) };
        let room = (p_units[hi] - p_units[lo]) / 2;
        if room == 0 {
            continue;
        }
        let t = rng.random_range(0..=room);
        p_units[hi] -= t;
        p_units[lo] += t;
    }
    let to_dist = |u: &[u64]| Distribution::from_trusted(u.iter().map(|&x| x as f64 / TOTAL_UNITS as f64).collect());
    let pair = MajorizationPair { p: to_dist(&p_units), r: to_dist(&r_units) };
    debug_assert!(pair.is_valid());
    Ok(pair)
}

/// Dirichlet draw rounded to units, with the rounding remainder on the largest entry.
fn random_units<R: Rng + ?Sized>(rng: &mut R, w: usize) -> Vec<u64> {
    let raw: Vec<f64> = (0..w).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    let mut units: Vec<u64> = raw.iter().map(|x| ((x / total) * TOTAL_UNITS as f64).floor() as u64).collect();
    let assigned: u64 = units.iter().sum();
    let largest = (0..w).max_by_key(|&i| units[i]).unwrap_or(0);
    units[largest] += TOTAL_UNITS - assigned;
    units
}

/// Two reports: the ordering `S(p) >= S(r) - 1e-12` on generated pairs
/// `p ≼ r`, and the Schur-Ostrowski condition
/// `(p_i - p_j)(∂_i S - ∂_j S) <= 1e-10` with central-difference gradients
/// on interior points (`p_i >= 1e-3`). Points where the argument of `G`
/// leaves its increasing branch are skipped.
pub fn check_schur_concavity(spec: &EntropySpec, trials: usize, seed: u64) -> Vec<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let label = spec.to_string();
    let mut ordering = PropertyReport::new("schur_ordering", label.clone(), ORDERING_SLACK, seed);
    let mut ostrowski = PropertyReport::new("schur_ostrowski", label, SCHUR_OSTROWSKI_TOL, seed);

    for _ in 0..trials {
        let w = rng.random_range(2..=6);
        let steps = rng.random_range(1..=3 * w);
        let pair = generate_majorization_pair(w, steps, &mut rng).expect("w >= 2");
        if !(spec.in_increasing_branch(pair.p.probs()) && spec.in_increasing_branch(pair.r.probs())) {
            ordering.skip();
            continue;
        }
        match (spec.value(&pair.p), spec.value(&pair.r)) {
            (Ok(sp), Ok(sr)) => {
                ordering.record(sr - sp, || format!("p={}; r={}", fmt_vec(pair.p.probs()), fmt_vec(pair.r.probs())))
            }
            _ => ordering.skip(),
        }
    }

    for _ in 0..trials {
        let w = rng.random_range(2..=6);
        let p = random_interior_distribution(&mut rng, w, INTERIOR_FLOOR);
        if !spec.in_increasing_branch(p.probs()) {
            ostrowski.skip();
            continue;
        }
        match gradient(spec, p.probs()) {
            Ok(g) => {
                let mut worst = f64::NEG_INFINITY;
                for i in 0..w {
                    for j in i + 1..w {
                        worst = worst.max((p.probs()[i] - p.probs()[j]) * (g[i] - g[j]));
                    }
                }
                ostrowski.record(worst, || fmt_vec(p.probs()));
            }
            Err(_) => ostrowski.skip(),
        }
    }
    vec![ordering, ostrowski]
}

fn gradient(spec: &EntropySpec, p: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(p.len());
    let mut x = p.to_vec();
    for i in 0..p.len() {
        let h = 1e-6 * p[i].max(INTERIOR_FLOOR);
        x[i] = p[i] + h;
        let up = spec.value_raw(&x)?;
        x[i] = p[i] - h;
        let down = spec.value_raw(&x)?;
        x[i] = p[i];
        out.push((up - down) / (2.0 * h));
    }
    Ok(out)
}
