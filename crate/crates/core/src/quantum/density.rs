use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;

use crate::entropy::{boltzmann, z_entropy, Distribution, EntropySpec};
use crate::error::{Error, Result};
use crate::group_log::GroupFunction;

pub use nalgebra::Complex;
pub type Complex64 = Complex<f64>;

pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues down to `-PSD_FLOOR` are accepted as numerical noise.
pub const PSD_FLOOR: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues below this are set to zero before taking powers.
pub const CLAMP_FLOOR: f64 = 1e-12;

/// Validated density matrix with its spectrum cached (nonincreasing, clamped).
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
    eigenvalues: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        let d = entries.nrows();
        if d == 0 || entries.ncols() != d {
            return Err(Error::DensityMatrix(format!(
                "expected a nonempty square matrix, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        for i in 0..d {
            for j in 0..=i {
                let gap = (entries[(i, j)] - entries[(j, i)].conj()).norm();
                if !(gap <= HERMITIAN_TOL) {
                    return Err(Error::DensityMatrix(format!("not Hermitian at ({i},{j}): deviation {gap:e}")));
                }
            }
        }
        let trace: Complex64 = entries.diagonal().iter().sum();
        if !((trace.re - 1.0).abs() <= TRACE_TOL && trace.im.abs() <= TRACE_TOL) {
            return Err(Error::DensityMatrix(format!("trace {trace} is not 1")));
        }
        let mut eigenvalues = hermitian_eigenvalues(&entries)?;
        if let Some(&min) = eigenvalues.iter().min_by(|a, b| a.total_cmp(b)) {
            if min < -PSD_FLOOR {
                return Err(Error::DensityMatrix(format!("negative eigenvalue {min:e}")));
            }
        }
        for v in &mut eigenvalues {
            if *v < CLAMP_FLOOR {
                *v = 0.0;
            }
        }
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Ok(DensityMatrix { entries, eigenvalues })
    }

    /// Real symmetric input.
    pub fn from_real(rows: &[Vec<f64>]) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::DensityMatrix("rows of unequal length".into()));
        }
        Self::new(DMatrix::from_fn(d, d, |i, j| Complex64::new(rows[i][j], 0.0)))
    }

    pub fn diagonal(p: &[f64]) -> Result<Self> {
        let d = p.len();
        Self::new(DMatrix::from_fn(
            d,
            d,
            |i, j| if i == j { Complex64::new(p[i], 0.0) } else { Complex64::new(0.0, 0.0) },
        ))
    }

    pub fn maximally_mixed(d: usize) -> Result<Self> {
        Self::diagonal(&vec![1.0 / d as f64; d])
    }

    /// `|ψ⟩⟨ψ|` for a state vector, normalized first.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            return Err(Error::DensityMatrix("zero state vector".into()));
        }
        let d = psi.len();
        Self::new(DMatrix::from_fn(d, d, |i, j| psi[i] * psi[j].conj() / (norm * norm)))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Spectrum as a classical distribution (renormalized after clamping).
    pub fn spectrum(&self) -> Distribution {
        Distribution::renormalized(self.eigenvalues.clone()).expect("validated spectrum")
    }

    /// `ρ ⊗ σ`.
    pub fn kron(&self, other: &DensityMatrix) -> Result<Self> {
        Self::new(self.entries.kronecker(&other.entries))
    }
}

/// Spectrum of a Hermitian matrix. The tridiagonal QR in nalgebra can return
/// NaN on some very sparse inputs; those are retried after conjugation by a
/// fixed dense reflection, which leaves the spectrum unchanged.
fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let solve = |m: DMatrix<Complex64>| -> Vec<f64> { SymmetricEigen::new(m).eigenvalues.iter().copied().collect() };
    let first = solve(m.clone());
    if first.iter().all(|x| x.is_finite()) {
        return Ok(first);
    }
    let d = m.nrows();
    let v = DVector::from_fn(d, |i, _| Complex64::new(1.0 + i as f64, 0.5 * i as f64));
    let h = DMatrix::identity(d, d) - (&v * v.adjoint()) * Complex64::new(2.0 / v.norm_squared(), 0.0);
    let mut conj = &h * m * h.adjoint();
    for i in 0..d {
        conj[(i, i)].im = 0.0;
        for j in 0..i {
            conj[(j, i)] = conj[(i, j)].conj();
        }
    }
    let second = solve(conj);
    if second.iter().all(|x| x.is_finite()) {
        Ok(second)
    } else {
        Err(Error::DensityMatrix("eigenvalue computation did not converge".into()))
    }
}

impl Serialize for DensityMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| [self.entries[(i, j)].re, self.entries[(i, j)].im]).collect())
            .collect();
        rows.serialize(s)
    }
}

pub fn eigenvalues(rho: &DensityMatrix) -> Vec<f64> {
    rho.eigenvalues.clone()
}

/// `tr ρ^α` over the clamped spectrum, with `0^α = 0`.
pub fn trace_power(rho: &DensityMatrix, alpha: f64) -> f64 {
    rho.eigenvalues.iter().filter(|&&x| x > 0.0).map(|x| x.powf(alpha)).sum()
}

/// `ln_G(tr ρ^α)/(1-α)`.
pub fn quantum_z_entropy(g: &GroupFunction, alpha: f64, rho: &DensityMatrix) -> Result<f64> {
    if alpha == 1.0 {
        return Err(Error::AlphaOne("quantum Z-entropy"));
    }
    z_entropy(g, alpha, &rho.spectrum())
}

pub fn quantum_renyi(alpha: f64, rho: &DensityMatrix) -> Result<f64> {
    quantum_z_entropy(&GroupFunction::Identity, alpha, rho)
}

/// `-Σ λ ln λ`.
pub fn von_neumann(rho: &DensityMatrix) -> f64 {
    boltzmann(&rho.spectrum())
}

/// `[(tr ρ^α)^a - (tr ρ^α)^b]/((a-b)(1-α))`.
pub fn quantum_z_ab(a: f64, b: f64, alpha: f64, rho: &DensityMatrix) -> Result<f64> {
    EntropySpec::z_ab(a, b, alpha)?.value(&rho.spectrum())
}

/// Parses a plain-text matrix: one row per line, each row a comma-separated
/// list of `real,imag` pairs. Blank lines and lines starting with `#` are skipped.
pub fn parse_density_matrix(text: &str) -> Result<DensityMatrix> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<f64> = line
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::DensityMatrix(format!("line {}: {e}", lineno + 1)))?;
        if !nums.len().is_multiple_of(2) {
            return Err(Error::DensityMatrix(format!(
                "line {}: expected real,imag pairs, got {} numbers",
                lineno + 1,
                nums.len()
            )));
        }
        rows.push(nums.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect::<Vec<_>>());
    }
    let d = rows.len();
    if let Some(bad) = rows.iter().position(|r| r.len() != d) {
        return Err(Error::DensityMatrix(format!("row {} has {} entries, expected {d}", bad + 1, rows[bad].len())));
    }
    DensityMatrix::new(DMatrix::from_fn(d, d, |i, j| rows[i][j]))
}

/// Inverse of [`parse_density_matrix`].
pub fn format_density_matrix(rho: &DensityMatrix) -> String {
    let mut out = String::new();
    for i in 0..rho.dim() {
        let cells: Vec<_> =
            (0..rho.dim()).map(|j| format!("{:e},{:e}", rho.entries[(i, j)].re, rho.entries[(i, j)].im)).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectra_of_simple_states() {
        assert_eq!(DensityMatrix::diagonal(&[0.5, 0.5]).unwrap().eigenvalues(), &[0.5, 0.5]);
        let pure = DensityMatrix::pure(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]).unwrap();
        let ev = pure.eigenvalues();
        assert!((ev[0] - 1.0).abs() < 1e-15 && ev[1] == 0.0);

        let rho = DensityMatrix::from_real(&[vec![0.6, 0.2], vec![0.2, 0.4]]).unwrap();
        let disc = (0.1f64 * 0.1 + 0.2 * 0.2).sqrt();
        let ev = rho.eigenvalues();
        assert!((ev[0] - (0.5 + disc)).abs() < 1e-14);
        assert!((ev[1] - (0.5 - disc)).abs() < 1e-14);
    }

    #[test]
    fn rejects_invalid_matrices() {
        assert!(DensityMatrix::from_real(&[vec![0.5, 0.1], vec![0.2, 0.5]]).is_err());
        assert!(DensityMatrix::diagonal(&[0.5, 0.6]).is_err());
        assert!(DensityMatrix::diagonal(&[1.5, -0.5]).is_err());
        assert!(DensityMatrix::from_real(&[vec![1.0, 0.0]]).is_err());
    }

    #[test]
    fn trace_powers_and_entropies() {
        let rho = DensityMatrix::diagonal(&[0.5, 0.3, 0.2]).unwrap();
        assert!((trace_power(&rho, 2.0) - 0.38).abs() < 1e-15);
        let mixed = DensityMatrix::maximally_mixed(4).unwrap();
        assert!((trace_power(&mixed, 0.5) - 4f64.powf(0.5)).abs() < 1e-14);
        assert!((von_neumann(&mixed) - 4f64.ln()).abs() < 1e-14);
        let half = DensityMatrix::maximally_mixed(2).unwrap();
        assert!((von_neumann(&half.kron(&half).unwrap()) - 2.0 * 2f64.ln()).abs() < 1e-14);

        let pure = DensityMatrix::diagonal(&[1.0, 0.0]).unwrap();
        assert_eq!(quantum_renyi(0.5, &pure).unwrap(), 0.0);
        assert_eq!(quantum_z_ab(0.3, -0.2, 0.5, &pure).unwrap(), 0.0);
        assert_eq!(quantum_z_entropy(&GroupFunction::Identity, 1.0, &pure), Err(Error::AlphaOne("quantum Z-entropy")));
    }

    #[test]
    fn z_ab_tends_to_tsallis() {
        let rho = DensityMatrix::from_real(&[vec![0.6, 0.2], vec![0.2, 0.4]]).unwrap();
        let alpha = 0.5;
        let tsallis = (trace_power(&rho, alpha) - 1.0) / (1.0 - alpha);
        assert!((quantum_z_ab(1.0, 1e-9, alpha, &rho).unwrap() - tsallis).abs() < 1e-5);
    }

    #[test]
    fn parse_round_trip() {
        let text = "0.6,0,0.2,-0.1\n0.2,0.1,0.4,0\n";
        let rho = parse_density_matrix(text).unwrap();
        assert_eq!(rho.dim(), 2);
        assert_eq!(parse_density_matrix(&format_density_matrix(&rho)).unwrap(), rho);
        assert!(parse_density_matrix("1,0,0\n").is_err());
        assert!(parse_density_matrix("1,0\n0,0\n").is_err());
    }
}
