//! Quantum Z-entropies, Dicke reduced states and the LMG block-entropy asymptotics.

mod density;
mod dicke;
mod lmg;

pub use density::{
    eigenvalues, format_density_matrix, parse_density_matrix, quantum_renyi, quantum_z_ab, quantum_z_entropy,
    trace_power, von_neumann, Complex64, DensityMatrix, CLAMP_FLOOR, HERMITIAN_TOL, PSD_FLOOR, TRACE_TOL,
};
pub use dicke::{block_basis, dicke_reduced_density, dicke_spectrum, DickeSpec};
pub use lmg::{extensive_alpha, lmg_asymptotic_za0, lmg_sweep, LmgParams, LmgRow};
