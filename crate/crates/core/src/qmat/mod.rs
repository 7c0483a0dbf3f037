//! Dense complex matrices, Hermitian spectra and subsystem operations.

pub mod density;
pub mod eigen;
pub mod matrix;
pub mod ops;
pub mod tol;

pub use density::{validate_density, validate_density_with, DensityMatrix};
pub use eigen::{herm_eigen, herm_eigenvalues, lambda_min, EigenDecomposition, Spectrum};
pub use matrix::{c, ket, kron_vec, re, tensor, tensor_all, ComplexMatrix, C64, ONE, ZERO};
pub use ops::{
    expectation, expectation_op, expectation_pure, partial_trace, partial_transpose,
    partial_transpose_qubit, realign, realign_matrix, trace_norm, trace_out, transpose_subsystem,
    Qubit,
};
pub use tol::Tolerances;
