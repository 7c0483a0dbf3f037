//! Entanglement detection and quantification for small density matrices.
//!
//! Bipartite states up to two qutrits and three-qubit states are handled with
//! dense complex matrices and a Jacobi eigensolver. On top of that sit the
//! structural physical approximation of partial transposition, witness based
//! criteria, l1-norm coherence bounds and a three-qubit classifier.

pub mod classify3;
pub mod coherence;
pub mod detect;
pub mod error;
pub mod measures;
pub mod qmat;
pub mod repro;
pub mod spa;
pub mod states;

pub use error::{QentError, Result};
