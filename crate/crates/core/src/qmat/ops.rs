use crate::error::{QentError, Result};
use crate::qmat::density::{check_dims, validate_density, DensityMatrix};
use crate::qmat::eigen::herm_eigenvalues;
use crate::qmat::matrix::{ComplexMatrix, C64, ZERO};
use crate::qmat::tol::HERMITIAN_TOL;

/// One of the three qubits of a three-qubit register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    pub fn index(self) -> usize {
        match self {
            Qubit::A => 0,
            Qubit::B => 1,
            Qubit::C => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Qubit::A => "A",
            Qubit::B => "B",
            Qubit::C => "C",
        }
    }
}

fn split(mut idx: usize, dims: &[usize], out: &mut [usize]) {
    for (k, &d) in dims.iter().enumerate().rev() {
        out[k] = idx % d;
        idx /= d;
    }
}

fn join(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x)
}

/// Transpose of subsystem `sys` of any square operator with the given dims.
pub fn transpose_subsystem(m: &ComplexMatrix, dims: &[usize], sys: usize) -> Result<ComplexMatrix> {
    if !m.is_square() {
        return Err(QentError::Dimension(
            "partial transpose of a non-square matrix".into(),
        ));
    }
    check_dims(m.rows(), dims)?;
    if sys >= dims.len() {
        return Err(QentError::Dimension(format!(
            "subsystem {} out of range for dims {:?}",
            sys, dims
        )));
    }
    let n = m.rows();
    let k = dims.len();
    let (mut ri, mut ci) = (vec![0; k], vec![0; k]);
    let mut out = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        split(r, dims, &mut ri);
        for col in 0..n {
            split(col, dims, &mut ci);
            std::mem::swap(&mut ri[sys], &mut ci[sys]);
            out[(r, col)] = m[(join(&ri, dims), join(&ci, dims))];
            std::mem::swap(&mut ri[sys], &mut ci[sys]);
        }
    }
    Ok(out)
}

/// rho^{T_sys} of a bipartite state.
pub fn partial_transpose(rho: &DensityMatrix, sys: usize) -> Result<ComplexMatrix> {
    rho.bipartite()?;
    transpose_subsystem(rho.mat(), rho.dims(), sys)
}

/// rho^{T_A}, rho^{T_B} or rho^{T_C} of a three-qubit state.
pub fn partial_transpose_qubit(rho: &DensityMatrix, qubit: Qubit) -> Result<ComplexMatrix> {
    if rho.dims() != [2, 2, 2] {
        return Err(QentError::Dimension(format!(
            "three-qubit partial transpose needs dims [2, 2, 2], got {:?}",
            rho.dims()
        )));
    }
    transpose_subsystem(rho.mat(), rho.dims(), qubit.index())
}

/// Partial trace of an operator, keeping the listed subsystems in their original order.
pub fn trace_out(m: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    if keep.is_empty() {
        return Err(QentError::Empty(
            "partial trace must keep a subsystem".into(),
        ));
    }
    check_dims(m.rows(), dims)?;
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.iter().any(|&s| s >= dims.len()) {
        return Err(QentError::Dimension(format!(
            "kept subsystems {:?} out of range for dims {:?}",
            keep, dims
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|s| !keep.contains(s)).collect();
    let kdims: Vec<usize> = keep.iter().map(|&s| dims[s]).collect();
    let tdims: Vec<usize> = traced.iter().map(|&s| dims[s]).collect();
    let nk: usize = kdims.iter().product();
    let nt: usize = tdims.iter().product();

    let k = dims.len();
    let mut full = vec![0; k];
    let (mut kd_r, mut kd_c, mut td) = (
        vec![0; keep.len()],
        vec![0; keep.len()],
        vec![0; traced.len()],
    );
    let mut index_of = |kd: &[usize], td: &[usize]| {
        for (slot, &s) in keep.iter().enumerate() {
            full[s] = kd[slot];
        }
        for (slot, &s) in traced.iter().enumerate() {
            full[s] = td[slot];
        }
        join(&full, dims)
    };

    let mut out = ComplexMatrix::zeros(nk, nk);
    for r in 0..nk {
        split(r, &kdims, &mut kd_r);
        for col in 0..nk {
            split(col, &kdims, &mut kd_c);
            let mut acc = ZERO;
            for t in 0..nt {
                split(t, &tdims, &mut td);
                let i = index_of(&kd_r, &td);
                let j = index_of(&kd_c, &td);
                acc += m[(i, j)];
            }
            out[(r, col)] = acc;
        }
    }
    Ok(out)
}

pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let m = trace_out(rho.mat(), rho.dims(), keep)?;
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    let kdims: Vec<usize> = kept.iter().map(|&s| rho.dims()[s]).collect();
    validate_density(&m, &kdims)
}

/// Realignment of a d x d bipartite operator: block (i, k) becomes row i*d + k.
pub fn realign_matrix(m: &ComplexMatrix, dims: &[usize]) -> Result<ComplexMatrix> {
    let d = match dims {
        &[d1, d2] if d1 == d2 => d1,
        _ => {
            return Err(QentError::Dimension(format!(
                "realignment needs dims [d, d], got {:?}",
                dims
            )))
        }
    };
    check_dims(m.rows(), dims)?;
    Ok(ComplexMatrix::from_fn(d * d, d * d, |row, col| {
        let (i, k) = (row / d, row % d);
        let (j, l) = (col / d, col % d);
        m[(i * d + j, k * d + l)]
    }))
}

pub fn realign(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    realign_matrix(rho.mat(), rho.dims())
}

/// Sum of singular values. Uses the Hermitian dilation [[0, A], [A^dagger, 0]],
/// whose spectrum is {+-sigma_i}, so small singular values keep full precision.
pub fn trace_norm(a: &ComplexMatrix) -> Result<f64> {
    if !a.is_square() {
        return Err(QentError::Dimension(format!(
            "trace norm needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.hermiticity_defect() <= HERMITIAN_TOL {
        let s = herm_eigenvalues(a)?;
        return Ok(s.eigenvalues.iter().map(|x| x.abs()).sum());
    }
    let n = a.rows();
    let dil = ComplexMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, false) => a[(i, j - n)],
        (false, true) => a[(j, i - n)].conj(),
        _ => ZERO,
    });
    let s = herm_eigenvalues(&dil)?;
    Ok(s.eigenvalues.iter().map(|x| x.abs()).sum::<f64>() / 2.0)
}

/// Tr(h rho) for Hermitian h.
pub fn expectation(h: &ComplexMatrix, rho: &DensityMatrix) -> Result<f64> {
    expectation_op(h, rho.mat())
}

pub fn expectation_op(h: &ComplexMatrix, rho: &ComplexMatrix) -> Result<f64> {
    if h.rows() != rho.rows() || h.cols() != rho.cols() {
        return Err(QentError::Dimension(format!(
            "operator is {}x{} but the state is {}x{}",
            h.rows(),
            h.cols(),
            rho.rows(),
            rho.cols()
        )));
    }
    let defect = h.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(QentError::NotHermitian(defect));
    }
    Ok(h.trace_product(rho)?.re)
}

/// <psi| h |psi> for a unit vector psi.
pub fn expectation_pure(h: &ComplexMatrix, psi: &[C64]) -> Result<f64> {
    if h.rows() != psi.len() {
        return Err(QentError::Dimension(
            "vector length does not match operator".into(),
        ));
    }
    let hp = h.apply(psi);
    Ok(psi
        .iter()
        .zip(&hp)
        .map(|(a, b)| a.conj() * b)
        .sum::<C64>()
        .re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::matrix::{c, re, tensor};

    fn phi_plus() -> DensityMatrix {
        let s = 1.0 / 2f64.sqrt();
        DensityMatrix::from_pure(&[re(s), ZERO, ZERO, re(s)], &[2, 2]).unwrap()
    }

    #[test]
    fn pt_of_bell_state_is_half_swap() {
        let pt = partial_transpose(&phi_plus(), 1).unwrap();
        let mut swap = ComplexMatrix::zeros(4, 4);
        for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            swap[(i, j)] = re(0.5);
        }
        assert!(pt.max_diff(&swap) < 1e-15);
    }

    #[test]
    fn pt_index_oracle_2x3() {
        let m = ComplexMatrix::from_fn(6, 6, |i, j| c((i * 6 + j) as f64, (j as f64) - (i as f64)));
        let pt = transpose_subsystem(&m, &[2, 3], 1).unwrap();
        for i in 0..2 {
            for k in 0..3 {
                for j in 0..2 {
                    for l in 0..3 {
                        assert_eq!(pt[(i * 3 + k, j * 3 + l)], m[(i * 3 + l, j * 3 + k)]);
                    }
                }
            }
        }
    }

    #[test]
    fn pt_rejects_three_parties() {
        let rho = DensityMatrix::maximally_mixed(&[2, 2, 2]);
        assert!(matches!(
            partial_transpose(&rho, 0),
            Err(QentError::Dimension(_))
        ));
        assert!(partial_transpose_qubit(&rho, Qubit::B).is_ok());
        let two = DensityMatrix::maximally_mixed(&[2, 4]);
        assert!(partial_transpose_qubit(&two, Qubit::A).is_err());
    }

    #[test]
    fn partial_trace_of_bell_is_mixed() {
        let a = partial_trace(&phi_plus(), &[0]).unwrap();
        assert!(a.mat().max_diff(&ComplexMatrix::identity(2).scale(0.5)) < 1e-15);
    }

    #[test]
    fn partial_trace_of_product() {
        let ra = ComplexMatrix::from_vec(2, 2, vec![re(0.7), c(0.1, 0.2), c(0.1, -0.2), re(0.3)])
            .unwrap();
        let rb = ComplexMatrix::diag(&[0.2, 0.5, 0.3]);
        let ab = validate_density(&tensor(&ra, &rb), &[2, 3]).unwrap();
        assert!(partial_trace(&ab, &[0]).unwrap().mat().max_diff(&ra) < 1e-12);
        assert!(partial_trace(&ab, &[1]).unwrap().mat().max_diff(&rb) < 1e-12);
    }

    #[test]
    fn empty_keep_rejected() {
        assert!(matches!(
            partial_trace(&phi_plus(), &[]),
            Err(QentError::Empty(_))
        ));
    }

    #[test]
    fn realign_matches_two_qubit_display() {
        // entry a_{rc} (1-based) encoded as 10r + c
        let m = ComplexMatrix::from_fn(4, 4, |i, j| re((10 * (i + 1) + j + 1) as f64));
        let r = realign_matrix(&m, &[2, 2]).unwrap();
        let expect = [
            [11, 12, 21, 22],
            [13, 14, 23, 24],
            [31, 32, 41, 42],
            [33, 34, 43, 44],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(r[(i, j)].re, expect[i][j] as f64);
            }
        }
    }

    #[test]
    fn realign_product_state_norm() {
        let rho = DensityMatrix::maximally_mixed(&[2, 2]);
        let tn = trace_norm(&realign(&rho).unwrap()).unwrap();
        assert!((tn - 0.5).abs() < 1e-12);
        assert!(realign(&DensityMatrix::maximally_mixed(&[2, 3])).is_err());
    }

    #[test]
    fn trace_norm_basics() {
        assert_eq!(trace_norm(&ComplexMatrix::zeros(3, 3)).unwrap(), 0.0);
        assert!((trace_norm(phi_plus().mat()).unwrap() - 1.0).abs() < 1e-12);
        // non-Hermitian: singular values of [[0, 2], [0, 0]] are {2, 0}
        let n = ComplexMatrix::from_real(2, 2, &[0.0, 2.0, 0.0, 0.0]).unwrap();
        assert!((trace_norm(&n).unwrap() - 2.0).abs() < 1e-12);
        assert!(trace_norm(&ComplexMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn expectation_checks() {
        let rho = phi_plus();
        assert!((expectation(&ComplexMatrix::identity(4), &rho).unwrap() - 1.0).abs() < 1e-15);
        assert!(expectation(&ComplexMatrix::identity(2), &rho).is_err());
    }
}
