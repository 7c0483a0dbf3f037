use crate::error::{QentError, Result};
use crate::qmat::eigen::herm_eigenvalues;
use crate::qmat::matrix::{ComplexMatrix, C64};
use crate::qmat::tol::Tolerances;

/// A validated density matrix with its subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn into_inner(self) -> ComplexMatrix {
        self.mat
    }

    /// (d1, d2) for a bipartite state.
    pub fn bipartite(&self) -> Result<(usize, usize)> {
        match self.dims.as_slice() {
            &[d1, d2] => Ok((d1, d2)),
            other => Err(QentError::Dimension(format!(
                "expected two subsystems, got dims {:?}",
                other
            ))),
        }
    }

    pub fn maximally_mixed(dims: &[usize]) -> Self {
        let n: usize = dims.iter().product();
        DensityMatrix {
            mat: ComplexMatrix::identity(n).scale(1.0 / n as f64),
            dims: dims.to_vec(),
        }
    }

    /// |psi><psi| after normalizing psi.
    pub fn from_pure(psi: &[C64], dims: &[usize]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(QentError::InvalidParameter("zero state vector".into()));
        }
        let v: Vec<C64> = psi.iter().map(|z| z / norm).collect();
        validate_density(&ComplexMatrix::outer(&v), dims)
    }

    /// Convex combination sum_i w_i rho_i; weights must be nonnegative and sum to 1.
    pub fn mixture(terms: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| QentError::Empty("mixture with no terms".into()))?;
        let mut acc = ComplexMatrix::zeros(first.1.dim(), first.1.dim());
        for (w, rho) in terms {
            if rho.dims != first.1.dims {
                return Err(QentError::Dimension(
                    "mixture terms disagree on dims".into(),
                ));
            }
            if *w < 0.0 {
                return Err(QentError::InvalidParameter(format!("negative weight {w}")));
            }
            acc = &acc + &rho.mat.scale(*w);
        }
        validate_density(&acc, &first.1.dims)
    }
}

pub fn check_dims(side: usize, dims: &[usize]) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(QentError::Dimension(format!("invalid dims {:?}", dims)));
    }
    let prod: usize = dims.iter().product();
    if prod != side {
        return Err(QentError::Dimension(format!(
            "dims {:?} multiply to {} but the matrix side is {}",
            dims, prod, side
        )));
    }
    Ok(())
}

pub fn validate_density(m: &ComplexMatrix, dims: &[usize]) -> Result<DensityMatrix> {
    validate_density_with(m, dims, &Tolerances::default())
}

pub fn validate_density_with(
    m: &ComplexMatrix,
    dims: &[usize],
    tol: &Tolerances,
) -> Result<DensityMatrix> {
    if !m.is_square() {
        return Err(QentError::Dimension(format!(
            "density matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    check_dims(m.rows(), dims)?;
    let herm = m.hermiticity_defect();
    if herm > tol.hermitian {
        return Err(QentError::HermiticityViolation(herm));
    }
    let tr = (m.trace() - C64::new(1.0, 0.0)).norm();
    if tr > tol.trace {
        return Err(QentError::TraceViolation(tr));
    }
    let lmin = herm_eigenvalues(m)?.min();
    if lmin < tol.psd_floor {
        return Err(QentError::NegativityViolation(lmin));
    }
    Ok(DensityMatrix {
        mat: m.clone(),
        dims: dims.to_vec(),
    })
}
