use crate::error::{QentError, Result};
use crate::qmat::matrix::{ComplexMatrix, C64, ZERO};
use crate::qmat::tol::HERMITIAN_TOL;

const OFF_DIAG_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// max over returned pairs of |Hv - lambda v|.
    pub residual: f64,
}

impl Spectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }
}

/// Eigenpairs; column k of `vectors` belongs to `values[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
    pub residual: f64,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        (0..self.vectors.rows())
            .map(|i| self.vectors[(i, k)])
            .collect()
    }
}

pub fn herm_eigenvalues(h: &ComplexMatrix) -> Result<Spectrum> {
    let e = herm_eigen(h)?;
    Ok(Spectrum {
        eigenvalues: e.values,
        residual: e.residual,
    })
}

pub fn lambda_min(h: &ComplexMatrix) -> Result<f64> {
    Ok(herm_eigenvalues(h)?.min())
}

/// Cyclic complex Jacobi.
pub fn herm_eigen(h: &ComplexMatrix) -> Result<EigenDecomposition> {
    if !h.is_square() {
        return Err(QentError::Dimension(format!(
            "eigenvalues need a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let defect = h.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(QentError::NotHermitian(defect));
    }
    let n = h.rows();
    // symmetrize so tiny input asymmetry does not leak into the rotations
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            C64::new(h[(i, i)].re, 0.0)
        } else {
            (h[(i, j)] + h[(j, i)].conj()) * 0.5
        }
    });
    let mut v = ComplexMatrix::identity(n);
    for _ in 0..MAX_SWEEPS {
        if max_off_diag(&a) < OFF_DIAG_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);

    let mut residual = 0.0f64;
    for (k, &lam) in values.iter().enumerate() {
        let col: Vec<C64> = (0..n).map(|i| vectors[(i, k)]).collect();
        let hv = h.apply(&col);
        let r: f64 = hv
            .iter()
            .zip(&col)
            .map(|(x, y)| (x - y * lam).norm_sqr())
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
    }
    Ok(EigenDecomposition {
        values,
        vectors,
        residual,
    })
}

fn max_off_diag(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut m = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            m = m.max(a[(i, j)].norm());
        }
    }
    m
}

// Zero a[p][q] with U = diag(1, e^{-i phi}) * R(theta) acting on the (p, q) plane.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b < 1e-300 {
        return;
    }
    let n = a.rows();
    let phase = apq / b;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * b);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;

    // columns p, q of U
    let upp = C64::new(cs, 0.0);
    let upq = C64::new(sn, 0.0);
    let uqp = -phase.conj() * sn;
    let uqq = phase.conj() * cs;

    // A <- A U
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * upp + akq * uqp;
        a[(k, q)] = akp * upq + akq * uqq;
    }
    // A <- U^dagger A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = upp.conj() * apk + uqp.conj() * aqk;
        a[(q, k)] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * upp + vkq * uqp;
        v[(k, q)] = vkp * upq + vkq * uqq;
    }
}
