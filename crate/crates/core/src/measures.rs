//! Entanglement and coherence quantifiers.

use crate::error::{QentError, Result};
use crate::qmat::matrix::pauli_y;
use crate::qmat::{
    herm_eigen, herm_eigenvalues, partial_trace, partial_transpose, realign, tensor, trace_norm,
    ComplexMatrix, DensityMatrix, C64,
};
use crate::spa::spa_pt_dd;

/// A measure evaluation; `d` is the local dimension it was computed in.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureValue {
    pub value: f64,
    pub measure: &'static str,
    pub d: usize,
}

impl MeasureValue {
    fn new(measure: &'static str, value: f64, d: usize) -> Self {
        MeasureValue {
            value: value.max(0.0),
            measure,
            d,
        }
    }
}

fn square_bipartite(rho: &DensityMatrix) -> Result<usize> {
    let (d1, d2) = rho.bipartite()?;
    if d1 != d2 {
        return Err(QentError::Dimension(format!(
            "expected d x d, got {d1} x {d2}"
        )));
    }
    Ok(d1)
}

/// Wootters concurrence of a two-qubit state.
///
/// Uses the singular values of X^T (s_y s_y) X with rho = X X^dagger, X built
/// only from eigenvectors above noise level, so rank deficient inputs do not
/// pick up square roots of rounding errors.
pub fn concurrence_2q(rho: &DensityMatrix) -> Result<MeasureValue> {
    if rho.dims() != [2, 2] {
        return Err(QentError::Dimension(format!(
            "expected [2, 2], got {:?}",
            rho.dims()
        )));
    }
    let yy = tensor(&pauli_y(), &pauli_y());
    let e = herm_eigen(rho.mat())?;
    let cols: Vec<Vec<C64>> = (0..4)
        .filter(|&k| e.values[k] > 1e-13)
        .map(|k| {
            e.vector(k)
                .into_iter()
                .map(|v| v * e.values[k].sqrt())
                .collect()
        })
        .collect();
    let r = cols.len();
    let tau = ComplexMatrix::from_fn(r, r, |i, j| {
        let yx = yy.apply(&cols[j]);
        cols[i].iter().zip(&yx).map(|(a, b)| a * b).sum()
    });
    let gram = &tau.adjoint() * &tau;
    let mut l: Vec<f64> = if r == 0 {
        Vec::new()
    } else {
        herm_eigenvalues(&gram)?
            .eigenvalues
            .iter()
            .map(|x| x.max(0.0).sqrt())
            .collect()
    };
    l.resize(4, 0.0);
    l.sort_by(|a, b| b.total_cmp(a));
    Ok(MeasureValue::new(
        "concurrence",
        l[0] - l[1] - l[2] - l[3],
        2,
    ))
}

/// sqrt(2 (1 - Tr rho_A^2)) for a pure state on d1 x d2.
pub fn concurrence_pure(psi: &[C64], d1: usize, d2: usize) -> Result<MeasureValue> {
    let rho = DensityMatrix::from_pure(psi, &[d1, d2])?;
    let ra = partial_trace(&rho, &[0])?;
    let purity = ra.mat().trace_product(ra.mat())?.re;
    Ok(MeasureValue::new(
        "concurrence",
        (2.0 * (1.0 - purity)).max(0.0).sqrt(),
        d1.min(d2),
    ))
}

/// (||rho^{T_B}||_1 - 1)/(d - 1) with d the smaller local dimension.
pub fn negativity(rho: &DensityMatrix) -> Result<MeasureValue> {
    let (d1, d2) = rho.bipartite()?;
    let d = d1.min(d2);
    let tn = trace_norm(&partial_transpose(rho, 1)?)?;
    Ok(MeasureValue::new(
        "negativity",
        (tn - 1.0) / (d as f64 - 1.0),
        d,
    ))
}

/// K max{d/(d^3+1) - lambda_min(rho~), 0} with K = d(d^3+1).
pub fn structured_negativity(rho: &DensityMatrix) -> Result<MeasureValue> {
    let d = square_bipartite(rho)?;
    let s = spa_pt_dd(rho, d)?;
    let k = (d * (d * d * d + 1)) as f64;
    let gap = s.threshold - s.lambda_min()?;
    Ok(MeasureValue::new(
        "structured_negativity",
        k * gap.max(0.0),
        d,
    ))
}

/// Lower bound on concurrence from the PT and realignment trace norms.
pub fn concurrence_lb_chen(rho: &DensityMatrix) -> Result<MeasureValue> {
    let d = square_bipartite(rho)?;
    let a = trace_norm(&partial_transpose(rho, 1)?)?;
    let b = trace_norm(&realign(rho)?)?;
    let df = d as f64;
    let v = (2.0 / (df * (df - 1.0))).sqrt() * (a.max(b) - 1.0);
    Ok(MeasureValue::new("concurrence_lb", v, d))
}

fn three_qubit_vector(psi: &[C64]) -> Result<()> {
    if psi.len() != 8 {
        return Err(QentError::Dimension(format!(
            "expected 8 amplitudes, got {}",
            psi.len()
        )));
    }
    Ok(())
}

/// 4 |d1 - 2 d2 + 4 d3| from the eight amplitudes a..h.
pub fn tangle_pure(psi: &[C64]) -> Result<MeasureValue> {
    three_qubit_vector(psi)?;
    let (a, b, c, d, e, f, g, h) = (
        psi[0], psi[1], psi[2], psi[3], psi[4], psi[5], psi[6], psi[7],
    );
    let d1 = a * a * h * h + b * b * g * g + c * c * f * f + e * e * d * d;
    let d2 = a * h * d * e
        + a * h * f * c
        + a * h * g * b
        + d * e * f * c
        + d * e * g * b
        + f * c * g * b;
    let d3 = a * g * f * d + h * b * c * e;
    Ok(MeasureValue::new(
        "tangle",
        4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm(),
        2,
    ))
}

/// Average of the three residual negativities of a pure three-qubit state.
///
/// Two-qubit terms use (||rho_ij^{T_i}|| - 1)/2 and the one-versus-two terms
/// use 2 sqrt(det rho_i).
pub fn three_pi(psi: &[C64]) -> Result<MeasureValue> {
    three_qubit_vector(psi)?;
    let rho = DensityMatrix::from_pure(psi, &[2, 2, 2])?;
    let pair = |keep: [usize; 2]| -> Result<f64> {
        let r = partial_trace(&rho, &keep)?;
        Ok((trace_norm(&partial_transpose(&r, 0)?)? - 1.0) / 2.0)
    };
    let single = |k: usize| -> Result<f64> {
        let m = partial_trace(&rho, &[k])?.into_inner();
        let det = (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re;
        Ok(2.0 * det.max(0.0).sqrt())
    };
    let (ab, ac, bc) = (pair([0, 1])?, pair([0, 2])?, pair([1, 2])?);
    let pa = single(0)?.powi(2) - ab * ab - ac * ac;
    let pb = single(1)?.powi(2) - ab * ab - bc * bc;
    let pc = single(2)?.powi(2) - ac * ac - bc * bc;
    Ok(MeasureValue::new("three_pi", (pa + pb + pc) / 3.0, 2))
}

/// Sum of the moduli of the off-diagonal entries.
pub fn l1_coherence(m: &ComplexMatrix) -> f64 {
    let mut s = 0.0;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j {
                s += m[(i, j)].norm();
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{c, re, ZERO};
    use crate::states;

    #[test]
    fn bell_concurrence_is_one() {
        let v = concurrence_2q(&states::phi_plus()).unwrap();
        assert!((v.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn rho1_concurrence_is_twice_the_gap() {
        let (a, f) = (0.05, c(0.2, 0.2));
        let v = concurrence_2q(&states::rho1(a, 0.5 - a, f).unwrap()).unwrap();
        assert!((v.value - 2.0 * (f.norm() - a)).abs() < 1e-10);
    }

    #[test]
    fn product_has_no_concurrence() {
        let v = concurrence_2q(&DensityMatrix::maximally_mixed(&[2, 2])).unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn pure_concurrence_maximal() {
        let s = 1.0 / 3f64.sqrt();
        let psi = states::sparse_vec(9, &[(0, s), (4, s), (8, s)]);
        let v = concurrence_pure(&psi, 3, 3).unwrap();
        assert!((v.value - (4.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn werner_negativities() {
        for f in [0.2, 0.5, 0.9, 1.0] {
            let w = states::werner(f).unwrap();
            let want = ((3.0 * f - 1.0) / 2.0).max(0.0);
            assert!((negativity(&w).unwrap().value - want).abs() < 1e-9);
            assert!((structured_negativity(&w).unwrap().value - want).abs() < 1e-9);
        }
    }

    #[test]
    fn chen_bound_bell() {
        let v = concurrence_lb_chen(&states::werner(1.0).unwrap()).unwrap();
        assert!((v.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn tangle_values() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((tangle_pure(&states::ghz_vector(s, s)).unwrap().value - 1.0).abs() < 1e-14);
        let t = 1.0 / 3f64.sqrt();
        assert!(tangle_pure(&states::w_vector(t, t, t)).unwrap().value < 1e-14);
        assert!(tangle_pure(&[ZERO; 4]).is_err());
    }

    #[test]
    fn three_pi_ghz_and_product() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((three_pi(&states::ghz_vector(s, s)).unwrap().value - 1.0).abs() < 1e-12);
        let mut p = vec![ZERO; 8];
        p[0] = re(1.0);
        assert!(three_pi(&p).unwrap().value.abs() < 1e-12);
    }

    #[test]
    fn coherence_of_w() {
        assert!((l1_coherence(states::w_state().mat()) - 2.0).abs() < 1e-14);
    }
}
