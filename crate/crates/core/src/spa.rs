//! Structural physical approximations of the partial transpose.
//!
//! Every map here mixes the partially transposed input with enough white
//! noise to make the overall map completely positive. The smallest
//! eigenvalue of the output is then compared with a dimension dependent
//! floor, which is stored next to the output as `threshold`.

use crate::error::{QentError, Result};
use crate::qmat::tol::PSD_FLOOR;
use crate::qmat::{
    herm_eigenvalues, partial_transpose, partial_transpose_qubit, re, validate_density,
    ComplexMatrix, DensityMatrix, Qubit, C64,
};

/// Output of an SPA-PT map.
#[derive(Debug, Clone)]
pub struct SpaState {
    pub rho_tilde: DensityMatrix,
    /// Weight of the depolarizing part actually used.
    pub mixing: f64,
    /// Smallest eigenvalue any separable input can produce.
    pub threshold: f64,
}

impl SpaState {
    pub fn lambda_min(&self) -> Result<f64> {
        Ok(herm_eigenvalues(self.rho_tilde.mat())?.min())
    }
}

/// W~ = p W + ((1 - p)/(d1 d2)) I.
#[derive(Debug, Clone)]
pub struct SpaWitness {
    pub w_tilde: DensityMatrix,
    pub p: f64,
    /// (1 - p)/(d1 d2); Tr(W~ rho) below this flags entanglement.
    pub r_bound: f64,
    pub d1: usize,
    pub d2: usize,
}

fn expect_dims(rho: &DensityMatrix, want: &[usize]) -> Result<()> {
    if rho.dims() != want {
        return Err(QentError::Dimension(format!(
            "expected dims {:?}, got {:?}",
            want,
            rho.dims()
        )));
    }
    Ok(())
}

fn mix_pt(pt: &ComplexMatrix, noise: f64, weight: f64) -> ComplexMatrix {
    &ComplexMatrix::identity(pt.rows()).scale(noise) + &pt.scale(weight)
}

/// d x d map: (d/(d^3+1)) I + (1/(d^3+1)) rho^{T_B}.
pub fn spa_pt_dd(rho: &DensityMatrix, d: usize) -> Result<SpaState> {
    expect_dims(rho, &[d, d])?;
    let k = (d * d * d + 1) as f64;
    let pt = partial_transpose(rho, 1)?;
    let out = mix_pt(&pt, d as f64 / k, 1.0 / k);
    Ok(SpaState {
        rho_tilde: validate_density(&out, &[d, d])?,
        mixing: (k - 1.0) / k,
        threshold: d as f64 / k,
    })
}

/// d1 x d2 map with lambda = 1/d1, d1 the smaller factor.
///
/// The floor `lambda d1 d2 / (1 + lambda d1^3 d2)` is returned as printed even
/// though for d1 != d2 it exceeds the spectrum of the maximally mixed output.
pub fn spa_pt_d1d2(rho: &DensityMatrix, d1: usize, d2: usize) -> Result<SpaState> {
    expect_dims(rho, &[d1, d2])?;
    let (lo, hi) = (d1.min(d2) as f64, d1.max(d2) as f64);
    let lam = 1.0 / lo;
    let g = lam * lo.powi(3) * hi;
    let p = g / (1.0 + g);
    let pt = partial_transpose(rho, 1)?;
    let out = mix_pt(&pt, p / (lo * hi), 1.0 - p);
    Ok(SpaState {
        rho_tilde: validate_density(&out, &[d1, d2])?,
        mixing: p,
        threshold: lam * lo * hi / (1.0 + g),
    })
}

/// Closed-form element map for two qubits.
pub fn spa_pt_two_qubit(rho: &DensityMatrix) -> Result<SpaState> {
    expect_dims(rho, &[2, 2])?;
    let e = |i: usize, j: usize| rho.mat()[(i - 1, j - 1)];
    let mut t = ComplexMatrix::zeros(4, 4);
    for i in 1..=4 {
        t[(i - 1, i - 1)] = (re(2.0) + e(i, i)) / 9.0;
    }
    let upper = [
        ((1, 2), e(1, 2).conj()),
        ((1, 3), e(1, 3)),
        ((1, 4), e(2, 3)),
        ((2, 3), e(1, 4)),
        ((2, 4), e(2, 4)),
        ((3, 4), e(3, 4).conj()),
    ];
    for ((i, j), v) in upper {
        t[(i - 1, j - 1)] = v / 9.0;
        t[(j - 1, i - 1)] = v.conj() / 9.0;
    }
    Ok(SpaState {
        rho_tilde: validate_density(&t, &[2, 2])?,
        mixing: 8.0 / 9.0,
        threshold: 2.0 / 9.0,
    })
}

/// Qutrit-qubit element map with a = b = c = 1/sqrt 2.
pub fn spa_pt_qutrit_qubit(rho: &DensityMatrix) -> Result<SpaState> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    spa_pt_qutrit_qubit_with(rho, h, h, h)
}

/// Qutrit-qubit element map with explicit parameters (a, b, c).
///
/// The output trace depends on the input; an output that is not a valid
/// state is reported as a validation error.
pub fn spa_pt_qutrit_qubit_with(rho: &DensityMatrix, a: f64, b: f64, c: f64) -> Result<SpaState> {
    expect_dims(rho, &[3, 2])?;
    let out = qutrit_qubit_elements(rho.mat(), a, b, c);
    // nominal values of the generic 2 x 3 map
    let g = 2.0 * 2.0 * 3.0;
    Ok(SpaState {
        rho_tilde: validate_density(&out, &[3, 2])?,
        mixing: g / (1.0 + g),
        threshold: 3.0 / (1.0 + g),
    })
}

/// The raw element table; no validation.
pub fn qutrit_qubit_elements(m: &ComplexMatrix, a: f64, b: f64, c: f64) -> ComplexMatrix {
    let t = |i: usize, j: usize| m[(i - 1, j - 1)];
    let k = 3.0 / 32.0;
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let one = re(1.0);
    let cj = |z: C64| z.conj();

    let d12 = k
        * (re(a2 + c2)
            + (t(3, 3) + t(4, 4)) * a2
            + (t(5, 5) + t(6, 6)) * c2
            + (t(3, 5) + cj(t(3, 5)) + t(4, 6) + cj(t(4, 6))) * (a * c));
    let o13 = k
        * ((one + t(5, 5) + t(6, 6)) * (b * c)
            - (t(1, 3) + t(2, 4)) * a2
            - (t(1, 5) + t(2, 6)) * (a * c)
            + (cj(t(3, 5)) + cj(t(4, 6))) * (a * b));
    let o15 = k
        * (-(one + t(3, 3) + t(4, 4)) * (a * b)
            - (t(1, 3) + t(2, 4)) * (a * c)
            - (t(1, 5) + t(2, 6)) * c2
            - (t(3, 5) + t(4, 6)) * (b * c));
    let d34 = k
        * (re(a2 + b2) + (t(1, 1) + t(2, 2)) * a2 + (t(5, 5) + t(6, 6)) * b2
            - (t(1, 5) + cj(t(1, 5))) * (a * b)
            - (t(2, 6) + cj(t(2, 6))) * (a * b));
    let o35 = k
        * ((one + t(1, 1) + t(2, 2)) * (a * c) - (t(1, 5) + t(2, 6)) * (b * c)
            + (cj(t(1, 3)) + cj(t(2, 4))) * (a * b)
            - (t(3, 5) + t(4, 6)) * b2);
    let d56 = k
        * (re(b2 + c2)
            + (t(1, 1) + t(2, 2)) * c2
            + (t(3, 3) + t(4, 4)) * b2
            + (t(1, 3) + cj(t(1, 3)) + t(2, 4) + cj(t(2, 4))) * (b * c));

    let w = |x: C64, y: C64| (x * 2.0 + y) / 12.0;
    let mut r = ComplexMatrix::zeros(6, 6);
    let mut put = |i: usize, j: usize, v: C64| {
        r[(i - 1, j - 1)] = v;
        if i != j {
            r[(j - 1, i - 1)] = v.conj();
        }
    };
    put(1, 1, d12 + w(t(1, 1), t(2, 2)));
    put(2, 2, d12 + w(t(2, 2), t(1, 1)));
    put(1, 3, o13 + w(t(1, 3), t(2, 4)));
    put(2, 4, o13 + w(t(2, 4), t(1, 3)));
    put(1, 5, o15 + w(t(1, 5), t(2, 6)));
    put(2, 6, o15 + w(t(2, 6), t(1, 5)));
    put(3, 3, d34 + w(t(3, 3), t(4, 4)));
    put(4, 4, d34 + w(t(4, 4), t(3, 3)));
    put(3, 5, o35 + w(t(3, 5), t(4, 6)));
    put(4, 6, o35 + w(t(4, 6), t(3, 5)));
    put(5, 5, d56 + w(t(5, 5), t(6, 6)));
    put(6, 6, d56 + w(t(6, 6), t(5, 5)));
    put(1, 2, cj(t(1, 2)) / 12.0);
    put(1, 4, t(2, 3) / 12.0);
    put(1, 6, t(2, 5) / 12.0);
    put(2, 3, t(1, 4) / 12.0);
    put(2, 5, t(1, 6) / 12.0);
    put(3, 4, cj(t(3, 4)) / 12.0);
    put(3, 6, t(4, 5) / 12.0);
    put(4, 5, t(3, 6) / 12.0);
    put(5, 6, cj(t(5, 6)) / 12.0);
    r
}

/// Per-qubit map for three qubits: I/10 + rho^{T_q}/5.
pub fn spa_pt_three_qubit(rho: &DensityMatrix, qubit: Qubit) -> Result<SpaState> {
    let pt = partial_transpose_qubit(rho, qubit)?;
    let out = mix_pt(&pt, 0.1, 0.2);
    Ok(SpaState {
        rho_tilde: validate_density(&out, &[2, 2, 2])?,
        mixing: 0.8,
        threshold: 0.1,
    })
}

/// Turns a witness W into the state W~; with `p = None` the largest p that
/// keeps W~ positive is used.
pub fn spa_witness(w: &ComplexMatrix, d1: usize, d2: usize, p: Option<f64>) -> Result<SpaWitness> {
    let n = d1 * d2;
    if !w.is_square() || w.rows() != n {
        return Err(QentError::Dimension(format!(
            "witness is {}x{}, expected {n}x{n}",
            w.rows(),
            w.cols()
        )));
    }
    let defect = w.hermiticity_defect();
    if defect > crate::qmat::tol::HERMITIAN_TOL {
        return Err(QentError::NotHermitian(defect));
    }
    let tr = w.trace().re;
    if tr <= 0.0 {
        return Err(QentError::InvalidParameter(format!(
            "witness trace {tr} cannot be normalized"
        )));
    }
    let w = w.scale(1.0 / tr);
    let lmin = herm_eigenvalues(&w)?.min();
    if lmin >= PSD_FLOOR {
        return Err(QentError::NotAWitness(lmin));
    }
    let nf = n as f64;
    let p = match p {
        None => (1.0 / nf) / (1.0 / nf + lmin.abs()),
        Some(p) if (0.0..=1.0).contains(&p) => p,
        Some(p) => {
            return Err(QentError::InvalidParameter(format!(
                "p = {p} outside [0, 1]"
            )));
        }
    };
    let wt = mix_pt(&w, (1.0 - p) / nf, p);
    Ok(SpaWitness {
        w_tilde: validate_density(&wt, &[d1, d2])?,
        p,
        r_bound: (1.0 - p) / nf,
        d1,
        d2,
    })
}
