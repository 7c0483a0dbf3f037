//! Named states and state families used in examples, tests and table reproduction.

use crate::error::{QentError, Result};
use crate::qmat::{c, re, validate_density, ComplexMatrix, DensityMatrix, C64, ZERO};

const S2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Vector of length `n` with the given (index, amplitude) entries.
pub fn sparse_vec(n: usize, entries: &[(usize, f64)]) -> Vec<C64> {
    let mut v = vec![ZERO; n];
    for &(i, a) in entries {
        v[i] += re(a);
    }
    v
}

fn pure(entries: &[(usize, f64)], dims: &[usize]) -> Result<DensityMatrix> {
    let n = dims.iter().product();
    DensityMatrix::from_pure(&sparse_vec(n, entries), dims)
}

fn unit_interval(name: &str, x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(QentError::InvalidParameter(format!(
            "{name} = {x} outside [0, 1]"
        )));
    }
    Ok(())
}

pub fn phi_plus() -> DensityMatrix {
    pure(&[(0, S2), (3, S2)], &[2, 2]).unwrap()
}

pub fn phi_minus() -> DensityMatrix {
    pure(&[(0, S2), (3, -S2)], &[2, 2]).unwrap()
}

pub fn psi_minus() -> DensityMatrix {
    pure(&[(1, S2), (2, -S2)], &[2, 2]).unwrap()
}

/// F |psi-><psi-| + (1 - F) I/4.
pub fn werner(f: f64) -> Result<DensityMatrix> {
    unit_interval("F", f)?;
    let m = &psi_minus().mat().scale(f) + &ComplexMatrix::identity(4).scale((1.0 - f) / 4.0);
    validate_density(&m, &[2, 2])
}

/// diag(a, b, b, a) with coherence f between |01> and |10>.
pub fn rho1(a: f64, b: f64, f: C64) -> Result<DensityMatrix> {
    let mut m = ComplexMatrix::diag(&[a, b, b, a]);
    m[(1, 2)] = f;
    m[(2, 1)] = f.conj();
    validate_density(&m, &[2, 2])
}

/// Qutrit-qubit mixture: alpha on (|01> + |20>)/sqrt2, 1 - alpha on (|10> + |21>)/sqrt2.
pub fn rho2(alpha: f64) -> Result<DensityMatrix> {
    unit_interval("alpha", alpha)?;
    let mut m = ComplexMatrix::zeros(6, 6);
    for (i, j) in [(1, 1), (1, 4), (4, 1), (4, 4)] {
        m[(i, j)] = re(alpha / 2.0);
    }
    for (i, j) in [(2, 2), (2, 5), (5, 2), (5, 5)] {
        m[(i, j)] = re((1.0 - alpha) / 2.0);
    }
    validate_density(&m, &[3, 2])
}

/// Amplitude vector (k|00> + |11>)/sqrt2 whose PT is the two-qubit witness.
pub fn witness1_vector(k: C64) -> Vec<C64> {
    vec![k * S2, ZERO, ZERO, re(S2)]
}

/// The mixing constant used by the qutrit-qubit witness; infinite at alpha = 1.
pub fn kappa(alpha: f64) -> f64 {
    (alpha + (4.0 - 8.0 * alpha + 5.0 * alpha * alpha).sqrt()) / (2.0 * (1.0 - alpha))
}

/// (-kappa|11> + |20>)/sqrt(1 + kappa^2) on qutrit x qubit.
pub fn witness2_vector(kappa: f64) -> Vec<C64> {
    let n = (1.0 + kappa * kappa).sqrt();
    sparse_vec(6, &[(3, -kappa / n), (4, 1.0 / n)])
}

/// 3x3 bound-entangled family detected by realignment, 0 <= a <= 1.
pub fn horodecki_3x3(a: f64) -> Result<DensityMatrix> {
    unit_interval("a", a)?;
    let mut m = ComplexMatrix::zeros(9, 9);
    for i in 0..9 {
        m[(i, i)] = re(a);
    }
    for (i, j) in [(0, 4), (0, 8), (4, 8)] {
        m[(i, j)] = re(a);
        m[(j, i)] = re(a);
    }
    let s = (1.0 - a * a).sqrt() / 2.0;
    m[(6, 6)] = re((1.0 + a) / 2.0);
    m[(8, 8)] = re((1.0 + a) / 2.0);
    m[(6, 8)] = re(s);
    m[(8, 6)] = re(s);
    validate_density(&m.scale(1.0 / (8.0 * a + 1.0)), &[3, 3])
}

/// Two-qutrit PPT entangled state with the fixed (a, b, c) constants.
pub fn chessboard_abc() -> DensityMatrix {
    let r5 = 5f64.sqrt();
    let den = 3.0 + 9.0 * r5;
    let (a, b, cc) = ((1.0 + r5) / den, -2.0 / den, (-1.0 + r5) / den);
    let mut m = ComplexMatrix::diag(&[a, cc, a, a, a, cc, cc, a, a]);
    for (i, j) in [(0, 4), (0, 8), (5, 7)] {
        m[(i, j)] = re(b);
        m[(j, i)] = re(b);
    }
    validate_density(&m, &[3, 3]).unwrap()
}

/// alpha |phi+><phi+| + (1 - alpha) I/9 on two qutrits.
pub fn isotropic_qutrit(alpha: f64) -> Result<DensityMatrix> {
    let phi = pure(&[(0, 1.0), (4, 1.0), (8, 1.0)], &[3, 3])?;
    let m = &phi.mat().scale(alpha) + &ComplexMatrix::identity(9).scale((1.0 - alpha) / 9.0);
    validate_density(&m, &[3, 3])
}

/// Maximally entangled mixed state with concurrence `conc`.
pub fn mems(conc: f64) -> Result<DensityMatrix> {
    unit_interval("C", conc)?;
    let h = if conc >= 2.0 / 3.0 {
        conc / 2.0
    } else {
        1.0 / 3.0
    };
    let mut m = ComplexMatrix::diag(&[h, 1.0 - 2.0 * h, 0.0, h]);
    m[(0, 3)] = re(conc / 2.0);
    m[(3, 0)] = re(conc / 2.0);
    validate_density(&m, &[2, 2])
}

/// Two-qutrit mixture of |0i> - a|i0> (i = 1, 2) and |00> + |11> + |22>.
pub fn rho_a_qutrit(a: f64) -> Result<DensityMatrix> {
    let vs = [
        sparse_vec(9, &[(1, 1.0), (3, -a)]),
        sparse_vec(9, &[(2, 1.0), (6, -a)]),
        sparse_vec(9, &[(0, 1.0), (4, 1.0), (8, 1.0)]),
    ];
    let mut m = ComplexMatrix::zeros(9, 9);
    for v in &vs {
        m = &m + &ComplexMatrix::outer(v);
    }
    validate_density(&m.scale(1.0 / (5.0 + 2.0 * a * a)), &[3, 3])
}

/// (2/7) psi+ + (alpha/7) sigma+ + ((5 - alpha)/7) sigma-, 2 <= alpha <= 5.
pub fn rho_alpha_qutrit(alpha: f64) -> Result<DensityMatrix> {
    if !(0.0..=5.0).contains(&alpha) {
        return Err(QentError::InvalidParameter(format!(
            "alpha = {alpha} outside [0, 5]"
        )));
    }
    let psi = pure(&[(0, 1.0), (4, 1.0), (8, 1.0)], &[3, 3])?;
    let mut d = [0.0; 9];
    // sigma+ on |01>,|12>,|20>; sigma- on |10>,|21>,|02>
    for i in [1, 5, 6] {
        d[i] += alpha / 21.0;
    }
    for i in [3, 7, 2] {
        d[i] += (5.0 - alpha) / 21.0;
    }
    let m = &psi.mat().scale(2.0 / 7.0) + &ComplexMatrix::diag(&d);
    validate_density(&m, &[3, 3])
}

/// alpha|000> + beta|111>.
pub fn ghz_vector(alpha: f64, beta: f64) -> Vec<C64> {
    sparse_vec(8, &[(0, alpha), (7, beta)])
}

pub fn ghz() -> DensityMatrix {
    pure(&[(0, S2), (7, S2)], &[2, 2, 2]).unwrap()
}

/// l0|001> + l1|010> + l2|100>.
pub fn w_vector(l0: f64, l1: f64, l2: f64) -> Vec<C64> {
    sparse_vec(8, &[(1, l0), (2, l1), (4, l2)])
}

pub fn w_state() -> DensityMatrix {
    let s = 1.0 / 3f64.sqrt();
    DensityMatrix::from_pure(&w_vector(s, s, s), &[2, 2, 2]).unwrap()
}

/// (|110> + |101> + |011>)/sqrt3.
pub fn w_tilde_state() -> DensityMatrix {
    pure(&[(6, 1.0), (5, 1.0), (3, 1.0)], &[2, 2, 2]).unwrap()
}

fn mix(terms: &[(f64, &DensityMatrix)]) -> Result<DensityMatrix> {
    let dims = terms[0].1.dims().to_vec();
    let n = terms[0].1.dim();
    let mut m = ComplexMatrix::zeros(n, n);
    for (w, r) in terms {
        m = &m + &r.mat().scale(*w);
    }
    validate_density(&m, &dims)
}

/// q |0><0| (x) phi+ + (1 - q) |1><1| (x) phi-, qubit A in front.
pub fn biseparable_b1(q: f64) -> Result<DensityMatrix> {
    unit_interval("q", q)?;
    let a = pure(&[(0, S2), (3, S2)], &[2, 2, 2])?;
    let b = pure(&[(4, S2), (7, -S2)], &[2, 2, 2])?;
    mix(&[(q, &a), (1.0 - q, &b)])
}

/// l0|000> + l1|100> + l2|111>, normalized.
pub fn table51_state(l0: f64, l1: f64, l2: f64) -> Result<DensityMatrix> {
    pure(&[(0, l0), (4, l1), (7, l2)], &[2, 2, 2])
}

/// l0|001> + l1|101> + l2|111>, normalized.
pub fn table52_state(l0: f64, l1: f64, l2: f64) -> Result<DensityMatrix> {
    pure(&[(1, l0), (5, l1), (7, l2)], &[2, 2, 2])
}

/// (1 - alpha) GHZ + alpha I/8.
pub fn ghz_noisy(alpha: f64) -> Result<DensityMatrix> {
    unit_interval("alpha", alpha)?;
    mix(&[
        (1.0 - alpha, &ghz()),
        (alpha, &DensityMatrix::maximally_mixed(&[2, 2, 2])),
    ])
}

/// q |psi><psi| + (1 - q)|111><111| with psi = (|001> + |101>)/sqrt2.
pub fn separable_s3(q: f64) -> Result<DensityMatrix> {
    unit_interval("q", q)?;
    let psi = pure(&[(1, S2), (5, S2)], &[2, 2, 2])?;
    let one = pure(&[(7, 1.0)], &[2, 2, 2])?;
    mix(&[(q, &psi), (1.0 - q, &one)])
}

/// Three-qubit PPT family, parameter a > 0.
pub fn kay(a: f64) -> Result<DensityMatrix> {
    if a <= 0.0 {
        return Err(QentError::InvalidParameter(format!(
            "a = {a} must be positive"
        )));
    }
    let mut m = ComplexMatrix::diag(&[4.0 + a, a, a, a, a, a, a, 4.0 + a]);
    for (i, j, v) in [(0, 7, 2.0), (1, 6, 2.0), (2, 5, -2.0), (3, 4, 2.0)] {
        m[(i, j)] = re(v);
        m[(j, i)] = re(v);
    }
    validate_density(&m.scale(1.0 / (8.0 + 8.0 * a)), &[2, 2, 2])
}

/// q |000><000| + (1 - q) GHZ.
pub fn ghz_with_000(q: f64) -> Result<DensityMatrix> {
    unit_interval("q", q)?;
    let z = pure(&[(0, 1.0)], &[2, 2, 2])?;
    mix(&[(q, &z), (1.0 - q, &ghz())])
}

/// q1 GHZ + q2 W + (1 - q1 - q2) W~.
pub fn ghz_w_wtilde(q1: f64, q2: f64) -> Result<DensityMatrix> {
    if q1 < 0.0 || q2 < 0.0 || q1 + q2 > 1.0 + 1e-12 {
        return Err(QentError::InvalidParameter(format!(
            "weights q1 = {q1}, q2 = {q2} do not form a distribution"
        )));
    }
    let rest = (1.0 - q1 - q2).max(0.0);
    mix(&[(q1, &ghz()), (q2, &w_state()), (rest, &w_tilde_state())])
}

/// q GHZ + (1 - q) W.
pub fn ghz_w(q: f64) -> Result<DensityMatrix> {
    unit_interval("q", q)?;
    mix(&[(q, &ghz()), (1.0 - q, &w_state())])
}

/// q |0>_A (x) phi+_BC + (1 - q) |1>_B (x) phi-_AC.
pub fn coherence_rho1(q: f64) -> Result<DensityMatrix> {
    unit_interval("q", q)?;
    let a = pure(&[(0, S2), (3, S2)], &[2, 2, 2])?;
    // |0 1 0> - |1 1 1> in ABC order
    let b = pure(&[(2, S2), (7, -S2)], &[2, 2, 2])?;
    mix(&[(q, &a), (1.0 - q, &b)])
}

/// (1/2)|0>_A phi+_BCD + (1/2)|1>_B phi-_ACD with phi+- = (|100> +- |010>)/sqrt2.
pub fn four_qubit_abcd() -> DensityMatrix {
    let d = [2, 2, 2, 2];
    let a = pure(&[(0b0100, S2), (0b0010, S2)], &d).unwrap();
    let b = pure(&[(0b1100, S2), (0b0110, -S2)], &d).unwrap();
    mix(&[(0.5, &a), (0.5, &b)]).unwrap()
}

/// Uniform diagonal mixture of |0000>, |0011>, |1000>, |1111>.
pub fn four_qubit_diag() -> DensityMatrix {
    let mut d = [0.0; 16];
    for i in [0b0000, 0b0011, 0b1000, 0b1111] {
        d[i] = 0.25;
    }
    validate_density(&ComplexMatrix::diag(&d), &[2, 2, 2, 2]).unwrap()
}

/// |0>_A (x) (|12> + |01> + |20>)/sqrt3 on three qutrits.
pub fn three_qutrit_psi() -> DensityMatrix {
    pure(&[(5, 1.0), (1, 1.0), (6, 1.0)], &[3, 3, 3]).unwrap()
}

/// Product of single-qubit pure states cos t|0> + e^{i phi} sin t|1>.
pub fn qubit_vector(theta: f64, phi: f64) -> Vec<C64> {
    vec![re(theta.cos()), c(phi.cos(), phi.sin()) * theta.sin()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{herm_eigenvalues, partial_trace};

    #[test]
    fn werner_matrix_entries() {
        let w = werner(0.6).unwrap();
        assert!((w.mat()[(0, 0)].re - 0.1).abs() < 1e-15);
        assert!((w.mat()[(1, 1)].re - 0.4).abs() < 1e-15);
        assert!((w.mat()[(1, 2)].re + 0.3).abs() < 1e-15);
    }

    #[test]
    fn rho1_rejects_large_coherence() {
        assert!(matches!(
            rho1(0.1, 0.4, c(0.5, 0.0)),
            Err(QentError::NegativityViolation(_))
        ));
    }

    #[test]
    fn chessboard_trace_one() {
        let r = chessboard_abc();
        assert!((r.mat().trace().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn families_are_valid_across_ranges() {
        for k in 0..=10 {
            let t = k as f64 / 10.0;
            rho2(t).unwrap();
            horodecki_3x3(t).unwrap();
            mems(t).unwrap();
            ghz_noisy(t).unwrap();
            separable_s3(t).unwrap();
            coherence_rho1(t).unwrap();
            ghz_w(t).unwrap();
            rho_alpha_qutrit(2.0 + 3.0 * t).unwrap();
            rho_a_qutrit(S2 + (1.0 - S2) * t).unwrap();
        }
        for a in [2.0, 3.0, 10.0] {
            kay(a).unwrap();
        }
    }

    #[test]
    fn w_single_qubit_marginal() {
        let w = w_state();
        for k in 0..3 {
            let r = partial_trace(&w, &[k]).unwrap();
            assert!((r.mat()[(0, 0)].re - 2.0 / 3.0).abs() < 1e-14);
            assert!(r.mat()[(0, 1)].norm() < 1e-14);
        }
    }

    #[test]
    fn kay_is_psd() {
        let s = herm_eigenvalues(kay(2.0).unwrap().mat()).unwrap();
        assert!(s.min() >= -1e-12);
    }
}
