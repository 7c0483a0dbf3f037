use std::f64::consts::PI;
use std::fmt;

use crate::error::{QentError, Result};
use crate::qmat::matrix::{pauli_x, pauli_y, pauli_z};
use crate::qmat::{
    c, expectation, herm_eigenvalues, re, tensor_all, ComplexMatrix, DensityMatrix, C64,
};

const NORM_TOL: f64 = 1e-10;
const ZERO_TOL: f64 = 1e-12;

/// lambda0|000> + lambda1 e^{i theta}|100> + lambda2|101> + lambda3|110> + lambda4|111>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalThreeQubit {
    pub lambda: [f64; 5],
    pub theta: f64,
}

impl CanonicalThreeQubit {
    pub fn new(lambda: [f64; 5], theta: f64) -> Result<Self> {
        for (i, &l) in lambda.iter().enumerate() {
            if !(0.0..=1.0).contains(&l) {
                return Err(QentError::InvalidParameter(format!(
                    "lambda{i} = {l} outside [0, 1]"
                )));
            }
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(QentError::InvalidParameter(format!(
                "theta = {theta} outside [0, pi]"
            )));
        }
        let norm: f64 = lambda.iter().map(|l| l * l).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(QentError::Normalization((norm - 1.0).abs()));
        }
        Ok(CanonicalThreeQubit { lambda, theta })
    }

    /// theta = 0.
    pub fn real(l0: f64, l1: f64, l2: f64, l3: f64, l4: f64) -> Result<Self> {
        Self::new([l0, l1, l2, l3, l4], 0.0)
    }

    /// Rescales nonnegative raw amplitudes to unit norm.
    pub fn normalized(raw: [f64; 5], theta: f64) -> Result<Self> {
        let n = raw.iter().map(|l| l * l).sum::<f64>().sqrt();
        if n == 0.0 || raw.iter().any(|&l| l < 0.0) {
            return Err(QentError::InvalidParameter(format!(
                "cannot normalize amplitudes {raw:?}"
            )));
        }
        Self::new(raw.map(|l| (l / n).min(1.0)), theta)
    }

    pub fn l(&self, i: usize) -> f64 {
        self.lambda[i]
    }

    pub fn state_vector(&self) -> Vec<C64> {
        canonical_state(self)
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::from_pure(&self.state_vector(), &[2, 2, 2])
            .expect("canonical vectors are normalized")
    }

    pub(crate) fn require_real(&self) -> Result<()> {
        if self.theta != 0.0 {
            return Err(QentError::Unsupported(format!(
                "theta = {} (only theta = 0 is handled)",
                self.theta
            )));
        }
        Ok(())
    }
}

pub fn canonical_state(p: &CanonicalThreeQubit) -> Vec<C64> {
    let l = &p.lambda;
    let mut v = vec![re(0.0); 8];
    v[0] = re(l[0]);
    v[4] = c(p.theta.cos(), p.theta.sin()) * l[1];
    v[5] = re(l[2]);
    v[6] = re(l[3]);
    v[7] = re(l[4]);
    v
}

/// Correlation tensor slices; `t[i][k][j]` holds Tr(rho s_i s_j s_k).
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTensor {
    pub tx: [[f64; 3]; 3],
    pub ty: [[f64; 3]; 3],
    pub tz: [[f64; 3]; 3],
}

fn gram(t: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut g = [[0.0; 3]; 3];
    for (i, gi) in g.iter_mut().enumerate() {
        for (j, gij) in gi.iter_mut().enumerate() {
            *gij = (0..3).map(|k| t[k][i] * t[k][j]).sum();
        }
    }
    g
}

fn sym_eigenvalues(m: &[[f64; 3]; 3]) -> Result<Vec<f64>> {
    let cm = ComplexMatrix::from_fn(3, 3, |i, j| re(m[i][j]));
    Ok(herm_eigenvalues(&cm)?.eigenvalues)
}

impl CorrelationTensor {
    pub fn slice(&self, i: usize) -> &[[f64; 3]; 3] {
        match i {
            0 => &self.tx,
            1 => &self.ty,
            _ => &self.tz,
        }
    }

    /// t_{ijk} with indices 0, 1, 2 for x, y, z.
    pub fn t(&self, i: usize, j: usize, k: usize) -> f64 {
        self.slice(i)[k][j]
    }

    /// T_x^T T_x.
    pub fn gram_x(&self) -> [[f64; 3]; 3] {
        gram(&self.tx)
    }

    pub fn gram_y(&self) -> [[f64; 3]; 3] {
        gram(&self.ty)
    }

    pub fn mu_max_x(&self) -> Result<f64> {
        Ok(sym_eigenvalues(&self.gram_x())?
            .into_iter()
            .fold(f64::MIN, f64::max))
    }

    pub fn mu_min_y(&self) -> Result<f64> {
        Ok(sym_eigenvalues(&self.gram_y())?
            .into_iter()
            .fold(f64::MAX, f64::min))
    }
}

pub fn correlation_tensors(rho: &DensityMatrix) -> Result<CorrelationTensor> {
    if rho.dims() != [2, 2, 2] {
        return Err(QentError::Dimension(format!(
            "expected [2, 2, 2], got {:?}",
            rho.dims()
        )));
    }
    let paulis = [pauli_x(), pauli_y(), pauli_z()];
    let mut slices = [[[0.0; 3]; 3]; 3];
    for (i, slice) in slices.iter_mut().enumerate() {
        for j in 0..3 {
            for k in 0..3 {
                let op = tensor_all(&[&paulis[i], &paulis[j], &paulis[k]]);
                slice[k][j] = expectation(&op, rho)?;
            }
        }
    }
    let [tx, ty, tz] = slices;
    Ok(CorrelationTensor { tx, ty, tz })
}

/// Local-unitary invariants of a canonical state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LuInvariants {
    pub tau: f64,
    pub c_ab: f64,
    pub c_ac: f64,
    pub c_bc: f64,
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
    pub i5: f64,
}

pub fn lu_invariants(p: &CanonicalThreeQubit) -> LuInvariants {
    let [l0, l1, l2, l3, l4] = p.lambda;
    let phase = c(p.theta.cos(), p.theta.sin());
    LuInvariants {
        tau: 4.0 * l0 * l0 * l4 * l4,
        c_ab: 2.0 * l0 * l3,
        c_ac: 2.0 * l0 * l2,
        c_bc: 2.0 * (re(l2 * l3) - phase * (l1 * l4)).norm(),
        i1: p.lambda.iter().map(|l| l * l).sum(),
        i2: 2.0 * (l1 * l2 + l3 * l4).powi(2),
        i3: 2.0 * (l1 * l3 + l2 * l4).powi(2),
        i4: 2.0 * l0 * l0 * l1 * l1,
        i5: 4.0 * l0.powi(4) * l4.powi(4),
    }
}

/// GHZ subclasses, named after their canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subclass {
    /// lambda1 = lambda2 = lambda3 = 0.
    S1,
    /// One of lambda1..lambda3 nonzero; fidelities use the lambda1 member.
    S2,
    /// Two nonzero; fidelities use the (lambda1, lambda2) member.
    S3,
    /// All three nonzero.
    S4,
}

impl Subclass {
    pub fn name(self) -> &'static str {
        match self {
            Subclass::S1 => "S1",
            Subclass::S2 => "S2",
            Subclass::S3 => "S3",
            Subclass::S4 => "S4",
        }
    }

    /// Subclass read off the zero pattern of lambda1..lambda3.
    pub fn of(p: &CanonicalThreeQubit) -> Subclass {
        match p.lambda[1..4].iter().filter(|l| l.abs() > ZERO_TOL).count() {
            0 => Subclass::S1,
            1 => Subclass::S2,
            2 => Subclass::S3,
            _ => Subclass::S4,
        }
    }
}

impl fmt::Display for Subclass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Maximal teleportation fidelities (F_A, F_B, F_C) after measuring one qubit.
pub fn subclass_fidelities(p: &CanonicalThreeQubit, s: Subclass) -> Result<[f64; 3]> {
    p.require_real()?;
    let [l0, l1, l2, l3, l4] = p.lambda;
    let must_vanish: &[usize] = match s {
        Subclass::S1 => &[1, 2, 3],
        Subclass::S2 => &[2, 3],
        Subclass::S3 => &[3],
        Subclass::S4 => &[],
    };
    if let Some(&i) = must_vanish.iter().find(|&&i| p.lambda[i].abs() > ZERO_TOL) {
        return Err(QentError::InvalidParameter(format!(
            "lambda{i} = {} is not zero, so the parameters are not of the {s} form",
            p.lambda[i]
        )));
    }
    let f = |x: f64| 2.0 * (1.0 + x) / 3.0;
    let base = f(l0 * l4);
    Ok(match s {
        Subclass::S1 => [base; 3],
        Subclass::S2 => [f(l4 * (l0 * l0 + l1 * l1).sqrt()), base, base],
        Subclass::S3 => [
            f(l4 * (l0 * l0 + l1 * l1).sqrt()),
            f(l0 * (l2 * l2 + l4 * l4).sqrt()),
            base,
        ],
        Subclass::S4 => {
            let y =
                l0 * l0 * l4 * l4 + l1 * l1 * l4 * l4 + l2 * l2 * l3 * l3 - 4.0 * l1 * l2 * l3 * l4;
            [
                f(y.max(0.0).sqrt()),
                f(l0 * (l2 * l2 + l4 * l4).sqrt()),
                f(l0 * (l3 * l3 + l4 * l4).sqrt()),
            ]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{concurrence_2q, tangle_pure};
    use crate::qmat::partial_trace;
    use std::f64::consts::FRAC_1_SQRT_2 as S;

    fn sample() -> CanonicalThreeQubit {
        CanonicalThreeQubit::normalized([0.5, 0.3, 0.4, 0.2, 0.6], 0.7).unwrap()
    }

    #[test]
    fn standard_ghz() {
        let p = CanonicalThreeQubit::real(S, 0.0, 0.0, 0.0, S).unwrap();
        let v = p.state_vector();
        assert!((v[0].re - S).abs() < 1e-15 && (v[7].re - S).abs() < 1e-15);
        let inv = lu_invariants(&p);
        assert!((inv.tau - 1.0).abs() < 1e-12);
        assert_eq!((inv.c_ab, inv.c_ac, inv.c_bc), (0.0, 0.0, 0.0));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(
            CanonicalThreeQubit::real(0.5, 0.5, 0.0, 0.0, 0.5),
            Err(QentError::Normalization(_))
        ));
        assert!(CanonicalThreeQubit::new([1.0, 0.0, 0.0, 0.0, 0.0], 4.0).is_err());
        assert!(CanonicalThreeQubit::normalized([0.0; 5], 0.0).is_err());
    }

    #[test]
    fn tangle_matches_invariant() {
        let p = sample();
        let t = tangle_pure(&p.state_vector()).unwrap().value;
        assert!((t - lu_invariants(&p).tau).abs() < 1e-10);
    }

    #[test]
    fn partial_concurrences_match_marginals() {
        let p = sample();
        let rho = p.density();
        let inv = lu_invariants(&p);
        let ab = concurrence_2q(&partial_trace(&rho, &[0, 1]).unwrap())
            .unwrap()
            .value;
        let ac = concurrence_2q(&partial_trace(&rho, &[0, 2]).unwrap())
            .unwrap()
            .value;
        let bc = concurrence_2q(&partial_trace(&rho, &[1, 2]).unwrap())
            .unwrap()
            .value;
        assert!((ab - inv.c_ab).abs() < 1e-9);
        assert!((ac - inv.c_ac).abs() < 1e-9);
        assert!((bc - inv.c_bc).abs() < 1e-9);
    }

    #[test]
    fn tx_entries() {
        let p = sample();
        let [l0, l1, l2, l3, l4] = p.lambda;
        let t = correlation_tensors(&p.density()).unwrap();
        let want = [
            [2.0 * l0 * l4, 0.0, 2.0 * l0 * l2],
            [0.0, -2.0 * l0 * l4, 0.0],
            [2.0 * l0 * l3, 0.0, 2.0 * l0 * l1 * p.theta.cos()],
        ];
        for k in 0..3 {
            for j in 0..3 {
                assert!((t.tx[k][j] - want[k][j]).abs() < 1e-12, "({k},{j})");
            }
        }
    }

    #[test]
    fn maximally_mixed_has_no_correlations() {
        let t = correlation_tensors(&DensityMatrix::maximally_mixed(&[2, 2, 2])).unwrap();
        for s in [&t.tx, &t.ty, &t.tz] {
            assert!(s.iter().flatten().all(|x| x.abs() < 1e-15));
        }
    }

    #[test]
    fn fidelities() {
        let p = CanonicalThreeQubit::real(S, 0.0, 0.0, 0.0, S).unwrap();
        for f in subclass_fidelities(&p, Subclass::S1).unwrap() {
            assert!((f - 1.0).abs() < 1e-12);
        }
        let p = CanonicalThreeQubit::normalized([0.6, 0.5, 0.0, 0.0, 0.4], 0.0).unwrap();
        let [fa, fb, fc] = subclass_fidelities(&p, Subclass::S2).unwrap();
        let [l0, l1, _, _, l4] = p.lambda;
        assert!((fa - 2.0 * (1.0 + l4 * (l0 * l0 + l1 * l1).sqrt()) / 3.0).abs() < 1e-15);
        assert_eq!(fb, fc);
        assert!(subclass_fidelities(&p, Subclass::S1).is_err());
        assert!(subclass_fidelities(&sample(), Subclass::S4).is_err());
    }

    #[test]
    fn zero_pattern() {
        let p = CanonicalThreeQubit::normalized([0.6, 0.0, 0.3, 0.2, 0.4], 0.0).unwrap();
        assert_eq!(Subclass::of(&p), Subclass::S3);
    }
}
