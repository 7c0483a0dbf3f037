use std::fmt;

use crate::classify3::canonical::{lu_invariants, CanonicalThreeQubit, Subclass};
use crate::error::{QentError, Result};
use crate::qmat::matrix::{pauli_x, pauli_y, pauli_z};
use crate::qmat::{expectation, re, tensor_all, ComplexMatrix, DensityMatrix};

/// The eight GHZ-subclass witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
}

impl Witness {
    pub const ALL: [Witness; 8] = [
        Witness::H1,
        Witness::H2,
        Witness::H3,
        Witness::H4,
        Witness::H5,
        Witness::H6,
        Witness::H7,
        Witness::H8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Witness::H1 => "H1",
            Witness::H2 => "H2",
            Witness::H3 => "H3",
            Witness::H4 => "H4",
            Witness::H5 => "H5",
            Witness::H6 => "H6",
            Witness::H7 => "H7",
            Witness::H8 => "H8",
        }
    }

    pub fn parse(s: &str) -> Option<Witness> {
        Witness::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
    }

    /// What a negative value says about the state.
    pub fn implication(self) -> &'static str {
        match self {
            Witness::H1 => "not of S1 form: lambda1 component present",
            Witness::H2 => "not of S1 form: lambda2 component present",
            Witness::H3 => "not of S1 form: lambda3 component present",
            Witness::H4 | Witness::H5 | Witness::H6 => "S3 rather than S1",
            Witness::H7 => "S4 rather than S1",
            Witness::H8 => "S3 rather than S1 or S2",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// O1..O6 as 8x8 matrices, index 0 holding O1.
///
/// O5 is the projector onto |000>, whose expectation on a canonical state
/// is lambda0^2.
pub fn pauli_operators() -> [ComplexMatrix; 6] {
    let (x, y, z) = (pauli_x(), pauli_y(), pauli_z());
    let i = ComplexMatrix::identity(2);
    let mut o5 = ComplexMatrix::zeros(8, 8);
    o5[(0, 0)] = re(1.0);
    [
        tensor_all(&[&x, &x, &x]).scale(2.0),
        tensor_all(&[&x, &z, &x]).scale(2.0),
        tensor_all(&[&x, &x, &z]).scale(2.0),
        tensor_all(&[&x, &i, &i]).scale(2.0),
        o5,
        tensor_all(&[&i, &y, &y]).scale(2.0),
    ]
}

fn sq(x: f64) -> f64 {
    x * x
}

/// Tr(H_k rho) for the canonical state, from the closed forms.
pub fn ghz_witness_value(p: &CanonicalThreeQubit, w: Witness) -> Result<f64> {
    p.require_real()?;
    let [l0, l1, l2, l3, l4] = p.lambda;
    let h5_form = |li: f64| {
        let t = sq(sq(l1)) + 2.0 * sq(l1) * (sq(li) - sq(l4)) + sq(sq(li) + sq(l4));
        4.0 * l0 * l4 - 2.0 * sq(l0) * (sq(l1) + sq(li) + sq(l4) + t.max(0.0).sqrt())
    };
    Ok(match w {
        Witness::H1 => 4.0 * l0 * (l4 - l0 * sq(l1)),
        Witness::H2 => 4.0 * l0 * l4 * (1.0 - l0 * l4) - 4.0 * sq(l0 * l2),
        Witness::H3 => 4.0 * l0 * l4 * (1.0 - l0 * l4) - 4.0 * sq(l0 * l3),
        Witness::H4 => {
            let k = 1.0 - sq(l0);
            let t1 = sq(k) - 4.0 * sq(l2 * l3 - l1 * l4);
            4.0 * l0 * l4 - 2.0 * sq(l0) * (k + t1.max(0.0).sqrt())
        }
        Witness::H5 => h5_form(l2),
        Witness::H6 => h5_form(l3),
        Witness::H7 => {
            let t4 = sq(sq(l1)) + sq(sq(l2)) + sq(sq(l3)) + sq(sq(l4)) + 8.0 * l1 * l2 * l3 * l4
                - 2.0 * sq(l2 * l3)
                + 2.0 * sq(l2 * l4)
                + 2.0 * sq(l1 * l2)
                + 2.0 * sq(l1 * l3)
                - 2.0 * sq(l1 * l4)
                + 2.0 * sq(l3 * l4);
            4.0 * l0 * l4 - 2.0 * sq(l0) * (sq(l1) + sq(l2) + sq(l3) + sq(l4) + t4.max(0.0).sqrt())
        }
        Witness::H8 => h5_form(l2) + 2.0 * l0 * l1,
    })
}

/// The witness operator for the state `rho`, with its identity coefficient
/// computed from expectations of O1..O6 in `rho`.
pub fn ghz_witness_operator_for(rho: &DensityMatrix, w: Witness) -> Result<ComplexMatrix> {
    let ops = pauli_operators();
    let mut e = [0.0; 6];
    for (k, o) in ops.iter().enumerate() {
        e[k] = expectation(o, rho)?;
    }
    let [e1, e2, e3, e4, e5, e6] = e;
    let p_four = || 2.0 * e5 * (1.0 - e5 + (sq(1.0 - e5) - sq(e6) / 4.0).max(0.0).sqrt());
    let p_five = |ei: f64| {
        let q = (sq(e1) + sq(ei) + sq(e4)) / 8.0;
        q + (sq(q) - sq(e1 * e4) / 16.0).max(0.0).sqrt()
    };
    let coeff = match w {
        Witness::H1 => sq(e4) / 4.0,
        Witness::H2 => (sq(e2) + sq(e1)) / 4.0,
        Witness::H3 => (sq(e3) + sq(e1)) / 4.0,
        Witness::H4 | Witness::H7 => p_four(),
        Witness::H5 | Witness::H8 => p_five(e2),
        Witness::H6 => p_five(e3),
    };
    let mut h = &ops[0] - &ComplexMatrix::identity(8).scale(coeff);
    if w == Witness::H8 {
        h = &h + &ops[3].scale(0.5);
    }
    Ok(h)
}

pub fn ghz_witness_operator(p: &CanonicalThreeQubit, w: Witness) -> Result<ComplexMatrix> {
    p.require_real()?;
    ghz_witness_operator_for(&p.density(), w)
}

/// Tr(H_k rho) computed from the operator rather than the closed form.
pub fn ghz_witness_expectation(p: &CanonicalThreeQubit, w: Witness) -> Result<f64> {
    let rho = p.density();
    expectation(&ghz_witness_operator(p, w)?, &rho)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessReading {
    pub witness: Witness,
    pub value: f64,
}

impl WitnessReading {
    pub fn negative(&self) -> bool {
        self.value < 0.0
    }
}

/// Witness values for one canonical state. Negative readings are evidence
/// about the subclass, not a proof of it.
#[derive(Debug, Clone, PartialEq)]
pub struct SubclassReport {
    pub params: CanonicalThreeQubit,
    pub tangle: f64,
    pub readings: Vec<WitnessReading>,
    /// Subclass read off the zero pattern of the parameters.
    pub form: Subclass,
}

impl SubclassReport {
    pub fn value(&self, w: Witness) -> f64 {
        self.readings
            .iter()
            .find(|r| r.witness == w)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    }

    pub fn negatives(&self) -> Vec<Witness> {
        self.readings
            .iter()
            .filter(|r| r.negative())
            .map(|r| r.witness)
            .collect()
    }

    pub fn implications(&self) -> Vec<(Witness, &'static str)> {
        self.negatives()
            .into_iter()
            .map(|w| (w, w.implication()))
            .collect()
    }

    /// True when every witness in `negative` reads below zero and every one
    /// in `positive` reads above zero.
    pub fn pattern(&self, negative: &[Witness], positive: &[Witness]) -> bool {
        negative.iter().all(|&w| self.value(w) < 0.0)
            && positive.iter().all(|&w| self.value(w) > 0.0)
    }
}

pub fn classify_ghz_subclass(p: &CanonicalThreeQubit) -> Result<SubclassReport> {
    p.require_real()?;
    let tangle = lu_invariants(p).tau;
    if p.lambda[0] <= 0.0 || p.lambda[4] <= 0.0 {
        return Err(QentError::NotGhzClass(tangle));
    }
    let readings = Witness::ALL
        .into_iter()
        .map(|w| {
            Ok(WitnessReading {
                witness: w,
                value: ghz_witness_value(p, w)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubclassReport {
        params: *p,
        tangle,
        readings,
        form: Subclass::of(p),
    })
}

/// (|000> + c|110> + d|111>)/sqrt2 with c = sqrt(1 - d^2).
pub fn maximal_slice(d: f64) -> Result<CanonicalThreeQubit> {
    if !(0.0..=1.0).contains(&d) {
        return Err(QentError::InvalidParameter(format!(
            "d = {d} outside [0, 1]"
        )));
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let c = (1.0 - d * d).max(0.0).sqrt();
    CanonicalThreeQubit::real(s, 0.0, 0.0, s * c, s * d)
}

/// sqrt(p)(a|000> + b|111>) - sqrt(1-p)(c|110> + d|101>) brought to
/// canonical form; the relative sign is absorbed by a local phase since the
/// witnesses only see lambda2 lambda3 and squares.
pub fn superposition_example(a: f64, c: f64, p: f64) -> Result<CanonicalThreeQubit> {
    for (name, v) in [("a", a), ("c", c), ("p", p)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(QentError::InvalidParameter(format!(
                "{name} = {v} outside [0, 1]"
            )));
        }
    }
    let b = (1.0 - a * a).max(0.0).sqrt();
    let d = (1.0 - c * c).max(0.0).sqrt();
    let (sp, sq) = (p.sqrt(), (1.0 - p).sqrt());
    CanonicalThreeQubit::normalized([sp * a, 0.0, sq * d, sq * c, sp * b], 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn printed_points() {
        let p = CanonicalThreeQubit::normalized([0.4, 0.911043, 0.0, 0.0, 0.1], 0.0).unwrap();
        assert!(close(
            ghz_witness_value(&p, Witness::H1).unwrap(),
            -0.3712,
            1e-4
        ));
        let p = CanonicalThreeQubit::normalized([0.4, 0.0, 0.894427, 0.0, 0.2], 0.0).unwrap();
        assert!(close(
            ghz_witness_value(&p, Witness::H2).unwrap(),
            -0.2176,
            1e-4
        ));
        let p = CanonicalThreeQubit::normalized([0.35, 0.0, 0.3, 0.864581, 0.2], 0.0).unwrap();
        assert!(close(
            ghz_witness_value(&p, Witness::H4).unwrap(),
            -0.108386,
            1e-4
        ));
        let p = CanonicalThreeQubit::normalized([0.5, 0.83666, 0.2, 0.0, 0.1], 0.0).unwrap();
        assert!(close(
            ghz_witness_value(&p, Witness::H5).unwrap(),
            -0.540548,
            1e-4
        ));
    }

    #[test]
    fn operator_path_agrees() {
        let p = CanonicalThreeQubit::normalized([0.5, 0.3, 0.4, 0.2, 0.6], 0.0).unwrap();
        for w in Witness::ALL {
            let a = ghz_witness_value(&p, w).unwrap();
            let b = ghz_witness_expectation(&p, w).unwrap();
            assert!(close(a, b, 1e-10), "{w}: {a} vs {b}");
        }
    }

    #[test]
    fn theta_rejected() {
        let p = CanonicalThreeQubit::normalized([0.5, 0.3, 0.4, 0.2, 0.6], 0.3).unwrap();
        assert!(matches!(
            ghz_witness_value(&p, Witness::H1),
            Err(QentError::Unsupported(_))
        ));
    }

    #[test]
    fn maximal_slice_example() {
        for d in [0.1, 0.3, 0.45] {
            let p = maximal_slice(d).unwrap();
            let r = classify_ghz_subclass(&p).unwrap();
            assert!(close(r.value(Witness::H3), 2.0 * d - 1.0, 1e-12));
            assert!(r.value(Witness::H1) >= 0.0 && r.value(Witness::H2) >= 0.0);
            assert_eq!(r.form, Subclass::S2);
        }
    }

    #[test]
    fn ghz_reads_nonnegative() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let r = classify_ghz_subclass(&CanonicalThreeQubit::real(s, 0.0, 0.0, 0.0, s).unwrap())
            .unwrap();
        assert!(r.negatives().is_empty());
    }

    #[test]
    fn table_row_one() {
        let r = classify_ghz_subclass(&superposition_example(0.8, 0.3, 0.295).unwrap()).unwrap();
        assert!(r.pattern(&[Witness::H4], &[Witness::H5, Witness::H6]));
    }

    #[test]
    fn zero_tangle_rejected() {
        let p = CanonicalThreeQubit::normalized([0.6, 0.5, 0.4, 0.3, 0.0], 0.0).unwrap();
        assert!(matches!(
            classify_ghz_subclass(&p),
            Err(QentError::NotGhzClass(_))
        ));
    }
}
