//! Bipartite entanglement tests and the SPA based criteria.
//!
//! Every procedure is one-directional: `Entangled` is only reported when the
//! evidence proves it, anything else is `Inconclusive` (or, for criteria that
//! test a condition rather than entanglement, `ConditionSatisfied` /
//! `ConditionViolated`).

use std::fmt;

use crate::error::{QentError, Result};
use crate::qmat::{
    expectation, herm_eigenvalues, partial_trace, partial_transpose, partial_transpose_qubit,
    realign, tensor, trace_norm, transpose_subsystem, ComplexMatrix, DensityMatrix, Qubit,
    Tolerances, C64,
};
use crate::spa::SpaWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Entangled,
    Inconclusive,
    ConditionSatisfied,
    ConditionViolated,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::Entangled => "entangled",
            Outcome::Inconclusive => "inconclusive",
            Outcome::ConditionSatisfied => "condition_satisfied",
            Outcome::ConditionViolated => "condition_violated",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// The scalar the decision was made on.
    pub evidence: f64,
    pub criterion: &'static str,
}

impl Verdict {
    pub fn is_entangled(&self) -> bool {
        self.outcome == Outcome::Entangled
    }
}

fn verdict(criterion: &'static str, entangled: bool, evidence: f64) -> Verdict {
    Verdict {
        outcome: if entangled {
            Outcome::Entangled
        } else {
            Outcome::Inconclusive
        },
        evidence,
        criterion,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceBounds {
    pub lower: f64,
    pub upper: f64,
}

pub fn ppt_check(rho: &DensityMatrix, sys: usize) -> Result<Verdict> {
    ppt_check_with(rho, sys, &Tolerances::default())
}

/// Entangled when the partial transpose has an eigenvalue below -slack.
pub fn ppt_check_with(rho: &DensityMatrix, sys: usize, tol: &Tolerances) -> Result<Verdict> {
    let l = herm_eigenvalues(&partial_transpose(rho, sys)?)?.min();
    Ok(verdict("ppt", l < -tol.slack, l))
}

/// PPT test across the cut separating one qubit of a three-qubit state.
pub fn ppt_check_cut(rho: &DensityMatrix, qubit: Qubit) -> Result<Verdict> {
    let l = herm_eigenvalues(&partial_transpose_qubit(rho, qubit)?)?.min();
    Ok(verdict("ppt", l < -Tolerances::default().slack, l))
}

pub fn realignment_check(rho: &DensityMatrix) -> Result<Verdict> {
    realignment_check_with(rho, &Tolerances::default())
}

/// Entangled when the realigned matrix has trace norm above 1.
pub fn realignment_check_with(rho: &DensityMatrix, tol: &Tolerances) -> Result<Verdict> {
    let n = trace_norm(&realign(rho)?)?;
    Ok(verdict("realignment", n > 1.0 + tol.slack, n))
}

pub fn reduction_check(rho: &DensityMatrix) -> Result<Verdict> {
    reduction_check_with(rho, &Tolerances::default())
}

/// Entangled when rho_A (x) I - rho is not positive.
pub fn reduction_check_with(rho: &DensityMatrix, tol: &Tolerances) -> Result<Verdict> {
    let (_, d2) = rho.bipartite()?;
    let ra = partial_trace(rho, &[0])?;
    let m = &tensor(ra.mat(), &ComplexMatrix::identity(d2)) - rho.mat();
    let l = herm_eigenvalues(&m)?.min();
    Ok(verdict("reduction", l < -tol.slack, l))
}

/// W = (|psi><psi|)^{T_sys} with psi normalized first.
pub fn witness_from_pure(psi: &[C64], dims: &[usize], sys: usize) -> Result<ComplexMatrix> {
    let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(QentError::InvalidParameter("zero state vector".into()));
    }
    let v: Vec<C64> = psi.iter().map(|z| z / norm).collect();
    transpose_subsystem(&ComplexMatrix::outer(&v), dims, sys)
}

fn same_shape(rho: &DensityMatrix, m: &ComplexMatrix) -> Result<()> {
    if rho.dim() != m.rows() {
        return Err(QentError::Dimension(format!(
            "state is {0}x{0}, operator is {1}x{1}",
            rho.dim(),
            m.rows()
        )));
    }
    Ok(())
}

pub fn criterion1(rho: &DensityMatrix, w: &SpaWitness) -> Result<Verdict> {
    criterion1_with(rho, w, &Tolerances::default())
}

/// Entangled when Tr(W~ rho) < (1 - p)/(d1 d2).
pub fn criterion1_with(rho: &DensityMatrix, w: &SpaWitness, tol: &Tolerances) -> Result<Verdict> {
    same_shape(rho, w.w_tilde.mat())?;
    let f = expectation(w.w_tilde.mat(), rho)?;
    Ok(verdict("criterion1", f < w.r_bound - tol.slack, f))
}

/// L = Tr(rho~ rho) + Tr(W rho) and U = 1/2 + L.
pub fn bounds_lu(
    rho: &DensityMatrix,
    rho_tilde: &DensityMatrix,
    w: &ComplexMatrix,
) -> Result<(f64, f64)> {
    same_shape(rho, w)?;
    same_shape(rho, rho_tilde.mat())?;
    let l = expectation(rho_tilde.mat(), rho)? + expectation(w, rho)?;
    Ok((l, 0.5 + l))
}

/// lower = (1 - p)/(p d1 d2) - Tr(W~ rho)/p, upper = Tr(rho~ rho).
pub fn concurrence_bounds(
    rho: &DensityMatrix,
    w: &SpaWitness,
    rho_tilde: &DensityMatrix,
) -> Result<ConcurrenceBounds> {
    same_shape(rho, w.w_tilde.mat())?;
    same_shape(rho, rho_tilde.mat())?;
    if w.p == 0.0 {
        return Err(QentError::InvalidParameter("witness mixing p = 0".into()));
    }
    let n = (w.d1 * w.d2) as f64;
    let f = expectation(w.w_tilde.mat(), rho)?;
    Ok(ConcurrenceBounds {
        lower: (1.0 - w.p) / (w.p * n) - f / w.p,
        upper: expectation(rho_tilde.mat(), rho)?,
    })
}

fn nonnegative_concurrence(c: f64) -> Result<()> {
    if c < 0.0 || !c.is_finite() {
        return Err(QentError::InvalidParameter(format!(
            "concurrence {c} must be >= 0"
        )));
    }
    Ok(())
}

pub fn criterion2(rho: &DensityMatrix, rho_tilde: &DensityMatrix, c: f64) -> Result<Verdict> {
    criterion2_with(rho, rho_tilde, c, &Tolerances::default())
}

/// Checks lambda_min(rho~) >= Tr(rho~ rho) - c; evidence is the margin.
pub fn criterion2_with(
    rho: &DensityMatrix,
    rho_tilde: &DensityMatrix,
    c: f64,
    tol: &Tolerances,
) -> Result<Verdict> {
    nonnegative_concurrence(c)?;
    same_shape(rho, rho_tilde.mat())?;
    let lmin = herm_eigenvalues(rho_tilde.mat())?.min();
    let margin = lmin - (expectation(rho_tilde.mat(), rho)? - c);
    Ok(Verdict {
        outcome: if margin >= -tol.slack {
            Outcome::ConditionSatisfied
        } else {
            Outcome::ConditionViolated
        },
        evidence: margin,
        criterion: "criterion2",
    })
}

pub fn criterion3(rho: &DensityMatrix, rho_tilde: &DensityMatrix, c: f64) -> Result<Verdict> {
    criterion3_with(rho, rho_tilde, c, &Tolerances::default())
}

/// Entangled when U_ent = 1/2 + Tr(rho~ rho) - c drops below 1/2.
pub fn criterion3_with(
    rho: &DensityMatrix,
    rho_tilde: &DensityMatrix,
    c: f64,
    tol: &Tolerances,
) -> Result<Verdict> {
    nonnegative_concurrence(c)?;
    same_shape(rho, rho_tilde.mat())?;
    let u = 0.5 + expectation(rho_tilde.mat(), rho)? - c;
    Ok(verdict("criterion3", u < 0.5 - tol.slack, u))
}
