use std::fmt;

use crate::error::{QentError, Result};
use crate::qmat::tol::DECISION_SLACK;
use crate::qmat::{DensityMatrix, Qubit};
use crate::spa::spa_pt_three_qubit;
use crate::states;

/// Smallest SPA-PT eigenvalue any state separable across a cut can reach.
pub const SLOCC_THRESHOLD: f64 = 0.1;

/// Three-tangle of the GHZ/W/W~ mixture vanishes up to this q1.
pub const TANGLE_BOUNDARY: f64 = 0.6269;
pub const CASE_ONE_START: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SloccOutcome {
    Genuine,
    /// Biseparable across the cut separating this qubit from the other two.
    Biseparable(Qubit),
    /// Every cut clears the threshold. PPT entangled states also land here.
    FullySeparableConsistent,
    /// Eigenvalues were not finite numbers.
    Inconclusive,
}

impl SloccOutcome {
    pub fn cut_label(q: Qubit) -> &'static str {
        match q {
            Qubit::A => "A-BC",
            Qubit::B => "B-AC",
            Qubit::C => "C-AB",
        }
    }
}

impl fmt::Display for SloccOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SloccOutcome::Genuine => f.write_str("genuine"),
            SloccOutcome::Biseparable(q) => write!(f, "biseparable {}", Self::cut_label(*q)),
            SloccOutcome::FullySeparableConsistent => f.write_str("fully_separable_consistent"),
            SloccOutcome::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SloccVerdict {
    pub outcome: SloccOutcome,
    /// lambda_min of the SPA-PT output for the A, B and C transposes.
    pub lambdas: [f64; 3],
}

/// Applies the threshold table to (lambda_A, lambda_B, lambda_C).
///
/// Values within `slack` below 1/10 count as reaching it. If two cuts clear
/// the threshold the first in A, B, C order wins.
pub fn slocc_decide(lambdas: [f64; 3], slack: f64) -> SloccOutcome {
    if lambdas.iter().any(|l| !l.is_finite()) {
        return SloccOutcome::Inconclusive;
    }
    let clears = lambdas.map(|l| l >= SLOCC_THRESHOLD - slack);
    match clears.iter().filter(|&&c| c).count() {
        0 => SloccOutcome::Genuine,
        3 => SloccOutcome::FullySeparableConsistent,
        _ => {
            let k = clears.iter().position(|&c| c).unwrap_or(0);
            SloccOutcome::Biseparable(Qubit::ALL[k])
        }
    }
}

pub fn slocc_classify_with(rho: &DensityMatrix, slack: f64) -> Result<SloccVerdict> {
    let mut lambdas = [0.0; 3];
    for q in Qubit::ALL {
        lambdas[q.index()] = spa_pt_three_qubit(rho, q)?.lambda_min()?;
    }
    Ok(SloccVerdict {
        outcome: slocc_decide(lambdas, slack),
        lambdas,
    })
}

pub fn slocc_classify(rho: &DensityMatrix) -> Result<SloccVerdict> {
    slocc_classify_with(rho, DECISION_SLACK)
}

/// lambda_min of the SPA-PT of q1 GHZ + q2 W + (1 - q1 - q2) W~, any cut.
pub fn ghz_w_lambda_min(q1: f64, q2: f64) -> f64 {
    let disc = 1.0 - 2.0 * q1 + 10.0 * q1 * q1 - 4.0 * q2 + 4.0 * q1 * q2 + 4.0 * q2 * q2;
    (4.0 - q1 - disc.max(0.0).sqrt()) / 30.0
}

/// (Q1, Q2) for q GHZ + (1 - q) W; lambda_min is the smaller of the two.
pub fn ghz_w_q_forms(q: f64) -> (f64, f64) {
    let q1 = (4.0 - q - (1.0 - 2.0 * q + 10.0 * q * q).max(0.0).sqrt()) / 30.0;
    let q2 = (6.0 + 3.0 * q - (32.0 - 64.0 * q + 41.0 * q * q).max(0.0).sqrt()) / 60.0;
    (q1, q2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixtureLabel {
    /// Genuine with vanishing three-tangle.
    WClass,
    /// Genuine with positive three-tangle.
    GhzClass,
    Unlabelled,
}

impl fmt::Display for MixtureLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MixtureLabel::WClass => "w_class",
            MixtureLabel::GhzClass => "ghz_class",
            MixtureLabel::Unlabelled => "unlabelled",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhzWMixtureReport {
    pub q1: f64,
    pub q2: f64,
    /// The closed form above. It is only the smallest eigenvalue for q1
    /// large enough; the verdict always uses the computed spectrum.
    pub lambda_closed: f64,
    pub verdict: SloccVerdict,
    pub label: MixtureLabel,
}

impl GhzWMixtureReport {
    pub fn lambda_min(&self) -> f64 {
        self.verdict
            .lambdas
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min)
    }

    pub fn closed_form_matches(&self, tol: f64) -> bool {
        (self.lambda_min() - self.lambda_closed).abs() <= tol
    }
}

pub fn ghz_w_mixture_analysis(q1: f64, q2: f64) -> Result<GhzWMixtureReport> {
    if q1 < 0.0 || q2 < 0.0 || q1 + q2 > 1.0 + 1e-12 {
        return Err(QentError::InvalidParameter(format!(
            "weights q1 = {q1}, q2 = {q2} do not form a distribution"
        )));
    }
    let verdict = slocc_classify(&states::ghz_w_wtilde(q1, q2)?)?;
    let label = match verdict.outcome {
        SloccOutcome::Genuine if (CASE_ONE_START..=TANGLE_BOUNDARY).contains(&q1) => {
            MixtureLabel::WClass
        }
        SloccOutcome::Genuine if q1 > TANGLE_BOUNDARY => MixtureLabel::GhzClass,
        _ => MixtureLabel::Unlabelled,
    };
    Ok(GhzWMixtureReport {
        q1,
        q2,
        lambda_closed: ghz_w_lambda_min(q1, q2),
        verdict,
        label,
    })
}
