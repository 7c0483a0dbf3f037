//! Numeric tolerances shared across the crate.

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-10;
/// Smallest eigenvalue still accepted as positive semidefinite.
pub const PSD_FLOOR: f64 = -1e-9;
/// Slack applied to threshold comparisons in verdicts.
pub const DECISION_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub hermitian: f64,
    pub trace: f64,
    pub psd_floor: f64,
    pub slack: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            hermitian: HERMITIAN_TOL,
            trace: TRACE_TOL,
            psd_floor: PSD_FLOOR,
            slack: DECISION_SLACK,
        }
    }
}

impl Tolerances {
    pub fn with_slack(slack: f64) -> Self {
        Tolerances {
            slack,
            ..Self::default()
        }
    }
}
