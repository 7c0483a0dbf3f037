//! Coherence based tests for biseparability and full separability.
//!
//! The inequalities quantify over decompositions of the state, which cannot be
//! recovered from the matrix alone, so every check takes an explicit
//! [`Ensemble`]. A violated bound only rules out the supplied decomposition
//! family.

use crate::detect::{Outcome, Verdict};
use crate::error::{QentError, Result};
use crate::measures::l1_coherence;
use crate::qmat::tol::DECISION_SLACK;
use crate::qmat::{partial_trace, tensor, validate_density, ComplexMatrix, DensityMatrix};

const WEIGHT_TOL: f64 = 1e-10;
const NAMES: [&str; 8] = ["A", "B", "C", "D", "E", "F", "G", "H"];

/// A state on a subset of the parties, listed in ascending order.
#[derive(Debug, Clone)]
pub struct Factor {
    pub parties: Vec<usize>,
    pub state: DensityMatrix,
}

#[derive(Debug, Clone)]
pub struct EnsembleTerm {
    pub weight: f64,
    pub factors: Vec<Factor>,
}

impl EnsembleTerm {
    /// Sum of the factor coherences.
    pub fn x(&self) -> f64 {
        self.factors
            .iter()
            .map(|f| l1_coherence(f.state.mat()))
            .sum()
    }

    /// Partition label such as "A-BC".
    pub fn label(&self) -> String {
        let mut groups: Vec<&Factor> = self.factors.iter().collect();
        // single parties first, mirroring A-BC, B-AC, C-AB
        groups.sort_by_key(|f| (f.parties.len(), f.parties[0]));
        groups
            .iter()
            .map(|f| f.parties.iter().map(|&p| NAMES[p]).collect::<String>())
            .collect::<Vec<_>>()
            .join("-")
    }
}

/// Weighted product decomposition of a multipartite state.
#[derive(Debug, Clone)]
pub struct Ensemble {
    party_dims: Vec<usize>,
    terms: Vec<EnsembleTerm>,
}

impl Ensemble {
    pub fn new(party_dims: Vec<usize>, terms: Vec<EnsembleTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(QentError::Empty("ensemble with no terms".into()));
        }
        if party_dims.len() > NAMES.len() {
            return Err(QentError::Unsupported(format!(
                "at most {} parties",
                NAMES.len()
            )));
        }
        let total: f64 = terms.iter().map(|t| t.weight).sum();
        if (total - 1.0).abs() > WEIGHT_TOL || terms.iter().any(|t| t.weight < 0.0) {
            return Err(QentError::InvalidParameter(format!(
                "ensemble weights sum to {total}"
            )));
        }
        for t in &terms {
            let mut seen = vec![false; party_dims.len()];
            for f in &t.factors {
                if f.parties.is_empty() || f.parties.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(QentError::InvalidParameter(
                        "factor parties must be nonempty and ascending".into(),
                    ));
                }
                let mut want = Vec::new();
                for &p in &f.parties {
                    if p >= party_dims.len() || seen[p] {
                        return Err(QentError::InvalidParameter(format!(
                            "party {p} missing or repeated"
                        )));
                    }
                    seen[p] = true;
                    want.push(party_dims[p]);
                }
                if f.state.dims().iter().product::<usize>() != want.iter().product::<usize>() {
                    return Err(QentError::Dimension(format!(
                        "factor on parties {:?} has dims {:?}",
                        f.parties,
                        f.state.dims()
                    )));
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(QentError::InvalidParameter(
                    "a term does not cover every party".into(),
                ));
            }
        }
        Ok(Ensemble { party_dims, terms })
    }

    pub fn party_dims(&self) -> &[usize] {
        &self.party_dims
    }

    pub fn terms(&self) -> &[EnsembleTerm] {
        &self.terms
    }
}

/// Reorders tensor factors: `m` lives on subsystems `order` (with dims
/// `dims[order[k]]`), the result on 0..n in ascending order.
fn permute_to_canonical(m: &ComplexMatrix, order: &[usize], dims: &[usize]) -> ComplexMatrix {
    let n = m.rows();
    let k = order.len();
    let local: Vec<usize> = order.iter().map(|&p| dims[p]).collect();
    let to_local = |idx: usize| -> usize {
        let mut digits = vec![0; k];
        let mut r = idx;
        for p in (0..k).rev() {
            digits[p] = r % dims[p];
            r /= dims[p];
        }
        order
            .iter()
            .zip(&local)
            .fold(0, |acc, (&p, &d)| acc * d + digits[p])
    };
    let map: Vec<usize> = (0..n).map(to_local).collect();
    ComplexMatrix::from_fn(n, n, |i, j| m[(map[i], map[j])])
}

/// The state sum_i p_i (x)_f sigma_f represented by the ensemble.
pub fn ensemble_state(e: &Ensemble) -> Result<DensityMatrix> {
    let n: usize = e.party_dims.iter().product();
    let mut acc = ComplexMatrix::zeros(n, n);
    for t in &e.terms {
        let mats: Vec<&ComplexMatrix> = t.factors.iter().map(|f| f.state.mat()).collect();
        let order: Vec<usize> = t.factors.iter().flat_map(|f| f.parties.clone()).collect();
        let m = permute_to_canonical(&crate::qmat::tensor_all(&mats), &order, &e.party_dims);
        acc = &acc + &m.scale(t.weight);
    }
    validate_density(&acc, &e.party_dims)
}

/// C(rho1) + C(rho2) + C(rho1) C(rho2), the coherence of rho1 (x) rho2.
pub fn coherence_product_rule(rho1: &ComplexMatrix, rho2: &ComplexMatrix) -> f64 {
    let (a, b) = (l1_coherence(rho1), l1_coherence(rho2));
    a + b + a * b
}

fn condition(criterion: &'static str, holds: bool, evidence: f64) -> Verdict {
    Verdict {
        outcome: if holds {
            Outcome::ConditionSatisfied
        } else {
            Outcome::ConditionViolated
        },
        evidence,
        criterion,
    }
}

fn check_state(e: &Ensemble, rho: &DensityMatrix) -> Result<()> {
    if rho.dims().iter().product::<usize>() != e.party_dims.iter().product::<usize>() {
        return Err(QentError::Dimension(format!(
            "state dims {:?} do not match ensemble parties {:?}",
            rho.dims(),
            e.party_dims
        )));
    }
    Ok(())
}

/// Equality C(rho) = C(rho_S) + C(rho_rest) + C(rho_S) C(rho_rest) with both
/// marginals taken from rho itself; a violation rules out rho = rho_S (x) rho_rest.
pub fn marginal_product_check(rho: &DensityMatrix, group: &[usize]) -> Result<Verdict> {
    let rest: Vec<usize> = (0..rho.dims().len())
        .filter(|p| !group.contains(p))
        .collect();
    let a = partial_trace(rho, group)?;
    let b = partial_trace(rho, &rest)?;
    let lhs = l1_coherence(rho.mat());
    let rhs = coherence_product_rule(a.mat(), b.mat());
    Ok(condition(
        "coherence_product_equality",
        (lhs - rhs).abs() <= DECISION_SLACK,
        lhs - rhs,
    ))
}

fn single_cut(e: &Ensemble) -> Result<()> {
    for t in &e.terms {
        if t.factors.len() != 2 || t.factors.iter().all(|f| f.parties.len() != 1) {
            return Err(QentError::InvalidParameter(format!(
                "term {} is not a one-versus-rest cut",
                t.label()
            )));
        }
    }
    Ok(())
}

/// C(rho) <= sum_i p_i (X_i^2/4 + X_i) for an ensemble within one cut.
pub fn biseparable_pure_bound(e: &Ensemble, rho: &DensityMatrix) -> Result<Verdict> {
    check_state(e, rho)?;
    single_cut(e)?;
    let label = e.terms[0].label();
    if e.terms.iter().any(|t| t.label() != label) {
        return Err(QentError::InvalidParameter(
            "mixed partition labels; use mixed_biseparable_bound".into(),
        ));
    }
    let rhs: f64 = e
        .terms
        .iter()
        .map(|t| {
            let x = t.x();
            t.weight * (x * x / 4.0 + x)
        })
        .sum();
    let slack = rhs - l1_coherence(rho.mat());
    Ok(condition(
        "biseparable_bound",
        slack >= -DECISION_SLACK,
        slack,
    ))
}

/// 1 + C(rho) <= (1/4) sum_i p_i (X_i + 2)^2 with terms across any cuts.
pub fn mixed_biseparable_bound(e: &Ensemble, rho: &DensityMatrix) -> Result<Verdict> {
    check_state(e, rho)?;
    single_cut(e)?;
    let rhs: f64 = e
        .terms
        .iter()
        .map(|t| t.weight * (t.x() + 2.0).powi(2) / 4.0)
        .sum();
    let slack = rhs - (1.0 + l1_coherence(rho.mat()));
    Ok(condition(
        "mixed_biseparable_bound",
        slack >= -DECISION_SLACK,
        slack,
    ))
}

/// C(rho) <= sum_i p_i [prod_x (1 + C_x) - 1], i.e. all single, pair, triple...
/// products of the factor coherences, each unordered subset once.
pub fn separable_bound(e: &Ensemble, rho: &DensityMatrix) -> Result<Verdict> {
    check_state(e, rho)?;
    for t in &e.terms {
        if t.factors.len() != e.party_dims.len() {
            return Err(QentError::InvalidParameter(format!(
                "term {} is not fully product",
                t.label()
            )));
        }
    }
    let rhs: f64 = e
        .terms
        .iter()
        .map(|t| {
            let prod: f64 = t
                .factors
                .iter()
                .map(|f| 1.0 + l1_coherence(f.state.mat()))
                .product();
            t.weight * (prod - 1.0)
        })
        .sum();
    let slack = rhs - l1_coherence(rho.mat());
    Ok(condition(
        "separable_bound",
        slack >= -DECISION_SLACK,
        slack,
    ))
}

#[derive(Debug, Clone)]
pub struct CoherenceClassification {
    /// True only when every supplied bound is violated.
    pub genuine: bool,
    /// One verdict per candidate ensemble, in input order.
    pub checks: Vec<Verdict>,
}

impl CoherenceClassification {
    /// Index of the first candidate whose bound held.
    pub fn first_satisfied(&self) -> Option<usize> {
        self.checks
            .iter()
            .position(|v| v.outcome == Outcome::ConditionSatisfied)
    }
}

/// Runs the separable bound on fully product candidates and the mixed
/// biseparable bound on cut candidates.
pub fn classify_by_coherence(
    rho: &DensityMatrix,
    candidates: &[Ensemble],
) -> Result<CoherenceClassification> {
    if candidates.is_empty() {
        return Err(QentError::Empty("no candidate ensembles".into()));
    }
    let mut checks = Vec::with_capacity(candidates.len());
    for e in candidates {
        let product = e
            .terms
            .iter()
            .all(|t| t.factors.len() == e.party_dims.len());
        checks.push(if product {
            separable_bound(e, rho)?
        } else {
            mixed_biseparable_bound(e, rho)?
        });
    }
    let genuine = checks
        .iter()
        .all(|v| v.outcome == Outcome::ConditionViolated);
    Ok(CoherenceClassification { genuine, checks })
}

/// Product of the marginals of `rho` on the given groups, as one ensemble term.
pub fn marginal_term(
    rho: &DensityMatrix,
    weight: f64,
    groups: &[Vec<usize>],
) -> Result<EnsembleTerm> {
    let factors = groups
        .iter()
        .map(|g| {
            Ok(Factor {
                parties: g.clone(),
                state: partial_trace(rho, g)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EnsembleTerm { weight, factors })
}

/// l1 coherence of rho1 (x) rho2 computed directly.
pub fn tensor_coherence(rho1: &ComplexMatrix, rho2: &ComplexMatrix) -> f64 {
    l1_coherence(&tensor(rho1, rho2))
}
