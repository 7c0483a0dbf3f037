use std::path::Path;

use qent_core::classify3::{
    classify_ghz_subclass, slocc_classify_with, subclass_fidelities, CanonicalThreeQubit,
    SloccOutcome, Subclass, SLOCC_THRESHOLD,
};
use qent_core::detect::{
    criterion1_with, criterion2_with, criterion3_with, ppt_check_with, realignment_check_with,
    reduction_check_with, witness_from_pure, Verdict,
};
use qent_core::measures::{
    concurrence_2q, concurrence_lb_chen, concurrence_pure, l1_coherence, negativity,
    structured_negativity, tangle_pure, three_pi,
};
use qent_core::qmat::{herm_eigen, partial_transpose, DensityMatrix, Tolerances, C64};
use qent_core::repro::{self, Dataset};
use qent_core::spa::{spa_pt_two_qubit, spa_witness};
use qent_core::QentError;

use crate::error::{CliError, CliResult};
use crate::golden::{self, Golden};
use crate::report::Report;
use crate::state_file::StateFile;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DetectSelection {
    pub ppt: bool,
    pub realign: bool,
    pub reduce: bool,
    pub criterion1: bool,
    pub criterion2: bool,
    pub criterion3: bool,
}

impl DetectSelection {
    fn or_default(self) -> Self {
        if self == Self::default() {
            DetectSelection {
                ppt: true,
                realign: true,
                reduce: true,
                ..self
            }
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MeasureSelection {
    pub negativity: bool,
    pub structured: bool,
    pub concurrence: bool,
    pub clb: bool,
    pub coherence: bool,
    pub tangle: bool,
    pub three_pi: bool,
}

pub fn load_state(path: &Path, tol: &Tolerances) -> CliResult<(DensityMatrix, String)> {
    let f = StateFile::read(path)?;
    let rho = f.to_density(tol)?;
    let label = f
        .label
        .clone()
        .unwrap_or_else(|| path.display().to_string());
    Ok((rho, label))
}

fn push_verdict(r: &mut Report, v: &Verdict) {
    r.push(v.criterion, Some(v.evidence), v.outcome.to_string());
}

fn require_dims(rho: &DensityMatrix, want: &[usize], what: &str) -> CliResult<()> {
    if rho.dims() != want {
        return Err(CliError::Usage(format!(
            "{what} needs dims {want:?}, the state has {:?}",
            rho.dims()
        )));
    }
    Ok(())
}

pub fn detect(
    rho: &DensityMatrix,
    label: &str,
    sel: DetectSelection,
    tol: &Tolerances,
) -> CliResult<Report> {
    let sel = sel.or_default();
    let (d1, d2) = rho.bipartite()?;
    let mut r = Report::new("detect", label, tol);
    if sel.ppt {
        push_verdict(&mut r, &ppt_check_with(rho, 1, tol)?);
    }
    if sel.realign {
        push_verdict(&mut r, &realignment_check_with(rho, tol)?);
    }
    if sel.reduce {
        push_verdict(&mut r, &reduction_check_with(rho, tol)?);
    }
    if sel.criterion1 {
        // witness from the most negative eigenvector of the partial transpose
        let e = herm_eigen(&partial_transpose(rho, 1)?)?;
        let v: Vec<C64> = e.vector(0);
        let w = witness_from_pure(&v, &[d1, d2], 1)?;
        match spa_witness(&w, d1, d2, None) {
            Ok(w) => push_verdict(&mut r, &criterion1_with(rho, &w, tol)?),
            Err(QentError::NotAWitness(_)) => r.push("criterion1", None, "inconclusive"),
            Err(e) => return Err(e.into()),
        }
    }
    if sel.criterion2 || sel.criterion3 {
        require_dims(rho, &[2, 2], "criterion2/criterion3")?;
        let t = spa_pt_two_qubit(rho)?;
        let c = concurrence_2q(rho)?.value;
        if sel.criterion2 {
            push_verdict(&mut r, &criterion2_with(rho, &t.rho_tilde, c, tol)?);
        }
        if sel.criterion3 {
            push_verdict(&mut r, &criterion3_with(rho, &t.rho_tilde, c, tol)?);
        }
    }
    Ok(r)
}

/// Top eigenvector when the state has purity 1 within tolerance.
fn pure_vector(rho: &DensityMatrix, tol: &Tolerances) -> CliResult<Option<Vec<C64>>> {
    let purity = rho
        .mat()
        .trace_product(rho.mat())
        .map_err(CliError::from)?
        .re;
    if (1.0 - purity).abs() > tol.trace.max(1e-9) {
        return Ok(None);
    }
    let e = herm_eigen(rho.mat())?;
    Ok(Some(e.vector(rho.dim() - 1)))
}

pub fn measure(
    rho: &DensityMatrix,
    label: &str,
    sel: MeasureSelection,
    tol: &Tolerances,
) -> CliResult<Report> {
    let explicit = sel != MeasureSelection::default();
    let bip = rho.bipartite().ok();
    let square = matches!(bip, Some((a, b)) if a == b);
    let qubits3 = rho.dims() == [2, 2, 2];
    let psi = pure_vector(rho, tol)?;
    let want = |flag: bool, applicable: bool| if explicit { flag } else { applicable };
    let mut r = Report::new("measure", label, tol);

    if want(sel.negativity, bip.is_some()) {
        r.push("negativity", Some(negativity(rho)?.value), "value");
    }
    if want(sel.structured, square) {
        r.push(
            "structured_negativity",
            Some(structured_negativity(rho)?.value),
            "value",
        );
    }
    if want(
        sel.concurrence,
        rho.dims() == [2, 2] || (bip.is_some() && psi.is_some()),
    ) {
        let v = if rho.dims() == [2, 2] {
            concurrence_2q(rho)?.value
        } else {
            let (d1, d2) = rho.bipartite()?;
            let psi = psi.as_ref().ok_or_else(|| {
                CliError::Usage("concurrence beyond 2x2 needs a pure state".into())
            })?;
            concurrence_pure(psi, d1, d2)?.value
        };
        r.push("concurrence", Some(v), "value");
    }
    if want(sel.clb, square) {
        r.push(
            "concurrence_lb",
            Some(concurrence_lb_chen(rho)?.value),
            "value",
        );
    }
    if want(sel.coherence, true) {
        r.push("l1_coherence", Some(l1_coherence(rho.mat())), "value");
    }
    for (flag, name) in [(sel.tangle, "tangle"), (sel.three_pi, "three_pi")] {
        if !want(flag, qubits3 && psi.is_some()) {
            continue;
        }
        require_dims(rho, &[2, 2, 2], name)?;
        let psi = psi
            .as_ref()
            .ok_or_else(|| CliError::Validation(format!("{name} needs a pure state")))?;
        let v = if name == "tangle" {
            tangle_pure(psi)?
        } else {
            three_pi(psi)?
        };
        r.push(name, Some(v.value), "value");
    }
    Ok(r)
}

fn slocc_entries(r: &mut Report, rho: &DensityMatrix, tol: &Tolerances) -> CliResult<()> {
    let v = slocc_classify_with(rho, tol.slack)?;
    for (name, l) in ["lambda_A", "lambda_B", "lambda_C"].iter().zip(v.lambdas) {
        let side = if l >= SLOCC_THRESHOLD - tol.slack {
            "at_or_above_threshold"
        } else {
            "below_threshold"
        };
        r.push(*name, Some(l), side);
    }
    let value = match v.outcome {
        SloccOutcome::Inconclusive => None,
        _ => Some(v.lambdas.iter().cloned().fold(f64::INFINITY, f64::min)),
    };
    r.push("slocc", value, v.outcome.to_string());
    Ok(())
}

pub fn classify3_state(rho: &DensityMatrix, label: &str, tol: &Tolerances) -> CliResult<Report> {
    require_dims(rho, &[2, 2, 2], "classify3")?;
    let mut r = Report::new("classify3", label, tol);
    slocc_entries(&mut r, rho, tol)?;
    Ok(r)
}

pub fn classify3_canonical(lambdas: [f64; 5], theta: f64, tol: &Tolerances) -> CliResult<Report> {
    let p = CanonicalThreeQubit::normalized(lambdas, theta)?;
    let label = format!(
        "canonical {} {} {} {} {} theta {}",
        p.lambda[0], p.lambda[1], p.lambda[2], p.lambda[3], p.lambda[4], p.theta
    );
    let mut r = Report::new("classify3", &label, tol);
    slocc_entries(&mut r, &p.density(), tol)?;
    match classify_ghz_subclass(&p) {
        Ok(s) => {
            r.push("tangle", Some(s.tangle), "value");
            r.push("parameter_form", None, s.form.name());
            for rd in &s.readings {
                let verdict = if rd.negative() {
                    format!("negative: {}", rd.witness.implication())
                } else {
                    "nonnegative".to_string()
                };
                r.push(rd.witness.name(), Some(rd.value), verdict);
            }
            let fid = subclass_fidelities(&p, Subclass::of(&p))?;
            for (name, f) in ["fidelity_A", "fidelity_B", "fidelity_C"].iter().zip(fid) {
                r.push(*name, Some(f), "value");
            }
        }
        Err(QentError::NotGhzClass(tau)) => r.push("ghz_subclass", Some(tau), "not_ghz_class"),
        Err(QentError::Unsupported(m)) => r.push("ghz_subclass", None, format!("unsupported: {m}")),
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

pub fn dataset_csv(d: &Dataset) -> String {
    let mut s = d.columns.join(",");
    s.push('\n');
    for row in &d.rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

/// Regenerates a dataset and diffs it against the golden copy. Returns the
/// report, the regenerated data and whether every compared cell matched.
pub fn reproduce(id: &str, tol: &Tolerances) -> CliResult<(Report, Dataset, bool)> {
    let data = repro::generate(id)?;
    let gold = Golden::load(data.id)?;
    let d = golden::diff(&data, &gold)?;
    let mut r = Report::new("reproduce", &format!("{} {}", data.id, data.title), tol);
    r.push("rows", Some(data.rows.len() as f64), "value");
    r.push("cell_tolerance", Some(gold.tolerance), "value");
    r.push("cells_compared", Some(d.compared as f64), "value");
    r.push("max_abs_diff", Some(d.max_abs_diff), "value");
    for m in &d.mismatches {
        r.push(
            format!("row {} {}", m.row, m.column),
            Some(m.computed),
            format!("mismatch: golden {}", m.golden),
        );
    }
    for v in &gold.divergences {
        r.push(
            format!("row {} {} printed", v.row, v.column),
            Some(v.printed),
            format!("divergent: {}", v.reason),
        );
    }
    r.push("golden", None, if d.ok() { "match" } else { "mismatch" });
    Ok((r, data, d.ok()))
}
