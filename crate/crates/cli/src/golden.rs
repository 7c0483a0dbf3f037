//! Bundled reference data for `reproduce` and the cell-by-cell diff.

use std::path::PathBuf;

use qent_core::repro::Dataset;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

pub const GOLDEN_DIR_ENV: &str = "QENT_GOLDEN_DIR";

const EMBEDDED: [(&str, &str); 12] = [
    ("2.1", include_str!("../golden/2.1.json")),
    ("2.2", include_str!("../golden/2.2.json")),
    ("2.3", include_str!("../golden/2.3.json")),
    ("3.1", include_str!("../golden/3.1.json")),
    ("5.1", include_str!("../golden/5.1.json")),
    ("5.2", include_str!("../golden/5.2.json")),
    ("fig2.1", include_str!("../golden/fig2.1.json")),
    ("fig6.1", include_str!("../golden/fig6.1.json")),
    ("fig6.2", include_str!("../golden/fig6.2.json")),
    ("fig6.3", include_str!("../golden/fig6.3.json")),
    ("fig6.4", include_str!("../golden/fig6.4.json")),
    ("fig6.5", include_str!("../golden/fig6.5.json")),
];

/// A published cell that the golden file overrides with the computed value.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Divergence {
    pub row: usize,
    pub column: String,
    pub printed: f64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Golden {
    pub id: String,
    pub tolerance: f64,
    pub columns: Vec<String>,
    /// `None` cells are not compared.
    pub rows: Vec<Vec<Option<f64>>>,
    #[serde(default)]
    pub divergences: Vec<Divergence>,
}

impl Golden {
    pub fn parse(text: &str) -> CliResult<Golden> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Parse(format!(
                "golden data, line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    /// Reads `<QENT_GOLDEN_DIR>/<id>.json` when the variable is set,
    /// otherwise the copy compiled into the binary.
    pub fn load(id: &str) -> CliResult<Golden> {
        match std::env::var_os(GOLDEN_DIR_ENV) {
            Some(dir) => {
                let path = PathBuf::from(dir).join(format!("{id}.json"));
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
                Self::parse(&text)
            }
            None => {
                let text = EMBEDDED
                    .iter()
                    .find(|(k, _)| *k == id)
                    .map(|(_, t)| *t)
                    .ok_or_else(|| CliError::Usage(format!("no golden data for {id}")))?;
                Self::parse(text)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub row: usize,
    pub column: String,
    pub computed: f64,
    pub golden: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diff {
    pub compared: usize,
    pub max_abs_diff: f64,
    pub mismatches: Vec<Mismatch>,
}

impl Diff {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn diff(data: &Dataset, golden: &Golden) -> CliResult<Diff> {
    if golden
        .columns
        .iter()
        .map(String::as_str)
        .ne(data.columns.iter().copied())
    {
        return Err(CliError::Validation(format!(
            "golden columns {:?} differ from generated {:?}",
            golden.columns, data.columns
        )));
    }
    if golden.rows.len() != data.rows.len() {
        return Err(CliError::Validation(format!(
            "golden has {} rows, generated {}",
            golden.rows.len(),
            data.rows.len()
        )));
    }
    let mut out = Diff {
        compared: 0,
        max_abs_diff: 0.0,
        mismatches: Vec::new(),
    };
    for (r, (g, d)) in golden.rows.iter().zip(&data.rows).enumerate() {
        for (k, (gv, dv)) in g.iter().zip(d).enumerate() {
            let Some(gv) = gv else { continue };
            out.compared += 1;
            let delta = (gv - dv).abs();
            if delta.is_nan() || delta > golden.tolerance {
                out.mismatches.push(Mismatch {
                    row: r,
                    column: golden.columns[k].clone(),
                    computed: *dv,
                    golden: *gv,
                });
            }
            if delta > out.max_abs_diff || delta.is_nan() {
                out.max_abs_diff = delta;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_embedded_file_parses() {
        for (id, text) in EMBEDDED {
            let g = Golden::parse(text).unwrap();
            assert_eq!(g.id, id);
            assert_eq!(g.tolerance, qent_core::repro::tolerance(id));
        }
    }

    #[test]
    fn null_cells_are_skipped() {
        let g =
            Golden::parse(r#"{"id":"x","tolerance":0.1,"columns":["a","b"],"rows":[[1.0,null]]}"#)
                .unwrap();
        let d = Dataset {
            id: "x",
            title: "",
            columns: vec!["a", "b"],
            rows: vec![vec![1.05, 9.0]],
        };
        let r = diff(&d, &g).unwrap();
        assert_eq!(r.compared, 1);
        assert!(r.ok());
    }
}
