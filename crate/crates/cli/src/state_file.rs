//! The on-disk state format.
//!
//! A JSON object with `dims`, an optional `label` and `matrix`, a row-major
//! list of rows whose entries are `[re, im]` pairs. [`StateFile::write`]
//! emits the canonical layout: keys in that order, one matrix row per line,
//! numbers in shortest round-trip form. Parsing a canonical file and
//! writing it back reproduces it byte for byte.

use std::fmt::Write as _;

use qent_core::qmat::{validate_density_with, ComplexMatrix, DensityMatrix, Tolerances, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl StateFile {
    pub fn parse(text: &str) -> CliResult<StateFile> {
        let f: StateFile = serde_json::from_str(text).map_err(|e| {
            CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        f.check_shape()?;
        Ok(f)
    }

    pub fn read(path: &std::path::Path) -> CliResult<StateFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn check_shape(&self) -> CliResult<()> {
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(CliError::Usage(format!(
                "dims {:?} must be positive",
                self.dims
            )));
        }
        let n: usize = self.dims.iter().product();
        if self.matrix.len() != n {
            return Err(CliError::Usage(format!(
                "dims {:?} need {n} matrix rows, found {}",
                self.dims,
                self.matrix.len()
            )));
        }
        if let Some((i, r)) = self.matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(CliError::Usage(format!(
                "matrix row {i} has {} entries, expected {n}",
                r.len()
            )));
        }
        Ok(())
    }

    pub fn from_density(rho: &DensityMatrix, label: Option<&str>) -> StateFile {
        let m = rho.mat();
        let matrix = (0..m.rows())
            .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        StateFile {
            dims: rho.dims().to_vec(),
            label: label.map(str::to_owned),
            matrix,
        }
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let n = self.matrix.len();
        ComplexMatrix::from_fn(n, n, |i, j| {
            let [re, im] = self.matrix[i][j];
            C64::new(re, im)
        })
    }

    pub fn to_density(&self, tol: &Tolerances) -> CliResult<DensityMatrix> {
        self.check_shape()?;
        Ok(validate_density_with(&self.to_matrix(), &self.dims, tol)?)
    }

    pub fn write(&self) -> String {
        let num = |x: f64| serde_json::to_string(&x).unwrap_or_else(|_| "null".into());
        let mut s = String::from("{\n  \"dims\": [");
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        s.push_str(&dims.join(", "));
        s.push_str("],\n");
        if let Some(l) = &self.label {
            let quoted = serde_json::to_string(l).unwrap_or_default();
            let _ = writeln!(s, "  \"label\": {quoted},");
        }
        s.push_str("  \"matrix\": [\n");
        for (i, row) in self.matrix.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|[re, im]| format!("[{}, {}]", num(*re), num(*im)))
                .collect();
            let sep = if i + 1 < self.matrix.len() { "," } else { "" };
            let _ = writeln!(s, "    [{}]{sep}", cells.join(", "));
        }
        s.push_str("  ]\n}\n");
        s
    }
}
