use qent_core::qmat::Tolerances;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub name: String,
    /// `null` when the step produced no number.
    pub value: Option<f64>,
    pub verdict: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ToleranceSet {
    pub hermitian: f64,
    pub trace: f64,
    pub psd_floor: f64,
    pub slack: f64,
}

impl From<&Tolerances> for ToleranceSet {
    fn from(t: &Tolerances) -> Self {
        ToleranceSet {
            hermitian: t.hermitian,
            trace: t.trace,
            psd_floor: t.psd_floor,
            slack: t.slack,
        }
    }
}

/// Output of one command. Field order and number formatting are fixed, so
/// identical inputs give identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub label: String,
    pub version: String,
    pub tolerances: ToleranceSet,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(command: &str, label: &str, tol: &Tolerances) -> Self {
        Report {
            command: command.into(),
            label: label.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            tolerances: tol.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        value: Option<f64>,
        verdict: impl Into<String>,
    ) {
        let value = value.filter(|v| v.is_finite());
        self.entries.push(Entry {
            name: name.into(),
            value,
            verdict: verdict.into(),
        });
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_becomes_null() {
        let mut r = Report::new("measure", "x", &Tolerances::default());
        r.push("n", Some(f64::NAN), "value");
        assert!(r.to_json().contains("\"value\": null"));
    }

    #[test]
    fn stable_bytes() {
        let mut r = Report::new("measure", "x", &Tolerances::default());
        r.push("n", Some(0.1), "value");
        assert_eq!(r.to_json(), r.clone().to_json());
        assert!(r.to_json().starts_with("{\n  \"command\": \"measure\""));
    }
}
