//! Command results and their text and JSON renderings.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// What a command prints. An error report always has a diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub payload: Option<Payload>,
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn ok(payload: Payload) -> Self {
        Self {
            status: Status::Ok,
            payload: Some(payload),
            diagnostics: Vec::new(),
        }
    }

    pub fn error(payload: Option<Payload>, diagnostic: String) -> Self {
        Self {
            status: Status::Error,
            payload,
            diagnostics: vec![diagnostic],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Stable line-oriented rendering of the payload; diagnostics are left
    /// to the caller.
    pub fn to_text(&self) -> String {
        self.payload
            .as_ref()
            .map(Payload::to_text)
            .unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Ideal {
        generators: Vec<String>,
    },
    Decomposition {
        method: String,
        checked: bool,
        components: Vec<String>,
    },
    Covers {
        covers: Vec<String>,
    },
    Minimized {
        input: String,
        cover: String,
    },
    Unmixed {
        unmixed: bool,
        cardinalities: Vec<usize>,
        witnesses: Vec<String>,
        m_height: usize,
        dimension: usize,
    },
    Verdict {
        family: String,
        unmixed: bool,
        cohen_macaulay: String,
        certificate: String,
        rationale: String,
    },
    Primes {
        which: String,
        primes: Vec<String>,
    },
    Radical {
        generators: Vec<String>,
    },
    Verification {
        graphs: usize,
        passed: usize,
        failed: usize,
        checks: Vec<CheckSummary>,
    },
}

fn lines_or_zero(items: &[String]) -> String {
    if items.is_empty() {
        "0 (zero ideal)\n".to_string()
    } else {
        items.iter().map(|s| format!("{s}\n")).collect()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Payload {
    pub fn to_text(&self) -> String {
        match self {
            Payload::Ideal { generators } | Payload::Radical { generators } => {
                lines_or_zero(generators)
            }
            Payload::Decomposition { components, .. } => {
                if components.iter().all(|c| c == "0") {
                    "0 (zero ideal)\n".to_string()
                } else {
                    lines_or_zero(components)
                }
            }
            Payload::Covers { covers } => covers.iter().map(|c| format!("{c}\n")).collect(),
            Payload::Minimized { cover, .. } => format!("{cover}\n"),
            Payload::Unmixed {
                unmixed,
                cardinalities,
                witnesses,
                m_height,
                dimension,
            } => {
                let sizes: Vec<String> = cardinalities.iter().map(ToString::to_string).collect();
                let mut out = format!(
                    "{}\ncover cardinalities: {}\n",
                    if *unmixed { "unmixed" } else { "mixed" },
                    sizes.join(", ")
                );
                for w in witnesses {
                    out.push_str(&format!("witness: {w}\n"));
                }
                out.push_str(&format!("m-height: {m_height}\ndimension: {dimension}\n"));
                out
            }
            Payload::Verdict {
                family,
                unmixed,
                cohen_macaulay,
                certificate,
                rationale,
            } => format!(
                "family: {family}\nunmixed: {}\ncohen-macaulay: {cohen_macaulay}\n\
                 certificate: {certificate}\nrationale: {rationale}\n",
                yes_no(*unmixed)
            ),
            Payload::Primes { primes, .. } => primes.iter().map(|p| format!("{p}\n")).collect(),
            Payload::Verification {
                graphs,
                passed,
                failed,
                checks,
            } => {
                let mut out = String::new();
                for c in checks {
                    out.push_str(&format!(
                        "{}: {} passed, {} failed\n",
                        c.name, c.passed, c.failed
                    ));
                    for f in &c.failures {
                        out.push_str(&format!("  {f}\n"));
                    }
                }
                out.push_str(&format!(
                    "total: {graphs} graphs, {passed} passed, {failed} failed\n"
                ));
                out
            }
        }
    }
}
