//! Command dispatch for the `edgeideal` binary.

pub mod args;
pub mod report;

use std::fmt;
use std::io::Read;

use edgeideal::{
    associated_primes, classify_as, cover_decomposition, enumerate_minimal_covers, is_unmixed,
    m_height_and_dimension, minimal_primes, minimize_cover, split_decompose, verify_graph,
    verify_random, AlgebraError, Certificate, ClassifyError, Decomposition, Family, GraphError,
    MonomialIdeal, RandomCorpus, Verdict, VerificationReport, WeightedCover, WeightedGraph,
};

pub use args::{Cli, Command, FamilyArg, Format, Method};
pub use report::{CheckSummary, Payload, Report, Status};

/// Failure classes, each with its own exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad invocation, unreadable input or malformed JSON.
    Usage(String),
    /// Well-formed input that the library rejects.
    Validation(String),
    /// Two computations that must agree did not.
    Oracle(String, Option<Box<Payload>>),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Validation(_) => 2,
            Failure::Oracle(..) => 3,
        }
    }

    pub fn into_report(self) -> Report {
        match self {
            Failure::Usage(m) | Failure::Validation(m) => Report::error(None, m),
            Failure::Oracle(m, payload) => Report::error(payload.map(|p| *p), m),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Validation(m) | Failure::Oracle(m, _) => f.write_str(m),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        if e.is_parse_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Validation(e.to_string())
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Graph(g) => g.into(),
            other => Failure::Validation(other.to_string()),
        }
    }
}

pub fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))
    }
}

fn load(path: &str) -> Result<WeightedGraph, Failure> {
    Ok(WeightedGraph::from_json(&read_input(path)?)?)
}

/// Runs `command`, reading graphs from disk or standard input.
pub fn run(command: &Command) -> Result<Payload, Failure> {
    match command {
        Command::Ideal(i) => Ok(ideal_payload(&load(&i.input)?)),
        Command::Decompose {
            input,
            method,
            check,
        } => decompose(&load(&input.input)?, *method, *check),
        Command::Covers(i) => covers(&load(&i.input)?),
        Command::Minimize { input, cover } => minimize(&load(&input.input)?, cover),
        Command::Unmixed(i) => unmixed(&load(&i.input)?),
        Command::Classify { input, family } => classify(&load(&input.input)?, *family),
        Command::Primes { input, assoc, .. } => primes(&load(&input.input)?, *assoc),
        Command::Radical(i) => Ok(Payload::Radical {
            generators: generator_strings(
                &load(&i.input)?.weighted_edge_ideal().monomial_radical(),
            ),
        }),
        Command::Verify {
            input,
            random,
            max_vertices,
            max_weight,
            seed,
        } => {
            let report = match (input, random) {
                (_, Some(count)) => {
                    if *max_vertices == 0 || *max_weight == 0 {
                        return Err(Failure::Validation(
                            "--max-vertices and --max-weight must be at least 1".into(),
                        ));
                    }
                    if *max_vertices > edgeideal::cover::ENUMERATION_VERTEX_LIMIT {
                        return Err(Failure::Validation(format!(
                            "--max-vertices is limited to {}",
                            edgeideal::cover::ENUMERATION_VERTEX_LIMIT
                        )));
                    }
                    verify_random(RandomCorpus {
                        count: *count,
                        max_vertices: *max_vertices,
                        max_weight: *max_weight,
                        seed: *seed,
                    })
                }
                (Some(path), None) => verify_graph(&load(path)?),
                (None, None) => {
                    return Err(Failure::Usage("verify needs an input or --random".into()))
                }
            };
            verification(&report)
        }
    }
}

pub fn generator_strings(ideal: &MonomialIdeal) -> Vec<String> {
    let ctx = ideal.context();
    ideal
        .generators()
        .iter()
        .map(|g| ctx.format_monomial(g))
        .collect()
}

pub fn ideal_payload(graph: &WeightedGraph) -> Payload {
    Payload::Ideal {
        generators: generator_strings(&graph.weighted_edge_ideal()),
    }
}

fn component_strings(d: &Decomposition) -> Vec<String> {
    d.components().iter().map(ToString::to_string).collect()
}

/// Describes how two decompositions differ, or `None` if they agree.
pub fn decomposition_mismatch(covers: &[String], split: &[String]) -> Option<String> {
    if covers == split {
        return None;
    }
    let only = |a: &[String], b: &[String]| -> Vec<String> {
        a.iter().filter(|c| !b.contains(c)).cloned().collect()
    };
    let mut parts = Vec::new();
    let extra = only(covers, split);
    if !extra.is_empty() {
        parts.push(format!("only from covers: {}", extra.join(" ")));
    }
    let missing = only(split, covers);
    if !missing.is_empty() {
        parts.push(format!("only from splitting: {}", missing.join(" ")));
    }
    if parts.is_empty() {
        parts.push("component order differs".into());
    }
    Some(format!(
        "decomposition methods disagree; {}",
        parts.join("; ")
    ))
}

fn decompose(graph: &WeightedGraph, method: Method, check: bool) -> Result<Payload, Failure> {
    let by_covers =
        || -> Result<Vec<String>, Failure> { Ok(component_strings(&cover_decomposition(graph)?)) };
    let by_split = || -> Result<Vec<String>, Failure> {
        Ok(component_strings(&split_decompose(
            &graph.weighted_edge_ideal(),
        )?))
    };
    let (components, method_name) = match method {
        Method::Covers => (by_covers()?, "covers"),
        Method::Split => (by_split()?, "split"),
    };
    let payload = Payload::Decomposition {
        method: method_name.into(),
        checked: check,
        components: components.clone(),
    };
    if check {
        let (c, s) = match method {
            Method::Covers => (components, by_split()?),
            Method::Split => (by_covers()?, components),
        };
        if let Some(diagnostic) = decomposition_mismatch(&c, &s) {
            return Err(Failure::Oracle(diagnostic, Some(Box::new(payload))));
        }
    }
    Ok(payload)
}

fn covers(graph: &WeightedGraph) -> Result<Payload, Failure> {
    Ok(Payload::Covers {
        covers: enumerate_minimal_covers(graph)?
            .iter()
            .map(|c| c.display(graph).to_string())
            .collect(),
    })
}

fn minimize(graph: &WeightedGraph, text: &str) -> Result<Payload, Failure> {
    let cover = WeightedCover::parse(text, graph)?;
    let minimal = minimize_cover(graph, &cover)?;
    Ok(Payload::Minimized {
        input: cover.display(graph).to_string(),
        cover: minimal.display(graph).to_string(),
    })
}

fn unmixed(graph: &WeightedGraph) -> Result<Payload, Failure> {
    let report = is_unmixed(graph)?;
    let (m_height, dimension) = m_height_and_dimension(graph)?;
    let witnesses = report
        .witness
        .iter()
        .flat_map(|(a, b)| [a, b])
        .map(|c| c.display(graph).to_string())
        .collect();
    Ok(Payload::Unmixed {
        unmixed: report.unmixed,
        cardinalities: report.cardinalities,
        witnesses,
        m_height,
        dimension,
    })
}

fn classify(graph: &WeightedGraph, family: FamilyArg) -> Result<Payload, Failure> {
    let family = match family {
        FamilyArg::Auto => Family::General,
        FamilyArg::Cycle => Family::Cycle,
        FamilyArg::Complete => Family::Complete,
        FamilyArg::Tree => Family::Tree,
        FamilyArg::Suspension => Family::Suspension,
        FamilyArg::Path => Family::Path,
    };
    Ok(verdict_payload(graph, &classify_as(graph, family)?))
}

pub fn verdict_payload(graph: &WeightedGraph, verdict: &Verdict) -> Payload {
    Payload::Verdict {
        family: verdict.family.tag().into(),
        unmixed: verdict.unmixed,
        cohen_macaulay: verdict.cohen_macaulay.tag().into(),
        certificate: certificate_text(graph, &verdict.certificate),
        rationale: verdict.rationale.into(),
    }
}

fn certificate_text(graph: &WeightedGraph, certificate: &Certificate) -> String {
    let whiskers = |d: &edgeideal::SuspensionDecomposition| {
        d.pairs()
            .iter()
            .map(|&(v, w)| format!("{}:{}", graph.name(v), graph.name(w)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match certificate {
        Certificate::None => "none".into(),
        Certificate::UniformCardinality(k) => {
            format!("every minimal weighted cover has cardinality {k}")
        }
        Certificate::CyclePattern {
            start,
            reflected,
            arrangement: [a, b, c, d, e],
        } => format!(
            "weights read {} from edge {} give (a,b,c,d,e) = ({a},{b},{c},{d},{e})",
            if *reflected { "backwards" } else { "forwards" },
            start + 1
        ),
        Certificate::Witnesses { smaller, larger } => format!(
            "minimal covers {} and {} have cardinalities {} and {}",
            smaller.display(graph),
            larger.display(graph),
            smaller.cardinality(),
            larger.cardinality()
        ),
        Certificate::Suspension(d) => format!("suspension with base:whisker pairs {}", whiskers(d)),
        Certificate::SuspensionViolation {
            decomposition,
            base_edge: (vi, vj),
            smaller,
            larger,
        } => format!(
            "in the suspension with base:whisker pairs {}, base edge {}-{} outweighs the whisker \
             edge at {}; minimal covers {} and {} have cardinalities {} and {}",
            whiskers(decomposition),
            graph.name(*vi),
            graph.name(*vj),
            graph.name(*vi),
            smaller.display(graph),
            larger.display(graph),
            smaller.cardinality(),
            larger.cardinality()
        ),
        Certificate::NoSuspensionStructure => "no valid suspension structure".into(),
    }
}

fn primes(graph: &WeightedGraph, assoc: bool) -> Result<Payload, Failure> {
    let (which, sets) = if assoc {
        ("associated", associated_primes(graph)?)
    } else {
        ("minimal", minimal_primes(graph)?)
    };
    let ctx = graph.context();
    let primes = sets
        .iter()
        .map(|set| {
            if set.is_empty() {
                "0".to_string()
            } else {
                let names: Vec<&str> = set.iter().map(|&v| ctx.name(v)).collect();
                format!("({})", names.join(", "))
            }
        })
        .collect();
    Ok(Payload::Primes {
        which: which.into(),
        primes,
    })
}

fn verification(report: &VerificationReport) -> Result<Payload, Failure> {
    let payload = Payload::Verification {
        graphs: report.graphs,
        passed: report.passed(),
        failed: report.failed(),
        checks: report
            .checks
            .iter()
            .map(|c| CheckSummary {
                name: c.name.into(),
                passed: c.passed,
                failed: c.failed,
                failures: c.failures.clone(),
            })
            .collect(),
    };
    if report.is_success() {
        Ok(payload)
    } else {
        Err(Failure::Oracle(
            format!("{} verification checks failed", report.failed()),
            Some(Box::new(payload)),
        ))
    }
}
