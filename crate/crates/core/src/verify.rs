//! Cross-validation of the cover route against the ideal-level route and
//! the structural identities relating weighted graphs to their ideals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_auto, is_trivially_weighted, CmStatus};
use crate::corpus::random_graph;
use crate::cover::{
    cover_decomposition, cover_ideal, enumerate_minimal_covers, is_minimal_cover,
    is_weighted_cover, m_height_and_dimension, minimal_vertex_covers, minimize_cover,
    unmixed_report, WeightedCover,
};
use crate::decomposition::split_decompose;
use crate::graph::{Weight, WeightedGraph};

/// Pass/fail tally for one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 5;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub graphs: usize,
    pub checks: Vec<CheckTally>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }

    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let index = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(CheckTally {
                    name,
                    passed: 0,
                    failed: 0,
                    failures: Vec::new(),
                });
                self.checks.len() - 1
            }
        };
        let tally = &mut self.checks[index];
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            if tally.failures.len() < KEPT_FAILURES {
                tally.failures.push(detail());
            }
        }
    }
}

/// Settings for a random corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomCorpus {
    pub count: usize,
    pub max_vertices: usize,
    pub max_weight: Weight,
    pub seed: u64,
}

pub fn verify_random(corpus: RandomCorpus) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(corpus.seed);
    let mut report = VerificationReport::default();
    for _ in 0..corpus.count {
        let graph = random_graph(&mut rng, corpus.max_vertices, corpus.max_weight);
        verify_graph_into(&graph, &mut report);
    }
    report
}

pub fn verify_graph(graph: &WeightedGraph) -> VerificationReport {
    let mut report = VerificationReport::default();
    verify_graph_into(graph, &mut report);
    report
}

/// Runs every check on `graph`, adding to `report`.
pub fn verify_graph_into(graph: &WeightedGraph, report: &mut VerificationReport) {
    report.graphs += 1;
    let json = || graph.to_json();
    let ideal = graph.weighted_edge_ideal();

    let covers = match enumerate_minimal_covers(graph) {
        Ok(c) => c,
        Err(e) => {
            report.record("enumeration", false, || format!("{e} on {}", json()));
            return;
        }
    };
    report.record("enumeration", true, String::new);
    let context = graph.context();

    let by_covers = cover_decomposition(graph).expect("enumeration succeeded");
    match split_decompose(&ideal) {
        Ok(by_split) => report.record(
            "decomposition-agreement",
            by_split.components() == by_covers.components(),
            || {
                let missing: Vec<String> = by_split
                    .components()
                    .iter()
                    .filter(|c| !by_covers.components().contains(c))
                    .map(ToString::to_string)
                    .collect();
                let extra: Vec<String> = by_covers
                    .components()
                    .iter()
                    .filter(|c| !by_split.components().contains(c))
                    .map(ToString::to_string)
                    .collect();
                format!(
                    "covers miss [{}] and add [{}] on {}",
                    missing.join(" "),
                    extra.join(" "),
                    json()
                )
            },
        ),
        Err(e) => report.record("decomposition-agreement", false, || {
            format!("split failed: {e} on {}", json())
        }),
    }
    report.record("intersection", by_covers.intersection() == ideal, || {
        format!(
            "intersection differs from the weighted edge ideal on {}",
            json()
        )
    });

    report.record(
        "radical",
        ideal.monomial_radical() == graph.edge_ideal(),
        || format!("radical differs from the edge ideal on {}", json()),
    );

    if is_trivially_weighted(graph) {
        if let Some(a) = graph.max_weight() {
            let bracket = graph.edge_ideal().bracket_power(a).expect("a >= 1");
            report.record("bracket-power", bracket == ideal, || {
                format!("I(G)^[{a}] differs on {}", json())
            });
        }
    }

    let candidates = candidate_covers(graph, &covers);
    for c2 in &candidates {
        let p2 = cover_ideal(c2, &context).to_ideal();
        for c1 in &candidates {
            let p1 = cover_ideal(c1, &context).to_ideal();
            let contained = p2.is_subset_of(&p1).expect("same context");
            report.record("cover-order", c2.is_below(c1) == contained, || {
                format!(
                    "order and containment disagree for {} and {} on {}",
                    c2.display(graph),
                    c1.display(graph),
                    json()
                )
            });
        }
        let is_cover = is_weighted_cover(graph, c2).expect("indices in range");
        let contained = ideal.is_subset_of(&p2).expect("same context");
        report.record("cover-predicate", is_cover == contained, || {
            format!(
                "predicate and containment disagree for {} on {}",
                c2.display(graph),
                json()
            )
        });

        if is_cover {
            let m = minimize_cover(graph, c2).expect("is a cover");
            let ok = is_minimal_cover(graph, &m).expect("indices in range")
                && m.is_below(c2)
                && covers.contains(&m);
            report.record("minimization", ok, || {
                format!(
                    "minimizing {} gave {} on {}",
                    c2.display(graph),
                    m.display(graph),
                    json()
                )
            });
        }
    }

    let vertex_covers = minimal_vertex_covers(graph).expect("enumeration succeeded");
    for vc in &vertex_covers {
        let lifted =
            WeightedCover::from_entries(vc.iter().map(|&v| (v, graph.incident_weights(v)[0])))
                .expect("distinct vertices");
        let m = minimize_cover(graph, &lifted).expect("vertex covers lift to weighted covers");
        report.record(
            "lifted-vertex-cover",
            m.vertices() == *vc && covers.contains(&m),
            || {
                format!(
                    "vertex cover {vc:?} minimized to {} on {}",
                    m.display(graph),
                    json()
                )
            },
        );
    }

    let weighted_report = unmixed_report(&covers);
    let mut sizes: Vec<usize> = vertex_covers.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() > 1 {
        report.record("mixed-stays-mixed", !weighted_report.unmixed, || {
            format!("mixed graph became unmixed under weights on {}", json())
        });
    }
    if is_trivially_weighted(graph) {
        report.record(
            "trivial-weight-unmixed",
            weighted_report.unmixed == (sizes.len() <= 1),
            || {
                format!(
                    "trivially weighted graph disagrees with its unweighted covers on {}",
                    json()
                )
            },
        );
    }

    let (height, dimension) = m_height_and_dimension(graph).expect("enumeration succeeded");
    report.record(
        "height",
        height == sizes.first().copied().unwrap_or(0) && height + dimension == graph.vertex_count(),
        || {
            format!(
                "m-height {height} disagrees with vertex covers on {}",
                json()
            )
        },
    );

    match classify_auto(graph) {
        Ok(verdict) => report.record(
            "classifier",
            verdict.unmixed == weighted_report.unmixed
                && (verdict.cohen_macaulay != CmStatus::Yes || verdict.unmixed),
            || {
                format!(
                    "{} classifier says unmixed={} on {}",
                    verdict.family,
                    verdict.unmixed,
                    json()
                )
            },
        ),
        Err(e) => report.record("classifier", false, || format!("{e} on {}", json())),
    }
}

/// The minimal covers together with their one-step neighbours: each weight
/// moved by one in either direction and each vertex dropped or added.
fn candidate_covers(graph: &WeightedGraph, minimal: &[WeightedCover]) -> Vec<WeightedCover> {
    let top = graph.max_weight().unwrap_or(1) + 1;
    let mut out: Vec<WeightedCover> = minimal.to_vec();
    for c in minimal {
        for (v, w) in c.entries() {
            let mut dropped = c.clone();
            dropped.remove(v);
            out.push(dropped);
            if w > 1 {
                let mut lower = c.clone();
                lower.insert(v, w - 1);
                out.push(lower);
            }
            if w < top {
                let mut higher = c.clone();
                higher.insert(v, w + 1);
                out.push(higher);
            }
        }
        for v in (0..graph.vertex_count()).filter(|&v| !c.contains_vertex(v)) {
            let mut added = c.clone();
            added.insert(v, 1);
            out.push(added);
        }
    }
    out.sort();
    out.dedup();
    out
}
