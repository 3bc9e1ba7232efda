//! Rendering of analysis results: a versioned JSON document and plain-text
//! reports for Coxeter analyses, small-cancellation checks, curvature
//! summaries, and the sampling lab's CSV table.
//!
//! The JSON layer uses its own serde structs rather than deriving on the
//! domain types, so the wire schema can stay fixed while the library types
//! evolve.  Exact rationals are rendered as strings (`"-1/40"`), never as
//! floats.

use crate::analyze::{CoherenceReport, CoherenceVerdict};
use crate::classify::FinitenessVerdict;
use crate::complex::{AngledTwoComplex, CurvatureReport, FaceCurvatureCheck};
use crate::coxeter::{BondOrder, CoxeterSystem, GeneratorSubset};
use crate::rational::Rational;
use crate::smallcancel::{Certificate, PieceReport, Presentation, RateTable};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Version stamp of the JSON document layout.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// The system a report was computed from: rank plus the finite bond orders,
/// exactly the content of a `.cox` file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InputSummary {
    pub rank: usize,
    pub finite_orders: Vec<(usize, usize, u32)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TwoDimSummary {
    pub holds: bool,
    /// The lexicographically first bad triple, with its exact reciprocal sum.
    pub violation: Option<TripleSummary>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TripleSummary {
    pub triple: (usize, usize, usize),
    pub sum: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FinitenessSummary {
    pub finite: bool,
    /// Catalog types of the irreducible components, present when finite.
    pub components: Option<Vec<String>>,
    /// Generators of a component matching no finite type, present when
    /// infinite.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoherenceSummary {
    /// `"coherent"`, `"incoherent"`, or `"not_applicable"`.
    pub verdict: String,
    pub witness: Option<Vec<usize>>,
    pub witness_chi: Option<String>,
    pub reason: Option<String>,
    /// The L2-Betti numbers `[b0, b1, b2]` as exact strings, present for
    /// coherent infinite groups.
    pub l2_betti: Option<[String; 3]>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NpscSummary {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

/// Curvature data of an angled 2-complex.  Angles appear as the exact
/// rational coefficient of pi (`"-4"` means `-4 pi`).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CurvatureSummary {
    pub face_curvature_pi: Vec<String>,
    pub vertex_curvature_pi: Vec<String>,
    pub total_pi: String,
    pub chi: i64,
}

/// Summarizes a curvature report for JSON embedding.
pub fn curvature_summary(report: &CurvatureReport) -> CurvatureSummary {
    CurvatureSummary {
        face_curvature_pi: report
            .face_curvature
            .iter()
            .map(|a| a.coefficient().to_string())
            .collect(),
        vertex_curvature_pi: report
            .vertex_curvature
            .iter()
            .map(|a| a.coefficient().to_string())
            .collect(),
        total_pi: report.total.coefficient().to_string(),
        chi: report.complex_chi,
    }
}

/// The complete JSON document produced for one analyzed system.  Field order
/// here is the key order on the wire.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub input: InputSummary,
    pub two_dimensional: TwoDimSummary,
    pub chi: String,
    pub finiteness: FinitenessSummary,
    pub coherence: CoherenceSummary,
    pub npsc: NpscSummary,
    /// Present when a curvature computation was attached to the analysis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureSummary>,
    /// Wall-clock analysis time; omitted unless explicitly requested, so that
    /// default output is byte-stable across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

fn subset_indices(subset: &GeneratorSubset) -> Vec<usize> {
    subset.members().to_vec()
}

fn input_summary(sys: &CoxeterSystem) -> InputSummary {
    let mut finite_orders = Vec::new();
    for i in 0..sys.rank() {
        for j in (i + 1)..sys.rank() {
            if let BondOrder::Finite(m) = sys.order(i, j) {
                finite_orders.push((i, j, m));
            }
        }
    }
    InputSummary {
        rank: sys.rank(),
        finite_orders,
    }
}

/// Assembles the JSON document for one system and its coherence report.
pub fn build_report(
    sys: &CoxeterSystem,
    report: &CoherenceReport,
    timing_ms: Option<u128>,
) -> ReportDocument {
    let two_dimensional = TwoDimSummary {
        holds: report.two_dimensional.two_dimensional,
        violation: report
            .two_dimensional
            .violation
            .as_ref()
            .map(|v| TripleSummary {
                triple: v.triple,
                sum: v.sum.to_string(),
            }),
    };
    let finiteness = match &report.finiteness {
        FinitenessVerdict::Finite(components) => FinitenessSummary {
            finite: true,
            components: Some(components.iter().map(|c| c.to_string()).collect()),
            witness: None,
        },
        FinitenessVerdict::Infinite { witness } => FinitenessSummary {
            finite: false,
            components: None,
            witness: Some(subset_indices(witness)),
        },
    };
    let coherence = match &report.verdict {
        CoherenceVerdict::Coherent => CoherenceSummary {
            verdict: "coherent".to_owned(),
            witness: None,
            witness_chi: None,
            reason: None,
            l2_betti: report
                .l2_profile
                .as_ref()
                .map(|(b0, b1, b2)| [b0.to_string(), b1.to_string(), b2.to_string()]),
            note: report.equivalences_note.to_owned(),
        },
        CoherenceVerdict::Incoherent {
            witness,
            witness_chi,
        } => CoherenceSummary {
            verdict: "incoherent".to_owned(),
            witness: Some(subset_indices(witness)),
            witness_chi: Some(witness_chi.to_string()),
            reason: None,
            l2_betti: None,
            note: report.equivalences_note.to_owned(),
        },
        CoherenceVerdict::NotApplicable { reason } => CoherenceSummary {
            verdict: "not_applicable".to_owned(),
            witness: None,
            witness_chi: None,
            reason: Some(reason.clone()),
            l2_betti: None,
            note: report.equivalences_note.to_owned(),
        },
    };
    ReportDocument {
        schema_version: REPORT_SCHEMA_VERSION,
        input: input_summary(sys),
        two_dimensional,
        chi: report.chi.to_string(),
        finiteness,
        coherence,
        npsc: NpscSummary {
            holds: report.npsc.holds,
            witness: report.npsc.witness.as_ref().map(subset_indices),
        },
        curvature: None,
        timing_ms,
    }
}

impl ReportDocument {
    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report documents always serialize");
        text.push('\n');
        text
    }
}

/// Plain-text form of a coherence report.
pub fn render_coherence_text(sys: &CoxeterSystem, report: &CoherenceReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rank:            {}", sys.rank());
    match &report.two_dimensional.violation {
        None => {
            let _ = writeln!(out, "two-dimensional: yes");
        }
        Some(v) => {
            let (i, j, k) = v.triple;
            let _ = writeln!(
                out,
                "two-dimensional: no (triple ({i}, {j}, {k}) has reciprocal sum {} > 1)",
                v.sum
            );
        }
    }
    let _ = writeln!(out, "chi:             {}", report.chi);
    match &report.finiteness {
        FinitenessVerdict::Finite(components) => {
            let names: Vec<String> = components.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "group:           finite ({})", names.join(" x "));
        }
        FinitenessVerdict::Infinite { witness } => {
            let _ = writeln!(out, "group:           infinite (witness {witness})");
        }
    }
    match &report.verdict {
        CoherenceVerdict::Coherent => {
            let _ = writeln!(out, "coherence:       coherent");
        }
        CoherenceVerdict::Incoherent {
            witness,
            witness_chi,
        } => {
            let _ = writeln!(out, "coherence:       incoherent");
            let _ = writeln!(out, "witness:         {witness} with chi = {witness_chi}");
        }
        CoherenceVerdict::NotApplicable { reason } => {
            let _ = writeln!(out, "coherence:       not applicable ({reason})");
        }
    }
    if let Some((b0, b1, b2)) = &report.l2_profile {
        let _ = writeln!(out, "l2-betti:        ({b0}, {b1}, {b2})");
    }
    match &report.npsc.witness {
        None => {
            let _ = writeln!(out, "graph criterion: holds");
        }
        Some(witness) => {
            let _ = writeln!(out, "graph criterion: fails (witness {witness})");
        }
    }
    let _ = writeln!(out, "note:            {}", report.equivalences_note);
    out
}

/// Plain-text form of a small-cancellation check: per-relator piece
/// statistics, the metric verdicts, and the certificate outcome.
pub fn render_small_cancellation_text(
    p: &Presentation,
    pieces: &PieceReport,
    certificate: &Certificate,
    lambda: Option<&Rational>,
) -> String {
    let mut out = String::new();
    let total_length: usize = p.relators().iter().map(|r| r.len()).sum();
    let _ = writeln!(out, "generators: {}", p.generators());
    let _ = writeln!(
        out,
        "relators:   {} (total length {total_length})",
        p.relators().len()
    );
    for (index, (relator, stats)) in p.relators().iter().zip(&pieces.relators).enumerate() {
        let _ = write!(
            out,
            "relator {index}: {relator} (length {}), max piece {}, ratio {}",
            relator.len(),
            stats.max_piece_length,
            stats.ratio
        );
        match &stats.witness {
            Some((a, b)) if a == b => {
                let _ = writeln!(out, " (closure collision at {a})");
            }
            Some((a, b)) => {
                let _ = writeln!(out, " (witness pair {a}, {b})");
            }
            None => {
                let _ = writeln!(out);
            }
        }
    }
    let _ = writeln!(
        out,
        "C'(1/6):    {}",
        if pieces.c_prime_sixth {
            "holds"
        } else {
            "fails"
        }
    );
    if let Some(lambda) = lambda {
        let holds = pieces.relators.iter().all(|r| r.ratio < *lambda);
        let _ = writeln!(
            out,
            "C'({lambda}): {}",
            if holds { "holds" } else { "fails" }
        );
    }
    match certificate {
        Certificate::Certified { chi, .. } => {
            let _ = writeln!(
                out,
                "certificate: incoherent (aspherical, chi = {chi} > 0, so the second \
                 L2-Betti number is positive)"
            );
        }
        Certificate::Inconclusive { reason } => {
            let _ = writeln!(out, "certificate: inconclusive ({reason})");
        }
    }
    out
}

/// Plain-text form of a curvature report.
pub fn render_curvature_text(
    complex: &AngledTwoComplex,
    report: &CurvatureReport,
    faces: &FaceCurvatureCheck,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "complex: {} vertices, {} edges, {} faces, chi = {}",
        complex.vertex_count(),
        complex.edge_count(),
        complex.face_count(),
        report.complex_chi
    );
    for (face, curvature) in report.face_curvature.iter().enumerate() {
        let _ = writeln!(out, "face {face}: curvature {curvature}");
    }
    for (vertex, curvature) in report.vertex_curvature.iter().enumerate() {
        let _ = writeln!(out, "vertex {vertex}: curvature {curvature}");
    }
    let _ = writeln!(
        out,
        "total curvature: {} (equals 2 pi chi, exactly)",
        report.total
    );
    match faces.witness {
        None => {
            let _ = writeln!(out, "nonpositive face curvature: yes");
        }
        Some(face) => {
            let _ = writeln!(
                out,
                "nonpositive face curvature: no (face {face} is positively curved)"
            );
        }
    }
    out
}

/// Renders a sampling-lab table as CSV.
///
/// Columns: length, trial count, the three success rates, and the Wilson 95%
/// interval for the certified rate.  Rates are fixed to six decimals so equal
/// counts always produce byte-identical output.
pub fn render_rate_table_csv(table: &RateTable) -> String {
    let mut out = String::from("l,trials,c16_rate,no_pp_rate,certified_rate,wilson_lo,wilson_hi\n");
    for row in &table.rows {
        let (lo, hi) = row.certified_interval();
        let _ = writeln!(
            out,
            "{},{},{:.6},{:.6},{:.6},{:.6},{:.6}",
            row.length,
            row.trials,
            row.c16_rate(),
            row.no_pp_rate(),
            row.certified_rate(),
            lo,
            hi
        );
    }
    out
}
