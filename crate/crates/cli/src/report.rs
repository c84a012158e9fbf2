//! JSON document shapes and the verifier that recomputes every number in an
//! emitted enumeration document.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use treeirr::{
    canonical_code, index_report, EnumerationError, InternalDegreeSequence, Realization,
    SequenceError, Tree, TreeError,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub abs_diff: u64,
    pub sq_diff: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationJson {
    pub id: usize,
    pub canonical_code: String,
    pub arrangement: String,
    /// Degrees of internal vertices `0..k`.
    pub placement: Vec<u32>,
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub irr: u64,
    pub sigma: u64,
    pub per_edge: Vec<EdgeJson>,
}

impl RealizationJson {
    pub fn new(id: usize, r: &Realization) -> Self {
        let report = index_report(r.tree());
        RealizationJson {
            id,
            canonical_code: r.code().to_hex(),
            arrangement: r.arrangement().to_string(),
            placement: r.placement().to_vec(),
            vertex_count: r.tree().vertex_count(),
            edges: r.tree().edges().iter().map(|&(u, v)| [u, v]).collect(),
            irr: report.albertson,
            sigma: report.sigma,
            per_edge: report
                .per_edge
                .iter()
                .map(|e| EdgeJson {
                    u: e.u,
                    v: e.v,
                    abs_diff: e.abs_diff,
                    sq_diff: e.sq_diff,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationJson {
    pub sequence: Vec<u32>,
    pub vertex_count: u64,
    pub leaf_count: u64,
    pub realizations: Vec<RealizationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeJson {
    pub index: String,
    pub min: u64,
    pub max: u64,
    pub min_witnesses: Vec<RealizationJson>,
    pub max_witnesses: Vec<RealizationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonJson {
    pub table: String,
    pub sequence: Vec<u32>,
    pub index: String,
    pub target: String,
    pub claimed: u64,
    pub computed: Option<u64>,
    pub status: String,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalJson {
    pub sequence: Vec<u32>,
    pub realization_count: usize,
    pub extremes: Vec<ExtremeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparisons: Option<Vec<ComparisonJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureJson {
    pub sequence: Vec<u32>,
    pub predicted_gap: u64,
    pub irr_min: u64,
    pub irr_max: u64,
    pub oracle_gap: u64,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJson {
    pub max_degree: u32,
    pub sequences: usize,
    pub confirmed: usize,
    pub refuted: usize,
    pub reports: Vec<ConjectureJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCheckJson {
    pub formula: String,
    pub value: u64,
    pub enumeration: u64,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub title: String,
    pub rows: Vec<ComparisonJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperTablesJson {
    pub tables: Vec<TableJson>,
    pub closed_forms: Vec<FormulaCheckJson>,
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("sequence: {0}")]
    Sequence(#[from] SequenceError),
    #[error("realization {id}: {source}")]
    Tree { id: usize, source: TreeError },
    #[error("realization {id}: {source}")]
    Skeleton { id: usize, source: EnumerationError },
    #[error("realization {id}: field {field} does not match the recomputed value")]
    Mismatch { id: usize, field: &'static str },
    #[error("document field {0} does not match the recomputed value")]
    Document(&'static str),
}

/// Rebuilds one realization from its edge list and placement and checks
/// every derived field.
pub fn verify_realization(
    seq: &InternalDegreeSequence,
    r: &RealizationJson,
) -> Result<(), VerifyError> {
    let id = r.id;
    let mismatch = |field| VerifyError::Mismatch { id, field };
    let tree = Tree::new(r.vertex_count, r.edges.iter().map(|e| (e[0], e[1])))
        .map_err(|source| VerifyError::Tree { id, source })?;
    if tree.internal_degrees() != seq.degrees() {
        return Err(mismatch("edges"));
    }
    if canonical_code(&tree).to_hex() != r.canonical_code {
        return Err(mismatch("canonical_code"));
    }
    let report = index_report(&tree);
    if report.albertson != r.irr {
        return Err(mismatch("irr"));
    }
    if report.sigma != r.sigma {
        return Err(mismatch("sigma"));
    }
    let per_edge: Vec<EdgeJson> = report
        .per_edge
        .iter()
        .map(|e| EdgeJson {
            u: e.u,
            v: e.v,
            abs_diff: e.abs_diff,
            sq_diff: e.sq_diff,
        })
        .collect();
    if per_edge != r.per_edge {
        return Err(mismatch("per_edge"));
    }
    let k = r.placement.len();
    if k != seq.len()
        || r.placement
            .iter()
            .enumerate()
            .any(|(v, &d)| tree.degree(v) != Ok(d))
    {
        return Err(mismatch("placement"));
    }
    let skeleton = Tree::new(
        k,
        tree.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| u < k && v < k),
    )
    .map_err(|source| VerifyError::Tree { id, source })?;
    let rebuilt = Realization::from_skeleton(skeleton, r.placement.clone())
        .map_err(|source| VerifyError::Skeleton { id, source })?;
    if rebuilt.tree() != &tree {
        return Err(mismatch("placement"));
    }
    if rebuilt.arrangement().to_string() != r.arrangement {
        return Err(mismatch("arrangement"));
    }
    Ok(())
}

/// Parses an `enumerate --format json` document and recomputes it.
/// Returns the number of realizations checked.
pub fn verify_enumeration_json(text: &str) -> Result<usize, VerifyError> {
    let doc: EnumerationJson = serde_json::from_str(text)?;
    let seq = InternalDegreeSequence::new(doc.sequence.clone())?;
    if seq.degrees() != doc.sequence.as_slice() {
        return Err(VerifyError::Document("sequence"));
    }
    let counts = seq.realization_counts();
    if counts.total_vertices != doc.vertex_count {
        return Err(VerifyError::Document("vertex_count"));
    }
    if counts.leaf_count != doc.leaf_count {
        return Err(VerifyError::Document("leaf_count"));
    }
    for (i, r) in doc.realizations.iter().enumerate() {
        if r.id != i {
            return Err(VerifyError::Document("id"));
        }
        verify_realization(&seq, r)?;
    }
    let sorted = doc.realizations.windows(2).all(|w| {
        let a = treeirr::CanonicalCode::from_hex(&w[0].canonical_code);
        let b = treeirr::CanonicalCode::from_hex(&w[1].canonical_code);
        matches!((a, b), (Ok(a), Ok(b)) if a < b)
    });
    if !sorted {
        return Err(VerifyError::Document("order"));
    }
    Ok(doc.realizations.len())
}

/// Parses an `extremal --format json` document and recomputes every witness.
pub fn verify_extremal_json(text: &str) -> Result<usize, VerifyError> {
    let doc: ExtremalJson = serde_json::from_str(text)?;
    let seq = InternalDegreeSequence::new(doc.sequence.clone())?;
    let mut checked = 0;
    for e in &doc.extremes {
        let kind: treeirr::IndexKind = e
            .index
            .parse()
            .map_err(|_| VerifyError::Document("index"))?;
        for (value, ws) in [(e.min, &e.min_witnesses), (e.max, &e.max_witnesses)] {
            if ws.is_empty() {
                return Err(VerifyError::Document("witnesses"));
            }
            for w in ws {
                verify_realization(&seq, w)?;
                let got = match kind {
                    treeirr::IndexKind::Albertson => w.irr,
                    treeirr::IndexKind::Sigma => w.sigma,
                };
                if got != value {
                    return Err(VerifyError::Mismatch {
                        id: w.id,
                        field: "extreme",
                    });
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
