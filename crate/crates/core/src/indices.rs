//! Albertson irregularity and sigma indices.
//!
//! Both are edge sums over endpoint degree differences: `|d(u) - d(v)|` for
//! the Albertson index and `(d(u) - d(v))²` for sigma. Accumulation is in
//! `u64`; with at most 2²⁰ vertices no term or sum can overflow.

use std::fmt;
use std::str::FromStr;

use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexKind {
    Albertson,
    Sigma,
}

impl IndexKind {
    pub const ALL: [IndexKind; 2] = [IndexKind::Albertson, IndexKind::Sigma];

    pub fn evaluate(self, tree: &Tree) -> u64 {
        match self {
            IndexKind::Albertson => albertson_index(tree),
            IndexKind::Sigma => sigma_index(tree),
        }
    }

    /// Short name used in reports: `irr` or `sigma`.
    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Albertson => "irr",
            IndexKind::Sigma => "sigma",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "irr" | "albertson" => Ok(IndexKind::Albertson),
            "sigma" => Ok(IndexKind::Sigma),
            other => Err(format!("unknown index {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeContribution {
    pub u: usize,
    pub v: usize,
    pub abs_diff: u64,
    pub sq_diff: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub albertson: u64,
    pub sigma: u64,
    /// One entry per edge, in the tree's sorted edge order.
    pub per_edge: Vec<EdgeContribution>,
}

fn edge_diffs(tree: &Tree) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
    let deg = tree.degrees();
    tree.edges()
        .iter()
        .map(move |&(u, v)| (u, v, deg[u].abs_diff(deg[v]) as u64))
}

pub fn albertson_index(tree: &Tree) -> u64 {
    edge_diffs(tree).map(|(_, _, d)| d).sum()
}

pub fn sigma_index(tree: &Tree) -> u64 {
    edge_diffs(tree).map(|(_, _, d)| d * d).sum()
}

/// True when every edge joins two vertices of equal degree.
pub fn is_adjacency_regular(tree: &Tree) -> bool {
    edge_diffs(tree).all(|(_, _, d)| d == 0)
}

pub fn index_report(tree: &Tree) -> IndexReport {
    let per_edge: Vec<EdgeContribution> = edge_diffs(tree)
        .map(|(u, v, d)| EdgeContribution {
            u,
            v,
            abs_diff: d,
            sq_diff: d * d,
        })
        .collect();
    IndexReport {
        albertson: per_edge.iter().map(|e| e.abs_diff).sum(),
        sigma: per_edge.iter().map(|e| e.sq_diff).sum(),
        per_edge,
    }
}
