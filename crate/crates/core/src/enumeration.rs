//! Exhaustive, isomorphism-free enumeration of the trees realizing an
//! internal degree sequence.
//!
//! Work proceeds skeleton first. Every unlabeled tree on `k` nodes is
//! generated by leaf growth, each multiset-distinct placement of the degrees
//! onto its nodes is tried (a node's skeleton degree may not exceed its
//! placed degree), the remaining degree is filled with pendant leaves, and
//! the results are deduplicated by canonical code.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::canonical::{canonical_code, labeled_code, CanonicalCode};
use crate::degseq::InternalDegreeSequence;
use crate::tree::{Tree, TreeError, MAX_VERTICES};

/// Default cap on the number of internal vertices.
pub const DEFAULT_MAX_K: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("sequence has {k} internal vertices; the limit is {max_k} (raise it with --max-k)")]
    GuardrailExceeded { k: usize, max_k: usize },
    #[error("placement has {placed} degrees for a skeleton on {nodes} nodes")]
    PlacementLength { placed: usize, nodes: usize },
    #[error(
        "skeleton node {node} has {skeleton_degree} internal neighbours but placed degree {placed}"
    )]
    CapExceeded {
        node: usize,
        skeleton_degree: u32,
        placed: u32,
    },
    #[error("placed degree {0} is below 2")]
    DegreeBelowTwo(u32),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

impl EnumerationError {
    pub fn code(&self) -> &'static str {
        match self {
            EnumerationError::GuardrailExceeded { .. } => "GuardrailExceeded",
            EnumerationError::PlacementLength { .. } => "PlacementLength",
            EnumerationError::CapExceeded { .. } => "CapExceeded",
            EnumerationError::DegreeBelowTwo(_) => "DegreeBelowTwo",
            EnumerationError::Tree(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_k: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_k: DEFAULT_MAX_K,
        }
    }
}

/// A tree realizing a degree sequence, together with its skeleton.
///
/// Internal vertices keep the skeleton's ids `0..k`; leaves are numbered
/// `k..n`, grouped by the internal vertex they hang from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    tree: Tree,
    skeleton: Tree,
    placement: Vec<u32>,
    code: CanonicalCode,
}

impl Realization {
    /// Hangs `placement[v] - skeleton_degree(v)` leaves on each skeleton
    /// node `v`.
    pub fn from_skeleton(skeleton: Tree, placement: Vec<u32>) -> Result<Self, EnumerationError> {
        let k = skeleton.vertex_count();
        if placement.len() != k {
            return Err(EnumerationError::PlacementLength {
                placed: placement.len(),
                nodes: k,
            });
        }
        let skel_deg = skeleton.degrees();
        for (node, (&placed, &sd)) in placement.iter().zip(&skel_deg).enumerate() {
            if placed < 2 {
                return Err(EnumerationError::DegreeBelowTwo(placed));
            }
            if sd > placed {
                return Err(EnumerationError::CapExceeded {
                    node,
                    skeleton_degree: sd,
                    placed,
                });
            }
        }
        let leaves: usize = placement
            .iter()
            .zip(&skel_deg)
            .map(|(&p, &s)| (p - s) as usize)
            .sum();
        if k + leaves > MAX_VERTICES {
            return Err(TreeError::TooLarge(k + leaves).into());
        }
        let mut edges = skeleton.edges().to_vec();
        let mut next = k;
        for (v, (&p, &s)) in placement.iter().zip(&skel_deg).enumerate() {
            for _ in s..p {
                edges.push((v, next));
                next += 1;
            }
        }
        let tree = Tree::new(k + leaves, edges)?;
        let code = canonical_code(&tree);
        Ok(Realization {
            tree,
            skeleton,
            placement,
            code,
        })
    }

    /// The caterpillar whose internal vertices form a path in `order`.
    pub fn caterpillar(order: &[u32]) -> Result<Self, EnumerationError> {
        let k = order.len();
        let skeleton = Tree::new(k, (1..k).map(|v| (v - 1, v)))?;
        Realization::from_skeleton(skeleton, order.to_vec())
    }

    /// Internal vertex of degree `center` adjacent to every other internal
    /// vertex.
    pub fn star(center: u32, arms: &[u32]) -> Result<Self, EnumerationError> {
        let skeleton = Tree::new(arms.len() + 1, (1..=arms.len()).map(|v| (0, v)))?;
        let mut placement = vec![center];
        placement.extend_from_slice(arms);
        Realization::from_skeleton(skeleton, placement)
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn skeleton(&self) -> &Tree {
        &self.skeleton
    }

    /// Degree placed on each skeleton node (tree vertex ids `0..k`).
    pub fn placement(&self) -> &[u32] {
        &self.placement
    }

    pub fn code(&self) -> &CanonicalCode {
        &self.code
    }

    pub fn arrangement(&self) -> Arrangement {
        Arrangement::of(&self.skeleton, &self.placement)
    }
}

/// Human-readable shape of a skeleton with its degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arrangement {
    /// Internal vertices in path order, oriented so the sequence is
    /// lexicographically no smaller than its reverse.
    Path(Vec<u32>),
    /// One internal vertex adjacent to all others (`k ≥ 4`); arms
    /// non-increasing.
    Star { center: u32, arms: Vec<u32> },
    /// Any other skeleton: degree pairs of its edges, sorted.
    Other(Vec<(u32, u32)>),
}

impl Arrangement {
    fn of(skeleton: &Tree, placement: &[u32]) -> Arrangement {
        let k = skeleton.vertex_count();
        let deg = skeleton.degrees();
        if deg.iter().all(|&d| d <= 2) {
            let start = (0..k).find(|&v| deg[v] <= 1).unwrap_or(0);
            let mut order = vec![placement[start]];
            let (mut prev, mut cur) = (usize::MAX, start);
            while let Some(&next) = skeleton.adjacency()[cur].iter().find(|&&w| w != prev) {
                order.push(placement[next]);
                prev = cur;
                cur = next;
            }
            let rev: Vec<u32> = order.iter().rev().copied().collect();
            return Arrangement::Path(order.max(rev));
        }
        if let Some(c) = (0..k).find(|&v| deg[v] as usize == k - 1) {
            let mut arms: Vec<u32> = (0..k).filter(|&v| v != c).map(|v| placement[v]).collect();
            arms.sort_unstable_by(|a, b| b.cmp(a));
            return Arrangement::Star {
                center: placement[c],
                arms,
            };
        }
        let mut pairs: Vec<(u32, u32)> = skeleton
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (placement[u], placement[v]);
                (a.max(b), a.min(b))
            })
            .collect();
        pairs.sort_unstable_by(|a, b| b.cmp(a));
        Arrangement::Other(pairs)
    }

    /// Whether this is the path arrangement with `order`, read either way.
    pub fn is_path(&self, order: &[u32]) -> bool {
        match self {
            Arrangement::Path(p) => p.iter().eq(order) || p.iter().eq(order.iter().rev()),
            _ => false,
        }
    }
}

impl fmt::Display for Arrangement {
    /// Comma-free so it can sit in a CSV cell unquoted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str("-")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        }
        match self {
            Arrangement::Path(order) => {
                f.write_str("path:")?;
                join(f, order)
            }
            Arrangement::Star { center, arms } => {
                write!(f, "star:{center}/")?;
                join(f, arms)
            }
            Arrangement::Other(pairs) => {
                f.write_str("tree:")?;
                for (i, (a, b)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{a}-{b}")?;
                }
                Ok(())
            }
        }
    }
}

/// One representative of every unlabeled tree on `k` nodes, ordered by
/// canonical code.
pub fn free_trees(k: usize) -> Vec<Tree> {
    if k == 0 {
        return Vec::new();
    }
    let mut current: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    let single = Tree::new(1, []).expect("single vertex");
    current.insert(canonical_code(&single), single);
    for n in 1..k {
        let mut grown = BTreeMap::new();
        for t in current.values() {
            for v in 0..n {
                let edges = t.edges().iter().copied().chain(std::iter::once((v, n)));
                let g = Tree::new(n + 1, edges).expect("adding a leaf keeps a tree");
                grown.entry(canonical_code(&g)).or_insert(g);
            }
        }
        current = grown;
    }
    current.into_values().collect()
}

fn check_guardrail(
    seq: &InternalDegreeSequence,
    opts: &EnumerationOptions,
) -> Result<(), EnumerationError> {
    if seq.len() > opts.max_k {
        return Err(EnumerationError::GuardrailExceeded {
            k: seq.len(),
            max_k: opts.max_k,
        });
    }
    Ok(())
}

/// Calls `visit` with every placement of the multiset onto `skel_deg.len()`
/// nodes that respects the skeleton-degree caps. Placements that differ only
/// by swapping equal degrees are produced once.
fn for_each_placement(
    skel_deg: &[u32],
    seq: &InternalDegreeSequence,
    visit: &mut dyn FnMut(&[u32]),
) {
    let mut values: Vec<(u32, usize)> = Vec::new();
    for &d in seq.degrees() {
        match values.last_mut() {
            Some((v, c)) if *v == d => *c += 1,
            _ => values.push((d, 1)),
        }
    }
    fn go(
        node: usize,
        skel_deg: &[u32],
        values: &mut [(u32, usize)],
        current: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if node == skel_deg.len() {
            visit(current);
            return;
        }
        for i in 0..values.len() {
            let (value, count) = values[i];
            if count == 0 || value < skel_deg[node] {
                continue;
            }
            values[i].1 -= 1;
            current.push(value);
            go(node + 1, skel_deg, values, current, visit);
            current.pop();
            values[i].1 += 1;
        }
    }
    go(
        0,
        skel_deg,
        &mut values,
        &mut Vec::with_capacity(skel_deg.len()),
        visit,
    );
}

pub fn enumerate_realizations(
    seq: &InternalDegreeSequence,
) -> Result<Vec<Realization>, EnumerationError> {
    enumerate_realizations_with(seq, &EnumerationOptions::default())
}

/// One realization per isomorphism class, sorted by canonical code.
pub fn enumerate_realizations_with(
    seq: &InternalDegreeSequence,
    opts: &EnumerationOptions,
) -> Result<Vec<Realization>, EnumerationError> {
    check_guardrail(seq, opts)?;
    let mut found: BTreeMap<CanonicalCode, Realization> = BTreeMap::new();
    let mut failure = None;
    for skeleton in free_trees(seq.len()) {
        let skel_deg = skeleton.degrees();
        for_each_placement(&skel_deg, seq, &mut |placement| {
            if failure.is_some() {
                return;
            }
            match Realization::from_skeleton(skeleton.clone(), placement.to_vec()) {
                Ok(r) => {
                    found.entry(r.code.clone()).or_insert(r);
                }
                Err(e) => failure = Some(e),
            }
        });
    }
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(found.into_values().collect())
}

pub fn count_realizations(seq: &InternalDegreeSequence) -> Result<usize, EnumerationError> {
    count_realizations_with(seq, &EnumerationOptions::default())
}

/// Counts classes by the degree-labeled code of the skeleton alone, without
/// building any full tree.
pub fn count_realizations_with(
    seq: &InternalDegreeSequence,
    opts: &EnumerationOptions,
) -> Result<usize, EnumerationError> {
    check_guardrail(seq, opts)?;
    let mut seen = BTreeSet::new();
    for skeleton in free_trees(seq.len()) {
        let skel_deg = skeleton.degrees();
        for_each_placement(&skel_deg, seq, &mut |placement| {
            seen.insert(labeled_code(&skeleton, placement));
        });
    }
    Ok(seen.len())
}
