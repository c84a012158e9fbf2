//! Undirected trees on dense vertex ids.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Upper bound on vertex count. Keeps every index sum inside `u64`.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("vertex id {id} out of range for {vertex_count} vertices")]
    InvalidVertexId { id: usize, vertex_count: usize },
    #[error("duplicate edge {0}--{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
}

impl TreeError {
    /// Stable variant name used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            TreeError::NotATree(_) => "NotATree",
            TreeError::InvalidVertexId { .. } => "InvalidVertexId",
            TreeError::DuplicateEdge(..) => "DuplicateEdge",
            TreeError::TooLarge(_) => "TooLarge",
        }
    }
}

/// A validated undirected tree. Edges are stored as `(min, max)` pairs in
/// sorted order, so two trees with the same labeled edge set compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates `edges` as a spanning tree on `0..vertex_count`.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Tree, TreeError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(TreeError::NotATree("a tree needs at least one vertex"));
        }
        if vertex_count > MAX_VERTICES {
            return Err(TreeError::TooLarge(vertex_count));
        }
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(vertex_count - 1);
        for (u, v) in edges {
            for id in [u, v] {
                if id >= vertex_count {
                    return Err(TreeError::InvalidVertexId { id, vertex_count });
                }
            }
            if u == v {
                return Err(TreeError::NotATree("self-loop"));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(TreeError::DuplicateEdge(e.0, e.1));
            }
            normalized.push(e);
            if normalized.len() >= vertex_count {
                return Err(TreeError::NotATree(
                    "edge count must be vertex count minus one",
                ));
            }
        }
        if normalized.len() != vertex_count - 1 {
            return Err(TreeError::NotATree(
                "edge count must be vertex count minus one",
            ));
        }
        normalized.sort_unstable();

        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        // n - 1 edges plus connectivity rules out cycles.
        let mut visited = vec![false; vertex_count];
        let mut stack = vec![0];
        visited[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !visited[w] {
                    visited[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != vertex_count {
            return Err(TreeError::NotATree("graph is disconnected"));
        }
        Ok(Tree {
            edges: normalized,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> Result<&[usize], TreeError> {
        self.check_id(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn degree(&self, v: usize) -> Result<u32, TreeError> {
        self.check_id(v)?;
        Ok(self.adjacency[v].len() as u32)
    }

    /// Degree of every vertex, indexed by id.
    pub fn degrees(&self) -> Vec<u32> {
        self.adjacency.iter().map(|a| a.len() as u32).collect()
    }

    /// All vertex degrees, non-increasing.
    pub fn degree_multiset(&self) -> Vec<u32> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Degrees of the non-leaf vertices, non-increasing.
    pub fn internal_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.degrees().into_iter().filter(|&x| x > 1).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn leaf_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.len() == 1).count()
    }

    /// Returns a copy with every vertex `v` renamed to `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..vertex_count`.
    pub fn relabeled(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        Tree::new(
            self.vertex_count(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabeling by a permutation preserves tree-ness")
    }

    /// The one or two central vertices, found by peeling leaves.
    pub fn center(&self) -> Vec<usize> {
        let n = self.vertex_count();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut deg: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in &self.adjacency[v] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    fn check_id(&self, v: usize) -> Result<(), TreeError> {
        if v >= self.vertex_count() {
            Err(TreeError::InvalidVertexId {
                id: v,
                vertex_count: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}
