//! Canonical encoding of unrooted trees.
//!
//! The tree is rooted at its center (for a bicentral tree, at whichever
//! center yields the smaller code). Subtree classes are ranked level by
//! level, AHU style, and the rooted tree is serialised as a balanced
//! parenthesis word with children visited in rank order: `1` opens a vertex,
//! `0` closes it. Equal codes mean isomorphic trees and vice versa.

use std::fmt;

use thiserror::Error;

use crate::tree::{Tree, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("empty code")]
    Empty,
    #[error("invalid hex digit at offset {0}")]
    InvalidHex(usize),
    #[error("hex code must have an even number of digits")]
    OddLength,
    #[error("parenthesis word is unbalanced")]
    Unbalanced,
    #[error("non-zero data after the end of the code")]
    TrailingData,
    #[error("code describes more than {MAX_VERTICES} vertices")]
    TooLarge,
    #[error("well-formed, but not the canonical code of its tree")]
    NotCanonical,
}

/// Isomorphism token for unlabeled trees. Ordered lexicographically on the
/// parenthesis word; displayed as lowercase hex with the word packed
/// most-significant-bit first and zero padded to a byte boundary.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    bits: Vec<bool>,
}

impl CanonicalCode {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of vertices of the encoded tree.
    pub fn vertex_count(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.bits.len().div_ceil(4));
        for chunk in self.bits.chunks(8) {
            let mut byte = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                if b {
                    byte |= 0x80 >> i;
                }
            }
            out.push_str(&format!("{byte:02x}"));
        }
        out
    }

    /// Parses a hex string produced by [`CanonicalCode::to_hex`]. Anything
    /// that is not exactly the canonical code of some tree is rejected.
    pub fn from_hex(text: &str) -> Result<CanonicalCode, CodeError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(CodeError::Empty);
        }
        if !text.len().is_multiple_of(2) {
            return Err(CodeError::OddLength);
        }
        if text.len() / 2 > MAX_VERTICES / 4 + 1 {
            return Err(CodeError::TooLarge);
        }
        let mut bytes = Vec::with_capacity(text.len() / 2);
        let digits = text.as_bytes();
        for (i, pair) in digits.chunks(2).enumerate() {
            let hi = hex_value(pair[0]).ok_or(CodeError::InvalidHex(2 * i))?;
            let lo = hex_value(pair[1]).ok_or(CodeError::InvalidHex(2 * i + 1))?;
            bytes.push(hi << 4 | lo);
        }
        let all_bits: Vec<bool> = bytes
            .iter()
            .flat_map(|&b| (0..8).map(move |i| b & (0x80 >> i) != 0))
            .collect();

        if !all_bits[0] {
            return Err(CodeError::Unbalanced);
        }
        let mut depth = 0usize;
        let mut end = None;
        for (i, &b) in all_bits.iter().enumerate() {
            if b {
                depth += 1;
            } else {
                depth -= 1;
                if depth == 0 {
                    end = Some(i + 1);
                    break;
                }
            }
        }
        let end = end.ok_or(CodeError::Unbalanced)?;
        if end.div_ceil(8) != bytes.len() || all_bits[end..].iter().any(|&b| b) {
            return Err(CodeError::TrailingData);
        }
        let code = CanonicalCode {
            bits: all_bits[..end].to_vec(),
        };
        let tree = code.to_tree();
        if canonical_code(&tree) != code {
            return Err(CodeError::NotCanonical);
        }
        Ok(code)
    }

    /// Rebuilds a tree from the parenthesis word. Vertex 0 is the root and
    /// ids follow preorder.
    pub fn to_tree(&self) -> Tree {
        let mut edges = Vec::with_capacity(self.vertex_count().saturating_sub(1));
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0usize;
        for &b in &self.bits {
            if b {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        Tree::new(next, edges).expect("balanced parenthesis word encodes a tree")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

fn hex_value(c: u8) -> Option<u8> {
    match c {
        b'0'..=b'9' => Some(c - b'0'),
        b'a'..=b'f' => Some(c - b'a' + 10),
        b'A'..=b'F' => Some(c - b'A' + 10),
        _ => None,
    }
}

/// Canonical code of a vertex-labeled tree: isomorphisms must also preserve
/// labels. Opening tokens carry `label + 1`, closing tokens are `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledCode(pub Vec<u32>);

pub fn canonical_code(tree: &Tree) -> CanonicalCode {
    let tokens = center_tokens(tree, None);
    CanonicalCode {
        bits: tokens.into_iter().map(|t| t != 0).collect(),
    }
}

/// Panics if `labels.len()` differs from the vertex count.
pub fn labeled_code(tree: &Tree, labels: &[u32]) -> LabeledCode {
    assert_eq!(labels.len(), tree.vertex_count(), "one label per vertex");
    LabeledCode(center_tokens(tree, Some(labels)))
}

fn center_tokens(tree: &Tree, labels: Option<&[u32]>) -> Vec<u32> {
    tree.center()
        .into_iter()
        .map(|c| rooted_tokens(tree, c, labels))
        .min()
        .expect("every tree has a center")
}

fn rooted_tokens(tree: &Tree, root: usize, labels: Option<&[u32]>) -> Vec<u32> {
    let adj = tree.adjacency();
    let n = adj.len();
    let label = |v: usize| labels.map_or(0, |l| l[v]);

    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut levels: Vec<Vec<usize>> = vec![vec![root]];
    order.push(root);
    parent[root] = root;
    let mut head = 0;
    let mut depth = vec![0usize; n];
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                if levels.len() <= depth[w] {
                    levels.push(Vec::new());
                }
                levels[depth[w]].push(w);
                order.push(w);
            }
        }
    }

    let parent = &parent;
    let children = |v: usize| adj[v].iter().copied().filter(move |&w| parent[w] == v);

    // rank[v]: position of v's subtree class among the classes on its level
    let mut rank = vec![0u32; n];
    for level in levels.iter().rev() {
        let mut sigs: Vec<((u32, Vec<u32>), usize)> = level
            .iter()
            .map(|&v| {
                let mut kids: Vec<u32> = children(v).map(|w| rank[w]).collect();
                kids.sort_unstable();
                ((label(v), kids), v)
            })
            .collect();
        sigs.sort_unstable();
        let mut current = 0u32;
        for i in 0..sigs.len() {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                current += 1;
            }
            rank[sigs[i].1] = current;
        }
    }

    enum Step {
        Enter(usize),
        Exit,
    }
    let mut tokens = Vec::with_capacity(2 * n);
    let mut stack = vec![Step::Enter(root)];
    while let Some(step) = stack.pop() {
        match step {
            Step::Enter(v) => {
                tokens.push(label(v) + 1);
                stack.push(Step::Exit);
                let mut kids: Vec<usize> = children(v).collect();
                kids.sort_unstable_by_key(|&w| std::cmp::Reverse(rank[w]));
                stack.extend(kids.into_iter().map(Step::Enter));
            }
            Step::Exit => tokens.push(0),
        }
    }
    tokens
}
