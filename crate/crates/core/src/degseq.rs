//! Internal degree sequences: the degrees of a tree's non-leaf vertices.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::MAX_VERTICES;

/// Largest accepted entry.
pub const MAX_DEGREE: u32 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence has no entries")]
    EmptySequence,
    #[error("entry {0} is not positive")]
    NonPositiveEntry(i64),
    #[error("entry {0} is below 2; a degree-1 vertex is a leaf, not internal")]
    EntryBelowTwo(u32),
    #[error("entry {0} exceeds the supported maximum degree {MAX_DEGREE}")]
    EntryTooLarge(u64),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("a realization would need {0} vertices, above the supported maximum {MAX_VERTICES}")]
    TooManyVertices(u64),
}

impl SequenceError {
    /// Stable variant name used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            SequenceError::EmptySequence => "EmptySequence",
            SequenceError::NonPositiveEntry(_) => "NonPositiveEntry",
            SequenceError::EntryBelowTwo(_) => "EntryBelowTwo",
            SequenceError::EntryTooLarge(_) => "EntryTooLarge",
            SequenceError::MalformedInput(_) => "MalformedInput",
            SequenceError::TooManyVertices(_) => "TooManyVertices",
        }
    }
}

/// Non-increasing list of internal vertex degrees, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InternalDegreeSequence(Vec<u32>);

/// Vertex and leaf totals shared by every realization of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizationCounts {
    pub total_vertices: u64,
    pub leaf_count: u64,
}

impl InternalDegreeSequence {
    /// Sorts `degrees` and validates it. Input order is not significant.
    pub fn new(mut degrees: Vec<u32>) -> Result<Self, SequenceError> {
        if degrees.is_empty() {
            return Err(SequenceError::EmptySequence);
        }
        for &d in &degrees {
            if d == 0 {
                return Err(SequenceError::NonPositiveEntry(0));
            }
            if d < 2 {
                return Err(SequenceError::EntryBelowTwo(d));
            }
            if d > MAX_DEGREE {
                return Err(SequenceError::EntryTooLarge(d as u64));
            }
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let seq = InternalDegreeSequence(degrees);
        let n = seq.realization_counts().total_vertices;
        if n > MAX_VERTICES as u64 {
            return Err(SequenceError::TooManyVertices(n));
        }
        Ok(seq)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    /// Number of internal vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Leaf and vertex totals from the handshake lemma: with `k` internal
    /// vertices and `L` leaves, `Σd + L = 2(k + L - 1)`.
    pub fn realization_counts(&self) -> RealizationCounts {
        let sum: u64 = self.0.iter().map(|&d| d as u64).sum();
        let k = self.0.len() as u64;
        RealizationCounts {
            total_vertices: sum - k + 2,
            leaf_count: sum - 2 * k + 2,
        }
    }
}

impl FromStr for InternalDegreeSequence {
    type Err = SequenceError;

    /// Comma-separated integers; whitespace around entries is ignored.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.trim().is_empty() {
            return Err(SequenceError::MalformedInput("empty input".into()));
        }
        let mut degrees = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(SequenceError::MalformedInput("empty entry".into()));
            }
            let value: i64 = part.parse().map_err(|_| {
                if part
                    .trim_start_matches(['-', '+'])
                    .chars()
                    .all(|c| c.is_ascii_digit())
                {
                    SequenceError::MalformedInput(format!("entry {part:?} is out of range"))
                } else {
                    SequenceError::MalformedInput(format!("entry {part:?} is not an integer"))
                }
            })?;
            if value <= 0 {
                return Err(SequenceError::NonPositiveEntry(value));
            }
            if value > MAX_DEGREE as i64 {
                return Err(SequenceError::EntryTooLarge(value as u64));
            }
            degrees.push(value as u32);
        }
        InternalDegreeSequence::new(degrees)
    }
}

/// Parses the CLI `--seq` format, e.g. `"8, 5, 4, 2"`.
pub fn parse_sequence(text: &str) -> Result<InternalDegreeSequence, SequenceError> {
    text.parse()
}

impl fmt::Display for InternalDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}
