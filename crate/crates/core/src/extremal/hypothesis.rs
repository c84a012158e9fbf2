//! Checks the claim that, for three internal degrees `d1 >= d2 >= d3`, the
//! spread of irr over all realizations is exactly `2(d2 - d3)`.

use std::fmt;

use thiserror::Error;

use super::extremal_search;
use crate::degseq::InternalDegreeSequence;
use crate::enumeration::EnumerationError;
use crate::indices::IndexKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisError {
    #[error("the gap check needs exactly 3 internal degrees, got {0}")]
    WrongArity(usize),
    #[error("sweep needs max degree >= 2, got {0}")]
    MaxDegreeTooSmall(u32),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub sequence: InternalDegreeSequence,
    pub predicted_gap: u64,
    pub irr_min: u64,
    pub irr_max: u64,
    pub oracle_gap: u64,
    pub verdict: Verdict,
}

pub fn check_hypothesis(seq: &InternalDegreeSequence) -> Result<ConjectureReport, HypothesisError> {
    let &[_, d2, d3] = seq.degrees() else {
        return Err(HypothesisError::WrongArity(seq.len()));
    };
    let predicted_gap = 2 * (d2 - d3) as u64;
    let irr = extremal_search(seq, IndexKind::Albertson)?;
    let oracle_gap = irr.max_value - irr.min_value;
    Ok(ConjectureReport {
        sequence: seq.clone(),
        predicted_gap,
        irr_min: irr.min_value,
        irr_max: irr.max_value,
        oracle_gap,
        verdict: if predicted_gap == oracle_gap {
            Verdict::Confirmed
        } else {
            Verdict::Refuted
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub max_degree: u32,
    /// Refutations first, then confirmations; each group in sequence order
    /// (largest degrees first).
    pub reports: Vec<ConjectureReport>,
}

impl SweepReport {
    pub fn confirmed(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.verdict == Verdict::Confirmed)
            .count()
    }

    pub fn refuted(&self) -> usize {
        self.reports.len() - self.confirmed()
    }

    pub fn refutations(&self) -> impl Iterator<Item = &ConjectureReport> {
        self.reports
            .iter()
            .filter(|r| r.verdict == Verdict::Refuted)
    }
}

/// Every sequence `2 <= d3 <= d2 <= d1 <= max_degree`.
pub fn sweep_hypothesis(max_degree: u32) -> Result<SweepReport, HypothesisError> {
    if max_degree < 2 {
        return Err(HypothesisError::MaxDegreeTooSmall(max_degree));
    }
    let mut reports = Vec::new();
    for d1 in (2..=max_degree).rev() {
        for d2 in (2..=d1).rev() {
            for d3 in (2..=d2).rev() {
                let seq = InternalDegreeSequence::new(vec![d1, d2, d3])
                    .expect("entries in 2..=max_degree are valid");
                reports.push(check_hypothesis(&seq)?);
            }
        }
    }
    reports.sort_by_key(|r| r.verdict == Verdict::Confirmed);
    Ok(SweepReport {
        max_degree,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::parse_sequence;

    #[test]
    fn worked_examples() {
        let r = check_hypothesis(&parse_sequence("4,3,2").unwrap()).unwrap();
        assert_eq!(
            (r.predicted_gap, r.oracle_gap, r.verdict),
            (2, 2, Verdict::Confirmed)
        );
        let r = check_hypothesis(&parse_sequence("5,3,3").unwrap()).unwrap();
        assert_eq!((r.predicted_gap, r.oracle_gap), (0, 0));
        let r = check_hypothesis(&parse_sequence("7,6,2").unwrap()).unwrap();
        assert_eq!((r.predicted_gap, r.oracle_gap), (8, 8));
    }

    #[test]
    fn arity() {
        let err = check_hypothesis(&parse_sequence("8,5,4,2").unwrap()).unwrap_err();
        assert_eq!(err, HypothesisError::WrongArity(4));
        assert_eq!(
            sweep_hypothesis(1).unwrap_err(),
            HypothesisError::MaxDegreeTooSmall(1)
        );
    }

    #[test]
    fn small_sweeps() {
        let s = sweep_hypothesis(2).unwrap();
        assert_eq!((s.reports.len(), s.confirmed()), (1, 1));
        let s = sweep_hypothesis(4).unwrap();
        assert_eq!((s.reports.len(), s.confirmed(), s.refuted()), (10, 10, 0));
    }
}
