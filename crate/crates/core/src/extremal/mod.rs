//! Minimum and maximum index values over all realizations of a sequence,
//! plus closed forms for small arrangements and the max/min gap check.

pub mod formulas;
pub mod hypothesis;

use crate::degseq::InternalDegreeSequence;
use crate::enumeration::{
    enumerate_realizations_with, EnumerationError, EnumerationOptions, Realization,
};
use crate::indices::IndexKind;

pub use formulas::{
    caterpillar_irr, caterpillar_sigma, k3_arrangement_irr, k3_arrangement_sigma, k3_irr_max,
    k3_irr_max_product_form, k3_irr_min, k4_star_irr, k4_star_sigma, FormulaError, Middle,
};
pub use hypothesis::{
    check_hypothesis, sweep_hypothesis, ConjectureReport, HypothesisError, SweepReport, Verdict,
};

/// Extremes of one index with every optimal realization, witnesses in
/// canonical-code order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub kind: IndexKind,
    pub min_value: u64,
    pub max_value: u64,
    pub min_witnesses: Vec<Realization>,
    pub max_witnesses: Vec<Realization>,
}

impl ExtremalResult {
    /// `None` when `realizations` is empty.
    pub fn over(realizations: &[Realization], kind: IndexKind) -> Option<ExtremalResult> {
        let values: Vec<u64> = realizations
            .iter()
            .map(|r| kind.evaluate(r.tree()))
            .collect();
        let min_value = *values.iter().min()?;
        let max_value = *values.iter().max()?;
        let pick = |target: u64| -> Vec<Realization> {
            let mut w: Vec<Realization> = realizations
                .iter()
                .zip(&values)
                .filter(|(_, &v)| v == target)
                .map(|(r, _)| r.clone())
                .collect();
            w.sort_by(|a, b| a.code().cmp(b.code()));
            w
        };
        Some(ExtremalResult {
            kind,
            min_value,
            max_value,
            min_witnesses: pick(min_value),
            max_witnesses: pick(max_value),
        })
    }
}

pub fn extremal_search(
    seq: &InternalDegreeSequence,
    kind: IndexKind,
) -> Result<ExtremalResult, EnumerationError> {
    extremal_search_with(seq, kind, &EnumerationOptions::default())
}

pub fn extremal_search_with(
    seq: &InternalDegreeSequence,
    kind: IndexKind,
    opts: &EnumerationOptions,
) -> Result<ExtremalResult, EnumerationError> {
    let realizations = enumerate_realizations_with(seq, opts)?;
    Ok(ExtremalResult::over(&realizations, kind)
        .expect("every valid sequence has a path realization"))
}
