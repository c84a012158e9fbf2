//! Published index values and their comparison against enumeration.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;
use thiserror::Error;
use treeirr::{Arrangement, IndexKind, InternalDegreeSequence, Realization, SequenceError};

const PUBLISHED: &str = include_str!("../data/published_claims.toml");

#[derive(Debug, Error)]
pub enum ClaimsError {
    #[error("claims file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("claim {index}: {source}")]
    Sequence { index: usize, source: SequenceError },
    #[error("claim {index}: unknown index kind {kind:?}")]
    IndexKind { index: usize, kind: String },
    #[error("claim {index}: bad target {target:?}")]
    Target { index: usize, target: String },
}

/// What a claimed value refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Three internal vertices on a path with this degree in the middle.
    Middle(u32),
    /// Internal vertices on a path in this order (either direction).
    Path(Vec<u32>),
    /// Star skeleton with this center degree.
    Star(u32),
    Min,
    Max,
}

impl FromStr for Target {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let s = s.trim();
        match s {
            "min" => return Ok(Target::Min),
            "max" => return Ok(Target::Max),
            _ => {}
        }
        let (kind, rest) = s.split_once('=').ok_or(())?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| ());
        match kind.trim() {
            "middle" => Ok(Target::Middle(num(rest)?)),
            "star" => Ok(Target::Star(num(rest)?)),
            "path" => {
                let order = rest.split('-').map(num).collect::<Result<Vec<u32>, ()>>()?;
                if order.is_empty() {
                    return Err(());
                }
                Ok(Target::Path(order))
            }
            _ => Err(()),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Middle(d) => write!(f, "middle={d}"),
            Target::Star(d) => write!(f, "star={d}"),
            Target::Path(order) => {
                let parts: Vec<String> = order.iter().map(u32::to_string).collect();
                write!(f, "path={}", parts.join("-"))
            }
            Target::Min => f.write_str("min"),
            Target::Max => f.write_str("max"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub table: String,
    pub sequence: InternalDegreeSequence,
    pub index: IndexKind,
    pub target: Target,
    pub value: u64,
    pub source: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClaim {
    table: String,
    sequence: Vec<u32>,
    index: String,
    target: String,
    value: u64,
    source: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClaimFile {
    #[serde(default)]
    claim: Vec<RawClaim>,
}

/// Parses a claims file in the `published_claims.toml` layout.
pub fn parse_claims(text: &str) -> Result<Vec<Claim>, ClaimsError> {
    let file: ClaimFile = toml::from_str(text)?;
    file.claim
        .into_iter()
        .enumerate()
        .map(|(index, raw)| {
            let sequence = InternalDegreeSequence::new(raw.sequence)
                .map_err(|source| ClaimsError::Sequence { index, source })?;
            let kind = raw
                .index
                .parse::<IndexKind>()
                .map_err(|_| ClaimsError::IndexKind {
                    index,
                    kind: raw.index.clone(),
                })?;
            let target = raw
                .target
                .parse::<Target>()
                .map_err(|_| ClaimsError::Target {
                    index,
                    target: raw.target.clone(),
                })?;
            Ok(Claim {
                table: raw.table,
                sequence,
                index: kind,
                target,
                value: raw.value,
                source: raw.source,
            })
        })
        .collect()
}

/// The embedded claims file, parsed once.
pub fn published_claims() -> &'static [Claim] {
    static CLAIMS: OnceLock<Vec<Claim>> = OnceLock::new();
    CLAIMS.get_or_init(|| parse_claims(PUBLISHED).expect("embedded claims file is valid"))
}

pub fn claims_for(seq: &InternalDegreeSequence) -> impl Iterator<Item = &'static Claim> + '_ {
    published_claims()
        .iter()
        .filter(move |c| &c.sequence == seq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Match,
    Mismatch,
    /// No realization fits the claim's target.
    Unresolved,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::Unresolved => "UNRESOLVED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub claim: Claim,
    pub computed: Option<u64>,
    pub status: Status,
}

/// Recomputes the claimed quantity from `realizations`, which must be the
/// full enumeration of the claim's sequence.
pub fn compare(claim: &Claim, realizations: &[Realization]) -> Comparison {
    let values = realizations.iter().map(|r| claim.index.evaluate(r.tree()));
    let pick = |pred: &dyn Fn(&Arrangement) -> bool| {
        realizations
            .iter()
            .find(|r| pred(&r.arrangement()))
            .map(|r| claim.index.evaluate(r.tree()))
    };
    let computed = match &claim.target {
        Target::Min => values.min(),
        Target::Max => values.max(),
        Target::Middle(m) => {
            pick(&|a| matches!(a, Arrangement::Path(o) if o.len() == 3 && o[1] == *m))
        }
        Target::Path(order) => pick(&|a| a.is_path(order)),
        Target::Star(c) => pick(&|a| matches!(a, Arrangement::Star { center, .. } if center == c)),
    };
    let status = match computed {
        None => Status::Unresolved,
        Some(v) if v == claim.value => Status::Match,
        Some(_) => Status::Mismatch,
    };
    Comparison {
        claim: claim.clone(),
        computed,
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_file_parses() {
        let claims = published_claims();
        assert_eq!(claims.len(), 18);
        assert!(claims
            .iter()
            .any(|c| c.target == Target::Path(vec![8, 4, 2, 5]) && c.value == 470));
    }

    #[test]
    fn target_round_trip() {
        for t in ["middle=3", "path=8-4-2-5", "star=8", "min", "max"] {
            assert_eq!(t.parse::<Target>().unwrap().to_string(), t);
        }
        for bad in ["", "middle", "middle=x", "path=", "path=1--2", "ring=3"] {
            assert!(bad.parse::<Target>().is_err(), "{bad}");
        }
    }

    #[test]
    fn bad_files() {
        assert!(matches!(
            parse_claims("claim = 3"),
            Err(ClaimsError::Toml(_))
        ));
        let bad_seq = "[[claim]]\ntable=\"t\"\nsequence=[1]\nindex=\"irr\"\ntarget=\"min\"\nvalue=1\nsource=\"s\"\n";
        assert!(matches!(
            parse_claims(bad_seq),
            Err(ClaimsError::Sequence { index: 0, .. })
        ));
        let bad_kind = bad_seq
            .replace("[1]", "[3]")
            .replace("\"irr\"", "\"mostar\"");
        assert!(matches!(
            parse_claims(&bad_kind),
            Err(ClaimsError::IndexKind { .. })
        ));
        assert_eq!(parse_claims("").unwrap(), vec![]);
    }
}
