//! Trees with a prescribed internal degree sequence: exhaustive enumeration,
//! the Albertson irregularity index and the sigma index, extremal search,
//! and closed-form values for small arrangements.
//!
//! ```
//! use treeirr::{enumerate_realizations, extremal_search, parse_sequence, IndexKind};
//!
//! let seq = parse_sequence("4,3,2").unwrap();
//! assert_eq!(enumerate_realizations(&seq).unwrap().len(), 3);
//! let irr = extremal_search(&seq, IndexKind::Albertson).unwrap();
//! assert_eq!((irr.min_value, irr.max_value), (14, 16));
//! ```

pub mod canonical;
pub mod degseq;
pub mod enumeration;
pub mod extremal;
pub mod indices;
pub mod tree;

pub use canonical::{canonical_code, labeled_code, CanonicalCode, CodeError, LabeledCode};
pub use degseq::{parse_sequence, InternalDegreeSequence, RealizationCounts, SequenceError};
pub use enumeration::{
    count_realizations, count_realizations_with, enumerate_realizations,
    enumerate_realizations_with, Arrangement, EnumerationError, EnumerationOptions, Realization,
    DEFAULT_MAX_K,
};
pub use extremal::{extremal_search, extremal_search_with, ExtremalResult};
pub use indices::{
    albertson_index, index_report, is_adjacency_regular, sigma_index, IndexKind, IndexReport,
};
pub use tree::{Tree, TreeError};
