//! The posets `Pi_n(Com2)`: set partitions decorated with `Com2` monomials,
//! ordered by refinement and composition, with order-complex homology.

mod com2;
mod finite;
mod homology;

pub use com2::{
    build_poset, check_condition_star, cm_report, covers, interval_cohen_macaulay, less_than, segment_semimodularity, Com2Element,
    Com2Poset, IntervalCmReport, IntervalFailure, PosetCmReport, PosetElement, SegmentFailure, SemimodularityReport, StarReport, MAX_POSET_ARITY,
};
pub use finite::{FinitePoset, Violation};
pub use homology::{is_cohen_macaulay, order_complex_homology, ChainComplex, CmVerdict, DEFAULT_CHAIN_BUDGET};
