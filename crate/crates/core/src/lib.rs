//! Exact computation over finite set families: largest `t`-stars, the
//! threshold `c(r,s,t)` and star ratios, generators for the standard classes,
//! and exhaustive maximum-product search over cross-`t`-intersecting
//! subfamilies.

pub mod bitset;
pub mod bounds;
pub mod combin;
pub mod count;
pub mod error;
pub mod family;
pub mod format;
pub mod generators;
pub mod label;
pub mod solver;

pub use bounds::{
    c_threshold, closed_form_ratio, refined_transversal_bound, star_ratio, threshold_holds,
    transversal_bound, BoundCheck, BoundOutcome, ClosedFormRatio, Ratio, RatioKind, Side,
    ThresholdVerdict,
};
pub use count::{binomial, stirling, Count};
pub use error::{Error, Result};
pub use family::{
    build_family, common_core, is_t_transversal, largest_stars, star_number, subfamily_where,
    t_intersects, FamilyMeta, GroundSet, MemberSet, Predicate, SetFamily, StarReport,
};
pub use format::{family_from_str, family_to_string, load_family, save_family, LoadedFamily};
pub use generators::{
    gen_compositions, gen_example1, gen_level, gen_multisets, gen_partitions, gen_permutations,
    gen_powerset, gen_random, gen_sequences, ClassParams, GenLimits,
};
pub use label::StructuredLabel;
pub use solver::{
    build_instance, chi_probe, classify_properties, max_product_pair, max_product_tuple,
    verify_main_theorem, BicliqueInstance, Corpus, CorpusEntry, PropertyReport, SearchLimits,
    SolveResult, VerificationReport, Witness,
};
