//! Field-normalized citation indicators with exact rational arithmetic.
//!
//! Citation counts mean nothing without a baseline: 20 cites is stellar in
//! mathematics and invisible in cell biology. This crate scores sets of
//! publications against per-field expected values and keeps every result
//! an exact fraction, so equal indicators compare equal and rankings never
//! hinge on floating-point noise.
//!
//! Two indicator families are implemented, and they genuinely disagree:
//!
//! - [`cpp_fcsm`]: total citations over total expected citations (a ratio
//!   of averages), plus [`brute_force`], the same ratio scaled by set size.
//! - [`mncs`]: the mean of per-publication `cites / expected` scores (an
//!   average of ratios), plus [`tncs`], its size-scaled sum.
//!
//! The [`baselines`] module derives expected values from a corpus by
//! fractional counting, so publications in several fields at once are
//! handled without double counting, with a choice of arithmetic or
//! harmonic averaging across a publication's fields. The [`axioms`] module
//! makes the disagreement between the families mechanical: it checks
//! ranking-consistency properties and exhaustively searches bounded
//! publication grids for counterexamples. [`io`] and [`report`] load CSV
//! inputs and render text, CSV, and JSON reports; the `citnorm` binary
//! wraps them in a small CLI (`baselines`, `report`, `axioms`).
//!
//! ## Examples
//!
//! The `examples/` directory is the guided tour; each file is runnable on
//! its own and prints exact values.
//!
//! Scoring and the two families:
//!
//! - **`basic_indicators`** - all four indicators on two rival groups
//! - **`weighted_decomposition`** - the ratio of averages as a weighted
//!   average of scores
//! - **`rescaling_bias`** - a ranking reversal caused by a shorter
//!   citation window
//! - **`investment_scenarios`** - the families recommending opposite
//!   funding decisions
//!
//! ```bash
//! cargo run --example basic_indicators
//! cargo run --example weighted_decomposition
//! cargo run --example rescaling_bias
//! cargo run --example investment_scenarios
//! ```
//!
//! Baselines from a corpus:
//!
//! - **`overlapping_fields`** - fractional counting and the arithmetic
//!   versus harmonic expected values
//!
//! ```bash
//! cargo run --example overlapping_fields
//! ```
//!
//! Consistency axioms:
//!
//! - **`consistency_check`** - replaying one scenario through the checks
//! - **`counterexample_search`** - exhaustive search over a bounded grid
//! - **`custom_indicator`** - plugging a user-defined rule into the
//!   machinery
//!
//! ```bash
//! cargo run --example consistency_check
//! cargo run --example counterexample_search
//! cargo run --example custom_indicator
//! ```
//!
//! Files and reports:
//!
//! - **`csv_reports`** - the corpus, groups, and scored-set CSV formats
//!   rendered as text, CSV, and JSON
//!
//! ```bash
//! cargo run --example csv_reports
//! ```

pub mod axioms;
pub mod baselines;
pub mod error;
pub mod indicators;
pub mod io;
pub mod publication;
pub mod rational;
pub mod report;

pub use axioms::{
    check_homogeneous, mncs_recurrence_holds, ranking_preserved_average, ranking_preserved_total,
    search_counterexample, ConsistencyKind, IndicatorFn, SearchBounds, Witness,
};
pub use baselines::{
    attach_expected, derive_baselines, expected_arithmetic, expected_harmonic, field_baseline,
    membership_weight, AveragingMode, BaselineTable, Corpus, CorpusRecord, FieldId,
};
pub use error::{Error, Result};
pub use indicators::{brute_force, cpp_fcsm, cpp_fcsm_weights, mncs, tncs, IndicatorKind};
pub use io::{
    corpus_to_csv, load_corpus, load_groups, load_scored_set, parse_corpus, parse_groups,
    parse_scored_set,
};
pub use publication::{normalized_score, Publication, PublicationSet};
pub use rational::Rational;
pub use report::{report_corpus, report_sets, GroupDefinition, IndicatorReport, ReportRow};
