//! The four performance indicators, plus the weight decomposition that
//! exposes how the ratio-of-averages indicator reweights publications.
//!
//! Two averaging orders exist for normalized citation impact. CPP/FCSm
//! divides total citations by total expected citations (a ratio of
//! averages); MNCS averages each publication's own `c/e` ratio (an average
//! of ratios). Multiplying either by the set size gives their "total"
//! variants: the brute force indicator and TNCS respectively. The four
//! differ in subtle, consequential ways that the axioms module probes.

use crate::error::{Error, Result};
use crate::publication::PublicationSet;
use crate::rational::Rational;

/// Selector for one of the four built-in indicators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndicatorKind {
    CppFcsm,
    Mncs,
    Tncs,
    BruteForce,
}

impl IndicatorKind {
    pub const ALL: [IndicatorKind; 4] = [
        IndicatorKind::CppFcsm,
        IndicatorKind::Mncs,
        IndicatorKind::Tncs,
        IndicatorKind::BruteForce,
    ];

    /// Machine-friendly name, as used in CLI flags and CSV output.
    #[must_use]
    pub fn token(self) -> &'static str {
        match self {
            IndicatorKind::CppFcsm => "cpp-fcsm",
            IndicatorKind::Mncs => "mncs",
            IndicatorKind::Tncs => "tncs",
            IndicatorKind::BruteForce => "brute-force",
        }
    }

    /// Human-friendly name, as used in report headings.
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            IndicatorKind::CppFcsm => "CPP/FCSm",
            IndicatorKind::Mncs => "MNCS",
            IndicatorKind::Tncs => "TNCS",
            IndicatorKind::BruteForce => "brute force",
        }
    }

    #[must_use]
    pub fn from_token(token: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.token() == token)
    }

    /// Evaluates this indicator on a set.
    #[must_use]
    pub fn evaluate(self, set: &PublicationSet) -> Rational {
        match self {
            IndicatorKind::CppFcsm => cpp_fcsm(set),
            IndicatorKind::Mncs => mncs(set),
            IndicatorKind::Tncs => tncs(set),
            IndicatorKind::BruteForce => brute_force(set),
        }
    }
}

fn total_cites(set: &PublicationSet) -> Rational {
    set.iter()
        .map(|p| Rational::from_integer(p.cites()))
        .sum()
}

fn total_expected(set: &PublicationSet) -> Rational {
    set.iter().map(|p| p.expected()).sum()
}

fn score_sum(set: &PublicationSet) -> Rational {
    set.iter().map(|p| p.score()).sum()
}

fn set_size(set: &PublicationSet) -> Rational {
    Rational::from_integer(set.len() as u64)
}

/// Ratio of averages: `(Σ c_i) / (Σ e_i)`.
///
/// When both totals are zero (every publication is an uncited entry in an
/// uncited field) the per-publication `0/0 = 1` convention lifts to the
/// aggregate: the set counts as exactly average.
#[must_use]
pub fn cpp_fcsm(set: &PublicationSet) -> Rational {
    let cites = total_cites(set);
    match cites.checked_div(&total_expected(set)) {
        Some(value) => value,
        // Σe = 0 forces every e to 0, hence every c to 0.
        None => Rational::one(),
    }
}

/// Average of ratios: `(1/n) Σ c_i/e_i`, with `0/0 = 1` per publication.
#[must_use]
pub fn mncs(set: &PublicationSet) -> Rational {
    &score_sum(set) / &set_size(set)
}

/// Total normalized citation score: `Σ c_i/e_i = mncs(S) · n`.
#[must_use]
pub fn tncs(set: &PublicationSet) -> Rational {
    score_sum(set)
}

/// The size-scaled ratio of averages: `cpp_fcsm(S) · n`.
#[must_use]
pub fn brute_force(set: &PublicationSet) -> Rational {
    cpp_fcsm(set) * set_size(set)
}

/// The weights that express CPP/FCSm as a weighted average of the
/// per-publication scores: `w_i = e_i / ((Σ e_j) / n)`, so that
/// `(1/n) Σ w_i · (c_i/e_i) = cpp_fcsm(S)` exactly and `Σ w_i = n`.
///
/// Publications in high-expectation fields get weight above one, those in
/// low-expectation fields below one; this built-in field bias is what
/// distinguishes the ratio of averages from the average of ratios.
pub fn cpp_fcsm_weights(set: &PublicationSet) -> Result<Vec<Rational>> {
    let total = total_expected(set);
    if total.is_zero() {
        return Err(Error::ZeroExpectedTotal);
    }
    let mean = &total / &set_size(set);
    Ok(set.iter().map(|p| p.expected() / &mean).collect())
}
