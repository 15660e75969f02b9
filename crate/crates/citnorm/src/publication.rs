//! Publications as (citations, expected citations) pairs, and non-empty
//! multisets of them.
//!
//! A publication is fully described by two numbers: `c`, the citations it
//! actually received, and `e`, the citations a publication in its field(s)
//! is expected to receive. Everything downstream (indicators, consistency
//! checks) operates on these pairs alone; how `e` was derived is the
//! baselines module's business.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The ratio `c / e` with the convention that `0 / 0 = 1`: a publication in
/// a field where nothing is cited counts as exactly average.
///
/// `c > 0` with `e = 0` is rejected. A field average can only be zero when
/// every publication in the field is uncited, so a cited publication with a
/// zero expected value signals corrupt input, not a score of infinity.
pub fn normalized_score(cites: u64, expected: &Rational) -> Result<Rational> {
    if expected.is_zero() {
        if cites > 0 {
            return Err(Error::InvalidPublication { cites });
        }
        return Ok(Rational::one());
    }
    Ok(&Rational::from_integer(cites) / expected)
}

/// One publication: actual citations paired with expected citations.
///
/// The constructor enforces the same rule as [`normalized_score`], so every
/// `Publication` in circulation has a well-defined score.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Publication {
    cites: u64,
    expected: Rational,
}

impl Publication {
    pub fn new(cites: u64, expected: Rational) -> Result<Self> {
        if expected.is_zero() && cites > 0 {
            return Err(Error::InvalidPublication { cites });
        }
        Ok(Self { cites, expected })
    }

    #[must_use]
    pub fn cites(&self) -> u64 {
        self.cites
    }

    #[must_use]
    pub fn expected(&self) -> &Rational {
        &self.expected
    }

    /// This publication's normalized citation score, `c / e` (or 1 for
    /// `0 / 0`). Infallible because the constructor screened the inputs.
    #[must_use]
    pub fn score(&self) -> Rational {
        normalized_score(self.cites, &self.expected)
            .expect("constructor enforces the score precondition")
    }
}

impl fmt::Display for Publication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.cites, self.expected)
    }
}

impl fmt::Debug for Publication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A non-empty multiset of publications.
///
/// Duplicates are meaningful: two publications with identical citation
/// counts and expected values are still two publications, and every
/// indicator weighs them twice. Emptiness is ruled out at construction so
/// indicator code never has to re-check it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicationSet {
    elements: Vec<Publication>,
}

impl PublicationSet {
    /// Wraps a list of publications. Fails on an empty list.
    pub fn new(elements: Vec<Publication>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(Self { elements })
    }

    #[must_use]
    pub fn singleton(publication: Publication) -> Self {
        Self {
            elements: vec![publication],
        }
    }

    /// Multiset union: multiplicities add, so `|S ∪ T| = |S| + |T|` always,
    /// even when the two sides share equal pairs.
    #[must_use]
    pub fn union(&self, other: &Self) -> Self {
        let mut elements = self.elements.clone();
        elements.extend(other.elements.iter().cloned());
        Self { elements }
    }

    /// The union of this set with a single extra publication. This is the
    /// operation the consistency definitions revolve around.
    #[must_use]
    pub fn with(&self, publication: Publication) -> Self {
        let mut elements = self.elements.clone();
        elements.push(publication);
        Self { elements }
    }

    /// Number of publications, counting multiplicity. Never zero.
    #[allow(clippy::len_without_is_empty)] // non-empty by construction
    #[must_use]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Publication> {
        self.elements.iter()
    }

    /// Equality as multisets: same elements with the same multiplicities,
    /// regardless of the order they were assembled in.
    #[must_use]
    pub fn multiset_eq(&self, other: &Self) -> bool {
        if self.elements.len() != other.elements.len() {
            return false;
        }
        let mut left = self.elements.clone();
        let mut right = other.elements.clone();
        left.sort_unstable();
        right.sort_unstable();
        left == right
    }
}

impl fmt::Display for PublicationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, publication) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{publication}")?;
        }
        write!(f, "}}")
    }
}

impl<'a> IntoIterator for &'a PublicationSet {
    type Item = &'a Publication;
    type IntoIter = std::slice::Iter<'a, Publication>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cites: u64, num: u64, den: u64) -> Publication {
        Publication::new(cites, Rational::new(num, den).unwrap()).unwrap()
    }

    #[test]
    fn score_examples() {
        assert_eq!(
            normalized_score(0, &Rational::zero()).unwrap(),
            Rational::one()
        );
        assert_eq!(
            normalized_score(3, &Rational::one()).unwrap(),
            Rational::from_integer(3)
        );
        assert_eq!(
            normalized_score(5, &Rational::new(21, 5).unwrap()).unwrap(),
            Rational::new(25, 21).unwrap()
        );
        assert!(matches!(
            normalized_score(2, &Rational::zero()),
            Err(Error::InvalidPublication { cites: 2 })
        ));
    }

    #[test]
    fn cited_publication_needs_positive_expected() {
        assert!(Publication::new(2, Rational::zero()).is_err());
        assert!(Publication::new(0, Rational::zero()).is_ok());
        assert_eq!(p(0, 0, 1).score(), Rational::one());
    }

    #[test]
    fn sets_are_never_empty() {
        assert!(matches!(PublicationSet::new(vec![]), Err(Error::EmptySet)));
        assert_eq!(PublicationSet::singleton(p(3, 1, 1)).len(), 1);
    }

    #[test]
    fn union_adds_multiplicities() {
        let s1 = PublicationSet::singleton(p(3, 1, 1));
        let added = s1.union(&PublicationSet::singleton(p(0, 2, 1)));
        assert_eq!(added.len(), 2);

        let doubled = s1.union(&s1);
        assert_eq!(doubled.len(), 2);

        let dup = PublicationSet::singleton(p(1, 1, 1)).with(p(1, 1, 1));
        assert_eq!(dup.len(), 2);
        assert_eq!(dup.iter().filter(|q| **q == p(1, 1, 1)).count(), 2);
    }

    #[test]
    fn multiset_equality_ignores_order() {
        let a = PublicationSet::new(vec![p(3, 1, 1), p(0, 2, 1)]).unwrap();
        let b = PublicationSet::new(vec![p(0, 2, 1), p(3, 1, 1)]).unwrap();
        assert!(a.multiset_eq(&b));
        assert!(!a.multiset_eq(&PublicationSet::singleton(p(3, 1, 1))));
        // Multiplicity matters: {x, x} vs {x, y}.
        let xx = PublicationSet::new(vec![p(3, 1, 1), p(3, 1, 1)]).unwrap();
        assert!(!xx.multiset_eq(&a));
    }

    #[test]
    fn display_matches_pair_notation() {
        assert_eq!(p(5, 21, 5).to_string(), "(5, 21/5)");
        let s = PublicationSet::new(vec![p(3, 1, 1), p(0, 2, 1)]).unwrap();
        assert_eq!(s.to_string(), "{(3, 1), (0, 2)}");
    }

    fn arb_publication() -> impl Strategy<Value = Publication> {
        (0u64..50, 1u64..20, 1u64..6)
            .prop_map(|(c, n, d)| p(c, n, d))
    }

    fn arb_set() -> impl Strategy<Value = PublicationSet> {
        proptest::collection::vec(arb_publication(), 1..8)
            .prop_map(|v| PublicationSet::new(v).unwrap())
    }

    proptest! {
        // Scaling both counts by the same factor leaves the score alone.
        #[test]
        fn score_is_scale_invariant(c in 0u64..100, num in 0u64..20, den in 1u64..8, k in 1u64..50) {
            let e = Rational::new(num, den).unwrap();
            if num == 0 && c > 0 {
                return Ok(());
            }
            let base = normalized_score(c, &e).unwrap();
            let scaled_e = &Rational::from_integer(k) * &e;
            let scaled = normalized_score(k * c, &scaled_e).unwrap();
            prop_assert_eq!(base, scaled);
        }

        #[test]
        fn union_is_commutative_and_associative(a in arb_set(), b in arb_set(), c in arb_set()) {
            prop_assert!(a.union(&b).multiset_eq(&b.union(&a)));
            prop_assert!(a.union(&b).union(&c).multiset_eq(&a.union(&b.union(&c))));
            prop_assert_eq!(a.union(&b).len(), a.len() + b.len());
        }
    }
}
