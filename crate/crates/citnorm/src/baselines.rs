//! Field baselines by fractional counting, and expected values per record.
//!
//! Records arrive classified into one or more fields. A field's baseline is
//! its mean citations per publication, where a record belonging to `k`
//! fields contributes weight `1/k` to each (fractional counting), so every
//! record spends exactly one unit of weight across the corpus. A record's
//! expected value is then the average of its fields' baselines, taken
//! either arithmetically or harmonically; the harmonic choice is what makes
//! the whole-corpus mean normalized score come out to exactly one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::publication::{Publication, PublicationSet};
use crate::rational::Rational;

/// A field classification label. Opaque, non-empty, compared exactly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldId(String);

impl FieldId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::EmptyFieldId);
        }
        Ok(Self(label))
    }

    #[must_use]
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for FieldId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// One classified publication: an id, a citation count, and the fields it
/// belongs to (at least one, no repeats).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusRecord {
    id: String,
    cites: u64,
    fields: BTreeSet<FieldId>,
}

impl CorpusRecord {
    /// Listing the same field twice is rejected rather than deduplicated:
    /// it would silently change the record's fractional weights.
    pub fn new(
        id: impl Into<String>,
        cites: u64,
        fields: impl IntoIterator<Item = FieldId>,
    ) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::EmptyId);
        }
        let mut set = BTreeSet::new();
        for field in fields {
            if !set.insert(field.clone()) {
                return Err(Error::DuplicateField {
                    id,
                    field: field.to_string(),
                });
            }
        }
        if set.is_empty() {
            return Err(Error::EmptyFields(id));
        }
        Ok(Self {
            id,
            cites,
            fields: set,
        })
    }

    #[must_use]
    pub fn id(&self) -> &str {
        &self.id
    }

    #[must_use]
    pub fn cites(&self) -> u64 {
        self.cites
    }

    pub fn fields(&self) -> impl Iterator<Item = &FieldId> {
        self.fields.iter()
    }

    #[must_use]
    pub fn field_count(&self) -> usize {
        self.fields.len()
    }

    #[must_use]
    pub fn in_field(&self, field: &FieldId) -> bool {
        self.fields.contains(field)
    }
}

/// A non-empty collection of records with unique ids. Baselines are always
/// derived from a whole corpus, never from a subset of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    records: Vec<CorpusRecord>,
}

impl Corpus {
    pub fn new(records: Vec<CorpusRecord>) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let mut seen = BTreeSet::new();
        for record in &records {
            if !seen.insert(record.id.as_str()) {
                return Err(Error::DuplicateId(record.id.clone()));
            }
        }
        Ok(Self { records })
    }

    #[must_use]
    pub fn records(&self) -> &[CorpusRecord] {
        &self.records
    }

    /// Every field any record belongs to, in sorted order.
    #[must_use]
    pub fn fields(&self) -> BTreeSet<FieldId> {
        self.records
            .iter()
            .flat_map(|r| r.fields.iter().cloned())
            .collect()
    }

    #[must_use]
    pub fn record(&self, id: &str) -> Option<&CorpusRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

/// Per-field mean citations per publication, fractionally counted. Holds
/// exactly the fields that appear in the corpus it was derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaselineTable {
    entries: BTreeMap<FieldId, Rational>,
}

impl BaselineTable {
    #[must_use]
    pub fn get(&self, field: &FieldId) -> Option<&Rational> {
        self.entries.get(field)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FieldId, &Rational)> {
        self.entries.iter()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// How a multi-field record's expected value combines its field baselines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AveragingMode {
    Arithmetic,
    /// The default: the harmonic average keeps the whole-corpus mean
    /// normalized citation score at exactly one.
    #[default]
    Harmonic,
}

impl fmt::Display for AveragingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Arithmetic => f.write_str("arithmetic"),
            Self::Harmonic => f.write_str("harmonic"),
        }
    }
}

/// The weight a record contributes to a field: `1/k` over its `k` fields
/// for members, 0 for non-members. Weights over a record's fields sum to 1.
#[must_use]
pub fn membership_weight(record: &CorpusRecord, field: &FieldId) -> Rational {
    if record.in_field(field) {
        Rational::new(1, record.field_count() as u64).expect("field count is positive")
    } else {
        Rational::zero()
    }
}

/// One field's baseline: weighted citations over weighted publication
/// counts, `(Σ w·c) / (Σ w)`. Fails if no record belongs to the field.
pub fn field_baseline(corpus: &Corpus, field: &FieldId) -> Result<Rational> {
    derive_baselines(corpus)
        .get(field)
        .cloned()
        .ok_or_else(|| Error::UnknownField(field.to_string()))
}

/// Baselines for every field in the corpus, in one pass over the records.
#[must_use]
pub fn derive_baselines(corpus: &Corpus) -> BaselineTable {
    let mut sums: BTreeMap<FieldId, (Rational, Rational)> = BTreeMap::new();
    for record in corpus.records() {
        let weight = Rational::new(1, record.field_count() as u64)
            .expect("field count is positive");
        let weighted_cites = &weight * &Rational::from_integer(record.cites());
        for field in record.fields() {
            let (cites, count) = sums
                .entry(field.clone())
                .or_insert_with(|| (Rational::zero(), Rational::zero()));
            *cites += &weighted_cites;
            *count += &weight;
        }
    }
    let entries = sums
        .into_iter()
        .map(|(field, (cites, count))| (field, &cites / &count))
        .collect();
    BaselineTable { entries }
}

fn record_baselines<'t>(
    record: &CorpusRecord,
    baselines: &'t BaselineTable,
) -> Result<Vec<&'t Rational>> {
    record
        .fields()
        .map(|field| {
            baselines
                .get(field)
                .ok_or_else(|| Error::UnknownField(field.to_string()))
        })
        .collect()
}

/// Arithmetic expected value: the plain mean of the record's field
/// baselines.
pub fn expected_arithmetic(record: &CorpusRecord, baselines: &BaselineTable) -> Result<Rational> {
    let values = record_baselines(record, baselines)?;
    let total: Rational = values.into_iter().sum();
    Ok(&total / &Rational::from_integer(record.field_count() as u64))
}

/// Harmonic expected value: `k / Σ (1/baseline)` over the record's `k`
/// fields. If any member baseline is zero the expected value is zero (the
/// harmonic mean's limit); such a record is necessarily uncited, since a
/// zero baseline means nothing in that field received any citations.
pub fn expected_harmonic(record: &CorpusRecord, baselines: &BaselineTable) -> Result<Rational> {
    let values = record_baselines(record, baselines)?;
    if values.iter().any(|b| b.is_zero()) {
        return Ok(Rational::zero());
    }
    let reciprocal_sum: Rational = values
        .into_iter()
        .map(|b| b.recip().expect("zero baselines handled above"))
        .sum();
    Ok(&Rational::from_integer(record.field_count() as u64) / &reciprocal_sum)
}

/// Runs the full normalization pipeline: derives baselines from the corpus,
/// computes each record's expected value under `mode`, and pairs it with
/// the record's citation count. Output order matches corpus order, so
/// callers can zip the result back onto `corpus.records()`.
pub fn attach_expected(corpus: &Corpus, mode: AveragingMode) -> Result<PublicationSet> {
    let baselines = derive_baselines(corpus);
    let publications = corpus
        .records()
        .iter()
        .map(|record| {
            let expected = match mode {
                AveragingMode::Arithmetic => expected_arithmetic(record, &baselines)?,
                AveragingMode::Harmonic => expected_harmonic(record, &baselines)?,
            };
            Publication::new(record.cites(), expected)
        })
        .collect::<Result<Vec<_>>>()?;
    PublicationSet::new(publications)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indicators::{cpp_fcsm, mncs};
    use proptest::prelude::*;

    fn fid(label: &str) -> FieldId {
        FieldId::new(label).unwrap()
    }

    fn rec(id: &str, cites: u64, fields: &[&str]) -> CorpusRecord {
        CorpusRecord::new(id, cites, fields.iter().copied().map(fid)).unwrap()
    }

    /// Five publications across three fields; publication 5 belongs to two
    /// fields at once. The worked example used throughout these tests.
    fn overlap_corpus() -> Corpus {
        Corpus::new(vec![
            rec("p1", 2, &["X"]),
            rec("p2", 3, &["X"]),
            rec("p3", 8, &["Y"]),
            rec("p4", 6, &["Z"]),
            rec("p5", 5, &["X", "Y"]),
        ])
        .unwrap()
    }

    fn r(num: u64, den: u64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    #[test]
    fn record_validation() {
        assert!(matches!(
            CorpusRecord::new("", 1, [fid("X")]),
            Err(Error::EmptyId)
        ));
        assert!(matches!(
            CorpusRecord::new("p1", 1, []),
            Err(Error::EmptyFields(_))
        ));
        assert!(matches!(
            CorpusRecord::new("p1", 1, [fid("X"), fid("X")]),
            Err(Error::DuplicateField { .. })
        ));
        assert!(FieldId::new("").is_err());
    }

    #[test]
    fn corpus_validation() {
        assert!(matches!(Corpus::new(vec![]), Err(Error::EmptyCorpus)));
        let dup = Corpus::new(vec![rec("p1", 1, &["X"]), rec("p1", 2, &["Y"])]);
        assert!(matches!(dup, Err(Error::DuplicateId(_))));
    }

    #[test]
    fn weights_follow_fractional_counting() {
        let corpus = overlap_corpus();
        let p5 = corpus.record("p5").unwrap();
        let p1 = corpus.record("p1").unwrap();
        let p4 = corpus.record("p4").unwrap();
        assert_eq!(membership_weight(p5, &fid("X")), r(1, 2));
        assert_eq!(membership_weight(p1, &fid("X")), Rational::one());
        assert_eq!(membership_weight(p4, &fid("X")), Rational::zero());
    }

    #[test]
    fn weights_per_record_sum_to_one() {
        for k in 1..6 {
            let fields: Vec<String> = (0..k).map(|i| format!("F{i}")).collect();
            let record = rec("p", 3, &fields.iter().map(String::as_str).collect::<Vec<_>>());
            let total: Rational = fields
                .iter()
                .map(|f| membership_weight(&record, &fid(f)))
                .sum();
            assert_eq!(total, Rational::one(), "k = {k}");
        }
    }

    #[test]
    fn baselines_for_the_overlap_corpus() {
        let corpus = overlap_corpus();
        // Field X: (2 + 3 + 5/2) / (1 + 1 + 1/2) = 3.
        assert_eq!(field_baseline(&corpus, &fid("X")).unwrap(), r(3, 1));
        // Field Y: (8 + 5/2) / (1 + 1/2) = 7.
        assert_eq!(field_baseline(&corpus, &fid("Y")).unwrap(), r(7, 1));
        assert_eq!(field_baseline(&corpus, &fid("Z")).unwrap(), r(6, 1));
        assert!(matches!(
            field_baseline(&corpus, &fid("W")),
            Err(Error::UnknownField(_))
        ));

        let table = derive_baselines(&corpus);
        assert_eq!(table.len(), 3);
    }

    #[test]
    fn expected_values_for_the_two_field_record() {
        let corpus = overlap_corpus();
        let table = derive_baselines(&corpus);
        let p5 = corpus.record("p5").unwrap();
        // Arithmetic: (3 + 7) / 2 = 5. Harmonic: 2 / (1/3 + 1/7) = 21/5.
        assert_eq!(expected_arithmetic(p5, &table).unwrap(), r(5, 1));
        assert_eq!(expected_harmonic(p5, &table).unwrap(), r(21, 5));

        let p1 = corpus.record("p1").unwrap();
        assert_eq!(expected_arithmetic(p1, &table).unwrap(), r(3, 1));
        assert_eq!(expected_harmonic(p1, &table).unwrap(), r(3, 1));

        let yz = rec("q", 0, &["Y", "Z"]);
        assert_eq!(expected_arithmetic(&yz, &table).unwrap(), r(13, 2));
    }

    #[test]
    fn attach_expected_matches_the_worked_pipeline() {
        let corpus = overlap_corpus();

        let harmonic = attach_expected(&corpus, AveragingMode::Harmonic).unwrap();
        let expected: Vec<Rational> =
            harmonic.iter().map(|p| p.expected().clone()).collect();
        assert_eq!(expected, vec![r(3, 1), r(3, 1), r(7, 1), r(6, 1), r(21, 5)]);

        let arithmetic = attach_expected(&corpus, AveragingMode::Arithmetic).unwrap();
        let expected: Vec<Rational> =
            arithmetic.iter().map(|p| p.expected().clone()).collect();
        assert_eq!(expected, vec![r(3, 1), r(3, 1), r(7, 1), r(6, 1), r(5, 1)]);

        let cites: Vec<u64> = arithmetic.iter().map(|p| p.cites()).collect();
        assert_eq!(cites, vec![2, 3, 8, 6, 5]);
    }

    #[test]
    fn modes_agree_when_no_record_overlaps_fields() {
        let corpus = Corpus::new(vec![
            rec("a", 4, &["X"]),
            rec("b", 1, &["Y"]),
            rec("c", 9, &["Y"]),
        ])
        .unwrap();
        assert_eq!(
            attach_expected(&corpus, AveragingMode::Arithmetic).unwrap(),
            attach_expected(&corpus, AveragingMode::Harmonic).unwrap()
        );
    }

    #[test]
    fn zero_baseline_only_when_field_is_entirely_uncited() {
        let corpus = Corpus::new(vec![
            rec("a", 0, &["A"]),
            rec("b", 0, &["A", "B"]),
            rec("c", 7, &["B"]),
        ])
        .unwrap();
        assert_eq!(field_baseline(&corpus, &fid("A")).unwrap(), Rational::zero());
        assert!(field_baseline(&corpus, &fid("B")).unwrap() > Rational::zero());

        // The zero-baseline records are uncited, so attaching expected
        // values never produces an invalid (c > 0, e = 0) pair.
        let set = attach_expected(&corpus, AveragingMode::Harmonic).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(*set.iter().next().unwrap().expected(), Rational::zero());
    }

    #[test]
    fn zero_baseline_records_score_as_average() {
        // When one of a record's fields has a zero baseline, its harmonic
        // expected value collapses to 0 and the record scores 0/0 = 1
        // instead of carrying a partial zero share. The whole-corpus mean
        // score can then drift away from 1; the identity is guaranteed only
        // when every field has at least one cited member. The arithmetic
        // ratio-of-averages identity is unconditional.
        let corpus = Corpus::new(vec![
            rec("r1", 4, &["B"]),
            rec("r2", 0, &["A", "B"]),
        ])
        .unwrap();
        let harmonic = attach_expected(&corpus, AveragingMode::Harmonic).unwrap();
        assert_eq!(mncs(&harmonic), r(5, 4));
        let arithmetic = attach_expected(&corpus, AveragingMode::Arithmetic).unwrap();
        assert_eq!(cpp_fcsm(&arithmetic), Rational::one());
    }

    #[test]
    fn world_averages_on_the_overlap_corpus() {
        let corpus = overlap_corpus();
        let harmonic = attach_expected(&corpus, AveragingMode::Harmonic).unwrap();
        assert_eq!(mncs(&harmonic), Rational::one());
        let arithmetic = attach_expected(&corpus, AveragingMode::Arithmetic).unwrap();
        assert_eq!(cpp_fcsm(&arithmetic), Rational::one());
        assert_eq!(mncs(&arithmetic), r(101, 105));
    }

    fn arb_corpus() -> impl Strategy<Value = Corpus> {
        let record = (0u64..20, proptest::collection::btree_set(0usize..4, 1..4));
        proptest::collection::vec(record, 1..12).prop_map(|rows| {
            let records = rows
                .into_iter()
                .enumerate()
                .map(|(i, (cites, fields))| {
                    CorpusRecord::new(
                        format!("p{i}"),
                        cites,
                        fields.into_iter().map(|f| fid(&format!("F{f}"))),
                    )
                    .unwrap()
                })
                .collect();
            Corpus::new(records).unwrap()
        })
    }

    proptest! {
        // The harmonic mean of positive baselines never exceeds the
        // arithmetic mean, with equality exactly when all baselines agree.
        #[test]
        fn harmonic_at_most_arithmetic(corpus in arb_corpus()) {
            let table = derive_baselines(&corpus);
            for record in corpus.records() {
                let values: Vec<&Rational> =
                    record.fields().map(|f| table.get(f).unwrap()).collect();
                if values.iter().any(|b| b.is_zero()) {
                    continue;
                }
                let h = expected_harmonic(record, &table).unwrap();
                let a = expected_arithmetic(record, &table).unwrap();
                prop_assert!(h <= a);
                let all_equal = values.windows(2).all(|w| w[0] == w[1]);
                prop_assert_eq!(h == a, all_equal);
            }
        }

        // Harmonic world-average-one whenever every baseline is positive.
        #[test]
        fn world_average_one_with_positive_baselines(corpus in arb_corpus()) {
            let table = derive_baselines(&corpus);
            prop_assume!(table.iter().all(|(_, b)| !b.is_zero()));
            let harmonic = attach_expected(&corpus, AveragingMode::Harmonic).unwrap();
            prop_assert_eq!(mncs(&harmonic), Rational::one());
        }

        // Arithmetic ratio-of-averages world identity, zero baselines or not.
        #[test]
        fn arithmetic_world_ratio_is_one(corpus in arb_corpus()) {
            let arithmetic = attach_expected(&corpus, AveragingMode::Arithmetic).unwrap();
            prop_assert_eq!(cpp_fcsm(&arithmetic), Rational::one());
        }
    }
}
