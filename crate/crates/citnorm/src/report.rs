//! Indicator reports: scoring named groups of publications and rendering
//! the results as text, CSV, or JSON.
//!
//! Exact values are the authoritative output; the rendered decimal column
//! is presentation only and never feeds back into any computation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::baselines::{
    derive_baselines, expected_arithmetic, expected_harmonic, AveragingMode, Corpus,
};
use crate::error::{Error, Result};
use crate::indicators::IndicatorKind;
use crate::publication::{Publication, PublicationSet};
use crate::rational::Rational;

/// Decimal places in the rendered column, matching the conventional
/// two-digit presentation of normalized indicators.
const RENDER_PLACES: u32 = 2;

/// A named selection of corpus records. Groups may overlap freely; each
/// one is scored independently against baselines derived from the whole
/// corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDefinition {
    group_id: String,
    member_ids: Vec<String>,
}

impl GroupDefinition {
    pub fn new(
        group_id: impl Into<String>,
        member_ids: impl IntoIterator<Item = impl Into<String>>,
    ) -> Result<Self> {
        let group_id = group_id.into();
        if group_id.is_empty() {
            return Err(Error::EmptyId);
        }
        let member_ids: Vec<String> = member_ids.into_iter().map(Into::into).collect();
        if member_ids.is_empty() {
            return Err(Error::EmptyGroup(group_id));
        }
        for (i, id) in member_ids.iter().enumerate() {
            if id.is_empty() {
                return Err(Error::EmptyId);
            }
            if member_ids[..i].contains(id) {
                return Err(Error::DuplicateMember {
                    group: group_id,
                    id: id.clone(),
                });
            }
        }
        Ok(Self {
            group_id,
            member_ids,
        })
    }

    #[must_use]
    pub fn group_id(&self) -> &str {
        &self.group_id
    }

    pub fn member_ids(&self) -> impl Iterator<Item = &str> {
        self.member_ids.iter().map(String::as_str)
    }
}

/// One scored cell: a group, an indicator, the group's size, and the
/// exact value with its two-decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    group: String,
    indicator: IndicatorKind,
    n: usize,
    exact: Rational,
    rendered: String,
}

impl ReportRow {
    fn new(group: &str, indicator: IndicatorKind, set: &PublicationSet) -> Self {
        let exact = indicator.evaluate(set);
        let rendered = exact.to_decimal(RENDER_PLACES);
        Self {
            group: group.to_owned(),
            indicator,
            n: set.len(),
            exact,
            rendered,
        }
    }

    #[must_use]
    pub fn group(&self) -> &str {
        &self.group
    }

    #[must_use]
    pub fn indicator(&self) -> IndicatorKind {
        self.indicator
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn exact(&self) -> &Rational {
        &self.exact
    }

    #[must_use]
    pub fn rendered(&self) -> &str {
        &self.rendered
    }
}

/// Scored rows in a stable order: groups as given, indicators as given
/// within each group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorReport {
    rows: Vec<ReportRow>,
}

impl IndicatorReport {
    #[must_use]
    pub fn rows(&self) -> &[ReportRow] {
        &self.rows
    }

    /// Looks up one exact value by group and indicator.
    #[must_use]
    pub fn value(&self, group: &str, indicator: IndicatorKind) -> Option<&Rational> {
        self.rows
            .iter()
            .find(|row| row.group == group && row.indicator == indicator)
            .map(|row| &row.exact)
    }

    /// Aligned human-readable table.
    #[must_use]
    pub fn to_text(&self) -> String {
        let header = ["group", "indicator", "n", "value", "exact"];
        let rows: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|row| {
                [
                    row.group.clone(),
                    row.indicator.label().to_owned(),
                    row.n.to_string(),
                    row.rendered.clone(),
                    row.exact.to_string(),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|cell| cell.len()).collect();
        for row in &rows {
            for (width, cell) in widths.iter_mut().zip(row) {
                *width = (*width).max(cell.len());
            }
        }
        let mut out = String::new();
        let render_line = |out: &mut String, cells: &[String]| {
            let line = cells
                .iter()
                .zip(&widths)
                .map(|(cell, &width)| format!("{cell:<width$}"))
                .collect::<Vec<_>>()
                .join("  ");
            out.push_str(line.trim_end());
            out.push('\n');
        };
        render_line(&mut out, &header.map(str::to_owned));
        for row in &rows {
            render_line(&mut out, row);
        }
        out
    }

    /// Machine-readable CSV with header `group,indicator,n,exact,rendered`.
    #[must_use]
    pub fn to_csv(&self) -> String {
        let mut out = String::from("group,indicator,n,exact,rendered\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                csv_cell(&row.group),
                row.indicator.token(),
                row.n,
                row.exact,
                row.rendered
            );
        }
        out
    }

    /// JSON array of row objects mirroring the CSV fields; exact values
    /// are strings to stay exact.
    #[must_use]
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                serde_json::json!({
                    "group": row.group,
                    "indicator": row.indicator.token(),
                    "n": row.n,
                    "exact": row.exact.to_string(),
                    "rendered": row.rendered,
                })
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&rows).expect("string/number tree");
        out.push('\n');
        out
    }
}

/// Quotes a CSV cell only when it would otherwise break the row shape.
fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_owned()
    }
}

fn deduplicate(kinds: &[IndicatorKind]) -> Result<Vec<IndicatorKind>> {
    let mut seen = Vec::new();
    for &kind in kinds {
        if !seen.contains(&kind) {
            seen.push(kind);
        }
    }
    if seen.is_empty() {
        return Err(Error::NoIndicators);
    }
    Ok(seen)
}

/// Scores already-normalized publication sets, one report group per named
/// set, in the given order.
pub fn report_sets(
    sets: &[(String, PublicationSet)],
    kinds: &[IndicatorKind],
) -> Result<IndicatorReport> {
    let kinds = deduplicate(kinds)?;
    let rows = sets
        .iter()
        .flat_map(|(name, set)| kinds.iter().map(|&kind| ReportRow::new(name, kind, set)))
        .collect();
    Ok(IndicatorReport { rows })
}

/// Scores groups of corpus records. Baselines are derived once from the
/// whole corpus; each record's expected value is attached under `mode`,
/// and each group is then scored on its member sub-multiset. With no
/// groups given, the whole corpus is scored as one group named `world`.
pub fn report_corpus(
    corpus: &Corpus,
    groups: &[GroupDefinition],
    mode: AveragingMode,
    kinds: &[IndicatorKind],
) -> Result<IndicatorReport> {
    let kinds = deduplicate(kinds)?;
    let baselines = derive_baselines(corpus);
    let mut scored: BTreeMap<&str, Publication> = BTreeMap::new();
    for record in corpus.records() {
        let expected = match mode {
            AveragingMode::Arithmetic => expected_arithmetic(record, &baselines)?,
            AveragingMode::Harmonic => expected_harmonic(record, &baselines)?,
        };
        scored.insert(record.id(), Publication::new(record.cites(), expected)?);
    }

    let whole_world;
    let groups = if groups.is_empty() {
        whole_world = [GroupDefinition::new(
            "world",
            corpus.records().iter().map(|record| record.id()),
        )?];
        &whole_world[..]
    } else {
        groups
    };

    let mut rows = Vec::with_capacity(groups.len() * kinds.len());
    for group in groups {
        let members = group
            .member_ids()
            .map(|id| {
                scored.get(id).cloned().ok_or_else(|| Error::UnknownMember {
                    group: group.group_id().to_owned(),
                    id: id.to_owned(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let set = PublicationSet::new(members).expect("groups are non-empty by construction");
        rows.extend(
            kinds
                .iter()
                .map(|&kind| ReportRow::new(group.group_id(), kind, &set)),
        );
    }
    Ok(IndicatorReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::{CorpusRecord, FieldId};
    use crate::io::parse_corpus;

    fn r(num: u64, den: u64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    fn stratum(cites: u64, expected: u64, count: usize) -> Vec<Publication> {
        let publication =
            Publication::new(cites, Rational::from_integer(expected)).unwrap();
        vec![publication; count]
    }

    fn two_group_sets() -> Vec<(String, PublicationSet)> {
        let mut a = stratum(10, 10, 100);
        a.extend(stratum(40, 20, 100));
        let mut b = stratum(22, 10, 100);
        b.extend(stratum(24, 20, 100));
        vec![
            ("A".to_owned(), PublicationSet::new(a).unwrap()),
            ("B".to_owned(), PublicationSet::new(b).unwrap()),
        ]
    }

    fn overlap_corpus() -> Corpus {
        parse_corpus(
            "id,citations,fields\np1,2,X\np2,3,X\np3,8,Y\np4,6,Z\np5,5,X;Y\n",
        )
        .unwrap()
    }

    #[test]
    fn two_group_report_reproduces_the_published_values() {
        let report = report_sets(
            &two_group_sets(),
            &[IndicatorKind::CppFcsm, IndicatorKind::Mncs],
        )
        .unwrap();
        assert_eq!(report.rows().len(), 4);
        assert_eq!(report.value("A", IndicatorKind::CppFcsm), Some(&r(5, 3)));
        assert_eq!(report.value("A", IndicatorKind::Mncs), Some(&r(3, 2)));
        assert_eq!(report.value("B", IndicatorKind::CppFcsm), Some(&r(23, 15)));
        assert_eq!(report.value("B", IndicatorKind::Mncs), Some(&r(17, 10)));

        let renders: Vec<&str> = report.rows().iter().map(ReportRow::rendered).collect();
        assert_eq!(renders, ["1.67", "1.50", "1.53", "1.70"]);
        assert!(report.rows().iter().all(|row| row.n() == 200));
    }

    #[test]
    fn corpus_report_defaults_to_the_world_group() {
        let report = report_corpus(
            &overlap_corpus(),
            &[],
            AveragingMode::Harmonic,
            &[IndicatorKind::Mncs, IndicatorKind::CppFcsm],
        )
        .unwrap();
        assert_eq!(report.value("world", IndicatorKind::Mncs), Some(&Rational::one()));
        assert_eq!(report.value("world", IndicatorKind::CppFcsm), Some(&r(30, 29)));
        assert_eq!(report.rows()[0].n(), 5);

        let arithmetic = report_corpus(
            &overlap_corpus(),
            &[],
            AveragingMode::Arithmetic,
            &[IndicatorKind::Mncs, IndicatorKind::CppFcsm],
        )
        .unwrap();
        assert_eq!(
            arithmetic.value("world", IndicatorKind::Mncs),
            Some(&r(101, 105))
        );
        assert_eq!(
            arithmetic.value("world", IndicatorKind::CppFcsm),
            Some(&Rational::one())
        );
    }

    #[test]
    fn corpus_groups_are_scored_independently_and_may_overlap() {
        let groups = [
            GroupDefinition::new("front", ["p1", "p2"]).unwrap(),
            GroupDefinition::new("back", ["p3", "p4", "p5"]).unwrap(),
            GroupDefinition::new("with-shared", ["p2", "p5"]).unwrap(),
        ];
        let report = report_corpus(
            &overlap_corpus(),
            &groups,
            AveragingMode::Harmonic,
            &[IndicatorKind::Mncs],
        )
        .unwrap();
        assert_eq!(report.value("front", IndicatorKind::Mncs), Some(&r(5, 6)));
        assert_eq!(report.value("back", IndicatorKind::Mncs), Some(&r(10, 9)));
        // p2 scores 1 and p5 scores 25/21 under harmonic expected values.
        assert_eq!(
            report.value("with-shared", IndicatorKind::Mncs),
            Some(&r(23, 21))
        );
        assert_eq!(report.value("world", IndicatorKind::Mncs), None);
    }

    #[test]
    fn unknown_members_and_empty_requests_are_rejected() {
        let groups = [GroupDefinition::new("g", ["p1", "p9"]).unwrap()];
        assert!(matches!(
            report_corpus(
                &overlap_corpus(),
                &groups,
                AveragingMode::Harmonic,
                &[IndicatorKind::Mncs]
            ),
            Err(Error::UnknownMember { group, id }) if group == "g" && id == "p9"
        ));
        assert!(matches!(
            report_corpus(&overlap_corpus(), &[], AveragingMode::Harmonic, &[]),
            Err(Error::NoIndicators)
        ));
        assert!(matches!(
            GroupDefinition::new("g", Vec::<String>::new()),
            Err(Error::EmptyGroup(id)) if id == "g"
        ));
        assert!(matches!(
            GroupDefinition::new("g", ["p1", "p1"]),
            Err(Error::DuplicateMember { .. })
        ));
    }

    #[test]
    fn duplicate_indicators_collapse_to_one_row() {
        let sets = two_group_sets();
        let report = report_sets(
            &sets[..1],
            &[IndicatorKind::Mncs, IndicatorKind::Mncs],
        )
        .unwrap();
        assert_eq!(report.rows().len(), 1);
    }

    #[test]
    fn csv_rendering_matches_schema() {
        let report = report_corpus(
            &overlap_corpus(),
            &[],
            AveragingMode::Harmonic,
            &[IndicatorKind::Mncs, IndicatorKind::CppFcsm],
        )
        .unwrap();
        assert_eq!(
            report.to_csv(),
            "group,indicator,n,exact,rendered\n\
             world,mncs,5,1,1.00\n\
             world,cpp-fcsm,5,30/29,1.03\n"
        );
    }

    #[test]
    fn csv_quotes_awkward_group_names() {
        let set = PublicationSet::new(stratum(3, 1, 1)).unwrap();
        let report = report_sets(
            &[("a,b\"c".to_owned(), set)],
            &[IndicatorKind::Mncs],
        )
        .unwrap();
        assert!(report.to_csv().contains("\"a,b\"\"c\",mncs,1,3,3.00"));
    }

    #[test]
    fn json_rendering_round_trips() {
        let report = report_sets(
            &two_group_sets(),
            &[IndicatorKind::Tncs],
        )
        .unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        let rows = parsed.as_array().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0]["group"], "A");
        assert_eq!(rows[0]["indicator"], "tncs");
        assert_eq!(rows[0]["n"], 200);
        assert_eq!(rows[0]["exact"], "300");
        assert_eq!(rows[0]["rendered"], "300.00");
    }

    #[test]
    fn text_rendering_is_aligned_and_complete() {
        let report = report_sets(
            &two_group_sets(),
            &[IndicatorKind::CppFcsm],
        )
        .unwrap();
        let text = report.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("group"));
        assert!(lines[1].contains("CPP/FCSm"));
        assert!(lines[1].contains("1.67"));
        assert!(lines[1].contains("5/3"));
        assert_eq!(lines[1].find("CPP/FCSm"), lines[2].find("CPP/FCSm"));
    }

    #[test]
    fn rendering_never_changes_exact_values() {
        let corpus = overlap_corpus();
        let kinds = IndicatorKind::ALL;
        let report = report_corpus(&corpus, &[], AveragingMode::Harmonic, &kinds).unwrap();
        let _ = report.to_text();
        let _ = report.to_csv();
        let _ = report.to_json();
        let again = report_corpus(&corpus, &[], AveragingMode::Harmonic, &kinds).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn derived_expected_values_never_invalidate_publications() {
        // A record with citations in an otherwise-uncited field still gets
        // a positive expected value, because its own citations lift the
        // field baseline above zero.
        let corpus = Corpus::new(vec![
            CorpusRecord::new("a", 4, [FieldId::new("Q").unwrap()]).unwrap(),
            CorpusRecord::new(
                "b",
                0,
                [FieldId::new("Q").unwrap(), FieldId::new("R").unwrap()],
            )
            .unwrap(),
        ])
        .unwrap();
        for mode in [AveragingMode::Harmonic, AveragingMode::Arithmetic] {
            let report = report_corpus(&corpus, &[], mode, &IndicatorKind::ALL).unwrap();
            assert_eq!(report.rows().len(), 4);
        }
    }
}
