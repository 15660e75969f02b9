//! File ingestion: corpora, directly scored publication sets, and group
//! definitions.
//!
//! All three formats are line-oriented UTF-8 with comma-separated columns
//! and a mandatory header line. Blank lines and lines starting with `#`
//! are skipped, so fixture files can document themselves. Multi-valued
//! cells (field memberships, group members) separate entries with
//! semicolons. Cells are trimmed; there is no quoting mechanism, so ids
//! and field labels cannot contain commas or semicolons.

use std::fs;
use std::path::Path;

use crate::baselines::{Corpus, CorpusRecord, FieldId};
use crate::error::{Error, Result};
use crate::publication::{Publication, PublicationSet};
use crate::rational::Rational;
use crate::report::GroupDefinition;

/// Rows one file can expand to. Guards against a stray `count` cell
/// ballooning memory; real corpora are far below this.
const MAX_EXPANDED_ROWS: u64 = 1_000_000;

fn data_rows(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn expect_header<'a>(
    rows: &mut impl Iterator<Item = (usize, &'a str)>,
    want: &str,
) -> Result<()> {
    match rows.next() {
        Some((_, line)) if line.eq_ignore_ascii_case(want) => Ok(()),
        Some((line, got)) => Err(Error::Parse {
            line,
            message: format!("expected header {want:?}, found {got:?}"),
        }),
        None => Err(Error::Parse {
            line: 1,
            message: format!("missing header {want:?}"),
        }),
    }
}

fn split_columns(row: &str, want: std::ops::RangeInclusive<usize>, line: usize) -> Result<Vec<&str>> {
    let cells: Vec<&str> = row.split(',').map(str::trim).collect();
    if want.contains(&cells.len()) {
        Ok(cells)
    } else {
        Err(Error::Parse {
            line,
            message: format!(
                "expected {} to {} columns, found {}",
                want.start(),
                want.end(),
                cells.len()
            ),
        })
    }
}

/// Distinguishes a negative count (its own error, per the data contract)
/// from garbage that fails to parse at all.
fn parse_cites(cell: &str, line: usize) -> Result<u64> {
    if let Some(rest) = cell.strip_prefix('-') {
        if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::NegativeCitations { line });
        }
    }
    cell.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid citation count {cell:?}"),
    })
}

/// Parses corpus CSV text (header `id,citations,fields`; `fields` is a
/// semicolon-separated list of field labels).
pub fn parse_corpus(text: &str) -> Result<Corpus> {
    let mut rows = data_rows(text);
    expect_header(&mut rows, "id,citations,fields")?;
    let mut records = Vec::new();
    for (line, row) in rows {
        let cells = split_columns(row, 3..=3, line)?;
        let cites = parse_cites(cells[1], line)?;
        let fields = cells[2]
            .split(';')
            .map(str::trim)
            .filter(|label| !label.is_empty())
            .map(FieldId::new)
            .collect::<Result<Vec<_>>>()?;
        records.push(CorpusRecord::new(cells[0], cites, fields)?);
    }
    Corpus::new(records)
}

/// Loads a corpus CSV file. See [`parse_corpus`] for the format.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus> {
    parse_corpus(&fs::read_to_string(path)?)
}

/// Renders a corpus back to the same CSV schema [`parse_corpus`] accepts.
/// Parsing the output reproduces the corpus exactly.
#[must_use]
pub fn corpus_to_csv(corpus: &Corpus) -> String {
    let mut out = String::from("id,citations,fields\n");
    for record in corpus.records() {
        let fields: Vec<&str> = record.fields().map(FieldId::as_str).collect();
        out.push_str(&format!(
            "{},{},{}\n",
            record.id(),
            record.cites(),
            fields.join(";")
        ));
    }
    out
}

/// Parses scored-set CSV text (header `citations,expected,count`). Each
/// row is a publication with its expected citation rate already known;
/// `expected` accepts integer, decimal, or `num/den` literals, parsed
/// exactly. The `count` cell may be omitted and defaults to 1, so
/// aggregate rows like "100 publications, 10 citations each" stay
/// readable.
pub fn parse_scored_set(text: &str) -> Result<PublicationSet> {
    let mut rows = data_rows(text);
    expect_header(&mut rows, "citations,expected,count")?;
    let mut publications = Vec::new();
    let mut total: u64 = 0;
    for (line, row) in rows {
        let cells = split_columns(row, 2..=3, line)?;
        let cites = parse_cites(cells[0], line)?;
        let expected: Rational = cells[1].parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid expected value {:?}", cells[1]),
        })?;
        let count: u64 = match cells.get(2) {
            None => 1,
            Some(cell) => cell.parse().map_err(|_| Error::Parse {
                line,
                message: format!("invalid count {cell:?}"),
            })?,
        };
        if count == 0 {
            return Err(Error::Parse {
                line,
                message: "count must be positive".to_owned(),
            });
        }
        total = total.saturating_add(count);
        if total > MAX_EXPANDED_ROWS {
            return Err(Error::Parse {
                line,
                message: format!("file expands to more than {MAX_EXPANDED_ROWS} publications"),
            });
        }
        let publication = Publication::new(cites, expected)?;
        publications.extend(std::iter::repeat_n(publication, count as usize));
    }
    PublicationSet::new(publications)
}

/// Loads a scored-set CSV file. See [`parse_scored_set`] for the format.
pub fn load_scored_set(path: impl AsRef<Path>) -> Result<PublicationSet> {
    parse_scored_set(&fs::read_to_string(path)?)
}

/// Parses group-definition CSV text (header `group,members`; `members` is
/// a semicolon-separated list of corpus record ids). Each row defines one
/// complete group; repeating a group id is an error rather than a merge.
pub fn parse_groups(text: &str) -> Result<Vec<GroupDefinition>> {
    let mut rows = data_rows(text);
    expect_header(&mut rows, "group,members")?;
    let mut groups: Vec<GroupDefinition> = Vec::new();
    for (line, row) in rows {
        let cells = split_columns(row, 2..=2, line)?;
        let members: Vec<&str> = cells[1]
            .split(';')
            .map(str::trim)
            .filter(|id| !id.is_empty())
            .collect();
        let group = GroupDefinition::new(cells[0], members)?;
        if groups.iter().any(|g| g.group_id() == group.group_id()) {
            return Err(Error::DuplicateGroup(group.group_id().to_owned()));
        }
        groups.push(group);
    }
    Ok(groups)
}

/// Loads a group-definition CSV file. See [`parse_groups`] for the format.
pub fn load_groups(path: impl AsRef<Path>) -> Result<Vec<GroupDefinition>> {
    parse_groups(&fs::read_to_string(path)?)
}
