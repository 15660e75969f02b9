//! Round-trips the CSV file formats: writes a corpus, a group roster,
//! and a pre-scored set to disk, loads them back, and renders indicator
//! reports as text, CSV, and JSON.

use std::fs;

use citnorm::{
    load_corpus, load_groups, load_scored_set, report_corpus, report_sets, AveragingMode,
    IndicatorKind,
};

const CORPUS: &str = "\
id,citations,fields
p1,2,X
p2,3,X
p3,8,Y
p4,6,Z
p5,5,X;Y
";

const GROUPS: &str = "\
group,members
first-lab,p1;p2
second-lab,p3;p4;p5
";

// citations,expected,count rows; `count` expands one line into a whole
// stratum of identically cited publications.
const SCORED: &str = "\
citations,expected,count
10,10,100
40,20,100
";

fn main() -> citnorm::Result<()> {
    let dir = tempfile::tempdir()?;
    let corpus_path = dir.path().join("corpus.csv");
    let groups_path = dir.path().join("groups.csv");
    let scored_path = dir.path().join("group_a.csv");
    fs::write(&corpus_path, CORPUS)?;
    fs::write(&groups_path, GROUPS)?;
    fs::write(&scored_path, SCORED)?;

    let corpus = load_corpus(&corpus_path)?;
    let groups = load_groups(&groups_path)?;
    let kinds = [IndicatorKind::CppFcsm, IndicatorKind::Mncs];

    let report = report_corpus(&corpus, &groups, AveragingMode::Harmonic, &kinds)?;
    println!("per-group report (text)");
    print!("{}", report.to_text());

    // With no groups the whole corpus is scored as one "world" group.
    let world = report_corpus(&corpus, &[], AveragingMode::Harmonic, &kinds)?;
    println!();
    println!("world report (csv)");
    print!("{}", world.to_csv());

    // Pre-scored sets skip baseline derivation: expected values come
    // straight from the file.
    let scored = load_scored_set(&scored_path)?;
    let report = report_sets(&[("group-a".to_owned(), scored)], &kinds)?;
    println!();
    println!("pre-scored report (json)");
    print!("{}", report.to_json());
    Ok(())
}
