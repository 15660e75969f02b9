//! Demonstrates that the ratio of averages can reverse a ranking when
//! one subfield's world average is rescaled, while the average of
//! ratios stays put. Counting a 2-year citation window instead of a
//! 4-year one is enough to trigger this in practice.

use citnorm::{cpp_fcsm, mncs, Publication, PublicationSet, Rational};

fn stratum(count: usize, cites: u64, expected: u64) -> Vec<Publication> {
    let expected = Rational::from_integer(expected);
    (0..count)
        .map(|_| Publication::new(cites, expected.clone()).unwrap())
        .collect()
}

fn group(low: (u64, u64), high: (u64, u64)) -> citnorm::Result<PublicationSet> {
    let mut publications = stratum(100, low.0, low.1);
    publications.extend(stratum(100, high.0, high.1));
    PublicationSet::new(publications)
}

fn rank(a: &Rational, b: &Rational) -> &'static str {
    match a.cmp(b) {
        std::cmp::Ordering::Greater => "A ahead of B",
        std::cmp::Ordering::Less => "B ahead of A",
        std::cmp::Ordering::Equal => "A tied with B",
    }
}

fn main() -> citnorm::Result<()> {
    // Original window: subfield averages are 10 and 20.
    let a = group((10, 10), (40, 20))?;
    let b = group((22, 10), (24, 20))?;

    // Shorter window: the second subfield's citations and its world
    // average both shrink by a factor of four. Every score is unchanged.
    let a_short = group((10, 10), (10, 5))?;
    let b_short = group((22, 10), (6, 5))?;

    println!("original window");
    println!("  cpp/fcsm: A = {}, B = {}  ({})", cpp_fcsm(&a), cpp_fcsm(&b), rank(&cpp_fcsm(&a), &cpp_fcsm(&b)));
    println!("  mncs:     A = {}, B = {}  ({})", mncs(&a), mncs(&b), rank(&mncs(&a), &mncs(&b)));

    println!("shortened window");
    println!("  cpp/fcsm: A = {}, B = {}  ({})", cpp_fcsm(&a_short), cpp_fcsm(&b_short), rank(&cpp_fcsm(&a_short), &cpp_fcsm(&b_short)));
    println!("  mncs:     A = {}, B = {}  ({})", mncs(&a_short), mncs(&b_short), rank(&mncs(&a_short), &mncs(&b_short)));

    assert!(cpp_fcsm(&a) > cpp_fcsm(&b));
    assert!(cpp_fcsm(&a_short) < cpp_fcsm(&b_short));
    assert_eq!(mncs(&a), mncs(&a_short));
    assert_eq!(mncs(&b), mncs(&b_short));
    println!();
    println!("the ratio of averages flipped the ranking; the average of ratios did not move");
    Ok(())
}
