//! Computes the four indicators for two research groups working in the
//! same pair of subfields and shows where the families disagree.

use citnorm::{brute_force, cpp_fcsm, mncs, tncs, Publication, PublicationSet, Rational};

/// A stratum of `count` publications, each cited `cites` times, in a
/// subfield whose world average is `expected` citations per publication.
fn stratum(count: usize, cites: u64, expected: u64) -> Vec<Publication> {
    let expected = Rational::from_integer(expected);
    (0..count)
        .map(|_| Publication::new(cites, expected.clone()).unwrap())
        .collect()
}

fn main() -> citnorm::Result<()> {
    // Both groups publish 100 papers in a low-expectation subfield
    // (10 cites per paper worldwide) and 100 in a high-expectation one
    // (20 cites per paper worldwide). Group A shines in the high
    // subfield, group B is solid everywhere.
    let mut a = stratum(100, 10, 10);
    a.extend(stratum(100, 40, 20));
    let a = PublicationSet::new(a)?;

    let mut b = stratum(100, 22, 10);
    b.extend(stratum(100, 24, 20));
    let b = PublicationSet::new(b)?;

    for (name, set) in [("group A", &a), ("group B", &b)] {
        println!("{name}: {} publications", set.len());
        println!("  cpp/fcsm    = {} ({})", cpp_fcsm(set), cpp_fcsm(set).to_decimal(2));
        println!("  mncs        = {} ({})", mncs(set), mncs(set).to_decimal(2));
        println!("  tncs        = {}", tncs(set));
        println!("  brute force = {}", brute_force(set));
    }

    // The ratio of averages ranks A first, the average of ratios ranks B
    // first: same data, opposite verdicts.
    println!();
    println!(
        "cpp/fcsm prefers {}",
        if cpp_fcsm(&a) > cpp_fcsm(&b) { "A" } else { "B" }
    );
    println!(
        "mncs     prefers {}",
        if mncs(&a) > mncs(&b) { "A" } else { "B" }
    );
    Ok(())
}
