//! A group sitting at the world average in two subfields weighs two
//! improvement plans. The indicator families recommend opposite
//! investments, which matters if funding follows the score.

use citnorm::{cpp_fcsm, mncs, Publication, PublicationSet, Rational};

fn stratum(count: usize, cites: u64, expected: u64) -> Vec<Publication> {
    let expected = Rational::from_integer(expected);
    (0..count)
        .map(|_| Publication::new(cites, expected.clone()).unwrap())
        .collect()
}

fn scenario(low_cites: u64, high_cites: u64) -> citnorm::Result<PublicationSet> {
    let mut publications = stratum(100, low_cites, 5);
    publications.extend(stratum(100, high_cites, 10));
    PublicationSet::new(publications)
}

fn main() -> citnorm::Result<()> {
    // Today the group sits exactly at the world average in both
    // subfields: 5 cites where 5 are expected, 10 where 10 are.
    let current = scenario(5, 10)?;
    // Plan L: lift the low-expectation subfield from 5 to 9 cites.
    let lift_low = scenario(9, 10)?;
    // Plan H: lift the high-expectation subfield from 10 to 16 cites.
    let lift_high = scenario(5, 16)?;

    println!("scenario     cpp/fcsm       mncs");
    for (name, set) in [
        ("current", &current),
        ("plan L", &lift_low),
        ("plan H", &lift_high),
    ] {
        println!(
            "{name:<12} {:<14} {}",
            format!("{} ({})", cpp_fcsm(set), cpp_fcsm(set).to_decimal(2)),
            format!("{} ({})", mncs(set), mncs(set).to_decimal(2)),
        );
    }

    println!();
    println!(
        "cpp/fcsm says invest in plan {}",
        if cpp_fcsm(&lift_high) > cpp_fcsm(&lift_low) { "H" } else { "L" }
    );
    println!(
        "mncs     says invest in plan {}",
        if mncs(&lift_high) > mncs(&lift_low) { "H" } else { "L" }
    );

    // Plan L's gain is 4/5 of the low expectation, plan H's is 6/10 of
    // the high one; mncs rewards the relative gain, cpp/fcsm the
    // absolute citation count.
    assert!(cpp_fcsm(&lift_high) > cpp_fcsm(&lift_low));
    assert!(mncs(&lift_low) > mncs(&lift_high));
    Ok(())
}
